#include "cli.hpp"

#include "rgl/json_io.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <sstream>

namespace rgl::cli {

namespace {

struct Usage : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : text) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else if (ch != ' ') {
            cur.push_back(ch);
        }
    }
    if (!cur.empty() || !out.empty()) out.push_back(cur);
    return out;
}

Rational parse_exact(const std::string& tok) {
    if (tok.find('.') != std::string::npos) throw Usage("rationals must be written as integers or p/q: " + tok);
    try {
        return parse_rational(tok);
    } catch (const std::invalid_argument& e) {
        throw Usage(e.what());
    }
}

std::vector<Rational> parse_point(const std::string& text) {
    std::vector<Rational> x;
    for (const auto& tok : split(text, ',')) x.push_back(parse_exact(tok));
    if (x.empty()) throw Usage("empty point");
    return x;
}

std::vector<int> parse_ints(const std::string& text) {
    std::vector<int> v;
    for (const auto& tok : split(text, ',')) {
        try {
            std::size_t used = 0;
            v.push_back(std::stoi(tok, &used));
            if (used != tok.size()) throw Usage("not an integer: " + tok);
        } catch (const std::logic_error&) {
            throw Usage("not an integer: " + tok);
        }
    }
    return v;
}

Kind kind_of(const std::string& text) {
    try {
        return parse_kind(text);
    } catch (const std::invalid_argument& e) {
        throw Usage(e.what());
    }
}

ArrangementSpec spec_of(const std::string& kind, int n, const std::string& offsets) {
    try {
        return make_spec(kind_of(kind), n, parse_offsets(offsets));
    } catch (const Usage&) {
        throw;
    } catch (const std::invalid_argument& e) {
        throw Usage(e.what());
    }
}

std::string csv_field(const std::string& s) {
    return s.find(',') == std::string::npos ? s : "\"" + s + "\"";
}

void print_census(std::ostream& out, const std::string& format, const LevelCensus& c, const ArrangementSpec& spec,
                  bool per_chamber) {
    if (format == "json") {
        auto j = to_json(c, spec);
        j["per_chamber"] = per_chamber;
        out << j.dump() << "\n";
    } else if (format == "csv") {
        out << "kind,n,offsets,level,count\n";
        for (int l = 1; l <= spec.n; ++l)
            out << to_string(spec.kind) << "," << spec.n << "," << csv_field(offsets_string(spec.offsets)) << "," << l
                << "," << c.count(l) << "\n";
    } else {
        out << spec.describe() << (per_chamber ? " (fundamental chamber)" : "") << "\n";
        for (int l = 1; l <= spec.n; ++l) out << "  level " << l << ": " << c.count(l) << "\n";
        out << "  total: " << c.total << "\n";
    }
}

std::string point_string(const std::vector<Rational>& x) {
    std::string s = "(";
    for (std::size_t k = 0; k < x.size(); ++k) s += (k ? ", " : "") + to_string(x[k]);
    return s + ")";
}

void check_format(const std::string& format) {
    if (format != "json" && format != "csv" && format != "text") throw Usage("format must be json, csv or text");
}

}  // namespace

std::vector<Rational> parse_offsets(const std::string& text) {
    std::vector<Rational> a;
    for (const auto& tok : split(text, ',')) a.push_back(parse_exact(tok));
    for (std::size_t k = 0; k < a.size(); ++k) {
        if (a[k] <= 0) throw Usage("offsets must be positive");
        if (k > 0 && a[k] >= a[k - 1]) throw Usage("offsets must be strictly decreasing, e.g. 2,1");
    }
    return a;
}

std::string render_path(const LabeledDyckPath& d) {
    const int n = d.path.n;
    std::ostringstream os;
    if (n > 40) {
        os << "path of size " << n << ", " << prime_components(d.path) << " component(s), steps " << d.path.steps().size()
           << "\n";
        return os.str();
    }
    // Lattice points sit at (2(n-y), 4x); cell (i,j) has its centre at (2i+1, 4j+2).
    std::vector<std::string> canvas(2 * n + 1, std::string(4 * n + 1, ' '));
    for (int r = 0; r <= 2 * n; r += 2)
        for (int c = 0; c <= 4 * n; c += 4) canvas[r][c] = '.';
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (j + 1 > n - d.path.alpha[i]) canvas[2 * i + 1][4 * j + 2] = '+';
    int x = 0, y = n;
    canvas[0][0] = 'o';
    for (char step : d.path.steps()) {
        if (step == 'E') {
            for (int c = 1; c <= 3; ++c) canvas[2 * (n - y)][4 * x + c] = '-';
            ++x;
        } else {
            canvas[2 * (n - y) + 1][4 * x] = '|';
            --y;
        }
        canvas[2 * (n - y)][4 * x] = 'o';
    }
    auto label = [](int v) {
        auto s = std::to_string(v);
        return std::string(3 - std::min<std::size_t>(3, s.size()), ' ') + s;
    };
    std::string header = "   ";
    for (int v : d.label) header += ' ' + label(v);
    os << header << "\n";
    for (int r = 0; r <= 2 * n; ++r) {
        auto line = (r % 2 ? label(d.label[r / 2]) : std::string(3, ' ')) + ' ' + canvas[r];
        line.erase(line.find_last_not_of(' ') + 1);
        os << line << "\n";
    }
    os << "steps " << d.path.steps() << ", " << prime_components(d.path) << " component(s)\n";
    return os.str();
}

std::string render_tuple(const DyckTuple& t, const std::vector<Rational>& offsets) {
    std::ostringstream os;
    for (std::size_t k = 0; k < t.paths.size(); ++k) {
        os << "D_" << k + 1;
        if (k < offsets.size()) os << " (a = " << to_string(offsets[k]) << ")";
        os << "\n" << render_path({t.paths[k], t.label});
    }
    return os.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Regions of Catalan-type and semiorder-type arrangements, counted by level", "rgl"};
    app.require_subcommand(1);

    std::string kind = "catalan", offsets = "1", format, point, heights, label, cycles, eps;
    int n = 3, n_max = 4, m = 1;
    bool per_chamber = false, use_oracle = false, verbatim = false;

    auto add_spec = [&](CLI::App* sub) {
        sub->add_option("--kind", kind, "catalan or semiorder")->capture_default_str();
        sub->add_option("--n", n, "dimension")->capture_default_str();
        sub->add_option("--offsets", offsets, "strictly decreasing, e.g. 3,2,1 or 3/2,1")->capture_default_str();
    };
    auto add_format = [&](CLI::App* sub) { sub->add_option("--format", format, "json, csv or text"); };

    auto* census = app.add_subcommand("census", "number of regions at each level");
    add_spec(census);
    add_format(census);
    census->add_flag("--per-chamber", per_chamber, "restrict to the fundamental chamber");
    census->add_flag("--use-oracle", use_oracle, "check every level against the recession cone");

    auto* regions = app.add_subcommand("regions", "list the regions with witnesses and levels");
    add_spec(regions);
    add_format(regions);

    auto* charpoly = app.add_subcommand("charpoly", "characteristic polynomial by finite-field counting");
    add_spec(charpoly);
    add_format(charpoly);

    std::string identity = "all";
    auto* verify = app.add_subcommand("verify", "check the counting identities");
    verify->add_option("identity", identity, "stirling, binomial, egf, charpoly, mcat, raney, oracle or all")
        ->capture_default_str();
    verify->add_option("--kind", kind, "kind for binomial and charpoly")->capture_default_str();
    verify->add_option("--offsets", offsets, "offset set")->capture_default_str();
    verify->add_option("--n-max", n_max, "largest dimension")->capture_default_str();
    verify->add_option("--m", m, "m for the m-Catalan census")->capture_default_str();
    add_format(verify);

    auto* tableau = app.add_subcommand("tableau", "tableau insertion for an m-Dyck path");
    tableau->add_option("--n", n, "path length")->capture_default_str();
    tableau->add_option("--m", m, "slope")->capture_default_str();
    tableau->add_option("--heights", heights, "height sequence, e.g. 0,2,4,5,6,12")->required();
    tableau->add_option("--label", label, "permutation labelling the tuple, e.g. 543261");
    tableau->add_flag("--verbatim", verbatim, "corner-scan rule only, no feasibility search");
    add_format(tableau);

    auto* phi_demo = app.add_subcommand("phi-demo", "map a cycle form and a semiorder region to a Catalan region");
    phi_demo->add_option("--cycles", cycles, "cycle form, e.g. (3)(41)(5)(6)(72)")->required();
    phi_demo->add_option("--point", point, "point of the semiorder region")->required();
    phi_demo->add_option("--offsets", offsets, "offset set")->capture_default_str();
    phi_demo->add_option("--eps", eps, "spread for the point construction (default: computed)");
    add_format(phi_demo);

    auto* level_cmd = app.add_subcommand("level", "level and labelled Dyck paths of the region through a point");
    level_cmd->add_option("--kind", kind, "catalan or semiorder")->capture_default_str();
    level_cmd->add_option("--offsets", offsets, "offset set")->capture_default_str();
    level_cmd->add_option("--point", point, "comma-separated coordinates")->required();
    add_format(level_cmd);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return UsageError;
    }

    try {
        if (*census) {
            if (format.empty()) format = "json";
            check_format(format);
            auto spec = spec_of(kind, n, offsets);
            if (per_chamber && spec.kind != Kind::Catalan) throw Usage("--per-chamber applies to catalan only");
            auto c = per_chamber ? chamber_census(spec, use_oracle) : level_census(spec, use_oracle);
            print_census(out, format, c, spec, per_chamber);
        } else if (*regions) {
            if (format.empty()) format = "json";
            check_format(format);
            auto spec = spec_of(kind, n, offsets);
            auto rs = enumerate_regions(spec);
            if (format == "json") {
                Json arr = Json::array();
                for (const auto& r : rs) {
                    auto j = to_json(r);
                    if (!spec.offsets.empty()) j["level"] = level(r);
                    arr.push_back(j);
                }
                out << arr.dump() << "\n";
            } else if (format == "csv") {
                out << "index,level,witness\n";
                for (std::size_t k = 0; k < rs.size(); ++k)
                    out << k << "," << (spec.offsets.empty() ? recession_cone_dim(rs[k]) : level(rs[k])) << ","
                        << csv_field(offsets_string(rs[k].witness)) << "\n";
            } else {
                out << spec.describe() << ": " << rs.size() << " regions\n";
                for (std::size_t k = 0; k < rs.size(); ++k)
                    out << "  #" << k << " level " << (spec.offsets.empty() ? recession_cone_dim(rs[k]) : level(rs[k]))
                        << " witness " << point_string(rs[k].witness) << "\n";
            }
        } else if (*charpoly) {
            if (format.empty()) format = "text";
            check_format(format);
            auto spec = spec_of(kind, n, offsets);
            auto chi = char_poly_finite_field(spec);
            if (format == "json") {
                Json coeffs = Json::array();
                for (const auto& c : chi.coeffs) coeffs.push_back(c.get_str());
                out << Json{{"spec", to_json(spec)}, {"chi", to_string(chi)}, {"coefficients", coeffs}}.dump() << "\n";
            } else {
                out << to_string(chi) << "\n";
            }
        } else if (*verify) {
            if (format.empty()) format = "text";
            check_format(format);
            auto a = parse_offsets(offsets);
            if (n_max < 0) throw Usage("--n-max must be nonnegative");
            CensusCache cache;
            std::vector<VerificationReport> reports;
            bool all = identity == "all";
            bool known = false;
            auto want = [&](const char* name) {
                bool hit = all || identity == name;
                known = known || hit;
                return hit;
            };
            std::vector<Kind> kinds = all ? std::vector<Kind>{Kind::Catalan, Kind::Semiorder} : std::vector<Kind>{kind_of(kind)};
            if (want("stirling")) reports.push_back(check_stirling_convolution(cache, a, n_max));
            if (want("binomial"))
                for (Kind k : kinds) reports.push_back(check_binomial_identity(cache, k, a, n_max));
            if (want("egf")) reports.push_back(check_egf_power(cache, a, n_max));
            if (want("charpoly"))
                for (Kind k : kinds) reports.push_back(check_charpoly_transition(cache, k, a, n_max));
            if (want("mcat")) reports.push_back(check_mcat_census(cache, n_max, m));
            if (want("raney")) reports.push_back(check_raney_series(3, 4, 10));
            if (want("oracle")) {
                std::vector<ArrangementSpec> specs;
                for (int d = 1; d <= n_max; ++d)
                    for (Kind k : kinds) specs.push_back(make_spec(k, d, a));
                reports.push_back(check_oracle_agreement(specs));
            }
            if (!known) throw Usage("unknown identity: " + identity);
            bool pass = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.pass(); });
            if (format == "json" || format == "csv") {
                for (const auto& r : reports) out << to_json(r).dump() << "\n";
            } else {
                out << summary_table(reports) << (pass ? "PASS" : "FAIL") << "\n";
            }
            return pass ? Ok : VerificationFailed;
        } else if (*tableau) {
            if (format.empty()) format = "text";
            check_format(format);
            MDyckPath path{n, m, parse_ints(heights)};
            try {
                path.validate();
            } catch (const std::invalid_argument& e) {
                throw Usage(e.what());
            }
            YoungTableau t = verbatim ? tableau_insert_verbatim(path).tableau : tableau_insert(path);
            auto h = h_matrix(t, n);
            std::optional<Region> region;
            if (!label.empty()) {
                Word pi;
                try {
                    pi = parse_word(label);
                } catch (const std::invalid_argument& e) {
                    throw Usage(e.what());
                }
                if (static_cast<int>(pi.size()) != n) throw Usage("label must be a permutation of [n]");
                auto tuple = tableau_to_tuple(t, n);
                tuple.label = pi;
                auto fr = tuple_feasible(tuple, m_catalan_spec(Kind::Catalan, n, m));
                if (fr) region = *fr.region;
                else err << "tuple is infeasible under this label\n";
            }
            if (format == "json") {
                Json j{{"path", to_json(path)}, {"tableau", to_json(t)}, {"h", h}};
                if (region) j["region"] = to_json(*region);
                out << j.dump() << "\n";
            } else {
                out << "multiset M:";
                for (int v : path.multiset()) out << " " << v;
                out << "\ntableau:\n" << t.to_string() << "\nH(T):\n";
                for (const auto& row : h) {
                    for (std::size_t k = 0; k < row.size(); ++k) out << (k ? " " : "") << row[k];
                    out << "\n";
                }
                if (region) out << "region witness " << point_string(region->witness) << ", level " << level(*region) << "\n";
            }
            if (!label.empty() && !region) return VerificationFailed;
        } else if (*phi_demo) {
            if (format.empty()) format = "text";
            check_format(format);
            CycleForm omega;
            try {
                omega = CycleForm::parse(cycles).standardized();
            } catch (const std::invalid_argument& e) {
                throw Usage(e.what());
            }
            auto x = parse_point(point);
            auto a = parse_offsets(offsets);
            if (a.empty()) throw Usage("phi-demo needs at least one offset");
            if (static_cast<int>(x.size()) != omega.cycle_count()) throw Usage("point dimension must equal the number of cycles");
            auto omega_region = region_of_point(make_spec(Kind::Semiorder, static_cast<int>(x.size()), a), x);
            Region delta = eps.empty() ? phi(omega, omega_region)
                                       : region_of_point(make_spec(Kind::Catalan, omega.size(), a),
                                                         phi_point(omega, x, parse_exact(eps)));
            auto back = phi_inverse(delta);
            bool round_trip = back.omega == omega && back.region == omega_region;
            if (format == "json") {
                Json j{{"omega", to_json(omega)}, {"semiorder_region", to_json(omega_region)}, {"catalan_region", to_json(delta)},
                       {"level", level(delta)}, {"round_trip", round_trip}};
                if (!eps.empty()) {
                    Json y = Json::array();
                    for (const auto& v : phi_point(omega, x, parse_exact(eps))) y.push_back(to_string(v));
                    j["y"] = y;
                }
                out << j.dump() << "\n";
            } else {
                out << "omega " << omega.to_string() << ", fundamental word " << word_string(fundamental_bijection(omega)) << "\n";
                out << "x " << point_string(x) << ", label " << word_string(associated_permutation(x)) << ", level "
                    << level(omega_region) << "\n";
                if (!eps.empty()) {
                    auto y = phi_point(omega, x, parse_exact(eps));
                    out << "y " << point_string(y) << ", label " << word_string(associated_permutation(y)) << "\n";
                }
                out << "Catalan region witness " << point_string(delta.witness) << ", level " << level(delta) << "\n";
                out << "partition " << region_partition(delta).to_string() << "\n";
                out << render_tuple(dyck_tuple(delta), a);
                out << "inverse " << back.omega.to_string() << (round_trip ? " (round trip ok)" : " (round trip FAILED)") << "\n";
            }
            return round_trip ? Ok : VerificationFailed;
        } else if (*level_cmd) {
            if (format.empty()) format = "text";
            check_format(format);
            auto x = parse_point(point);
            auto spec = spec_of(kind, static_cast<int>(x.size()), offsets);
            Region r;
            try {
                r = region_of_point(spec, x);
            } catch (const OnHyperplane& e) {
                throw Usage(e.what());
            }
            int oracle = recession_cone_dim(r);
            int lv = spec.offsets.empty() ? oracle : level(r);
            if (format == "json") {
                Json j = to_json(r);
                j["level"] = lv;
                j["recession_cone_dim"] = oracle;
                if (!spec.offsets.empty()) j["tuple"] = to_json(dyck_tuple(r));
                out << j.dump() << "\n";
            } else {
                out << spec.describe() << " region through " << point_string(x) << "\n";
                out << "level " << lv << ", recession cone dimension " << oracle << "\n";
                if (!spec.offsets.empty()) out << render_tuple(dyck_tuple(r), spec.offsets);
            }
            return lv == oracle ? Ok : VerificationFailed;
        }
    } catch (const Usage& e) {
        err << "usage error: " << e.what() << "\n";
        return UsageError;
    } catch (const ResourceLimit& e) {
        err << "resource limit: " << e.what() << " (" << e.found << " found)\n";
        return VerificationFailed;
    } catch (const OracleMismatch& e) {
        err << "oracle mismatch: " << e.what() << " at witness " << point_string(e.region.witness) << "\n";
        return VerificationFailed;
    } catch (const OnHyperplane& e) {
        err << "usage error: " << e.what() << "\n";
        return UsageError;
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << "\n";
        return UsageError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return VerificationFailed;
    }
    return Ok;
}

}  // namespace rgl::cli
