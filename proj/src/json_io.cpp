#include "rgl/json_io.hpp"

namespace rgl {

namespace {

Json rational_or_null(const std::optional<Rational>& v) { return v ? Json(to_string(*v)) : Json(nullptr); }

Json params_json(const Params& p) {
    Json out = Json::object();
    for (const auto& [k, v] : p) out[k] = v;
    return out;
}

}  // namespace

Json to_json(const ArrangementSpec& spec) {
    Json offsets = Json::array();
    for (const auto& a : spec.offsets) offsets.push_back(to_string(a));
    return {{"n", spec.n}, {"kind", to_string(spec.kind)}, {"offsets", offsets}};
}

ArrangementSpec spec_from_json(const Json& j) {
    std::vector<Rational> offsets;
    for (const auto& a : j.at("offsets")) offsets.push_back(parse_rational(a.is_string() ? a.get<std::string>() : a.dump()));
    return make_spec(parse_kind(j.at("kind").get<std::string>()), j.at("n").get<int>(), offsets);
}

Json to_json(const Region& region) {
    Json intervals = Json::array();
    for (auto [i, j] : index_pairs(region.spec.n)) {
        auto iv = region.interval(i, j);
        intervals.push_back({{"pair", {i + 1, j + 1}}, {"lo", rational_or_null(iv.lo)}, {"hi", rational_or_null(iv.hi)}});
    }
    Json witness = Json::array();
    for (const auto& v : region.witness) witness.push_back(to_string(v));
    return {{"spec", to_json(region.spec)}, {"intervals", intervals}, {"witness", witness}};
}

Region region_from_json(const Json& j) {
    auto spec = spec_from_json(j.at("spec"));
    std::vector<Rational> witness;
    for (const auto& v : j.at("witness")) witness.push_back(parse_rational(v.get<std::string>()));
    auto region = region_of_point(spec, witness);
    for (const auto& iv : j.at("intervals")) {
        int i = iv.at("pair")[0].get<int>() - 1, k = iv.at("pair")[1].get<int>() - 1;
        auto actual = region.interval(i, k);
        auto lo = iv.at("lo").is_null() ? std::optional<Rational>() : parse_rational(iv.at("lo").get<std::string>());
        auto hi = iv.at("hi").is_null() ? std::optional<Rational>() : parse_rational(iv.at("hi").get<std::string>());
        if (actual.lo != lo || actual.hi != hi) throw std::invalid_argument("region JSON: witness contradicts its intervals");
    }
    return region;
}

Json to_json(const LevelCensus& census, const ArrangementSpec& spec) {
    Json counts = Json::object();
    for (int l = 1; l < static_cast<int>(census.counts.size()); ++l) counts[std::to_string(l)] = census.counts[l].get_str();
    // Counts as numbers when they fit, so small censuses read naturally.
    for (auto& [k, v] : counts.items()) {
        BigInt z(v.get<std::string>());
        if (z.fits_slong_p()) v = z.get_si();
    }
    Json total = census.total.fits_slong_p() ? Json(census.total.get_si()) : Json(census.total.get_str());
    auto j = to_json(spec);
    j["counts"] = counts;
    j["total"] = total;
    return j;
}

Json to_json(const DyckTuple& tuple) {
    Json alphas = Json::array();
    for (const auto& p : tuple.paths) alphas.push_back(p.alpha);
    return {{"label", tuple.label}, {"alphas", alphas}};
}

DyckTuple tuple_from_json(const Json& j) {
    DyckTuple t;
    t.label = j.at("label").get<Word>();
    for (const auto& a : j.at("alphas")) {
        DyckPath p;
        p.alpha = a.get<std::vector<int>>();
        p.n = static_cast<int>(p.alpha.size());
        p.validate();
        t.paths.push_back(p);
    }
    return t;
}

Json to_json(const YoungTableau& t) {
    Json rows = Json::array();
    for (int i = 1; i <= t.rows; ++i) {
        Json row = Json::array();
        for (int j = 1; j <= t.cols; ++j) row.push_back(t.filled(i, j) ? Json(t.at(i, j)) : Json(nullptr));
        rows.push_back(row);
    }
    return rows;
}

YoungTableau tableau_from_json(const Json& j) {
    int rows = static_cast<int>(j.size());
    int cols = rows ? static_cast<int>(j[0].size()) : 0;
    YoungTableau t(rows, cols);
    for (int i = 1; i <= rows; ++i) {
        if (static_cast<int>(j[i - 1].size()) != cols) throw std::invalid_argument("tableau JSON: ragged rows");
        for (int c = 1; c <= cols; ++c)
            if (!j[i - 1][c - 1].is_null()) t.at(i, c) = j[i - 1][c - 1].get<int>();
    }
    return t;
}

Json to_json(const MDyckPath& path) { return {{"n", path.n}, {"m", path.m}, {"heights", path.heights}}; }

MDyckPath m_dyck_from_json(const Json& j) {
    MDyckPath p{j.at("n").get<int>(), j.at("m").get<int>(), j.at("heights").get<std::vector<int>>()};
    p.validate();
    return p;
}

Json to_json(const CycleForm& omega) { return {{"cycles", omega.cycles}, {"text", omega.to_string()}}; }

Json to_json(const VerificationReport& report) {
    Json failures = Json::array();
    for (const auto& f : report.failures)
        failures.push_back({{"params", params_json(f.params)}, {"lhs", f.lhs}, {"rhs", f.rhs}});
    return {{"identity", report.identity},   {"parameters", params_json(report.parameters)},
            {"status", report.pass() ? "pass" : "fail"}, {"checked", report.checked},
            {"counterexamples", failures},  {"notes", report.notes}};
}

}  // namespace rgl
