#include "rgl/arrangement.hpp"
#include "rgl/dyckmodel.hpp"

namespace rgl {

LevelCensus level_census_of(const ArrangementSpec& spec, const std::vector<Region>& regions, bool use_oracle) {
    LevelCensus c;
    c.n = spec.n;
    c.counts.assign(spec.n + 1, 0);
    for (const auto& r : regions) {
        int l;
        if (spec.offsets.empty()) {
            l = recession_cone_dim(r);
        } else {
            l = level(r);
            if (use_oracle) {
                int oracle = recession_cone_dim(r);
                if (oracle != l)
                    throw OracleMismatch("level " + std::to_string(l) + " disagrees with recession cone dimension " +
                                             std::to_string(oracle),
                                         r);
            }
        }
        c.counts.at(l) += 1;
        c.total += 1;
    }
    return c;
}

LevelCensus level_census(const ArrangementSpec& spec, bool use_oracle) {
    return level_census_of(spec, enumerate_regions(spec), use_oracle);
}

LevelCensus chamber_census(const ArrangementSpec& spec, bool use_oracle) {
    std::vector<Region> inside;
    for (auto& r : enumerate_regions(spec))
        if (in_fundamental_chamber(r)) inside.push_back(std::move(r));
    return level_census_of(spec, inside, use_oracle);
}

}  // namespace rgl
