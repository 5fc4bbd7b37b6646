#include "rgl/kernels.hpp"

namespace rgl::kernels {

std::uint64_t count_allowed_scalar(std::uint32_t p, const std::uint32_t* forbidden, std::size_t k) {
    std::uint64_t count = 0;
    for (std::uint32_t v = 0; v < p; ++v) {
        bool hit = false;
        for (std::size_t f = 0; f < k; ++f) hit |= forbidden[f] == v;
        count += hit ? 0 : 1;
    }
    return count;
}

}  // namespace rgl::kernels
