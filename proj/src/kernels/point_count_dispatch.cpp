#include "rgl/kernels.hpp"

#include <atomic>

namespace rgl::kernels {

namespace {

std::atomic<int> forced{-1};

}  // namespace

const char* isa_name(Isa isa) { return isa == Isa::Avx2 ? "avx2" : "scalar"; }

bool isa_available(Isa isa) {
    if (isa == Isa::Scalar) return true;
#if defined(__x86_64__) || defined(__i386__)
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

Isa active_isa() {
    int f = forced.load();
    if (f >= 0) return static_cast<Isa>(f);
    return isa_available(Isa::Avx2) ? Isa::Avx2 : Isa::Scalar;
}

void force_isa(std::optional<Isa> isa) {
    if (isa && !isa_available(*isa)) return;
    forced.store(isa ? static_cast<int>(*isa) : -1);
}

std::uint64_t count_allowed(std::uint32_t p, const std::uint32_t* forbidden, std::size_t k) {
    return active_isa() == Isa::Avx2 ? count_allowed_avx2(p, forbidden, k) : count_allowed_scalar(p, forbidden, k);
}

}  // namespace rgl::kernels
