#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

namespace rgl::kernels {

enum class Isa { Scalar, Avx2 };

const char* isa_name(Isa isa);
bool isa_available(Isa isa);
/// Best available variant, unless overridden with force_isa.
Isa active_isa();
/// Pins the dispatch to one variant (nullopt restores runtime selection).
void force_isa(std::optional<Isa> isa);

/// Number of v in [0, p) equal to none of forbidden[0..k). Values must lie in [0, p).
std::uint64_t count_allowed_scalar(std::uint32_t p, const std::uint32_t* forbidden, std::size_t k);
std::uint64_t count_allowed_avx2(std::uint32_t p, const std::uint32_t* forbidden, std::size_t k);
std::uint64_t count_allowed(std::uint32_t p, const std::uint32_t* forbidden, std::size_t k);

}  // namespace rgl::kernels
