#pragma once

// Lazy-reduction helpers over F_p shared by ModPolynomial and the residue
// field code. Accumulators are plain uint64 and are only reduced once the
// number of pending products could overflow.

#include <cstdint>
#include <span>
#include <vector>

namespace cyclolab::detail {

/// Number of products (p-1)^2 that can be added to a value below p without
/// wrapping 64 bits.
std::uint64_t lazy_budget(std::uint64_t p) noexcept;

void reduce_all(std::span<std::uint64_t> c, std::uint64_t p) noexcept;

/// Plain product of residue vectors, reduced.
std::vector<std::uint64_t> mul_residues(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b,
                                        std::uint64_t p);

/// Reduces c in place modulo the monic polynomial whose coefficients are
/// `monic` (leading 1 included) and truncates c to deg(monic) entries.
void reduce_by_monic(std::vector<std::uint64_t>& c, std::span<const std::uint64_t> monic, std::uint64_t p);

}  // namespace cyclolab::detail
