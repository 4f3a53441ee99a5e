#pragma once

#include <cstdint>

#include "garside/structure.hpp"

namespace garside {

inline constexpr int kMaxBraidStrands = 8;
inline constexpr int kMaxTorusExponent = 1000;

/// Classical Garside structure on B_n: simples are permutation braids,
/// atoms a1..a{n-1} are the band-free generators sigma_i, Delta is the half twist.
StructurePtr braid_structure(int strands, int max_strands = kMaxBraidStrands);

/// <x, y | x^N = y^M> with Delta = x^N = y^M and ||Delta|| = max(N, M).
StructurePtr torus_structure(int x_exponent, int y_exponent);

/// Componentwise structure on A x B; atoms are L.<name> and R.<name>.
StructurePtr product_structure(StructurePtr left, StructurePtr right);

}  // namespace garside
