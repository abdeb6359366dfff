#pragma once

#include <cstdint>
#include <vector>

#include "ddbar/scalar.hpp"

namespace ddbar {

/// Bitmask monomials in an exterior algebra on `count` anticommuting
/// degree-one generators, kept in ascending index order.
namespace exterior {

/// All size-k subsets of {0..n-1} as bitmasks, lexicographic in the sorted
/// element lists. The position of a mask in this list is its basis index.
std::vector<std::uint32_t> subsets(int n, int k);

/// Index of `mask` within subsets(n, popcount(mask)).
int subset_index(int n, std::uint32_t mask);

/// Wedge a single generator onto a monomial from the left:
/// g ^ e_{i1} ^ ... = sign * (sorted monomial). sign = 0 when g already occurs.
struct Wedge {
    int sign;
    std::uint32_t mask;
};
Wedge wedge_generator(int g, std::uint32_t mask);

/// Sign of e_A ^ e_B relative to the sorted merge (0 if A and B intersect).
int merge_sign(std::uint32_t a, std::uint32_t b);

int binomial(int n, int k);

}  // namespace exterior

}  // namespace ddbar
