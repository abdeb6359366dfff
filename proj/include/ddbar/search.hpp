#pragma once

#include <cstdint>
#include <vector>

#include "ddbar/assembly.hpp"
#include "ddbar/bicomplex.hpp"

namespace ddbar {

struct SearchConstraints {
    bool degenerate_e1 = false;   // E_1 = E_inf pointwise
    bool hodge_symmetric = false; // h^{p,q}_dbar = h^{p,q}_del everywhere
    bool lemma_fails = false;     // del-delbar-Lemma does not hold
};

struct SearchResult {
    bool found = false;
    int tried = 0;
    std::vector<Placement> pieces;
    Bicomplex complex;
};

/// Walks a deterministic candidate stream (a small fixed catalog, then
/// seeded random assemblies) and returns the first assembly satisfying all
/// requested constraints, or found = false after `budget` candidates.
SearchResult search_assemblies(const SearchConstraints& constraints, int budget,
                               std::uint64_t seed);

/// Constraint evaluation used by the search and by re-verification.
bool satisfies_constraints(const Bicomplex& x, const SearchConstraints& constraints);

}  // namespace ddbar
