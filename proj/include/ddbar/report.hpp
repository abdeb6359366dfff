#pragma once

#include <optional>
#include <set>
#include <string>

#include "ddbar/cohomology.hpp"
#include "ddbar/hodge.hpp"
#include "ddbar/lie_model.hpp"

namespace ddbar {

/// Which analysis sections to compute and print.
struct CheckSet {
    bool lemma = true;
    bool inequalities = true;
    bool hodge = true;
    bool spectral = true;
    bool sequences = true;

    static CheckSet parse(const std::string& list);  // "all" or comma list
    bool any() const { return lemma || inequalities || hodge || spectral || sequences; }
};

/// Hodge-theory section of an analysis: Laplacian kernels, harmonic
/// characterization, star dualities (models only).
struct HodgeReport {
    Grid ker_bc, ker_aeppli;
    bool matches_h = true;        // kernel dims equal h_bc / h_aeppli
    bool harmonic_ok = true;      // subspace characterization
    std::optional<bool> star_kernel_swap;  // models only
    std::optional<bool> star_dualities;    // h^{p,q}_BC = h^{n-q,n-p}_A etc.
};

HodgeReport compute_hodge_report(const Bicomplex& x, const MetricData& g,
                                 const ExteriorModel* model);

/// Table-1-style rendering: k-indexed columns with h_dbar / h_bc / h_a rows
/// and a Betti footer, plus verdicts and the requested sections.
std::string render_table(const CohomologyReport& rep, const CheckSet& checks,
                         const std::string& input_name, const HodgeReport* hodge);

}  // namespace ddbar
