#include "ddbar/search.hpp"

#include "ddbar/cohomology.hpp"
#include "ddbar/random_complex.hpp"

namespace ddbar {

bool satisfies_constraints(const Bicomplex& x, const SearchConstraints& constraints) {
    ReportOptions opts;
    opts.lemma = constraints.lemma_fails;
    opts.spectral = constraints.degenerate_e1;
    CohomologyReport rep = compute_report(x, opts);
    if (constraints.degenerate_e1 && !(rep.e1_equals_einf && *rep.e1_equals_einf)) return false;
    if (constraints.lemma_fails && !(rep.lemma && !*rep.lemma)) return false;
    if (constraints.hodge_symmetric) {
        for (int p = 0; p <= x.p_max(); ++p)
            for (int q = 0; q <= x.q_max(); ++q)
                if (rep.h_dolbeault.at(p, q) != rep.h_del.at(p, q)) return false;
    }
    return true;
}

namespace {

std::vector<std::vector<Placement>> candidate_catalog() {
    using K = ShapeKind;
    return {
        {{K::dot, 0, 0}},
        {{K::square, 0, 0}},
        {{K::zigzag_up, 0, 0}},
        {{K::zigzag_right, 0, 0}},
        {{K::zigzag_out, 0, 0}},
        {{K::zigzag_in, 0, 0}},
        {{K::zigzag_out, 0, 0}, {K::zigzag_in, 0, 0}},
        {{K::zigzag_up, 0, 0}, {K::zigzag_right, 0, 0}},
        {{K::zigzag_out, 1, 1}, {K::zigzag_in, 1, 1}},
        {{K::dot, 0, 0}, {K::zigzag_out, 0, 0}, {K::zigzag_in, 0, 0}},
    };
}

}  // namespace

SearchResult search_assemblies(const SearchConstraints& constraints, int budget,
                               std::uint64_t seed) {
    if (budget <= 0) throw Error("search budget must be positive");
    SearchResult result;
    Rng rng(seed);
    auto catalog = candidate_catalog();
    for (int i = 0; i < budget; ++i) {
        std::vector<Placement> pieces;
        if (static_cast<std::size_t>(i) < catalog.size()) {
            pieces = catalog[static_cast<std::size_t>(i)];
        } else {
            pieces = random_assembly(rng, 2, 4);
            if (constraints.hodge_symmetric) pieces = mirror_closure(pieces);
        }
        Bicomplex x = zigzag_assemble(pieces, is_mirror_symmetric(pieces));
        ++result.tried;
        if (satisfies_constraints(x, constraints)) {
            result.found = true;
            result.pieces = std::move(pieces);
            result.complex = std::move(x);
            return result;
        }
    }
    return result;
}

}  // namespace ddbar
