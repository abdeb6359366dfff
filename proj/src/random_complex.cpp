#include "ddbar/random_complex.hpp"

#include <sstream>

#include "ddbar/cohomology.hpp"
#include "ddbar/spectral.hpp"

namespace ddbar {

std::vector<Placement> random_assembly(Rng& rng, int max_extent, int max_pieces) {
    int count = max_pieces <= 0 ? 0 : 1 + rng.below(max_pieces);
    std::vector<Placement> pieces;
    pieces.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        Placement pl;
        pl.kind = static_cast<ShapeKind>(rng.below(6));
        pl.p = rng.below(max_extent + 1);
        pl.q = rng.below(max_extent + 1);
        pieces.push_back(pl);
    }
    return pieces;
}

namespace {

GaussianRational small_unit(Rng& rng) {
    switch (rng.below(6)) {
        case 0: return GaussianRational(1);
        case 1: return GaussianRational(-1);
        case 2: return GaussianRational::i();
        case 3: return -GaussianRational::i();
        case 4: return GaussianRational(Rational(1), Rational(1));  // 1 + i
        default: return GaussianRational(Rational(1), Rational(-1));
    }
}

Matrix random_invertible(Rng& rng, int dim) {
    Matrix p = Matrix::identity(static_cast<std::size_t>(dim));
    int ops = dim == 0 ? 0 : 2 * dim;
    for (int t = 0; t < ops; ++t) {
        std::size_t i = static_cast<std::size_t>(rng.below(dim));
        std::size_t j = static_cast<std::size_t>(rng.below(dim));
        if (i == j) {
            // Scale a row by a unit.
            GaussianRational u = rng.chance(1, 2) ? GaussianRational(-1) : GaussianRational::i();
            for (std::size_t c = 0; c < p.cols(); ++c) p.at(i, c) = p.at(i, c) * u;
        } else {
            GaussianRational u = small_unit(rng);
            for (std::size_t c = 0; c < p.cols(); ++c) p.at(i, c) += u * p.at(j, c);
        }
    }
    return p;
}

}  // namespace

Bicomplex random_basis_change(const Bicomplex& x, Rng& rng) {
    int pm = x.p_max(), qm = x.q_max();
    if (pm < 0) return x;
    auto idx = [qm](int p, int q) {
        return static_cast<std::size_t>(p) * static_cast<std::size_t>(qm + 1) +
               static_cast<std::size_t>(q);
    };
    std::size_t cells = static_cast<std::size_t>((pm + 1) * (qm + 1));
    std::vector<Matrix> basis(cells), basis_inv(cells);
    std::vector<int> dims(cells);
    for (int p = 0; p <= pm; ++p)
        for (int q = 0; q <= qm; ++q) {
            dims[idx(p, q)] = x.dim(p, q);
            basis[idx(p, q)] = random_invertible(rng, x.dim(p, q));
            basis_inv[idx(p, q)] = basis[idx(p, q)].inverse();
        }
    auto pmat = [&](int p, int q) {
        return (p >= 0 && p <= pm && q >= 0 && q <= qm)
                   ? basis[idx(p, q)]
                   : Matrix::identity(static_cast<std::size_t>(x.dim(p, q)));
    };
    std::vector<Matrix> del(cells), delbar(cells);
    std::optional<std::vector<Matrix>> conj;
    if (x.has_conjugation()) conj.emplace(cells);
    for (int p = 0; p <= pm; ++p)
        for (int q = 0; q <= qm; ++q) {
            del[idx(p, q)] = pmat(p + 1, q) * x.del(p, q) * basis_inv[idx(p, q)];
            delbar[idx(p, q)] = pmat(p, q + 1) * x.delbar(p, q) * basis_inv[idx(p, q)];
            if (conj)
                (*conj)[idx(p, q)] =
                    basis[idx(q, p)] * x.conj_matrix(p, q) * basis_inv[idx(p, q)].conjugate();
        }
    return Bicomplex(pm, qm, std::move(dims), std::move(del), std::move(delbar), std::move(conj),
                     x.n());
}

Bicomplex random_bicomplex(Rng& rng, const RandomComplexOptions& opts) {
    std::vector<Placement> pieces = random_assembly(rng, opts.max_extent, opts.max_pieces);
    if (opts.mirror) pieces = mirror_closure(pieces);
    Bicomplex x = zigzag_assemble(pieces, opts.mirror);
    if (opts.base_change) x = random_basis_change(x, rng);
    return x;
}

StructureEquations random_structure_equations(Rng& rng) {
    int n = 2 + rng.below(2);
    auto random_coeff = [&rng]() {
        switch (rng.below(7)) {
            case 0: return GaussianRational(1);
            case 1: return GaussianRational(-1);
            case 2: return GaussianRational::i();
            case 3: return GaussianRational(Rational(1, 2));
            case 4: return GaussianRational(Rational(-1, 2), Rational(1));
            case 5: return GaussianRational(2);
            default: return GaussianRational(Rational(0), Rational(-1));
        }
    };
    for (int attempt = 0; attempt < 8; ++attempt) {
        StructureEquations s;
        s.name = "random";
        s.n = n;
        s.dphi.resize(static_cast<std::size_t>(n));
        for (int i = 2; i <= n; ++i)
            for (int j = 1; j < i; ++j)
                for (int k = 1; k < i; ++k) {
                    if (j < k && rng.chance(1, 4))
                        s.dphi[static_cast<std::size_t>(i - 1)].push_back(
                            {StructureTerm::Kind::phi_phi, j, k, random_coeff()});
                    if (rng.chance(1, 4))
                        s.dphi[static_cast<std::size_t>(i - 1)].push_back(
                            {StructureTerm::Kind::phi_phibar, j, k, random_coeff()});
                }
        if (validate_model(s).empty()) return s;
    }
    // Fallback: only dphi^n nonzero, with indices below n. Always d^2 = 0.
    StructureEquations s;
    s.name = "random";
    s.n = n;
    s.dphi.resize(static_cast<std::size_t>(n));
    for (int j = 1; j < n; ++j)
        for (int k = 1; k < n; ++k) {
            if (j < k && rng.chance(1, 2))
                s.dphi[static_cast<std::size_t>(n - 1)].push_back(
                    {StructureTerm::Kind::phi_phi, j, k, random_coeff()});
            if (rng.chance(1, 2))
                s.dphi[static_cast<std::size_t>(n - 1)].push_back(
                    {StructureTerm::Kind::phi_phibar, j, k, random_coeff()});
        }
    return s;
}

Matrix random_positive_gram(Rng& rng, int dim) {
    Matrix a = random_invertible(rng, dim);
    return a.conj_transpose() * a;
}

std::optional<InvariantFailure> run_invariant_suite(const Bicomplex& x) {
    auto violations = validate(x);
    if (!violations.empty())
        return InvariantFailure{"validate", violations.front().what + " at (" +
                                                std::to_string(violations.front().p) + "," +
                                                std::to_string(violations.front().q) + ")"};

    // Rank-nullity and the sum/intersection dimension formula on the
    // subspaces the engine actually uses.
    for (int p = 0; p <= x.p_max(); ++p)
        for (int q = 0; q <= x.q_max(); ++q) {
            Matrix dl = x.del(p, q);
            if (kernel_basis(dl).dim() + rank(dl) != dl.cols())
                return InvariantFailure{"rank_nullity", "del at (" + std::to_string(p) + "," +
                                                            std::to_string(q) + ")"};
            Matrix db = x.delbar(p, q);
            if (kernel_basis(db).dim() + rank(db) != db.cols())
                return InvariantFailure{"rank_nullity", "delbar at (" + std::to_string(p) + "," +
                                                            std::to_string(q) + ")"};
            Subspace u = ker_del(x, p, q);
            Subspace v = im_delbar(x, p, q);
            if (subspace_sum(u, v).dim() + subspace_intersect(u, v).dim() != u.dim() + v.dim())
                return InvariantFailure{"dim_formula", "(" + std::to_string(p) + "," +
                                                           std::to_string(q) + ")"};
        }

    CohomologyReport rep = compute_report(x);
    if (!rep.sequences_ok) return InvariantFailure{"sequences", "alternating sum nonzero"};
    if (!rep.structural_ok) return InvariantFailure{"structural", "c=d' or e=b' failed"};
    if (!rep.ek_recursion_ok) return InvariantFailure{"ek_recursion", "identity failed"};
    if (!rep.inequalities.frolicher_all_k)
        return InvariantFailure{"frolicher", "h^k_dbar < b_k"};

    // Euler characteristics through three routes.
    long chi_b = 0, chi_h = 0, chi_dim = 0;
    for (int k = 0; k <= rep.k_max(); ++k) {
        long sign = (k % 2 == 0) ? 1 : -1;
        chi_b += sign * rep.betti_at(k);
        chi_h += sign * rep.hk(Flavor::dolbeault, k);
    }
    for (int p = 0; p <= x.p_max(); ++p)
        for (int q = 0; q <= x.q_max(); ++q)
            chi_dim += (((p + q) % 2 == 0) ? 1 : -1) * x.dim(p, q);
    if (chi_b != chi_h || chi_b != chi_dim)
        return InvariantFailure{"euler", "betti/dolbeault/dimension characteristics differ"};

    if (!rep.pages.empty()) {
        if (!(rep.pages.front() == rep.h_dolbeault))
            return InvariantFailure{"spectral_e1", "E_1 differs from Dolbeault"};
        // The pointwise page comparison must agree with the totals criterion.
        if (rep.e1_equals_einf && *rep.e1_equals_einf != rep.frolicher_equality_all_k)
            return InvariantFailure{"degeneration_routes",
                                    "pagewise and totals degeneration verdicts disagree"};
        for (int k = 0; k <= rep.k_max(); ++k)
            if (rep.pages.back().total(k) != rep.betti_at(k))
                return InvariantFailure{"spectral_einf",
                                        "stable page total != b_" + std::to_string(k)};
        // Pages can only shrink.
        for (std::size_t r = 1; r < rep.pages.size(); ++r)
            for (int p = 0; p <= x.p_max(); ++p)
                for (int q = 0; q <= x.q_max(); ++q)
                    if (rep.pages[r].at(p, q) > rep.pages[r - 1].at(p, q))
                        return InvariantFailure{"spectral_monotone", "page grew"};
    }

    if (rep.lemma && *rep.lemma && !rep.bc_equality_all_k)
        return InvariantFailure{"lemma_implies_equality", "lemma holds but equality fails"};

    // Dual route: lemma_direct equals injectivity of the total BC -> dR maps.
    if (rep.lemma) {
        bool inj = true;
        for (const auto& e : rep.maps)
            if (e.map == "bc_to_dr_total" && !e.injective) inj = false;
        if (inj != *rep.lemma)
            return InvariantFailure{"lemma_vs_map_rank", "subspace and rank routes disagree"};
    }
    if (rep.bc_surjectivity_ok && !*rep.bc_surjectivity_ok)
        return InvariantFailure{"bc_surjectivity", "BC -> dR not surjective though a^{k+1} = 0"};

    if (x.has_conjugation()) {
        if (rep.symmetry_ok && !*rep.symmetry_ok)
            return InvariantFailure{"conjugation_symmetries", "a/f/d/b/e/c or h tables asymmetric"};
        if (rep.excess_identity_ok && !*rep.excess_identity_ok)
            return InvariantFailure{"excess_identity", "h_BC + h_A != 2 h_dbar + a + f"};
        if (rep.inequalities.pointwise_all && !*rep.inequalities.pointwise_all)
            return InvariantFailure{"pointwise_inequality", "h_BC + h_A < h_dbar + h_del"};
    }
    return std::nullopt;
}

}  // namespace ddbar
