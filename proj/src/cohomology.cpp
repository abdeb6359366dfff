#include "ddbar/cohomology.hpp"

#include <algorithm>

#include "ddbar/spectral.hpp"

namespace ddbar {

std::string flavor_name(Flavor f) {
    switch (f) {
        case Flavor::dolbeault: return "dolbeault";
        case Flavor::del: return "del";
        case Flavor::bott_chern: return "bc";
        case Flavor::aeppli: return "aeppli";
    }
    return "?";
}

Subspace ker_del(const Bicomplex& x, int p, int q) { return kernel_basis(x.del(p, q)); }
Subspace ker_delbar(const Bicomplex& x, int p, int q) { return kernel_basis(x.delbar(p, q)); }
Subspace im_del(const Bicomplex& x, int p, int q) { return image_basis(x.del(p - 1, q)); }
Subspace im_delbar(const Bicomplex& x, int p, int q) { return image_basis(x.delbar(p, q - 1)); }
Subspace ker_del_delbar(const Bicomplex& x, int p, int q) {
    return kernel_basis(x.del_delbar(p, q));
}
Subspace im_del_delbar(const Bicomplex& x, int p, int q) {
    return image_basis(x.del_delbar(p - 1, q - 1));
}

int h_line(const Bicomplex& x, Flavor flavor, int p, int q) {
    if (flavor == Flavor::dolbeault)
        return static_cast<int>(quotient_dim(ker_delbar(x, p, q), im_delbar(x, p, q)));
    if (flavor == Flavor::del)
        return static_cast<int>(quotient_dim(ker_del(x, p, q), im_del(x, p, q)));
    throw Error("h_line: flavor must be dolbeault or del");
}

int h_bc(const Bicomplex& x, int p, int q) {
    Subspace num = subspace_intersect(ker_del(x, p, q), ker_delbar(x, p, q));
    return static_cast<int>(quotient_dim(num, im_del_delbar(x, p, q)));
}

int h_aeppli(const Bicomplex& x, int p, int q) {
    Subspace den = subspace_sum(im_del(x, p, q), im_delbar(x, p, q));
    return static_cast<int>(quotient_dim(ker_del_delbar(x, p, q), den));
}

int betti(const Bicomplex& x, int k) {
    if (k < 0) return 0;
    TotalComplex t(x);
    std::size_t ker = kernel_basis(t.d(k)).dim();
    std::size_t im = rank(t.d(k - 1));
    return static_cast<int>(ker - im);
}

VarouchasDims varouchas_dims(const Bicomplex& x) {
    int pm = x.p_max(), qm = x.q_max();
    VarouchasDims v{Grid(pm, qm), Grid(pm, qm), Grid(pm, qm),
                    Grid(pm, qm), Grid(pm, qm), Grid(pm, qm)};
    for (int p = 0; p <= pm; ++p)
        for (int q = 0; q <= qm; ++q) {
            Subspace kd = ker_del(x, p, q);
            Subspace kdb = ker_delbar(x, p, q);
            Subspace id = im_del(x, p, q);
            Subspace idb = im_delbar(x, p, q);
            Subspace kdd = ker_del_delbar(x, p, q);
            Subspace idd = im_del_delbar(x, p, q);
            v.a.set(p, q, static_cast<int>(quotient_dim(subspace_intersect(idb, id), idd)));
            v.b.set(p, q, static_cast<int>(quotient_dim(subspace_intersect(kdb, id), idd)));
            v.d.set(p, q, static_cast<int>(quotient_dim(subspace_intersect(idb, kd), idd)));
            // The C, E, F denominators are intersected into ker del.delbar;
            // the quotients presuppose that containment.
            auto quot = [&kdd](const Subspace& den) {
                return static_cast<int>(quotient_dim(kdd, subspace_intersect(den, kdd)));
            };
            v.c.set(p, q, quot(subspace_sum(kdb, id)));
            v.e.set(p, q, quot(subspace_sum(kd, idb)));
            v.f.set(p, q, quot(subspace_sum(kdb, kd)));
        }
    return v;
}

bool check_sequences(const VarouchasDims& v, const Grid& h_dolbeault, const Grid& h_bc,
                     const Grid& h_aeppli) {
    for (int p = 0; p <= v.a.p_max(); ++p)
        for (int q = 0; q <= v.a.q_max(); ++q) {
            if (v.a.at(p, q) - v.b.at(p, q) + h_dolbeault.at(p, q) - h_aeppli.at(p, q) +
                    v.c.at(p, q) !=
                0)
                return false;
            if (v.d.at(p, q) - h_bc.at(p, q) + h_dolbeault.at(p, q) - v.e.at(p, q) +
                    v.f.at(p, q) !=
                0)
                return false;
        }
    return true;
}

bool check_structural_equalities(const VarouchasDims& v) {
    for (int p = -1; p <= v.a.p_max() + 1; ++p)
        for (int q = -1; q <= v.a.q_max() + 1; ++q) {
            if (v.c.at(p, q) != v.d.at(p, q + 1)) return false;
            if (v.e.at(p, q) != v.b.at(p + 1, q)) return false;
        }
    return true;
}

bool check_conjugation_symmetries(const Bicomplex& x, const VarouchasDims& v,
                                  const Grid& h_dolbeault, const Grid& h_del, const Grid& h_bc,
                                  const Grid& h_aeppli) {
    if (!x.has_conjugation()) throw ModelError("no conjugation structure");
    int m = std::max(x.p_max(), x.q_max());
    for (int p = 0; p <= m; ++p)
        for (int q = 0; q <= m; ++q) {
            if (v.a.at(p, q) != v.a.at(q, p)) return false;
            if (v.f.at(p, q) != v.f.at(q, p)) return false;
            if (v.d.at(p, q) != v.b.at(q, p)) return false;
            if (v.e.at(p, q) != v.c.at(q, p)) return false;
            if (h_bc.at(p, q) != h_bc.at(q, p)) return false;
            if (h_aeppli.at(p, q) != h_aeppli.at(q, p)) return false;
            if (h_dolbeault.at(p, q) != h_del.at(q, p)) return false;
        }
    return true;
}

namespace {

// rank of the map induced on quotients by `f` between N1/D1 and N2/D2,
// computed as rank(annihilator(D2) . f . basis(N1)^T). f(D1) <= D2 makes the
// composite factor through the quotients.
int induced_rank(const Subspace& n1, const Matrix& f, const Subspace& d2) {
    Matrix m = annihilator(d2).basis() * (f * n1.basis().transpose());
    return static_cast<int>(rank(m));
}

MapRankEntry make_entry(std::string name, int p, int q, int k, int dom, int cod, int rk) {
    MapRankEntry e;
    e.map = std::move(name);
    e.p = p;
    e.q = q;
    e.k = k;
    e.domain_dim = dom;
    e.codomain_dim = cod;
    e.rank = rk;
    e.injective = (rk == dom);
    e.surjective = (rk == cod);
    return e;
}

}  // namespace

std::vector<MapRankEntry> natural_map_ranks(const Bicomplex& x) {
    std::vector<MapRankEntry> out;
    TotalComplex t(x);
    for (int p = 0; p <= x.p_max(); ++p)
        for (int q = 0; q <= x.q_max(); ++q) {
            int dm = x.dim(p, q);
            Matrix id = Matrix::identity(static_cast<std::size_t>(dm));
            Subspace kd = ker_del(x, p, q);
            Subspace kdb = ker_delbar(x, p, q);
            Subspace idl = im_del(x, p, q);
            Subspace idb = im_delbar(x, p, q);
            Subspace bc_num = subspace_intersect(kd, kdb);
            Subspace bc_den = im_del_delbar(x, p, q);
            Subspace a_num = ker_del_delbar(x, p, q);
            Subspace a_den = subspace_sum(idl, idb);
            int hbc = static_cast<int>(bc_num.dim() - bc_den.dim());
            int hdel = static_cast<int>(kd.dim() - idl.dim());
            int hdbar = static_cast<int>(kdb.dim() - idb.dim());
            int ha = static_cast<int>(a_num.dim() - a_den.dim());

            out.push_back(make_entry("bc_to_del", p, q, p + q, hbc, hdel,
                                     induced_rank(bc_num, id, idl)));
            out.push_back(make_entry("bc_to_delbar", p, q, p + q, hbc, hdbar,
                                     induced_rank(bc_num, id, idb)));
            out.push_back(make_entry("del_to_a", p, q, p + q, hdel, ha,
                                     induced_rank(kd, id, a_den)));
            out.push_back(make_entry("delbar_to_a", p, q, p + q, hdbar, ha,
                                     induced_rank(kdb, id, a_den)));

            // H^{p,q}_BC -> H^{p+q}_dR through the block embedding.
            int k = p + q;
            Subspace dr_den = image_basis(t.d(k - 1));
            Subspace emb = t.embed(p, q, bc_num);
            int bk = static_cast<int>(kernel_basis(t.d(k)).dim() - dr_den.dim());
            Matrix tot_id = Matrix::identity(static_cast<std::size_t>(t.dim(k)));
            out.push_back(make_entry("bc_to_dr", p, q, k, hbc, bk,
                                     induced_rank(emb, tot_id, dr_den)));
        }

    for (int k = 0; k <= t.k_max(); ++k) {
        Subspace dr_den = image_basis(t.d(k - 1));
        Subspace dr_num = kernel_basis(t.d(k));
        int bk = static_cast<int>(dr_num.dim() - dr_den.dim());
        Matrix tot_id = Matrix::identity(static_cast<std::size_t>(t.dim(k)));

        // (+)_{p+q=k} H^{p,q}_BC -> H^k_dR: stack the embedded numerators.
        Matrix stacked(0, static_cast<std::size_t>(t.dim(k)));
        int bc_total = 0;
        for (auto [p, q] : t.blocks(k)) {
            Subspace num = subspace_intersect(ker_del(x, p, q), ker_delbar(x, p, q));
            bc_total += static_cast<int>(num.dim() - im_del_delbar(x, p, q).dim());
            stacked = Matrix::vstack(stacked, t.embed(p, q, num).basis());
        }
        int rk = static_cast<int>(rank(annihilator(dr_den).basis() * stacked.transpose()));
        out.push_back(make_entry("bc_to_dr_total", -1, -1, k, bc_total, bk, rk));

        // H^k_dR -> (+)_{p+q=k} H^{p,q}_A by pure-type components.
        Matrix proj(0, static_cast<std::size_t>(t.dim(k)));
        int a_total = 0;
        for (auto [p, q] : t.blocks(k)) {
            Subspace a_den = subspace_sum(im_del(x, p, q), im_delbar(x, p, q));
            a_total +=
                static_cast<int>(ker_del_delbar(x, p, q).dim() - a_den.dim());
            Matrix ann = annihilator(a_den).basis();
            // Widen each functional to Tot^k coordinates at the block offset.
            Matrix wide(ann.rows(), static_cast<std::size_t>(t.dim(k)));
            int off = t.offset(k, p);
            for (std::size_t r = 0; r < ann.rows(); ++r)
                for (std::size_t c = 0; c < ann.cols(); ++c)
                    wide.at(r, static_cast<std::size_t>(off) + c) = ann.at(r, c);
            proj = Matrix::vstack(proj, wide);
        }
        int rk2 = static_cast<int>(rank(proj * dr_num.basis().transpose()));
        out.push_back(make_entry("dr_to_a_total", -1, -1, k, bk, a_total, rk2));
    }
    return out;
}

bool lemma_direct(const Bicomplex& x) {
    TotalComplex t(x);
    for (int k = 0; k <= t.k_max(); ++k) {
        Subspace closed = Subspace::zero(static_cast<std::size_t>(t.dim(k)));
        Subspace exact_dd = Subspace::zero(static_cast<std::size_t>(t.dim(k)));
        for (auto [p, q] : t.blocks(k)) {
            Subspace num = subspace_intersect(ker_del(x, p, q), ker_delbar(x, p, q));
            closed = subspace_sum(closed, t.embed(p, q, num));
            exact_dd = subspace_sum(exact_dd, t.embed(p, q, im_del_delbar(x, p, q)));
        }
        Subspace d_exact = image_basis(t.d(k - 1));
        if (!exact_dd.contains(subspace_intersect(closed, d_exact))) return false;
    }
    return true;
}

const Grid& CohomologyReport::h(Flavor f) const {
    switch (f) {
        case Flavor::dolbeault: return h_dolbeault;
        case Flavor::del: return h_del;
        case Flavor::bott_chern: return h_bc;
        case Flavor::aeppli: return h_aeppli;
    }
    throw Error("bad flavor");
}

InequalityVerdicts inequality_verdicts(const CohomologyReport& rep) {
    InequalityVerdicts v;
    for (int k = 0; k <= rep.k_max(); ++k) {
        int hd = rep.hk(Flavor::dolbeault, k);
        int bk = rep.betti_at(k);
        if (hd < bk) v.frolicher_all_k = false;
        if (hd > bk) v.frolicher_strict_at.push_back(k);
        int lhs = rep.hk(Flavor::bott_chern, k) + rep.hk(Flavor::aeppli, k);
        if (lhs < 2 * bk) v.bc_total_all_k = false;
        if (lhs > 2 * bk) v.bc_total_strict_at.push_back(k);
    }
    if (rep.has_conjugation) v.pointwise_all = true;
    for (int p = 0; p <= rep.p_max; ++p)
        for (int q = 0; q <= rep.q_max; ++q) {
            int lhs = rep.h_bc.at(p, q) + rep.h_aeppli.at(p, q);
            int rhs = rep.h_dolbeault.at(p, q) + rep.h_del.at(p, q);
            if (lhs > rhs) v.pointwise_strict_at.emplace_back(p, q);
            if (rep.has_conjugation && lhs < rhs) v.pointwise_all = false;
        }
    return v;
}

bool equality_characterization(const CohomologyReport& rep) {
    for (int k = 0; k <= rep.k_max(); ++k)
        if (rep.hk(Flavor::bott_chern, k) + rep.hk(Flavor::aeppli, k) != 2 * rep.betti_at(k))
            return false;
    return true;
}

bool excess_identity_check(const CohomologyReport& rep) {
    if (!rep.has_conjugation) throw ModelError("excess identity requires conjugation");
    for (int k = 0; k <= rep.k_max(); ++k) {
        int lhs = rep.hk(Flavor::bott_chern, k) + rep.hk(Flavor::aeppli, k);
        int rhs = 2 * rep.hk(Flavor::dolbeault, k) + rep.var.a.total(k) + rep.var.f.total(k);
        if (lhs != rhs) return false;
    }
    int m = std::max(rep.p_max, rep.q_max);
    for (int p = 0; p <= m; ++p)
        for (int q = 0; q <= m; ++q) {
            int lhs = rep.h_bc.at(p, q) + rep.h_aeppli.at(q, p);
            int rhs = rep.h_dolbeault.at(p, q) + rep.h_del.at(p, q) + rep.var.f.at(p, q) +
                      rep.var.a.at(p, q);
            if (lhs != rhs) return false;
        }
    return true;
}

bool ek_recursion_check(const CohomologyReport& rep) {
    auto tot = [](const Grid& g, int k) { return k < 0 ? 0 : g.total(k); };
    auto hk = [&rep](Flavor f, int k) { return k < 0 ? 0 : rep.hk(f, k); };
    for (int k = 0; k <= rep.k_max() + 2; ++k) {
        int ek = tot(rep.var.e, k);
        int first = (hk(Flavor::dolbeault, k) - hk(Flavor::bott_chern, k)) + tot(rep.var.f, k) +
                    tot(rep.var.c, k - 1);
        if (ek != first) return false;
        int second = (hk(Flavor::dolbeault, k) - hk(Flavor::bott_chern, k)) -
                     (hk(Flavor::dolbeault, k - 1) - hk(Flavor::aeppli, k - 1)) +
                     tot(rep.var.f, k) - tot(rep.var.a, k - 1) + tot(rep.var.e, k - 2);
        if (ek != second) return false;
    }
    return true;
}

bool bc_surjectivity_check(const Bicomplex& x, const CohomologyReport& rep) {
    (void)x;
    for (int k = 0; k <= rep.k_max(); ++k) {
        if (rep.var.a.total(k + 1) != 0) continue;
        bool found = false;
        for (const auto& e : rep.maps)
            if (e.map == "bc_to_dr_total" && e.k == k) {
                found = true;
                if (!e.surjective) return false;
            }
        if (!found) throw Error("bc surjectivity check requires the natural-map table");
    }
    return true;
}

CohomologyReport compute_report(const Bicomplex& x, const ReportOptions& opts) {
    CohomologyReport rep;
    rep.p_max = x.p_max();
    rep.q_max = x.q_max();
    rep.n = x.n();
    rep.has_conjugation = x.has_conjugation();

    int pm = x.p_max(), qm = x.q_max();
    rep.h_dolbeault = Grid(pm, qm);
    rep.h_del = Grid(pm, qm);
    rep.h_bc = Grid(pm, qm);
    rep.h_aeppli = Grid(pm, qm);
    for (int p = 0; p <= pm; ++p)
        for (int q = 0; q <= qm; ++q) {
            rep.h_dolbeault.set(p, q, h_line(x, Flavor::dolbeault, p, q));
            rep.h_del.set(p, q, h_line(x, Flavor::del, p, q));
            rep.h_bc.set(p, q, h_bc(x, p, q));
            rep.h_aeppli.set(p, q, h_aeppli(x, p, q));
        }
    rep.betti.resize(static_cast<std::size_t>(std::max(rep.k_max() + 1, 0)));
    for (int k = 0; k <= rep.k_max(); ++k)
        rep.betti[static_cast<std::size_t>(k)] = ddbar::betti(x, k);

    rep.var = varouchas_dims(x);
    rep.sequences_ok = check_sequences(rep.var, rep.h_dolbeault, rep.h_bc, rep.h_aeppli);
    rep.structural_ok = check_structural_equalities(rep.var);
    rep.ek_recursion_ok = ek_recursion_check(rep);
    if (x.has_conjugation()) {
        rep.symmetry_ok = check_conjugation_symmetries(x, rep.var, rep.h_dolbeault, rep.h_del,
                                                       rep.h_bc, rep.h_aeppli);
        rep.excess_identity_ok = excess_identity_check(rep);
    }
    rep.inequalities = inequality_verdicts(rep);
    rep.bc_equality_all_k = equality_characterization(rep);
    rep.frolicher_equality_all_k = true;
    for (int k = 0; k <= rep.k_max(); ++k)
        if (rep.hk(Flavor::dolbeault, k) != rep.betti_at(k)) rep.frolicher_equality_all_k = false;

    if (opts.lemma) {
        rep.maps = natural_map_ranks(x);
        rep.lemma = lemma_direct(x);
        rep.bc_surjectivity_ok = bc_surjectivity_check(x, rep);
    }
    if (opts.spectral) {
        rep.r_max = opts.r_max > 0 ? opts.r_max : rep.k_max() + 2;
        if (rep.r_max < 1) rep.r_max = 1;
        rep.pages = spectral_page_dims(x, rep.r_max);
        bool degen = true;
        const Grid& e1 = rep.pages.front();
        const Grid& einf = rep.pages.back();
        for (int p = 0; p <= pm; ++p)
            for (int q = 0; q <= qm; ++q)
                if (e1.at(p, q) != einf.at(p, q)) degen = false;
        rep.e1_equals_einf = degen;
    }
    return rep;
}

}  // namespace ddbar
