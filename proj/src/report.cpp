#include "ddbar/report.hpp"

#include <iomanip>
#include <sstream>

namespace ddbar {

CheckSet CheckSet::parse(const std::string& list) {
    CheckSet c{false, false, false, false, false};
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        if (item == "all") return CheckSet{};
        if (item == "lemma")
            c.lemma = true;
        else if (item == "inequalities")
            c.inequalities = true;
        else if (item == "hodge")
            c.hodge = true;
        else if (item == "spectral")
            c.spectral = true;
        else if (item == "sequences")
            c.sequences = true;
        else
            throw ParseError("unknown check '" + item + "'");
    }
    if (!c.any()) throw ParseError("at least one check is required");
    return c;
}

HodgeReport compute_hodge_report(const Bicomplex& x, const MetricData& g,
                                 const ExteriorModel* model) {
    HodgeReport h;
    h.ker_bc = Grid(x.p_max(), x.q_max());
    h.ker_aeppli = Grid(x.p_max(), x.q_max());
    for (int p = 0; p <= x.p_max(); ++p)
        for (int q = 0; q <= x.q_max(); ++q) {
            int kb = laplacian_kernel_dim(x, g, LaplacianFlavor::bc, p, q);
            int ka = laplacian_kernel_dim(x, g, LaplacianFlavor::aeppli, p, q);
            h.ker_bc.set(p, q, kb);
            h.ker_aeppli.set(p, q, ka);
            if (kb != h_bc(x, p, q) || ka != h_aeppli(x, p, q)) h.matches_h = false;
            if (!harmonic_characterization_check(x, g, p, q)) h.harmonic_ok = false;
        }
    if (model) {
        StarOperator star = build_star(*model, g);
        int n = model->n;
        bool swap_ok = true;
        for (int p = 0; p <= n; ++p)
            for (int q = 0; q <= n; ++q) {
                Subspace hbc = kernel_basis(laplacian(x, g, LaplacianFlavor::bc, p, q));
                Subspace ha =
                    kernel_basis(laplacian(x, g, LaplacianFlavor::aeppli, n - q, n - p));
                if (apply(star.at(p, q), hbc) != ha) swap_ok = false;
            }
        h.star_kernel_swap = swap_ok;

        bool dual_ok = true;
        TotalComplex t(x);
        std::vector<int> b(static_cast<std::size_t>(t.k_max() + 1));
        for (int k = 0; k <= t.k_max(); ++k) b[static_cast<std::size_t>(k)] = betti(x, k);
        VarouchasDims var = varouchas_dims(x);
        Grid hd(n, n);
        for (int p = 0; p <= n; ++p)
            for (int q = 0; q <= n; ++q) hd.set(p, q, h_line(x, Flavor::dolbeault, p, q));
        for (int p = 0; p <= n && dual_ok; ++p)
            for (int q = 0; q <= n && dual_ok; ++q) {
                if (h.ker_bc.at(p, q) != h.ker_aeppli.at(n - q, n - p)) dual_ok = false;
                if (var.a.at(p, q) != var.f.at(n - q, n - p)) dual_ok = false;
                if (var.c.at(p, q) != var.d.at(n - p, n - q)) dual_ok = false;
            }
        for (int k = 0; k <= 2 * n && dual_ok; ++k) {
            if (b[static_cast<std::size_t>(k)] != b[static_cast<std::size_t>(2 * n - k)])
                dual_ok = false;
            if (hd.total(k) != hd.total(2 * n - k)) dual_ok = false;
        }
        h.star_dualities = dual_ok;
    }
    return h;
}

namespace {

void render_k_table(std::ostringstream& os, const CohomologyReport& rep, int k_lo, int k_hi) {
    auto row = [&](const std::string& label, auto value) {
        os << "  " << std::left << std::setw(9) << label << "|";
        for (int k = k_lo; k <= k_hi; ++k) os << std::right << std::setw(5) << value(k);
        os << "\n";
    };
    os << "  " << std::left << std::setw(9) << "k" << "|";
    for (int k = k_lo; k <= k_hi; ++k) os << std::right << std::setw(5) << k;
    os << "\n";
    row("h_dbar", [&](int k) { return rep.hk(Flavor::dolbeault, k); });
    row("h_bc", [&](int k) { return rep.hk(Flavor::bott_chern, k); });
    row("h_a", [&](int k) { return rep.hk(Flavor::aeppli, k); });
    row("b", [&](int k) { return rep.betti_at(k); });
}

std::string tristate(const std::optional<bool>& v) {
    if (!v) return "n/a";
    return *v ? "true" : "false";
}

void render_grid(std::ostringstream& os, const Grid& g, const std::string& label) {
    os << "  " << label << " (rows p = 0.." << g.p_max() << ", cols q = 0.." << g.q_max()
       << "):\n";
    for (int p = 0; p <= g.p_max(); ++p) {
        os << "    ";
        for (int q = 0; q <= g.q_max(); ++q) os << std::setw(4) << g.at(p, q);
        os << "\n";
    }
}

}  // namespace

std::string render_table(const CohomologyReport& rep, const CheckSet& checks,
                         const std::string& input_name, const HodgeReport* hodge) {
    std::ostringstream os;
    os << "input: " << input_name;
    if (rep.n) os << " (n = " << *rep.n << ")";
    os << ", conjugation: " << (rep.has_conjugation ? "yes" : "no") << "\n\n";

    // Table-1 layout: models hide the trivial k = 0 and k = 2n columns.
    int k_lo = rep.n ? 1 : 0;
    int k_hi = rep.n ? 2 * *rep.n - 1 : rep.k_max();
    if (k_hi < k_lo) {
        k_lo = 0;
        k_hi = std::max(rep.k_max(), 0);
    }
    render_k_table(os, rep, k_lo, k_hi);
    os << "\n";

    render_grid(os, rep.h_dolbeault, "h^{p,q}_dbar");
    render_grid(os, rep.h_bc, "h^{p,q}_bc");
    render_grid(os, rep.h_aeppli, "h^{p,q}_a");
    os << "\n";

    if (checks.inequalities) {
        os << "inequalities:\n";
        for (int k = k_lo; k <= k_hi; ++k) {
            int lhs = rep.hk(Flavor::bott_chern, k) + rep.hk(Flavor::aeppli, k);
            int rhs = 2 * rep.betti_at(k);
            os << "  k=" << k << ": h_bc+h_a = " << lhs << " >= 2b = " << rhs
               << (lhs > rhs ? "  (strict)" : "") << "\n";
        }
        os << "  frolicher h_dbar >= b: " << (rep.inequalities.frolicher_all_k ? "true" : "false")
           << ", pointwise (conjugation): " << tristate(rep.inequalities.pointwise_all) << "\n";
    }
    if (checks.sequences) {
        os << "varouchas:\n";
        os << "  a^k:";
        for (int k = k_lo; k <= k_hi; ++k) os << " " << rep.var.a.total(k);
        os << "   f^k:";
        for (int k = k_lo; k <= k_hi; ++k) os << " " << rep.var.f.total(k);
        os << "\n  sequences_ok: " << (rep.sequences_ok ? "true" : "false")
           << ", structural_ok: " << (rep.structural_ok ? "true" : "false")
           << ", ek_recursion_ok: " << (rep.ek_recursion_ok ? "true" : "false")
           << ", symmetry_ok: " << tristate(rep.symmetry_ok)
           << ", excess_identity_ok: " << tristate(rep.excess_identity_ok) << "\n";
    }
    if (checks.spectral && !rep.pages.empty()) {
        os << "spectral (E_r totals per k):\n";
        for (std::size_t r = 0; r < rep.pages.size(); ++r) {
            os << "  r=" << (r + 1) << ":";
            for (int k = 0; k <= rep.k_max(); ++k) os << std::setw(4) << rep.pages[r].total(k);
            os << "\n";
            if (r + 1 < rep.pages.size() && rep.pages[r] == rep.pages[r + 1] &&
                rep.pages[r + 1] == rep.pages.back()) {
                os << "  (stable)\n";
                break;
            }
        }
        os << "  e1_equals_einf: " << tristate(rep.e1_equals_einf) << "\n";
    }
    if (checks.lemma) {
        os << "lemma:\n";
        os << "  lemma_direct: " << tristate(rep.lemma)
           << ", bc_equality_all_k: " << (rep.bc_equality_all_k ? "true" : "false")
           << ", bc_surjectivity_ok: " << tristate(rep.bc_surjectivity_ok) << "\n";
        bool listed = false;
        for (const auto& e : rep.maps)
            if (e.map == "bc_to_dr" && !e.injective && e.domain_dim > 0) {
                if (!listed) os << "  bc_to_dr not injective at:";
                listed = true;
                os << " (" << e.p << "," << e.q << ")";
            }
        if (listed) os << "\n";
    }
    if (checks.hodge && hodge) {
        os << "hodge:\n";
        os << "  laplacian kernels match h_bc/h_a: " << (hodge->matches_h ? "true" : "false")
           << ", harmonic characterization: " << (hodge->harmonic_ok ? "true" : "false") << "\n";
        if (hodge->star_kernel_swap)
            os << "  star kernel swap: " << tristate(hodge->star_kernel_swap)
               << ", star dualities: " << tristate(hodge->star_dualities) << "\n";
    }

    os << "verdicts: lemma_direct=" << tristate(rep.lemma)
       << " bc_equality_all_k=" << (rep.bc_equality_all_k ? "true" : "false")
       << " e1_equals_einf=" << tristate(rep.e1_equals_einf)
       << " frolicher_equality_all_k=" << (rep.frolicher_equality_all_k ? "true" : "false")
       << " bc_inequality_pointwise_strict_somewhere="
       << (rep.inequalities.pointwise_strict_at.empty() ? "false" : "true")
       << " symmetry_ok=" << tristate(rep.symmetry_ok)
       << " sequences_ok=" << (rep.sequences_ok ? "true" : "false") << "\n";
    return os.str();
}

}  // namespace ddbar
