#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ddbar/bicomplex.hpp"

namespace ddbar {

/// Integer table indexed by bidegree; reads as 0 outside the support.
class Grid {
  public:
    Grid() = default;
    Grid(int p_max, int q_max)
        : p_max_(p_max),
          q_max_(q_max),
          v_(static_cast<std::size_t>(p_max + 1) * static_cast<std::size_t>(q_max + 1), 0) {}

    int p_max() const { return p_max_; }
    int q_max() const { return q_max_; }

    int at(int p, int q) const {
        if (p < 0 || p > p_max_ || q < 0 || q > q_max_) return 0;
        return v_[idx(p, q)];
    }
    void set(int p, int q, int value) { v_[idx(p, q)] = value; }

    /// Antidiagonal total over p+q = k; 0 for k outside range.
    int total(int k) const {
        int t = 0;
        for (int p = 0; p <= p_max_; ++p) t += at(p, k - p);
        return t;
    }

    friend bool operator==(const Grid& a, const Grid& b) {
        return a.p_max_ == b.p_max_ && a.q_max_ == b.q_max_ && a.v_ == b.v_;
    }

  private:
    std::size_t idx(int p, int q) const {
        return static_cast<std::size_t>(p) * static_cast<std::size_t>(q_max_ + 1) +
               static_cast<std::size_t>(q);
    }
    int p_max_ = -1;
    int q_max_ = -1;
    std::vector<int> v_;
};

enum class Flavor { dolbeault, del, bott_chern, aeppli };

std::string flavor_name(Flavor f);

// Per-bidegree building blocks (subspaces of V^{p,q}).
Subspace ker_del(const Bicomplex& x, int p, int q);
Subspace ker_delbar(const Bicomplex& x, int p, int q);
Subspace im_del(const Bicomplex& x, int p, int q);      // image of del from (p-1,q)
Subspace im_delbar(const Bicomplex& x, int p, int q);   // image of delbar from (p,q-1)
Subspace ker_del_delbar(const Bicomplex& x, int p, int q);
Subspace im_del_delbar(const Bicomplex& x, int p, int q);  // image from (p-1,q-1)

/// Row cohomology: dolbeault = ker delbar / im delbar, del = ker del / im del.
int h_line(const Bicomplex& x, Flavor flavor, int p, int q);

/// Bott-Chern:  (ker del  ^  ker delbar) / im del.delbar.
int h_bc(const Bicomplex& x, int p, int q);

/// Aeppli:  ker del.delbar / (im del + im delbar).
int h_aeppli(const Bicomplex& x, int p, int q);

/// dim H^k of the total complex (d = del + delbar).
int betti(const Bicomplex& x, int k);

/// The six Varouchas dimension tables.
struct VarouchasDims {
    Grid a, b, c, d, e, f;
};

VarouchasDims varouchas_dims(const Bicomplex& x);

/// Alternating sums of the two Varouchas exact sequences vanish at every
/// bidegree:  a - b + h_dbar - h_A + c = 0  and  d - h_BC + h_dbar - e + f = 0.
bool check_sequences(const VarouchasDims& v, const Grid& h_dolbeault, const Grid& h_bc,
                     const Grid& h_aeppli);

/// c^{p,q} = d^{p,q+1} and e^{p,q} = b^{p+1,q}, valid for any double complex.
bool check_structural_equalities(const VarouchasDims& v);

/// Conjugation-induced equalities: a, f symmetric; d^{p,q} = b^{q,p};
/// e^{p,q} = c^{q,p}; h_BC symmetric; h^{p,q}_dbar = h^{q,p}_del.
/// Throws ModelError when x has no conjugation structure.
bool check_conjugation_symmetries(const Bicomplex& x, const VarouchasDims& v,
                                  const Grid& h_dolbeault, const Grid& h_del, const Grid& h_bc,
                                  const Grid& h_aeppli);

/// One row of the natural-map table. Bigraded maps carry (p,q); the
/// total-degree maps (to/from de Rham) carry k and p = q = -1.
struct MapRankEntry {
    std::string map;
    int p = -1;
    int q = -1;
    int k = -1;
    int domain_dim = 0;
    int codomain_dim = 0;
    int rank = 0;
    bool injective = false;
    bool surjective = false;
};

/// Ranks of the identity-induced maps of the fundamental diagram:
/// bc_to_del, bc_to_delbar, bc_to_dr (per bidegree), del_to_a, delbar_to_a,
/// plus the total-degree bc_to_dr_total and dr_to_a_total.
std::vector<MapRankEntry> natural_map_ranks(const Bicomplex& x);

/// del-delbar-Lemma: ker del ^ ker delbar ^ im d = im del.delbar inside every
/// total degree; equivalently (+)_{p+q=k} H^{p,q}_BC -> H^k_dR is injective
/// for every k.
bool lemma_direct(const Bicomplex& x);

struct InequalityVerdicts {
    bool frolicher_all_k = true;   // h^k_dbar >= b_k
    std::vector<int> frolicher_strict_at;
    bool bc_total_all_k = true;    // h^k_BC + h^k_A >= 2 b_k
    std::vector<int> bc_total_strict_at;
    std::optional<bool> pointwise_all;  // h^{p,q}_BC + h^{p,q}_A >= h^{p,q}_dbar + h^{p,q}_del,
                                        // asserted only under conjugation
    std::vector<std::pair<int, int>> pointwise_strict_at;
};

/// Full cohomology report; assembled by compute_report.
struct CohomologyReport {
    int p_max = -1;
    int q_max = -1;
    std::optional<int> n;
    bool has_conjugation = false;

    Grid h_dolbeault, h_del, h_bc, h_aeppli;
    std::vector<int> betti;  // index k, 0..p_max+q_max
    VarouchasDims var;

    // Spectral pages, 1-indexed by r; pages.back() is the stable page.
    int r_max = 0;
    std::vector<Grid> pages;

    std::vector<MapRankEntry> maps;

    bool sequences_ok = true;
    bool structural_ok = true;
    bool ek_recursion_ok = true;
    std::optional<bool> symmetry_ok;         // conjugation only
    std::optional<bool> excess_identity_ok;  // conjugation only
    InequalityVerdicts inequalities;
    bool bc_equality_all_k = true;        // h^k_BC + h^k_A = 2 b_k for all k
    bool frolicher_equality_all_k = true;  // h^k_dbar = b_k for all k
    std::optional<bool> lemma;
    std::optional<bool> bc_surjectivity_ok;
    std::optional<bool> e1_equals_einf;

    const Grid& h(Flavor f) const;
    int hk(Flavor f, int k) const { return h(f).total(k); }
    int betti_at(int k) const {
        return (k >= 0 && k < static_cast<int>(betti.size())) ? betti[k] : 0;
    }
    int k_max() const { return p_max + q_max; }
};

InequalityVerdicts inequality_verdicts(const CohomologyReport& rep);

/// h^k_BC + h^k_A = 2 b_k at every k.
bool equality_characterization(const CohomologyReport& rep);

/// h^k_BC + h^k_A = 2 h^k_dbar + a^k + f^k for every k, and the pointwise
/// chain h^{p,q}_BC + h^{q,p}_A = h^{p,q}_dbar + h^{p,q}_del + f^{p,q} + a^{p,q}.
/// Throws ModelError without conjugation.
bool excess_identity_check(const CohomologyReport& rep);

/// e^k = (h^k_dbar - h^k_BC) + f^k + c^{k-1}
///     = (h^k_dbar - h^k_BC) - (h^{k-1}_dbar - h^{k-1}_A) + f^k - a^{k-1} + e^{k-2}.
bool ek_recursion_check(const CohomologyReport& rep);

/// For every k with a^{k+1} = 0 the total map (+) H^{p,q}_BC -> H^k_dR is
/// surjective (vacuously true when the hypothesis fails).
bool bc_surjectivity_check(const Bicomplex& x, const CohomologyReport& rep);

struct ReportOptions {
    bool lemma = true;     // lemma_direct, natural maps, bc_surjectivity
    bool spectral = true;  // E_r pages
    int r_max = -1;        // default p_max + q_max + 2
};

CohomologyReport compute_report(const Bicomplex& x, const ReportOptions& opts = {});

}  // namespace ddbar
