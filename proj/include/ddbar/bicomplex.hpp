#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ddbar/matrix.hpp"
#include "ddbar/subspace.hpp"

namespace ddbar {

/// A failed double-complex identity, located at a bidegree.
struct Violation {
    int p = 0;
    int q = 0;
    std::string what;
};

/// Bounded double complex over Q(i): bigraded spaces V^{p,q} for
/// 0 <= p <= p_max, 0 <= q <= q_max, with del of bidegree (1,0) and delbar
/// of bidegree (0,1). Anticommutation is baked into the stored matrices, so
/// d = del + delbar squares to zero once validate() passes.
///
/// Optionally carries a conjugation structure sigma(v) = C_{p,q} conj(v):
/// V^{p,q} -> V^{q,p}, and a complex-dimension tag n used by duality checks.
///
/// Values are immutable after construction; all operations on them are pure.
class Bicomplex {
  public:
    Bicomplex() = default;
    Bicomplex(int p_max, int q_max, std::vector<int> dims, std::vector<Matrix> del,
              std::vector<Matrix> delbar, std::optional<std::vector<Matrix>> conj = std::nullopt,
              std::optional<int> n = std::nullopt);

    int p_max() const { return p_max_; }
    int q_max() const { return q_max_; }
    int k_max() const { return p_max_ + q_max_; }
    std::optional<int> n() const { return n_; }
    bool has_conjugation() const { return conj_.has_value(); }

    /// dim V^{p,q}; zero outside the support rectangle.
    int dim(int p, int q) const;

    /// del_{p,q}: V^{p,q} -> V^{p+1,q}; a correctly shaped zero matrix
    /// outside the support.
    Matrix del(int p, int q) const;
    /// delbar_{p,q}: V^{p,q} -> V^{p,q+1}.
    Matrix delbar(int p, int q) const;
    /// del delbar: V^{p,q} -> V^{p+1,q+1}.
    Matrix del_delbar(int p, int q) const { return del(p, q + 1) * delbar(p, q); }
    /// C_{p,q} of sigma(v) = C conj(v): V^{p,q} -> V^{q,p}. Throws
    /// ModelError when no conjugation structure is present.
    Matrix conj_matrix(int p, int q) const;

    /// Total dimension of all V^{p,q}.
    int total_dim() const;

  private:
    friend class TotalComplex;
    bool in_range(int p, int q) const {
        return p >= 0 && p <= p_max_ && q >= 0 && q <= q_max_;
    }
    std::size_t idx(int p, int q) const {
        return static_cast<std::size_t>(p) * static_cast<std::size_t>(q_max_ + 1) +
               static_cast<std::size_t>(q);
    }

    int p_max_ = -1;  // empty complex: no bidegrees at all
    int q_max_ = -1;
    std::vector<int> dims_;
    std::vector<Matrix> del_;
    std::vector<Matrix> delbar_;
    std::optional<std::vector<Matrix>> conj_;
    std::optional<int> n_;
};

/// Checks every Bicomplex invariant; returns one entry per failed identity.
/// Violations are data, not failures.
std::vector<Violation> validate(const Bicomplex& x);

/// View of the total complex Tot^k = (+)_{p+q=k} V^{p,q} with d = del+delbar,
/// blocks ordered by ascending p. Handles out-of-range k as zero spaces.
class TotalComplex {
  public:
    explicit TotalComplex(const Bicomplex& x) : x_(&x) {}

    int k_max() const { return x_->p_max() + x_->q_max(); }
    int dim(int k) const;
    /// Blocks (p, q) with p+q = k and dim > 0 is not required; all in-range
    /// bidegrees on the antidiagonal are listed, ascending p.
    std::vector<std::pair<int, int>> blocks(int k) const;
    /// Coordinate offset of block (p, k-p) inside Tot^k.
    int offset(int k, int p) const;

    /// d_k: Tot^k -> Tot^{k+1}.
    Matrix d(int k) const;

    /// Embed a subspace of V^{p,q} into Tot^{p+q} by block position.
    Subspace embed(int p, int q, const Subspace& s) const;
    /// Coordinate subspace of Tot^k spanned by the blocks with p' >= p
    /// (the column filtration F^p).
    Subspace filtration(int p, int k) const;
    /// Intersect s (a subspace of Tot^k) with the (p,q) block and restrict
    /// to block coordinates.
    Subspace block_slice(const Subspace& s, int p, int q) const;

  private:
    const Bicomplex* x_;
};

}  // namespace ddbar
