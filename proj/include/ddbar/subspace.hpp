#pragma once

#include <cstddef>
#include <vector>

#include "ddbar/matrix.hpp"

namespace ddbar {

/// A subspace of Q(i)^n, held as a basis in reduced row-echelon form.
/// The reduced form is unique, so equal subspaces compare equal as data.
class Subspace {
  public:
    Subspace() = default;

    static Subspace zero(std::size_t ambient_dim);
    static Subspace full(std::size_t ambient_dim);
    /// Span of the rows of `generators` (need not be independent).
    static Subspace span(std::size_t ambient_dim, const Matrix& generators);

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.rows(); }
    const Matrix& basis() const { return basis_; }

    bool contains(const std::vector<GaussianRational>& v) const;
    bool contains(const Subspace& other) const;

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

  private:
    std::size_t ambient_ = 0;
    Matrix basis_;  // dim() x ambient_, reduced row-echelon, no zero rows
};

/// {v : m v = 0} as a subspace of the domain. dim = cols - rank.
Subspace kernel_basis(const Matrix& m);

/// Column space of m as a subspace of the codomain. dim = rank.
Subspace image_basis(const Matrix& m);

/// Smallest subspace containing both. Throws DimensionError on ambient
/// mismatch.
Subspace subspace_sum(const Subspace& u, const Subspace& v);

/// Exact intersection via the left-kernel of the stacked bases (solve for
/// coefficients expressing a common vector).
Subspace subspace_intersect(const Subspace& u, const Subspace& v);

/// dim u - dim w, after checking w <= u vector by vector. Throws
/// ContainmentError otherwise.
std::size_t quotient_dim(const Subspace& u, const Subspace& w);

/// Functionals vanishing on s: {f : f . v = 0 for all v in s}, as a
/// subspace of the (plain, non-sesquilinear) dual coordinates.
Subspace annihilator(const Subspace& s);

/// {x : m x in s}. m maps F^n -> F^k, s a subspace of F^k.
Subspace preimage(const Matrix& m, const Subspace& s);

/// Image of a subspace under a linear map: span of m v over basis vectors v.
Subspace apply(const Matrix& m, const Subspace& s);

}  // namespace ddbar
