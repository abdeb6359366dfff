#include "ddbar/subspace.hpp"

#include <string>

namespace ddbar {

Subspace Subspace::zero(std::size_t ambient_dim) {
    Subspace s;
    s.ambient_ = ambient_dim;
    s.basis_ = Matrix(0, ambient_dim);
    return s;
}

Subspace Subspace::full(std::size_t ambient_dim) {
    Subspace s;
    s.ambient_ = ambient_dim;
    s.basis_ = Matrix::identity(ambient_dim);
    return s;
}

Subspace Subspace::span(std::size_t ambient_dim, const Matrix& generators) {
    if (generators.rows() != 0 && generators.cols() != ambient_dim)
        throw DimensionError("span: generator length != ambient dimension");
    RrefResult r = rref(generators);
    Subspace s;
    s.ambient_ = ambient_dim;
    s.basis_ = Matrix(r.rank, ambient_dim);
    for (std::size_t i = 0; i < r.rank; ++i) s.basis_.set_row(i, r.reduced.row(i));
    return s;
}

bool Subspace::contains(const std::vector<GaussianRational>& v) const {
    if (v.size() != ambient_) throw DimensionError("contains: vector length mismatch");
    // Reduce v against the echelon basis; membership iff the residual is 0.
    std::vector<GaussianRational> residual = v;
    for (std::size_t r = 0; r < basis_.rows(); ++r) {
        std::size_t lead = 0;
        while (lead < ambient_ && basis_.at(r, lead).is_zero()) ++lead;
        if (lead == ambient_) continue;
        if (!residual[lead].is_zero()) {
            GaussianRational f = residual[lead];  // pivot entries are 1
            for (std::size_t c = lead; c < ambient_; ++c) residual[c] -= f * basis_.at(r, c);
        }
    }
    for (const auto& x : residual)
        if (!x.is_zero()) return false;
    return true;
}

bool Subspace::contains(const Subspace& other) const {
    if (other.ambient_ != ambient_) throw DimensionError("contains: ambient mismatch");
    for (std::size_t r = 0; r < other.basis_.rows(); ++r)
        if (!contains(other.basis_.row(r))) return false;
    return true;
}

Subspace kernel_basis(const Matrix& m) {
    RrefResult r = rref(m);
    std::size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (std::size_t c : r.pivot_cols) is_pivot[c] = true;

    Matrix gens(n - r.rank, n);
    std::size_t row = 0;
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        gens.at(row, free) = GaussianRational(1);
        for (std::size_t pr = 0; pr < r.rank; ++pr)
            gens.at(row, r.pivot_cols[pr]) = -r.reduced.at(pr, free);
        ++row;
    }
    return Subspace::span(n, gens);
}

Subspace image_basis(const Matrix& m) { return Subspace::span(m.rows(), m.transpose()); }

Subspace subspace_sum(const Subspace& u, const Subspace& v) {
    if (u.ambient_dim() != v.ambient_dim()) throw DimensionError("subspace_sum: ambient mismatch");
    return Subspace::span(u.ambient_dim(), Matrix::vstack(u.basis(), v.basis()));
}

Subspace subspace_intersect(const Subspace& u, const Subspace& v) {
    if (u.ambient_dim() != v.ambient_dim())
        throw DimensionError("subspace_intersect: ambient mismatch");
    // Coefficients (c, d) with c.U = d.V give the common vectors c.U.
    Matrix stacked = Matrix::vstack(u.basis(), v.basis());
    Subspace coeffs = kernel_basis(stacked.transpose());
    Matrix gens(coeffs.dim(), u.ambient_dim());
    for (std::size_t r = 0; r < coeffs.dim(); ++r) {
        std::vector<GaussianRational> w(u.ambient_dim());
        for (std::size_t i = 0; i < u.dim(); ++i) {
            const GaussianRational& ci = coeffs.basis().at(r, i);
            if (ci.is_zero()) continue;
            for (std::size_t c = 0; c < u.ambient_dim(); ++c) w[c] += ci * u.basis().at(i, c);
        }
        gens.set_row(r, w);
    }
    return Subspace::span(u.ambient_dim(), gens);
}

std::size_t quotient_dim(const Subspace& u, const Subspace& w) {
    if (u.ambient_dim() != w.ambient_dim()) throw DimensionError("quotient_dim: ambient mismatch");
    if (!u.contains(w))
        throw ContainmentError("quotient_dim: denominator not contained in numerator (dim " +
                               std::to_string(w.dim()) + " vs " + std::to_string(u.dim()) + ")");
    return u.dim() - w.dim();
}

Subspace annihilator(const Subspace& s) { return kernel_basis(s.basis()); }

Subspace preimage(const Matrix& m, const Subspace& s) {
    if (m.rows() != s.ambient_dim()) throw DimensionError("preimage: codomain mismatch");
    Subspace ann = annihilator(s);
    return kernel_basis(ann.basis() * m);
}

Subspace apply(const Matrix& m, const Subspace& s) {
    if (m.cols() != s.ambient_dim()) throw DimensionError("apply: domain mismatch");
    return Subspace::span(m.rows(), (m * s.basis().transpose()).transpose());
}

}  // namespace ddbar
