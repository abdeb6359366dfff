#include "ddbar/bicomplex.hpp"

#include <sstream>

namespace ddbar {

Bicomplex::Bicomplex(int p_max, int q_max, std::vector<int> dims, std::vector<Matrix> del,
                     std::vector<Matrix> delbar, std::optional<std::vector<Matrix>> conj,
                     std::optional<int> n)
    : p_max_(p_max),
      q_max_(q_max),
      dims_(std::move(dims)),
      del_(std::move(del)),
      delbar_(std::move(delbar)),
      conj_(std::move(conj)),
      n_(n) {
    if (p_max_ < -1 || q_max_ < -1) throw DimensionError("negative bidegree bounds");
    std::size_t cells = static_cast<std::size_t>(p_max_ + 1) * static_cast<std::size_t>(q_max_ + 1);
    if (dims_.size() != cells || del_.size() != cells || delbar_.size() != cells)
        throw DimensionError("bicomplex: table sizes do not match bounds");
    if (conj_ && conj_->size() != cells) throw DimensionError("bicomplex: conj table size mismatch");
    for (int d : dims_)
        if (d < 0) throw DimensionError("bicomplex: negative dimension");
    for (int p = 0; p <= p_max_; ++p)
        for (int q = 0; q <= q_max_; ++q) {
            const Matrix& dl = del_[idx(p, q)];
            if (dl.rows() != static_cast<std::size_t>(dim(p + 1, q)) ||
                dl.cols() != static_cast<std::size_t>(dim(p, q)))
                throw DimensionError("bicomplex: del shape mismatch at (" + std::to_string(p) +
                                     "," + std::to_string(q) + ")");
            const Matrix& db = delbar_[idx(p, q)];
            if (db.rows() != static_cast<std::size_t>(dim(p, q + 1)) ||
                db.cols() != static_cast<std::size_t>(dim(p, q)))
                throw DimensionError("bicomplex: delbar shape mismatch at (" + std::to_string(p) +
                                     "," + std::to_string(q) + ")");
            if (conj_) {
                const Matrix& c = (*conj_)[idx(p, q)];
                if (c.rows() != static_cast<std::size_t>(dim(q, p)) ||
                    c.cols() != static_cast<std::size_t>(dim(p, q)))
                    throw DimensionError("bicomplex: conj shape mismatch at (" + std::to_string(p) +
                                         "," + std::to_string(q) + ")");
            }
        }
}

int Bicomplex::dim(int p, int q) const {
    if (!in_range(p, q)) return 0;
    return dims_[idx(p, q)];
}

Matrix Bicomplex::del(int p, int q) const {
    if (!in_range(p, q)) return Matrix::zero(static_cast<std::size_t>(dim(p + 1, q)), 0);
    return del_[idx(p, q)];
}

Matrix Bicomplex::delbar(int p, int q) const {
    if (!in_range(p, q)) return Matrix::zero(static_cast<std::size_t>(dim(p, q + 1)), 0);
    return delbar_[idx(p, q)];
}

Matrix Bicomplex::conj_matrix(int p, int q) const {
    if (!conj_) throw ModelError("no conjugation structure");
    if (!in_range(p, q)) return Matrix::zero(static_cast<std::size_t>(dim(q, p)), 0);
    return (*conj_)[idx(p, q)];
}

int Bicomplex::total_dim() const {
    int t = 0;
    for (int d : dims_) t += d;
    return t;
}

std::vector<Violation> validate(const Bicomplex& x) {
    std::vector<Violation> out;
    auto note = [&out](int p, int q, const std::string& what) { out.push_back({p, q, what}); };

    for (int p = 0; p <= x.p_max(); ++p)
        for (int q = 0; q <= x.q_max(); ++q) {
            if (x.n() && (p > *x.n() || q > *x.n()) && x.dim(p, q) != 0)
                note(p, q, "dim nonzero beyond complex dimension n");
            if (!(x.del(p + 1, q) * x.del(p, q)).is_zero()) note(p, q, "del.del != 0");
            if (!(x.delbar(p, q + 1) * x.delbar(p, q)).is_zero()) note(p, q, "delbar.delbar != 0");
            Matrix anti = x.del(p, q + 1) * x.delbar(p, q) + x.delbar(p + 1, q) * x.del(p, q);
            if (!anti.is_zero()) note(p, q, "del.delbar + delbar.del != 0");
            if (x.has_conjugation()) {
                Matrix c = x.conj_matrix(p, q);
                if (!(x.conj_matrix(q, p) * c.conjugate()).is_identity())
                    note(p, q, "sigma^2 != id");
                if (x.dim(q, p) != x.dim(p, q) ||
                    rank(c) != static_cast<std::size_t>(x.dim(p, q)))
                    note(p, q, "conjugation not bijective");
                // sigma del = delbar sigma, i.e. C_{p+1,q} conj(del) = delbar C.
                if (x.conj_matrix(p + 1, q) * x.del(p, q).conjugate() !=
                    x.delbar(q, p) * c)
                    note(p, q, "sigma does not intertwine del with delbar");
            }
        }
    return out;
}

int TotalComplex::dim(int k) const {
    int t = 0;
    for (auto [p, q] : blocks(k)) t += x_->dim(p, q);
    return t;
}

std::vector<std::pair<int, int>> TotalComplex::blocks(int k) const {
    std::vector<std::pair<int, int>> out;
    for (int p = std::max(0, k - x_->q_max()); p <= std::min(x_->p_max(), k); ++p)
        out.emplace_back(p, k - p);
    return out;
}

int TotalComplex::offset(int k, int p) const {
    int off = 0;
    for (auto [bp, bq] : blocks(k)) {
        if (bp == p) return off;
        off += x_->dim(bp, bq);
    }
    throw DimensionError("offset: block (" + std::to_string(p) + "," + std::to_string(k - p) +
                         ") not on antidiagonal " + std::to_string(k));
}

Matrix TotalComplex::d(int k) const {
    Matrix m(static_cast<std::size_t>(dim(k + 1)), static_cast<std::size_t>(dim(k)));
    for (auto [p, q] : blocks(k)) {
        int col0 = offset(k, p);
        // del component into (p+1, q).
        if (p + 1 <= x_->p_max() && x_->dim(p + 1, q) > 0) {
            int row0 = offset(k + 1, p + 1);
            Matrix blk = x_->del(p, q);
            for (std::size_t r = 0; r < blk.rows(); ++r)
                for (std::size_t c = 0; c < blk.cols(); ++c)
                    m.at(static_cast<std::size_t>(row0) + r, static_cast<std::size_t>(col0) + c) =
                        blk.at(r, c);
        }
        // delbar component into (p, q+1).
        if (q + 1 <= x_->q_max() && x_->dim(p, q + 1) > 0) {
            int row0 = offset(k + 1, p);
            Matrix blk = x_->delbar(p, q);
            for (std::size_t r = 0; r < blk.rows(); ++r)
                for (std::size_t c = 0; c < blk.cols(); ++c)
                    m.at(static_cast<std::size_t>(row0) + r, static_cast<std::size_t>(col0) + c) =
                        blk.at(r, c);
        }
    }
    return m;
}

Subspace TotalComplex::embed(int p, int q, const Subspace& s) const {
    if (s.ambient_dim() != static_cast<std::size_t>(x_->dim(p, q)))
        throw DimensionError("embed: subspace not in V^{p,q}");
    int k = p + q;
    int off = offset(k, p);
    Matrix gens(s.dim(), static_cast<std::size_t>(dim(k)));
    for (std::size_t r = 0; r < s.dim(); ++r)
        for (std::size_t c = 0; c < s.ambient_dim(); ++c)
            gens.at(r, static_cast<std::size_t>(off) + c) = s.basis().at(r, c);
    return Subspace::span(static_cast<std::size_t>(dim(k)), gens);
}

Subspace TotalComplex::filtration(int p, int k) const {
    int rows = 0;
    for (auto [bp, bq] : blocks(k))
        if (bp >= p) rows += x_->dim(bp, bq);
    Matrix gens(static_cast<std::size_t>(rows), static_cast<std::size_t>(dim(k)));
    int r = 0;
    for (auto [bp, bq] : blocks(k)) {
        if (bp < p) continue;
        int off = offset(k, bp);
        for (int i = 0; i < x_->dim(bp, bq); ++i, ++r)
            gens.at(static_cast<std::size_t>(r), static_cast<std::size_t>(off + i)) =
                GaussianRational(1);
    }
    return Subspace::span(static_cast<std::size_t>(dim(k)), gens);
}

Subspace TotalComplex::block_slice(const Subspace& s, int p, int q) const {
    int k = p + q;
    if (s.ambient_dim() != static_cast<std::size_t>(dim(k)))
        throw DimensionError("block_slice: subspace not in Tot^k");
    // Intersect with the coordinate block, then drop the other coordinates.
    Subspace block = embed(p, q, Subspace::full(static_cast<std::size_t>(x_->dim(p, q))));
    Subspace inter = subspace_intersect(s, block);
    int off = offset(k, p);
    Matrix gens(inter.dim(), static_cast<std::size_t>(x_->dim(p, q)));
    for (std::size_t r = 0; r < inter.dim(); ++r)
        for (int c = 0; c < x_->dim(p, q); ++c)
            gens.at(r, static_cast<std::size_t>(c)) =
                inter.basis().at(r, static_cast<std::size_t>(off + c));
    return Subspace::span(static_cast<std::size_t>(x_->dim(p, q)), gens);
}

}  // namespace ddbar
