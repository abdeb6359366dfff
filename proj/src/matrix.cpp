#include "ddbar/matrix.hpp"

#include <sstream>
#include <utility>

namespace ddbar {

Matrix::Matrix(std::initializer_list<std::initializer_list<GaussianRational>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw DimensionError("ragged initializer for Matrix");
        for (const auto& v : r) data_.push_back(v);
    }
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = GaussianRational(1);
    return m;
}

bool Matrix::is_zero() const {
    for (const auto& v : data_)
        if (!v.is_zero()) return false;
    return true;
}

bool Matrix::is_identity() const {
    if (rows_ != cols_) return false;
    return *this == identity(rows_);
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

Matrix Matrix::conjugate() const {
    Matrix m(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] = data_[i].conj();
    return m;
}

std::vector<GaussianRational> Matrix::row(std::size_t r) const {
    return std::vector<GaussianRational>(data_.begin() + static_cast<long>(r * cols_),
                                         data_.begin() + static_cast<long>((r + 1) * cols_));
}

void Matrix::set_row(std::size_t r, const std::vector<GaussianRational>& v) {
    if (v.size() != cols_) throw DimensionError("set_row: wrong length");
    for (std::size_t c = 0; c < cols_; ++c) at(r, c) = v[c];
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw DimensionError("matrix product shape mismatch");
    Matrix out(rows_, o.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t k = 0; k < cols_; ++k) {
            const GaussianRational& a = at(r, k);
            if (a.is_zero()) continue;
            for (std::size_t c = 0; c < o.cols_; ++c) out.at(r, c) += a * o.at(k, c);
        }
    return out;
}

std::vector<GaussianRational> Matrix::operator*(const std::vector<GaussianRational>& v) const {
    if (cols_ != v.size()) throw DimensionError("matrix-vector shape mismatch");
    std::vector<GaussianRational> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (!at(r, c).is_zero()) out[r] += at(r, c) * v[c];
    return out;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix sum shape mismatch");
    Matrix out(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] + o.data_[i];
    return out;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix diff shape mismatch");
    Matrix out(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] - o.data_[i];
    return out;
}

Matrix Matrix::operator-() const {
    Matrix out(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = -data_[i];
    return out;
}

Matrix Matrix::operator*(const GaussianRational& s) const {
    Matrix out(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] * s;
    return out;
}

Matrix Matrix::vstack(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.cols() && a.rows() != 0 && b.rows() != 0)
        throw DimensionError("vstack: column mismatch");
    std::size_t cols = a.rows() == 0 ? b.cols() : a.cols();
    Matrix out(a.rows() + b.rows(), cols);
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < cols; ++c) out.at(r, c) = a.at(r, c);
    for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < cols; ++c) out.at(a.rows() + r, c) = b.at(r, c);
    return out;
}

Matrix Matrix::hstack(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) throw DimensionError("hstack: row mismatch");
    Matrix out(a.rows(), a.cols() + b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) out.at(r, c) = a.at(r, c);
        for (std::size_t c = 0; c < b.cols(); ++c) out.at(r, a.cols() + c) = b.at(r, c);
    }
    return out;
}

Matrix Matrix::inverse() const {
    if (rows_ != cols_) throw DimensionError("inverse of non-square matrix");
    RrefResult r = rref(hstack(*this, identity(rows_)));
    // Left half must reduce to the identity.
    for (std::size_t i = 0; i < rows_; ++i)
        if (r.reduced.at(i, i) != GaussianRational(1)) throw Error("singular matrix");
    Matrix out(rows_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < rows_; ++j) out.at(i, j) = r.reduced.at(i, rows_ + j);
    return out;
}

GaussianRational Matrix::determinant() const {
    if (rows_ != cols_) throw DimensionError("determinant of non-square matrix");
    Matrix m = *this;
    GaussianRational det(1);
    for (std::size_t col = 0; col < cols_; ++col) {
        std::size_t pivot = col;
        while (pivot < rows_ && m.at(pivot, col).is_zero()) ++pivot;
        if (pivot == rows_) return GaussianRational(0);
        if (pivot != col) {
            for (std::size_t c = 0; c < cols_; ++c) std::swap(m.at(pivot, c), m.at(col, c));
            det = -det;
        }
        det *= m.at(col, col);
        GaussianRational inv = m.at(col, col).inverse();
        for (std::size_t r = col + 1; r < rows_; ++r) {
            if (m.at(r, col).is_zero()) continue;
            GaussianRational f = m.at(r, col) * inv;
            for (std::size_t c = col; c < cols_; ++c) m.at(r, c) -= f * m.at(col, c);
        }
    }
    return det;
}

std::string Matrix::str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t r = 0; r < rows_; ++r) {
        os << (r ? "; " : "");
        for (std::size_t c = 0; c < cols_; ++c) os << (c ? " " : "") << at(r, c).str();
    }
    os << "]";
    return os.str();
}

RrefResult rref(const Matrix& m) {
    RrefResult out;
    out.reduced = m;
    Matrix& a = out.reduced;
    std::size_t lead = 0;
    for (std::size_t col = 0; col < a.cols() && lead < a.rows(); ++col) {
        std::size_t pivot = lead;
        while (pivot < a.rows() && a.at(pivot, col).is_zero()) ++pivot;
        if (pivot == a.rows()) continue;
        if (pivot != lead)
            for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a.at(pivot, c), a.at(lead, c));
        GaussianRational inv = a.at(lead, col).inverse();
        for (std::size_t c = col; c < a.cols(); ++c) a.at(lead, c) = a.at(lead, c) * inv;
        for (std::size_t r = 0; r < a.rows(); ++r) {
            if (r == lead || a.at(r, col).is_zero()) continue;
            GaussianRational f = a.at(r, col);
            for (std::size_t c = col; c < a.cols(); ++c) a.at(r, c) -= f * a.at(lead, c);
        }
        out.pivot_cols.push_back(col);
        ++lead;
    }
    out.rank = out.pivot_cols.size();
    return out;
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

}  // namespace ddbar
