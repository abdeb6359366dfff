#include "ddbar/hodge.hpp"

#include <bit>

namespace ddbar {

Matrix MetricData::gram(int p, int q, int dim) const {
    auto it = gram_.find({p, q});
    if (it == gram_.end()) return Matrix::identity(static_cast<std::size_t>(dim));
    if (it->second.rows() != static_cast<std::size_t>(dim) ||
        it->second.cols() != static_cast<std::size_t>(dim))
        throw DimensionError("gram block shape mismatch at (" + std::to_string(p) + "," +
                             std::to_string(q) + ")");
    return it->second;
}

std::vector<Violation> MetricData::validate(const Bicomplex& x) const {
    std::vector<Violation> out;
    for (const auto& [pq, g] : gram_) {
        auto [p, q] = pq;
        if (g.rows() != g.cols() || g.rows() != static_cast<std::size_t>(x.dim(p, q))) {
            out.push_back({p, q, "gram block has wrong shape"});
            continue;
        }
        if (g != g.conj_transpose()) {
            out.push_back({p, q, "gram block is not Hermitian"});
            continue;
        }
        for (std::size_t k = 1; k <= g.rows(); ++k) {
            Matrix leading(k, k);
            for (std::size_t r = 0; r < k; ++r)
                for (std::size_t c = 0; c < k; ++c) leading.at(r, c) = g.at(r, c);
            GaussianRational det = leading.determinant();
            if (det.im() != 0 || det.re() <= 0) {
                out.push_back({p, q, "gram block is not positive definite"});
                break;
            }
        }
    }
    return out;
}

Matrix adjoint(const Matrix& m, const Matrix& gram_src, const Matrix& gram_tgt) {
    if (gram_src.rows() != gram_src.cols() || gram_src.rows() != m.cols())
        throw DimensionError("adjoint: source gram shape mismatch");
    if (gram_tgt.rows() != gram_tgt.cols() || gram_tgt.rows() != m.rows())
        throw DimensionError("adjoint: target gram shape mismatch");
    return gram_src.inverse() * m.conj_transpose() * gram_tgt;
}

namespace {

struct Blocks {
    const Bicomplex& x;
    const MetricData& g;

    Matrix gram(int p, int q) const { return g.gram(p, q, x.dim(p, q)); }
    // Adjoint of a stored map with source (p,q) and target (p',q').
    Matrix adj(const Matrix& m, int sp, int sq, int tp, int tq) const {
        return adjoint(m, gram(sp, sq), gram(tp, tq));
    }
};

}  // namespace

Matrix laplacian(const Bicomplex& x, const MetricData& g, LaplacianFlavor flavor, int p, int q) {
    Blocks b{x, g};
    Matrix del_out = x.del(p, q);                     // (p,q)   -> (p+1,q)
    Matrix del_in = x.del(p - 1, q);                  // (p-1,q) -> (p,q)
    Matrix delbar_out = x.delbar(p, q);               // (p,q)   -> (p,q+1)
    Matrix delbar_in = x.delbar(p, q - 1);            // (p,q-1) -> (p,q)
    Matrix dd_out = x.del_delbar(p, q);               // (p,q)   -> (p+1,q+1)
    Matrix dd_in = x.del_delbar(p - 1, q - 1);        // (p-1,q-1) -> (p,q)

    Matrix dd_out_adj = b.adj(dd_out, p, q, p + 1, q + 1);
    Matrix dd_in_adj = b.adj(dd_in, p - 1, q - 1, p, q);

    if (flavor == LaplacianFlavor::bc) {
        // (del delbar)(del delbar)^* + (del delbar)^*(del delbar)
        Matrix l = dd_in * dd_in_adj + dd_out_adj * dd_out;
        // (delbar^* del) arriving from (p-1,q+1) and leaving to (p+1,q-1).
        Matrix t_in = b.adj(x.delbar(p, q), p, q, p, q + 1) * x.del(p - 1, q + 1);
        Matrix t_out = b.adj(x.delbar(p + 1, q - 1), p + 1, q - 1, p + 1, q) * del_out;
        l = l + t_in * b.adj(t_in, p - 1, q + 1, p, q);
        l = l + b.adj(t_out, p, q, p + 1, q - 1) * t_out;
        // delbar^* delbar + del^* del
        l = l + b.adj(delbar_out, p, q, p, q + 1) * delbar_out;
        l = l + b.adj(del_out, p, q, p + 1, q) * del_out;
        return l;
    }

    // Aeppli: del del^* + delbar delbar^* + (del delbar)^*(del delbar)
    //         + (del delbar)(del delbar)^* + (delbar del^*)^*(delbar del^*)
    //         + (delbar del^*)(delbar del^*)^*
    Matrix l = del_in * b.adj(del_in, p - 1, q, p, q);
    l = l + delbar_in * b.adj(delbar_in, p, q - 1, p, q);
    l = l + dd_out_adj * dd_out;
    l = l + dd_in * dd_in_adj;
    Matrix s_out = x.delbar(p - 1, q) * b.adj(x.del(p - 1, q), p - 1, q, p, q);
    Matrix s_in = x.delbar(p, q - 1) * b.adj(x.del(p, q - 1), p, q - 1, p + 1, q - 1);
    l = l + b.adj(s_out, p, q, p - 1, q + 1) * s_out;
    l = l + s_in * b.adj(s_in, p + 1, q - 1, p, q);
    return l;
}

int laplacian_kernel_dim(const Bicomplex& x, const MetricData& g, LaplacianFlavor flavor, int p,
                         int q) {
    Matrix l = laplacian(x, g, flavor, p, q);
    Matrix gram = g.gram(p, q, x.dim(p, q));
    if (adjoint(l, gram, gram) != l)
        throw Error("assembled Laplacian is not self-adjoint at (" + std::to_string(p) + "," +
                    std::to_string(q) + ")");
    return static_cast<int>(kernel_basis(l).dim());
}

bool harmonic_characterization_check(const Bicomplex& x, const MetricData& g, int p, int q) {
    Blocks b{x, g};
    Subspace hbc = kernel_basis(laplacian(x, g, LaplacianFlavor::bc, p, q));
    Subspace expect_bc = subspace_intersect(
        subspace_intersect(kernel_basis(x.del(p, q)), kernel_basis(x.delbar(p, q))),
        kernel_basis(b.adj(x.del_delbar(p - 1, q - 1), p - 1, q - 1, p, q)));
    if (hbc != expect_bc) return false;
    if (static_cast<int>(hbc.dim()) != h_bc(x, p, q)) return false;

    Subspace ha = kernel_basis(laplacian(x, g, LaplacianFlavor::aeppli, p, q));
    Subspace expect_a = subspace_intersect(
        subspace_intersect(kernel_basis(b.adj(x.del(p - 1, q), p - 1, q, p, q)),
                           kernel_basis(b.adj(x.delbar(p, q - 1), p, q - 1, p, q))),
        kernel_basis(x.del_delbar(p, q)));
    if (ha != expect_a) return false;
    if (static_cast<int>(ha.dim()) != h_aeppli(x, p, q)) return false;
    return true;
}

StarOperator build_star(const ExteriorModel& model, const MetricData& g) {
    int n = model.n;
    for (const auto& [pq, gram] : g.blocks())
        if (!gram.is_identity())
            throw ModelError("star requires the orthonormal coframe metric");

    StarOperator s;
    s.n = n;
    s.star.resize(static_cast<std::size_t>((n + 1) * (n + 1)));
    std::uint32_t all = (1u << n) - 1u;
    for (int p = 0; p <= n; ++p)
        for (int q = 0; q <= n; ++q) {
            int dim = model.complex.dim(p, q);
            Matrix m(static_cast<std::size_t>(model.complex.dim(n - q, n - p)),
                     static_cast<std::size_t>(dim));
            int col = 0;
            for (const auto& [I, J] : model.basis(p, q)) {
                std::uint32_t Ic = all & ~I;
                std::uint32_t Jc = all & ~J;
                int sign = exterior::merge_sign(J, Jc) * exterior::merge_sign(I, Ic);
                if (((p * q) + p * (n - q)) % 2 == 1) sign = -sign;
                int row = model.basis_index(n - q, n - p, Jc, Ic);
                m.at(static_cast<std::size_t>(row), static_cast<std::size_t>(col)) =
                    GaussianRational(sign);
                ++col;
            }
            s.star[static_cast<std::size_t>(p) * static_cast<std::size_t>(n + 1) +
                   static_cast<std::size_t>(q)] = std::move(m);
        }
    return s;
}

}  // namespace ddbar
