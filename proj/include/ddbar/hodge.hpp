#pragma once

#include <map>
#include <utility>
#include <vector>

#include "ddbar/bicomplex.hpp"
#include "ddbar/cohomology.hpp"
#include "ddbar/lie_model.hpp"

namespace ddbar {

/// Hermitian positive-definite Gram matrices per bidegree; a missing block
/// means the basis there is orthonormal (identity Gram).
class MetricData {
  public:
    MetricData() = default;

    void set_gram(int p, int q, Matrix g) { gram_[{p, q}] = std::move(g); }
    bool has_gram(int p, int q) const { return gram_.count({p, q}) > 0; }

    /// Gram matrix for a dim-dimensional V^{p,q}.
    Matrix gram(int p, int q, int dim) const;

    const std::map<std::pair<int, int>, Matrix>& blocks() const { return gram_; }

    /// Hermitian + positive-definite failures (exact leading-minor signs).
    std::vector<Violation> validate(const Bicomplex& x) const;

  private:
    std::map<std::pair<int, int>, Matrix> gram_;
};

/// Adjoint of m with respect to the given inner products:
/// gram_src^{-1} . conj-transpose(m) . gram_tgt. With identity Grams this is
/// the conjugate transpose. Throws on shape mismatch or a singular Gram.
Matrix adjoint(const Matrix& m, const Matrix& gram_src, const Matrix& gram_tgt);

enum class LaplacianFlavor { bc, aeppli };

/// The fourth-order Laplacian on V^{p,q} assembled from its six summands.
Matrix laplacian(const Bicomplex& x, const MetricData& g, LaplacianFlavor flavor, int p, int q);

/// dim ker of the assembled Laplacian; checks self-adjointness with respect
/// to g before returning.
int laplacian_kernel_dim(const Bicomplex& x, const MetricData& g, LaplacianFlavor flavor, int p,
                         int q);

/// ker Delta_BC = ker del ^ ker delbar ^ ker (del delbar)^* as subspaces,
/// dually for Delta_A, and both kernel dimensions agree with h_bc / h_aeppli.
bool harmonic_characterization_check(const Bicomplex& x, const MetricData& g, int p, int q);

/// The Hodge star of an exterior-algebra model with orthonormal coframe:
/// a C-linear bijection V^{p,q} -> V^{n-q,n-p} with
/// v ^ conj(star v) = <v,v> vol on basis monomials.
struct StarOperator {
    int n = 0;
    std::vector<Matrix> star;  // indexed p*(n+1)+q

    const Matrix& at(int p, int q) const {
        return star[static_cast<std::size_t>(p) * static_cast<std::size_t>(n + 1) +
                    static_cast<std::size_t>(q)];
    }
};

/// Builds the star operator for a compiled model. Throws ModelError when the
/// metric is not the orthonormal-coframe one (non-identity Gram blocks).
StarOperator build_star(const ExteriorModel& model, const MetricData& g);

}  // namespace ddbar
