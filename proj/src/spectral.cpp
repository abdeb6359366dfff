#include "ddbar/spectral.hpp"

namespace ddbar {

namespace {

// F^p Tot^k  ^  d^{-1}(F^{p+r} Tot^{k+1})
Subspace z_space(const TotalComplex& t, int p, int k, int r) {
    Subspace f = t.filtration(p, k);
    Subspace target = t.filtration(p + r, k + 1);
    return subspace_intersect(f, preimage(t.d(k), target));
}

}  // namespace

std::vector<Grid> spectral_page_dims(const Bicomplex& x, int r_max) {
    if (r_max < 1) throw Error("spectral_page_dims: r_max must be >= 1");
    TotalComplex t(x);
    std::vector<Grid> pages;
    pages.reserve(static_cast<std::size_t>(r_max));
    for (int r = 1; r <= r_max; ++r) {
        Grid page(x.p_max(), x.q_max());
        for (int p = 0; p <= x.p_max(); ++p)
            for (int q = 0; q <= x.q_max(); ++q) {
                int k = p + q;
                Subspace z = z_space(t, p, k, r);
                Subspace den = z_space(t, p + 1, k, r - 1);
                den = subspace_sum(den, apply(t.d(k - 1), z_space(t, p - r + 1, k - 1, r - 1)));
                page.set(p, q, static_cast<int>(quotient_dim(z, den)));
            }
        pages.push_back(std::move(page));
    }
    return pages;
}

}  // namespace ddbar
