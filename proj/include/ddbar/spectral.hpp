#pragma once

#include <vector>

#include "ddbar/bicomplex.hpp"
#include "ddbar/cohomology.hpp"

namespace ddbar {

/// Dimensions of the pages E_r^{p,q}, r = 1..r_max, of the column-filtration
/// (Hodge-Frolicher) spectral sequence, computed by the filtered-complex
/// subspace formula
///
///   Z_r^{p,q} = F^p Tot^{p+q}  ^  d^{-1}(F^{p+r} Tot^{p+q+1})
///   E_r^{p,q} = Z_r^{p,q} / ( Z_{r-1}^{p+1,q-1} + d Z_{r-1}^{p-r+1,q+r-2} ).
///
/// E_1^{p,q} equals the Dolbeault dimensions; for r > max(p_max,q_max)+1 the
/// pages are stable and their antidiagonal totals are the Betti numbers.
std::vector<Grid> spectral_page_dims(const Bicomplex& x, int r_max);

}  // namespace ddbar
