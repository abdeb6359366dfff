#pragma once

#include <string>
#include <vector>

#include "ddbar/matrix.hpp"
#include "ddbar/random_complex.hpp"
#include "ddbar/scalar.hpp"

namespace ddbar::test {

inline GaussianRational gr(long re, long im = 0) {
    return GaussianRational(Rational(re), Rational(im));
}

inline GaussianRational grq(const std::string& re, const std::string& im = "0") {
    return GaussianRational(parse_rational(re), parse_rational(im));
}

/// Integer matrix shorthand.
inline Matrix mat(std::vector<std::vector<long>> rows) {
    Matrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < rows[r].size(); ++c) m.at(r, c) = gr(rows[r][c]);
    return m;
}

inline std::vector<GaussianRational> vec(std::vector<long> entries) {
    std::vector<GaussianRational> v;
    v.reserve(entries.size());
    for (long e : entries) v.push_back(gr(e));
    return v;
}

inline Matrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols) {
    Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) {
            long re = rng.below(7) - 3;
            long im = rng.chance(1, 3) ? rng.below(5) - 2 : 0;
            m.at(r, c) = gr(re, im);
        }
    return m;
}

}  // namespace ddbar::test
