#include "ddbar/exterior.hpp"

#include <bit>

namespace ddbar::exterior {

int binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return static_cast<int>(r);
}

std::vector<std::uint32_t> subsets(int n, int k) {
    std::vector<std::uint32_t> out;
    if (k < 0 || k > n) return out;
    out.reserve(static_cast<std::size_t>(binomial(n, k)));
    std::vector<int> pick(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) pick[static_cast<std::size_t>(i)] = i;
    while (true) {
        std::uint32_t m = 0;
        for (int v : pick) m |= (1u << v);
        out.push_back(m);
        int i = k - 1;
        while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - k + i) --i;
        if (i < 0) break;
        ++pick[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

int subset_index(int n, std::uint32_t mask) {
    // Combinatorial ranking in the lexicographic subset order.
    int k = std::popcount(mask);
    int index = 0;
    int prev = -1;
    int remaining = k;
    for (int v = 0; v < n && remaining > 0; ++v) {
        if (mask & (1u << v)) {
            // Count subsets starting with an element in (prev, v).
            for (int w = prev + 1; w < v; ++w) index += binomial(n - w - 1, remaining - 1);
            prev = v;
            --remaining;
        }
    }
    return index;
}

Wedge wedge_generator(int g, std::uint32_t mask) {
    std::uint32_t bit = 1u << g;
    if (mask & bit) return {0, 0};
    int below = std::popcount(mask & (bit - 1));
    return {(below % 2 == 0) ? 1 : -1, mask | bit};
}

int merge_sign(std::uint32_t a, std::uint32_t b) {
    if (a & b) return 0;
    // Count inversions: pairs (x in a, y in b) with y < x.
    int sign = 1;
    std::uint32_t rest = b;
    std::uint32_t aa = a;
    while (aa) {
        int x = std::countr_zero(aa);
        aa &= aa - 1;
        int below = std::popcount(rest & ((1u << x) - 1));
        if (below % 2 == 1) sign = -sign;
    }
    return sign;
}

}  // namespace ddbar::exterior
