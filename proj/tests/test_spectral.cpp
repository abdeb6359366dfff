#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ddbar/assembly.hpp"
#include "ddbar/spectral.hpp"
#include "helpers.hpp"

using namespace ddbar;

TEST_CASE("dot: E_r = 1 at its bidegree for all r") {
    Bicomplex x = zigzag_assemble({{ShapeKind::dot, 1, 0}});
    auto pages = spectral_page_dims(x, 4);
    for (const Grid& page : pages) {
        CHECK(page.at(1, 0) == 1);
        CHECK(page.at(0, 0) == 0);
    }
}

TEST_CASE("square: zero from page one on") {
    Bicomplex x = zigzag_assemble({{ShapeKind::square, 0, 0}});
    auto pages = spectral_page_dims(x, 3);
    for (const Grid& page : pages)
        for (int p = 0; p <= 1; ++p)
            for (int q = 0; q <= 1; ++q) CHECK(page.at(p, q) == 0);
}

TEST_CASE("right zigzag: E_1 has (1,1), the d_1 kills it") {
    Bicomplex x = zigzag_assemble({{ShapeKind::zigzag_right, 0, 0}});
    auto pages = spectral_page_dims(x, 3);
    CHECK(pages[0].at(0, 0) == 1);
    CHECK(pages[0].at(1, 0) == 1);
    CHECK(pages[1].at(0, 0) == 0);
    CHECK(pages[1].at(1, 0) == 0);
    CHECK(pages[2].at(0, 0) == 0);
}

TEST_CASE("up zigzag: degenerate at E_1 (everything already zero)") {
    Bicomplex x = zigzag_assemble({{ShapeKind::zigzag_up, 0, 0}});
    auto pages = spectral_page_dims(x, 2);
    for (const Grid& page : pages)
        for (int q = 0; q <= 1; ++q) CHECK(page.at(0, q) == 0);
}

TEST_CASE("page one is Dolbeault and the stable page sums to betti") {
    Rng rng(31);
    for (int t = 0; t < 25; ++t) {
        Bicomplex x = random_bicomplex(rng);
        CohomologyReport rep = compute_report(x, {.lemma = false, .spectral = true});
        REQUIRE_FALSE(rep.pages.empty());
        CHECK(rep.pages.front() == rep.h_dolbeault);
        for (int k = 0; k <= rep.k_max(); ++k)
            CHECK(rep.pages.back().total(k) == rep.betti_at(k));
    }
}

TEST_CASE("r_max must be positive") {
    Bicomplex x = zigzag_assemble({{ShapeKind::dot, 0, 0}});
    CHECK_THROWS_AS(spectral_page_dims(x, 0), Error);
}
