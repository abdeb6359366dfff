#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ddbar/assembly.hpp"
#include "ddbar/cohomology.hpp"
#include "helpers.hpp"

using namespace ddbar;

namespace {

Bicomplex dot(int p = 0, int q = 0) { return zigzag_assemble({{ShapeKind::dot, p, q}}); }
Bicomplex square() { return zigzag_assemble({{ShapeKind::square, 0, 0}}); }
Bicomplex zig_up() { return zigzag_assemble({{ShapeKind::zigzag_up, 0, 0}}); }

}  // namespace

TEST_CASE("dot: every flavor is 1 at the dot, betti concentrated") {
    Bicomplex x = dot(1, 1);
    REQUIRE(validate(x).empty());
    for (Flavor f : {Flavor::dolbeault, Flavor::del})
        CHECK(h_line(x, f, 1, 1) == 1);
    CHECK(h_bc(x, 1, 1) == 1);
    CHECK(h_aeppli(x, 1, 1) == 1);
    CHECK(h_bc(x, 0, 0) == 0);
    CHECK(betti(x, 2) == 1);
    CHECK(betti(x, 0) == 0);
    CHECK(betti(x, 1) == 0);
}

TEST_CASE("square: everything vanishes") {
    Bicomplex x = square();
    REQUIRE(validate(x).empty());
    for (int p = 0; p <= 1; ++p)
        for (int q = 0; q <= 1; ++q) {
            CHECK(h_line(x, Flavor::dolbeault, p, q) == 0);
            CHECK(h_line(x, Flavor::del, p, q) == 0);
            CHECK(h_bc(x, p, q) == 0);
            CHECK(h_aeppli(x, p, q) == 0);
        }
    for (int k = 0; k <= 2; ++k) CHECK(betti(x, k) == 0);
    VarouchasDims v = varouchas_dims(x);
    for (int p = 0; p <= 1; ++p)
        for (int q = 0; q <= 1; ++q) {
            CHECK(v.a.at(p, q) == 0);
            CHECK(v.b.at(p, q) == 0);
            CHECK(v.c.at(p, q) == 0);
            CHECK(v.d.at(p, q) == 0);
            CHECK(v.e.at(p, q) == 0);
            CHECK(v.f.at(p, q) == 0);
        }
}

TEST_CASE("length-2 zigzag: the lemma_direct hand example") {
    Bicomplex x = zig_up();
    REQUIRE(validate(x).empty());
    CHECK(h_bc(x, 0, 1) == 1);
    CHECK(h_bc(x, 0, 0) == 0);
    CHECK(h_aeppli(x, 0, 0) == 1);
    CHECK(h_aeppli(x, 0, 1) == 0);
    CHECK_FALSE(lemma_direct(x));
}

TEST_CASE("dot and square satisfy the lemma") {
    CHECK(lemma_direct(dot()));
    CHECK(lemma_direct(square()));
}

TEST_CASE("varouchas of the dot vanishes, sequences balance") {
    Bicomplex x = dot();
    VarouchasDims v = varouchas_dims(x);
    CHECK(v.a.at(0, 0) == 0);
    CHECK(v.f.at(0, 0) == 0);
    Grid hd(0, 0), hb(0, 0), ha(0, 0);
    hd.set(0, 0, 1);
    hb.set(0, 0, 1);
    ha.set(0, 0, 1);
    // dot: 0-0+1-1+0 = 0 and 0-1+1-0+0 = 0.
    CHECK(check_sequences(v, hd, hb, ha));
    CHECK(check_structural_equalities(v));
}

TEST_CASE("structural equalities hold on random valid bicomplexes") {
    Rng rng(17);
    for (int t = 0; t < 40; ++t) {
        Bicomplex x = random_bicomplex(rng);
        REQUIRE(validate(x).empty());
        CohomologyReport rep = compute_report(x, {.lemma = false, .spectral = false});
        CHECK(rep.sequences_ok);
        CHECK(rep.structural_ok);
        CHECK(rep.ek_recursion_ok);
    }
}

TEST_CASE("conjugation symmetries need a conjugation") {
    Bicomplex x = zig_up();
    VarouchasDims v = varouchas_dims(x);
    Grid g(0, 1);
    CHECK_THROWS_AS(check_conjugation_symmetries(x, v, g, g, g, g), ModelError);
}

TEST_CASE("mirror pair carries the conjugation symmetry") {
    Bicomplex x = zigzag_assemble(
        {{ShapeKind::zigzag_up, 0, 0}, {ShapeKind::zigzag_right, 0, 0}}, true);
    REQUIRE(validate(x).empty());
    CohomologyReport rep = compute_report(x);
    REQUIRE(rep.symmetry_ok.has_value());
    CHECK(*rep.symmetry_ok);
    REQUIRE(rep.excess_identity_ok.has_value());
    CHECK(*rep.excess_identity_ok);
    // h^{p,q}_dbar = h^{q,p}_del, not Hodge symmetry of dolbeault itself:
    CHECK(rep.h_dolbeault.at(1, 0) == 1);
    CHECK(rep.h_dolbeault.at(0, 1) == 0);
    CHECK(rep.h_del.at(0, 1) == 1);
    // The pair fails the lemma and is NOT E_1-degenerate.
    REQUIRE(rep.lemma.has_value());
    CHECK_FALSE(*rep.lemma);
    REQUIRE(rep.e1_equals_einf.has_value());
    CHECK_FALSE(*rep.e1_equals_einf);
    CHECK_FALSE(rep.bc_equality_all_k);
}

TEST_CASE("natural maps on the dot are isomorphisms") {
    CohomologyReport rep = compute_report(dot());
    for (const auto& e : rep.maps) {
        CHECK(e.injective);
        CHECK(e.surjective);
    }
}

TEST_CASE("natural maps on the up zigzag: bc_to_dr_total loses injectivity") {
    CohomologyReport rep = compute_report(zig_up());
    bool saw_failure = false;
    for (const auto& e : rep.maps)
        if (e.map == "bc_to_dr_total" && e.k == 1) {
            CHECK(e.domain_dim == 1);
            CHECK(e.codomain_dim == 0);
            CHECK_FALSE(e.injective);
            saw_failure = true;
        }
    CHECK(saw_failure);
}

TEST_CASE("equality characterization: dot yes, zigzag no") {
    CHECK(equality_characterization(compute_report(dot())));
    CHECK_FALSE(equality_characterization(compute_report(zig_up())));
}

TEST_CASE("inequalities on the up zigzag hold with strictness") {
    CohomologyReport rep = compute_report(zig_up());
    CHECK(rep.inequalities.frolicher_all_k);
    CHECK(rep.inequalities.bc_total_all_k);
    // h^0: 0 + 1 = 1 > 0 and h^1: 1 + 0 = 1 > 0.
    CHECK(rep.inequalities.bc_total_strict_at == std::vector<int>{0, 1});
}

TEST_CASE("out+in pair: degenerate, hodge-symmetric, lemma fails") {
    Bicomplex x = zigzag_assemble(
        {{ShapeKind::zigzag_out, 0, 0}, {ShapeKind::zigzag_in, 0, 0}}, true);
    REQUIRE(validate(x).empty());
    CohomologyReport rep = compute_report(x);
    for (int p = 0; p <= 1; ++p)
        for (int q = 0; q <= 1; ++q)
            CHECK(rep.h_dolbeault.at(p, q) == rep.h_del.at(p, q));
    REQUIRE(rep.e1_equals_einf.has_value());
    CHECK(*rep.e1_equals_einf);
    REQUIRE(rep.lemma.has_value());
    CHECK_FALSE(*rep.lemma);
    CHECK_FALSE(rep.bc_equality_all_k);
    // A^{1,1} is the obstruction: a^2 = 1.
    CHECK(rep.var.a.at(1, 1) == 1);
    CHECK(rep.var.a.total(2) == 1);
    REQUIRE(rep.excess_identity_ok.has_value());
    CHECK(*rep.excess_identity_ok);
}

TEST_CASE("bc_surjectivity on assemblies") {
    // Dots only: a = 0 everywhere, all maps isos.
    Bicomplex x = zigzag_assemble({{ShapeKind::dot, 0, 0}, {ShapeKind::dot, 1, 1}});
    CohomologyReport rep = compute_report(x);
    REQUIRE(rep.bc_surjectivity_ok.has_value());
    CHECK(*rep.bc_surjectivity_ok);
}

TEST_CASE("ek recursion on dot and square") {
    CHECK(ek_recursion_check(compute_report(dot())));
    CHECK(ek_recursion_check(compute_report(square())));
}

TEST_CASE("report grids agree with the standalone operations") {
    Rng rng(23);
    for (int t = 0; t < 15; ++t) {
        Bicomplex x = random_bicomplex(rng);
        CohomologyReport rep = compute_report(x, {.lemma = false, .spectral = false});
        for (int p = 0; p <= x.p_max(); ++p)
            for (int q = 0; q <= x.q_max(); ++q) {
                CHECK(rep.h_dolbeault.at(p, q) == h_line(x, Flavor::dolbeault, p, q));
                CHECK(rep.h_bc.at(p, q) == h_bc(x, p, q));
                CHECK(rep.h_aeppli.at(p, q) == h_aeppli(x, p, q));
            }
        for (int k = 0; k <= rep.k_max(); ++k) CHECK(rep.betti_at(k) == betti(x, k));
    }
}
