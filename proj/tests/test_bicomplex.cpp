#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ddbar/bicomplex.hpp"
#include "helpers.hpp"

using namespace ddbar;
using test::gr;
using test::mat;

namespace {

// The unit square supported on (0,0)..(1,1), del sign on the q = 1 row
// controlled by the caller.
Bicomplex unit_square(long del_top) {
    std::vector<int> dims{1, 1, 1, 1};  // (0,0), (0,1), (1,0), (1,1) in p-major order
    std::vector<Matrix> del(4), delbar(4);
    del[0] = mat({{1}});        // (0,0) -> (1,0)
    del[1] = mat({{del_top}});  // (0,1) -> (1,1)
    del[2] = Matrix(0, 1);
    del[3] = Matrix(0, 1);
    delbar[0] = mat({{1}});  // (0,0) -> (0,1)
    delbar[1] = Matrix(0, 1);
    delbar[2] = mat({{1}});  // (1,0) -> (1,1)
    delbar[3] = Matrix(0, 1);
    return Bicomplex(1, 1, dims, del, delbar);
}

}  // namespace

TEST_CASE("all-zero differentials are valid") {
    std::vector<int> dims{2, 1, 1, 3};
    std::vector<Matrix> del{Matrix(1, 2), Matrix(3, 1), Matrix(0, 1), Matrix(0, 3)};
    std::vector<Matrix> delbar{Matrix(1, 2), Matrix(0, 1), Matrix(3, 1), Matrix(0, 3)};
    Bicomplex x(1, 1, dims, del, delbar);
    CHECK(validate(x).empty());
    CHECK(x.total_dim() == 7);
    CHECK(x.dim(5, 5) == 0);
}

TEST_CASE("square with four +1 entries breaks anticommutation") {
    auto violations = validate(unit_square(1));
    REQUIRE(violations.size() == 1);
    CHECK(violations[0].p == 0);
    CHECK(violations[0].q == 0);
    CHECK(violations[0].what == "del.delbar + delbar.del != 0");
}

TEST_CASE("sign-corrected square is valid") { CHECK(validate(unit_square(-1)).empty()); }

TEST_CASE("shape mismatches are constructor errors") {
    std::vector<int> dims{1, 1, 1, 1};
    std::vector<Matrix> bad_del{Matrix(2, 1), Matrix(0, 1), Matrix(0, 1), Matrix(0, 1)};
    std::vector<Matrix> delbar{Matrix(1, 1), Matrix(0, 1), Matrix(1, 1), Matrix(0, 1)};
    CHECK_THROWS_AS(Bicomplex(1, 1, dims, bad_del, delbar), DimensionError);
}

TEST_CASE("n bound violation is reported") {
    std::vector<int> dims{0, 0, 0, 1};  // dim at (1,1)
    std::vector<Matrix> del{Matrix(0, 0), Matrix(1, 0), Matrix(0, 0), Matrix(0, 1)};
    std::vector<Matrix> delbar{Matrix(0, 0), Matrix(0, 0), Matrix(1, 0), Matrix(0, 1)};
    Bicomplex x(1, 1, dims, del, delbar, std::nullopt, 0);
    auto violations = validate(x);
    REQUIRE_FALSE(violations.empty());
    CHECK(violations[0].what == "dim nonzero beyond complex dimension n");
}

TEST_CASE("total complex of the square") {
    Bicomplex x = unit_square(-1);
    TotalComplex t(x);
    CHECK(t.k_max() == 2);
    CHECK(t.dim(0) == 1);
    CHECK(t.dim(1) == 2);
    CHECK(t.dim(2) == 1);
    CHECK(t.dim(7) == 0);
    CHECK((t.d(1) * t.d(0)).is_zero());
    CHECK(t.blocks(1) == std::vector<std::pair<int, int>>{{0, 1}, {1, 0}});

    // d(x00) = r + u: the two unit blocks.
    Matrix d0 = t.d(0);
    REQUIRE(d0.rows() == 2);
    CHECK(d0.at(0, 0) == gr(1));
    CHECK(d0.at(1, 0) == gr(1));
}

TEST_CASE("embed, filtration, block slice") {
    Bicomplex x = unit_square(-1);
    TotalComplex t(x);
    Subspace s = t.embed(1, 0, Subspace::full(1));
    CHECK(s.dim() == 1);
    CHECK(s.ambient_dim() == 2);
    // Block order is ascending p: (0,1) then (1,0).
    CHECK(s.basis().at(0, 1) == gr(1));
    CHECK(t.filtration(0, 1) == Subspace::full(2));
    CHECK(t.filtration(1, 1) == s);
    CHECK(t.filtration(2, 1) == Subspace::zero(2));
    CHECK(t.block_slice(Subspace::full(2), 1, 0) == Subspace::full(1));
    CHECK(t.block_slice(s, 0, 1) == Subspace::zero(1));
}

TEST_CASE("empty complex") {
    Bicomplex x;
    CHECK(validate(x).empty());
    CHECK(x.total_dim() == 0);
    TotalComplex t(x);
    CHECK(t.dim(0) == 0);
}
