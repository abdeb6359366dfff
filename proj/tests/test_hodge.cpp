#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ddbar/assembly.hpp"
#include "ddbar/hodge.hpp"
#include "helpers.hpp"

using namespace ddbar;
using test::gr;
using test::mat;

TEST_CASE("adjoint with identity grams is the conjugate transpose") {
    Matrix m(1, 1);
    m.at(0, 0) = gr(0, 1);
    Matrix a = adjoint(m, Matrix::identity(1), Matrix::identity(1));
    CHECK(a.at(0, 0) == gr(0, -1));

    CHECK(adjoint(Matrix(2, 3), Matrix::identity(3), Matrix::identity(2)) == Matrix(3, 2));
    CHECK(adjoint(mat({{1, 2}, {0, 1}}), Matrix::identity(2), Matrix::identity(2)) ==
          mat({{1, 0}, {2, 1}}));
}

TEST_CASE("adjoint identity <m u, v> = <u, m* v> with random PD grams") {
    Rng rng(3);
    for (int t = 0; t < 25; ++t) {
        int dn = 1 + rng.below(3), dm = 1 + rng.below(3);
        Matrix m = test::random_matrix(rng, static_cast<std::size_t>(dm),
                                       static_cast<std::size_t>(dn));
        Matrix gs = random_positive_gram(rng, dn);
        Matrix gt = random_positive_gram(rng, dm);
        Matrix a = adjoint(m, gs, gt);
        // <x,y>_G = y^H G x; the identity as matrices: G_t m = (m^*)^H G_s.
        CHECK(gt * m == a.conj_transpose() * gs);
    }
}

TEST_CASE("metric validation") {
    Bicomplex x = zigzag_assemble({{ShapeKind::dot, 0, 0}, {ShapeKind::dot, 0, 0}});
    MetricData good;
    Matrix herm(2, 2);
    herm.at(0, 0) = gr(2);
    herm.at(0, 1) = gr(0, 1);
    herm.at(1, 0) = gr(0, -1);
    herm.at(1, 1) = gr(1);
    good.set_gram(0, 0, herm);  // minors 2 and 2*1 - i*(-i) = 1: positive
    CHECK(good.validate(x).empty());

    MetricData not_hermitian;
    not_hermitian.set_gram(0, 0, mat({{1, 2}, {0, 1}}));
    CHECK_FALSE(not_hermitian.validate(x).empty());

    MetricData indefinite;
    indefinite.set_gram(0, 0, mat({{1, 2}, {2, 1}}));  // det = -3
    CHECK_FALSE(indefinite.validate(x).empty());

    MetricData negative;
    negative.set_gram(0, 0, mat({{-1, 0}, {0, 1}}));
    CHECK_FALSE(negative.validate(x).empty());
}

TEST_CASE("dot: both Laplacians vanish, kernel dim 1") {
    Bicomplex x = zigzag_assemble({{ShapeKind::dot, 0, 0}});
    MetricData g;
    CHECK(laplacian_kernel_dim(x, g, LaplacianFlavor::bc, 0, 0) == 1);
    CHECK(laplacian_kernel_dim(x, g, LaplacianFlavor::aeppli, 0, 0) == 1);
    CHECK(harmonic_characterization_check(x, g, 0, 0));
}

TEST_CASE("square: kernels vanish at all four bidegrees, both flavors") {
    Bicomplex x = zigzag_assemble({{ShapeKind::square, 0, 0}});
    MetricData g;
    for (int p = 0; p <= 1; ++p)
        for (int q = 0; q <= 1; ++q) {
            CHECK(laplacian_kernel_dim(x, g, LaplacianFlavor::bc, p, q) == 0);
            CHECK(laplacian_kernel_dim(x, g, LaplacianFlavor::aeppli, p, q) == 0);
            CHECK(harmonic_characterization_check(x, g, p, q));
        }
}

TEST_CASE("harmonic characterization and metric independence on random complexes") {
    Rng rng(19);
    for (int t = 0; t < 10; ++t) {
        Bicomplex x = random_bicomplex(rng);
        MetricData identity_gram;
        MetricData random_gram;
        for (int p = 0; p <= x.p_max(); ++p)
            for (int q = 0; q <= x.q_max(); ++q)
                if (x.dim(p, q) > 0 && rng.chance(2, 3))
                    random_gram.set_gram(p, q, random_positive_gram(rng, x.dim(p, q)));
        REQUIRE(random_gram.validate(x).empty());
        for (int p = 0; p <= x.p_max(); ++p)
            for (int q = 0; q <= x.q_max(); ++q) {
                CHECK(harmonic_characterization_check(x, identity_gram, p, q));
                CHECK(harmonic_characterization_check(x, random_gram, p, q));
                // Kernel dims are metric-free.
                CHECK(laplacian_kernel_dim(x, identity_gram, LaplacianFlavor::bc, p, q) ==
                      laplacian_kernel_dim(x, random_gram, LaplacianFlavor::bc, p, q));
                CHECK(laplacian_kernel_dim(x, identity_gram, LaplacianFlavor::aeppli, p, q) ==
                      laplacian_kernel_dim(x, random_gram, LaplacianFlavor::aeppli, p, q));
            }
    }
}

TEST_CASE("orthogonal decomposition under the identity gram") {
    Rng rng(29);
    for (int t = 0; t < 12; ++t) {
        Bicomplex x = random_bicomplex(rng);
        MetricData g;
        for (int p = 0; p <= x.p_max(); ++p)
            for (int q = 0; q <= x.q_max(); ++q) {
                Subspace harm = kernel_basis(laplacian(x, g, LaplacianFlavor::bc, p, q));
                Subspace exact = im_del_delbar(x, p, q);
                Subspace closed = subspace_intersect(ker_del(x, p, q), ker_delbar(x, p, q));
                CHECK(harm.dim() + exact.dim() == closed.dim());
                // Orthogonality: conj(exact) . harm^T = 0.
                CHECK((exact.basis().conjugate() * harm.basis().transpose()).is_zero());
            }
    }
}

TEST_CASE("star on the n=1 abelian model sends 1 to vol") {
    ExteriorModel m = compile(builtin("torus1"));
    MetricData g;
    StarOperator star = build_star(m, g);
    CHECK(star.at(0, 0).rows() == 1);
    CHECK(star.at(0, 0).at(0, 0) == gr(1));
    // Bijective at every bidegree.
    for (int p = 0; p <= 1; ++p)
        for (int q = 0; q <= 1; ++q)
            CHECK(rank(star.at(p, q)) == static_cast<std::size_t>(m.complex.dim(p, q)));
}

TEST_CASE("star defining property on basis monomials") {
    for (const char* name : {"torus1", "torus2", "iwasawa"}) {
        ExteriorModel m = compile(builtin(name));
        int n = m.n;
        MetricData g;
        StarOperator star = build_star(m, g);
        std::uint32_t all = (1u << n) - 1u;
        for (int p = 0; p <= n; ++p)
            for (int q = 0; q <= n; ++q) {
                auto basis = m.basis(p, q);
                const Matrix& sm = star.at(q, p);  // applied to conj(m) in V^{q,p}
                for (std::size_t col = 0; col < basis.size(); ++col) {
                    auto [I, J] = basis[col];
                    // conj(m) = (-1)^{pq} m_(J,I) in V^{q,p}.
                    int sign = (p * q) % 2 == 0 ? 1 : -1;
                    int conj_index = m.basis_index(q, p, J, I);
                    // star(conj m) = sign * column of m_(J,I): lands on (I^c, J^c).
                    int target = m.basis_index(n - p, n - q, all & ~I, all & ~J);
                    GaussianRational coeff =
                        gr(sign) * sm.at(static_cast<std::size_t>(target),
                                         static_cast<std::size_t>(conj_index));
                    // m ^ m_(Ic,Jc) = (-1)^{q(n-p)} merge(I,Ic) merge(J,Jc) vol.
                    int wedge_sign = exterior::merge_sign(I, all & ~I) *
                                     exterior::merge_sign(J, all & ~J);
                    if ((q * (n - p)) % 2 == 1) wedge_sign = -wedge_sign;
                    CHECK(coeff * gr(wedge_sign) == gr(1));
                }
            }
    }
}

TEST_CASE("star kernel swap and dualities on iwasawa") {
    ExteriorModel m = compile(builtin("iwasawa"));
    MetricData g;
    StarOperator star = build_star(m, g);
    int n = 3;
    for (int p = 0; p <= n; ++p)
        for (int q = 0; q <= n; ++q) {
            Subspace hbc = kernel_basis(laplacian(m.complex, g, LaplacianFlavor::bc, p, q));
            Subspace ha =
                kernel_basis(laplacian(m.complex, g, LaplacianFlavor::aeppli, n - q, n - p));
            CHECK(apply(star.at(p, q), hbc) == ha);
            CHECK(h_bc(m.complex, p, q) == h_aeppli(m.complex, n - q, n - p));
        }
}

TEST_CASE("star refuses non-orthonormal metrics") {
    ExteriorModel m = compile(builtin("torus1"));
    MetricData g;
    g.set_gram(0, 0, mat({{2}}));
    CHECK_THROWS_AS(build_star(m, g), ModelError);
}
