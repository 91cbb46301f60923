#include "doctest.h"

#include <cmath>

#include "hybrid/entanglement.hpp"
#include "hybrid/scheme_fig1a.hpp"

using namespace hybrid;

TEST_CASE("Bell state negativity is 1") {
    Eigen::VectorXcd bell(4);
    bell << 1.0, 0.0, 0.0, 1.0;
    CHECK(negativity_numeric(density_from_pure(bell, 2, 2)) ==
          doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("product state negativity is 0") {
    Eigen::VectorXcd prod(4);
    prod << 0.6, 0.8, 0.0, 0.0;
    CHECK(negativity_numeric(density_from_pure(prod, 2, 2)) <= 1e-10);
}

TEST_CASE("analytic negativity closed form") {
    const cplx a0{std::sqrt(0.5), 0.0}, a1{std::sqrt(0.5), 0.0};
    CHECK(negativity_analytic(a0, a1, cplx{1.0, 0.0}) ==
          doctest::Approx(1.0).epsilon(1e-14));
    // unbalanced with B = sqrt(|a0|/|a1|): the physical cap is
    // 2 sqrt(|a0||a1|) / (|a0| + |a1|) < 1
    const double p = 0.8, q = 0.2;
    const double m0 = std::sqrt(p), m1 = std::sqrt(q);
    const cplx b0{m0, 0.0}, b1{m1, 0.0};
    const cplx B{std::sqrt(m0 / m1), 0.0};
    CHECK(negativity_analytic(b0, b1, B) ==
          doctest::Approx(2.0 * std::sqrt(m0 * m1) / (m0 + m1))
              .epsilon(1e-13));
}

TEST_CASE("cross-engine negativity on heralded states") {
    for (double beta : {0.8, 1.5})
        for (double t : {0.2, 0.5, 0.8})
            for (int n = 0; n <= 2; ++n) {
                SchemeConfig c;
                c.a0 = c.a1 = cplx{std::sqrt(0.5), 0.0};
                c.beta = beta;
                c.t = t;
                auto [p, st] = oracle_conditional_state(c, n);
                (void)p;
                const double numeric =
                    negativity_numeric(density_from_pure(st, 2));
                const double analytic =
                    negativity_analytic(c.a0, c.a1, coefficient_B(c, n));
                CHECK(std::abs(numeric - analytic) < 1e-7);
            }
}

TEST_CASE("density validation rejects non-physical input") {
    BipartiteDensity rho;
    rho.dim_a = 2;
    rho.dim_b = 2;
    rho.matrix = Eigen::MatrixXcd::Identity(4, 4); // trace 4, not 1
    CHECK_THROWS_AS(rho.validate(), InvalidDensity);
}

TEST_CASE("fidelity of identical and orthogonal states") {
    FockVector a = make_coherent(20, cplx{0.5, 0.0});
    CHECK(fidelity(a, a) == doctest::Approx(1.0).epsilon(1e-14));
    FockVector f0 = make_fock(ModeLayout{{3}}, {0});
    FockVector f1 = make_fock(ModeLayout{{3}}, {1});
    CHECK(fidelity(f0, f1) == doctest::Approx(0.0).epsilon(1e-14));
}
