#include "doctest.h"

#include <cmath>

#include "hybrid/entanglement.hpp"
#include "hybrid/scheme_fig1b.hpp"

using namespace hybrid;

namespace {

SchemeBConfig config(double beta, double t, double beta1, double t1) {
    SchemeBConfig c;
    c.a0 = c.a1 = cplx{std::sqrt(0.5), 0.0};
    c.beta = beta;
    c.t = t;
    c.beta1 = beta1;
    c.t1 = t1;
    return c;
}

} // namespace

TEST_CASE("exact conditional states match the Fock oracle") {
    SchemeBConfig c = config(0.8, 0.5, 1.0, 0.95);
    for (int n = 0; n <= 2; ++n)
        for (int k = 0; k <= 2; ++k) {
            auto [p_oracle, oracle] = oracle_conditional_state_b(c, n, k);
            TwoModeHybridState st = build_exact_conditional(
                c, n, k, oracle.layout().cutoffs.at(0));
            CHECK(fidelity(st.to_joint_fock(), oracle) >= 1.0 - 1e-8);
            CHECK(st.probability ==
                  doctest::Approx(p_oracle).epsilon(1e-8));
        }
}

TEST_CASE("frozen P(1,0) fixtures at beta1=1 t1=0.95") {
    CHECK(success_probability_b(config(1.0, 0.9, 1.0, 0.95), 1, 0) ==
          doctest::Approx(0.269462).epsilon(1e-5));
    CHECK(success_probability_b(config(1.0, 0.5, 1.0, 0.95), 1, 0) ==
          doctest::Approx(0.142673).epsilon(1e-5));
    CHECK(success_probability_b(config(0.5, 0.9, 1.0, 0.95), 1, 0) ==
          doctest::Approx(0.359036).epsilon(1e-5));
}

TEST_CASE("probabilities sum to one over both heralds") {
    SchemeBConfig c = config(0.8, 0.5, 1.0, 0.95);
    double sum = 0.0;
    for (int n = 0; n <= 13; ++n)
        for (int k = 0; k <= 13; ++k) sum += success_probability_b(c, n, k);
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("entangling parameter factorizes through the auxiliary herald") {
    // B_{2m,k} = B_fig1a(n) * c0k(beta1 r1) * N_k
    SchemeBConfig c = config(0.8, 0.5, 1.0, 0.95);
    for (int n = 0; n <= 2; ++n)
        for (int k = 0; k <= 2; ++k) {
            SchemeConfig base;
            base.a0 = c.a0;
            base.a1 = c.a1;
            base.beta = c.beta;
            base.t = c.t;
            const double b1r1 = c.beta1 * c.r1();
            const double c0k =
                std::abs(displaced_amplitude(0, k, cplx{b1r1, 0.0}));
            const double nk = psi_k_normalization(c, k);
            CHECK(std::abs(coefficient_B_fig1b(c, n, k)) ==
                  doctest::Approx(std::abs(coefficient_B(base, n)) * c0k * nk)
                      .epsilon(1e-10));
        }
}

TEST_CASE("approximate states approach the exact ones for small r1") {
    const double t1 = std::sqrt(1.0 - 0.05 * 0.05); // r1 = 0.05
    for (double beta1 : {0.3, 1.0}) {
        SchemeBConfig c = config(0.8, 0.5, beta1, t1);
        for (int n = 0; n <= 2; ++n)
            for (int k = 1; k <= 2; ++k) {
                TwoModeHybridState st = build_approximate_conditional(c, n, k);
                CHECK(st.approx_fidelity >= 0.9999);
            }
    }
}

TEST_CASE("k=0 auxiliary herald degrades the approximation") {
    const double t1 = std::sqrt(1.0 - 0.05 * 0.05);
    SchemeBConfig c = config(0.8, 0.5, 1.0, t1);
    TwoModeHybridState st = build_approximate_conditional(c, 0, 0);
    CHECK(st.approx_fidelity < 0.99);
    CHECK(st.approx_fidelity > 0.9);
}

TEST_CASE("psi_k states are normalized") {
    SchemeBConfig c = config(0.8, 0.5, 1.0, 0.95);
    for (int k = 0; k <= 3; ++k)
        CHECK(psi_k_state(c, k).norm() ==
              doctest::Approx(1.0).epsilon(1e-10));
}
