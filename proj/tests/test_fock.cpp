#include "doctest.h"

#include <cmath>

#include "hybrid/entanglement.hpp"
#include "hybrid/fock.hpp"

using namespace hybrid;

TEST_CASE("beam splitter anchor identities") {
    const double t = 0.6, r = 0.8;
    ModeLayout layout{{3, 3}};

    FockVector s01 = make_fock(layout, {0, 1});
    FockVector out01 = apply_beam_splitter(s01, 0, 1, t);
    CHECK(std::abs(out01.at({1, 0}) - cplx{r, 0.0}) < 1e-14);
    CHECK(std::abs(out01.at({0, 1}) - cplx{t, 0.0}) < 1e-14);

    FockVector s10 = make_fock(layout, {1, 0});
    FockVector out10 = apply_beam_splitter(s10, 0, 1, t);
    CHECK(std::abs(out10.at({1, 0}) - cplx{t, 0.0}) < 1e-14);
    CHECK(std::abs(out10.at({0, 1}) - cplx{-r, 0.0}) < 1e-14);

    FockVector s11 = make_fock(layout, {1, 1});
    FockVector out11 = apply_beam_splitter(s11, 0, 1, t);
    const double s2 = std::sqrt(2.0);
    CHECK(std::abs(out11.at({2, 0}) - cplx{s2 * t * r, 0.0}) < 1e-13);
    CHECK(std::abs(out11.at({1, 1}) - cplx{t * t - r * r, 0.0}) < 1e-13);
    CHECK(std::abs(out11.at({0, 2}) - cplx{-s2 * r * t, 0.0}) < 1e-13);
}

TEST_CASE("beam splitter preserves norm") {
    FockVector st = make_coherent(24, cplx{0.9, 0.3});
    st = tensor(st, make_fock(ModeLayout{{24}}, {1}));
    FockVector out = apply_beam_splitter(st, 0, 1, 0.37);
    CHECK(out.norm() == doctest::Approx(st.norm()).epsilon(1e-12));
}

TEST_CASE("displacement composition for real and complex amplitudes") {
    const cplx a{0.4, -0.2}, b{-0.3, 0.5};
    FockVector lhs = make_coherent(26, a);
    lhs = apply_displacement(lhs, 0, b);
    FockVector rhs = make_coherent(26, a + b);
    CHECK(fidelity(lhs, rhs) == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("beam splitter / displacement covariance") {
    const double t = 0.5, r = std::sqrt(0.75), beta = 0.8;
    FockVector vac = make_fock(ModeLayout{{24, 24}}, {0, 0});
    FockVector lhs = apply_displacement(vac, 0, cplx{beta, 0.0});
    lhs = apply_beam_splitter(lhs, 0, 1, t);
    FockVector rhs = apply_displacement(vac, 0, cplx{beta * t, 0.0});
    rhs = apply_displacement(rhs, 1, cplx{-beta * r, 0.0});
    CHECK(fidelity(lhs, rhs) == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("displacement matrix is unitary on the retained block") {
    const int d = 20;
    auto D = displacement_matrix(d, cplx{0.5, 0.3});
    // column norms of the low columns are ~1 (tail below truncation)
    for (int n = 0; n < 6; ++n) {
        double colnorm = 0.0;
        for (int m = 0; m < d; ++m)
            colnorm += std::norm(D[static_cast<std::size_t>(n) * d + m]);
        CHECK(colnorm == doctest::Approx(1.0).epsilon(1e-10));
    }
}

TEST_CASE("photon-number projection splits unit probability") {
    FockVector st = make_coherent(24, cplx{1.1, 0.0});
    st = tensor(st, make_fock(ModeLayout{{16}}, {0}));
    st = apply_beam_splitter(st, 0, 1, 0.7);
    double total = 0.0;
    for (int n = 0; n <= 16; ++n)
        total += project_photon_number(st, 1, n).first;
    CHECK(total == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("range checks throw") {
    ModeLayout layout{{3, 3}};
    FockVector st = make_fock(layout, {0, 0});
    CHECK_THROWS_AS((void)st.at({4, 0}), OutOfRange);
    CHECK_THROWS_AS((void)st.at({0, 0, 0}), LayoutMismatch);
    CHECK_THROWS_AS(apply_beam_splitter(st, 0, 5, 0.5), InvalidModes);
}

TEST_CASE("cutoff policy floor") {
    CHECK(cutoff_for_amplitude(0.0) == 16);
    CHECK(cutoff_for_amplitude(2.0) >= 26);
}
