#include "doctest.h"

#include <cmath>

#include "hybrid/analytic.hpp"
#include "hybrid/entanglement.hpp"

using namespace hybrid;

TEST_CASE("displaced amplitudes match the oracle displacement matrix") {
    for (cplx alpha : {cplx{0.7, 0.0}, cplx{0.4, 0.3}, cplx{-1.1, 0.2}}) {
        const int d = 30;
        auto D = displacement_matrix(d, alpha);
        const double env = envelope(alpha);
        for (int n = 0; n <= 2; ++n)
            for (int m = 0; m <= 12; ++m) {
                const cplx oracle = D[static_cast<std::size_t>(n) * d + m] / env;
                CHECK(std::abs(oracle - displaced_amplitude(n, m, alpha)) <
                      1e-11);
            }
    }
}

TEST_CASE("parity flip identity") {
    for (int n = 0; n <= 2; ++n)
        for (int m = 0; m <= 10; ++m) {
            CHECK(parity_flip_identity_check(n, m, cplx{0.9, 0.0}));
            CHECK(parity_flip_identity_check(n, m, cplx{0.3, -0.6}));
        }
}

TEST_CASE("normalization constants against brute-force norms") {
    const NormKind kinds[] = {NormKind::ev0, NormKind::odd0, NormKind::ev1,
                              NormKind::odd1, NormKind::ev2, NormKind::odd2};
    for (NormKind kind : kinds) {
        for (double x : {0.3, 0.8, 1.5}) {
            const int n = (kind == NormKind::ev0 || kind == NormKind::odd0)
                              ? 0
                              : (kind == NormKind::ev1 ||
                                 kind == NormKind::odd1)
                                    ? 1
                                    : 2;
            const bool plus = (kind == NormKind::ev0 ||
                               kind == NormKind::odd1 ||
                               kind == NormKind::ev2);
            const int cutoff = cutoff_for_amplitude(x) + 4;
            FockVector a = make_displaced_number(cutoff, n, cplx{-x, 0.0});
            FockVector b = make_displaced_number(cutoff, n, cplx{x, 0.0});
            b *= cplx{plus ? 1.0 : -1.0, 0.0};
            a += b;
            CHECK(normalization(kind, x) * a.norm() ==
                  doctest::Approx(1.0).epsilon(1e-10));
        }
    }
}

TEST_CASE("singular normalizations throw at x = 0") {
    CHECK_THROWS_AS(normalization(NormKind::odd0, 0.0), DegenerateState);
    CHECK_THROWS_AS(normalization(NormKind::ev1, 0.0), DegenerateState);
    CHECK_THROWS_AS(normalization(NormKind::odd2, 0.0), DegenerateState);
    CHECK(normalization(NormKind::ev0, 0.0) ==
          doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("dns_overlap equals brute-force inner products") {
    const double x = 0.9;
    const int cutoff = cutoff_for_amplitude(x) + 6;
    for (int n1 = 0; n1 <= 2; ++n1)
        for (int n2 = 0; n2 <= 2; ++n2)
            for (int s1 : {-1, 1})
                for (int s2 : {-1, 1}) {
                    FockVector a =
                        make_displaced_number(cutoff, n1, cplx{s1 * x, 0.0});
                    FockVector b =
                        make_displaced_number(cutoff, n2, cplx{s2 * x, 0.0});
                    CHECK(std::abs(dns_overlap(n1, s1, n2, s2, x) -
                                   inner_product(a, b)) < 1e-10);
                }
}

TEST_CASE("CvCombo norms and overlaps agree with materialized vectors") {
    const double x = 0.7;
    CvCombo combo(x);
    combo.add(cplx{0.6, 0.1}, 0, -1);
    combo.add(cplx{-0.3, 0.0}, 1, 1);
    combo.add(cplx{0.2, -0.4}, 2, -1);
    const int cutoff = cutoff_for_amplitude(x) + 8;
    FockVector vec = combo.to_fock(cutoff);
    CHECK(combo.squared_norm() ==
          doctest::Approx(vec.squared_norm()).epsilon(1e-10));

    CvCombo other(x);
    other.add(cplx{1.0, 0.0}, 1, 1);
    FockVector ovec = other.to_fock(cutoff);
    CHECK(std::abs(combo.overlap(other) - inner_product(vec, ovec)) < 1e-10);
}

TEST_CASE("named CV states are normalized") {
    for (CvKind kind : {CvKind::scs_even, CvKind::scs_odd, CvKind::sdsps_even,
                        CvKind::sdsps_odd, CvKind::sdtps_even}) {
        FockVector st = build_cv_state(kind, 0.9);
        CHECK(st.norm() == doctest::Approx(1.0).epsilon(1e-10));
    }
    CvExtra extra;
    extra.A = cplx{0.5, 0.0};
    CHECK(build_cv_state(CvKind::psi_2m, 0.8, extra).norm() ==
          doctest::Approx(1.0).epsilon(1e-10));
    CHECK(build_cv_state(CvKind::psi_2m1, 0.8, extra).norm() ==
          doctest::Approx(1.0).epsilon(1e-10));
    extra.terms = 3;
    CHECK(build_cv_state(CvKind::truncated_scs, 0.8, extra).norm() ==
          doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("psi input normalization matches the combo norm") {
    for (double beta : {0.5, 0.8, 1.3})
        for (double A : {0.0, 0.5, 1.0})
            for (bool odd : {true, false}) {
                CvCombo combo = psi_input_combo(beta, cplx{A, 0.0}, odd);
                CHECK(std::sqrt(combo.squared_norm()) ==
                      doctest::Approx(1.0).epsilon(1e-12));
                // the combo includes the closed-form normalization
                CHECK(psi_input_normalization(beta, cplx{A, 0.0}, odd) > 0.0);
            }
}

TEST_CASE("parity purity of named states") {
    // parity-labeled states carry no wrong-parity amplitude mass
    for (bool even : {true, false}) {
        FockVector st = build_cv_state(even ? CvKind::scs_even
                                            : CvKind::scs_odd,
                                       1.1);
        double wrong = 0.0;
        for (std::size_t m = 0; m < st.amplitudes().size(); ++m)
            if ((m % 2 == 0) != even) wrong += std::norm(st.amplitudes()[m]);
        CHECK(wrong < 1e-10);
    }
}
