/*
 * acceptance — one pass/fail line per acceptance criterion.  Criteria are
 * evaluated as stated; criteria that the published settings cannot meet
 * fail honestly here (the verification suite documents the discrepancies).
 * Exit code: number of failed criteria.
 */
#include <chrono>
#include <cmath>
#include <cstdio>
#include <vector>

#include "hybrid/entanglement.hpp"
#include "hybrid/scheme_fig1a.hpp"
#include "hybrid/scheme_fig1b.hpp"
#include "hybrid/scheme_psi.hpp"
#include "hybrid/scheme_truncated.hpp"
#include "hybrid/sweep.hpp"
#include "hybrid/verify.hpp"

using namespace hybrid;

namespace {

int failures = 0;

void report(int idx, bool pass, const char* detail) {
    std::printf("criterion %2d: %s — %s\n", idx, pass ? "PASS" : "FAIL",
                detail);
    if (!pass) ++failures;
}

SchemeConfig config(double a0sq, double beta, double t,
                    InputParity parity = InputParity::even) {
    SchemeConfig c;
    c.a0 = cplx{std::sqrt(a0sq), 0.0};
    c.a1 = cplx{std::sqrt(1.0 - a0sq), 0.0};
    c.beta = beta;
    c.t = t;
    c.input_parity = parity;
    return c;
}

struct Row {
    int n;
    double a0sq, beta, t, P;
};

const Row kTable1[] = {
    {0, 0.5, 1.88492, 0.3, 0.0394327},   {0, 0.5, 1.56391, 0.5, 0.159716},
    {0, 0.5, 1.70713, 0.8, 0.350236},    {0, 0.4796, 0.1, 0.2, 0.969829},
    {0, 0.36, 0.1, 0.5, 0.833727},       {0, 0.11486, 0.2, 0.8, 0.427518},
    {0, 0.4797, 0.6, 0.2, 0.693138},     {1, 0.5, 1.26429, 0.8, 0.270754},
    {1, 0.5, 1.47621, 0.9, 0.262298},    {1, 0.97767, 0.8, 0.8, 0.09011},
    {1, 0.96389, 1.0, 0.9, 0.127707},    {1, 0.85578, 1.2, 0.9, 0.214779},
    {1, 0.44517, 1.3, 0.8, 0.266999},
};

void criterion1() {
    int ok_rows = 0;
    for (const Row& row : kTable1) {
        SchemeConfig c = config(row.a0sq, row.beta, row.t);
        const double neg =
            negativity_analytic(c.a0, c.a1, coefficient_B(c, row.n));
        const double prob = success_probability(c, row.n);
        const bool neg_ok = std::abs(neg - 1.0) <= 1e-3;
        const bool prob_ok = std::abs(prob - row.P) <= 1e-3 * row.P;
        if (neg_ok && prob_ok) ++ok_rows;
    }
    char detail[200];
    std::snprintf(detail, sizeof detail,
                  "reference-table reproduction: %d/13 rows meet both bounds "
                  "(unbalanced rows cap negativity below 1; vacuum-herald "
                  "rows list probabilities without the cat-norm ratio)",
                  ok_rows);
    report(1, ok_rows == 13, detail);
}

void criterion2() {
    bool ok = true;
    for (double beta : {0.5, 1.0, 1.5, 2.0})
        for (double t : {0.2, 0.5, 0.8}) {
            SchemeConfig c = config(0.5, beta, t);
            double s = 0.0;
            for (int n = 0; n <= 60; ++n) s += success_probability(c, n);
            ok = ok && s >= 1.0 - 1e-8;
        }
    SchemeBConfig cb;
    cb.a0 = cb.a1 = cplx{std::sqrt(0.5), 0.0};
    cb.beta = 0.8;
    cb.t = 0.5;
    cb.beta1 = 1.0;
    cb.t1 = 0.95;
    double s2 = 0.0;
    for (int n = 0; n <= 13; ++n)
        for (int k = 0; k <= 13; ++k) s2 += success_probability_b(cb, n, k);
    ok = ok && s2 >= 1.0 - 1e-6;
    report(2, ok, "probability completeness of both heralding schemes");
}

void criterion3() {
    double worst = 1.0;
    for (double beta : {0.3, 0.8, 1.5, 2.0})
        for (double t : {0.2, 0.5, 0.8})
            for (int n = 0; n <= 4; ++n) {
                SchemeConfig c = config(0.5, beta, t);
                auto [p, oracle] = oracle_conditional_state(c, n);
                (void)p;
                FockVector mine = build_conditional_state(c, n).to_joint_fock(
                    oracle.layout().cutoffs.at(0));
                worst = std::min(worst, fidelity(mine, oracle));
            }
    bool ok = worst >= 1.0 - 1e-9;

    for (int nt : {2, 3})
        for (int h : {0, 1})
            for (double beta : {0.3, 0.8, 1.5}) {
                SchemeConfig c = config(0.5, beta, 0.5);
                FockVector input = truncated_input(beta, nt, 12);
                auto [p, oracle] = oracle_conditional_state_custom(
                    input, c.a0, c.a1, c.t, h);
                (void)p;
                ok = ok && fidelity(build_truncated_conditional(c, nt, h)
                                        .to_joint_fock(12),
                                    oracle) >= 1.0 - 1e-9;
            }

    SchemeBConfig cb;
    cb.a0 = cb.a1 = cplx{std::sqrt(0.5), 0.0};
    cb.beta = 0.8;
    cb.t = 0.5;
    cb.beta1 = 1.0;
    cb.t1 = 0.95;
    for (int n = 0; n <= 1; ++n)
        for (int k = 0; k <= 1; ++k) {
            auto [p, oracle] = oracle_conditional_state_b(cb, n, k);
            (void)p;
            ok = ok &&
                 fidelity(build_exact_conditional(
                              cb, n, k, oracle.layout().cutoffs.at(0))
                              .to_joint_fock(),
                          oracle) >= 1.0 - 1e-8;
        }

    for (double A : {0.0, 0.5, 1.0})
        for (int n = 0; n <= 3; ++n) {
            PsiSchemeConfig c;
            c.a0 = c.a1 = cplx{std::sqrt(0.5), 0.0};
            c.beta = 0.8;
            c.t = 0.5;
            c.A = cplx{A, 0.0};
            auto [p, oracle] = oracle_psi_conditional(c, n);
            (void)p;
            ok = ok && fidelity(build_psi_conditional(c, n).to_joint_fock(
                                    oracle.layout().cutoffs.at(0)),
                                oracle) >= 1.0 - 1e-8;
        }
    report(3, ok, "analytic/oracle equivalence across all four schemes");
}

void criterion4() {
    Eigen::VectorXcd bell(4);
    bell << 1.0, 0.0, 0.0, 1.0;
    bool ok = std::abs(negativity_numeric(density_from_pure(bell, 2, 2)) -
                       1.0) <= 1e-12;
    Eigen::VectorXcd prod(4);
    prod << 0.6, 0.8, 0.0, 0.0;
    ok = ok && negativity_numeric(density_from_pure(prod, 2, 2)) <= 1e-10;
    for (double beta : {0.3, 0.8, 1.5, 2.0})
        for (double t : {0.2, 0.5, 0.8})
            for (int n = 0; n <= 4; ++n) {
                SchemeConfig c = config(0.5, beta, t);
                auto [p, st] = oracle_conditional_state(c, n);
                (void)p;
                const double numeric =
                    negativity_numeric(density_from_pure(st, 2));
                const double analytic = negativity_analytic(
                    c.a0, c.a1, coefficient_B(c, n));
                ok = ok && std::abs(numeric - analytic) <= 1e-7;
            }
    report(4, ok, "partial-transpose negativity against the closed forms");
}

void criterion5() {
    double worst = 0.0;
    for (double beta : {0.5, 1.0, 1.8})
        for (int n = 0; n <= 3; ++n) {
            SchemeConfig c = config(0.5, beta, 0.5);
            HybridState st = build_conditional_state(c, n);
            for (const HybridBranch& b : st.branches) {
                const int cutoff = cutoff_for_amplitude(beta) + 6;
                FockVector vec = b.cv.to_fock(cutoff);
                vec.normalize();
                double even = 0.0, odd = 0.0;
                for (std::size_t m = 0; m < vec.amplitudes().size(); ++m)
                    (m % 2 ? odd : even) += std::norm(vec.amplitudes()[m]);
                worst = std::max(worst, std::min(even, odd));
            }
        }
    char detail[96];
    std::snprintf(detail, sizeof detail,
                  "parity purity: worst wrong-parity mass %.3g", worst);
    report(5, worst <= 1e-10, detail);
}

void criterion6() {
    double worst = 1.0;
    SchemeBConfig cb;
    cb.a0 = cb.a1 = cplx{std::sqrt(0.5), 0.0};
    cb.beta = 0.8;
    cb.t = 0.5;
    cb.t1 = std::sqrt(1.0 - 0.05 * 0.05); // r1 = 0.05
    for (double beta1 : {0.3, 1.0}) {
        cb.beta1 = beta1;
        for (int n = 0; n <= 2; ++n)
            for (int k = 0; k <= 2; ++k)
                worst = std::min(
                    worst,
                    build_approximate_conditional(cb, n, k).approx_fidelity);
    }
    char detail[128];
    std::snprintf(detail, sizeof detail,
                  "approximation fidelity >= 0.99 claim: worst %.6f (the "
                  "k = 0 auxiliary outcome breaks the bound)",
                  worst);
    report(6, worst >= 0.99, detail);
}

void criterion7() {
    double worst_dev = 0.0;
    for (int nt : {2, 3})
        for (int h : {0, 1})
            for (double beta : {0.1, 0.45, 0.8, 1.15, 1.5})
                for (double t : {0.2, 0.5, 0.8}) {
                    SchemeConfig c = config(0.5, beta, t);
                    TruncatedFidelity f = fidelity_to_genuine(c, nt, h);
                    if (f.formula_valid)
                        worst_dev = std::max(
                            worst_dev,
                            std::abs(f.formula_value - f.direct_value));
                }
    char detail[96];
    std::snprintf(detail, sizeof detail,
                  "closed-form fidelity audit: worst deviation %.3g",
                  worst_dev);
    report(7, worst_dev <= 1e-9, detail);
}

void criterion8() {
    double worst = 1.0;
    for (double A : {0.0, 0.5, 1.0})
        for (int n = 0; n <= 3; ++n) {
            PsiSchemeConfig c;
            c.a0 = c.a1 = cplx{std::sqrt(0.5), 0.0};
            c.beta = 0.8;
            c.t = 0.5;
            c.A = cplx{A, 0.0};
            auto [p, oracle] = oracle_psi_conditional(c, n);
            (void)p;
            worst = std::min(worst,
                             fidelity(build_psi_conditional(c, n).to_joint_fock(
                                          oracle.layout().cutoffs.at(0)),
                                      oracle));
        }
    char detail[160];
    std::snprintf(detail, sizeof detail,
                  "coefficient-set arbitration: adopted transmitted-argument "
                  "reading matches the oracle, worst fidelity %.12f",
                  worst);
    report(8, worst >= 1.0 - 1e-8, detail);
}

void criterion9() {
    SchemeConfig small = config(0.5, 0.05, 0.05);
    const bool p0_ok = success_probability(small, 0) > 0.9;

    SchemeConfig ditch = config(0.5, 0.01, 0.5);
    const double n1 =
        negativity_analytic(ditch.a0, ditch.a1, coefficient_B(ditch, 1));
    const double n0 =
        negativity_analytic(ditch.a0, ditch.a1, coefficient_B(ditch, 0));
    const bool ditch_ok = n1 < 1e-3 && n0 > 0.5;

    double mx = 0.0;
    for (double beta : {0.25, 0.5, 0.75, 1.0})
        for (double t : {0.1, 0.3, 0.5, 0.7, 0.9}) {
            SchemeBConfig cb;
            cb.a0 = cb.a1 = cplx{std::sqrt(0.5), 0.0};
            cb.beta = beta;
            cb.t = t;
            cb.beta1 = 1.0;
            cb.t1 = 0.95;
            mx = std::max(mx, success_probability_b(cb, 1, 0));
            mx = std::max(mx, success_probability_b(cb, 1, 1));
        }
    const bool bound_ok = mx <= 0.12;
    char detail[200];
    std::snprintf(detail, sizeof detail,
                  "qualitative claims: P0 bound %s, negativity ditch %s, "
                  "single-photon-herald probability cap %s (max %.4f > 0.12)",
                  p0_ok ? "ok" : "violated", ditch_ok ? "ok" : "violated",
                  bound_ok ? "ok" : "violated", mx);
    report(9, p0_ok && ditch_ok && bound_ok, detail);
}

void criterion10() {
    using clock = std::chrono::steady_clock;
    auto t0 = clock::now();
    SweepRequest req;
    req.scheme = SchemeKind::fig1a;
    req.quantity = SweepQuantity::probability;
    req.herald = {0};
    req.axis1 = make_axis("beta", 0.05, 2.5, 100);
    req.axis2 = make_axis("t", 0.02, 0.98, 100);
    SweepGrid p0 = sweep(req);
    req.quantity = SweepQuantity::negativity;
    SweepGrid n0 = sweep(req);
    (void)p0;
    (void)n0;
    const double sweep_s =
        std::chrono::duration<double>(clock::now() - t0).count();

    t0 = clock::now();
    VerificationReport rep = run_all(ToleranceProfile::standard);
    const double verify_s =
        std::chrono::duration<double>(clock::now() - t0).count();

    char detail[160];
    std::snprintf(detail, sizeof detail,
                  "performance: 100x100 P+N sweep %.2f s (< 60), verify "
                  "suite %.2f s (< 600), %d checks, %d failures",
                  sweep_s, verify_s, static_cast<int>(rep.checks.size()),
                  rep.count("fail"));
    report(10, sweep_s < 60.0 && verify_s < 600.0 && !rep.has_failures(),
           detail);
}

} // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    criterion10();
    std::printf("acceptance: %d of 10 criteria failed\n", failures);
    return failures;
}
