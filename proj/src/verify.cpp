/*
 * verify.cpp — registry of verification checks.
 *
 * Conventions: every check compares `measured` against `expected` within
 * `tolerance` (absolute).  Checks marked as claims audit a printed value or
 * statement from the reference text against the oracle-validated engines;
 * when such a check misses its tolerance it is reported as
 * discrepancy-documented (with the oracle-consistent value in `measured`)
 * rather than as a failure.  Engine checks fail hard.
 */
#include "hybrid/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>

#include "hybrid/analytic.hpp"
#include "hybrid/entanglement.hpp"
#include "hybrid/fock.hpp"
#include "hybrid/scheme_fig1a.hpp"
#include "hybrid/scheme_fig1b.hpp"
#include "hybrid/scheme_psi.hpp"
#include "hybrid/scheme_truncated.hpp"
#include "hybrid/sweep.hpp"

namespace hybrid {

namespace {

struct CheckSpec {
    std::string name;
    bool paper_claim; // mismatch documents a discrepancy instead of failing
    std::string note;
    // fills measured / expected / tolerance
    std::function<void(CheckResult&, ToleranceProfile)> run;
};

double tol_for(ToleranceProfile p, double standard, double strict) {
    return p == ToleranceProfile::strict ? strict : standard;
}

const cplx kBal{std::sqrt(0.5), 0.0};

SchemeConfig make_config(double a0sq, double beta, double t,
                         InputParity parity = InputParity::even) {
    SchemeConfig c;
    c.a0 = cplx{std::sqrt(a0sq), 0.0};
    c.a1 = cplx{std::sqrt(1.0 - a0sq), 0.0};
    c.beta = beta;
    c.t = t;
    c.input_parity = parity;
    return c;
}

// Branch norms (vacuum, photon) of a heralded joint vector over {cv, qubit}.
std::pair<double, double> joint_branch_norms(const FockVector& joint) {
    const auto& amps = joint.amplitudes();
    double v2 = 0.0, p2 = 0.0;
    for (std::size_t i = 0; i < amps.size(); ++i) {
        if (i % 2 == 0)
            v2 += std::norm(amps[i]);
        else
            p2 += std::norm(amps[i]);
    }
    return {std::sqrt(v2), std::sqrt(p2)};
}

struct Table1Row {
    int n;
    double a0sq, beta, t, P;
};

const Table1Row kTable1[] = {
    {0, 0.5, 1.88492, 0.3, 0.0394327},
    {0, 0.5, 1.56391, 0.5, 0.159716},
    {0, 0.5, 1.70713, 0.8, 0.350236},
    {0, 0.4796, 0.1, 0.2, 0.969829},
    {0, 0.36, 0.1, 0.5, 0.833727},
    {0, 0.11486, 0.2, 0.8, 0.427518},
    {0, 0.4797, 0.6, 0.2, 0.693138},
    {1, 0.5, 1.26429, 0.8, 0.270754},
    {1, 0.5, 1.47621, 0.9, 0.262298},
    {1, 0.97767, 0.8, 0.8, 0.09011},
    {1, 0.96389, 1.0, 0.9, 0.127707},
    {1, 0.85578, 1.2, 0.9, 0.214779},
    {1, 0.44517, 1.3, 0.8, 0.266999},
};

const double kFidBetas[] = {0.3, 0.8, 1.5, 2.0};
const double kFidTs[] = {0.2, 0.5, 0.8};

// ---------------------------------------------------------------------------

std::vector<CheckSpec> build_registry() {
    std::vector<CheckSpec> reg;
    auto add = [&](std::string name, bool claim, std::string note,
                   std::function<void(CheckResult&, ToleranceProfile)> fn) {
        reg.push_back(CheckSpec{std::move(name), claim, std::move(note),
                                std::move(fn)});
    };

    // --- oracle engine anchors ---------------------------------------------
    add("fock.bs_anchor", false, "", [](CheckResult& c, ToleranceProfile) {
        FockVector st = make_fock(ModeLayout{{3, 3}}, {0, 1});
        FockVector out = apply_beam_splitter(st, 0, 1, 0.6);
        double dev = std::abs(out.at({1, 0}) - cplx{0.8, 0.0}) +
                     std::abs(out.at({0, 1}) - cplx{0.6, 0.0});
        FockVector st2 = make_fock(ModeLayout{{3, 3}}, {1, 0});
        FockVector out2 = apply_beam_splitter(st2, 0, 1, 0.6);
        dev += std::abs(out2.at({1, 0}) - cplx{0.6, 0.0}) +
               std::abs(out2.at({0, 1}) - cplx{-0.8, 0.0});
        c.measured = dev;
        c.expected = 0.0;
        c.tolerance = 1e-12;
    });

    add("fock.displacement_compose", false, "",
        [](CheckResult& c, ToleranceProfile) {
            const cplx alpha{0.3, 0.2}, beta{0.1, -0.4};
            FockVector a = make_coherent(24, alpha);
            a = apply_displacement(a, 0, beta);
            FockVector b = make_coherent(24, alpha + beta);
            c.measured = fidelity(a, b);
            c.expected = 1.0;
            c.tolerance = 1e-10;
        });

    add("fock.bs_displacement_covariance", false, "",
        [](CheckResult& c, ToleranceProfile) {
            const double t = 0.7, r = std::sqrt(1.0 - 0.49), beta = 0.9;
            FockVector vac = make_fock(ModeLayout{{24, 24}}, {0, 0});
            FockVector lhs = apply_displacement(vac, 0, cplx{beta, 0.0});
            lhs = apply_beam_splitter(lhs, 0, 1, t);
            FockVector rhs = apply_displacement(vac, 0, cplx{beta * t, 0.0});
            rhs = apply_displacement(rhs, 1, cplx{-beta * r, 0.0});
            c.measured = fidelity(lhs, rhs);
            c.expected = 1.0;
            c.tolerance = 1e-10;
        });

    // --- analytic building blocks ------------------------------------------
    add("analytic.normalizations", false, "",
        [](CheckResult& c, ToleranceProfile) {
            double dev = 0.0;
            const NormKind kinds[] = {NormKind::ev0,  NormKind::odd0,
                                      NormKind::ev1,  NormKind::odd1,
                                      NormKind::ev2,  NormKind::odd2};
            for (NormKind k : kinds) {
                for (double x : {0.4, 0.9, 1.6}) {
                    const int n = (k == NormKind::ev0 || k == NormKind::odd0)
                                      ? 0
                                      : (k == NormKind::ev1 ||
                                         k == NormKind::odd1)
                                            ? 1
                                            : 2;
                    const bool plus =
                        (k == NormKind::ev0 || k == NormKind::odd1 ||
                         k == NormKind::ev2);
                    CvCombo combo(x);
                    combo.add(cplx{1.0, 0.0}, n, -1);
                    combo.add(cplx{plus ? 1.0 : -1.0, 0.0}, n, +1);
                    dev = std::max(dev,
                                   std::abs(normalization(k, x) *
                                                std::sqrt(combo.squared_norm()) -
                                            1.0));
                }
            }
            c.measured = dev;
            c.expected = 0.0;
            c.tolerance = 1e-12;
        });

    add("analytic.parity_flip", false, "",
        [](CheckResult& c, ToleranceProfile) {
            bool ok = true;
            for (int n = 0; n <= 2; ++n)
                for (int m = 0; m <= 8; ++m)
                    ok = ok && parity_flip_identity_check(n, m, cplx{0.7, 0.3});
            c.measured = ok ? 1.0 : 0.0;
            c.expected = 1.0;
            c.tolerance = 0.0;
        });

    add("analytic.dns_amplitudes_vs_oracle", false, "",
        [](CheckResult& c, ToleranceProfile) {
            const cplx alpha{0.7, 0.0};
            const auto D = displacement_matrix(25, alpha);
            double dev = 0.0;
            for (int n = 0; n <= 2; ++n)
                for (int m = 0; m <= 10; ++m) {
                    const cplx oracle =
                        D[static_cast<std::size_t>(n) * 25 + m] /
                        envelope(alpha);
                    dev = std::max(dev, std::abs(oracle -
                                                 displaced_amplitude(n, m,
                                                                     alpha)));
                }
            c.measured = dev;
            c.expected = 0.0;
            c.tolerance = 1e-12;
        });

    // --- single-BS scheme ---------------------------------------------------
    add("fig1a.oracle_state_fidelity", false, "",
        [](CheckResult& c, ToleranceProfile p) {
            double min_fid = 1.0;
            for (double beta : kFidBetas)
                for (double t : kFidTs)
                    for (int n = 0; n <= 4; ++n) {
                        SchemeConfig cfg = make_config(0.5, beta, t);
                        auto [prob, oracle] = oracle_conditional_state(cfg, n);
                        (void)prob;
                        const int cutoff = oracle.layout().cutoffs.at(0);
                        FockVector mine = build_conditional_state(cfg, n)
                                              .to_joint_fock(cutoff);
                        min_fid = std::min(min_fid, fidelity(mine, oracle));
                    }
            c.measured = min_fid;
            c.expected = 1.0;
            c.tolerance = tol_for(p, 1e-9, 1e-10);
        });

    add("fig1a.oracle_probability", false, "",
        [](CheckResult& c, ToleranceProfile p) {
            double dev = 0.0;
            for (double beta : kFidBetas)
                for (double t : kFidTs)
                    for (int n = 0; n <= 4; ++n) {
                        SchemeConfig cfg = make_config(0.5, beta, t);
                        const double po =
                            oracle_conditional_state(cfg, n).first;
                        dev = std::max(dev,
                                       std::abs(po -
                                                success_probability(cfg, n)));
                    }
            c.measured = dev;
            c.expected = 0.0;
            c.tolerance = tol_for(p, 1e-9, 1e-10);
        });

    add("fig1a.odd_input_oracle", false, "",
        [](CheckResult& c, ToleranceProfile p) {
            double min_fid = 1.0;
            for (int n = 0; n <= 2; ++n) {
                SchemeConfig cfg =
                    make_config(0.5, 0.8, 0.5, InputParity::odd);
                auto [prob, oracle] = oracle_conditional_state(cfg, n);
                (void)prob;
                const int cutoff = oracle.layout().cutoffs.at(0);
                FockVector mine =
                    build_conditional_state(cfg, n).to_joint_fock(cutoff);
                min_fid = std::min(min_fid, fidelity(mine, oracle));
            }
            c.measured = min_fid;
            c.expected = 1.0;
            c.tolerance = tol_for(p, 1e-9, 1e-10);
        });

    add("fig1a.B_vs_oracle_branch_ratio", false, "",
        [](CheckResult& c, ToleranceProfile p) {
            double dev = 0.0;
            for (double beta : {0.8, 1.5})
                for (double t : kFidTs)
                    for (int n = 0; n <= 3; ++n) {
                        SchemeConfig cfg = make_config(0.5, beta, t);
                        auto [prob, oracle] = oracle_conditional_state(cfg, n);
                        (void)prob;
                        auto [wv, wp] = joint_branch_norms(oracle);
                        dev = std::max(
                            dev, std::abs(wv / wp -
                                          std::abs(coefficient_B(cfg, n))));
                    }
            c.measured = dev;
            c.expected = 0.0;
            c.tolerance = tol_for(p, 1e-8, 1e-9);
        });

    add("fig1a.sum_P", false, "", [](CheckResult& c, ToleranceProfile) {
        double min_sum = 1.0;
        for (double beta : {0.5, 1.0, 2.0})
            for (double t : kFidTs) {
                SchemeConfig cfg = make_config(0.5, beta, t);
                double s = 0.0;
                for (int n = 0; n <= 40; ++n)
                    s += success_probability(cfg, n);
                min_sum = std::min(min_sum, s);
            }
        c.measured = min_sum;
        c.expected = 1.0;
        c.tolerance = 1e-8;
    });

    add("eq16_18.printed_P_formula_vs_oracle", false,
        "printed probability formulas include the cat-normalization ratio "
        "squared; they match the oracle as printed",
        [](CheckResult& c, ToleranceProfile p) {
            double dev = 0.0;
            for (const Table1Row& row : kTable1) {
                SchemeConfig cfg = make_config(row.a0sq, row.beta, row.t);
                const double po = oracle_conditional_state(cfg, row.n).first;
                dev = std::max(dev,
                               std::abs(po - success_probability(cfg, row.n)));
            }
            c.measured = dev;
            c.expected = 0.0;
            c.tolerance = tol_for(p, 1e-9, 1e-10);
        });

    // --- reference table ----------------------------------------------------
    for (int i = 0; i < 13; ++i) {
        const Table1Row row = kTable1[i];
        char name[64];
        std::snprintf(name, sizeof name, "table1.row%02d.negativity", i + 1);
        add(name, true,
            "published settings promise maximal negativity; rows where the "
            "oracle-validated value differs are documented",
            [row](CheckResult& c, ToleranceProfile) {
                SchemeConfig cfg = make_config(row.a0sq, row.beta, row.t);
                const cplx B = coefficient_B(cfg, row.n);
                c.measured = negativity_analytic(cfg.a0, cfg.a1, B);
                c.expected = 1.0;
                c.tolerance = 1e-3;
            });
        std::snprintf(name, sizeof name, "table1.row%02d.probability", i + 1);
        add(name, true,
            "published P values for the vacuum herald omit the printed "
            "formulas' cat-normalization ratio; the oracle-consistent value "
            "is reported",
            [row](CheckResult& c, ToleranceProfile) {
                SchemeConfig cfg = make_config(row.a0sq, row.beta, row.t);
                c.measured = success_probability(cfg, row.n);
                c.expected = row.P;
                c.tolerance = 1e-3 * row.P; // relative 1e-3
            });
    }

    add("table1.a0sq_from_condition", true,
        "a0^2 = B^4/(1+B^4) reproduces the published 0.4796; the B^2/(1+B^2) "
        "reading does not",
        [](CheckResult& c, ToleranceProfile) {
            SchemeConfig cfg = make_config(0.5, 0.1, 0.2);
            const double B = std::abs(coefficient_B(cfg, 0));
            const double b4 = std::pow(B, 4);
            c.measured = b4 / (1.0 + b4);
            c.expected = 0.4796;
            c.tolerance = 1e-3;
        });

    // --- two-BS scheme ------------------------------------------------------
    add("fig1b.oracle_state_fidelity", false, "",
        [](CheckResult& c, ToleranceProfile p) {
            SchemeBConfig cfg;
            cfg.a0 = cfg.a1 = kBal;
            cfg.beta = 0.8;
            cfg.t = 0.5;
            cfg.beta1 = 1.0;
            cfg.t1 = 0.95;
            double min_fid = 1.0;
            for (int n = 0; n <= 1; ++n)
                for (int k = 0; k <= 1; ++k) {
                    auto [prob, oracle] =
                        oracle_conditional_state_b(cfg, n, k);
                    (void)prob;
                    FockVector mine =
                        build_exact_conditional(
                            cfg, n, k, oracle.layout().cutoffs.at(0))
                            .to_joint_fock();
                    min_fid = std::min(min_fid, fidelity(mine, oracle));
                }
            c.measured = min_fid;
            c.expected = 1.0;
            c.tolerance = tol_for(p, 1e-8, 1e-9);
        });

    add("fig1b.oracle_probability", false, "",
        [](CheckResult& c, ToleranceProfile p) {
            SchemeBConfig cfg;
            cfg.a0 = cfg.a1 = kBal;
            cfg.beta = 0.8;
            cfg.t = 0.5;
            cfg.beta1 = 1.0;
            cfg.t1 = 0.95;
            double dev = 0.0;
            for (int n = 0; n <= 1; ++n)
                for (int k = 0; k <= 1; ++k)
                    dev = std::max(
                        dev,
                        std::abs(oracle_conditional_state_b(cfg, n, k).first -
                                 success_probability_b(cfg, n, k)));
            c.measured = dev;
            c.expected = 0.0;
            c.tolerance = tol_for(p, 1e-8, 1e-9);
        });

    add("fig1b.sum_P", false, "", [](CheckResult& c, ToleranceProfile) {
        SchemeBConfig cfg;
        cfg.a0 = cfg.a1 = kBal;
        cfg.beta = 0.8;
        cfg.t = 0.5;
        cfg.beta1 = 1.0;
        cfg.t1 = 0.95;
        double s = 0.0;
        for (int n = 0; n <= 13; ++n)
            for (int k = 0; k <= 13; ++k)
                s += success_probability_b(cfg, n, k);
        c.measured = s;
        c.expected = 1.0;
        c.tolerance = 1e-6;
    });

    add("fig1b.B_vs_oracle_branch_ratio", false, "",
        [](CheckResult& c, ToleranceProfile p) {
            SchemeBConfig cfg;
            cfg.a0 = cfg.a1 = kBal;
            cfg.beta = 0.8;
            cfg.t = 0.5;
            cfg.beta1 = 1.0;
            cfg.t1 = 0.95;
            double dev = 0.0;
            for (int n = 0; n <= 1; ++n)
                for (int k = 0; k <= 1; ++k) {
                    auto [prob, oracle] =
                        oracle_conditional_state_b(cfg, n, k);
                    (void)prob;
                    // rails: |01> carries the a0 branch, |10> the a1 branch
                    const auto& amps = oracle.amplitudes();
                    double p01 = 0.0, p10 = 0.0;
                    for (std::size_t i = 0; i < amps.size(); ++i) {
                        const std::size_t rail = i % 4;
                        if (rail == 1) p01 += std::norm(amps[i]);
                        if (rail == 2) p10 += std::norm(amps[i]);
                    }
                    const double ratio = std::sqrt(p10 / p01);
                    dev = std::max(
                        dev, std::abs(ratio -
                                      std::abs(coefficient_B_fig1b(cfg, n,
                                                                   k))));
                }
            c.measured = dev;
            c.expected = 0.0;
            c.tolerance = tol_for(p, 1e-8, 1e-9);
        });

    add("fig1b.psi_k_displacement_argument", true,
        "printed auxiliary-state kets carry the reflected argument; the "
        "transmitted argument (-beta1*t1) is the oracle-consistent reading "
        "and is adopted",
        [](CheckResult& c, ToleranceProfile) {
            SchemeBConfig cfg;
            cfg.a0 = cfg.a1 = kBal;
            cfg.beta = 0.8;
            cfg.t = 0.5;
            cfg.beta1 = 1.0;
            cfg.t1 = 0.95;
            const int k = 1, cutoff = cutoff_for_amplitude(cfg.beta1);
            const cplx b1r1{cfg.beta1 * cfg.r1(), 0.0};
            FockVector adopted = psi_k_state(cfg, k, cutoff);
            // printed variant: kets displaced by -beta1*r1
            FockVector printed =
                make_displaced_number(cutoff, 1, -b1r1);
            printed *= cfg.r1() * displaced_amplitude(0, k, b1r1);
            FockVector coh = make_coherent(cutoff, -b1r1);
            coh *= cfg.t1 * displaced_amplitude(1, k, b1r1);
            printed += coh;
            printed.normalize();
            c.measured = fidelity(adopted, printed);
            c.expected = 1.0;
            c.tolerance = 1e-6;
        });

    add("fig1b.approx_fidelity_claim", true,
        "the r1->0 approximate states fall below fidelity 0.99 for the "
        "vacuum outcome in the auxiliary herald (k=0); all k>=1 outcomes "
        "exceed 0.9999",
        [](CheckResult& c, ToleranceProfile) {
            double min_fid = 1.0;
            for (double beta1 : {0.3, 1.0}) {
                SchemeBConfig cfg;
                cfg.a0 = cfg.a1 = kBal;
                cfg.beta = 0.8;
                cfg.t = 0.5;
                cfg.beta1 = beta1;
                cfg.t1 = std::sqrt(1.0 - 0.05 * 0.05);
                for (int n = 0; n <= 2; ++n)
                    for (int k = 0; k <= 2; ++k)
                        min_fid = std::min(
                            min_fid,
                            build_approximate_conditional(cfg, n, k)
                                .approx_fidelity);
            }
            c.measured = min_fid;
            c.expected = 1.0;
            c.tolerance = 0.01; // the >= 0.99 claim
        });

    add("fig1b.P10_P11_range_claim", true,
        "the claimed <= 0.12 range for the single-photon-first heralds is "
        "exceeded; the oracle confirms the larger engine value",
        [](CheckResult& c, ToleranceProfile) {
            double mx = 0.0;
            for (double beta : {0.25, 0.5, 0.75, 1.0})
                for (double t : {0.1, 0.3, 0.5, 0.7, 0.9}) {
                    SchemeBConfig cfg;
                    cfg.a0 = cfg.a1 = kBal;
                    cfg.beta = beta;
                    cfg.t = t;
                    cfg.beta1 = 1.0;
                    cfg.t1 = 0.95;
                    mx = std::max(mx, success_probability_b(cfg, 1, 0));
                    mx = std::max(mx, success_probability_b(cfg, 1, 1));
                }
            c.measured = mx;
            c.expected = 0.12;
            c.tolerance = 0.0; // upper bound: pass iff measured <= expected
        });

    // --- truncated inputs ---------------------------------------------------
    add("truncated.oracle_state_fidelity", false, "",
        [](CheckResult& c, ToleranceProfile p) {
            double min_fid = 1.0;
            for (int nt : {2, 3})
                for (int h : {0, 1})
                    for (double beta : {0.3, 0.8, 1.5})
                        for (double t : kFidTs) {
                            SchemeConfig cfg = make_config(0.5, beta, t);
                            const int cutoff = 12;
                            FockVector input =
                                truncated_input(beta, nt, cutoff);
                            auto [prob, oracle] =
                                oracle_conditional_state_custom(
                                    input, cfg.a0, cfg.a1, t, h);
                            (void)prob;
                            FockVector mine =
                                build_truncated_conditional(cfg, nt, h)
                                    .to_joint_fock(cutoff);
                            min_fid =
                                std::min(min_fid, fidelity(mine, oracle));
                        }
            c.measured = min_fid;
            c.expected = 1.0;
            c.tolerance = tol_for(p, 1e-10, 1e-12);
        });

    add("truncated.B_closed_forms", false, "",
        [](CheckResult& c, ToleranceProfile) {
            double dev = 0.0;
            for (int nt : {2, 3})
                for (int h : {0, 1})
                    for (double beta : {0.3, 0.8, 1.5})
                        for (double t : kFidTs) {
                            SchemeConfig cfg = make_config(0.5, beta, t);
                            const double ratio =
                                build_truncated_conditional(cfg, nt, h)
                                    .entangling_B;
                            dev = std::max(
                                dev,
                                std::abs(ratio -
                                         truncated_entangling_B_formula(
                                             beta, t, nt, h)));
                        }
            c.measured = dev;
            c.expected = 0.0;
            c.tolerance = 1e-12;
        });

    add("truncated.B13_printed_power", true,
        "the printed three-term herald-1 entangling parameter carries t^2 "
        "on its beta^8 term; the state itself requires t^4 (adopted)",
        [](CheckResult& c, ToleranceProfile) {
            const double beta = 1.2, t = 0.8;
            const double r2 = 1.0 - t * t;
            const double b4 = std::pow(beta, 4);
            const double s = t * t - 2.0 * r2;
            const double s3 = t * t - 4.0 * r2;
            const double printed =
                std::sqrt((1.0 + 0.5 * b4 * s * s +
                           b4 * b4 * t * t * s3 * s3 / 24.0) /
                          (r2 * (1.0 + b4 * std::pow(t, 4) / 6.0))) /
                (beta * beta);
            SchemeConfig cfg = make_config(0.5, beta, t);
            c.measured = build_truncated_conditional(cfg, 3, 1).entangling_B;
            c.expected = printed;
            c.tolerance = 1e-9;
        });

    add("appendixB.fidelity_formulas", false, "",
        [](CheckResult& c, ToleranceProfile p) {
            double dev = 0.0;
            for (int nt : {2, 3})
                for (int h : {0, 1})
                    for (double beta : {0.1, 0.5, 0.8, 1.2, 1.5})
                        for (double t : kFidTs) {
                            SchemeConfig cfg = make_config(0.5, beta, t);
                            TruncatedFidelity f =
                                fidelity_to_genuine(cfg, nt, h);
                            if (f.formula_valid)
                                dev = std::max(dev,
                                               std::abs(f.formula_value -
                                                        f.direct_value));
                        }
            c.measured = dev;
            c.expected = 0.0;
            c.tolerance = tol_for(p, 1e-9, 1e-11);
        });

    // --- psi-input scheme ---------------------------------------------------
    add("psi.oracle_state_fidelity", false,
        "adopted reading: transmitted-amplitude arguments in the even-herald "
        "coefficient set (the odd-herald pattern applied to both parities); "
        "the corrected odd-herald index set is used in the entangling "
        "parameter",
        [](CheckResult& c, ToleranceProfile p) {
            double min_fid = 1.0;
            for (double A : {0.0, 0.5, 1.0})
                for (int n = 0; n <= 3; ++n) {
                    PsiSchemeConfig cfg;
                    cfg.a0 = cfg.a1 = kBal;
                    cfg.beta = 0.8;
                    cfg.t = 0.5;
                    cfg.A = cplx{A, 0.0};
                    auto [prob, oracle] = oracle_psi_conditional(cfg, n);
                    (void)prob;
                    FockVector mine =
                        build_psi_conditional(cfg, n).to_joint_fock(
                            oracle.layout().cutoffs.at(0));
                    min_fid = std::min(min_fid, fidelity(mine, oracle));
                }
            c.measured = min_fid;
            c.expected = 1.0;
            c.tolerance = tol_for(p, 1e-8, 1e-10);
        });

    add("psi.oracle_probability", false, "",
        [](CheckResult& c, ToleranceProfile p) {
            double dev = 0.0;
            for (double A : {0.0, 0.5, 1.0})
                for (int n = 0; n <= 3; ++n) {
                    PsiSchemeConfig cfg;
                    cfg.a0 = cfg.a1 = kBal;
                    cfg.beta = 0.8;
                    cfg.t = 0.5;
                    cfg.A = cplx{A, 0.0};
                    dev = std::max(dev,
                                   std::abs(oracle_psi_conditional(cfg, n)
                                                .first -
                                            psi_success_probability(cfg, n)));
                }
            c.measured = dev;
            c.expected = 0.0;
            c.tolerance = tol_for(p, 1e-8, 1e-10);
        });

    add("psi.sum_P", false, "", [](CheckResult& c, ToleranceProfile) {
        PsiSchemeConfig cfg;
        cfg.a0 = cfg.a1 = kBal;
        cfg.beta = 0.8;
        cfg.t = 0.5;
        cfg.A = cplx{0.5, 0.0};
        double s = 0.0;
        for (int n = 0; n <= 40; ++n) s += psi_success_probability(cfg, n);
        c.measured = s;
        c.expected = 1.0;
        c.tolerance = 1e-6;
    });

    add("psi.printed_P_formula", false, "",
        [](CheckResult& c, ToleranceProfile p) {
            double dev = 0.0;
            for (double A : {0.0, 0.5, 1.0})
                for (int n = 0; n <= 3; ++n) {
                    PsiSchemeConfig cfg;
                    cfg.a0 = cfg.a1 = kBal;
                    cfg.beta = 0.8;
                    cfg.t = 0.5;
                    cfg.A = cplx{A, 0.0};
                    dev = std::max(
                        dev, std::abs(psi_success_probability_formula(cfg, n) -
                                      psi_success_probability(cfg, n)));
                }
            c.measured = dev;
            c.expected = 0.0;
            c.tolerance = tol_for(p, 1e-10, 1e-12);
        });

    add("psi.B_vs_branch_ratio", false, "",
        [](CheckResult& c, ToleranceProfile) {
            double dev = 0.0;
            for (double A : {0.0, 0.5, 1.0})
                for (int n = 0; n <= 3; ++n) {
                    PsiSchemeConfig cfg;
                    cfg.a0 = cfg.a1 = kBal;
                    cfg.beta = 0.8;
                    cfg.t = 0.5;
                    cfg.A = cplx{A, 0.0};
                    PsiConditional st = build_psi_conditional(cfg, n);
                    const double ratio = std::abs(st.weight_vacuum) /
                                         std::abs(st.weight_photon);
                    dev = std::max(dev,
                                   std::abs(ratio -
                                            std::abs(st.coefficients.B)));
                }
            c.measured = dev;
            c.expected = 0.0;
            c.tolerance = 1e-10;
        });

    add("psi.even_coeff_argument_reading", true,
        "the printed even-herald coefficient set mixes input-amplitude and "
        "transmitted-amplitude arguments; the transmitted-argument reading "
        "(matching the printed odd-herald set) is adopted",
        [](CheckResult& c, ToleranceProfile) {
            PsiSchemeConfig cfg;
            cfg.a0 = cfg.a1 = kBal;
            cfg.beta = 0.8;
            cfg.t = 0.5;
            cfg.A = cplx{0.5, 0.0};
            const PsiCoefficients co = psi_coefficients(cfg, 0);
            // printed C_2l reduces to t*A*c0*Nodd0(beta)/R
            const cplx br{cfg.beta * cfg.r(), 0.0};
            const cplx printed =
                cfg.t * cfg.A * displaced_amplitude(0, 0, br) *
                normalization(NormKind::odd1, cfg.beta) *
                normalization(NormKind::odd0, cfg.beta) /
                (co.R * normalization(NormKind::odd1, cfg.beta));
            c.measured = std::abs(co.C - printed);
            c.expected = 0.0;
            c.tolerance = 1e-9;
        });

    add("psi.eq50_index_reading", true,
        "the printed odd-herald entangling parameter repeats the even-herald "
        "amplitude indices in its numerator; the shifted-index reading is "
        "adopted and matches the oracle",
        [](CheckResult& c, ToleranceProfile) {
            PsiSchemeConfig cfg;
            cfg.a0 = cfg.a1 = kBal;
            cfg.beta = 0.8;
            cfg.t = 0.5;
            cfg.A = cplx{0.5, 0.0};
            const PsiCoefficients even = psi_coefficients(cfg, 0);
            const PsiCoefficients odd = psi_coefficients(cfg, 1);
            // printed numerator of the odd case reuses R'_{2l} (herald 0)
            const cplx printed = odd.N_photon *
                                 normalization(NormKind::ev0,
                                               cfg.beta * cfg.t) *
                                 even.Rp /
                                 (odd.N_vacuum *
                                  normalization(NormKind::odd0,
                                                cfg.beta * cfg.t) *
                                  odd.R);
            c.measured = std::abs(odd.B - printed);
            c.expected = 0.0;
            c.tolerance = 1e-9;
        });

    // --- entanglement -------------------------------------------------------
    add("negativity.bell", false, "", [](CheckResult& c, ToleranceProfile) {
        Eigen::VectorXcd bell(4);
        bell << 1.0, 0.0, 0.0, 1.0;
        c.measured = negativity_numeric(density_from_pure(bell, 2, 2));
        c.expected = 1.0;
        c.tolerance = 1e-12;
    });

    add("negativity.product", false, "",
        [](CheckResult& c, ToleranceProfile) {
            Eigen::VectorXcd prod(4);
            prod << 1.0, 1.0, 0.0, 0.0;
            c.measured = negativity_numeric(density_from_pure(prod, 2, 2));
            c.expected = 0.0;
            c.tolerance = 1e-10;
        });

    add("negativity.cross_engine", false, "",
        [](CheckResult& c, ToleranceProfile) {
            double dev = 0.0;
            for (double beta : {0.8, 1.5})
                for (double t : kFidTs)
                    for (int n = 0; n <= 2; ++n) {
                        SchemeConfig cfg = make_config(0.5, beta, t);
                        auto [prob, st] = oracle_conditional_state(cfg, n);
                        (void)prob;
                        const double numeric =
                            negativity_numeric(density_from_pure(st, 2));
                        const double analytic = negativity_analytic(
                            cfg.a0, cfg.a1, coefficient_B(cfg, n));
                        dev = std::max(dev, std::abs(numeric - analytic));
                    }
            c.measured = dev;
            c.expected = 0.0;
            c.tolerance = 1e-7;
        });

    // --- qualitative claims -------------------------------------------------
    add("qualitative.P0_small_beta_small_t", false, "",
        [](CheckResult& c, ToleranceProfile) {
            SchemeConfig cfg = make_config(0.5, 0.05, 0.05);
            c.measured = success_probability(cfg, 0);
            c.expected = 0.9;
            c.tolerance = -1.0; // lower bound: pass iff measured >= expected
        });

    add("qualitative.negativity_ditch", false, "",
        [](CheckResult& c, ToleranceProfile) {
            SchemeConfig cfg = make_config(0.5, 0.01, 0.5);
            const double n1 = negativity_analytic(cfg.a0, cfg.a1,
                                                  coefficient_B(cfg, 1));
            const double n0 = negativity_analytic(cfg.a0, cfg.a1,
                                                  coefficient_B(cfg, 0));
            // pass iff the herald-1 negativity collapses while herald-0 stays up
            c.measured = (n1 < 1e-3 && n0 > 0.5) ? 1.0 : 0.0;
            c.expected = 1.0;
            c.tolerance = 0.0;
        });

    return reg;
}

const std::vector<CheckSpec>& registry() {
    static const std::vector<CheckSpec> reg = build_registry();
    return reg;
}

} // namespace

int registered_check_count() { return static_cast<int>(registry().size()); }

int VerificationReport::count(const std::string& status) const {
    int n = 0;
    for (const CheckResult& c : checks)
        if (c.status == status) ++n;
    return n;
}

VerificationReport run_all(ToleranceProfile profile,
                           const std::string& only_prefix) {
    VerificationReport report;
    for (const CheckSpec& spec : registry()) {
        if (!only_prefix.empty() &&
            spec.name.compare(0, only_prefix.size(), only_prefix) != 0)
            continue;
        CheckResult result;
        result.name = spec.name;
        result.note = spec.note;
        const auto start = std::chrono::steady_clock::now();
        bool ok;
        try {
            spec.run(result, profile);
            if (result.tolerance < 0.0)
                ok = result.measured >= result.expected; // lower bound
            else if (result.tolerance == 0.0 && spec.paper_claim)
                ok = result.measured <= result.expected; // upper bound
            else
                ok = std::abs(result.measured - result.expected) <=
                     result.tolerance;
        } catch (const HybridError&) {
            ok = false;
            result.measured = std::nan("");
        }
        const auto stop = std::chrono::steady_clock::now();
        result.runtime_ms =
            std::chrono::duration<double, std::milli>(stop - start).count();
        result.status = ok ? "pass"
                           : (spec.paper_claim ? "discrepancy-documented"
                                               : "fail");
        report.checks.push_back(std::move(result));
    }
    return report;
}

std::string report_to_text(const VerificationReport& report) {
    std::ostringstream out;
    char buf[512];
    for (const CheckResult& c : report.checks) {
        std::snprintf(buf, sizeof buf,
                      "check name=%s status=%s measured=%.17g expected=%.17g "
                      "tolerance=%.17g runtime_ms=%.3f\n",
                      c.name.c_str(), c.status.c_str(), c.measured,
                      c.expected, c.tolerance, c.runtime_ms);
        out << buf;
        if (!c.note.empty()) out << "  note: " << c.note << "\n";
    }
    std::snprintf(buf, sizeof buf,
                  "summary total=%zu pass=%d fail=%d "
                  "discrepancy-documented=%d\n",
                  report.checks.size(), report.count("pass"),
                  report.count("fail"), report.count("discrepancy-documented"));
    out << buf;
    return out.str();
}

VerificationReport parse_report(const std::string& text) {
    VerificationReport report;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.rfind("check ", 0) == 0) {
            CheckResult c;
            char name[128], status[64];
            if (std::sscanf(line.c_str(),
                            "check name=%127s status=%63s measured=%lg "
                            "expected=%lg tolerance=%lg runtime_ms=%lg",
                            name, status, &c.measured, &c.expected,
                            &c.tolerance, &c.runtime_ms) == 6) {
                c.name = name;
                c.status = status;
                report.checks.push_back(std::move(c));
            }
        } else if (line.rfind("  note: ", 0) == 0 && !report.checks.empty()) {
            report.checks.back().note = line.substr(8);
        }
    }
    return report;
}

} // namespace hybrid
