/*
 * scheme_psi.cpp — conditional states for the |Psi> input via the exact
 * sigma-expansion, plus the closed-form coefficient set.
 */
#include "hybrid/scheme_psi.hpp"

#include <cmath>

#include "hybrid/scheme_fig1a.hpp"

namespace hybrid {

double PsiSchemeConfig::r() const {
    return std::sqrt(std::max(0.0, 1.0 - t * t));
}

void PsiSchemeConfig::validate() const {
    const double nrm = std::norm(a0) + std::norm(a1);
    if (std::abs(nrm - 1.0) > 1e-12)
        throw OutOfRange("PsiSchemeConfig: |a0|^2 + |a1|^2 must be 1");
    if (!(beta > 0.0))
        throw DegenerateState("PsiSchemeConfig: beta must be > 0");
    if (!(t > 0.0 && t < 1.0))
        throw DegenerateState("PsiSchemeConfig: t must lie in (0,1)");
}

namespace {

struct PsiBranches {
    CvCombo photon;
    CvCombo vacuum;
};

// Exact expansion of the heralded branches over displaced number states
// |j, sigma*beta*t>, j in {0,1,2}; includes the envelope prefactor and the
// input normalization.
PsiBranches psi_raw_branches(const PsiSchemeConfig& config, int n) {
    config.validate();
    const double x = config.beta * config.t;
    const double r = config.r();
    const double t = config.t;
    const double br = config.beta * r;
    const double env = envelope(cplx{br, 0.0});
    const CvCombo input = psi_input_combo(config.beta, config.A, true);

    PsiBranches out{CvCombo(x), CvCombo(x)};
    for (const CvTerm& term : input.terms()) {
        const int sg = term.sign;
        const cplx w = term.coef * env;
        const cplx arg{-sg * br, 0.0};
        const cplx c0n = displaced_amplitude(0, n, arg);
        const cplx c1n = displaced_amplitude(1, n, arg);
        if (term.n == 0) {
            out.photon.add(w * config.a0 * c0n, 0, sg);
            out.vacuum.add(w * config.a1 * r * c0n, 1, sg);
            out.vacuum.add(w * config.a1 * t * c1n, 0, sg);
        } else {
            const cplx c2n = displaced_amplitude(2, n, arg);
            out.photon.add(w * config.a0 * t * c0n, 1, sg);
            out.photon.add(-w * config.a0 * r * c1n, 0, sg);
            out.vacuum.add(w * config.a1 * std::sqrt(2.0) * t * r * c0n, 2, sg);
            out.vacuum.add(w * config.a1 * (t * t - r * r) * c1n, 1, sg);
            out.vacuum.add(-w * config.a1 * std::sqrt(2.0) * r * t * c2n, 0,
                           sg);
        }
    }
    return out;
}

// Normalized parity components at displacement x, as CvCombo terms.
CvCombo cat_combo(double x, bool even) {
    CvCombo c(x);
    const double N = normalization(even ? NormKind::ev0 : NormKind::odd0, x);
    c.add(cplx{N, 0.0}, 0, -1);
    c.add(cplx{even ? N : -N, 0.0}, 0, +1);
    return c;
}

CvCombo dns1_combo(double x, bool even) {
    CvCombo c(x);
    const double N = normalization(even ? NormKind::ev1 : NormKind::odd1, x);
    c.add(cplx{N, 0.0}, 1, -1);
    c.add(cplx{even ? -N : N, 0.0}, 1, +1);
    return c;
}

CvCombo dns2_combo(double x, bool even) {
    CvCombo c(x);
    const double N = normalization(even ? NormKind::ev2 : NormKind::odd2, x);
    c.add(cplx{N, 0.0}, 2, -1);
    c.add(cplx{even ? N : -N, 0.0}, 2, +1);
    return c;
}

void append_scaled(CvCombo& dst, const CvCombo& src, cplx scale) {
    for (const CvTerm& t : src.terms()) dst.add(scale * t.coef, t.n, t.sign);
}

} // namespace

PsiCoefficients psi_coefficients(const PsiSchemeConfig& config, int n) {
    config.validate();
    const double x = config.beta * config.t;
    const double r = config.r();
    const double t = config.t;
    const cplx br{config.beta * r, 0.0};
    const cplx A = config.A;
    const cplx c0n = displaced_amplitude(0, n, br);
    const cplx c1n = displaced_amplitude(1, n, br);
    const cplx c2n = displaced_amplitude(2, n, br);
    const double nodd0b = normalization(NormKind::odd0, config.beta);
    const double nodd1b = normalization(NormKind::odd1, config.beta);
    const bool even_herald = (n % 2 == 0);
    // herald parity decides the branch parities: even herald -> odd photon
    // branch / even vacuum branch; odd herald flips both.
    const bool ph_even = !even_herald;
    const bool vac_even = even_herald;

    PsiCoefficients out;
    out.R = c0n * nodd0b - r * A * c1n * nodd1b;
    out.Rp = t * c1n * nodd0b - std::sqrt(2.0) * t * r * A * c2n * nodd1b;

    const double n0_ph =
        normalization(ph_even ? NormKind::ev0 : NormKind::odd0, x);
    const double n1_ph =
        normalization(ph_even ? NormKind::ev1 : NormKind::odd1, x);
    const double n0_vac =
        normalization(vac_even ? NormKind::ev0 : NormKind::odd0, x);
    const double n1_vac =
        normalization(vac_even ? NormKind::ev1 : NormKind::odd1, x);
    const double n2_vac =
        normalization(vac_even ? NormKind::ev2 : NormKind::odd2, x);

    if (std::abs(out.R) < 1e-14)
        throw InfiniteCoefficient("psi_coefficients: R vanishes, C diverges");
    if (std::abs(out.Rp) < 1e-14)
        throw InfiniteCoefficient(
            "psi_coefficients: R' vanishes, D and F diverge");

    out.C = t * A * c0n * nodd1b * n0_ph / (out.R * n1_ph);
    out.D = n0_vac * (r * c0n * nodd0b + (t * t - r * r) * A * c1n * nodd1b) /
            (out.Rp * n1_vac);
    out.F = std::sqrt(2.0) * t * r * A * c0n * nodd1b * n0_vac /
            (out.Rp * n2_vac);

    CvCombo ph = cat_combo(x, ph_even);
    append_scaled(ph, dns1_combo(x, ph_even), out.C);
    out.N_photon = 1.0 / std::sqrt(ph.squared_norm());

    CvCombo vac = cat_combo(x, vac_even);
    append_scaled(vac, dns1_combo(x, vac_even), out.D);
    append_scaled(vac, dns2_combo(x, vac_even), out.F);
    out.N_vacuum = 1.0 / std::sqrt(vac.squared_norm());

    out.B = out.N_photon * n0_ph * out.Rp / (out.N_vacuum * n0_vac * out.R);
    return out;
}

PsiConditional build_psi_conditional(const PsiSchemeConfig& config, int n) {
    PsiBranches rb = psi_raw_branches(config, n);
    const double p2 = rb.photon.squared_norm();
    const double v2 = rb.vacuum.squared_norm();
    const double P = p2 + v2;
    if (P < 1e-300)
        throw DegenerateState("build_psi_conditional: zero-probability herald");

    PsiConditional out;
    out.herald = n;
    out.probability = P;
    out.weight_photon = cplx{std::sqrt(p2 / P), 0.0};
    out.weight_vacuum = cplx{std::sqrt(v2 / P), 0.0};
    if (p2 > 0.0) {
        rb.photon *= cplx{1.0 / std::sqrt(p2), 0.0};
    }
    if (v2 > 0.0) {
        rb.vacuum *= cplx{1.0 / std::sqrt(v2), 0.0};
    }
    out.cv_photon = rb.photon;
    out.cv_vacuum = rb.vacuum;
    out.coefficients = psi_coefficients(config, n);
    return out;
}

FockVector PsiConditional::to_joint_fock(int cv_cutoff, double tail_tol) const {
    FockVector joint(ModeLayout{{cv_cutoff, 1}});
    const FockVector ph = cv_photon.to_fock(cv_cutoff, tail_tol);
    const FockVector vac = cv_vacuum.to_fock(cv_cutoff, tail_tol);
    for (int m = 0; m <= cv_cutoff; ++m) {
        joint.at({m, 1}) +=
            weight_photon * ph.amplitudes()[static_cast<std::size_t>(m)];
        joint.at({m, 0}) +=
            weight_vacuum * vac.amplitudes()[static_cast<std::size_t>(m)];
    }
    joint.normalize();
    return joint;
}

double psi_success_probability(const PsiSchemeConfig& config, int n) {
    PsiBranches rb = psi_raw_branches(config, n);
    return rb.photon.squared_norm() + rb.vacuum.squared_norm();
}

double psi_success_probability_formula(const PsiSchemeConfig& config, int n) {
    const PsiCoefficients co = psi_coefficients(config, n);
    const double x = config.beta * config.t;
    const bool even_herald = (n % 2 == 0);
    const double n0_ph =
        normalization(even_herald ? NormKind::odd0 : NormKind::ev0, x);
    const double n2m = psi_input_normalization(config.beta, config.A, true);
    const double env = envelope(cplx{config.beta * config.r(), 0.0});
    const double ninv2 =
        std::norm(config.a0) + std::norm(config.a1) * std::norm(co.B);
    return env * env * n2m * n2m * std::norm(co.R) * ninv2 /
           (n0_ph * n0_ph * co.N_photon * co.N_photon);
}

std::pair<double, FockVector> oracle_psi_conditional(
    const PsiSchemeConfig& config, int n, int cv_cutoff) {
    config.validate();
    if (cv_cutoff < 0) cv_cutoff = cutoff_for_amplitude(config.beta);
    CvExtra extra;
    extra.A = config.A;
    FockVector input = build_cv_state(CvKind::psi_2m, config.beta, extra,
                                      cv_cutoff);
    return oracle_conditional_state_custom(input, config.a0, config.a1,
                                           config.t, n);
}

std::pair<double, FockVector> oracle_psi_even_conditional(
    const PsiSchemeConfig& config, int n, int cv_cutoff) {
    config.validate();
    if (cv_cutoff < 0) cv_cutoff = cutoff_for_amplitude(config.beta);
    CvExtra extra;
    extra.A = config.A;
    FockVector input = build_cv_state(CvKind::psi_2m1, config.beta, extra,
                                      cv_cutoff);
    return oracle_conditional_state_custom(input, config.a0, config.a1,
                                           config.t, n);
}

} // namespace hybrid
