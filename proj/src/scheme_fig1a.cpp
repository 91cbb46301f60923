/*
 * scheme_fig1a.cpp — analytic construction and oracle pipeline for the
 * single-beam-splitter heralding scheme.
 */
#include "hybrid/scheme_fig1a.hpp"

#include <cmath>

namespace hybrid {

double SchemeConfig::r() const { return std::sqrt(std::max(0.0, 1.0 - t * t)); }

void SchemeConfig::validate() const {
    const double nrm = std::norm(a0) + std::norm(a1);
    if (std::abs(nrm - 1.0) > 1e-12)
        throw OutOfRange("SchemeConfig: |a0|^2 + |a1|^2 must be 1");
    if (!(beta > 0.0))
        throw DegenerateState("SchemeConfig: beta must be > 0 for analytic evaluation");
    if (!(t > 0.0 && t < 1.0))
        throw DegenerateState("SchemeConfig: t must lie in (0,1) for analytic evaluation");
}

cplx coefficient_A(const SchemeConfig& config, int n) {
    config.validate();
    const double x = config.beta * config.t;
    const cplx br{config.beta * config.r(), 0.0};
    const cplx c0n = displaced_amplitude(0, n, br);
    const cplx c1n = displaced_amplitude(1, n, br);
    if (std::abs(c1n) < 1e-14)
        throw InfiniteCoefficient("coefficient_A diverges: c_1n(beta r) = 0");
    // herald-parity selects which pair of normalization constants appears
    const bool even_herald = (n % 2 == 0);
    const double n0 = normalization(even_herald ? NormKind::odd0 : NormKind::ev0, x);
    const double n1 = normalization(even_herald ? NormKind::odd1 : NormKind::ev1, x);
    return config.r() * c0n * n0 / (config.t * c1n * n1);
}

RawBranches raw_branches(const SchemeConfig& config, int n) {
    config.validate();
    const double x = config.beta * config.t;
    const double r = config.r();
    const double t = config.t;
    const double br = config.beta * config.r();
    const bool even_input = (config.input_parity == InputParity::even);
    const double npar = normalization(even_input ? NormKind::ev0 : NormKind::odd0,
                                      config.beta);
    const double pref = npar * envelope(cplx{br, 0.0});

    RawBranches out;
    out.photon = CvCombo(x);
    out.vacuum = CvCombo(x);
    for (int sign : {-1, +1}) {
        const double w = (sign == -1 || even_input) ? 1.0 : -1.0;
        const cplx c0n = displaced_amplitude(0, n, cplx{-sign * br, 0.0});
        const cplx c1n = displaced_amplitude(1, n, cplx{-sign * br, 0.0});
        out.photon.add(pref * w * config.a0 * c0n, 0, sign);
        out.vacuum.add(pref * w * config.a1 * r * c0n, 1, sign);
        out.vacuum.add(pref * w * config.a1 * t * c1n, 0, sign);
    }
    return out;
}

cplx coefficient_B(const SchemeConfig& config, int n) {
    // |B| is the branch-norm ratio rescaled by the input amplitudes; the
    // sign follows the sign of t * c_1n(beta r) for real parameters.
    SchemeConfig balanced = config;
    balanced.a0 = balanced.a1 = cplx{std::sqrt(0.5), 0.0};
    const RawBranches rb = raw_branches(balanced, n);
    const double wp = std::sqrt(rb.photon.squared_norm());
    const double wv = std::sqrt(rb.vacuum.squared_norm());
    if (wp < 1e-150)
        throw DegenerateState("coefficient_B: photon branch vanishes");
    const cplx c1n =
        displaced_amplitude(1, n, cplx{config.beta * config.r(), 0.0});
    const double sgn = (config.t * c1n.real() >= 0.0) ? 1.0 : -1.0;
    return cplx{sgn * wv / wp, 0.0};
}

double success_probability(const SchemeConfig& config, int n) {
    const RawBranches rb = raw_branches(config, n);
    return rb.photon.squared_norm() + rb.vacuum.squared_norm();
}

HybridState build_conditional_state(const SchemeConfig& config, int n) {
    RawBranches rb = raw_branches(config, n);
    const double p2 = rb.photon.squared_norm();
    const double v2 = rb.vacuum.squared_norm();
    const double P = p2 + v2;
    if (P < 1e-300)
        throw DegenerateState("build_conditional_state: zero-probability herald");

    HybridState st;
    st.probability = P;
    st.total_norm = 1.0;
    const double wp = std::sqrt(p2 / P);
    const double wv = std::sqrt(v2 / P);
    if (p2 > 0.0) {
        CvCombo cv = rb.photon;
        cv *= cplx{1.0 / std::sqrt(p2), 0.0};
        st.branches.push_back(HybridBranch{DvLabel::photon, cplx{wp, 0.0}, cv});
    }
    if (v2 > 0.0) {
        CvCombo cv = rb.vacuum;
        cv *= cplx{1.0 / std::sqrt(v2), 0.0};
        st.branches.push_back(HybridBranch{DvLabel::vacuum, cplx{wv, 0.0}, cv});
    }
    return st;
}

FockVector HybridState::to_joint_fock(int cv_cutoff, double tail_tol) const {
    ModeLayout layout{{cv_cutoff, 1}};
    FockVector joint(layout);
    for (const HybridBranch& b : branches) {
        FockVector cv = b.cv.to_fock(cv_cutoff, tail_tol);
        const int dv = (b.dv == DvLabel::photon) ? 1 : 0;
        const auto& amps = cv.amplitudes();
        for (int m = 0; m <= cv_cutoff; ++m)
            joint.at({m, dv}) += b.weight * amps[static_cast<std::size_t>(m)];
    }
    joint.normalize();
    return joint;
}

std::pair<double, FockVector> oracle_conditional_state_custom(
    const FockVector& input, cplx a0, cplx a1, double t, int n) {
    const int d1 = input.layout().cutoffs.at(0);
    // modes: 1 = CV (cutoff d1), 2 = herald (same cutoff), 3 = photon qubit
    FockVector ph3 = make_fock(ModeLayout{{1}}, {1});
    FockVector vac3 = make_fock(ModeLayout{{1}}, {0});
    FockVector m2_vac = make_fock(ModeLayout{{d1}}, {0});
    FockVector m2_one = make_fock(ModeLayout{{d1}}, {1});

    FockVector term1 = tensor(tensor(input, m2_vac), ph3);
    term1 *= a0;
    FockVector term2 = tensor(tensor(input, m2_one), vac3);
    term2 *= a1;
    term1 += term2;

    FockVector mixed = apply_beam_splitter(term1, 0, 1, t);
    auto [p, cond] = project_photon_number(mixed, 1, n);
    return {p, std::move(cond)};
}

std::pair<double, FockVector> oracle_conditional_state(const SchemeConfig& config,
                                                       int n, int cv_cutoff) {
    if (cv_cutoff < 0) cv_cutoff = cutoff_for_amplitude(std::abs(config.beta));
    const CvKind kind = (config.input_parity == InputParity::even)
                            ? CvKind::scs_even
                            : CvKind::scs_odd;
    FockVector input = build_cv_state(kind, config.beta, {}, cv_cutoff);
    return oracle_conditional_state_custom(input, config.a0, config.a1, config.t, n);
}

} // namespace hybrid
