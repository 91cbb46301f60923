/*
 * scheme_fig1b.cpp — exact/approximate heralded states and the six-mode
 * oracle for the two-beam-splitter scheme.
 */
#include "hybrid/scheme_fig1b.hpp"

#include <cmath>
#include <utility>

namespace hybrid {

double SchemeBConfig::r() const { return std::sqrt(std::max(0.0, 1.0 - t * t)); }
double SchemeBConfig::r1() const {
    return std::sqrt(std::max(0.0, 1.0 - t1 * t1));
}

void SchemeBConfig::validate() const {
    const double nrm = std::norm(a0) + std::norm(a1);
    if (std::abs(nrm - 1.0) > 1e-12)
        throw OutOfRange("SchemeBConfig: |a0|^2 + |a1|^2 must be 1");
    if (!(beta > 0.0))
        throw DegenerateState("SchemeBConfig: beta must be > 0");
    if (!(t > 0.0 && t < 1.0))
        throw DegenerateState("SchemeBConfig: t must lie in (0,1)");
    if (!(beta1 > 0.0))
        throw DegenerateState("SchemeBConfig: beta1 must be > 0");
    if (!(t1 > 0.0 && t1 < 1.0))
        throw DegenerateState("SchemeBConfig: t1 must lie in (0,1)");
}

namespace {

// Unnormalized mode-1 branch combos at displacement beta*t (even input).
struct BranchCombos {
    CvCombo photon; // pairs with the |01> rail
    CvCombo vacuum; // pairs with the |10> rail
};

BranchCombos branch_combos(const SchemeBConfig& config, int n) {
    const double x = config.beta * config.t;
    const double r = config.r();
    const double br = config.beta * config.r();
    BranchCombos out{CvCombo(x), CvCombo(x)};
    for (int sign : {-1, +1}) {
        const cplx c0n = displaced_amplitude(0, n, cplx{-sign * br, 0.0});
        const cplx c1n = displaced_amplitude(1, n, cplx{-sign * br, 0.0});
        out.photon.add(c0n, 0, sign);
        out.vacuum.add(r * c0n, 1, sign);
        out.vacuum.add(config.t * c1n, 0, sign);
    }
    return out;
}

double prefactor(const SchemeBConfig& config) {
    return normalization(NormKind::ev0, config.beta) *
           envelope(cplx{config.beta * config.r(), 0.0}) *
           envelope(cplx{config.beta1 * config.r1(), 0.0});
}

} // namespace

double psi_k_normalization(const SchemeBConfig& config, int k) {
    config.validate();
    const cplx b1r1{config.beta1 * config.r1(), 0.0};
    const double c0k = std::abs(displaced_amplitude(0, k, b1r1));
    const double c1k = std::abs(displaced_amplitude(1, k, b1r1));
    const double r1 = config.r1();
    const double s = r1 * r1 * c0k * c0k + config.t1 * config.t1 * c1k * c1k;
    if (s < 1e-300)
        throw DegenerateState("psi_k_normalization: |Psi_k> vanishes (r1 = 0?)");
    return 1.0 / std::sqrt(s);
}

FockVector psi_k_state(const SchemeBConfig& config, int k, int cutoff) {
    config.validate();
    if (cutoff < 0) cutoff = cutoff_for_amplitude(config.beta1);
    const cplx b1r1{config.beta1 * config.r1(), 0.0};
    const cplx b1t1{-config.beta1 * config.t1, 0.0};
    const cplx c0k = displaced_amplitude(0, k, b1r1);
    const cplx c1k = displaced_amplitude(1, k, b1r1);
    FockVector one = make_displaced_number(cutoff, 1, b1t1);
    one *= config.r1() * c0k;
    FockVector coh = make_coherent(cutoff, b1t1);
    coh *= config.t1 * c1k;
    one += coh;
    one.normalize(); // throws DegenerateState if the combination vanishes
    return one;
}

cplx coefficient_B_fig1b(const SchemeBConfig& config, int n, int k) {
    SchemeConfig inner;
    inner.a0 = config.a0;
    inner.a1 = config.a1;
    inner.beta = config.beta;
    inner.t = config.t;
    inner.input_parity = InputParity::even;
    const cplx b1r1{config.beta1 * config.r1(), 0.0};
    return coefficient_B(inner, n) * displaced_amplitude(0, k, b1r1) *
           psi_k_normalization(config, k);
}

double success_probability_b(const SchemeBConfig& config, int n, int k) {
    config.validate();
    const BranchCombos bc = branch_combos(config, n);
    const double pref = prefactor(config);
    const double nk = psi_k_normalization(config, k);
    const cplx b1r1{config.beta1 * config.r1(), 0.0};
    const double c0k = std::abs(displaced_amplitude(0, k, b1r1));
    return pref * pref *
           (std::norm(config.a0) * bc.photon.squared_norm() / (nk * nk) +
            std::norm(config.a1) * c0k * c0k * bc.vacuum.squared_norm());
}

namespace {

TwoModeHybridState build_conditional_impl(const SchemeBConfig& config, int n,
                                          int k, int cv_cutoff, bool exact) {
    config.validate();
    if (cv_cutoff < 0) cv_cutoff = cutoff_for_amplitude(config.beta);
    const int aux_cutoff = cutoff_for_amplitude(config.beta1);

    const BranchCombos bc = branch_combos(config, n);
    const double pref = prefactor(config);
    const double nk = psi_k_normalization(config, k);
    const cplx b1r1{config.beta1 * config.r1(), 0.0};
    const cplx b1t1{-config.beta1 * config.t1, 0.0};
    const double c0k = std::abs(displaced_amplitude(0, k, b1r1));

    const double wp = std::sqrt(bc.photon.squared_norm());
    const double wv = std::sqrt(bc.vacuum.squared_norm());
    const double P =
        pref * pref * (std::norm(config.a0) * wp * wp / (nk * nk) +
                       std::norm(config.a1) * c0k * c0k * wv * wv);
    if (P < 1e-300)
        throw DegenerateState("scheme_fig1b: zero-probability herald");
    const double sqrtP = std::sqrt(P);

    FockVector coh = make_coherent(aux_cutoff, b1t1);

    TwoModeHybridState st;
    st.probability = P;
    {
        CvCombo cv = bc.photon;
        cv *= cplx{1.0 / wp, 0.0};
        FockVector aux =
            exact ? psi_k_state(config, k, aux_cutoff) : coh;
        const cplx w = pref * config.a0 * wp / (nk * sqrtP);
        st.branches.push_back(TwoModeBranch{DvRail::mode01, w,
                                            cv.to_fock(cv_cutoff),
                                            std::move(aux)});
    }
    {
        CvCombo cv = bc.vacuum;
        cv *= cplx{1.0 / wv, 0.0};
        // normalized c0k * |-beta1 t1>: the sign of c0k stays in the vector
        FockVector aux = coh;
        aux *= displaced_amplitude(0, k, b1r1) / c0k;
        const cplx w = pref * config.a1 * c0k * wv / sqrtP;
        st.branches.push_back(TwoModeBranch{DvRail::mode10, w,
                                            cv.to_fock(cv_cutoff),
                                            std::move(aux)});
    }
    return st;
}

cplx branch_overlap(const TwoModeHybridState& a, const TwoModeHybridState& b) {
    cplx ov{0.0, 0.0};
    for (const TwoModeBranch& ba : a.branches)
        for (const TwoModeBranch& bb : b.branches)
            if (ba.dv == bb.dv)
                ov += std::conj(ba.weight) * bb.weight *
                      inner_product(ba.cv, bb.cv) *
                      inner_product(ba.aux, bb.aux);
    return ov;
}

} // namespace

TwoModeHybridState build_exact_conditional(const SchemeBConfig& config, int n,
                                           int k, int cv_cutoff) {
    return build_conditional_impl(config, n, k, cv_cutoff, true);
}

TwoModeHybridState build_approximate_conditional(const SchemeBConfig& config,
                                                 int n, int k, int cv_cutoff) {
    TwoModeHybridState approx =
        build_conditional_impl(config, n, k, cv_cutoff, false);
    TwoModeHybridState exact =
        build_conditional_impl(config, n, k, cv_cutoff, true);
    approx.approx_fidelity = std::norm(branch_overlap(exact, approx));
    return approx;
}

FockVector TwoModeHybridState::to_joint_fock() const {
    if (branches.empty())
        throw DegenerateState("TwoModeHybridState: no branches");
    const int dcv = branches.front().cv.layout().cutoffs.at(0);
    const int daux = branches.front().aux.layout().cutoffs.at(0);
    FockVector joint(ModeLayout{{dcv, daux, 1, 1}});
    for (const TwoModeBranch& b : branches) {
        const int q5 = (b.dv == DvRail::mode01) ? 0 : 1;
        const int q6 = 1 - q5;
        const auto& cv = b.cv.amplitudes();
        const auto& aux = b.aux.amplitudes();
        for (int i = 0; i <= dcv; ++i) {
            if (cv[static_cast<std::size_t>(i)] == cplx{0.0, 0.0}) continue;
            for (int j = 0; j <= daux; ++j)
                joint.at({i, j, q5, q6}) +=
                    b.weight * cv[static_cast<std::size_t>(i)] *
                    aux[static_cast<std::size_t>(j)];
        }
    }
    joint.normalize();
    return joint;
}

std::pair<double, FockVector> oracle_conditional_state_b(
    const SchemeBConfig& config, int n, int k, int cv_cutoff, int aux_cutoff) {
    config.validate();
    if (cv_cutoff < 0) cv_cutoff = cutoff_for_amplitude(config.beta);
    if (aux_cutoff < 0) aux_cutoff = cutoff_for_amplitude(config.beta1);

    FockVector cv = build_cv_state(CvKind::scs_even, config.beta, {}, cv_cutoff);
    FockVector aux = make_coherent(aux_cutoff, cplx{-config.beta1, 0.0});

    const ModeLayout tail01{{cv_cutoff, aux_cutoff, 1, 1}};
    FockVector rail01 = make_fock(tail01, {0, 1, 0, 1});
    rail01 *= config.a0;
    FockVector rail10 = make_fock(tail01, {1, 0, 1, 0});
    rail10 *= config.a1;
    rail10 += rail01;

    FockVector st = tensor(tensor(cv, aux), rail10);
    st = apply_beam_splitter(st, 0, 2, config.t);
    st = apply_beam_splitter(st, 1, 3, config.t1);
    auto [p_n, after_n] = project_photon_number(st, 2, n);
    auto [p_k, cond] = project_photon_number(after_n, 2, k);
    return {p_n * p_k, std::move(cond)};
}

} // namespace hybrid
