/*
 * scheme_truncated.cpp — finite conditional states from truncated even-SCS
 * inputs, entangling parameters, and fidelities to the genuine-SCS states.
 */
#include "hybrid/scheme_truncated.hpp"

#include "hybrid/entanglement.hpp"

#include <cmath>

#include "hybrid/analytic.hpp"

namespace hybrid {

namespace {

constexpr int kFiniteCutoff = 6; // supports Fock states up to |5>

void require_args(int term_count, int herald) {
    if (term_count != 2 && term_count != 3)
        throw OutOfRange("truncated scheme: term_count must be 2 or 3");
    if (herald != 0 && herald != 1)
        throw OutOfRange("truncated scheme: herald must be 0 or 1");
}

} // namespace

FockVector truncated_input(double beta, int term_count, int cutoff) {
    if (term_count < 1 || 2 * (term_count - 1) > cutoff)
        throw OutOfRange("truncated_input: term_count incompatible with cutoff");
    FockVector v(ModeLayout{{cutoff}});
    double logfact = 0.0;
    for (int k = 0; k < term_count; ++k) {
        if (k > 0) logfact += std::log(2.0 * k * (2.0 * k - 1.0));
        v.at({2 * k}) = std::pow(beta, 2 * k) * std::exp(-0.5 * logfact);
    }
    v.normalize();
    return v;
}

TruncatedConditional build_truncated_conditional(const SchemeConfig& config,
                                                 int term_count, int herald) {
    config.validate();
    require_args(term_count, herald);
    const double beta = config.beta;
    const double t = config.t;
    const double r = config.r();
    const double b2 = beta * beta;
    const double b4 = b2 * b2;

    FockVector cvp(ModeLayout{{kFiniteCutoff}});
    FockVector cvv(ModeLayout{{kFiniteCutoff}});
    cplx wp, wv;
    if (herald == 0) {
        cvp.at({0}) = 1.0;
        cvp.at({2}) = b2 * t * t / std::sqrt(2.0);
        cvv.at({1}) = 1.0;
        cvv.at({3}) = std::sqrt(1.5) * b2 * t * t;
        if (term_count == 3) {
            cvp.at({4}) = b4 * std::pow(t, 4) / std::sqrt(24.0);
            cvv.at({5}) = std::sqrt(5.0 / 24.0) * b4 * std::pow(t, 4);
        }
        wp = config.a0;
        wv = config.a1 * r;
    } else {
        cvp.at({1}) = 1.0;
        cvv.at({0}) = 1.0;
        cvv.at({2}) = (t * t - 2.0 * r * r) * b2 / std::sqrt(2.0);
        if (term_count == 3) {
            cvp.at({3}) = b2 * t * t / std::sqrt(6.0);
            cvv.at({4}) =
                (t * t - 4.0 * r * r) * b4 * t * t / std::sqrt(24.0);
        }
        wp = -config.a0 * t * r * b2;
        wv = config.a1 * t;
    }

    const double np = cvp.norm();
    const double nv = cvv.norm();
    const double p2 = std::norm(wp) * np * np;
    const double v2 = std::norm(wv) * nv * nv;
    const double total = p2 + v2;
    if (total < 1e-300)
        throw DegenerateState("build_truncated_conditional: state vanishes");
    if (p2 < 1e-300)
        throw DegenerateState(
            "build_truncated_conditional: photon branch vanishes (beta = 0?)");

    TruncatedConditional out;
    out.herald = herald;
    out.term_count = term_count;
    cvp *= cplx{1.0 / np, 0.0};
    cvv *= cplx{1.0 / nv, 0.0};
    out.cv_photon = cvp;
    out.cv_vacuum = cvv;
    const double sq = std::sqrt(total);
    out.weight_photon = wp * np / sq;
    out.weight_vacuum = wv * nv / sq;
    out.entangling_B = (std::sqrt(v2) / std::sqrt(p2)) *
                       (std::abs(config.a0) / std::abs(config.a1));
    out.probability = truncated_success_probability(config, term_count, herald);
    return out;
}

double truncated_entangling_B_formula(double beta, double t, int term_count,
                                      int herald) {
    require_args(term_count, herald);
    const double r2 = 1.0 - t * t;
    const double q = std::pow(beta, 4) * std::pow(t, 4);
    if (herald == 0) {
        if (term_count == 2)
            return std::sqrt(r2) * std::sqrt((1.0 + 1.5 * q) / (1.0 + 0.5 * q));
        return std::sqrt(r2) * std::sqrt((1.0 + 1.5 * q + 5.0 * q * q / 24.0) /
                                         (1.0 + 0.5 * q + q * q / 24.0));
    }
    const double s = t * t - 2.0 * r2;
    const double b4 = std::pow(beta, 4);
    if (term_count == 2)
        return std::sqrt((1.0 + 0.5 * b4 * s * s) / r2) / (beta * beta);
    const double s3 = t * t - 4.0 * r2;
    const double num =
        1.0 + 0.5 * b4 * s * s +
        b4 * b4 * std::pow(t, 4) * s3 * s3 / 24.0;
    return std::sqrt(num / (r2 * (1.0 + q / 6.0))) / (beta * beta);
}

FockVector TruncatedConditional::to_joint_fock(int cv_cutoff) const {
    FockVector joint(ModeLayout{{cv_cutoff, 1}});
    const auto& p = cv_photon.amplitudes();
    const auto& v = cv_vacuum.amplitudes();
    const int lim = std::min<int>(cv_cutoff, kFiniteCutoff);
    for (int m = 0; m <= lim; ++m) {
        joint.at({m, 1}) += weight_photon * p[static_cast<std::size_t>(m)];
        joint.at({m, 0}) += weight_vacuum * v[static_cast<std::size_t>(m)];
    }
    joint.normalize();
    return joint;
}

double truncated_success_probability(const SchemeConfig& config,
                                     int term_count, int herald) {
    config.validate();
    require_args(term_count, herald);
    const int cutoff = std::max(kFiniteCutoff, 2 * (term_count - 1));
    FockVector input = truncated_input(config.beta, term_count, cutoff);
    auto [p, cond] = oracle_conditional_state_custom(input, config.a0,
                                                     config.a1, config.t,
                                                     herald);
    (void)cond;
    return p;
}

TruncatedFidelity fidelity_to_genuine(const SchemeConfig& config,
                                      int term_count, int herald) {
    config.validate();
    require_args(term_count, herald);
    const double beta = config.beta;
    const double t = config.t;
    const double r = config.r();
    const double x = beta * t;
    const double br = beta * r;

    TruncatedFidelity out;

    // Direct value: inner product with the genuine-SCS heralded state.
    const int cutoff = std::max(cutoff_for_amplitude(beta), kFiniteCutoff);
    TruncatedConditional trunc =
        build_truncated_conditional(config, term_count, herald);
    HybridState genuine = build_conditional_state(config, herald);
    out.direct_value = fidelity(trunc.to_joint_fock(cutoff),
                                genuine.to_joint_fock(cutoff));

    if (beta < 1e-3) return out; // removable 0*inf forms below this point
    out.formula_valid = true;

    const double a0sq = std::norm(config.a0);
    const double a1sq = std::norm(config.a1);
    const double Ft2 = std::exp(-x * x); // F^2(beta t)
    const double b4 = std::pow(beta, 4);
    const double b8 = b4 * b4;
    const double e2 = std::exp(-2.0 * x * x);

    if (herald == 0) {
        const double c10 = -br; // c_10(beta r)
        const double N0 =
            1.0 / std::sqrt(r * r *
                                std::pow(normalization(NormKind::odd1, x), -2) +
                            t * t * c10 * c10 *
                                std::pow(normalization(NormKind::odd0, x), -2) -
                            8.0 * r * t * t * beta * c10 * e2);
        const double N0t =
            1.0 / std::sqrt(a0sq *
                                std::pow(normalization(NormKind::ev0, x), -2) +
                            a1sq / (N0 * N0));
        const double q = b4 * std::pow(t, 4);
        const double q2 = b8 * std::pow(t, 8);
        if (term_count == 2)
            out.formula_value =
                4.0 * Ft2 * N0t * N0t *
                (a0sq * (1.0 + 0.5 * q) + a1sq * r * r * (1.0 + 1.5 * q));
        else
            out.formula_value =
                4.0 * Ft2 * N0t * N0t *
                (a0sq * (1.0 + 0.5 * q + q2 / 24.0) +
                 a1sq * r * r * (1.0 + 1.5 * q + 5.0 * q2 / 24.0));
    } else {
        const double c01 = br;                // c_01(beta r)
        const double c11 = 1.0 - br * br;     // c_11(beta r)
        const double N1 =
            1.0 / std::sqrt(r * r * c01 * c01 *
                                std::pow(normalization(NormKind::ev1, x), -2) +
                            t * t * c11 * c11 *
                                std::pow(normalization(NormKind::ev0, x), -2) +
                            8.0 * r * t * t * beta * c01 * c11 * e2);
        const double N1t =
            1.0 / std::sqrt(a0sq * c01 * c01 *
                                std::pow(normalization(NormKind::odd0, x), -2) +
                            a1sq / (N1 * N1));
        const double s = t * t - 2.0 * (1.0 - t * t);
        const double s3 = t * t - 4.0 * (1.0 - t * t);
        if (term_count == 2)
            out.formula_value =
                4.0 * Ft2 * N1t * N1t *
                (a0sq * t * t * r * r * b4 +
                 a1sq * t * t * (1.0 + 0.5 * b4 * s * s));
        else
            out.formula_value =
                4.0 * Ft2 * N1t * N1t *
                (a0sq * t * t * r * r * b4 * (1.0 + b4 * std::pow(t, 4) / 6.0) +
                 a1sq * t * t *
                     (1.0 + 0.5 * b4 * s * s +
                      b8 * std::pow(t, 4) * s3 * s3 / 24.0));
    }
    return out;
}

} // namespace hybrid
