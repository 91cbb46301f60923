/*
 * analytic.cpp — closed-form building blocks.
 */
#include "hybrid/analytic.hpp"

#include <cmath>

namespace hybrid {

namespace {

double sqrt_factorial(int m) {
    return std::exp(0.5 * std::lgamma(static_cast<double>(m) + 1.0));
}

cplx ipow(cplx a, int k) {
    cplx r{1.0, 0.0};
    for (int i = 0; i < k; ++i) r *= a;
    return r;
}

} // namespace

double envelope(cplx alpha) { return std::exp(-0.5 * std::norm(alpha)); }

cplx displaced_amplitude(int n, int m, cplx alpha) {
    if (m < 0) throw OutOfRange("displaced_amplitude: m must be >= 0");
    const cplx ac = std::conj(alpha);
    const double invsf = 1.0 / sqrt_factorial(m);
    switch (n) {
    case 0:
        return ipow(alpha, m) * invsf;
    case 1: {
        cplx v = -ac * ipow(alpha, m);
        if (m >= 1) v += static_cast<double>(m) * ipow(alpha, m - 1);
        return v * invsf;
    }
    case 2: {
        cplx v = ac * ac * ipow(alpha, m);
        if (m >= 1) v -= 2.0 * ac * static_cast<double>(m) * ipow(alpha, m - 1);
        if (m >= 2)
            v += static_cast<double>(m) * static_cast<double>(m - 1) *
                 ipow(alpha, m - 2);
        return v / (std::sqrt(2.0)) * invsf;
    }
    default:
        throw OutOfRange("displaced_amplitude: n must be 0, 1 or 2");
    }
}

bool parity_flip_identity_check(int n, int m, cplx alpha) {
    const cplx lhs = displaced_amplitude(n, m, -alpha);
    const cplx rhs =
        (((m - n) % 2 + 2) % 2 == 0 ? 1.0 : -1.0) * displaced_amplitude(n, m, alpha);
    return std::abs(lhs - rhs) <= 1e-12 * std::max(1.0, std::abs(rhs));
}

double normalization(NormKind kind, double x) {
    const double e = std::exp(-2.0 * x * x);
    const double x2 = x * x;
    double inner = 0.0;
    switch (kind) {
    case NormKind::ev0:  inner = 1.0 + e; break;
    case NormKind::odd0: inner = 1.0 - e; break;
    case NormKind::ev1:  inner = 1.0 - e * (1.0 - 4.0 * x2); break;
    case NormKind::odd1: inner = 1.0 + e * (1.0 - 4.0 * x2); break;
    case NormKind::ev2:  inner = 1.0 + e * (1.0 - 8.0 * x2 + 8.0 * x2 * x2); break;
    case NormKind::odd2: inner = 1.0 - e * (1.0 - 8.0 * x2 + 8.0 * x2 * x2); break;
    }
    if (inner <= 0.0 || x < 0.0)
        throw DegenerateState("normalization: superposition vanishes at this x");
    return 1.0 / std::sqrt(2.0 * inner);
}

cplx dns_overlap(int n1, int s1, int n2, int s2, double x) {
    if ((s1 != 1 && s1 != -1) || (s2 != 1 && s2 != -1))
        throw OutOfRange("dns_overlap: sign must be +-1");
    if (s1 == s2) return (n1 == n2) ? cplx{1.0, 0.0} : cplx{0.0, 0.0};
    // <n1, s1 x | n2, s2 x> = <n1| D((s2 - s1) x) |n2> = F(d) c_{n2, n1}(d)
    const cplx d{static_cast<double>(s2 - s1) * x, 0.0};
    return envelope(d) * displaced_amplitude(n2, n1, d);
}

void CvCombo::add(cplx coef, int n, int sign) {
    if (n < 0 || n > 2) throw OutOfRange("CvCombo: n must be 0, 1 or 2");
    if (sign != 1 && sign != -1) throw OutOfRange("CvCombo: sign must be +-1");
    terms_.push_back(CvTerm{coef, n, sign});
}

double CvCombo::squared_norm() const {
    return overlap(*this).real();
}

cplx CvCombo::overlap(const CvCombo& other) const {
    if (x_ != other.x_) throw LayoutMismatch("CvCombo::overlap: different x");
    cplx s{0.0, 0.0};
    for (const CvTerm& a : terms_)
        for (const CvTerm& b : other.terms_)
            s += std::conj(a.coef) * b.coef *
                 dns_overlap(a.n, a.sign, b.n, b.sign, x_);
    return s;
}

CvCombo& CvCombo::operator*=(cplx s) {
    for (CvTerm& t : terms_) t.coef *= s;
    return *this;
}

FockVector CvCombo::to_fock(int cutoff, double tail_tol) const {
    FockVector v(ModeLayout{{cutoff}});
    for (const CvTerm& t : terms_) {
        FockVector comp =
            make_displaced_number(cutoff, t.n, cplx{t.sign * x_, 0.0}, tail_tol);
        comp *= t.coef;
        v += comp;
    }
    return v;
}

double psi_input_normalization(double beta, cplx A, bool odd_parity) {
    // overlap between the normalized cat and the normalized SDSPS of equal
    // parity: <beta_-|1,odd> = -4 beta e^{-2 beta^2} N_odd0 N_odd1 and
    // <beta_+|1,even> = +4 beta e^{-2 beta^2} N_ev0 N_ev1.
    const double e = std::exp(-2.0 * beta * beta);
    double ov;
    if (odd_parity)
        ov = -4.0 * beta * e * normalization(NormKind::odd0, beta) *
             normalization(NormKind::odd1, beta);
    else
        ov = 4.0 * beta * e * normalization(NormKind::ev0, beta) *
             normalization(NormKind::ev1, beta);
    const double inner = 1.0 + std::norm(A) + 2.0 * A.real() * ov;
    if (inner <= 0.0)
        throw DegenerateState("psi_input_normalization: degenerate input");
    return 1.0 / std::sqrt(inner);
}

CvCombo psi_input_combo(double beta, cplx A, bool odd_parity) {
    const double Npsi = psi_input_normalization(beta, A, odd_parity);
    CvCombo combo(beta);
    if (odd_parity) {
        const double n0 = normalization(NormKind::odd0, beta);
        const double n1 = normalization(NormKind::odd1, beta);
        combo.add(Npsi * n0, 0, -1);
        combo.add(-Npsi * n0, 0, +1);
        combo.add(Npsi * A * n1, 1, -1);
        combo.add(Npsi * A * n1, 1, +1);
    } else {
        const double n0 = normalization(NormKind::ev0, beta);
        const double n1 = normalization(NormKind::ev1, beta);
        combo.add(Npsi * n0, 0, -1);
        combo.add(Npsi * n0, 0, +1);
        combo.add(Npsi * A * n1, 1, -1);
        combo.add(-Npsi * A * n1, 1, +1);
    }
    return combo;
}

FockVector build_cv_state(CvKind kind, double beta, const CvExtra& extra,
                          int cutoff, double tail_tol) {
    if (cutoff < 0) cutoff = cutoff_for_amplitude(std::abs(beta));

    if (kind == CvKind::truncated_scs) {
        if (extra.terms < 1 || 2 * (extra.terms - 1) > cutoff)
            throw OutOfRange("truncated_scs: bad term count for cutoff");
        FockVector v(ModeLayout{{cutoff}});
        for (int k = 0; k < extra.terms; ++k)
            v.amplitudes()[static_cast<std::size_t>(2 * k)] =
                std::pow(beta, 2 * k) / sqrt_factorial(2 * k);
        v.normalize();
        return v;
    }

    CvCombo combo(beta);
    switch (kind) {
    case CvKind::scs_even: {
        const double n = normalization(NormKind::ev0, beta);
        combo.add(n, 0, -1);
        combo.add(n, 0, +1);
        break;
    }
    case CvKind::scs_odd: {
        const double n = normalization(NormKind::odd0, beta);
        combo.add(n, 0, -1);
        combo.add(-n, 0, +1);
        break;
    }
    case CvKind::sdsps_even: {
        const double n = normalization(NormKind::ev1, beta);
        combo.add(n, 1, -1);
        combo.add(-n, 1, +1);
        break;
    }
    case CvKind::sdsps_odd: {
        const double n = normalization(NormKind::odd1, beta);
        combo.add(n, 1, -1);
        combo.add(n, 1, +1);
        break;
    }
    case CvKind::sdtps_even: {
        const double n = normalization(NormKind::ev2, beta);
        combo.add(n, 2, -1);
        combo.add(n, 2, +1);
        break;
    }
    case CvKind::psi_2m:
        combo = psi_input_combo(beta, extra.A, /*odd_parity=*/true);
        break;
    case CvKind::psi_2m1:
        combo = psi_input_combo(beta, extra.A, /*odd_parity=*/false);
        break;
    default:
        throw OutOfRange("build_cv_state: unknown kind");
    }
    FockVector v = combo.to_fock(cutoff, tail_tol);
    v.normalize(); // remove residual truncation error; throws if degenerate
    return v;
}

} // namespace hybrid
