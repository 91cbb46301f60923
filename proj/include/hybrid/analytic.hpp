/*
 * analytic.hpp — closed-form building blocks shared by all scheme modules:
 * displaced-number-state amplitudes c_nm(alpha), the Gaussian envelope F,
 * the normalization constants of the cat-like superpositions, and
 * constructors for every named CV state.
 *
 * Conventions: |n,alpha> = D(alpha)|n> = F(alpha) sum_m c_nm(alpha) |m>,
 * with F(alpha) = exp(-|alpha|^2/2) and c_nm(alpha) = e^{|alpha|^2/2}<m|n,alpha>.
 */
#pragma once

#include <complex>
#include <vector>

#include "hybrid/fock.hpp"

namespace hybrid {

// Envelope factor F(alpha) = exp(-|alpha|^2 / 2).
double envelope(cplx alpha);

// Displaced-number amplitudes without the envelope, n in {0, 1, 2}.
// c_0m = alpha^m / sqrt(m!)
// c_1m = alpha^{m-1} (m - |alpha|^2) / sqrt(m!)
// c_2m = alpha^{m-2} (m(m-1) - 2m|alpha|^2 + |alpha|^4) / sqrt(2 m!)
// Values at alpha = 0 are defined by the orthonormality limit.
cplx displaced_amplitude(int n, int m, cplx alpha);

// Self-test of the parity mechanism: c_nm(-a) = (-1)^{m-n} c_nm(a).
bool parity_flip_identity_check(int n, int m, cplx alpha);

// Normalization constants of the two-component superpositions
//   ev0:  |−x> + |x>          odd0: |−x> − |x>
//   ev1:  |1,−x> − |1,x>      odd1: |1,−x> + |1,x>
//   ev2:  |2,−x> + |2,x>      odd2: |2,−x> − |2,x>
// (the label gives the parity of the Fock support).  Throws DegenerateState
// where the superposition vanishes identically (odd0, ev1, odd2 at x = 0).
enum class NormKind { ev0, odd0, ev1, odd1, ev2, odd2 };
double normalization(NormKind kind, double x);

// Exact overlap <n1, s1*x | n2, s2*x> between displaced number states at
// opposite-or-equal real displacements (s in {-1, +1}, n in {0, 1, 2}).
cplx dns_overlap(int n1, int s1, int n2, int s2, double x);

// A finite linear combination sum_i coef_i |n_i, s_i * x>, the workhorse
// representation for every CV branch appearing in the schemes.  Norms and
// overlaps are evaluated in closed form via dns_overlap.
struct CvTerm {
    cplx coef;
    int n;    // 0, 1 or 2
    int sign; // -1 or +1: displacement sign * x
};

class CvCombo {
public:
    CvCombo() : x_(0.0) {}
    explicit CvCombo(double x) : x_(x) {}

    double x() const { return x_; }
    void add(cplx coef, int n, int sign);
    const std::vector<CvTerm>& terms() const { return terms_; }

    double squared_norm() const;
    cplx overlap(const CvCombo& other) const; // <this|other>
    CvCombo& operator*=(cplx s);

    // Materialize as a truncated Fock vector (with envelope), tail-checked.
    FockVector to_fock(int cutoff, double tail_tol = kDefaultTailTol) const;

private:
    double x_;
    std::vector<CvTerm> terms_;
};

// Named CV state constructors.  `beta` is the displacement amplitude; the
// psi kinds take the free amplitude A of their |1, odd/even> component and
// the truncated kind takes the number of retained terms.
enum class CvKind {
    scs_even,     // N_ev0 (|−β> + |β>)
    scs_odd,      // N_odd0(|−β> − |β>)
    sdsps_even,   // N_ev1 (|1,−β> − |1,β>)
    sdsps_odd,    // N_odd1(|1,−β> + |1,β>)
    sdtps_even,   // N_ev2 (|2,−β> + |2,β>)
    psi_2m,       // N_2m  (scs_odd + A sdsps_odd)
    psi_2m1,      // N_2m1 (scs_even + A sdsps_even)
    truncated_scs // N_n sum_{k<terms} beta^{2k}/sqrt((2k)!) |2k>
};

struct CvExtra {
    cplx A{0.0, 0.0}; // psi kinds
    int terms = 2;    // truncated_scs
};

FockVector build_cv_state(CvKind kind, double beta, const CvExtra& extra = {},
                          int cutoff = -1, double tail_tol = kDefaultTailTol);

// Closed-form normalization of the psi inputs (paper text below Eq. (24)):
// N = (1 + |A|^2 + 2 Re(A) * <cat | sdsps>)^{-1/2} with the parity-matched
// cat/sdsps overlap.  even_herald=false selects the psi_2m (odd) variant.
double psi_input_normalization(double beta, cplx A, bool odd_parity);

// The psi input as a CvCombo at displacement beta (unnormalized components
// carry their own normalization constants; overall factor included).
CvCombo psi_input_combo(double beta, cplx A, bool odd_parity);

} // namespace hybrid
