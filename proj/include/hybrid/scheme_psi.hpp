/*
 * scheme_psi.hpp — the single-beam-splitter scheme driven by the input
 * |Psi> = N (odd SCS + A * odd SDSPS) at amplitude beta: four-component
 * conditional states, their coefficient set {R, R', C, D, F}, entangling
 * parameters, and probabilities.
 */
#pragma once

#include <complex>
#include <vector>

#include "hybrid/analytic.hpp"
#include "hybrid/fock.hpp"

namespace hybrid {

struct PsiSchemeConfig {
    cplx a0{0.0, 0.0};
    cplx a1{0.0, 0.0};
    double beta = 0.0; // > 0
    double t = 0.0;    // in (0, 1)
    cplx A{0.0, 0.0};  // free |1, odd> amplitude of the input

    double r() const;
    void validate() const;
};

// Closed-form coefficient set of the heralded state; the photon branch is
// cat + C * dns1, the vacuum branch cat' + D * dns1' + F * dns2', with the
// parities of the primed/unprimed sets fixed by the herald parity.
struct PsiCoefficients {
    cplx R;  // photon-branch cat coefficient
    cplx Rp; // vacuum-branch cat coefficient (R')
    cplx C;
    cplx D;
    cplx F;
    double N_photon = 0.0; // Gram normalization of (cat + C dns1)
    double N_vacuum = 0.0; // Gram normalization of (cat' + D dns1' + F dns2')
    cplx B;                // entangling parameter
};

struct PsiConditional {
    int herald = 0;
    double probability = 0.0;
    cplx weight_photon;
    cplx weight_vacuum;
    CvCombo cv_photon; // normalized
    CvCombo cv_vacuum; // normalized
    PsiCoefficients coefficients;

    FockVector to_joint_fock(int cv_cutoff,
                             double tail_tol = kDefaultTailTol) const;
};

// Closed-form coefficients for herald n (either parity).
PsiCoefficients psi_coefficients(const PsiSchemeConfig& config, int n);

PsiConditional build_psi_conditional(const PsiSchemeConfig& config, int n);

double psi_success_probability(const PsiSchemeConfig& config, int n);

// Printed-probability closed form (the main-text expression): equals
// psi_success_probability on the valid domain.
double psi_success_probability_formula(const PsiSchemeConfig& config, int n);

// Oracle pipeline with the |Psi> input.
std::pair<double, FockVector> oracle_psi_conditional(
    const PsiSchemeConfig& config, int n, int cv_cutoff = -1);

// Oracle-only support for the even-parity sibling input
// N (even SCS + A * even SDSPS); no closed-form coefficients are claimed.
std::pair<double, FockVector> oracle_psi_even_conditional(
    const PsiSchemeConfig& config, int n, int cv_cutoff = -1);

} // namespace hybrid
