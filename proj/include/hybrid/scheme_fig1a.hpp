/*
 * scheme_fig1a.hpp — heralded hybrid entanglement from an even/odd cat state
 * mixed with a delocalized photon on one beam splitter (Fig. 1(a) scheme).
 *
 * Input:  |cat(beta)>_1 (x) (a0|01>_23 + a1|10>_23); mode 2 heralded on n.
 * Output: |Delta_n> = N^(t) (a0 |cat'> |1>_3 + a1 B_n |Psi_n> |0>_3).
 */
#pragma once

#include <complex>
#include <vector>

#include "hybrid/analytic.hpp"
#include "hybrid/fock.hpp"

namespace hybrid {

enum class InputParity { even, odd };

struct SchemeConfig {
    cplx a0{0.0, 0.0};
    cplx a1{0.0, 0.0};
    double beta = 0.0;   // > 0 for analytic evaluation
    double t = 0.0;      // in (0, 1) for analytic evaluation
    InputParity input_parity = InputParity::even;

    double r() const;
    // Throws OutOfRange / DegenerateState when invalid for analytic use.
    void validate() const;
};

enum class DvLabel { vacuum, photon };

struct HybridBranch {
    DvLabel dv;
    cplx weight;     // |weight|^2 sums to 1 over branches
    CvCombo cv;      // normalized CV component (closed form)
};

struct HybridState {
    std::vector<HybridBranch> branches;
    double total_norm = 1.0;
    double probability = 0.0; // heralding success probability

    // Joint (CV mode (x) DV qubit) Fock vector, normalized.
    FockVector to_joint_fock(int cv_cutoff, double tail_tol = kDefaultTailTol) const;
};

// A_n per Eqs. (23)-(24); diverges where c_1n(beta r) = 0.
cplx coefficient_A(const SchemeConfig& config, int n);

// B_n per Eqs. (25)-(26), evaluated via branch norms so the removable
// singularity of A_n cancels exactly.  Real-valued for real parameters.
cplx coefficient_B(const SchemeConfig& config, int n);

// The two unnormalized CV branches (photon branch scaled by a0, vacuum
// branch by a1) including the global prefactor N_par(beta) F(beta r); the
// heralding probability is the summed squared norm.  Shared by the state
// builder and the probability evaluator.
struct RawBranches {
    CvCombo photon; // attaches to |1>_3
    CvCombo vacuum; // attaches to |0>_3
};
RawBranches raw_branches(const SchemeConfig& config, int n);

HybridState build_conditional_state(const SchemeConfig& config, int n);

double success_probability(const SchemeConfig& config, int n);

// Full Fock-oracle pipeline for cross-validation: returns probability and
// the heralded joint state over (CV mode, DV qubit).
std::pair<double, FockVector> oracle_conditional_state(const SchemeConfig& config,
                                                       int n, int cv_cutoff = -1);

// Oracle run with an arbitrary single-mode input state in mode 1.
std::pair<double, FockVector> oracle_conditional_state_custom(
    const FockVector& input, cplx a0, cplx a1, double t, int n);

} // namespace hybrid
