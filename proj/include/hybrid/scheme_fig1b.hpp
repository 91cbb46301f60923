/*
 * scheme_fig1b.hpp — the two-beam-splitter scheme: an even SCS plus an
 * auxiliary coherent state are mixed with a two-delocalized-photon state
 * (a0|0101> + a1|1010> over modes 3,4,5,6), and modes 3 and 4 are heralded
 * on outcomes (n, k).  Provides the exact heralded states (with the
 * auxiliary-mode factors |Psi_k> / coherent), the r1 -> 0 approximate
 * forms, probabilities, and a six-mode Fock oracle.
 */
#pragma once

#include <complex>
#include <vector>

#include "hybrid/analytic.hpp"
#include "hybrid/fock.hpp"
#include "hybrid/scheme_fig1a.hpp"

namespace hybrid {

struct SchemeBConfig {
    cplx a0{0.0, 0.0};
    cplx a1{0.0, 0.0};
    double beta = 0.0;  // SCS amplitude, > 0
    double t = 0.0;     // first beam splitter, in (0,1)
    double beta1 = 0.0; // auxiliary coherent amplitude, > 0
    double t1 = 0.0;    // second beam splitter, in (0,1)

    double r() const;
    double r1() const;
    void validate() const; // throws OutOfRange / DegenerateState
};

// DV labels of the two-rail qubit held by modes 5,6.
enum class DvRail { mode01, mode10 };

struct TwoModeBranch {
    DvRail dv;
    cplx weight;    // |weight|^2 sums to 1 over branches
    FockVector cv;  // normalized mode-1 component
    FockVector aux; // normalized mode-2 component
};

struct TwoModeHybridState {
    std::vector<TwoModeBranch> branches;
    double probability = 0.0;
    // Squared overlap with the exact state (1 for the exact builder).
    double approx_fidelity = 1.0;

    // Joint vector over (mode1, mode2, qubit5, qubit6), normalized.
    FockVector to_joint_fock() const;
};

// Normalized |Psi_k> auxiliary-mode state,
//   N_k (r1 c_0k(beta1 r1) |1, -beta1 t1> + t1 c_1k(beta1 r1) |-beta1 t1>),
// with N_k = (r1^2 |c0k|^2 + t1^2 |c1k|^2)^{-1/2}.
FockVector psi_k_state(const SchemeBConfig& config, int k, int cutoff = -1);

// N_k alone (needed by the B coefficient and the probability formula).
double psi_k_normalization(const SchemeBConfig& config, int k);

// B_{nk} = B_n(fig1a) * c_0k(beta1 r1) * N_k.
cplx coefficient_B_fig1b(const SchemeBConfig& config, int n, int k);

TwoModeHybridState build_exact_conditional(const SchemeBConfig& config, int n,
                                           int k, int cv_cutoff = -1);

// |Psi_k> replaced by the coherent state |-beta1 t1>; branch weights keep
// the exact N_k / c_0k factors.  approx_fidelity carries the overlap with
// the exact state.
TwoModeHybridState build_approximate_conditional(const SchemeBConfig& config,
                                                 int n, int k, int cv_cutoff = -1);

double success_probability_b(const SchemeBConfig& config, int n, int k);

// Six-mode brute-force pipeline; returns (probability, heralded state over
// modes (1, 2, qubit5, qubit6)).
std::pair<double, FockVector> oracle_conditional_state_b(
    const SchemeBConfig& config, int n, int k, int cv_cutoff = -1,
    int aux_cutoff = -1);

} // namespace hybrid
