/*
 * scheme_truncated.hpp — truncated-SCS inputs on the single-beam-splitter
 * scheme: the finite DV-DV conditional states, their entangling parameters,
 * and the closed-form fidelities against the genuine-SCS hybrid states.
 */
#pragma once

#include <complex>

#include "hybrid/fock.hpp"
#include "hybrid/scheme_fig1a.hpp"

namespace hybrid {

struct TruncatedConditional {
    int herald = 0;     // 0 or 1
    int term_count = 2; // 2 or 3
    double probability = 0.0;
    cplx weight_photon; // attaches to |1>_3
    cplx weight_vacuum; // attaches to |0>_3
    FockVector cv_photon{ModeLayout{{1}}}; // normalized finite CV vector
    FockVector cv_vacuum{ModeLayout{{1}}};
    double entangling_B = 0.0;

    FockVector to_joint_fock(int cv_cutoff) const;
};

// The normalized truncated even SCS with `term_count` terms (Fock support
// {0, 2, ..., 2(term_count-1)}).
FockVector truncated_input(double beta, int term_count, int cutoff);

// Exact heralded state for the truncated input; herald in {0,1},
// term_count in {2,3}.  entangling_B is the branch-norm ratio (equal to
// the closed forms of the main text).
TruncatedConditional build_truncated_conditional(const SchemeConfig& config,
                                                 int term_count, int herald);

// The main-text closed forms for the entangling parameter, evaluated with
// the beta^8 t^4 reading of the three-term herald-1 case (the t^4 power is
// the one consistent with the state itself; see the verification suite).
double truncated_entangling_B_formula(double beta, double t, int term_count,
                                      int herald);

struct TruncatedFidelity {
    bool formula_valid = false; // false below beta = 1e-3 (removable 0*inf)
    double formula_value = 0.0; // closed forms (B1)-(B8)
    double direct_value = 0.0;  // |<Omega|Delta>|^2 by inner product
};

// Fidelity between the truncated conditional state and the genuine-SCS
// heralded state at the same (config, herald).
TruncatedFidelity fidelity_to_genuine(const SchemeConfig& config,
                                      int term_count, int herald);

double truncated_success_probability(const SchemeConfig& config,
                                     int term_count, int herald);

} // namespace hybrid
