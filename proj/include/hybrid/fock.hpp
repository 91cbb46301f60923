/*
 * fock.hpp — brute-force truncated-Fock oracle.
 *
 * Multimode states are dense complex tensors over per-mode truncated Fock
 * bases.  The module provides the displacement and beam-splitter unitaries
 * and photon-number projection; it is the ground truth against which every
 * closed-form expression in the library is validated.
 *
 * Conventions (pinned by the anchor identities in the tests):
 *   BS|01>_AB = r|10> + t|01>,   BS|10>_AB = t|10> - r|01>
 *   BS D_A(b) BS^+ = D_A(bt) D_B(-br)
 */
#pragma once

#include <complex>
#include <cstdint>
#include <utility>
#include <vector>

#include "hybrid/errors.hpp"

namespace hybrid {

using cplx = std::complex<double>;

// Default tail tolerance used by state constructors and unitaries.
inline constexpr double kDefaultTailTol = 1e-10;

// Cutoff policy: a mode expected to carry coherent amplitude mu gets
// ceil(|mu|^2 + 6|mu| + 10), at least 16.  Photon-qubit modes use 3.
int cutoff_for_amplitude(double mu_abs);
inline constexpr int kQubitCutoff = 3;

struct ModeLayout {
    // dimension of mode i is cutoffs[i] + 1
    std::vector<int> cutoffs;

    int modes() const { return static_cast<int>(cutoffs.size()); }
    std::int64_t dim(int mode) const;
    std::int64_t total_dim() const; // throws OutOfRange on overflow
    bool operator==(const ModeLayout&) const = default;
};

class FockVector {
public:
    explicit FockVector(ModeLayout layout); // zero vector

    const ModeLayout& layout() const { return layout_; }
    const std::vector<cplx>& amplitudes() const { return amps_; }
    std::vector<cplx>& amplitudes() { return amps_; }

    // Flat row-major index of a multi-index (range-checked).
    std::int64_t flat_index(const std::vector<int>& occupation) const;
    cplx& at(const std::vector<int>& occupation);
    cplx at(const std::vector<int>& occupation) const;

    double norm() const;
    double squared_norm() const;
    void normalize(); // throws DegenerateState on (near-)zero vector

    // Summed |amplitude|^2 over basis states with any n_i >= cutoff_i - 1.
    double tail_mass() const;
    void check_tail(double tol, const char* context) const;

    FockVector& operator*=(cplx s);
    FockVector& operator+=(const FockVector& other); // layouts must match

private:
    ModeLayout layout_;
    std::vector<std::int64_t> strides_;
    std::vector<cplx> amps_;

    friend FockVector apply_single_mode(const FockVector&, int,
                                        const std::vector<cplx>&);
    friend FockVector apply_beam_splitter(const FockVector&, int, int, double);
    friend std::pair<double, FockVector>
    project_photon_number(const FockVector&, int, int);
};

// --- constructors -----------------------------------------------------------

FockVector make_fock(const ModeLayout& layout, const std::vector<int>& occupation);

// Single-mode |alpha> with the given cutoff; tail-checked.
FockVector make_coherent(int cutoff, cplx alpha, double tail_tol = kDefaultTailTol);

// Single-mode displaced number state |n, alpha> = D(alpha)|n>; tail-checked.
FockVector make_displaced_number(int cutoff, int n, cplx alpha,
                                 double tail_tol = kDefaultTailTol);

// Tensor product (layouts concatenate).
FockVector tensor(const FockVector& a, const FockVector& b);

// --- operations -------------------------------------------------------------

// Dense single-mode matrix elements <m|D(alpha)|n>, column-major d*d.
std::vector<cplx> displacement_matrix(int dim, cplx alpha);

FockVector apply_displacement(const FockVector& state, int mode, cplx alpha,
                              double tail_tol = kDefaultTailTol);

// t in [0,1]; r = sqrt(1-t^2) with the sign convention above.
FockVector apply_beam_splitter(const FockVector& state, int modeA, int modeB,
                               double t);

// Returns (probability, conditional state with `mode` removed, renormalized).
// Zero-probability outcomes return probability 0 and the unnormalized slice.
std::pair<double, FockVector> project_photon_number(const FockVector& state,
                                                    int mode, int n);

cplx inner_product(const FockVector& a, const FockVector& b);

} // namespace hybrid
