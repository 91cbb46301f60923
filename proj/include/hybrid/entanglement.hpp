/*
 * entanglement.hpp — negativity (analytic closed form and numeric partial
 * transpose) and pure-state fidelity.
 */
#pragma once

#include <complex>

#include <Eigen/Dense>

#include "hybrid/fock.hpp"

namespace hybrid {

using DenseMatrix = Eigen::MatrixXcd;

struct BipartiteDensity {
    int dim_a = 0;
    int dim_b = 0;
    DenseMatrix matrix; // (dim_a * dim_b)^2, Hermitian, trace 1

    void validate() const; // throws InvalidDensity
};

// Pure-state density from a joint vector laid out row-major as (A, B).
BipartiteDensity density_from_pure(const FockVector& joint, int dim_b);
BipartiteDensity density_from_pure(const Eigen::VectorXcd& psi, int dim_a, int dim_b);

// Closed form N = 2|a0||a1||B| / (|a0|^2 + |a1|^2 |B|^2), Eqs. (39)-(42).
double negativity_analytic(cplx a0, cplx a1, cplx B);

// ||rho^{T_A}||_1 - 1 via Hermitian eigendecomposition; clamped at 0.
double negativity_numeric(const BipartiteDensity& rho);

// Squared overlap |<a|b>|^2 of two pure states with identical layouts.
double fidelity(const FockVector& a, const FockVector& b);

} // namespace hybrid
