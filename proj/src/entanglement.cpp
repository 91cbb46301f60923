/*
 * entanglement.cpp — negativity and fidelity.
 */
#include "hybrid/entanglement.hpp"

#include <cmath>

namespace hybrid {

void BipartiteDensity::validate() const {
    const int d = dim_a * dim_b;
    if (d <= 0 || matrix.rows() != d || matrix.cols() != d)
        throw InvalidDensity("BipartiteDensity: dimension mismatch");
    const double herm = (matrix - matrix.adjoint()).cwiseAbs().maxCoeff();
    if (herm > 1e-12)
        throw InvalidDensity("BipartiteDensity: matrix is not Hermitian");
    if (std::abs(matrix.trace().real() - 1.0) > 1e-12 ||
        std::abs(matrix.trace().imag()) > 1e-12)
        throw InvalidDensity("BipartiteDensity: trace is not 1");
}

BipartiteDensity density_from_pure(const Eigen::VectorXcd& psi, int dim_a,
                                   int dim_b) {
    if (psi.size() != static_cast<Eigen::Index>(dim_a) * dim_b)
        throw InvalidDensity("density_from_pure: vector size mismatch");
    BipartiteDensity rho;
    rho.dim_a = dim_a;
    rho.dim_b = dim_b;
    Eigen::VectorXcd v = psi / psi.norm();
    rho.matrix = v * v.adjoint();
    return rho;
}

BipartiteDensity density_from_pure(const FockVector& joint, int dim_b) {
    const auto& amps = joint.amplitudes();
    const int total = static_cast<int>(amps.size());
    if (total % dim_b != 0)
        throw InvalidDensity("density_from_pure: dim_b does not divide state size");
    Eigen::VectorXcd v(total);
    for (int i = 0; i < total; ++i) v(i) = amps[static_cast<std::size_t>(i)];
    return density_from_pure(v, total / dim_b, dim_b);
}

double negativity_analytic(cplx a0, cplx a1, cplx B) {
    const double x = std::abs(a0);
    const double yB = std::abs(a1) * std::abs(B);
    const double denom = x * x + yB * yB;
    if (denom < 1e-300) return 0.0;
    return 2.0 * x * yB / denom;
}

double negativity_numeric(const BipartiteDensity& rho) {
    rho.validate();
    const int da = rho.dim_a;
    const int db = rho.dim_b;
    DenseMatrix pt(da * db, da * db);
    // rho^{T_A}[(a,b),(a',b')] = rho[(a',b),(a,b')]
    for (int a = 0; a < da; ++a)
        for (int b = 0; b < db; ++b)
            for (int ap = 0; ap < da; ++ap)
                for (int bp = 0; bp < db; ++bp)
                    pt(a * db + b, ap * db + bp) =
                        rho.matrix(ap * db + b, a * db + bp);
    Eigen::SelfAdjointEigenSolver<DenseMatrix> es(pt, Eigen::EigenvaluesOnly);
    double sum_abs = 0.0;
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i)
        sum_abs += std::abs(es.eigenvalues()(i));
    double neg = sum_abs - 1.0;
    if (neg < 0.0 && neg > -1e-10) neg = 0.0;
    return neg;
}

double fidelity(const FockVector& a, const FockVector& b) {
    const double na = a.norm();
    const double nb = b.norm();
    if (na < 1e-150 || nb < 1e-150)
        throw DegenerateState("fidelity: zero vector");
    const double v = std::norm(inner_product(a, b)) / (na * na * nb * nb);
    return v;
}

} // namespace hybrid
