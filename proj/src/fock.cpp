/*
 * fock.cpp — implementation of the truncated-Fock oracle.
 */
#include "hybrid/fock.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace hybrid {

namespace {

std::vector<std::int64_t> make_strides(const ModeLayout& layout) {
    const int m = layout.modes();
    std::vector<std::int64_t> strides(m);
    std::int64_t s = 1;
    for (int i = m - 1; i >= 0; --i) {
        strides[i] = s;
        s *= layout.dim(i);
    }
    return strides;
}

} // namespace

int cutoff_for_amplitude(double mu_abs) {
    const double v = std::ceil(mu_abs * mu_abs + 6.0 * mu_abs + 10.0);
    return std::max(16, static_cast<int>(v));
}

std::int64_t ModeLayout::dim(int mode) const {
    if (mode < 0 || mode >= modes())
        throw InvalidModes("mode index out of range");
    return static_cast<std::int64_t>(cutoffs[mode]) + 1;
}

std::int64_t ModeLayout::total_dim() const {
    std::int64_t total = 1;
    for (int i = 0; i < modes(); ++i) {
        if (cutoffs[i] < 1)
            throw OutOfRange("every cutoff must be >= 1");
        const std::int64_t d = dim(i);
        if (total > std::numeric_limits<std::int64_t>::max() / d)
            throw OutOfRange("total Hilbert dimension overflows index range");
        total *= d;
    }
    return total;
}

FockVector::FockVector(ModeLayout layout)
    : layout_(std::move(layout)),
      strides_(make_strides(layout_)),
      amps_(static_cast<std::size_t>(layout_.total_dim()), cplx{0.0, 0.0}) {}

std::int64_t FockVector::flat_index(const std::vector<int>& occupation) const {
    if (static_cast<int>(occupation.size()) != layout_.modes())
        throw LayoutMismatch("occupation length does not match mode count");
    std::int64_t idx = 0;
    for (int i = 0; i < layout_.modes(); ++i) {
        if (occupation[i] < 0 || occupation[i] > layout_.cutoffs[i])
            throw OutOfRange("occupation exceeds cutoff");
        idx += occupation[i] * strides_[i];
    }
    return idx;
}

cplx& FockVector::at(const std::vector<int>& occupation) {
    return amps_[static_cast<std::size_t>(flat_index(occupation))];
}

cplx FockVector::at(const std::vector<int>& occupation) const {
    return amps_[static_cast<std::size_t>(flat_index(occupation))];
}

double FockVector::squared_norm() const {
    double s = 0.0;
    for (const cplx& a : amps_) s += std::norm(a);
    return s;
}

double FockVector::norm() const { return std::sqrt(squared_norm()); }

void FockVector::normalize() {
    const double n = norm();
    if (n < 1e-150)
        throw DegenerateState("cannot normalize a (near-)zero vector");
    const double inv = 1.0 / n;
    for (cplx& a : amps_) a *= inv;
}

double FockVector::tail_mass() const {
    const int m = layout_.modes();
    double s = 0.0;
    std::vector<int> idx(m, 0);
    for (std::int64_t flat = 0; flat < static_cast<std::int64_t>(amps_.size());
         ++flat) {
        bool tail = false;
        for (int i = 0; i < m; ++i) {
            if (idx[i] >= layout_.cutoffs[i] - 1) { tail = true; break; }
        }
        if (tail) s += std::norm(amps_[static_cast<std::size_t>(flat)]);
        // increment multi-index (row-major)
        for (int i = m - 1; i >= 0; --i) {
            if (++idx[i] <= layout_.cutoffs[i]) break;
            idx[i] = 0;
        }
    }
    return s;
}

void FockVector::check_tail(double tol, const char* context) const {
    const double t = tail_mass();
    if (t > tol)
        throw CutoffTooSmall(std::string(context) + ": tail mass " +
                             std::to_string(t) + " exceeds tolerance " +
                             std::to_string(tol));
}

FockVector& FockVector::operator*=(cplx s) {
    for (cplx& a : amps_) a *= s;
    return *this;
}

FockVector& FockVector::operator+=(const FockVector& other) {
    if (!(layout_ == other.layout_))
        throw LayoutMismatch("operator+=: layouts differ");
    for (std::size_t i = 0; i < amps_.size(); ++i) amps_[i] += other.amps_[i];
    return *this;
}

FockVector make_fock(const ModeLayout& layout, const std::vector<int>& occupation) {
    FockVector v(layout);
    v.at(occupation) = cplx{1.0, 0.0};
    return v;
}

std::vector<cplx> displacement_matrix(int dim, cplx alpha) {
    // Column n holds <m|D(alpha)|n>.  Column 0 is the coherent state; the
    // remaining columns follow from D|n+1> = (a^dag - conj(alpha)) D|n> / sqrt(n+1),
    // which is exact in the untruncated space (a^dag acts exactly on rows < dim).
    std::vector<cplx> D(static_cast<std::size_t>(dim) * dim, cplx{0.0, 0.0});
    const double a2 = std::norm(alpha);
    D[0] = std::exp(-0.5 * a2);
    for (int m = 1; m < dim; ++m)
        D[m] = D[m - 1] * alpha / std::sqrt(static_cast<double>(m));
    const cplx ac = std::conj(alpha);
    for (int n = 0; n + 1 < dim; ++n) {
        const cplx* col = &D[static_cast<std::size_t>(n) * dim];
        cplx* nxt = &D[static_cast<std::size_t>(n + 1) * dim];
        const double inv = 1.0 / std::sqrt(static_cast<double>(n + 1));
        for (int m = 0; m < dim; ++m) {
            cplx v = -ac * col[m];
            if (m > 0) v += std::sqrt(static_cast<double>(m)) * col[m - 1];
            nxt[m] = v * inv;
        }
    }
    return D;
}

FockVector make_coherent(int cutoff, cplx alpha, double tail_tol) {
    return make_displaced_number(cutoff, 0, alpha, tail_tol);
}

FockVector make_displaced_number(int cutoff, int n, cplx alpha, double tail_tol) {
    if (n < 0 || n > cutoff) throw OutOfRange("photon index exceeds cutoff");
    const int dim = cutoff + 1;
    const std::vector<cplx> D = displacement_matrix(dim, alpha);
    FockVector v(ModeLayout{{cutoff}});
    for (int m = 0; m < dim; ++m)
        v.amplitudes()[static_cast<std::size_t>(m)] =
            D[static_cast<std::size_t>(n) * dim + m];
    v.check_tail(tail_tol, "make_displaced_number");
    return v;
}

FockVector tensor(const FockVector& a, const FockVector& b) {
    ModeLayout layout;
    layout.cutoffs = a.layout().cutoffs;
    layout.cutoffs.insert(layout.cutoffs.end(), b.layout().cutoffs.begin(),
                          b.layout().cutoffs.end());
    FockVector out(layout);
    const auto& aa = a.amplitudes();
    const auto& bb = b.amplitudes();
    std::size_t k = 0;
    for (std::size_t i = 0; i < aa.size(); ++i)
        for (std::size_t j = 0; j < bb.size(); ++j) out.amplitudes()[k++] = aa[i] * bb[j];
    return out;
}

// Applies a dense single-mode matrix (column-major dim*dim) along `mode`.
FockVector apply_single_mode(const FockVector& state, int mode,
                             const std::vector<cplx>& M) {
    const ModeLayout& layout = state.layout_;
    if (mode < 0 || mode >= layout.modes())
        throw InvalidModes("apply_single_mode: bad mode index");
    const std::int64_t d = layout.dim(mode);
    const std::int64_t stride = state.strides_[mode];
    const std::int64_t total = static_cast<std::int64_t>(state.amps_.size());
    const std::int64_t block = stride * d;

    FockVector out(layout);
    std::vector<cplx> in_col(static_cast<std::size_t>(d));
    for (std::int64_t base = 0; base < total; base += block) {
        for (std::int64_t off = 0; off < stride; ++off) {
            for (std::int64_t n = 0; n < d; ++n)
                in_col[static_cast<std::size_t>(n)] =
                    state.amps_[static_cast<std::size_t>(base + off + n * stride)];
            for (std::int64_t m = 0; m < d; ++m) {
                cplx acc{0.0, 0.0};
                const cplx* Mm = &M[static_cast<std::size_t>(m)];
                for (std::int64_t n = 0; n < d; ++n)
                    acc += Mm[static_cast<std::size_t>(n * d)] *
                           in_col[static_cast<std::size_t>(n)];
                out.amps_[static_cast<std::size_t>(base + off + m * stride)] = acc;
            }
        }
    }
    return out;
}

FockVector apply_displacement(const FockVector& state, int mode, cplx alpha,
                              double tail_tol) {
    const std::int64_t d = state.layout().dim(mode);
    FockVector out = apply_single_mode(state, mode,
                                       displacement_matrix(static_cast<int>(d), alpha));
    // Norm loss measures amplitude pushed past the cutoff.
    const double lost = std::abs(state.squared_norm() - out.squared_norm());
    if (lost > tail_tol)
        throw CutoffTooSmall("apply_displacement: norm loss " + std::to_string(lost));
    return out;
}

namespace {

// Dense block of the beam-splitter unitary at fixed total photon number N:
// entry(j, n) = <j, N-j | BS | n, N-n> for j, n in [lo, hi].
// Derived from a_A^dag -> t a_A^dag - r a_B^dag, a_B^dag -> r a_A^dag + t a_B^dag.
std::vector<double> bs_block(int N, int lo, int hi, double t, double r) {
    const int sz = hi - lo + 1;
    std::vector<double> blk(static_cast<std::size_t>(sz) * sz, 0.0);
    for (int n = lo; n <= hi; ++n) {
        for (int j = lo; j <= hi; ++j) {
            double sum = 0.0;
            const int pmin = std::max(0, j - (N - n));
            const int pmax = std::min(j, n);
            for (int p = pmin; p <= pmax; ++p) {
                const int q = j - p;
                double lg = std::lgamma(n + 1.0) - std::lgamma(p + 1.0) -
                            std::lgamma(n - p + 1.0) + std::lgamma(N - n + 1.0) -
                            std::lgamma(q + 1.0) - std::lgamma(N - n - q + 1.0);
                double term = std::exp(lg) * std::pow(t, p) *
                              std::pow(-r, n - p) * std::pow(r, q) *
                              std::pow(t, N - n - q);
                sum += term;
            }
            const double fac = std::exp(
                0.5 * (std::lgamma(j + 1.0) + std::lgamma(N - j + 1.0) -
                       std::lgamma(n + 1.0) - std::lgamma(N - n + 1.0)));
            blk[static_cast<std::size_t>(j - lo) * sz + (n - lo)] = fac * sum;
        }
    }
    return blk;
}

} // namespace

FockVector apply_beam_splitter(const FockVector& state, int modeA, int modeB,
                               double t) {
    const ModeLayout& layout = state.layout_;
    if (modeA == modeB) throw InvalidModes("apply_beam_splitter: equal mode indices");
    if (modeA < 0 || modeA >= layout.modes() || modeB < 0 || modeB >= layout.modes())
        throw InvalidModes("apply_beam_splitter: mode index out of range");
    if (t < 0.0 || t > 1.0) throw OutOfRange("apply_beam_splitter: t outside [0,1]");
    const double r = std::sqrt(std::max(0.0, 1.0 - t * t));

    const int dA = static_cast<int>(layout.dim(modeA));
    const int dB = static_cast<int>(layout.dim(modeB));
    const std::int64_t sA = state.strides_[modeA];
    const std::int64_t sB = state.strides_[modeB];
    const std::int64_t total = static_cast<std::int64_t>(state.amps_.size());

    FockVector out(layout);

    // Iterate over all flat indices with n_A = n_B = 0; each such base index
    // addresses one (n_A, n_B) plane via base + nA*sA + nB*sB.
    std::vector<int> idx(layout.modes(), 0);
    std::vector<std::int64_t> bases;
    for (std::int64_t flat = 0; flat < total;) {
        bases.push_back(flat);
        // advance to the next index with modeA and modeB components zero
        int i = layout.modes() - 1;
        for (; i >= 0; --i) {
            if (i == modeA || i == modeB) continue;
            if (++idx[i] <= layout.cutoffs[i]) break;
            idx[i] = 0;
        }
        if (i < 0) break;
        flat = 0;
        for (int k = 0; k < layout.modes(); ++k)
            flat += idx[k] * state.strides_[k];
    }

    const int Nmax = dA - 1 + dB - 1;
    std::vector<cplx> in_blk, out_blk;
    for (int N = 0; N <= Nmax; ++N) {
        const int lo = std::max(0, N - (dB - 1));
        const int hi = std::min(N, dA - 1);
        if (lo > hi) continue;
        const int sz = hi - lo + 1;
        const std::vector<double> blk = bs_block(N, lo, hi, t, r);
        in_blk.resize(static_cast<std::size_t>(sz));
        for (std::int64_t base : bases) {
            for (int n = lo; n <= hi; ++n)
                in_blk[static_cast<std::size_t>(n - lo)] =
                    state.amps_[static_cast<std::size_t>(base + n * sA +
                                                         (N - n) * sB)];
            for (int j = lo; j <= hi; ++j) {
                cplx acc{0.0, 0.0};
                const double* row = &blk[static_cast<std::size_t>(j - lo) * sz];
                for (int n = 0; n < sz; ++n)
                    acc += row[n] * in_blk[static_cast<std::size_t>(n)];
                out.amps_[static_cast<std::size_t>(base + j * sA + (N - j) * sB)] = acc;
            }
        }
    }
    return out;
}

std::pair<double, FockVector> project_photon_number(const FockVector& state,
                                                    int mode, int n) {
    const ModeLayout& layout = state.layout_;
    if (mode < 0 || mode >= layout.modes())
        throw InvalidModes("project_photon_number: bad mode index");
    if (n < 0 || n > layout.cutoffs[mode])
        throw OutOfRange("project_photon_number: n exceeds cutoff");

    ModeLayout reduced;
    reduced.cutoffs = layout.cutoffs;
    reduced.cutoffs.erase(reduced.cutoffs.begin() + mode);
    if (reduced.cutoffs.empty()) reduced.cutoffs.push_back(1); // scalar guard

    const std::int64_t d = layout.dim(mode);
    const std::int64_t stride = state.strides_[mode];
    const std::int64_t block = stride * d;
    const std::int64_t total = static_cast<std::int64_t>(state.amps_.size());

    FockVector cond(reduced);
    std::int64_t k = 0;
    for (std::int64_t base = 0; base < total; base += block)
        for (std::int64_t off = 0; off < stride; ++off)
            cond.amplitudes()[static_cast<std::size_t>(k++)] =
                state.amps_[static_cast<std::size_t>(base + off + n * stride)];

    const double p = cond.squared_norm();
    if (p > 1e-300) {
        const double inv = 1.0 / std::sqrt(p);
        for (cplx& a : cond.amplitudes()) a *= inv;
    }
    return {p, std::move(cond)};
}

cplx inner_product(const FockVector& a, const FockVector& b) {
    if (!(a.layout() == b.layout()))
        throw LayoutMismatch("inner_product: layouts differ");
    cplx s{0.0, 0.0};
    const auto& aa = a.amplitudes();
    const auto& bb = b.amplitudes();
    for (std::size_t i = 0; i < aa.size(); ++i) s += std::conj(aa[i]) * bb[i];
    return s;
}

} // namespace hybrid
