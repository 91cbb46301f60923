/*
 * sweep.cpp — grid evaluation and root solving for the maximal-
 * entanglement condition |B| = sqrt(|a0|/|a1|).
 */
#include "hybrid/sweep.hpp"

#include <cmath>
#include <limits>

#include "hybrid/entanglement.hpp"
#include "hybrid/scheme_fig1a.hpp"
#include "hybrid/scheme_fig1b.hpp"
#include "hybrid/scheme_psi.hpp"
#include "hybrid/scheme_truncated.hpp"

namespace hybrid {

namespace {

using Params = std::map<std::string, double>;

double get_param(const Params& p, const std::string& name) {
    auto it = p.find(name);
    if (it == p.end())
        throw OutOfRange("missing parameter: " + name);
    return it->second;
}

double get_param_or(const Params& p, const std::string& name, double fallback) {
    auto it = p.find(name);
    return it == p.end() ? fallback : it->second;
}

void split_amplitudes(const Params& p, cplx& a0, cplx& a1) {
    const double a0sq = get_param_or(p, "a0_squared", 0.5);
    if (a0sq < 0.0 || a0sq > 1.0)
        throw OutOfRange("a0_squared must lie in [0,1]");
    a0 = cplx{std::sqrt(a0sq), 0.0};
    a1 = cplx{std::sqrt(1.0 - a0sq), 0.0};
}

SchemeConfig fig1a_config(const Params& p) {
    SchemeConfig c;
    split_amplitudes(p, c.a0, c.a1);
    c.beta = get_param(p, "beta");
    c.t = get_param(p, "t");
    c.input_parity = get_param_or(p, "input_parity", 0.0) != 0.0
                         ? InputParity::odd
                         : InputParity::even;
    return c;
}

SchemeBConfig fig1b_config(const Params& p) {
    SchemeBConfig c;
    split_amplitudes(p, c.a0, c.a1);
    c.beta = get_param(p, "beta");
    c.t = get_param(p, "t");
    c.beta1 = get_param(p, "beta1");
    c.t1 = get_param(p, "t1");
    return c;
}

PsiSchemeConfig psi_config(const Params& p) {
    PsiSchemeConfig c;
    split_amplitudes(p, c.a0, c.a1);
    c.beta = get_param(p, "beta");
    c.t = get_param(p, "t");
    c.A = cplx{get_param_or(p, "A", 0.0), 0.0};
    return c;
}

int herald_at(const std::vector<int>& herald, std::size_t i) {
    if (herald.size() <= i)
        throw OutOfRange("herald outcome index missing");
    return herald[i];
}

// |B| for the scheme at the given parameters.
double abs_B(SchemeKind scheme, const std::vector<int>& herald,
             const Params& p) {
    switch (scheme) {
    case SchemeKind::fig1a:
        return std::abs(coefficient_B(fig1a_config(p), herald_at(herald, 0)));
    case SchemeKind::fig1b:
        return std::abs(coefficient_B_fig1b(fig1b_config(p),
                                            herald_at(herald, 0),
                                            herald_at(herald, 1)));
    case SchemeKind::truncated:
        return truncated_entangling_B_formula(
            get_param(p, "beta"), get_param(p, "t"),
            static_cast<int>(get_param_or(p, "term_count", 2.0)),
            herald_at(herald, 0));
    case SchemeKind::psi:
        return std::abs(
            psi_coefficients(psi_config(p), herald_at(herald, 0)).B);
    }
    throw OutOfRange("unknown scheme");
}

double probability_of(SchemeKind scheme, EngineKind engine,
                      const std::vector<int>& herald, const Params& p,
                      int cutoff) {
    switch (scheme) {
    case SchemeKind::fig1a: {
        SchemeConfig c = fig1a_config(p);
        if (engine == EngineKind::oracle)
            return oracle_conditional_state(c, herald_at(herald, 0), cutoff)
                .first;
        return success_probability(c, herald_at(herald, 0));
    }
    case SchemeKind::fig1b: {
        SchemeBConfig c = fig1b_config(p);
        if (engine == EngineKind::oracle)
            return oracle_conditional_state_b(c, herald_at(herald, 0),
                                              herald_at(herald, 1), cutoff)
                .first;
        return success_probability_b(c, herald_at(herald, 0),
                                     herald_at(herald, 1));
    }
    case SchemeKind::truncated:
        return truncated_success_probability(
            fig1a_config(p),
            static_cast<int>(get_param_or(p, "term_count", 2.0)),
            herald_at(herald, 0));
    case SchemeKind::psi: {
        PsiSchemeConfig c = psi_config(p);
        if (engine == EngineKind::oracle)
            return oracle_psi_conditional(c, herald_at(herald, 0), cutoff)
                .first;
        return psi_success_probability(c, herald_at(herald, 0));
    }
    }
    throw OutOfRange("unknown scheme");
}

double negativity_of(SchemeKind scheme, EngineKind engine,
                     const std::vector<int>& herald, const Params& p,
                     int cutoff) {
    cplx a0, a1;
    split_amplitudes(p, a0, a1);
    if (engine == EngineKind::analytic) {
        return negativity_analytic(a0, a1,
                                   cplx{abs_B(scheme, herald, p), 0.0});
    }
    switch (scheme) {
    case SchemeKind::fig1a: {
        auto [prob, st] =
            oracle_conditional_state(fig1a_config(p), herald_at(herald, 0),
                                     cutoff);
        (void)prob;
        return negativity_numeric(density_from_pure(st, 2));
    }
    case SchemeKind::psi: {
        auto [prob, st] =
            oracle_psi_conditional(psi_config(p), herald_at(herald, 0),
                                   cutoff);
        (void)prob;
        return negativity_numeric(density_from_pure(st, 2));
    }
    case SchemeKind::truncated: {
        TruncatedConditional tc = build_truncated_conditional(
            fig1a_config(p),
            static_cast<int>(get_param_or(p, "term_count", 2.0)),
            herald_at(herald, 0));
        return negativity_numeric(
            density_from_pure(tc.to_joint_fock(6), 2));
    }
    case SchemeKind::fig1b: {
        auto [prob, st] = oracle_conditional_state_b(
            fig1b_config(p), herald_at(herald, 0), herald_at(herald, 1),
            cutoff);
        (void)prob;
        // DV side is the two-rail qubit held by the trailing two modes.
        return negativity_numeric(density_from_pure(st, 4));
    }
    }
    throw OutOfRange("unknown scheme");
}

double fidelity_of(SchemeKind scheme, const std::vector<int>& herald,
                   const Params& p) {
    switch (scheme) {
    case SchemeKind::truncated:
        return fidelity_to_genuine(
                   fig1a_config(p),
                   static_cast<int>(get_param_or(p, "term_count", 2.0)),
                   herald_at(herald, 0))
            .direct_value;
    case SchemeKind::fig1b:
        return build_approximate_conditional(fig1b_config(p),
                                             herald_at(herald, 0),
                                             herald_at(herald, 1))
            .approx_fidelity;
    default:
        throw OutOfRange(
            "fidelity sweeps apply to the truncated and fig1b schemes only");
    }
}

} // namespace

Axis make_axis(const std::string& name, double lo, double hi, int steps) {
    if (steps < 1) throw OutOfRange("axis steps must be >= 1");
    Axis a;
    a.name = name;
    a.values.reserve(static_cast<std::size_t>(steps));
    if (steps == 1) {
        a.values.push_back(lo);
        return a;
    }
    for (int i = 0; i < steps; ++i)
        a.values.push_back(lo + (hi - lo) * i / (steps - 1));
    return a;
}

double evaluate_quantity(const SweepRequest& request, double v1, double v2) {
    Params p = request.fixed;
    p[request.axis1.name] = v1;
    p[request.axis2.name] = v2;
    switch (request.quantity) {
    case SweepQuantity::probability:
        return probability_of(request.scheme, request.engine, request.herald,
                              p, request.cutoff);
    case SweepQuantity::negativity:
        return negativity_of(request.scheme, request.engine, request.herald,
                             p, request.cutoff);
    case SweepQuantity::fidelity:
        return fidelity_of(request.scheme, request.herald, p);
    }
    throw OutOfRange("unknown quantity");
}

SweepGrid sweep(const SweepRequest& request) {
    SweepGrid grid;
    grid.axis1 = request.axis1;
    grid.axis2 = request.axis2;
    grid.quantity = request.quantity;
    const std::size_t n1 = request.axis1.values.size();
    const std::size_t n2 = request.axis2.values.size();
    grid.cells.assign(n1 * n2, 0.0);
    grid.flagged.assign(n1 * n2, false);
    for (std::size_t i = 0; i < n1; ++i) {
        for (std::size_t j = 0; j < n2; ++j) {
            const std::size_t idx = i * n2 + j;
            try {
                grid.cells[idx] = evaluate_quantity(
                    request, request.axis1.values[i], request.axis2.values[j]);
            } catch (const DegenerateState&) {
                grid.flagged[idx] = true;
            } catch (const InfiniteCoefficient&) {
                grid.flagged[idx] = true;
            }
        }
    }
    return grid;
}

std::vector<Root> solve_max_entanglement(const MaxEntanglementQuery& query) {
    if (query.free != "beta" && query.free != "t" &&
        query.free != "a0_squared")
        throw OutOfRange("free parameter must be beta, t or a0_squared");
    if (!(query.bracket_hi > query.bracket_lo))
        throw OutOfRange("bracket must satisfy lo < hi");

    const auto g = [&](double x) {
        Params p = query.fixed;
        p[query.free] = x;
        const double a0sq = get_param_or(p, "a0_squared", 0.5);
        const double a1sq = 1.0 - a0sq;
        if (a1sq <= 0.0 || a0sq <= 0.0)
            throw DegenerateState("amplitude condition undefined at a0^2 in {0,1}");
        const double target = std::sqrt(std::sqrt(a0sq / a1sq));
        return abs_B(query.scheme, query.herald, p) - target;
    };

    const auto safe_g = [&](double x) {
        try {
            return g(x);
        } catch (const HybridError&) {
            return std::numeric_limits<double>::quiet_NaN();
        }
    };

    constexpr int kScanPoints = 64;
    std::vector<Root> roots;
    double prev_x = query.bracket_lo;
    double prev_g = safe_g(prev_x);
    for (int i = 1; i <= kScanPoints; ++i) {
        const double x = query.bracket_lo +
                         (query.bracket_hi - query.bracket_lo) * i / kScanPoints;
        const double gx = safe_g(x);
        if (std::isfinite(prev_g) && std::isfinite(gx) &&
            ((prev_g <= 0.0 && gx >= 0.0) || (prev_g >= 0.0 && gx <= 0.0))) {
            double lo = prev_x, hi = x, glo = prev_g;
            for (int it = 0; it < 200; ++it) {
                const double mid = 0.5 * (lo + hi);
                const double gm = safe_g(mid);
                if (!std::isfinite(gm)) break;
                if ((glo <= 0.0) == (gm <= 0.0)) {
                    lo = mid;
                    glo = gm;
                } else {
                    hi = mid;
                }
                if (hi - lo < 1e-14 || std::abs(gm) <= 1e-12) break;
            }
            Root root;
            root.value = 0.5 * (lo + hi);
            root.residual = safe_g(root.value);

            Params p = query.fixed;
            p[query.free] = root.value;
            cplx a0, a1;
            split_amplitudes(p, a0, a1);
            root.negativity = negativity_analytic(
                a0, a1, cplx{abs_B(query.scheme, query.herald, p), 0.0});
            root.probability = probability_of(query.scheme,
                                              EngineKind::analytic,
                                              query.herald, p, -1);
            roots.push_back(root);
        }
        prev_x = x;
        prev_g = gx;
    }
    if (roots.empty())
        throw NoSignChange(
            "no sign change of |B| - sqrt(|a0|/|a1|) found in the bracket");
    return roots;
}

} // namespace hybrid
