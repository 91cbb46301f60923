/*
 * sweep.hpp — parameter inversion against the maximal-entanglement
 * condition and deterministic grid sweeps over (beta, t)-style axes.
 */
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hybrid/fock.hpp"

namespace hybrid {

enum class SchemeKind { fig1a, fig1b, truncated, psi };
enum class EngineKind { analytic, oracle };
enum class SweepQuantity { probability, negativity, fidelity };

struct MaxEntanglementQuery {
    SchemeKind scheme = SchemeKind::fig1a;
    std::vector<int> herald;               // one index (fig1a/psi), two (fig1b)
    std::map<std::string, double> fixed;   // named fixed parameters
    std::string free;                      // beta | t | a0_squared
    double bracket_lo = 0.0;
    double bracket_hi = 0.0;
};

struct Root {
    double value = 0.0;
    double residual = 0.0;
    // Certificate: 1 within 1e-8 for balanced amplitudes; for unbalanced
    // amplitudes the solved condition caps it at 2 sqrt(|a0||a1|) /
    // (|a0| + |a1|) (see the verification suite's table notes).
    double negativity = 0.0;
    double probability = 0.0; // success probability at the solved parameters
};

// Scans the bracket at 64 uniform points for sign changes of
// g(x) = |B(x)| - sqrt(|a0|/|a1|), then bisects each; returns all roots.
// Throws NoSignChange when the scan finds none.
std::vector<Root> solve_max_entanglement(const MaxEntanglementQuery& query);

struct Axis {
    std::string name;
    std::vector<double> values;
};

struct SweepGrid {
    Axis axis1;
    Axis axis2;
    SweepQuantity quantity = SweepQuantity::probability;
    // Row-major over axis1 then axis2; degenerate cells are flagged.
    std::vector<double> cells;
    std::vector<bool> flagged;

    double at(std::size_t i, std::size_t j) const {
        return cells[i * axis2.values.size() + j];
    }
};

struct SweepRequest {
    SchemeKind scheme = SchemeKind::fig1a;
    EngineKind engine = EngineKind::analytic;
    SweepQuantity quantity = SweepQuantity::probability;
    std::vector<int> herald;
    std::map<std::string, double> fixed; // parameters not on an axis
    Axis axis1;
    Axis axis2;
    int cutoff = -1; // CV cutoff override for the oracle engine
};

SweepGrid sweep(const SweepRequest& request);

// Uniform axis helper: `steps` points from lo to hi inclusive.
Axis make_axis(const std::string& name, double lo, double hi, int steps);

// Evaluates one cell (exposed for tests and the CLI `state` command).
double evaluate_quantity(const SweepRequest& request, double v1, double v2);

} // namespace hybrid
