/*
 * hybridctl — command-line front end for the hybrid-entanglement engines.
 *
 * Subcommands: state, sweep, solve, verify.  Exit codes: 0 ok,
 * 1 verification failures, 2 argument errors, 3 degenerate configuration,
 * 4 solver bracket failure.
 */
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hybrid/entanglement.hpp"
#include "hybrid/scheme_fig1a.hpp"
#include "hybrid/scheme_fig1b.hpp"
#include "hybrid/scheme_psi.hpp"
#include "hybrid/scheme_truncated.hpp"
#include "hybrid/sweep.hpp"
#include "hybrid/verify.hpp"

using namespace hybrid;
using nlohmann::json;

namespace {

struct GlobalOpts {
    std::string engine = "analytic";
    int cutoff = -1;
    std::string format = "csv";
    std::string out;
};

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

cplx parse_amplitude(const std::string& text, const std::string& flag) {
    std::istringstream in(text);
    double re = 0.0, im = 0.0;
    char comma = 0;
    if (!(in >> re))
        throw CLI::ValidationError(flag, "expected a real number or re,im");
    if (in >> comma) {
        if (comma != ',' || !(in >> im))
            throw CLI::ValidationError(flag, "expected a real number or re,im");
    }
    return cplx{re, im};
}

SchemeKind parse_scheme(const std::string& s) {
    if (s == "fig1a") return SchemeKind::fig1a;
    if (s == "fig1b") return SchemeKind::fig1b;
    if (s == "truncated") return SchemeKind::truncated;
    if (s == "psi") return SchemeKind::psi;
    throw CLI::ValidationError("--scheme",
                               "must be fig1a, fig1b, truncated or psi");
}

Axis parse_axis(const std::string& spec) {
    std::string name;
    double lo = 0.0, hi = 0.0;
    int steps = 0;
    std::istringstream in(spec);
    std::string field;
    if (!std::getline(in, field, ':')) goto bad;
    name = field;
    if (!std::getline(in, field, ':')) goto bad;
    try { lo = std::stod(field); } catch (...) { goto bad; }
    if (!std::getline(in, field, ':')) goto bad;
    try { hi = std::stod(field); } catch (...) { goto bad; }
    if (!std::getline(in, field, ':')) goto bad;
    try { steps = std::stoi(field); } catch (...) { goto bad; }
    return make_axis(name, lo, hi, steps);
bad:
    throw CLI::ValidationError("--axis", "expected name:lo:hi:steps");
}

std::ostream& open_sink(const GlobalOpts& g, std::ofstream& file) {
    if (g.out.empty()) return std::cout;
    file.open(g.out, std::ios::binary); // binary: LF endings everywhere
    if (!file)
        throw CLI::ValidationError("--out", "cannot open " + g.out);
    return file;
}

// Fixed scheme parameters supplied on the command line (only those present).
struct FixedParams {
    std::optional<double> beta, t, beta1, t1, A, a0sq;
    int term_count = 2;
    int input_parity = 0;

    void attach(CLI::App* cmd) {
        cmd->add_option("--beta", beta, "coherent amplitude of the CV input");
        cmd->add_option("--t", t, "beam-splitter transmission");
        cmd->add_option("--beta1", beta1,
                        "auxiliary coherent amplitude (fig1b)");
        cmd->add_option("--t1", t1, "auxiliary transmission (fig1b)");
        cmd->add_option("--A", A, "single-photon admixture (psi scheme)");
        cmd->add_option("--a0-squared", a0sq, "|a0|^2 of the DV qubit");
        cmd->add_option("--term-count", term_count,
                        "number of retained terms (truncated scheme)")
            ->check(CLI::Range(2, 3));
        cmd->add_option("--input-parity", input_parity,
                        "CV input parity: 0 even, 1 odd")
            ->check(CLI::Range(0, 1));
    }

    std::map<std::string, double> to_map() const {
        std::map<std::string, double> m;
        if (beta) m["beta"] = *beta;
        if (t) m["t"] = *t;
        if (beta1) m["beta1"] = *beta1;
        if (t1) m["t1"] = *t1;
        if (A) m["A"] = *A;
        if (a0sq) m["a0_squared"] = *a0sq;
        m["term_count"] = term_count;
        m["input_parity"] = input_parity;
        return m;
    }

    void require(const std::optional<double>& v, const char* flag) const {
        if (!v)
            throw CLI::RequiredError(flag);
    }
};

int herald_at(const std::vector<int>& herald, std::size_t i) {
    if (herald.size() <= i)
        throw CLI::ValidationError("--herald", "missing herald outcome");
    return herald[i];
}

// ---------------------------------------------------------------------------
// state

void print_joint_amplitudes(std::ostream& out, const FockVector& joint,
                            double floor = 1e-8) {
    const auto& layout = joint.layout();
    const auto& amps = joint.amplitudes();
    std::vector<int> occ(layout.modes(), 0);
    for (std::size_t i = 0; i < amps.size(); ++i) {
        if (std::abs(amps[i]) < floor) continue;
        std::size_t rest = i;
        for (int m = static_cast<int>(layout.modes()) - 1; m >= 0; --m) {
            const std::size_t d =
                static_cast<std::size_t>(layout.dim(static_cast<std::size_t>(m)));
            occ[static_cast<std::size_t>(m)] = static_cast<int>(rest % d);
            rest /= d;
        }
        out << "  |";
        for (std::size_t m = 0; m < occ.size(); ++m)
            out << occ[m] << (m + 1 < occ.size() ? "," : "");
        out << ">  " << fmt17(amps[i].real());
        if (std::abs(amps[i].imag()) > 0.0)
            out << (amps[i].imag() < 0 ? " - " : " + ")
                << fmt17(std::abs(amps[i].imag())) << "i";
        out << "\n";
    }
}

int cmd_state(const GlobalOpts& g, const FixedParams& fp,
              const std::string& a0_text, const std::string& a1_text,
              const std::vector<int>& herald, SchemeKind scheme) {
    fp.require(fp.beta, "--beta");
    fp.require(fp.t, "--t");
    cplx a0 = parse_amplitude(a0_text, "--a0");
    cplx a1;
    if (a1_text.empty()) {
        const double rest = 1.0 - std::norm(a0);
        if (rest < -1e-12)
            throw CLI::ValidationError("--a0", "|a0| must be <= 1");
        a1 = cplx{std::sqrt(std::max(0.0, rest)), 0.0};
    } else {
        a1 = parse_amplitude(a1_text, "--a1");
        if (std::abs(std::norm(a0) + std::norm(a1) - 1.0) > 1e-9)
            throw CLI::ValidationError("--a1",
                                       "|a0|^2 + |a1|^2 must equal 1");
    }

    std::ofstream file;
    std::ostream& out = open_sink(g, file);

    double probability = 0.0;
    cplx B{0.0, 0.0};
    FockVector joint(ModeLayout{{1}});
    std::vector<std::pair<std::string, double>> weights;
    const int cv_cutoff = g.cutoff > 0 ? g.cutoff
                                       : cutoff_for_amplitude(*fp.beta);

    switch (scheme) {
    case SchemeKind::fig1a: {
        SchemeConfig c;
        c.a0 = a0;
        c.a1 = a1;
        c.beta = *fp.beta;
        c.t = *fp.t;
        c.input_parity =
            fp.input_parity ? InputParity::odd : InputParity::even;
        const int n = herald_at(herald, 0);
        if (g.engine == "oracle") {
            auto [p, st] = oracle_conditional_state(c, n, g.cutoff);
            probability = p;
            joint = st;
        } else {
            HybridState st = build_conditional_state(c, n);
            probability = st.probability;
            for (const HybridBranch& b : st.branches)
                weights.emplace_back(b.dv == DvLabel::vacuum ? "vacuum"
                                                             : "photon",
                                     std::abs(b.weight));
            joint = st.to_joint_fock(cv_cutoff);
        }
        B = coefficient_B(c, n);
        break;
    }
    case SchemeKind::fig1b: {
        fp.require(fp.beta1, "--beta1");
        fp.require(fp.t1, "--t1");
        SchemeBConfig c;
        c.a0 = a0;
        c.a1 = a1;
        c.beta = *fp.beta;
        c.t = *fp.t;
        c.beta1 = *fp.beta1;
        c.t1 = *fp.t1;
        const int n = herald_at(herald, 0), k = herald_at(herald, 1);
        if (g.engine == "oracle") {
            auto [p, st] = oracle_conditional_state_b(c, n, k, g.cutoff);
            probability = p;
            joint = st;
        } else {
            TwoModeHybridState st =
                build_exact_conditional(c, n, k, cv_cutoff);
            probability = st.probability;
            for (const TwoModeBranch& b : st.branches)
                weights.emplace_back(b.dv == DvRail::mode01 ? "rail01"
                                                            : "rail10",
                                     std::abs(b.weight));
            joint = st.to_joint_fock();
        }
        B = coefficient_B_fig1b(c, n, k);
        break;
    }
    case SchemeKind::truncated: {
        SchemeConfig c;
        c.a0 = a0;
        c.a1 = a1;
        c.beta = *fp.beta;
        c.t = *fp.t;
        c.input_parity = InputParity::even;
        const int h = herald_at(herald, 0);
        TruncatedConditional st =
            build_truncated_conditional(c, fp.term_count, h);
        probability = st.probability;
        weights.emplace_back("vacuum", std::abs(st.weight_vacuum));
        weights.emplace_back("photon", std::abs(st.weight_photon));
        joint = st.to_joint_fock(std::max(cv_cutoff, 6));
        B = cplx{st.entangling_B, 0.0};
        break;
    }
    case SchemeKind::psi: {
        PsiSchemeConfig c;
        c.a0 = a0;
        c.a1 = a1;
        c.beta = *fp.beta;
        c.t = *fp.t;
        c.A = cplx{fp.A.value_or(0.0), 0.0};
        const int n = herald_at(herald, 0);
        if (g.engine == "oracle") {
            auto [p, st] = oracle_psi_conditional(c, n, g.cutoff);
            probability = p;
            joint = st;
        } else {
            PsiConditional st = build_psi_conditional(c, n);
            probability = st.probability;
            weights.emplace_back("vacuum", std::abs(st.weight_vacuum));
            weights.emplace_back("photon", std::abs(st.weight_photon));
            joint = st.to_joint_fock(cv_cutoff);
        }
        B = psi_coefficients(c, n).B;
        break;
    }
    }

    const double negativity = negativity_analytic(a0, a1, B);

    out << "probability " << fmt17(probability) << "\n";
    out << "negativity " << fmt17(negativity) << "\n";
    out << "entangling_B " << fmt17(std::abs(B)) << "\n";
    for (const auto& [label, w] : weights)
        out << "weight_" << label << " " << fmt17(w) << "\n";
    out << "amplitudes (|cv...,dv...>, floor 1e-8):\n";
    print_joint_amplitudes(out, joint);
    return 0;
}

// ---------------------------------------------------------------------------
// sweep

int cmd_sweep(const GlobalOpts& g, const FixedParams& fp,
              const std::vector<int>& herald, SchemeKind scheme,
              const std::string& quantity_name,
              const std::vector<std::string>& axis_specs) {
    if (axis_specs.size() != 2)
        throw CLI::ValidationError("--axis",
                                   "exactly two axis specs are required");
    SweepRequest req;
    req.scheme = scheme;
    req.engine = g.engine == "oracle" ? EngineKind::oracle
                                      : EngineKind::analytic;
    if (quantity_name == "probability")
        req.quantity = SweepQuantity::probability;
    else if (quantity_name == "negativity")
        req.quantity = SweepQuantity::negativity;
    else if (quantity_name == "fidelity")
        req.quantity = SweepQuantity::fidelity;
    else
        throw CLI::ValidationError(
            "--quantity", "must be probability, negativity or fidelity");
    req.herald = herald;
    req.fixed = fp.to_map();
    req.axis1 = parse_axis(axis_specs[0]);
    req.axis2 = parse_axis(axis_specs[1]);
    req.cutoff = g.cutoff;

    SweepGrid grid = sweep(req);

    std::ofstream file;
    std::ostream& out = open_sink(g, file);

    if (g.format == "json") {
        json rows = json::array();
        for (std::size_t i = 0; i < grid.axis1.values.size(); ++i)
            for (std::size_t j = 0; j < grid.axis2.values.size(); ++j) {
                json row;
                row["axis1"] = grid.axis1.values[i];
                row["axis2"] = grid.axis2.values[j];
                row["value"] = grid.at(i, j);
                row["flagged"] =
                    static_cast<bool>(
                        grid.flagged[i * grid.axis2.values.size() + j]);
                rows.push_back(std::move(row));
            }
        json doc;
        doc["meta"] = {{"command", "sweep"},
                       {"engine", g.engine},
                       {"quantity", quantity_name},
                       {"axis1", grid.axis1.name},
                       {"axis2", grid.axis2.name},
                       {"cutoff", g.cutoff},
                       {"herald", herald},
                       {"fixed", fp.to_map()}};
        doc["cells"] = std::move(rows);
        out << doc.dump(2) << "\n";
    } else if (g.format == "csv") {
        out << "axis1,axis2,value\n";
        for (std::size_t i = 0; i < grid.axis1.values.size(); ++i)
            for (std::size_t j = 0; j < grid.axis2.values.size(); ++j)
                out << fmt17(grid.axis1.values[i]) << ','
                    << fmt17(grid.axis2.values[j]) << ','
                    << fmt17(grid.at(i, j)) << '\n';
    } else {
        throw CLI::ValidationError("--format", "must be csv or json");
    }
    return 0;
}

// ---------------------------------------------------------------------------
// solve

int cmd_solve(const GlobalOpts& g, const FixedParams& fp,
              const std::vector<int>& herald, SchemeKind scheme,
              const std::string& free, const std::string& bracket) {
    MaxEntanglementQuery q;
    q.scheme = scheme;
    q.herald = herald;
    q.fixed = fp.to_map();
    q.free = free == "a0sq" ? "a0_squared" : free;
    q.fixed.erase(q.free);
    const auto colon = bracket.find(':');
    if (colon == std::string::npos)
        throw CLI::ValidationError("--bracket", "expected lo:hi");
    try {
        q.bracket_lo = std::stod(bracket.substr(0, colon));
        q.bracket_hi = std::stod(bracket.substr(colon + 1));
    } catch (...) {
        throw CLI::ValidationError("--bracket", "expected lo:hi");
    }

    std::vector<Root> roots = solve_max_entanglement(q);

    std::ofstream file;
    std::ostream& out = open_sink(g, file);
    for (const Root& r : roots)
        out << "root " << q.free << "=" << fmt17(r.value)
            << " residual=" << fmt17(r.residual)
            << " negativity=" << fmt17(r.negativity)
            << " probability=" << fmt17(r.probability) << "\n";
    return 0;
}

// ---------------------------------------------------------------------------
// verify

int cmd_verify(const GlobalOpts& g, const std::string& profile,
               const std::string& only) {
    if (profile != "strict" && profile != "default")
        throw CLI::ValidationError("--profile", "must be strict or default");
    VerificationReport report =
        run_all(profile == "strict" ? ToleranceProfile::strict
                                    : ToleranceProfile::standard,
                only);
    std::ofstream file;
    std::ostream& out = open_sink(g, file);
    out << report_to_text(report);
    return report.has_failures() ? 1 : 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"hybridctl — heralded hybrid-entanglement toolkit"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may appear after the subcommand

    GlobalOpts g;
    app.add_option("--engine", g.engine, "analytic (default) or oracle")
        ->check(CLI::IsMember({"analytic", "oracle"}));
    app.add_option("--cutoff", g.cutoff, "CV Fock cutoff override");
    app.add_option("--format", g.format, "csv (default) or json");
    app.add_option("--out", g.out, "output file (default stdout)");

    std::string scheme_name = "fig1a";
    std::vector<int> herald;
    std::string a0_text = "0.7071067811865475244";
    std::string a1_text;
    FixedParams fp_state, fp_sweep, fp_solve;

    CLI::App* state = app.add_subcommand("state", "heralded conditional state");
    state->add_option("--scheme", scheme_name, "fig1a|fig1b|truncated|psi");
    state->add_option("--herald", herald,
                      "herald outcome(s): one index, two for fig1b");
    state->add_option("--a0", a0_text, "DV amplitude a0 (real or re,im)");
    state->add_option("--a1", a1_text, "DV amplitude a1 (default derived)");
    fp_state.attach(state);

    std::string quantity_name = "probability";
    std::vector<std::string> axis_specs;
    CLI::App* sw = app.add_subcommand("sweep", "grid sweep to CSV/JSON");
    sw->add_option("--scheme", scheme_name, "fig1a|fig1b|truncated|psi");
    sw->add_option("--quantity", quantity_name,
                   "probability|negativity|fidelity");
    sw->add_option("--herald", herald, "herald outcome(s)");
    sw->add_option("--axis", axis_specs, "axis spec name:lo:hi:steps (twice)")
        ->expected(-1);
    fp_sweep.attach(sw);

    std::string free_name, bracket;
    CLI::App* solve =
        app.add_subcommand("solve", "solve the maximal-entanglement condition");
    solve->add_option("--scheme", scheme_name, "fig1a|fig1b|truncated|psi");
    solve->add_option("--herald", herald, "herald outcome(s)");
    solve->add_option("--free", free_name, "beta|t|a0_squared")->required();
    solve->add_option("--bracket", bracket, "search bracket lo:hi")->required();
    fp_solve.attach(solve);

    std::string profile = "default", only;
    CLI::App* verify = app.add_subcommand("verify", "run the check suite");
    verify->add_option("--profile", profile, "default|strict");
    verify->add_option("--only", only, "check-name prefix filter");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return 2;
    }

    try {
        if (state->parsed())
            return cmd_state(g, fp_state, a0_text, a1_text, herald,
                             parse_scheme(scheme_name));
        if (sw->parsed())
            return cmd_sweep(g, fp_sweep, herald, parse_scheme(scheme_name),
                             quantity_name, axis_specs);
        if (solve->parsed())
            return cmd_solve(g, fp_solve, herald, parse_scheme(scheme_name),
                             free_name, bracket);
        if (verify->parsed()) return cmd_verify(g, profile, only);
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const DegenerateState& e) {
        std::cerr << "degenerate configuration: " << e.what() << "\n";
        return 3;
    } catch (const InfiniteCoefficient& e) {
        std::cerr << "degenerate configuration: " << e.what() << "\n";
        return 3;
    } catch (const NoSignChange& e) {
        std::cerr << "solver: " << e.what() << "\n";
        return 4;
    } catch (const HybridError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
