// antisym: antiunitary-symmetry analysis of non-Hermitian lattice
// Hamiltonians H(gamma) = A + i*gamma*diag(s).

#include "antisym/eigensolver.hpp"
#include "antisym/lattice.hpp"
#include "antisym/perturbation.hpp"
#include "antisym/sweep.hpp"
#include "antisym/symmetry.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

using json = nlohmann::ordered_json;
using namespace antisym;

namespace {

constexpr int kSchemaVersion = 1;

constexpr int kExitUsage = 2;
constexpr int kExitSolver = 3;
constexpr int kExitWrite = 4;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct WriteError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

double sig12(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.12g", v == 0.0 ? 0.0 : v);
    return std::strtod(buf, nullptr);
}

std::string fmt12(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.12g", v == 0.0 ? 0.0 : v);
    return buf;
}

std::string fmt_complex(const std::complex<double>& z) {
    std::string s = fmt12(z.real());
    s += (z.imag() < 0 ? " - " : " + ") + fmt12(std::abs(z.imag())) + "i";
    return s;
}

bool parse_builtin(const std::string& name, std::optional<HamiltonianFamily>& out) {
    if (name == "ho2") {
        out = build_ho2();
        return true;
    }
    for (const auto& [prefix, builder] :
         {std::pair<std::string, HamiltonianFamily (*)(int)>{"ring", build_ring},
          {"chain", build_chain}}) {
        if (name.rfind(prefix, 0) == 0) {
            const std::string rest = name.substr(prefix.size());
            if (!rest.empty() && rest.find_first_not_of("0123456789") == std::string::npos) {
                out = builder(std::stoi(rest));
                return true;
            }
        }
    }
    return false;
}

HamiltonianFamily resolve_model(const std::string& spec) {
    std::optional<HamiltonianFamily> builtin;
    if (parse_builtin(spec, builtin))
        return *builtin;
    std::ifstream in(spec);
    if (!in)
        throw UsageError("unknown model '" + spec + "' (not a built-in name or readable file)");
    std::stringstream ss;
    ss << in.rdbuf();
    return HamiltonianFamily(load_graph(ss.str()));
}

std::pair<double, double> parse_range(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos)
        throw UsageError("range must be lo:hi, got '" + text + "'");
    try {
        const double lo = std::stod(text.substr(0, colon));
        const double hi = std::stod(text.substr(colon + 1));
        if (!(lo < hi))
            throw UsageError("range requires lo < hi, got '" + text + "'");
        return {lo, hi};
    } catch (const std::invalid_argument&) {
        throw UsageError("range must be numeric lo:hi, got '" + text + "'");
    }
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw WriteError("cannot open '" + path + "' for writing");
    out << content;
    if (!out)
        throw WriteError("write to '" + path + "' failed");
}

json perm_json(const SitePermutation& p) {
    return json(p.perm);
}

json complex_json(const std::complex<double>& z) {
    return json::array({sig12(z.real()), sig12(z.imag())});
}

json model_json(const std::string& name, const HamiltonianFamily& f) {
    json m;
    m["name"] = name;
    m["n"] = f.size();
    auto edges = json::array();
    for (const auto& e : f.graph().edges())
        edges.push_back({e.i, e.j, sig12(e.w)});
    m["edges"] = edges;
    auto sig = json::array();
    for (double s : f.graph().signature())
        sig.push_back(sig12(s));
    m["signature"] = sig;
    return m;
}

json spectrum_json(const Spectrum& s) {
    json j;
    auto vals = json::array();
    for (const auto& v : s.values)
        vals.push_back(complex_json(v));
    j["values"] = vals;
    j["residual_bound"] = sig12(s.residual_bound);
    return j;
}

int cmd_models(bool verbose, bool as_json) {
    struct Entry {
        const char* name;
        const char* desc;
    };
    const Entry entries[] = {
        {"ring4", "4-site periodic lattice, alternating gain/loss (the H_P model)"},
        {"chain4", "4-site open chain, alternating gain/loss (the H_O model)"},
        {"ho2", "relabelled 4-site open chain, isospectral to chain4"},
        {"ring{n}", "even n-cycle with alternating gain/loss"},
        {"chain{n}", "open n-chain with alternating gain/loss"},
    };
    if (as_json) {
        json out;
        out["schema_version"] = kSchemaVersion;
        auto arr = json::array();
        for (const auto& e : entries) {
            json m;
            m["name"] = e.name;
            m["description"] = e.desc;
            arr.push_back(m);
        }
        out["models"] = arr;
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    for (const auto& e : entries) {
        std::cout << e.name << "  -  " << e.desc << "\n";
        if (verbose) {
            std::optional<HamiltonianFamily> f;
            if (parse_builtin(e.name, f)) {
                std::cout << "    edges:";
                for (const auto& ed : f->graph().edges())
                    std::cout << " (" << ed.i << "," << ed.j << ")";
                std::cout << "\n    signature:";
                for (double s : f->graph().signature())
                    std::cout << " " << fmt12(s);
                std::cout << "\n";
            }
        }
    }
    return 0;
}

int cmd_spectrum(const std::string& model, double gamma, bool as_json) {
    const HamiltonianFamily f = resolve_model(model);
    const Spectrum s = eigenvalues(f.hamiltonian_at(gamma));
    if (as_json) {
        json out;
        out["schema_version"] = kSchemaVersion;
        out["model"] = model_json(model, f);
        out["gamma"] = sig12(gamma);
        out["spectrum"] = spectrum_json(s);
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "spectrum of " << model << " at gamma=" << fmt12(gamma) << "\n";
        for (const auto& v : s.values)
            std::cout << "  " << fmt_complex(v) << "\n";
    }
    return 0;
}

int cmd_figure(const std::string& fig, const std::string& out_path) {
    std::vector<std::vector<double>> rows;
    try {
        rows = figure_data(fig);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    write_output(out_path, render_csv(rows));
    return 0;
}

int cmd_sweep(const std::string& model, const std::string& range, int steps,
              const std::string& out_path) {
    const auto [lo, hi] = parse_range(range);
    const HamiltonianFamily f = resolve_model(model);
    write_output(out_path, render_csv(sweep_table(f, lo, hi, steps)));
    return 0;
}

int cmd_analyze(const std::string& model, const std::string& ep_range,
                std::optional<double> gamma, const std::string& compare, double tol,
                bool as_json, bool meta) {
    const HamiltonianFamily f = resolve_model(model);
    const SymmetryReport sym = classify_symmetries(f);
    const PerturbationReport pert = first_order_corrections(f);

    std::vector<ExceptionalPoint> eps;
    bool have_eps = false;
    if (!ep_range.empty()) {
        const auto [lo, hi] = parse_range(ep_range);
        eps = find_exceptional_points(f, lo, hi, 64, tol);
        have_eps = true;
    }

    std::optional<Spectrum> spec;
    if (gamma)
        spec = eigenvalues(f.hamiltonian_at(*gamma));

    std::optional<SitePermutation> relabel;
    bool have_compare = !compare.empty();
    if (have_compare)
        relabel = find_relabeling(f, resolve_model(compare));

    if (as_json) {
        json out;
        out["schema_version"] = kSchemaVersion;
        if (meta)
            out["generated_by"] = "antisym";
        out["model"] = model_json(model, f);

        json s;
        s["commuting_count"] = static_cast<int>(sym.commuting.size());
        s["conjugating_count"] = static_cast<int>(sym.conjugating.size());
        auto perms = json::array();
        for (const auto& p : sym.commuting)
            perms.push_back(perm_json(p));
        s["commuting"] = perms;
        perms = json::array();
        for (const auto& p : sym.conjugating)
            perms.push_back(perm_json(p));
        s["conjugating"] = perms;
        perms = json::array();
        for (const auto& p : sym.parities)
            perms.push_back(perm_json(p));
        s["parities"] = perms;

        json grp;
        grp["order"] = sym.group0.order();
        grp["abelian"] = sym.group0.is_abelian();
        grp["conjugacy_classes"] = static_cast<int>(sym.group0.classes.size());
        grp["element_orders"] = json(sym.group0.element_orders);
        grp["irrep_dims"] = json(sym.group0.irrep_dims);
        grp["name"] = sym.group0.name;
        s["hermitian_limit_group"] = grp;
        out["symmetry"] = s;

        json p;
        auto clusters = json::array();
        for (const auto& c : pert.clusters)
            clusters.push_back({sig12(c.eigenvalue), c.multiplicity});
        p["clusters"] = clusters;
        auto corr = json::array();
        for (const auto& c : pert.corrections)
            corr.push_back(complex_json(c));
        p["first_order_corrections"] = corr;
        p["predicted_extremely_broken"] = pert.extremely_broken;
        out["perturbation"] = p;

        if (have_eps) {
            auto arr = json::array();
            for (const auto& ep : eps) {
                json e;
                e["gamma"] = sig12(ep.gamma);
                e["bracket_width"] = sig12(ep.bracket_width);
                e["min_gap"] = sig12(ep.min_gap);
                arr.push_back(e);
            }
            out["exceptional_points"] = arr;
        }
        if (spec) {
            out["gamma"] = sig12(*gamma);
            out["spectrum"] = spectrum_json(*spec);
        }
        if (have_compare) {
            json c;
            c["model"] = compare;
            if (relabel)
                c["relabeling"] = perm_json(*relabel);
            else
                c["relabeling"] = nullptr;
            out["compare"] = c;
        }
        std::cout << out.dump(2) << "\n";
        return 0;
    }

    auto print_perms = [](const char* label, const std::vector<SitePermutation>& ps) {
        std::cout << label << " (" << ps.size() << "):";
        for (const auto& p : ps) {
            std::cout << " (";
            for (size_t i = 0; i < p.perm.size(); ++i)
                std::cout << (i ? " " : "") << p.perm[i];
            std::cout << ")";
        }
        std::cout << "\n";
    };

    std::cout << "model " << model << ": n=" << f.size() << ", "
              << f.graph().edges().size() << " edges\n\n";
    std::cout << "symmetry census\n";
    print_perms("  commuting", sym.commuting);
    print_perms("  conjugating", sym.conjugating);
    print_perms("  parities", sym.parities);
    std::cout << "  point group of H(0): " << sym.group0.name
              << "  order " << sym.group0.order()
              << ", " << sym.group0.classes.size() << " conjugacy classes, irrep dims {";
    for (size_t i = 0; i < sym.group0.irrep_dims.size(); ++i)
        std::cout << (i ? "," : "") << sym.group0.irrep_dims[i];
    std::cout << "}\n\n";

    std::cout << "first-order perturbation at gamma=0\n";
    for (const auto& c : pert.clusters)
        std::cout << "  E0=" << fmt12(c.eigenvalue) << "  multiplicity " << c.multiplicity
                  << "\n";
    std::cout << "  corrections:";
    for (const auto& c : pert.corrections)
        std::cout << " " << fmt_complex(c);
    std::cout << "\n  predicted extremely broken: "
              << (pert.extremely_broken ? "yes" : "no") << "\n";

    if (have_eps) {
        std::cout << "\nexceptional points in [" << ep_range << "]\n";
        if (eps.empty())
            std::cout << "  none\n";
        for (const auto& ep : eps)
            std::cout << "  gamma=" << fmt12(ep.gamma) << "  (bracket "
                      << fmt12(ep.bracket_width) << ", min gap " << fmt12(ep.min_gap)
                      << ")\n";
    }
    if (spec) {
        std::cout << "\nspectrum at gamma=" << fmt12(*gamma) << "\n";
        for (const auto& v : spec->values)
            std::cout << "  " << fmt_complex(v) << "\n";
    }
    if (have_compare) {
        std::cout << "\ncompare with " << compare << ": ";
        if (relabel) {
            std::cout << "isospectral relabeling (";
            for (size_t i = 0; i < relabel->perm.size(); ++i)
                std::cout << (i ? " " : "") << relabel->perm[i];
            std::cout << ")\n";
        } else {
            std::cout << "no site relabeling found\n";
        }
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"antiunitary-symmetry analysis of non-Hermitian lattice Hamiltonians"};
    app.require_subcommand(1);
    app.fallthrough();

    bool as_json = false;
    app.add_flag("--json", as_json, "machine-readable JSON output");

    auto* models = app.add_subcommand("models", "list built-in lattice models");
    bool verbose = false;
    models->add_flag("--verbose", verbose, "include edge lists");

    auto* analyze = app.add_subcommand(
        "analyze", "symmetry census, point group, perturbation prediction");
    std::string model, ep_range, compare;
    double tol = kDefaultRealityTol;
    double gamma_val = 0.0;
    bool have_gamma = false;
    bool meta = false;
    analyze->add_option("model", model, "built-in name or lattice file path")->required();
    analyze->add_option("--ep-range", ep_range, "scan for exceptional points in lo:hi");
    analyze->add_option("--gamma", gamma_val, "also print the spectrum at this gamma")
        ->each([&](const std::string&) { have_gamma = true; });
    analyze->add_option("--compare", compare, "search for a relabeling onto this model");
    analyze->add_option("--tol", tol, "reality tolerance (default 1e-9)");
    analyze->add_flag("--meta", meta, "include provenance metadata in JSON output");

    auto* spectrum = app.add_subcommand("spectrum", "eigenvalues at one gamma");
    std::string spec_model;
    double spec_gamma = 0.0;
    spectrum->add_option("model", spec_model, "built-in name or lattice file path")
        ->required();
    spectrum->add_option("--gamma", spec_gamma, "gain/loss parameter")->required();

    auto* figure = app.add_subcommand("figure", "emit figure-reproduction CSV data");
    std::string fig_id, fig_out = "-";
    figure->add_option("fig", fig_id, "fig2 (ring4) or fig4 (chain4)")->required();
    figure->add_option("-o,--output", fig_out, "output path, '-' for stdout");

    auto* sweep_cmd = app.add_subcommand("sweep", "spectra over a gamma grid as CSV");
    std::string sweep_model, sweep_range = "0:2", sweep_out = "-";
    int sweep_steps = 201;
    sweep_cmd->add_option("model", sweep_model, "built-in name or lattice file path")
        ->required();
    sweep_cmd->add_option("--range", sweep_range, "gamma range lo:hi (default 0:2)");
    sweep_cmd->add_option("--steps", sweep_steps, "grid points (default 201)");
    sweep_cmd->add_option("-o,--output", sweep_out, "output path, '-' for stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (models->parsed())
            return cmd_models(verbose, as_json);
        if (analyze->parsed())
            return cmd_analyze(model, ep_range,
                               have_gamma ? std::optional<double>(gamma_val) : std::nullopt,
                               compare, tol, as_json, meta);
        if (spectrum->parsed())
            return cmd_spectrum(spec_model, spec_gamma, as_json);
        if (figure->parsed())
            return cmd_figure(fig_id, fig_out);
        if (sweep_cmd->parsed())
            return cmd_sweep(sweep_model, sweep_range, sweep_steps, sweep_out);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const LatticeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const SolverError& e) {
        std::cerr << "solver error: " << e.what() << "\n";
        return kExitSolver;
    } catch (const WriteError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitWrite;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
