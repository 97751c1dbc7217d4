// Command-line front end: classification reports, orbit and pseudo-orbit
// experiments, spectral estimation, and parameter-grid sweeps, with CSV or
// JSON output suitable for golden-file comparison.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cphardy/dynamics.hpp"
#include "cphardy/errors.hpp"
#include "cphardy/kernel_span.hpp"
#include "cphardy/laguerre_model.hpp"
#include "cphardy/report_io.hpp"

namespace {

using namespace cphardy;

struct SymbolFlags {
    double a = 1.0;
    double b_re = 0.0;
    double b_im = 0.0;

    AffineSymbol symbol() const { return AffineSymbol(a, cplx(b_re, b_im)); }
};

void add_symbol_flags(CLI::App* cmd, SymbolFlags& f) {
    cmd->add_option("--a", f.a, "dilation factor a > 0")->required();
    cmd->add_option("--b-re", f.b_re, "Re(b) >= 0");
    cmd->add_option("--b-im", f.b_im, "Im(b)");
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::fwrite(text.data(), 1, text.size(), stdout);
        return;
    }
    std::ofstream os(out_path, std::ios::binary);
    if (!os) throw std::invalid_argument("cannot open output file: " + out_path);
    os.write(text.data(), static_cast<std::streamsize>(text.size()));
}

std::string spectrum_comment(const SpectrumDescriptor& s) {
    std::string line = "# spectrum variant=" + to_string(s.variant);
    if (s.radius) line += " radius=" + fmt17(*s.radius);
    if (s.b) line += " b_re=" + fmt17(s.b->real()) + " b_im=" + fmt17(s.b->imag());
    return line + "\n";
}

json spectrum_descriptor_json(const SpectrumDescriptor& s) {
    json j{{"variant", to_string(s.variant)}};
    if (s.radius) j["radius"] = *s.radius;
    if (s.b) {
        j["b_re"] = s.b->real();
        j["b_im"] = s.b->imag();
    }
    return j;
}

int run_classify(const SymbolFlags& flags, const std::string& out_path) {
    const ReportDocument doc = make_report_document(flags.symbol());
    emit(to_json(doc).dump(2) + "\n", out_path);
    return 0;
}

int run_orbit(const SymbolFlags& flags, double w_re, double w_im, long n,
              const std::string& format, const std::string& out_path) {
    const AffineSymbol phi = flags.symbol();
    const cplx w(w_re, w_im);
    const std::vector<double> gram = orbit_norms(phi, KernelElement::kernel(w), n);

    if (format == "json") {
        json rows = json::array();
        for (long k = 0; k <= n; ++k) {
            const double closed = orbit_norm_kernel_closed(phi, w, k);
            rows.push_back(json{{"n", k},
                                {"norm_gram", gram[static_cast<std::size_t>(k)]},
                                {"norm_closed", closed},
                                {"abs_diff", std::abs(gram[static_cast<std::size_t>(k)] - closed)}});
        }
        json doc{{"schema_version", report_schema_version},
                 {"command", "orbit"},
                 {"symbol", json{{"a", flags.a}, {"b_re", flags.b_re}, {"b_im", flags.b_im}}},
                 {"w", json{{"re", w_re}, {"im", w_im}}},
                 {"rows", rows}};
        emit(doc.dump(2) + "\n", out_path);
        return 0;
    }

    std::string text = "n,norm_gram,norm_closed,abs_diff\n";
    for (long k = 0; k <= n; ++k) {
        const double closed = orbit_norm_kernel_closed(phi, w, k);
        const double g = gram[static_cast<std::size_t>(k)];
        text += std::to_string(k) + "," + fmt17(g) + "," + fmt17(closed) + "," +
                fmt17(std::abs(g - closed)) + "\n";
    }
    emit(text, out_path);
    return 0;
}

int run_pseudo(const SymbolFlags& flags, double delta, long n, std::uint64_t seed,
               bool witness, std::optional<double> epsilon, std::optional<double> w_re,
               double w_im, const std::string& format, const std::string& out_path) {
    const AffineSymbol phi = flags.symbol();

    if (witness) {
        const auto fp = fixed_point(phi);
        if (!fp || !fp->interior)
            throw precondition_error("Prop 4.1 precondition",
                                     "the symbol has no interior fixed point");
        const cplx eta = fp->point;
        const KernelElement f =
            w_re ? KernelElement::kernel(cplx(*w_re, w_im)) : KernelElement::kernel(eta);
        const PseudoOrbit orbit = non_shadowing_witness(phi, f, delta, n);
        const double slope = delta * std::abs(f.evaluate(eta)) / norm(apply(phi, f));

        if (format == "json") {
            json rows = json::array();
            for (long k = 0; k <= n; ++k) {
                const double dev = k == 0 ? 0.0
                                          : norm(apply(phi, orbit.elements[static_cast<std::size_t>(
                                                                k - 1)]) -
                                                 orbit.elements[static_cast<std::size_t>(k)]);
                const cplx val = orbit.elements[static_cast<std::size_t>(k)].is_zero()
                                     ? cplx(0.0, 0.0)
                                     : orbit.elements[static_cast<std::size_t>(k)].evaluate(eta);
                rows.push_back(json{{"n", k},
                                    {"step_deviation", dev},
                                    {"value_at_eta_re", val.real()},
                                    {"value_at_eta_im", val.imag()}});
            }
            json doc{{"schema_version", report_schema_version},
                     {"command", "pseudo-witness"},
                     {"symbol", json{{"a", flags.a}, {"b_re", flags.b_re}, {"b_im", flags.b_im}}},
                     {"eta", json{{"re", eta.real()}, {"im", eta.imag()}}},
                     {"slope", slope},
                     {"rows", rows}};
            emit(doc.dump(2) + "\n", out_path);
            return 0;
        }

        std::string text = "# witness eta_re=" + fmt17(eta.real()) +
                           " eta_im=" + fmt17(eta.imag()) + " slope=" + fmt17(slope) + "\n";
        text += "n,step_deviation,value_at_eta_re,value_at_eta_im\n";
        for (long k = 0; k <= n; ++k) {
            const double dev =
                k == 0 ? 0.0
                       : norm(apply(phi, orbit.elements[static_cast<std::size_t>(k - 1)]) -
                              orbit.elements[static_cast<std::size_t>(k)]);
            const cplx val = orbit.elements[static_cast<std::size_t>(k)].is_zero()
                                 ? cplx(0.0, 0.0)
                                 : orbit.elements[static_cast<std::size_t>(k)].evaluate(eta);
            text += std::to_string(k) + "," + fmt17(dev) + "," + fmt17(val.real()) + "," +
                    fmt17(val.imag()) + "\n";
        }
        emit(text, out_path);
        return 0;
    }

    const KernelElement f0 = KernelElement::kernel(cplx(w_re.value_or(1.0), w_im));
    const PseudoOrbit orbit = random_pseudo_orbit(phi, f0, delta, n, seed);

    const bool shadow = phi.a > 1.0;
    double bound = 0.0;
    std::vector<double> errors;
    if (shadow) {
        const double eps = epsilon.value_or(2.0 * delta / (1.0 - operator_norm(phi)));
        const ShadowResult res = shadow_construct(phi, orbit, eps);
        bound = res.bound;
        errors.resize(orbit.elements.size());
        KernelElement current = res.seed;
        for (std::size_t k = 0; k < orbit.elements.size(); ++k) {
            if (k > 0) current = apply(phi, current);
            errors[k] = norm(current - orbit.elements[k]);
        }
    }

    if (format == "json") {
        json rows = json::array();
        for (long k = 0; k <= n; ++k) {
            const double dev =
                k == 0 ? 0.0
                       : norm(apply(phi, orbit.elements[static_cast<std::size_t>(k - 1)]) -
                              orbit.elements[static_cast<std::size_t>(k)]);
            json row{{"n", k}, {"step_deviation", dev}};
            if (shadow) row["shadow_error"] = errors[static_cast<std::size_t>(k)];
            rows.push_back(row);
        }
        json doc{{"schema_version", report_schema_version},
                 {"command", "pseudo"},
                 {"symbol", json{{"a", flags.a}, {"b_re", flags.b_re}, {"b_im", flags.b_im}}},
                 {"delta", delta},
                 {"seed", seed}};
        if (shadow) {
            doc["bound"] = bound;
            doc["max_error"] = *std::max_element(errors.begin(), errors.end());
        }
        doc["rows"] = rows;
        emit(doc.dump(2) + "\n", out_path);
        return 0;
    }

    std::string text = "# pseudo delta=" + fmt17(delta) + " seed=" + std::to_string(seed) + "\n";
    if (shadow)
        text += "# shadow bound=" + fmt17(bound) +
                " max_error=" + fmt17(*std::max_element(errors.begin(), errors.end())) + "\n";
    text += shadow ? "n,step_deviation,shadow_error\n" : "n,step_deviation\n";
    for (long k = 0; k <= n; ++k) {
        const double dev = k == 0 ? 0.0
                                  : norm(apply(phi, orbit.elements[static_cast<std::size_t>(
                                                        k - 1)]) -
                                         orbit.elements[static_cast<std::size_t>(k)]);
        text += std::to_string(k) + "," + fmt17(dev);
        if (shadow) text += "," + fmt17(errors[static_cast<std::size_t>(k)]);
        text += "\n";
    }
    emit(text, out_path);
    return 0;
}

int run_spectrum(const SymbolFlags& flags, int basis_size, double scale,
                 const std::string& format, const std::string& out_path) {
    if (basis_size > 256) throw std::invalid_argument("basis size is capped at 256");
    const AffineSymbol phi = flags.symbol();
    const SpectrumDescriptor desc = report(phi).spectrum;
    const TruncatedOperator op = build_matrix(phi, LaguerreBasis(scale, basis_size));
    const std::vector<cplx> eig = spectrum_estimate(op);

    if (format == "json") {
        json rows = json::array();
        for (const cplx& l : eig)
            rows.push_back(json{{"re", l.real()}, {"im", l.imag()}, {"modulus", std::abs(l)}});
        json doc{{"schema_version", report_schema_version},
                 {"command", "spectrum"},
                 {"symbol", json{{"a", flags.a}, {"b_re", flags.b_re}, {"b_im", flags.b_im}}},
                 {"descriptor", spectrum_descriptor_json(desc)},
                 {"basis_size", basis_size},
                 {"laguerre_scale", scale},
                 {"eigenvalues", rows}};
        emit(doc.dump(2) + "\n", out_path);
        return 0;
    }

    std::string text = spectrum_comment(desc);
    text += "re,im,modulus\n";
    for (const cplx& l : eig)
        text += fmt17(l.real()) + "," + fmt17(l.imag()) + "," + fmt17(std::abs(l)) + "\n";
    emit(text, out_path);
    return 0;
}

struct GridAxis {
    double lo = 1.0;
    double hi = 1.0;
    long steps = 1;

    double value(long i) const {
        if (steps <= 1) return lo;
        return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(steps - 1);
    }
};

int run_grid(const GridAxis& ax_a, const GridAxis& ax_re, const GridAxis& ax_im,
             const std::string& format, const std::string& out_path) {
    if (ax_a.steps < 1 || ax_re.steps < 1 || ax_im.steps < 1)
        throw std::invalid_argument("grid steps must be at least 1");
    const long total = ax_a.steps * ax_re.steps * ax_im.steps;
    if (total > 1000000) throw std::invalid_argument("grid exceeds 10^6 points");

    std::vector<std::string> rows(static_cast<std::size_t>(total));
    const bool json_mode = format == "json";

#pragma omp parallel for schedule(static)
    for (long idx = 0; idx < total; ++idx) {
        const long ia = idx / (ax_re.steps * ax_im.steps);
        const long ire = (idx / ax_im.steps) % ax_re.steps;
        const long iim = idx % ax_im.steps;
        const AffineSymbol phi(ax_a.value(ia), cplx(ax_re.value(ire), ax_im.value(iim)));
        const DynamicsReport r = report(phi);
        if (json_mode) {
            rows[static_cast<std::size_t>(idx)] = to_json(make_report_document(phi)).dump();
        } else {
            std::string& row = rows[static_cast<std::size_t>(idx)];
            row = fmt17(phi.a) + "," + fmt17(phi.b.real()) + "," + fmt17(phi.b.imag()) + "," +
                  to_string(r.symbol_class) + "," + fmt17(r.operator_norm) + "," +
                  (r.invertible ? "true" : "false") + "," + (r.normal ? "true" : "false") + "," +
                  (r.self_adjoint ? "true" : "false") + "," + (r.unitary ? "true" : "false") +
                  "," + to_string(r.positively_expansive.value) + "," +
                  to_string(r.uniformly_positively_expansive.value) + "," +
                  to_string(r.expansive.value) + "," + to_string(r.uniformly_expansive.value) +
                  "," + to_string(r.positive_shadowing.value) + "," +
                  to_string(r.li_yorke.value) + "," + to_string(r.spectrum.variant);
        }
    }

    std::string text;
    if (json_mode) {
        text = "[\n";
        for (long i = 0; i < total; ++i) {
            text += rows[static_cast<std::size_t>(i)];
            text += (i + 1 < total) ? ",\n" : "\n";
        }
        text += "]\n";
    } else {
        text = "a,b_re,b_im,class,operator_norm,invertible,normal,self_adjoint,unitary,"
               "positively_expansive,uniformly_positively_expansive,expansive,"
               "uniformly_expansive,positive_shadowing,li_yorke,spectrum\n";
        for (const std::string& row : rows) text += row + "\n";
    }
    emit(text, out_path);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"dynamics of composition operators with affine symbols on the half-plane "
                 "Hardy space"};
    app.require_subcommand(1);

    std::string out_path;
    app.add_option("--out", out_path, "write output to FILE instead of stdout");

    SymbolFlags classify_flags;
    CLI::App* cmd_classify = app.add_subcommand("classify", "dynamical report for one symbol");
    add_symbol_flags(cmd_classify, classify_flags);

    SymbolFlags orbit_flags;
    double orbit_w_re = 1.0, orbit_w_im = 0.0;
    long orbit_n = 50;
    std::string orbit_format = "csv";
    CLI::App* cmd_orbit =
        app.add_subcommand("orbit", "kernel orbit norms, Gram vs closed form");
    add_symbol_flags(cmd_orbit, orbit_flags);
    cmd_orbit->add_option("--w-re", orbit_w_re, "Re(w) > 0 of the kernel pole");
    cmd_orbit->add_option("--w-im", orbit_w_im, "Im(w) of the kernel pole");
    cmd_orbit->add_option("--n", orbit_n, "orbit length (<= 10^4)");
    cmd_orbit->add_option("--format", orbit_format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));

    SymbolFlags pseudo_flags;
    double pseudo_delta = 0.1;
    long pseudo_n = 50;
    std::uint64_t pseudo_seed = 0;
    bool pseudo_witness = false;
    std::optional<double> pseudo_eps;
    std::optional<double> pseudo_w_re;
    double pseudo_w_im = 0.0;
    std::string pseudo_format = "csv";
    CLI::App* cmd_pseudo = app.add_subcommand(
        "pseudo", "pseudo-orbit experiments: random perturbations, shadowing, witnesses");
    add_symbol_flags(cmd_pseudo, pseudo_flags);
    cmd_pseudo->add_option("--delta", pseudo_delta, "pseudo-orbit deviation bound")->required();
    cmd_pseudo->add_option("--n", pseudo_n, "orbit length");
    cmd_pseudo->add_option("--seed", pseudo_seed, "perturbation seed");
    cmd_pseudo->add_flag("--witness", pseudo_witness,
                         "build the fixed-point divergence witness instead");
    cmd_pseudo->add_option("--epsilon", [&pseudo_eps](const std::vector<std::string>& v) {
        pseudo_eps = std::stod(v.at(0));
        return true;
    }, "shadowing tolerance (a > 1)");
    cmd_pseudo->add_option("--w-re", [&pseudo_w_re](const std::vector<std::string>& v) {
        pseudo_w_re = std::stod(v.at(0));
        return true;
    }, "Re of the seed kernel pole");
    cmd_pseudo->add_option("--w-im", pseudo_w_im, "Im of the seed kernel pole");
    cmd_pseudo->add_option("--format", pseudo_format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));

    SymbolFlags spectrum_flags;
    int spectrum_N = 64;
    double spectrum_scale = 1.0;
    std::string spectrum_format = "csv";
    CLI::App* cmd_spectrum =
        app.add_subcommand("spectrum", "truncation eigenvalues and spectrum descriptor");
    add_symbol_flags(cmd_spectrum, spectrum_flags);
    cmd_spectrum->add_option("--basis-size", spectrum_N, "Laguerre truncation size (<= 256)");
    cmd_spectrum->add_option("--laguerre-scale", spectrum_scale, "basis exponential scale c");
    cmd_spectrum->add_option("--format", spectrum_format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));

    GridAxis grid_a{1.0, 1.0, 1}, grid_re{0.0, 0.0, 1}, grid_im{0.0, 0.0, 1};
    std::string grid_format = "csv";
    CLI::App* cmd_grid = app.add_subcommand("grid", "classification sweep over a parameter mesh");
    cmd_grid->add_option("--a-min", grid_a.lo)->required();
    cmd_grid->add_option("--a-max", grid_a.hi);
    cmd_grid->add_option("--a-steps", grid_a.steps);
    cmd_grid->add_option("--b-re-min", grid_re.lo);
    cmd_grid->add_option("--b-re-max", grid_re.hi);
    cmd_grid->add_option("--b-re-steps", grid_re.steps);
    cmd_grid->add_option("--b-im-min", grid_im.lo);
    cmd_grid->add_option("--b-im-max", grid_im.hi);
    cmd_grid->add_option("--b-im-steps", grid_im.steps);
    cmd_grid->add_option("--format", grid_format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "invalid parameters: " << e.what() << "\n";
        return 2;
    }

    try {
        if (cmd_classify->parsed()) return run_classify(classify_flags, out_path);
        if (cmd_orbit->parsed())
            return run_orbit(orbit_flags, orbit_w_re, orbit_w_im, orbit_n, orbit_format,
                             out_path);
        if (cmd_pseudo->parsed())
            return run_pseudo(pseudo_flags, pseudo_delta, pseudo_n, pseudo_seed, pseudo_witness,
                              pseudo_eps, pseudo_w_re, pseudo_w_im, pseudo_format, out_path);
        if (cmd_spectrum->parsed())
            return run_spectrum(spectrum_flags, spectrum_N, spectrum_scale, spectrum_format,
                                out_path);
        if (cmd_grid->parsed()) return run_grid(grid_a, grid_re, grid_im, grid_format, out_path);
    } catch (const precondition_error& e) {
        std::cerr << "precondition violated (" << e.citation() << "): " << e.what() << "\n";
        return 3;
    } catch (const numerical_error& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 4;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid parameters: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
