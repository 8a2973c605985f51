// weylosc: spectra, stencils and verification reports for the oscillator
// operators, all in exact rational arithmetic.
//
// Exit codes: 0 success, 1 verification failure or degenerate spectrum,
// 2 usage error.

#include "weylosc/serialize.hpp"
#include "weylosc/verify.hpp"
#include "weylosc/weylosc.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace weylosc;

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::string op = "hf";
    std::string p = "0";
    std::string B = "0";
    std::string delta = "1";
    std::string q = "2";
    std::size_t N = 12;
    std::string realization = "diff";
    std::string rhs = "plain";
    int s = -1;
    std::string format = "json";
    std::string out;
};

Rational parse_param(const std::string& name, const std::string& text) {
    try {
        return Rational::parse(text);
    } catch (const std::invalid_argument& e) {
        throw UsageError("--" + name + ": " + e.what());
    }
}

FockPoly make_operator(const RunConfig& cfg) {
    Rational p = parse_param("p", cfg.p);
    if (cfg.op == "hf") {
        return build_hf(p);
    }
    return build_hg(p, parse_param("B", cfg.B));
}

Realization make_realization(const RunConfig& cfg) {
    try {
        if (cfg.realization == "fd") {
            return Realization::finite_difference(parse_param("delta", cfg.delta));
        }
        if (cfg.realization == "qdil") {
            return Realization::q_dilatation(parse_param("q", cfg.q));
        }
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    return Realization::differential();
}

json operator_json(const RunConfig& cfg, const FockPoly& h) {
    json j{{"name", cfg.op}, {"p", parse_param("p", cfg.p).str()}, {"words", to_json(h)}};
    if (cfg.op == "hg") {
        j["B"] = parse_param("B", cfg.B).str();
    }
    return j;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char c : s) {
        out += c;
        if (c == '"') {
            out += '"';
        }
    }
    return out + "\"";
}

std::string join_coeffs(const Poly& p) {
    std::string out;
    for (const auto& c : p.coeffs()) {
        out += (out.empty() ? "" : ";") + c.str();
    }
    return out;
}

void emit(const RunConfig& cfg, const std::string& text) {
    if (cfg.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(cfg.out, std::ios::binary);
    if (!f) {
        throw UsageError("cannot open output file " + cfg.out);
    }
    f << text;
}

int cmd_spectrum(const RunConfig& cfg) {
    FockPoly h = make_operator(cfg);
    Realization r = make_realization(cfg);
    bool scaled = cfg.rhs == "scaled";
    if (scaled && r.kind() != Realization::Kind::q_dilatation) {
        throw UsageError("--rhs scaled requires --realization qdil");
    }
    if (scaled && cfg.s != -2 && cfg.s != -1 && cfg.s != 1 && cfg.s != 2) {
        throw UsageError("--s must be one of -2, -1, 1, 2");
    }

    SpectralReport report;
    try {
        OperatorMatrix m = realize_matrix(h, r, cfg.N);
        report = scaled ? pencil_solve(m, cfg.s, r.param()) : eigensolve_flag(m);
    } catch (const DegenerateSpectrum& e) {
        std::cerr << "DegenerateSpectrum: " << e.what() << "\n";
        return kFailure;
    }

    std::string kind;
    std::vector<Rational> reference;
    for (std::size_t n = 0; n <= cfg.N; ++n) {
        if (scaled) {
            kind = cfg.s == -1 ? to_string(SpectrumKind::q_scaled_once)
                 : cfg.s == -2 ? to_string(SpectrumKind::q_scaled_twice)
                               : "q_scaled_opposite";
            reference.push_back(pencil_reference(n, r.param(), cfg.s));
        } else if (r.kind() == Realization::Kind::q_dilatation) {
            kind = to_string(SpectrumKind::q_plain);
            reference.push_back(reference_spectrum(SpectrumKind::q_plain, n, r.param()));
        } else {
            kind = to_string(SpectrumKind::classic);
            reference.push_back(reference_spectrum(SpectrumKind::classic, n));
        }
    }
    bool match = report.eigenvalues() == reference;

    std::ostringstream os;
    if (cfg.format == "csv") {
        os << "basis,n,E,reference,coeffs\n";
        for (const auto& l : report.levels) {
            os << csv_field(report.basis.str()) << ',' << l.n << ',' << l.eigenvalue.str() << ','
               << reference[l.n].str() << ',' << join_coeffs(l.eigenpoly) << '\n';
        }
    } else {
        json ref = json::array();
        for (const auto& v : reference) {
            ref.push_back(v.str());
        }
        json j{{"command", "spectrum"},
               {"operator", operator_json(cfg, h)},
               {"realization", r.str()},
               {"N", cfg.N},
               {"rhs", scaled ? json{{"kind", "scaled"}, {"s", cfg.s}} : json{{"kind", "plain"}}},
               {"report", to_json(report)},
               {"reference", json{{"kind", kind}, {"values", std::move(ref)}}},
               {"match", match}};
        os << j.dump(2) << '\n';
    }
    emit(cfg, os.str());
    return match ? kOk : kFailure;
}

int cmd_stencil(const RunConfig& cfg) {
    FockPoly h = make_operator(cfg);
    Realization r = make_realization(cfg);
    if (r.kind() == Realization::Kind::differential) {
        throw UsageError("stencil requires --realization fd or qdil");
    }
    Stencil st = stencil_of(h, r);
    std::ostringstream os;
    if (cfg.format == "csv") {
        os << "mode,param,offset,power,coeff\n";
        const char* mode = st.mode == Stencil::Mode::shift ? "shift" : "scale";
        for (const auto& [j, c] : st.terms) {
            for (const auto& [k, v] : c.terms()) {
                os << mode << ',' << st.param.str() << ',' << j << ',' << k << ',' << v.str() << '\n';
            }
        }
    } else {
        json j{{"command", "stencil"},
               {"operator", operator_json(cfg, h)},
               {"realization", r.str()},
               {"points", st.point_count()},
               {"stencil", to_json(st)}};
        os << j.dump(2) << '\n';
    }
    emit(cfg, os.str());
    return kOk;
}

int cmd_verify(const RunConfig& cfg, const std::string& suite) {
    std::vector<verify::SuiteReport> reports;
    if (suite == "all") {
        reports = verify::run_all();
    } else {
        try {
            reports.push_back(verify::run_suite(suite));
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
    }
    std::size_t failures = 0;
    for (const auto& r : reports) {
        failures += r.failures();
    }
    std::ostringstream os;
    if (cfg.format == "csv") {
        os << "suite,record,name,expected,got,pass\n";
        for (const auto& r : reports) {
            for (const auto& c : r.cases) {
                os << r.suite << ",case," << csv_field(c.name) << ',' << csv_field(c.expected) << ','
                   << csv_field(c.got) << ',' << (c.pass ? "true" : "false") << '\n';
            }
            for (const auto& n : r.notes) {
                os << r.suite << ",note,," << csv_field(n) << ",,\n";
            }
        }
    } else {
        json j;
        if (suite == "all") {
            json suites = json::array();
            for (const auto& r : reports) {
                suites.push_back(verify::to_json(r));
            }
            j = json{{"suite", "all"}, {"suites", std::move(suites)}, {"failures", failures}, {"pass", failures == 0}};
        } else {
            j = verify::to_json(reports.front());
        }
        os << j.dump(2) << '\n';
    }
    emit(cfg, os.str());
    return failures == 0 ? kOk : kFailure;
}

void add_operator_options(CLI::App* sub, RunConfig& cfg) {
    sub->add_option("--op", cfg.op, "Operator: hf or hg")->check(CLI::IsMember({"hf", "hg"}));
    sub->add_option("--p", cfg.p, "Parameter p (rational string)");
    sub->add_option("--B", cfg.B, "Parameter B of hg (rational string)");
    sub->add_option("--delta", cfg.delta, "Finite-difference step (rational string)");
    sub->add_option("--q", cfg.q, "Dilatation parameter q (rational string)");
    sub->add_option("--realization", cfg.realization, "diff, fd or qdil")->check(CLI::IsMember({"diff", "fd", "qdil"}));
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact spectra and verification for the harmonic oscillator in Fock space"};
    app.require_subcommand(1);
    RunConfig cfg;
    std::string suite = "all";

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", cfg.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
        sub->add_option("--out", cfg.out, "Output path (default: standard output)");
    };

    auto* spectrum = app.add_subcommand("spectrum", "Eigenvalues and eigenpolynomials on P_N");
    add_operator_options(spectrum, cfg);
    spectrum->add_option("--N", cfg.N, "Top degree of the polynomial space");
    spectrum->add_option("--rhs", cfg.rhs, "plain or scaled")->check(CLI::IsMember({"plain", "scaled"}));
    spectrum->add_option("--s", cfg.s, "Scale power of the scaled right-hand side phi(q^s y)");
    add_common(spectrum);

    auto* stencil = app.add_subcommand("stencil", "Multi-point form of a discrete realization");
    add_operator_options(stencil, cfg);
    add_common(stencil);

    auto* verify_cmd = app.add_subcommand("verify", "Run a fixed-grid verification suite");
    std::vector<std::string> choices = verify::suite_names();
    choices.push_back("all");
    verify_cmd->add_option("suite", suite, "Suite name or 'all'")->check(CLI::IsMember(choices));
    add_common(verify_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (spectrum->parsed()) {
            return cmd_spectrum(cfg);
        }
        if (stencil->parsed()) {
            return cmd_stencil(cfg);
        }
        return cmd_verify(cfg, suite);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const UnsupportedDegree& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFailure;
    }
}
