// vermaband command-line front end.
//
// Subcommands: verify, defect, sweep, quantize-defect, scaling, eval.
// Exit codes: 0 pass, 1 check failure, 2 usage/config error, 3 I/O error.
//
// Machine output (JSON or CSV) goes to --out or stdout; the human-readable
// summary of `verify` goes to stderr so the data stream stays clean.

#include "vermaband/vermaband.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace vermaband;

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Weight parse_weight_arg(const std::string& text) {
    try {
        return Weight::parse(text);
    } catch (const std::exception& e) {
        throw ConfigError(std::string("--h: ") + e.what());
    }
}

std::vector<Rational> parse_h_list(const std::string& text) {
    std::vector<Rational> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        Rational h = parse_rational(item);
        if (h < Rational(1, 2)) throw ConfigError("--h-list: weight " + item + " is below 1/2");
        out.push_back(std::move(h));
    }
    if (out.empty()) throw ConfigError("--h-list: no weights given");
    return out;
}

// "(m,n);(m,n);..."  with optional spaces; the Unicode minus is accepted
std::vector<std::pair<long long, long long>> parse_pairs(std::string text) {
    for (std::string::size_type p; (p = text.find("\xe2\x88\x92")) != std::string::npos;)
        text.replace(p, 3, "-");
    std::vector<std::pair<long long, long long>> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ';')) {
        long long m = 0, n = 0;
        char l = 0, c = 0, r = 0;
        std::stringstream is(item);
        is >> l >> m >> c >> n >> r;
        if (is.fail() || l != '(' || c != ',' || r != ')')
            throw ConfigError("--pairs: cannot parse '" + item + "' (expected \"(m,n)\")");
        out.emplace_back(m, n);
    }
    if (out.empty()) throw ConfigError("--pairs: no pairs given");
    return out;
}

Symbol parse_symbol_arg(const std::string& text, const char* flag) {
    try {
        return symbol_from_json(Json::parse(text));
    } catch (const std::exception& e) {
        throw ConfigError(std::string(flag) + ": " + e.what());
    }
}

void write_output(const std::string& payload, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << payload;
        std::cout.flush();
        if (!std::cout) throw std::ios_base::failure("write to stdout failed");
        return;
    }
    std::ofstream os(out_path, std::ios::binary);
    if (!os) throw std::ios_base::failure("cannot open '" + out_path + "' for writing");
    os << payload;
    os.flush();
    if (!os) throw std::ios_base::failure("write to '" + out_path + "' failed");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact band-operator calculus on unitarizable lowest-weight modules"};
    app.require_subcommand(1);
    app.set_help_flag("--help", "print help");  // frees -h/--h for the weight option

    std::string h_text = "1/1";
    std::string h_list_text;
    std::string out_path;
    std::string format = "json";
    std::string suite = "all";
    std::string pairs_text = "(2,-2)";
    std::string f_text;
    std::string g_text;
    std::string v_text;
    std::string probe = "product";
    std::string expr_text;
    long long N = 64;
    long long scan = 256;

    auto add_common = [&](CLI::App* cmd) {
        cmd->set_help_flag("--help", "print help");
        cmd->add_option("--h", h_text, "weight h as p/q (>= 1/2)");
        cmd->add_option("--N", N, "truncation / partial-sum horizon");
        cmd->add_option("--scan", scan, "norm-bound scan horizon");
        cmd->add_option("--out", out_path, "output path (default stdout)");
        cmd->add_option("--format", format, "json or csv");
    };

    CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
    add_common(verify);
    verify->add_option("--suite", suite, "berezin, sl2, witt, quantize or all");

    CLI::App* defect = app.add_subcommand("defect", "Witt-defect reports for generator pairs");
    add_common(defect);
    defect->add_option("--pairs", pairs_text, "\"(m,n);(m,n);...\"");

    CLI::App* sweep = app.add_subcommand("sweep", "defect sweep over pairs and weights");
    add_common(sweep);
    sweep->add_option("--pairs", pairs_text, "\"(m,n);(m,n);...\"");
    sweep->add_option("--h-list", h_list_text, "comma-separated weights p/q");

    CLI::App* qdefect = app.add_subcommand("quantize-defect",
                                           "product or derivation defect of quantized symbols");
    add_common(qdefect);
    qdefect->add_option("--f", f_text, "symbol JSON [[k,re_n,re_d,im_n,im_d],...]");
    qdefect->add_option("--g", g_text, "second symbol JSON (product defect)");
    qdefect->add_option("--v", v_text, "vector field JSON (derivation defect)");

    CLI::App* scaling = app.add_subcommand("scaling", "hbar scaling of defect norms");
    add_common(scaling);
    scaling->add_option("--probe", probe, "product or derivation");
    scaling->add_option("--f", f_text, "symbol JSON");
    scaling->add_option("--g", g_text, "second symbol JSON (product probe)");
    scaling->add_option("--v", v_text, "vector field JSON (derivation probe)");
    scaling->add_option("--h-list", h_list_text, "comma-separated weights p/q (> 1/2)");

    CLI::App* eval = app.add_subcommand("eval", "evaluate an operator expression");
    add_common(eval);
    eval->add_option("--expr", expr_text, "expression, e.g. \"com(D,F)\"")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (format != "json" && format != "csv") throw ConfigError("--format must be json or csv");
        if (N < 2) throw ConfigError("--N must be >= 2");
        if (scan < 16) throw ConfigError("--scan must be >= 16");

        if (verify->parsed()) {
            Weight w = parse_weight_arg(h_text);
            if (format != "json") throw ConfigError("verify emits JSON only");
            auto checks = run_suite(suite, w);
            Json j = checks_to_json(w, suite, checks);
            write_output(j.dump(2) + "\n", out_path);
            long long failed = 0;
            for (const auto& c : checks) {
                std::cerr << (c.pass ? "PASS " : "FAIL ") << "[" << c.suite << "] " << c.name
                          << " (" << c.witness << ")\n";
                if (!c.pass) ++failed;
            }
            std::cerr << (failed == 0 ? "all checks passed" : std::to_string(failed) + " check(s) failed")
                      << " at h = " << to_string(w.h()) << "\n";
            return failed == 0 ? 0 : 1;
        }

        if (defect->parsed()) {
            Weight w = parse_weight_arg(h_text);
            if (format != "json") throw ConfigError("defect emits JSON only");
            Json arr = Json::array();
            for (const auto& [m, n] : parse_pairs(pairs_text)) {
                WittDefect d = witt_defect(m, n, w, N);
                Json j;
                j["m"] = m;
                j["n"] = n;
                Json rep = report_to_json(d.defect, d.report);
                for (auto& [key, val] : rep.items()) j[key] = val;
                arr.push_back(std::move(j));
            }
            write_output(arr.dump(2) + "\n", out_path);
            return 0;
        }

        if (sweep->parsed()) {
            auto weights = h_list_text.empty() ? std::vector<Rational>{parse_weight_arg(h_text).h()}
                                               : parse_h_list(h_list_text);
            auto rows = defect_sweep(parse_pairs(pairs_text), weights, N);
            if (format == "csv") {
                std::ostringstream os;
                sweep_to_csv(rows, os);
                write_output(os.str(), out_path);
            } else {
                write_output(sweep_to_json(rows).dump(2) + "\n", out_path);
            }
            return 0;
        }

        if (qdefect->parsed()) {
            Weight w = parse_weight_arg(h_text);
            if (format != "json") throw ConfigError("quantize-defect emits JSON only");
            if (f_text.empty()) throw ConfigError("--f is required");
            Symbol f = parse_symbol_arg(f_text, "--f");
            QuantizeDefect qd = [&] {
                if (!v_text.empty()) {
                    VField v = vfield_from_json(Json::parse(v_text));
                    return derivation_defect(v, f, w, N);
                }
                if (g_text.empty()) throw ConfigError("--g or --v is required");
                return product_defect(f, parse_symbol_arg(g_text, "--g"), w, N);
            }();
            write_output(report_to_json(qd.defect, qd.report).dump(2) + "\n", out_path);
            return 0;
        }

        if (scaling->parsed()) {
            if (h_list_text.empty()) throw ConfigError("--h-list is required");
            if (f_text.empty()) throw ConfigError("--f is required");
            ScalingArgs args;
            args.f = parse_symbol_arg(f_text, "--f");
            ScalingProbe p;
            if (probe == "product") {
                if (g_text.empty()) throw ConfigError("--g is required for the product probe");
                args.g = parse_symbol_arg(g_text, "--g");
                p = ScalingProbe::product;
            } else if (probe == "derivation") {
                if (v_text.empty()) throw ConfigError("--v is required for the derivation probe");
                args.v = vfield_from_json(Json::parse(v_text));
                p = ScalingProbe::derivation;
            } else {
                throw ConfigError("--probe must be product or derivation");
            }
            ScalingResult res = hbar_scaling(p, args, parse_h_list(h_list_text), std::max<long long>(N, 2000));
            if (format == "csv") {
                std::ostringstream os;
                scaling_to_csv(res, os);
                write_output(os.str(), out_path);
            } else {
                write_output(scaling_to_json(res, probe).dump(2) + "\n", out_path);
            }
            return 0;
        }

        if (eval->parsed()) {
            Weight w = parse_weight_arg(h_text);
            BandOperator op = eval_expr(parse_expr(expr_text), w);
            if (format == "csv") {
                std::ostringstream os;
                truncation_to_csv(op, static_cast<int>(N), os);
                write_output(os.str(), out_path);
            } else {
                DefectReport rep = hs_report(op, N);
                write_output(report_to_json(op, rep).dump(2) + "\n", out_path);
            }
            return 0;
        }

        throw ConfigError("no subcommand given");
    } catch (const std::ios_base::failure& e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return 3;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "expression error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
