// hypdual — exact verification of bilinear hypergeometric duality sums.
//
// Subcommands:
//   verify-classical  build H(z) for one instance and check its closed form
//   verify-q          same for the basic (q-) analogue G(z)
//   lemma-check       exercise the derangement-sum identity directly
//   suite             run the full random case-matrix verification suite
//
// Exit status: 0 all match, 1 any mismatch, 2 usage/generation error.

#include "hypdual/duality_classical.hpp"
#include "hypdual/duality_q.hpp"
#include "hypdual/errors.hpp"
#include "hypdual/generator.hpp"
#include "hypdual/suite.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <complex>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using hypdual::GaussianRational;
using hypdual::PointMultiset;
using hypdual::PointSet;
using hypdual::VerificationReport;

nlohmann::json load_instance_json(const std::string& arg) {
    if (!arg.empty() && arg.front() == '{') return nlohmann::json::parse(arg);
    std::ifstream in(arg);
    if (!in) throw hypdual::parse_error("cannot open instance file: " + arg);
    std::stringstream buf;
    buf << in.rdbuf();
    return nlohmann::json::parse(buf.str());
}

std::complex<double> parse_point(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) return {std::stod(text), 0.0};
    return {std::stod(text.substr(0, comma)), std::stod(text.substr(comma + 1))};
}

void print_report_text(const VerificationReport& rep, std::ostream& out) {
    out << rep.theorem << " [" << rep.case_label << "] order=" << rep.order
        << " mod_degree=" << rep.mod_degree << " -> " << (rep.match ? "MATCH" : "MISMATCH")
        << '\n';
    for (const auto& mm : rep.mismatches) {
        out << "  coeff[" << mm.index << "]: got " << mm.got << ", expected " << mm.expected
            << (mm.index < rep.mod_degree ? " (below mod degree, allowed)" : "") << '\n';
    }
    if (rep.boundary_match)
        out << "  boundary coefficient at z^" << rep.mod_degree << ": "
            << (*rep.boundary_match ? "matched" : "differs") << '\n';
    if (rep.float_check)
        out << "  float check at z=(" << rep.float_check->z_re << "," << rep.float_check->z_im
            << "): |built-expected| = " << rep.float_check->abs_error
            << (rep.float_check->ok ? " (ok)" : " (EXCEEDS TOL)") << '\n';
}

int emit_report(const VerificationReport& rep, bool as_json) {
    if (as_json)
        std::cout << rep.to_json().dump() << '\n';
    else
        print_report_text(rep, std::cout);
    return rep.match ? 0 : 1;
}

struct VerifyOptions {
    std::string instance;
    int order = hypdual::kDefaultOrder;
    bool as_json = false;
    std::vector<std::string> float_check;  // Z TOL
};

void add_verify_options(CLI::App* cmd, VerifyOptions& opts) {
    cmd->add_option("--instance", opts.instance,
                    "instance JSON: inline text (starts with '{') or a file path")
        ->required();
    cmd->add_option("--order", opts.order, "truncation order N")
        ->envname("HYPDUAL_ORDER")
        ->check(CLI::NonNegativeNumber);
    cmd->add_flag("--json", opts.as_json, "emit the full report as JSON");
    cmd->add_option("--float-check", opts.float_check,
                    "Z TOL: double-precision cross-check at z=Z (|Z| <= 1/4)")
        ->expected(2);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification of hypergeometric duality identities"};
    app.require_subcommand(1);

    VerifyOptions classical_opts;
    CLI::App* classical = app.add_subcommand(
        "verify-classical", "verify H(z) against its closed form for one instance");
    add_verify_options(classical, classical_opts);

    VerifyOptions q_opts;
    CLI::App* qcmd =
        app.add_subcommand("verify-q", "verify G(z) against its closed form for one instance");
    add_verify_options(qcmd, q_opts);

    CLI::App* lemma = app.add_subcommand("lemma-check", "check the derangement-sum identity");
    int lemma_na = -1, lemma_nb = -1, lemma_random = 0;
    std::uint64_t lemma_seed = 1;
    lemma->add_option("--na", lemma_na, "size of the set A");
    lemma->add_option("--nb", lemma_nb, "size of the multiset B (requires --na)");
    lemma->add_option("--random", lemma_random, "number of random (A, B) pairs");
    lemma->add_option("--seed", lemma_seed, "random seed")->envname("HYPDUAL_SEED");

    CLI::App* suite = app.add_subcommand("suite", "run the full case-matrix suite");
    hypdual::SuiteConfig cfg;
    std::string json_out;
    suite->add_option("--seed", cfg.seed, "random seed")->envname("HYPDUAL_SEED");
    suite->add_option("--order", cfg.order, "truncation order N")->envname("HYPDUAL_ORDER");
    suite->add_option("--per-cell", cfg.per_cell, "instances per case cell")
        ->envname("HYPDUAL_PER_CELL");
    suite->add_option("--r-max", cfg.r_max, "largest r drawn")->envname("HYPDUAL_R_MAX");
    suite->add_option("--denominator-bound", cfg.denominator_bound,
                      "numerator/denominator bound for random rationals")
        ->envname("HYPDUAL_DENOMINATOR_BOUND");
    suite->add_option("--json-out", json_out, "write line-delimited JSON reports here")
        ->envname("HYPDUAL_JSON_OUT");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 2;
    }

    try {
        if (classical->parsed()) {
            auto inst =
                hypdual::ClassicalDualityInstance::from_json(load_instance_json(classical_opts.instance));
            try {
                VerificationReport rep =
                    classical_opts.float_check.empty()
                        ? verify_classical(inst, classical_opts.order)
                        : verify_classical(inst, classical_opts.order,
                                           parse_point(classical_opts.float_check[0]),
                                           std::stod(classical_opts.float_check[1]));
                return emit_report(rep, classical_opts.as_json);
            } catch (const hypdual::case_out_of_range& e) {
                // No closed form; still emit the built series for exploration.
                nlohmann::json j;
                j["error"] = e.what();
                j["built"] = build_H(inst, classical_opts.order).coeff_strings();
                std::cout << j.dump() << '\n';
                return 2;
            }
        }
        if (qcmd->parsed()) {
            auto inst = hypdual::QDualityInstance::from_json(load_instance_json(q_opts.instance));
            try {
                VerificationReport rep =
                    q_opts.float_check.empty()
                        ? verify_q(inst, q_opts.order)
                        : verify_q(inst, q_opts.order, parse_point(q_opts.float_check[0]),
                                   std::stod(q_opts.float_check[1]));
                return emit_report(rep, q_opts.as_json);
            } catch (const hypdual::case_out_of_range& e) {
                nlohmann::json j;
                j["error"] = e.what();
                j["built"] = build_G(inst, q_opts.order).coeff_strings();
                std::cout << j.dump() << '\n';
                return 2;
            }
        }
        if (lemma->parsed()) {
            hypdual::Rng rng(hypdual::stream_seed(lemma_seed, "lemma-check"));
            int checked = 0, failures = 0;
            auto run_one = [&](const PointSet& A, const PointMultiset& B) {
                const GaussianRational got = derangement_sum(A, B);
                const GaussianRational expected = predicted_sum(A, B);
                ++checked;
                if (got != expected) {
                    ++failures;
                    std::cout << "MISMATCH: nA=" << A.size() << " nB=" << B.size() << " got "
                              << got.str() << " expected " << expected.str() << '\n';
                }
            };
            if (lemma_na >= 0) {
                const int nb = lemma_nb >= 0 ? lemma_nb : 0;
                if (nb > lemma_na) throw hypdual::domain_violation("lemma-check: nb <= na required");
                auto [A, B] = hypdual::random_lemma_pair(rng, lemma_na, lemma_na,
                                                         lemma_na - nb, 20);
                run_one(A, B);
            }
            for (int n = 0; n < lemma_random; ++n) {
                auto [A, B] = hypdual::random_lemma_pair(rng, 1, 8, -1, 20);
                run_one(A, B);
            }
            if (checked == 0) {
                std::cerr << "lemma-check: nothing to do (use --na or --random)\n";
                return 2;
            }
            std::cout << checked << " pair(s) checked, " << failures << " mismatch(es)\n";
            return failures == 0 ? 0 : 1;
        }
        if (suite->parsed()) {
            hypdual::SuiteResult result = hypdual::run_suite(cfg);
            if (!json_out.empty()) {
                std::ofstream out(json_out, std::ios::binary);
                if (!out) throw hypdual::parse_error("cannot open " + json_out + " for writing");
                out << hypdual::to_ldjson(result.reports);
            }
            hypdual::print_summary(result, std::cout);
            return hypdual::suite_exit_code(result);
        }
    } catch (const hypdual::error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "json error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
