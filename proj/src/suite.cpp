#include "hypdual/suite.hpp"

#include "hypdual/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <complex>
#include <iomanip>
#include <map>
#include <ostream>

namespace hypdual {

namespace {

constexpr std::complex<double> kFloatCheckPoint{0.1, 0.0};
constexpr double kFloatCheckTol = 1e-9;

VerificationReport lemma_report(const PointSet& A, const PointMultiset& B, const char* regime) {
    VerificationReport rep;
    rep.theorem = "lemma";
    rep.case_label = regime;
    rep.order = 0;
    rep.mod_degree = 0;
    const GaussianRational got = derangement_sum(A, B);
    const GaussianRational expected = predicted_sum(A, B);
    rep.match = got == expected;
    if (!rep.match) rep.mismatches.push_back({0, got.str(), expected.str()});

    nlohmann::json inst;
    nlohmann::json a = nlohmann::json::array(), b = nlohmann::json::array();
    for (const auto& x : A.elements()) a.push_back(x.str());
    for (const auto& x : B.elements) b.push_back(x.str());
    inst["A"] = a;
    inst["B"] = b;
    rep.instance_json = inst.dump();
    return rep;
}

} // namespace

bool SuiteResult::all_match() const {
    for (const auto& rep : reports) {
        if (!rep.match) return false;
    }
    return true;
}

SuiteResult run_suite(const SuiteConfig& cfg) {
    if (cfg.order < 0 || cfg.per_cell < 1 || cfg.r_max < 1 || cfg.denominator_bound < 1 ||
        cfg.q_exponent_bound < 0)
        throw domain_violation("suite config: bounds must be positive");

    SuiteResult result;

    for (ClassicalCell cell : kClassicalCells) {
        for (bool negative_m : {false, true}) {
            const std::string id =
                "classical/" + cell_name(cell) + (negative_m ? "/neg" : "/pos");
            Rng rng(stream_seed(cfg.seed, id));
            try {
                for (int n = 0; n < cfg.per_cell; ++n) {
                    ClassicalDualityInstance inst =
                        random_classical_instance(cfg, cell, negative_m, rng);
                    result.reports.push_back(
                        negative_m ? verify_classical(inst, cfg.order)
                                   : verify_classical(inst, cfg.order, kFloatCheckPoint,
                                                      kFloatCheckTol));
                }
            } catch (const generation_exhausted& e) {
                result.generation_errors.push_back(id + ": " + e.what());
            } catch (const domain_violation& e) {
                // e.g. order below the cell's mod degree in degenerate configs
                result.generation_errors.push_back(id + ": " + e.what());
            }
        }
    }

    SuiteConfig qcfg = cfg;
    qcfg.r_max = std::min(cfg.r_max, 3);
    for (QCell cell : kQCells) {
        for (bool negative_m : {false, true}) {
            const std::string id = "q/" + cell_name(cell) + (negative_m ? "/neg" : "/pos");
            Rng rng(stream_seed(cfg.seed, id));
            try {
                for (int n = 0; n < cfg.per_cell; ++n) {
                    QDualityInstance inst = random_q_instance(qcfg, cell, negative_m, rng);
                    result.reports.push_back(
                        negative_m
                            ? verify_q(inst, cfg.order)
                            : verify_q(inst, cfg.order, kFloatCheckPoint, kFloatCheckTol));
                }
            } catch (const generation_exhausted& e) {
                result.generation_errors.push_back(id + ": " + e.what());
            } catch (const domain_violation& e) {
                result.generation_errors.push_back(id + ": " + e.what());
            }
        }
    }

    const struct {
        const char* id;
        const char* label;
        int gap;  // n_A - n_B; n_A >= max(1, gap) keeps n_B >= 0 in-regime
    } regimes[] = {{"lemma/nA>nB+1", "nA>nB+1", 2},
                   {"lemma/nA=nB+1", "nA=nB+1", 1},
                   {"lemma/nA=nB", "nA=nB", 0}};
    for (const auto& regime : regimes) {
        Rng rng(stream_seed(cfg.seed, regime.id));
        try {
            for (int n = 0; n < cfg.per_cell; ++n) {
                auto [A, B] = random_lemma_pair(rng, std::max(1, regime.gap), 8, regime.gap,
                                                cfg.denominator_bound);
                result.reports.push_back(lemma_report(A, B, regime.label));
            }
        } catch (const generation_exhausted& e) {
            result.generation_errors.push_back(std::string(regime.id) + ": " + e.what());
        }
    }

    return result;
}

std::string to_ldjson(const std::vector<VerificationReport>& reports) {
    std::string out;
    for (const auto& rep : reports) {
        out += rep.to_json().dump();
        out += '\n';
    }
    return out;
}

void print_summary(const SuiteResult& result, std::ostream& out) {
    struct Tally {
        int total = 0;
        int matched = 0;
    };
    std::map<std::string, Tally> cells;
    for (const auto& rep : result.reports) {
        Tally& t = cells[rep.theorem + " " + rep.case_label +
                         (rep.mod_degree > 0 ? " (mod z^d)" : "")];
        ++t.total;
        if (rep.match) ++t.matched;
    }
    out << std::left << std::setw(34) << "cell" << std::right << std::setw(8) << "matched"
        << std::setw(8) << "total" << '\n';
    for (const auto& [name, tally] : cells) {
        out << std::left << std::setw(34) << name << std::right << std::setw(8) << tally.matched
            << std::setw(8) << tally.total << '\n';
    }
    for (const auto& err : result.generation_errors) out << "generation error: " << err << '\n';
    out << (result.all_match() && result.generation_errors.empty()
                ? "all cells verified"
                : result.all_match() ? "verified cells match; some cells failed to generate"
                                     : "MISMATCH detected")
        << '\n';
}

int suite_exit_code(const SuiteResult& result) {
    if (!result.all_match()) return 1;
    if (!result.generation_errors.empty()) return 2;
    return 0;
}

} // namespace hypdual
