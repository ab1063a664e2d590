#ifndef HYPDUAL_SUITE_HPP
#define HYPDUAL_SUITE_HPP

#include "hypdual/generator.hpp"
#include "hypdual/report.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace hypdual {

/// Output of one full verification run: every classical cell x {all m >= 0,
/// some m < 0}, every q cell x the same split, and the three lemma regimes,
/// with per_cell instances each.
struct SuiteResult {
    std::vector<VerificationReport> reports;
    std::vector<std::string> generation_errors;  // exhausted cells, one message each

    bool all_match() const;
};

SuiteResult run_suite(const SuiteConfig& cfg);

/// Line-delimited JSON, one report per line; byte-identical for identical
/// configs.
std::string to_ldjson(const std::vector<VerificationReport>& reports);

void print_summary(const SuiteResult& result, std::ostream& out);

/// 0 all match, 1 any mismatch, 2 generation error.
int suite_exit_code(const SuiteResult& result);

} // namespace hypdual

#endif // HYPDUAL_SUITE_HPP
