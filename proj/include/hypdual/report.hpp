#ifndef HYPDUAL_REPORT_HPP
#define HYPDUAL_REPORT_HPP

#include "hypdual/truncated_series.hpp"

#include <json.hpp>

#include <complex>
#include <optional>
#include <string>
#include <vector>

namespace hypdual {

struct Mismatch {
    int index;
    std::string got;
    std::string expected;
};

struct FloatCheck {
    double z_re = 0.0;
    double z_im = 0.0;
    double abs_error = 0.0;
    double tol = 0.0;
    bool ok = false;
};

/// Machine-readable outcome of one verification run. match is true iff no
/// mismatch has index >= mod_degree; mismatches below mod_degree stay listed
/// so the polynomial correction is visible.
struct VerificationReport {
    std::string instance_json;  // echoed parameters, compact JSON text
    std::string theorem;        // "classical" | "q" | "lemma"
    std::string case_label;
    int order = 0;
    bool match = false;
    int mod_degree = 0;
    std::vector<Mismatch> mismatches;
    std::optional<bool> boundary_match;  // coefficient at index -m_hat, when m_hat < 0
    std::optional<FloatCheck> float_check;

    nlohmann::json to_json() const;
};

/// Coefficientwise comparison: fills match/mod_degree/mismatches/order.
VerificationReport compare_series(const TruncatedSeries& built, const TruncatedSeries& expected,
                                  int mod_degree);

/// Evaluates both truncations at z (|z| <= 1/4) in double precision and
/// records the absolute error against tol.
void attach_float_check(VerificationReport& report, const TruncatedSeries& built,
                        const TruncatedSeries& expected, std::complex<double> z, double tol);

} // namespace hypdual

#endif // HYPDUAL_REPORT_HPP
