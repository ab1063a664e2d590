#include "hypdual/report.hpp"

#include "hypdual/errors.hpp"

#include <cmath>

namespace hypdual {

nlohmann::json VerificationReport::to_json() const {
    nlohmann::json j;
    j["instance"] = instance_json.empty() ? nlohmann::json(nullptr)
                                          : nlohmann::json::parse(instance_json);
    j["theorem"] = theorem;
    j["case_label"] = case_label;
    j["order"] = order;
    j["match"] = match;
    j["mod_degree"] = mod_degree;
    nlohmann::json ms = nlohmann::json::array();
    for (const auto& m : mismatches)
        ms.push_back({{"index", m.index}, {"got", m.got}, {"expected", m.expected}});
    j["mismatches"] = ms;
    j["boundary_match"] = boundary_match ? nlohmann::json(*boundary_match) : nlohmann::json(nullptr);
    if (float_check) {
        j["float_check"] = {{"z_re", float_check->z_re},
                            {"z_im", float_check->z_im},
                            {"abs_error", float_check->abs_error},
                            {"tol", float_check->tol},
                            {"ok", float_check->ok}};
    } else {
        j["float_check"] = nullptr;
    }
    return j;
}

VerificationReport compare_series(const TruncatedSeries& built, const TruncatedSeries& expected,
                                  int mod_degree) {
    VerificationReport rep;
    rep.order = std::min(built.order(), expected.order());
    rep.mod_degree = mod_degree;
    rep.match = true;
    for (int k : mismatched_indices(built, expected)) {
        rep.mismatches.push_back({k, built.coeff(k).str(), expected.coeff(k).str()});
        if (k >= mod_degree) rep.match = false;
    }
    return rep;
}

void attach_float_check(VerificationReport& report, const TruncatedSeries& built,
                        const TruncatedSeries& expected, std::complex<double> z, double tol) {
    if (std::abs(z) > 0.25)
        throw domain_violation("float check point must satisfy |z| <= 1/4");
    const double err = std::abs(built.eval(z) - expected.eval(z));
    FloatCheck fc;
    fc.z_re = z.real();
    fc.z_im = z.imag();
    fc.abs_error = err;
    fc.tol = tol;
    fc.ok = std::isfinite(err) && err <= tol;
    report.float_check = fc;
}

} // namespace hypdual
