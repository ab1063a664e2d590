#include "hypdual/duality_classical.hpp"

#include "hypdual/errors.hpp"
#include "hypdual/hypergeometric.hpp"
#include "hypdual/pochhammer.hpp"

#include <algorithm>
#include <utility>

namespace hypdual {

namespace {

GaussianRational half(long n) { return GaussianRational(Rational(n, 2)); }

} // namespace

ClassicalDualityInstance::ClassicalDualityInstance(int p, int r, std::vector<GaussianRational> a,
                                                   std::vector<GaussianRational> b,
                                                   std::vector<int> m)
    : p_(p), r_(r), a_(std::move(a)), b_(std::move(b)), m_(std::move(m)) {
    if (r_ < 1) throw domain_violation("instance: r >= 1 required");
    if (p_ < 0) throw domain_violation("instance: p >= 0 required");
    if (p_ > r_ + 1) throw domain_violation("instance: p <= r+1 required");
    if (static_cast<int>(a_.size()) != r_ + 1)
        throw domain_violation("instance: need r+1 values in a");
    if (static_cast<int>(b_.size()) != p_ || static_cast<int>(m_.size()) != p_)
        throw domain_violation("instance: need p values in b and m");
    for (std::size_t i = 0; i < a_.size(); ++i) {
        for (std::size_t j = i + 1; j < a_.size(); ++j) {
            if ((a_[i] - a_[j]).is_integer())
                throw domain_violation("instance: a_i - a_j is an integer (i=" +
                                       std::to_string(i) + ", j=" + std::to_string(j) + ")");
        }
    }

    M_ = 0;
    for (int mi : m_) M_ += mi;
    for (const auto& ai : a_) alpha_ += ai;
    for (const auto& bi : b_) beta_ += bi;
    // C = alpha + sum_i m_i (m_i + 1 - 2 b_i) / 2
    C_ = alpha_;
    for (int i = 0; i < p_; ++i) {
        const long mi = m_[i];
        C_ += half(mi) * (GaussianRational(mi + 1) - GaussianRational(2) * b_[i]);
    }
    m_hat_ = 0;
    if (p_ > 0) m_hat_ = *std::min_element(m_.begin(), m_.end());
}

ClassicalDualityInstance ClassicalDualityInstance::from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("p") || !j.contains("r") || !j.contains("a") ||
        !j.contains("b") || !j.contains("m"))
        throw parse_error("classical instance JSON needs fields p, r, a, b, m");
    std::vector<GaussianRational> a, b;
    std::vector<int> m;
    for (const auto& s : j.at("a")) a.push_back(GaussianRational::parse(s.get<std::string>()));
    for (const auto& s : j.at("b")) b.push_back(GaussianRational::parse(s.get<std::string>()));
    for (const auto& v : j.at("m")) m.push_back(v.get<int>());
    return {j.at("p").get<int>(), j.at("r").get<int>(), std::move(a), std::move(b), std::move(m)};
}

nlohmann::json ClassicalDualityInstance::to_json() const {
    nlohmann::json j;
    j["p"] = p_;
    j["r"] = r_;
    nlohmann::json a = nlohmann::json::array(), b = nlohmann::json::array();
    for (const auto& x : a_) a.push_back(x.str());
    for (const auto& x : b_) b.push_back(x.str());
    j["a"] = a;
    j["b"] = b;
    j["m"] = m_;
    return j;
}

GaussianRational coefficient_c(const ClassicalDualityInstance& inst, int i) {
    GaussianRational num(1);
    for (int j = 0; j < inst.p(); ++j)
        num *= rising_factorial(GaussianRational(1) + inst.a()[i] - inst.b()[j], inst.m()[j]);
    GaussianRational den(1);
    for (int l = 0; l <= inst.r(); ++l) {
        if (l == i) continue;
        den *= inst.a()[i] - inst.a()[l];
    }
    return num / den;
}

TruncatedSeries build_H(const ClassicalDualityInstance& inst, int order) {
    const GaussianRational one(1);
    const GaussianRational sign((inst.p() + inst.r() + 1) % 2 == 0 ? 1 : -1);
    TruncatedSeries acc(order);
    for (int i = 0; i <= inst.r(); ++i) {
        HypergeometricSpec first, second;
        second.argument_scale = sign;
        for (int j = 0; j < inst.p(); ++j) {
            first.upper.push_back(one + inst.a()[i] + GaussianRational(inst.m()[j]) - inst.b()[j]);
            second.upper.push_back(inst.b()[j] - inst.a()[i]);
        }
        for (int l = 0; l <= inst.r(); ++l) {
            if (l == i) continue;
            first.lower.push_back(one + inst.a()[i] - inst.a()[l]);
            second.lower.push_back(one + inst.a()[l] - inst.a()[i]);
        }
        acc = acc + coefficient_c(inst, i) * (hypergeometric_series(first, order) *
                                              hypergeometric_series(second, order));
    }
    return acc;
}

TruncatedSeries expected_H(const ClassicalDualityInstance& inst, int order) {
    const int M = inst.shift_total();
    const int r = inst.r();
    const int p = inst.p();
    const GaussianRational one(1);

    if (M < r) return TruncatedSeries(order);
    if (M == r) {
        if (p <= r) return TruncatedSeries::constant(one, order);
        return TruncatedSeries::geometric(one, one, order);  // 1/(1-z)
    }
    if (M == r + 1) {
        const GaussianRational& C = inst.closed_form_constant();
        if (p <= r - 1) return TruncatedSeries::constant(C, order);
        if (p == r) {
            TruncatedSeries s = TruncatedSeries::constant(C, order);
            if (order >= 1) s.set_coeff(1, s.coeff(1) + one);
            return s;
        }
        // (alpha - beta + p) z/(1-z)^2 + C/(1-z)
        const GaussianRational slope = inst.alpha() - inst.beta() + GaussianRational(p);
        return slope * TruncatedSeries::ramp(order) + TruncatedSeries::geometric(C, one, order);
    }
    throw case_out_of_range("no closed form for M > r+1 (M=" + std::to_string(M) +
                            ", r=" + std::to_string(r) + ")");
}

std::string case_label(const ClassicalDualityInstance& inst) {
    const int M = inst.shift_total();
    const int r = inst.r();
    const int p = inst.p();
    if (M < r) return "M<r";
    if (M == r) return p <= r ? "M=r,p<=r" : "M=r,p=r+1";
    if (M == r + 1) {
        if (p <= r - 1) return "M=r+1,p<=r-1";
        return p == r ? "M=r+1,p=r" : "M=r+1,p=r+1";
    }
    return "M>r+1";
}

GaussianRational gamma_ijk(const ClassicalDualityInstance& inst, int i, int j, int k) {
    if (j < 0 || j > k) throw domain_violation("gamma_ijk: 0 <= j <= k required");
    if (k < inst.mod_degree())
        throw domain_violation("gamma_ijk: k >= -m_hat required");

    const GaussianRational one(1);
    GaussianRational value = coefficient_c(inst, i) / factorial(j);
    for (int l = 0; l < inst.p(); ++l)
        value *= rising_factorial(one + GaussianRational(inst.m()[l]) + inst.a()[i] - inst.b()[l], j);
    for (int l = 0; l <= inst.r(); ++l) {
        if (l == i) continue;
        value /= rising_factorial(one + inst.a()[i] - inst.a()[l], j);
    }

    const long swaps = static_cast<long>(k - j) * (inst.p() + inst.r() + 1);
    if (swaps % 2 != 0) value = -value;
    value /= factorial(k - j);
    for (int l = 0; l < inst.p(); ++l)
        value *= rising_factorial(inst.b()[l] - inst.a()[i], k - j);
    for (int l = 0; l <= inst.r(); ++l) {
        if (l == i) continue;
        value /= rising_factorial(one - inst.a()[i] + inst.a()[l], k - j);
    }
    return value;
}

std::pair<PointSet, PointMultiset> proof_sets(const ClassicalDualityInstance& inst, int k) {
    if (k < 0 || k < inst.mod_degree())
        throw domain_violation("proof_sets: k >= max(0, -m_hat) required");
    std::vector<GaussianRational> a_points;
    a_points.reserve(static_cast<std::size_t>(inst.r() + 1) * (k + 1));
    for (int i = 0; i <= inst.r(); ++i)
        for (int j = 0; j <= k; ++j) a_points.push_back(inst.a()[i] + GaussianRational(j));
    PointMultiset B;
    for (int l = 0; l < inst.p(); ++l)
        for (int j = -inst.m()[l]; j <= k - 1; ++j)
            B.elements.push_back(inst.b()[l] + GaussianRational(j));
    return {PointSet(std::move(a_points)), std::move(B)};
}

namespace {

VerificationReport make_report(const ClassicalDualityInstance& inst, const TruncatedSeries& built,
                               const TruncatedSeries& expected, int order) {
    const int d = inst.mod_degree();
    if (order < d) throw domain_violation("verify: truncation order below mod degree");
    VerificationReport rep = compare_series(built, expected, d);
    rep.theorem = "classical";
    rep.case_label = case_label(inst);
    rep.order = order;
    rep.instance_json = inst.to_json().dump();
    if (inst.m_hat() < 0 && d <= order)
        rep.boundary_match = built.coeff(d) == expected.coeff(d);
    return rep;
}

} // namespace

VerificationReport verify_classical(const ClassicalDualityInstance& inst, int order) {
    return make_report(inst, build_H(inst, order), expected_H(inst, order), order);
}

VerificationReport verify_classical(const ClassicalDualityInstance& inst, int order,
                                    std::complex<double> float_z, double float_tol) {
    TruncatedSeries built = build_H(inst, order);
    TruncatedSeries expected = expected_H(inst, order);
    VerificationReport rep = make_report(inst, built, expected, order);
    attach_float_check(rep, built, expected, float_z, float_tol);
    return rep;
}

} // namespace hypdual
