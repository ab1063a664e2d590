#include "hypdual/duality_q.hpp"

#include "hypdual/errors.hpp"
#include "hypdual/hypergeometric.hpp"
#include "hypdual/pochhammer.hpp"

#include <algorithm>
#include <cstdlib>
#include <utility>

namespace hypdual {

QDualityInstance::QDualityInstance(int r, GaussianRational q, std::vector<GaussianRational> a,
                                   std::vector<GaussianRational> b, std::vector<int> m,
                                   int ratio_exponent_bound)
    : r_(r), q_(std::move(q)), a_(std::move(a)), b_(std::move(b)), m_(std::move(m)) {
    if (r_ < 1) throw domain_violation("q instance: r >= 1 required");
    if (q_.is_zero()) throw domain_violation("q instance: q must be nonzero");
    if (!(q_.norm_squared() < Rational(1)))
        throw domain_violation("q instance: |q| < 1 required");
    const auto n = static_cast<std::size_t>(r_) + 1;
    if (a_.size() != n || b_.size() != n || m_.size() != n)
        throw domain_violation("q instance: a, b, m must each have r+1 entries");
    for (const auto& x : a_)
        if (x.is_zero()) throw domain_violation("q instance: a_i must be nonzero");
    for (const auto& x : b_)
        if (x.is_zero()) throw domain_violation("q instance: b_i must be nonzero");

    int max_abs_m = 0;
    for (int mi : m_) max_abs_m = std::max(max_abs_m, std::abs(mi));
    ratio_bound_ = ratio_exponent_bound >= 0 ? ratio_exponent_bound
                                             : kDefaultOrder + max_abs_m + 4;

    // a_i/a_j != q^e checked for |e| <= ratio_bound_; e and -e are the two
    // orientations of the same pair.
    for (std::size_t i = 0; i < a_.size(); ++i) {
        for (std::size_t j = i + 1; j < a_.size(); ++j) {
            const GaussianRational ratio = a_[i] / a_[j];
            const GaussianRational ratio_inv = a_[j] / a_[i];
            GaussianRational qpow(1);
            for (int e = 0; e <= ratio_bound_; ++e) {
                if (ratio == qpow || ratio_inv == qpow)
                    throw domain_violation("q instance: a_" + std::to_string(i) + "/a_" +
                                           std::to_string(j) + " is q^" +
                                           std::to_string(ratio == qpow ? e : -e));
                qpow *= q_;
            }
        }
    }

    M_ = 0;
    M2_ = 0;
    for (int mi : m_) {
        M_ += mi;
        M2_ += mi * (mi + 1) / 2;
    }
    w_ = integer_power(q_, -r_);
    for (std::size_t i = 0; i < a_.size(); ++i) w_ *= b_[i] / a_[i];
    for (const auto& ai : a_) alpha_ += ai;
    for (const auto& bi : b_) beta_ += bi;
    C_ = alpha_;
    for (std::size_t i = 0; i < b_.size(); ++i) C_ -= b_[i] * integer_power(q_, -m_[i]);
    m_hat_ = *std::min_element(m_.begin(), m_.end());
}

QDualityInstance QDualityInstance::from_json(const nlohmann::json& j, int ratio_exponent_bound) {
    if (!j.is_object() || !j.contains("r") || !j.contains("q") || !j.contains("a") ||
        !j.contains("b") || !j.contains("m"))
        throw parse_error("q instance JSON needs fields r, q, a, b, m");
    std::vector<GaussianRational> a, b;
    std::vector<int> m;
    for (const auto& s : j.at("a")) a.push_back(GaussianRational::parse(s.get<std::string>()));
    for (const auto& s : j.at("b")) b.push_back(GaussianRational::parse(s.get<std::string>()));
    for (const auto& v : j.at("m")) m.push_back(v.get<int>());
    return {j.at("r").get<int>(), GaussianRational::parse(j.at("q").get<std::string>()),
            std::move(a), std::move(b), std::move(m), ratio_exponent_bound};
}

nlohmann::json QDualityInstance::to_json() const {
    nlohmann::json j;
    j["r"] = r_;
    j["q"] = q_.str();
    nlohmann::json a = nlohmann::json::array(), b = nlohmann::json::array();
    for (const auto& x : a_) a.push_back(x.str());
    for (const auto& x : b_) b.push_back(x.str());
    j["a"] = a;
    j["b"] = b;
    j["m"] = m_;
    return j;
}

GaussianRational coefficient_c_q(const QDualityInstance& inst, int i) {
    GaussianRational value = integer_power(inst.q(), -inst.shift_total_2());
    if (inst.shift_total() % 2 != 0) value = -value;
    for (std::size_t j = 0; j < inst.b().size(); ++j) {
        value *= integer_power(inst.b()[j], inst.m()[j]);
        value *= q_pochhammer(inst.q() * inst.a()[i] / inst.b()[j], inst.q(), inst.m()[j]);
    }
    for (int l = 0; l <= inst.r(); ++l) {
        if (l == i) continue;
        value /= inst.a()[i] - inst.a()[l];
    }
    return value;
}

TruncatedSeries build_G(const QDualityInstance& inst, int order) {
    TruncatedSeries acc(order);
    for (int i = 0; i <= inst.r(); ++i) {
        HypergeometricSpec first, second;
        first.argument_scale = inst.w();
        for (int l = 0; l <= inst.r(); ++l) {
            first.upper.push_back(integer_power(inst.q(), 1 + inst.m()[l]) * inst.a()[i] /
                                  inst.b()[l]);
            second.upper.push_back(inst.b()[l] / inst.a()[i]);
            if (l == i) continue;
            first.lower.push_back(inst.q() * inst.a()[i] / inst.a()[l]);
            second.lower.push_back(inst.q() * inst.a()[l] / inst.a()[i]);
        }
        acc = acc + coefficient_c_q(inst, i) *
                        (basic_hypergeometric_series(first, inst.q(), order) *
                         basic_hypergeometric_series(second, inst.q(), order));
    }
    return acc;
}

TruncatedSeries expected_G(const QDualityInstance& inst, int order) {
    const int M = inst.shift_total();
    const int r = inst.r();
    const GaussianRational one(1);

    if (M < r) return TruncatedSeries(order);
    if (M == r) return TruncatedSeries::geometric(one, one, order);
    if (M == r + 1) {
        // coeffs[k] = (C - (q alpha - beta) q^k) / (1-q)
        const GaussianRational scale = (one - inst.q()).inv();
        const GaussianRational residue = inst.q() * inst.alpha() - inst.beta();
        return TruncatedSeries::geometric(inst.closed_form_constant() * scale, one, order) -
               TruncatedSeries::geometric(residue * scale, inst.q(), order);
    }
    throw case_out_of_range("no closed form for M > r+1 (M=" + std::to_string(M) +
                            ", r=" + std::to_string(r) + ")");
}

std::string case_label(const QDualityInstance& inst) {
    const int M = inst.shift_total();
    const int r = inst.r();
    if (M < r) return "M<r";
    if (M == r) return "M=r";
    if (M == r + 1) return "M=r+1";
    return "M>r+1";
}

GaussianRational gamma_ijk_q(const QDualityInstance& inst, int i, int j, int k) {
    if (j < 0 || j > k) throw domain_violation("gamma_ijk_q: 0 <= j <= k required");
    if (k < inst.mod_degree()) throw domain_violation("gamma_ijk_q: k >= -m_hat required");

    const GaussianRational& q = inst.q();
    GaussianRational value = coefficient_c_q(inst, i);

    value *= integer_power(inst.w(), j) / q_pochhammer(q, q, j);
    for (int l = 0; l <= inst.r(); ++l) {
        value *= q_pochhammer(integer_power(q, 1 + inst.m()[l]) * inst.a()[i] / inst.b()[l], q, j);
        if (l == i) continue;
        value /= q_pochhammer(q * inst.a()[i] / inst.a()[l], q, j);
    }

    value /= q_pochhammer(q, q, k - j);
    for (int l = 0; l <= inst.r(); ++l) {
        value *= q_pochhammer(inst.b()[l] / inst.a()[i], q, k - j);
        if (l == i) continue;
        value /= q_pochhammer(q * inst.a()[l] / inst.a()[i], q, k - j);
    }
    return value;
}

std::pair<PointSet, PointMultiset> proof_sets_q(const QDualityInstance& inst, int k) {
    if (k < 0 || k < inst.mod_degree())
        throw domain_violation("proof_sets_q: k >= max(0, -m_hat) required");
    std::vector<GaussianRational> a_points;
    a_points.reserve(static_cast<std::size_t>(inst.r() + 1) * (k + 1));
    for (int i = 0; i <= inst.r(); ++i) {
        GaussianRational qpow(1);
        for (int j = 0; j <= k; ++j) {
            a_points.push_back(inst.a()[i] * qpow);
            qpow *= inst.q();
        }
    }
    PointMultiset B;
    for (int l = 0; l <= inst.r(); ++l)
        for (int j = -inst.m()[l]; j <= k - 1; ++j)
            B.elements.push_back(inst.b()[l] * integer_power(inst.q(), j));
    return {PointSet(std::move(a_points)), std::move(B)};
}

namespace {

VerificationReport make_report(const QDualityInstance& inst, const TruncatedSeries& built,
                               const TruncatedSeries& expected, int order) {
    const int d = inst.mod_degree();
    if (order < d) throw domain_violation("verify: truncation order below mod degree");
    VerificationReport rep = compare_series(built, expected, d);
    rep.theorem = "q";
    rep.case_label = case_label(inst);
    rep.order = order;
    rep.instance_json = inst.to_json().dump();
    if (inst.m_hat() < 0 && d <= order)
        rep.boundary_match = built.coeff(d) == expected.coeff(d);
    return rep;
}

} // namespace

VerificationReport verify_q(const QDualityInstance& inst, int order) {
    return make_report(inst, build_G(inst, order), expected_G(inst, order), order);
}

VerificationReport verify_q(const QDualityInstance& inst, int order, std::complex<double> float_z,
                            double float_tol) {
    TruncatedSeries built = build_G(inst, order);
    TruncatedSeries expected = expected_G(inst, order);
    VerificationReport rep = make_report(inst, built, expected, order);
    attach_float_check(rep, built, expected, float_z, float_tol);
    return rep;
}

} // namespace hypdual
