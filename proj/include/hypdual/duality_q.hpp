#ifndef HYPDUAL_DUALITY_Q_HPP
#define HYPDUAL_DUALITY_Q_HPP

#include "hypdual/derangement.hpp"
#include "hypdual/gaussian_rational.hpp"
#include "hypdual/report.hpp"
#include "hypdual/truncated_series.hpp"

#include <json.hpp>

#include <string>
#include <utility>
#include <vector>

namespace hypdual {

/// Parameters of the q-duality sum G(z): nonzero base q with |q| < 1
/// (exactly: norm_squared(q) < 1), r+1 nonzero points a_i with a_i/a_j never
/// an integer power of q, r+1 nonzero b_i, and r+1 integer shifts m_i.
///
/// a_i/a_j not in q^Z is not finitely decidable in general; it is checked
/// exactly for all exponents |e| <= ratio_exponent_bound, which covers every
/// ratio that can collide inside the proof sets or any q-Pochhammer factor
/// used up to the working order. A deeper collision surfaces later as
/// distinctness_violation or pole_error, never as silent corruption.
///
/// Derived: M = sum m_i, M2 = sum m_i(m_i+1)/2, w = q^{-r} prod b_i/a_i,
/// alpha = sum a_i, beta = sum b_i, C = alpha - sum b_i q^{-m_i},
/// m_hat = min m_i.
class QDualityInstance {
public:
    /// ratio_exponent_bound < 0 selects the default kDefaultOrder + max|m_i| + 4.
    QDualityInstance(int r, GaussianRational q, std::vector<GaussianRational> a,
                     std::vector<GaussianRational> b, std::vector<int> m,
                     int ratio_exponent_bound = -1);

    /// JSON format: {"r":int, "q":str, "a":[str...], "b":[str...], "m":[int...]}.
    static QDualityInstance from_json(const nlohmann::json& j, int ratio_exponent_bound = -1);
    nlohmann::json to_json() const;

    int r() const { return r_; }
    const GaussianRational& q() const { return q_; }
    const std::vector<GaussianRational>& a() const { return a_; }
    const std::vector<GaussianRational>& b() const { return b_; }
    const std::vector<int>& m() const { return m_; }

    int shift_total() const { return M_; }       // M
    int shift_total_2() const { return M2_; }    // M2
    const GaussianRational& w() const { return w_; }
    const GaussianRational& alpha() const { return alpha_; }
    const GaussianRational& beta() const { return beta_; }
    const GaussianRational& closed_form_constant() const { return C_; }  // C
    int m_hat() const { return m_hat_; }
    int mod_degree() const { return m_hat_ < 0 ? -m_hat_ : 0; }
    int ratio_exponent_bound() const { return ratio_bound_; }

private:
    int r_;
    GaussianRational q_;
    std::vector<GaussianRational> a_;
    std::vector<GaussianRational> b_;
    std::vector<int> m_;
    int ratio_bound_;
    int M_;
    int M2_;
    GaussianRational w_;
    GaussianRational alpha_;
    GaussianRational beta_;
    GaussianRational C_;
    int m_hat_;
};

/// c_i = (-1)^M q^{-M2} prod_j b_j^{m_j} (q a_i/b_j;q)_{m_j} / prod_{l != i} (a_i - a_l).
GaussianRational coefficient_c_q(const QDualityInstance& inst, int i);

/// The bilinear sum sum_i c_i * phi(... | w z) * phi(... | z), truncated.
TruncatedSeries build_G(const QDualityInstance& inst, int order);

/// Predicted closed form:
///   M < r   -> 0
///   M = r   -> 1/(1-z)
///   M = r+1 -> [C/(1-z) - (q alpha - beta)/(1-qz)] / (1-q),
///              i.e. coeffs[k] = (C - (q alpha - beta) q^k)/(1-q).
/// Throws case_out_of_range when M > r+1.
TruncatedSeries expected_G(const QDualityInstance& inst, int order);

std::string case_label(const QDualityInstance& inst);

/// Closed-form gamma^k_{i,j}; equals gamma_coeff(a_i q^j, A(k), B(k)) over
/// the geometric proof sets. Requires 0 <= j <= k and k >= max(0, -m_hat).
GaussianRational gamma_ijk_q(const QDualityInstance& inst, int i, int j, int k);

/// A = { a_i q^j : 0 <= j <= k }, B = { b_i q^j : -m_i <= j <= k-1 };
/// |A| = (r+1)(k+1), |B| = M + (r+1)k.
std::pair<PointSet, PointMultiset> proof_sets_q(const QDualityInstance& inst, int k);

VerificationReport verify_q(const QDualityInstance& inst, int order);
VerificationReport verify_q(const QDualityInstance& inst, int order, std::complex<double> float_z,
                            double float_tol);

} // namespace hypdual

#endif // HYPDUAL_DUALITY_Q_HPP
