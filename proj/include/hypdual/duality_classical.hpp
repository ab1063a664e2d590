#ifndef HYPDUAL_DUALITY_CLASSICAL_HPP
#define HYPDUAL_DUALITY_CLASSICAL_HPP

#include "hypdual/derangement.hpp"
#include "hypdual/gaussian_rational.hpp"
#include "hypdual/report.hpp"
#include "hypdual/truncated_series.hpp"

#include <json.hpp>

#include <string>
#include <utility>
#include <vector>

namespace hypdual {

/// Parameters of the classical duality sum H(z): p <= r+1 upper shifts b_j
/// with integer offsets m_j, and r+1 base points a_i with a_i - a_j never an
/// integer. Derived quantities are computed once at construction:
///   M = sum m_i, alpha = sum a_i, beta = sum b_i,
///   C = alpha + sum m_i (m_i + 1 - 2 b_i) / 2, m_hat = min m_i (0 when p=0).
class ClassicalDualityInstance {
public:
    ClassicalDualityInstance(int p, int r, std::vector<GaussianRational> a,
                             std::vector<GaussianRational> b, std::vector<int> m);

    /// JSON format: {"p":int, "r":int, "a":[str...], "b":[str...], "m":[int...]}.
    static ClassicalDualityInstance from_json(const nlohmann::json& j);
    nlohmann::json to_json() const;

    int p() const { return p_; }
    int r() const { return r_; }
    const std::vector<GaussianRational>& a() const { return a_; }
    const std::vector<GaussianRational>& b() const { return b_; }
    const std::vector<int>& m() const { return m_; }

    int shift_total() const { return M_; }  // M
    const GaussianRational& alpha() const { return alpha_; }
    const GaussianRational& beta() const { return beta_; }
    const GaussianRational& closed_form_constant() const { return C_; }  // C
    int m_hat() const { return m_hat_; }
    /// Degree below which coefficients may disagree: max(0, -m_hat).
    int mod_degree() const { return m_hat_ < 0 ? -m_hat_ : 0; }

private:
    int p_;
    int r_;
    std::vector<GaussianRational> a_;
    std::vector<GaussianRational> b_;
    std::vector<int> m_;
    int M_;
    GaussianRational alpha_;
    GaussianRational beta_;
    GaussianRational C_;
    int m_hat_;
};

/// c_i = prod_j (1 + a_i - b_j)_{m_j} / prod_{l != i} (a_i - a_l); i is 0-based.
GaussianRational coefficient_c(const ClassicalDualityInstance& inst, int i);

/// The bilinear sum sum_i c_i * pFr(... | z) * pFr(... | (-1)^{p+r+1} z),
/// truncated at the given order.
TruncatedSeries build_H(const ClassicalDualityInstance& inst, int order);

/// The predicted closed form for the instance's case:
///   M < r            -> 0
///   M = r,   p <= r  -> 1
///   M = r,   p = r+1 -> 1/(1-z)
///   M = r+1, p <= r-1-> C
///   M = r+1, p = r   -> C + z
///   M = r+1, p = r+1 -> (alpha-beta+p) z/(1-z)^2 + C/(1-z)
/// Throws case_out_of_range when M > r+1.
TruncatedSeries expected_H(const ClassicalDualityInstance& inst, int order);

std::string case_label(const ClassicalDualityInstance& inst);

/// Closed-form gamma^k_{i,j} of the partial-fraction expansion; equals
/// gamma_coeff(a_i + j, A(k), B(k)) over the proof sets. Requires
/// 0 <= j <= k and k >= max(0, -m_hat).
GaussianRational gamma_ijk(const ClassicalDualityInstance& inst, int i, int j, int k);

/// The set A = { a_i + j : 0 <= j <= k } and multiset
/// B = { b_l + j : -m_l <= j <= k-1 }; |A| = (r+1)(k+1), |B| = M + k p.
std::pair<PointSet, PointMultiset> proof_sets(const ClassicalDualityInstance& inst, int k);

/// Builds H and its closed form, compares coefficientwise modulo the
/// instance's mod degree, and reports.
VerificationReport verify_classical(const ClassicalDualityInstance& inst, int order);
VerificationReport verify_classical(const ClassicalDualityInstance& inst, int order,
                                    std::complex<double> float_z, double float_tol);

} // namespace hypdual

#endif // HYPDUAL_DUALITY_CLASSICAL_HPP
