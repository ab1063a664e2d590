#ifndef HYPDUAL_GENERATOR_HPP
#define HYPDUAL_GENERATOR_HPP

#include "hypdual/derangement.hpp"
#include "hypdual/duality_classical.hpp"
#include "hypdual/duality_q.hpp"
#include "hypdual/truncated_series.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <utility>

namespace hypdual {

struct SuiteConfig {
    std::uint64_t seed = 1;
    int order = kDefaultOrder;
    int per_cell = 25;
    int r_max = 4;
    int denominator_bound = 20;
    /// q-ratio exponent check bound; 0 selects order + max|m_i| + 4 per instance.
    int q_exponent_bound = 0;
};

/// Deterministic random stream. Draws use the raw mt19937_64 sequence (which
/// the standard pins down exactly) with modulo reduction, so identical seeds
/// give identical streams on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform-ish integer in [lo, hi], inclusive.
    long uniform(long lo, long hi) {
        return lo + static_cast<long>(next_u64() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    bool coin() { return (next_u64() & 1) != 0; }

private:
    std::mt19937_64 engine_;
};

/// Stream seed for an independent cell: mixes the suite seed with the cell
/// id, so cells can run in any order (or in parallel) with identical draws.
std::uint64_t stream_seed(std::uint64_t seed, std::string_view cell_id);

/// num in [-bound, bound], den in [1, bound], canonicalized.
Rational random_rational(Rng& rng, int bound);

/// Real with probability 1/2, otherwise a full Gaussian rational.
GaussianRational random_gaussian(Rng& rng, int bound);
GaussianRational random_nonzero_gaussian(Rng& rng, int bound);

enum class ClassicalCell {
    m_lt_r,
    m_eq_r_p_le_r,
    m_eq_r_p_eq_r1,
    m_eq_r1_p_le_rm1,
    m_eq_r1_p_eq_r,
    m_eq_r1_p_eq_r1,
};
inline constexpr ClassicalCell kClassicalCells[] = {
    ClassicalCell::m_lt_r,          ClassicalCell::m_eq_r_p_le_r,
    ClassicalCell::m_eq_r_p_eq_r1,  ClassicalCell::m_eq_r1_p_le_rm1,
    ClassicalCell::m_eq_r1_p_eq_r,  ClassicalCell::m_eq_r1_p_eq_r1,
};
std::string cell_name(ClassicalCell cell);

enum class QCell { m_lt_r, m_eq_r, m_eq_r1 };
inline constexpr QCell kQCells[] = {QCell::m_lt_r, QCell::m_eq_r, QCell::m_eq_r1};
std::string cell_name(QCell cell);

/// Rejection-samples an instance landing in the requested cell; with
/// negative_m, at least one m_i < 0 (so m_hat < 0). Throws
/// generation_exhausted after a bounded number of attempts or when the cell
/// is infeasible under cfg.r_max.
ClassicalDualityInstance random_classical_instance(const SuiteConfig& cfg, ClassicalCell cell,
                                                   bool negative_m, Rng& rng);

QDualityInstance random_q_instance(const SuiteConfig& cfg, QCell cell, bool negative_m, Rng& rng);

/// Random pair with n_A in [na_lo, na_hi] and n_B = n_A - gap clamped to
/// >= 0; gap < 0 draws n_B uniformly in [0, n_A].
std::pair<PointSet, PointMultiset> random_lemma_pair(Rng& rng, int na_lo, int na_hi, int gap,
                                                     int bound);

} // namespace hypdual

#endif // HYPDUAL_GENERATOR_HPP
