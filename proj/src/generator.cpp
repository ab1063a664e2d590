#include "hypdual/generator.hpp"

#include "hypdual/errors.hpp"

#include <algorithm>
#include <cstdlib>

namespace hypdual {

namespace {

constexpr int kMaxAttempts = 1000;
constexpr int kScalarRetries = 50;

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

} // namespace

std::uint64_t stream_seed(std::uint64_t seed, std::string_view cell_id) {
    std::uint64_t h = 0xcbf29ce484222325ULL;  // FNV-1a over the cell id
    for (char c : cell_id) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ULL;
    }
    return splitmix64(seed ^ h);
}

Rational random_rational(Rng& rng, int bound) {
    return Rational(rng.uniform(-bound, bound), rng.uniform(1, bound));
}

GaussianRational random_gaussian(Rng& rng, int bound) {
    Rational re = random_rational(rng, bound);
    if (rng.coin()) return {std::move(re)};
    return {std::move(re), random_rational(rng, bound)};
}

GaussianRational random_nonzero_gaussian(Rng& rng, int bound) {
    for (int attempt = 0; attempt < kScalarRetries; ++attempt) {
        GaussianRational x = random_gaussian(rng, bound);
        if (!x.is_zero()) return x;
    }
    throw generation_exhausted("could not draw a nonzero scalar");
}

std::string cell_name(ClassicalCell cell) {
    switch (cell) {
        case ClassicalCell::m_lt_r: return "M<r";
        case ClassicalCell::m_eq_r_p_le_r: return "M=r,p<=r";
        case ClassicalCell::m_eq_r_p_eq_r1: return "M=r,p=r+1";
        case ClassicalCell::m_eq_r1_p_le_rm1: return "M=r+1,p<=r-1";
        case ClassicalCell::m_eq_r1_p_eq_r: return "M=r+1,p=r";
        case ClassicalCell::m_eq_r1_p_eq_r1: return "M=r+1,p=r+1";
    }
    return "?";
}

std::string cell_name(QCell cell) {
    switch (cell) {
        case QCell::m_lt_r: return "M<r";
        case QCell::m_eq_r: return "M=r";
        case QCell::m_eq_r1: return "M=r+1";
    }
    return "?";
}

namespace {

// Shift vector with the requested total; with negative_m, one designated
// slot is drawn negative and the draw is rejected unless min m < 0 holds
// after balancing (the last slot absorbs the remainder).
std::vector<int> draw_shifts(Rng& rng, int count, int total, bool negative_m) {
    std::vector<int> m(static_cast<std::size_t>(count));
    if (count == 0) {
        if (total != 0 || negative_m) throw domain_violation("p=0 admits only M=0");
        return m;
    }
    const int neg_slot = negative_m ? static_cast<int>(rng.uniform(0, count - 1)) : -1;
    int partial = 0;
    for (int idx = 0; idx < count - 1; ++idx) {
        m[idx] = static_cast<int>(idx == neg_slot ? rng.uniform(-3, -1) : rng.uniform(0, 3));
        partial += m[idx];
    }
    m[count - 1] = total - partial;
    const int min_m = *std::min_element(m.begin(), m.end());
    if (negative_m ? min_m >= 0 : min_m < 0) throw domain_violation("shift draw missed cell");
    return m;
}

std::vector<GaussianRational> draw_base_points(Rng& rng, int count, int bound) {
    for (int attempt = 0; attempt < kScalarRetries; ++attempt) {
        std::vector<GaussianRational> a;
        a.reserve(count);
        bool ok = true;
        for (int i = 0; i < count && ok; ++i) {
            GaussianRational x = random_gaussian(rng, bound);
            for (const auto& y : a) {
                if ((x - y).is_integer()) {
                    ok = false;
                    break;
                }
            }
            a.push_back(std::move(x));
        }
        if (ok) return a;
    }
    // Fallback: distinct fractional parts i/(count+2) make every difference
    // a non-integer, with no rejection needed.
    std::vector<GaussianRational> a;
    a.reserve(count);
    for (int i = 0; i < count; ++i)
        a.emplace_back(Rational(rng.uniform(-bound, bound)) + Rational(i, count + 2));
    return a;
}

} // namespace

ClassicalDualityInstance random_classical_instance(const SuiteConfig& cfg, ClassicalCell cell,
                                                   bool negative_m, Rng& rng) {
    // Feasible ranges for r and p in the requested cell. Cells pinning
    // M >= r need p >= 1; a negative shift with the total still at M needs
    // a second slot to balance it, except when M < r where p = 1 suffices.
    int r_lo = 1;
    switch (cell) {
        case ClassicalCell::m_lt_r:
            break;
        case ClassicalCell::m_eq_r_p_le_r:
            r_lo = negative_m ? 2 : 1;
            break;
        case ClassicalCell::m_eq_r_p_eq_r1:
            break;
        case ClassicalCell::m_eq_r1_p_le_rm1:
            r_lo = negative_m ? 3 : 2;
            break;
        case ClassicalCell::m_eq_r1_p_eq_r:
            r_lo = negative_m ? 2 : 1;
            break;
        case ClassicalCell::m_eq_r1_p_eq_r1:
            break;
    }
    if (r_lo > cfg.r_max)
        throw generation_exhausted("cell " + cell_name(cell) + " infeasible with r_max=" +
                                   std::to_string(cfg.r_max));

    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        try {
            const int r = static_cast<int>(rng.uniform(r_lo, cfg.r_max));
            int p = 0;
            int total = 0;
            const int p_min = negative_m ? 2 : 1;
            switch (cell) {
                case ClassicalCell::m_lt_r:
                    p = static_cast<int>(rng.uniform(negative_m ? 1 : 0, r + 1));
                    total = p == 0 ? 0
                                   : static_cast<int>(rng.uniform(negative_m ? -3 : 0, r - 1));
                    break;
                case ClassicalCell::m_eq_r_p_le_r:
                    p = static_cast<int>(rng.uniform(p_min, r));
                    total = r;
                    break;
                case ClassicalCell::m_eq_r_p_eq_r1:
                    p = r + 1;
                    total = r;
                    break;
                case ClassicalCell::m_eq_r1_p_le_rm1:
                    p = static_cast<int>(rng.uniform(p_min, r - 1));
                    total = r + 1;
                    break;
                case ClassicalCell::m_eq_r1_p_eq_r:
                    p = r;
                    total = r + 1;
                    break;
                case ClassicalCell::m_eq_r1_p_eq_r1:
                    p = r + 1;
                    total = r + 1;
                    break;
            }

            std::vector<int> m = draw_shifts(rng, p, total, negative_m);
            std::vector<GaussianRational> a = draw_base_points(rng, r + 1, cfg.denominator_bound);
            std::vector<GaussianRational> b;
            b.reserve(p);
            for (int j = 0; j < p; ++j) b.push_back(random_gaussian(rng, cfg.denominator_bound));

            ClassicalDualityInstance inst(p, r, std::move(a), std::move(b), std::move(m));
            // Negative shifts can put a pole into some c_i; reject the draw.
            for (int i = 0; i <= inst.r(); ++i) coefficient_c(inst, i);
            return inst;
        } catch (const domain_violation&) {
        } catch (const pole_error&) {
        } catch (const division_by_zero&) {
        }
    }
    throw generation_exhausted("classical cell " + cell_name(cell) +
                               (negative_m ? " (negative m)" : "") + ": attempts exhausted");
}

QDualityInstance random_q_instance(const SuiteConfig& cfg, QCell cell, bool negative_m, Rng& rng) {
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        try {
            const int r = static_cast<int>(rng.uniform(1, cfg.r_max));
            int total = 0;
            switch (cell) {
                case QCell::m_lt_r:
                    total = static_cast<int>(rng.uniform(negative_m ? -3 : 0, r - 1));
                    break;
                case QCell::m_eq_r:
                    total = r;
                    break;
                case QCell::m_eq_r1:
                    total = r + 1;
                    break;
            }
            std::vector<int> m = draw_shifts(rng, r + 1, total, negative_m);

            const long den = rng.uniform(2, std::max(2, cfg.denominator_bound));
            const GaussianRational q(Rational(rng.uniform(1, den - 1), den));

            std::vector<GaussianRational> a, b;
            for (int i = 0; i <= r; ++i) {
                a.push_back(random_nonzero_gaussian(rng, cfg.denominator_bound));
                b.push_back(random_nonzero_gaussian(rng, cfg.denominator_bound));
            }

            int max_abs_m = 0;
            for (int mi : m) max_abs_m = std::max(max_abs_m, std::abs(mi));
            const int bound = cfg.q_exponent_bound > 0 ? cfg.q_exponent_bound
                                                       : cfg.order + max_abs_m + 4;

            QDualityInstance inst(r, q, std::move(a), std::move(b), std::move(m), bound);
            for (int i = 0; i <= inst.r(); ++i) coefficient_c_q(inst, i);
            return inst;
        } catch (const domain_violation&) {
        } catch (const pole_error&) {
        } catch (const division_by_zero&) {
        }
    }
    throw generation_exhausted("q cell " + cell_name(cell) +
                               (negative_m ? " (negative m)" : "") + ": attempts exhausted");
}

std::pair<PointSet, PointMultiset> random_lemma_pair(Rng& rng, int na_lo, int na_hi, int gap,
                                                     int bound) {
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        const int na = static_cast<int>(rng.uniform(na_lo, na_hi));
        const int nb = gap < 0 ? static_cast<int>(rng.uniform(0, na))
                               : std::max(0, na - gap);
        if (na < nb) continue;

        std::vector<GaussianRational> a;
        a.reserve(na);
        bool ok = true;
        for (int i = 0; i < na && ok; ++i) {
            GaussianRational x = random_gaussian(rng, bound);
            for (const auto& y : a) {
                if (x == y) {
                    ok = false;
                    break;
                }
            }
            a.push_back(std::move(x));
        }
        if (!ok) continue;

        PointMultiset B;
        for (int i = 0; i < nb; ++i) B.elements.push_back(random_gaussian(rng, bound));
        return {PointSet(std::move(a)), std::move(B)};
    }
    throw generation_exhausted("lemma pair: attempts exhausted");
}

} // namespace hypdual
