#include "hypdual/duality_q.hpp"
#include "hypdual/errors.hpp"
#include "hypdual/generator.hpp"
#include "hypdual/pochhammer.hpp"

#include <doctest.h>

using namespace hypdual;

namespace {

GaussianRational gr(long num, long den) { return GaussianRational(Rational(num, den)); }

QDualityInstance case_m_eq_r() {
    // r=1, q=1/2, a=(1,3), b=(1/5,1/7), m=(1,0): M = 1 = r
    return {1, gr(1, 2), {GaussianRational(1), GaussianRational(3)}, {gr(1, 5), gr(1, 7)}, {1, 0}};
}

QDualityInstance case_m_lt_r() {
    return {1, gr(1, 2), {GaussianRational(1), GaussianRational(3)}, {gr(1, 5), gr(1, 7)}, {0, 0}};
}

QDualityInstance case_m_eq_r1() {
    return {1, gr(1, 2), {GaussianRational(1), GaussianRational(3)}, {gr(1, 5), gr(1, 7)}, {1, 1}};
}

} // namespace

TEST_CASE("q instance invariants and derived quantities") {
    const QDualityInstance inst = case_m_eq_r();
    CHECK(inst.shift_total() == 1);
    CHECK(inst.shift_total_2() == 1);
    // w = q^{-1} (b_1/a_1)(b_2/a_2) = 2 * (1/5) * (1/21) = 2/105
    CHECK(inst.w() == gr(2, 105));
    CHECK(inst.alpha() == GaussianRational(4));
    CHECK(inst.beta() == gr(12, 35));
    // C = 4 - (1/5) q^{-1} - (1/7) q^{0} = 4 - 2/5 - 1/7 = 121/35
    CHECK(inst.closed_form_constant() == gr(121, 35));
    CHECK(inst.m_hat() == 0);

    // |q| >= 1 rejected
    CHECK_THROWS_AS(QDualityInstance(1, GaussianRational(1),
                                     {GaussianRational(1), GaussianRational(3)},
                                     {gr(1, 5), gr(1, 7)}, {1, 0}),
                    domain_violation);
    CHECK_THROWS_AS(QDualityInstance(1, gr(3, 5) + GaussianRational(Rational(0), Rational(4, 5)),
                                     {GaussianRational(1), GaussianRational(3)},
                                     {gr(1, 5), gr(1, 7)}, {1, 0}),
                    domain_violation);
    // q = 0 rejected
    CHECK_THROWS_AS(QDualityInstance(1, GaussianRational(0),
                                     {GaussianRational(1), GaussianRational(3)},
                                     {gr(1, 5), gr(1, 7)}, {1, 0}),
                    domain_violation);
    // a_i / a_j = q^e rejected: a = (1, 4), q = 1/2, 1/4 = q^2
    CHECK_THROWS_AS(QDualityInstance(1, gr(1, 2), {GaussianRational(1), GaussianRational(4)},
                                     {gr(1, 5), gr(1, 7)}, {1, 0}),
                    domain_violation);
    // zero a_i or b_i rejected
    CHECK_THROWS_AS(QDualityInstance(1, gr(1, 2), {GaussianRational(0), GaussianRational(3)},
                                     {gr(1, 5), gr(1, 7)}, {1, 0}),
                    domain_violation);
}

TEST_CASE("q duality coefficients") {
    CHECK(coefficient_c_q(case_m_eq_r(), 0) == gr(-3, 10));

    // all m_j = 0: c_i = 1 / prod_{j != i} (a_i - a_j)
    const QDualityInstance zeros = case_m_lt_r();
    CHECK(coefficient_c_q(zeros, 0) == gr(-1, 2));
    CHECK(coefficient_c_q(zeros, 1) == gr(1, 2));

    // flipping one shift's parity flips the overall sign factor (-1)^M
    const QDualityInstance even = case_m_eq_r1();
    CHECK(even.shift_total() % 2 == 0);
    CHECK(case_m_eq_r().shift_total() % 2 == 1);
}

TEST_CASE("G matches the closed form on the worked cases") {
    // M = r: 1/(1-z)
    const TruncatedSeries ones = build_G(case_m_eq_r(), 6);
    for (int k = 0; k <= 6; ++k) CHECK(ones.coeff(k) == GaussianRational(1));

    // M < r: zero
    CHECK(build_G(case_m_lt_r(), 6).is_zero());

    // M = r+1: coeffs[k] = (C - (q alpha - beta) q^k) / (1-q)
    const QDualityInstance top = case_m_eq_r1();
    const TruncatedSeries lin = build_G(top, 6);
    const GaussianRational q = top.q();
    const GaussianRational residue = q * top.alpha() - top.beta();
    const GaussianRational scale = (GaussianRational(1) - q).inv();
    for (int k = 0; k <= 6; ++k) {
        CHECK(lin.coeff(k) ==
              (top.closed_form_constant() - residue * integer_power(q, k)) * scale);
    }

    // N=0: the constant term must equal the k=0 predicted sum
    const TruncatedSeries tiny = build_G(case_m_eq_r(), 0);
    auto [A, B] = proof_sets_q(case_m_eq_r(), 0);
    CHECK(tiny.coeff(0) == predicted_sum(A, B));
}

TEST_CASE("expected_G case dispatch") {
    CHECK(expected_G(case_m_lt_r(), 5).is_zero());
    CHECK(case_label(case_m_lt_r()) == "M<r");

    const TruncatedSeries geo = expected_G(case_m_eq_r(), 5);
    for (int k = 0; k <= 5; ++k) CHECK(geo.coeff(k) == GaussianRational(1));
    CHECK(case_label(case_m_eq_r()) == "M=r");

    CHECK(case_label(case_m_eq_r1()) == "M=r+1");

    const QDualityInstance over(1, gr(1, 2), {GaussianRational(1), GaussianRational(3)},
                                {gr(1, 5), gr(1, 7)}, {2, 1});
    CHECK_THROWS_AS(expected_G(over, 5), case_out_of_range);
}

TEST_CASE("verify: exact match and negative-shift regime") {
    const std::vector<QDualityInstance> insts{case_m_eq_r(), case_m_lt_r(), case_m_eq_r1()};
    for (const auto& inst : insts) {
        const VerificationReport rep = verify_q(inst, 8);
        CHECK(rep.match);
        CHECK(rep.mod_degree == 0);
        CHECK(rep.mismatches.empty());
    }

    // m = (-1, 2): M = 1 = r, closed form 1/(1-z) modulo P_1
    const QDualityInstance neg(1, gr(1, 2), {GaussianRational(1), GaussianRational(3)},
                               {gr(1, 5), gr(1, 7)}, {-1, 2});
    CHECK(neg.m_hat() == -1);
    const VerificationReport rep = verify_q(neg, 8);
    CHECK(rep.match);
    CHECK(rep.mod_degree == 1);
    REQUIRE(rep.boundary_match.has_value());
    CHECK(*rep.boundary_match);
}

TEST_CASE("q proof sets") {
    // k=0, all m=0: A = {a_i}, B empty
    auto [A0, B0] = proof_sets_q(case_m_lt_r(), 0);
    CHECK(A0.size() == 2);
    CHECK(B0.size() == 0);

    // r=1, k=2: |A| = 6; |B| = M + (r+1)k
    auto [A1, B1] = proof_sets_q(case_m_eq_r(), 2);
    CHECK(A1.size() == 6);
    CHECK(B1.size() == case_m_eq_r().shift_total() + 2 * 2);

    // m_1 = 2 contributes b_1 q^{-2}, b_1 q^{-1} at k=0
    const QDualityInstance deep(1, gr(1, 2), {GaussianRational(1), GaussianRational(3)},
                                {gr(1, 5), gr(1, 7)}, {2, 0});
    auto [A2, B2] = proof_sets_q(deep, 0);
    REQUIRE(B2.size() == 2);
    CHECK(B2.elements[0] == gr(4, 5));
    CHECK(B2.elements[1] == gr(2, 5));
}

TEST_CASE("q gamma closed form equals the partial-fraction oracle") {
    const QDualityInstance base = case_m_eq_r();
    for (int i = 0; i <= base.r(); ++i)
        CHECK(gamma_ijk_q(base, i, 0, 0) == coefficient_c_q(base, i));

    Rng rng(97);
    SuiteConfig cfg;
    cfg.denominator_bound = 6;
    cfg.r_max = 2;
    for (QCell cell : kQCells) {
        for (bool negative_m : {false, true}) {
            QDualityInstance inst = random_q_instance(cfg, cell, negative_m, rng);
            const int k_lo = inst.mod_degree();
            for (int k = k_lo; k <= k_lo + 2; ++k) {
                auto [A, B] = proof_sets_q(inst, k);
                for (int i = 0; i <= inst.r(); ++i) {
                    for (int j = 0; j <= k; ++j) {
                        CHECK(gamma_ijk_q(inst, i, j, k) ==
                              gamma_coeff(inst.a()[i] * integer_power(inst.q(), j), A, B));
                    }
                }
            }
        }
    }
    CHECK_THROWS_AS(gamma_ijk_q(base, 0, 3, 2), domain_violation);
}

TEST_CASE("q coefficient identity and oracle chain") {
    Rng rng(101);
    SuiteConfig cfg;
    cfg.denominator_bound = 6;
    cfg.r_max = 2;
    for (QCell cell : kQCells) {
        QDualityInstance inst = random_q_instance(cfg, cell, false, rng);
        const TruncatedSeries built = build_G(inst, 4);
        for (int k = 0; k <= 4; ++k) {
            GaussianRational gamma_total;
            for (int i = 0; i <= inst.r(); ++i)
                for (int j = 0; j <= k; ++j) gamma_total += gamma_ijk_q(inst, i, j, k);
            auto [A, B] = proof_sets_q(inst, k);
            const GaussianRational direct = derangement_sum(A, B);
            CHECK(gamma_total == built.coeff(k));
            CHECK(gamma_total == direct);
            CHECK(direct == predicted_sum(A, B));
        }
    }
}

TEST_CASE("weighted proof-set sums reproduce the M = r+1 coefficients") {
    Rng rng(103);
    SuiteConfig cfg;
    cfg.denominator_bound = 6;
    cfg.r_max = 2;
    QDualityInstance inst = random_q_instance(cfg, QCell::m_eq_r1, false, rng);
    const GaussianRational q = inst.q();
    const GaussianRational scale = (GaussianRational(1) - q).inv();
    const GaussianRational residue = q * inst.alpha() - inst.beta();
    for (int k = 0; k <= 5; ++k) {
        auto [A, B] = proof_sets_q(inst, k);
        GaussianRational s_k;
        for (const auto& x : A.elements()) s_k += x;
        for (const auto& y : B.elements) s_k -= y;
        CHECK(s_k == (inst.closed_form_constant() - residue * integer_power(q, k)) * scale);
        CHECK(s_k == expected_G(inst, 5).coeff(k));
    }
}

TEST_CASE("q instance json round-trip") {
    const QDualityInstance inst = case_m_eq_r();
    const QDualityInstance back = QDualityInstance::from_json(inst.to_json());
    CHECK(back.r() == inst.r());
    CHECK(back.q() == inst.q());
    CHECK(back.a() == inst.a());
    CHECK(back.b() == inst.b());
    CHECK(back.m() == inst.m());
    CHECK_THROWS_AS(QDualityInstance::from_json(nlohmann::json::parse("{\"r\":1}")), parse_error);
}
