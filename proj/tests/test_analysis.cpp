#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "synczeta/analysis.hpp"
#include "synczeta/companion.hpp"

using namespace synczeta;

namespace {

const HomologyData kTorusData{{{0, IntMat::from_longs({{1}})},
                               {1, IntMat::from_longs({{2, 0}, {0, 3}})},
                               {2, IntMat::from_longs({{6}})}}};

CountSequence interval_candidate_counts(std::size_t n_max) {
    // c_n = 5^n + t_n with t_n = tr(M^n) for the companion of z^2 - 4z + 32,
    // whose conjugate roots have modulus sqrt(32) > 5 and an irrational angle.
    std::vector<BigInt> t{BigInt(4), BigInt(-48)};
    while (t.size() < n_max)
        t.push_back(4 * t[t.size() - 1] - 32 * t[t.size() - 2]);
    std::vector<BigInt> values;
    for (std::size_t n = 1; n <= n_max; ++n)
        values.push_back(pow_int(BigInt(5), n) + t[n - 1]);
    return CountSequence::synthetic(values);
}

}  // namespace

TEST_CASE("growth estimates") {
    SECTION("counts 2^n - 1 approach 2") {
        const GrowthReport g = growth_estimate(counts_circle_power({2, 1}, 64));
        CHECK(std::abs(g.upper - 2.0) <= 0.05);
        CHECK(std::abs(g.lower - 2.0) <= 0.05);
        CHECK(g.lower <= g.upper);
        CHECK(g.window_begin == 33);
        CHECK(g.window_end == 64);
    }
    SECTION("constant counts drift to 1") {
        const GrowthReport g = growth_estimate(counts_finite_maps({{0, 1, 2, 3, 4},
                                                                   {0, 1, 2, 3, 4}}, 64));
        CHECK(std::abs(g.upper - 1.0) <= 0.06);
        CHECK(g.lower >= 1.0);
    }
    SECTION("the all-zero sequence is degenerate") {
        const GrowthReport g =
            growth_estimate(CountSequence::synthetic(std::vector<BigInt>(16, BigInt(0))));
        CHECK(g.degenerate);
        CHECK(g.zero_indices == 8);
    }
    SECTION("zeros are excluded but counted") {
        const GrowthReport g = growth_estimate(counts_finite_maps({{1, 2, 0}, {0, 1, 2}}, 64));
        CHECK(g.zero_indices > 0);
        CHECK(std::abs(g.upper - 1.0) <= 0.06);
    }
}

TEST_CASE("exact growth rates") {
    SECTION("diagonal toral pairs") {
        CHECK(growth_exact_toral({IntMat::from_longs({{3, 0}, {0, 1}}),
                                  IntMat::from_longs({{2, 0}, {0, 5}})}) == BigRat(15));
        CHECK(growth_exact_toral({IntMat::from_longs({{2}}), IntMat::from_longs({{1}})}) ==
              BigRat(2));
        CHECK_THROWS_AS(growth_exact_toral({IntMat::from_longs({{2, 0}, {0, 3}}),
                                            IntMat::from_longs({{-2, 0}, {0, 5}})}),
                        HypothesisViolated);
        CHECK_THROWS_AS(growth_exact_toral({IntMat::from_longs({{2, 1}, {1, 1}}),
                                            IntMat::identity(2)}),
                        HypothesisViolated);
    }
    SECTION("S-integer pairs, including the ratio case") {
        CHECK(growth_exact_s_integer({BigInt(6), BigInt(3), {3}}) == BigRat(2));  // 6/3
        CHECK(growth_exact_s_integer({BigInt(3), BigInt(2), {2, 3}}) == BigRat(3));
        CHECK(growth_exact_circle({2, 1}) == BigRat(2));
        CHECK(growth_exact_circle({-7, 3}) == BigRat(7));
    }
    SECTION("estimates bracket the exact value for random diagonal pairs") {
        std::mt19937_64 rng(606);
        std::uniform_int_distribution<long> entry(1, 5);
        std::uniform_int_distribution<int> sgn(0, 1);
        int done = 0;
        while (done < 20) {
            IntMat a(2, 2), b(2, 2);
            bool ok = true;
            for (std::size_t i = 0; i < 2; ++i) {
                long x = entry(rng), y = entry(rng);
                if (x == y) {
                    ok = false;
                    break;
                }
                a.at(i, i) = sgn(rng) ? x : -x;
                b.at(i, i) = sgn(rng) ? y : -y;
            }
            if (!ok) continue;
            const ToralPair m{a, b};
            const BigRat exact = growth_exact_toral(m);
            const GrowthReport g = growth_estimate(counts_toral(m, 64));
            const double e = static_cast<double>(exact);
            CHECK(std::abs(g.upper - e) / e <= 0.05);
            CHECK(std::abs(g.lower - e) / e <= 0.05);
            ++done;
        }
    }
    SECTION("dispatcher") {
        CHECK(growth_exact(DynModel(CirclePower{3, 2})) == BigRat(3));
        CHECK(growth_exact(DynModel(SIntegerPair{BigInt(6), BigInt(3), {3}})) == BigRat(2));
        CHECK_FALSE(growth_exact(DynModel(ToralPair{IntMat::from_longs({{2, 1}, {1, 1}}),
                                                    IntMat::identity(2)}))
                        .has_value());
        CHECK_FALSE(growth_exact(DynModel(Subshift{IntMat::identity(2)})).has_value());
    }
}

TEST_CASE("Gauss and Euler congruences") {
    SECTION("counts 2^n - 1 pass through n = 60") {
        CHECK(gauss_congruence_check(counts_circle_power({2, 1}, 60), 60).empty());
    }
    SECTION("traces of powers of random integer matrices pass") {
        std::mt19937_64 rng(11);
        std::uniform_int_distribution<long> entry(-5, 5);
        std::uniform_int_distribution<std::size_t> dim(1, 3);
        for (int trial = 0; trial < 12; ++trial) {
            const std::size_t d = dim(rng);
            IntMat m(d, d);
            for (std::size_t i = 0; i < d; ++i)
                for (std::size_t j = 0; j < d; ++j) m.at(i, j) = entry(rng);
            std::vector<BigInt> traces;
            IntMat acc = IntMat::identity(d);
            for (std::size_t n = 1; n <= 60; ++n) {
                acc = acc * m;
                traces.push_back(acc.trace());
            }
            CHECK(gauss_congruence_check(traces, 60).empty());
        }
    }
    SECTION("the synthetic counterexample c_n = n fails at n = 4") {
        std::vector<BigInt> values;
        for (long n = 1; n <= 8; ++n) values.emplace_back(n);
        const auto failures = gauss_congruence_check(values, 8);
        REQUIRE_FALSE(failures.empty());
        bool flagged_at_4 = false;
        for (const auto& [n, residue] : failures)
            if (n == 4) {
                flagged_at_4 = true;
                CHECK(residue == 2);  // mu(1)*4 + mu(2)*2 = 2
            }
        CHECK(flagged_at_4);
    }
    SECTION("Euler residues vanish for rational-zeta counts") {
        const CountSequence c = counts_circle_power({2, 1}, 27);
        const auto residues = euler_congruence_check(c, 3, 3);
        REQUIRE(residues.size() == 3);
        for (const auto& r : residues) CHECK(r == 0);
        // (2^9 - 1) - (2^3 - 1) = 504 = 56 * 9
        CHECK((BigInt(511 - 7)) % 9 == 0);
    }
    SECTION("constant counts always pass the Euler check") {
        for (const auto& r : euler_congruence_check(std::vector<BigInt>(16, BigInt(7)), 2, 4))
            CHECK(r == 0);
    }
    SECTION("golden mean subshift passes both checks through n = 60") {
        const auto rep = congruence_report(counts_subshift({IntMat::from_longs({{1, 1}, {1, 0}})},
                                                           60).values(), 60);
        CHECK(rep.failures.empty());
        CHECK(rep.euler_failures.empty());
    }
    SECTION("Lefschetz numbers obey the same congruences") {
        CHECK(gauss_congruence_check(lefschetz_counts(kTorusData, 60), 60).empty());
    }
    SECTION("the solenoid counts satisfy the congruences on the window (observed)") {
        CHECK(gauss_congruence_check(counts_s_integer({BigInt(6), BigInt(3), {3}}, 60), 60).empty());
    }
    SECTION("the non-rational involution pair fails at n = 2") {
        const auto failures =
            gauss_congruence_check(counts_finite_maps({{0, 2, 1}, {1, 0, 2}}, 8), 8);
        REQUIRE_FALSE(failures.empty());
        CHECK(failures[0].first == 2);
    }
}

TEST_CASE("asymptotic trichotomy") {
    SECTION("counts 2^n - 1: periodic limit set {1} with period 1") {
        const TrichotomyVerdict v = trichotomy_classify(counts_circle_power({2, 1}, 64));
        CHECK(v.kind == TrichotomyVerdict::Case::PeriodicLimitSet);
        CHECK(v.period == 1);
        REQUIRE(v.limit_values.size() == 1);
        CHECK(v.limit_values[0] == Catch::Approx(1.0).margin(1e-9));
    }
    SECTION("all-zero counts") {
        const TrichotomyVerdict v =
            trichotomy_classify(CountSequence::synthetic(std::vector<BigInt>(64, BigInt(0))));
        CHECK(v.kind == TrichotomyVerdict::Case::AllZero);
    }
    SECTION("3-cycle counts: period 3, limit values 3, 0, 0") {
        const TrichotomyVerdict v =
            trichotomy_classify(counts_finite_maps({{1, 2, 0}, {0, 1, 2}}, 64));
        CHECK(v.kind == TrichotomyVerdict::Case::PeriodicLimitSet);
        CHECK(v.period == 3);
        REQUIRE(v.limit_values.size() == 3);
        CHECK(v.limit_values[0] == Catch::Approx(3.0).margin(1e-7));
        CHECK(v.limit_values[1] == Catch::Approx(0.0).margin(1e-7));
        CHECK(v.limit_values[2] == Catch::Approx(0.0).margin(1e-7));
    }
    SECTION("a dominant non-cyclotomic pair is an interval candidate") {
        const TrichotomyVerdict v = trichotomy_classify(interval_candidate_counts(64));
        CHECK(v.kind == TrichotomyVerdict::Case::IntervalCandidate);
        CHECK(v.search_bound == 360);
        CHECK(v.certified);
        CHECK(v.dominant_factor == IntPoly{BigInt(32), BigInt(-4), BigInt(1)});
    }
    SECTION("the unscaled quadratic divides no z^k - 1 with k <= 360") {
        const IntPoly quad{BigInt(2), BigInt(-1), BigInt(1)};  // z^2 - z + 2
        for (std::size_t k = 1; k <= 360; ++k) CHECK_FALSE(divides(quad, cyclotomic_span(k)));
    }
    SECTION("non-rational zeta is refused") {
        CHECK_THROWS_AS(trichotomy_classify(counts_s_integer({BigInt(6), BigInt(3), {3}}, 64)),
                        RequiresRationalZeta);
    }
    SECTION("convergence witness: scaled errors decrease along the window") {
        const CountSequence c = counts_circle_power({2, 1}, 64);
        const TrichotomyVerdict v = trichotomy_classify(c);
        REQUIRE(v.kind == TrichotomyVerdict::Case::PeriodicLimitSet);
        double prev = 1e9;
        for (std::size_t n = 8; n <= 64; n += v.period == 0 ? 1 : v.period) {
            const double err = std::abs(static_cast<double>(BigRat(c.at(n))) / std::pow(2.0, n) -
                                        v.limit_values[n % v.period]);
            CHECK(err <= prev + 1e-12);
            prev = err;
        }
    }
}

TEST_CASE("entropy cross-check") {
    SECTION("Fibonacci-squared pair against the identity") {
        const EntropyCheck e =
            entropy_cross_check({IntMat::from_longs({{2, 1}, {1, 1}}), IntMat::identity(2)});
        CHECK(e.exp_h == Catch::Approx((3.0 + std::sqrt(5.0)) / 2.0).epsilon(1e-9));
        CHECK(e.agree);
        CHECK(std::abs(e.s_infty - e.exp_h) / e.exp_h <= 0.05);
    }
    SECTION("B a root of A") {
        const IntMat b = IntMat::from_longs({{1, 1}, {1, 0}});
        const EntropyCheck e = entropy_cross_check({b * b, b});
        CHECK(e.exp_h == Catch::Approx((1.0 + std::sqrt(5.0)) / 2.0).epsilon(1e-9));
        CHECK(e.agree);
    }
    SECTION("degenerate and invalid inputs") {
        const IntMat fib = IntMat::from_longs({{2, 1}, {1, 1}});
        CHECK_THROWS_AS(entropy_cross_check({fib, fib}), NotTame);
        CHECK_THROWS_AS(entropy_cross_check({IntMat::from_longs({{1, 1}, {0, 1}}),
                                             IntMat::from_longs({{1, 0}, {1, 1}})}),
                        NotCommuting);
        CHECK_THROWS_AS(entropy_cross_check({fib, IntMat::from_longs({{2, 0}, {0, 2}})}),
                        HypothesisViolated);
        // periodic rotation: A^4 = I makes the counts non-tame before anything else
        CHECK_THROWS_AS(entropy_cross_check({IntMat::from_longs({{0, -1}, {1, 0}}),
                                             IntMat::identity(2)}),
                        NotTame);
        // Salem-type companion: tame counts but a unit-circle eigenvalue pair
        const IntPoly salem{BigInt(1), BigInt(-1), BigInt(-1), BigInt(-1), BigInt(1)};
        CHECK_THROWS_AS(entropy_cross_check({companion(salem).matrix, IntMat::identity(4)}),
                        NotHyperbolic);
    }
}

TEST_CASE("Lefschetz zeta functions") {
    SECTION("torus data gives (1-2z)(1-3z)/((1-z)(1-6z))") {
        const RationalFunction l = lefschetz_zeta(kTorusData);
        CHECK(l == RationalFunction(IntPoly{BigInt(1), BigInt(-5), BigInt(6)},
                                    IntPoly{BigInt(1), BigInt(-7), BigInt(6)}));
    }
    SECTION("a single fixed class gives 1/(1-z)") {
        CHECK(lefschetz_zeta(HomologyData{{{0, IntMat::from_longs({{1}})}}}) ==
              RationalFunction(IntPoly::one(), IntPoly{BigInt(1), BigInt(-1)}));
    }
    SECTION("circle with a degree-2 map gives (1-2z)/(1-z)") {
        const HomologyData h{{{0, IntMat::from_longs({{1}})}, {1, IntMat::from_longs({{2}})}}};
        CHECK(lefschetz_zeta(h) ==
              RationalFunction(IntPoly{BigInt(1), BigInt(-2)}, IntPoly{BigInt(1), BigInt(-1)}));
    }
    SECTION("expansion matches the exp-series of the Lefschetz numbers when positive") {
        const auto l = lefschetz_counts(kTorusData, 16);
        for (const auto& v : l) CHECK(v > 0);
        CHECK(lefschetz_zeta(kTorusData).expand(16) == zeta_series_signed(l));
    }
}

TEST_CASE("sign relation for hyperbolic matrices") {
    SECTION("listed examples") {
        const SignRelation a = nilpotent_sign_relation(IntMat::from_longs({{2, 0}, {0, 3}}));
        CHECK(a.p == 0);
        CHECK(a.r == 2);
        CHECK(a.check);
        const SignRelation b = nilpotent_sign_relation(IntMat::from_longs({{-2}}));
        CHECK(b.p == 1);
        CHECK(b.r == 1);
        CHECK(b.check);
        const SignRelation c = nilpotent_sign_relation(IntMat::from_longs({{2}}));
        CHECK(c.p == 0);
        CHECK(c.r == 1);
        CHECK(c.check);
    }
    SECTION("rotation matrices are rejected") {
        CHECK_THROWS_AS(nilpotent_sign_relation(IntMat::from_longs({{0, -1}, {1, 0}})),
                        NotHyperbolic);
    }
    SECTION("50 random hyperbolic integer matrices pass the exact sign check") {
        std::mt19937_64 rng(90210);
        std::uniform_int_distribution<long> entry(-3, 3);
        std::uniform_int_distribution<std::size_t> dim(1, 3);
        int done = 0;
        while (done < 50) {
            const std::size_t d = dim(rng);
            IntMat f(d, d);
            for (std::size_t i = 0; i < d; ++i)
                for (std::size_t j = 0; j < d; ++j) f.at(i, j) = entry(rng);
            try {
                const SignRelation sr = nilpotent_sign_relation(f);
                CHECK(sr.check);
                ++done;
            } catch (const NotHyperbolic&) {
            }
        }
    }
}

TEST_CASE("torsion special values") {
    SECTION("torus data at lambda = -1 gives exactly 7/6") {
        const TorsionValue t = torsion_special_value(kTorusData, BigRat(-1));
        REQUIRE(t.exact.has_value());
        CHECK(*t.exact == make_rat(7, 6));
        CHECK(t.tau == Catch::Approx(7.0 / 6.0).epsilon(1e-12));
    }
    SECTION("single fixed class at lambda = -1 gives 2") {
        const TorsionValue t =
            torsion_special_value(HomologyData{{{0, IntMat::from_longs({{1}})}}}, BigRat(-1));
        REQUIRE(t.exact.has_value());
        CHECK(*t.exact == BigRat(2));
    }
    SECTION("lambda = i on the torus data") {
        const TorsionValue t = torsion_special_value(kTorusData, std::complex<double>(0.0, 1.0));
        // |(1-i)(1-6i)| / |(1-2i)(1-3i)| = sqrt(74/50)
        CHECK(t.tau == Catch::Approx(std::sqrt(74.0 / 50.0)).margin(1e-12));
    }
    SECTION("poles and zeros of the zeta are undefined points") {
        CHECK_THROWS_AS(torsion_special_value(kTorusData, BigRat(1)), TorsionUndefined);
        const HomologyData zero_at_minus_one{
            {{1, IntMat::from_longs({{-1}})}}};  // L = 1 + z vanishes at -1
        CHECK_THROWS_AS(torsion_special_value(zero_at_minus_one, BigRat(-1)), TorsionUndefined);
        CHECK_THROWS_AS(torsion_special_value(kTorusData, BigRat(2)), Error);
    }
    SECTION("bundled report") {
        const TorsionReport rep = torsion_report(kTorusData, {std::complex<double>(0.0, 1.0)});
        CHECK(rep.p == 0);
        CHECK(rep.r == 2);
        CHECK(rep.sign_check);
        REQUIRE(rep.tau_values.size() == 2);
        CHECK(*rep.tau_values[0].exact == make_rat(7, 6));
    }
}
