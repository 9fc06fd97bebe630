#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "synczeta/arith.hpp"
#include "synczeta/companion.hpp"
#include "synczeta/intmat.hpp"
#include "synczeta/power_series.hpp"
#include "synczeta/rational_function.hpp"
#include "synczeta/recurrence.hpp"

using namespace synczeta;

namespace {

PowerSeries dirichlet_weighted(const std::vector<long>& counts) {
    PowerSeries s(counts.size());
    for (std::size_t n = 1; n <= counts.size(); ++n)
        s.set(n, make_rat(BigInt(counts[n - 1]), BigInt(static_cast<long>(n))));
    return s;
}

}  // namespace

TEST_CASE("mobius values and inversion identity") {
    CHECK(mobius(1) == 1);
    CHECK(mobius(4) == 0);
    CHECK(mobius(30) == -1);  // 30 = 2*3*5, three distinct primes
    CHECK(mobius(2) == -1);
    CHECK(mobius(6) == 1);
    CHECK_THROWS_AS(mobius(0), Error);

    for (std::uint64_t n = 1; n <= 1000; ++n) {
        long acc = 0;
        for (auto d : divisors(n)) acc += mobius(d);
        CHECK(acc == (n == 1 ? 1 : 0));
    }
}

TEST_CASE("series_exp on weighted count series") {
    SECTION("geometric counts 2^n give 1/(1-2z)") {
        PowerSeries s(4);
        for (std::size_t n = 1; n <= 4; ++n)
            s.set(n, make_rat(pow_int(BigInt(2), n), BigInt(static_cast<long>(n))));
        const PowerSeries e = series_exp(s);
        const std::vector<long> want{1, 2, 4, 8, 16};
        for (std::size_t k = 0; k <= 4; ++k) CHECK(e[k] == BigRat(want[k]));
    }
    SECTION("zero series maps to the constant 1") {
        const PowerSeries e = series_exp(PowerSeries(5));
        CHECK(e[0] == 1);
        for (std::size_t k = 1; k <= 5; ++k) CHECK(e[k] == 0);
    }
    SECTION("counts 2^n - 1 give (1-z)/(1-2z)") {
        const PowerSeries e = series_exp(dirichlet_weighted({1, 3, 7}));
        const PowerSeries want = expand_fraction(RatPoly{BigRat(1), BigRat(-1)},
                                                 RatPoly{BigRat(1), BigRat(-2)}, 3);
        CHECK(e == want);
        CHECK(e[2] == 2);
        CHECK(e[3] == 4);
    }
    SECTION("nonzero constant term is rejected") {
        PowerSeries s(3);
        s.set(0, BigRat(1));
        CHECK_THROWS_AS(series_exp(s), ConstantTermNonzero);
    }
}

TEST_CASE("series_exp inverts series_log") {
    std::mt19937_64 rng(20240811);
    std::uniform_int_distribution<long> num(-6, 6);
    std::uniform_int_distribution<long> den(1, 5);
    for (int trial = 0; trial < 25; ++trial) {
        PowerSeries s(12);
        s.set(0, BigRat(1));
        for (std::size_t k = 1; k <= 12; ++k) s.set(k, make_rat(num(rng), den(rng)));
        CHECK(series_exp(series_log(s)) == s);
    }
}

TEST_CASE("series inverse") {
    const PowerSeries inv = series_inverse(series_from_poly(RatPoly{BigRat(1), BigRat(-2)}, 6));
    for (std::size_t k = 0; k <= 6; ++k) CHECK(inv[k] == BigRat(pow_int(BigInt(2), k)));
    CHECK_THROWS_AS(series_inverse(PowerSeries(3)), Error);
}

TEST_CASE("find_recurrence recovers minimal characteristic polynomials") {
    SECTION("c_{n+2} = c_{n+1} + 2 c_n") {
        std::vector<BigRat> v{BigRat(1), BigRat(3)};
        while (v.size() < 24) v.push_back(v[v.size() - 1] + BigRat(2) * v[v.size() - 2]);
        // substitution oracle on the raw values
        for (std::size_t i = 2; i < v.size(); ++i) CHECK(v[i] == v[i - 1] + BigRat(2) * v[i - 2]);
        const auto p = find_recurrence(v, 4);
        REQUIRE(p.has_value());
        CHECK(*p == IntPoly{BigInt(-2), BigInt(-1), BigInt(1)});  // z^2 - z - 2
    }
    SECTION("constant sequence") {
        const auto p = find_recurrence(std::vector<BigRat>(20, BigRat(5)), 3);
        REQUIRE(p.has_value());
        CHECK(*p == IntPoly{BigInt(-1), BigInt(1)});  // z - 1
    }
    SECTION("geometric sequence") {
        std::vector<BigRat> v;
        for (std::size_t n = 0; n < 20; ++n) v.emplace_back(pow_int(BigInt(2), n));
        const auto p = find_recurrence(v, 3);
        REQUIRE(p.has_value());
        CHECK(*p == IntPoly{BigInt(-2), BigInt(1)});  // z - 2
    }
    SECTION("order bound is respected") {
        // c_n = n^2 + 2^n needs order 4 (roots 2 and a triple 1).
        std::vector<BigRat> v;
        for (long n = 0; n < 30; ++n) v.emplace_back(BigInt(n * n) + pow_int(BigInt(2), n));
        CHECK_FALSE(find_recurrence(v, 3).has_value());
        const auto p = find_recurrence(v, 5);
        REQUIRE(p.has_value());
        CHECK(p->degree() == 4);
        // (z-2)(z-1)^3
        CHECK(*p == to_int(to_rat(IntPoly{BigInt(-2), BigInt(1)}) *
                           to_rat(IntPoly{BigInt(-1), BigInt(1)}) *
                           to_rat(IntPoly{BigInt(-1), BigInt(1)}) *
                           to_rat(IntPoly{BigInt(-1), BigInt(1)})));
    }
    SECTION("insufficient data is an error") {
        CHECK_THROWS_AS(find_recurrence(std::vector<BigRat>(10, BigRat(1)), 4), NeedMoreTerms);
        try {
            find_recurrence(std::vector<BigRat>(10, BigRat(1)), 4);
        } catch (const NeedMoreTerms& e) {
            CHECK(e.required == 16);
        }
    }
}

TEST_CASE("pade_reconstruct matches the full series or reports absence") {
    SECTION("(1-z)/(1-2z) at degrees (1,1)") {
        const RationalFunction f(IntPoly{BigInt(1), BigInt(-1)}, IntPoly{BigInt(1), BigInt(-2)});
        const auto got = pade_reconstruct(f.expand(12), 1, 1);
        REQUIRE(got.has_value());
        CHECK(*got == f);
    }
    SECTION("exp(z) admits no (2,2) form") {
        PowerSeries s(12);
        BigRat fact(1);
        s.set(0, BigRat(1));
        for (std::size_t k = 1; k <= 12; ++k) {
            fact *= BigRat(static_cast<long>(k));
            s.set(k, BigRat(1) / fact);
        }
        CHECK_FALSE(pade_reconstruct(s, 2, 2).has_value());
    }
    SECTION("(1-z^2)^{-3/2} admits no small rational form") {
        PowerSeries s(40);
        BigRat a(1);
        s.set(0, a);
        for (std::size_t k = 1; 2 * k <= 40; ++k) {
            a *= make_rat(2 * static_cast<long>(k) + 1, 2 * static_cast<long>(k));
            s.set(2 * k, a);
        }
        CHECK(s[2] == make_rat(3, 2));
        CHECK(s[4] == make_rat(15, 8));
        for (std::size_t dn = 0; dn <= 6; ++dn)
            for (std::size_t dd = 0; dd <= 6; ++dd)
                CHECK_FALSE(pade_reconstruct(s, dn, dd).has_value());
        // The same conclusion on a shorter window where the margin allows.
        const PowerSeries s16 = s.truncated(16);
        for (std::size_t dn = 0; dn <= 6; ++dn)
            for (std::size_t dd = 0; dd <= 6; ++dd)
                if (dn + dd + kVerificationMargin <= 16)
                    CHECK_FALSE(pade_reconstruct(s16, dn, dd).has_value());
    }
    SECTION("short series violates the precondition") {
        CHECK_THROWS_AS(pade_reconstruct(PowerSeries(10), 2, 2), NeedMoreTerms);
    }
    SECTION("random Fatou-normal functions round-trip") {
        std::mt19937_64 rng(7);
        std::uniform_int_distribution<long> coef(-4, 4);
        std::uniform_int_distribution<int> deg(0, 6);
        for (int trial = 0; trial < 30; ++trial) {
            std::vector<BigInt> nc{BigInt(coef(rng))}, dc{BigInt(1)};
            const int dn = deg(rng), dd = deg(rng);
            for (int i = 0; i < dn; ++i) nc.emplace_back(coef(rng));
            for (int i = 0; i < dd; ++i) dc.emplace_back(coef(rng));
            const RationalFunction f{IntPoly(nc), IntPoly(dc)};
            const auto got = pade_reconstruct(f.expand(40), 6, 6);
            REQUIRE(got.has_value());
            CHECK(*got == f);
        }
    }
}

TEST_CASE("companion matrices") {
    SECTION("listed forms") {
        CHECK(companion(IntPoly{BigInt(-2), BigInt(1)}).matrix == IntMat::from_longs({{2}}));
        CHECK(companion(IntPoly{BigInt(-1), BigInt(-1), BigInt(1)}).matrix ==
              IntMat::from_longs({{0, 1}, {1, 1}}));
        CHECK(companion(IntPoly{BigInt(1), BigInt(0), BigInt(1)}).matrix ==
              IntMat::from_longs({{0, -1}, {1, 0}}));
    }
    SECTION("non-monic input is rejected") {
        CHECK_THROWS_AS(companion(IntPoly{BigInt(1), BigInt(2)}), NotMonic);
        CHECK_THROWS_AS(companion(IntPoly{BigInt(3)}), NotMonic);
    }
    SECTION("characteristic polynomial, trace and determinant for random monic polys") {
        std::mt19937_64 rng(99);
        std::uniform_int_distribution<long> coef(-5, 5);
        std::uniform_int_distribution<int> deg(1, 8);
        for (int trial = 0; trial < 40; ++trial) {
            const int d = deg(rng);
            std::vector<BigInt> cs;
            for (int i = 0; i < d; ++i) cs.emplace_back(coef(rng));
            cs.emplace_back(1);
            const IntPoly p(cs);
            const CompanionMatrix c = companion(p);
            CHECK(char_poly(c.matrix) == p);
            CHECK(c.matrix.trace() == -p[static_cast<std::size_t>(d - 1)]);
            const BigInt want_det = (d % 2 == 0) ? p[0] : BigInt(-p[0]);
            CHECK(det(c.matrix) == want_det);
        }
    }
}

TEST_CASE("rational function normalization") {
    SECTION("common factors cancel and den(0) scales to 1") {
        // (2 - 2z^2) / (2 - 6z + 4z^2) = (1+z)/(1-2z)
        const RationalFunction f(IntPoly{BigInt(2), BigInt(0), BigInt(-2)},
                                 IntPoly{BigInt(2), BigInt(-6), BigInt(4)});
        CHECK(f.num() == IntPoly{BigInt(1), BigInt(1)});
        CHECK(f.den() == IntPoly{BigInt(1), BigInt(-2)});
    }
    SECTION("non-integral normal form is rejected") {
        CHECK_THROWS_AS(RationalFunction(RatPoly{BigRat(1)}, RatPoly{BigRat(1), make_rat(-1, 2)}),
                        NotFatouNormal);
        CHECK_THROWS_AS(RationalFunction(IntPoly{BigInt(1)}, IntPoly{BigInt(0), BigInt(1)}),
                        NotFatouNormal);
    }
    SECTION("exact evaluation") {
        const RationalFunction f(IntPoly{BigInt(1), BigInt(-2)}, IntPoly{BigInt(1), BigInt(-1)});
        CHECK(f.evaluate(BigRat(-1)) == make_rat(3, 2));
        CHECK_THROWS_AS(f.evaluate(BigRat(1)), Error);
    }
}

TEST_CASE("polynomial helpers") {
    SECTION("divmod and gcd") {
        const RatPoly a{BigRat(-1), BigRat(0), BigRat(0), BigRat(1)};  // z^3 - 1
        const RatPoly b{BigRat(-1), BigRat(1)};                       // z - 1
        auto [q, r] = divmod(a, b);
        CHECK(r.is_zero());
        CHECK(q == RatPoly{BigRat(1), BigRat(1), BigRat(1)});
        CHECK(gcd_poly(a, b) == RatPoly{BigRat(-1), BigRat(1)});
    }
    SECTION("squarefree decomposition") {
        // (z-1)^2 (z+2)
        const RatPoly f = to_rat(IntPoly{BigInt(2), BigInt(-3), BigInt(0), BigInt(1)});
        const auto fac = squarefree_decomposition(f);
        REQUIRE(fac.size() == 2);
        CHECK(fac[0] == RatPoly{BigRat(2), BigRat(1)});
        CHECK(fac[1] == RatPoly{BigRat(-1), BigRat(1)});
    }
    SECTION("primitive part and content") {
        const IntPoly p{BigInt(-6), BigInt(0), BigInt(-9)};
        CHECK(content(p) == 3);
        CHECK(primitive_part(p) == IntPoly{BigInt(2), BigInt(0), BigInt(3)});
    }
}

TEST_CASE("integer matrices") {
    const IntMat fib = IntMat::from_longs({{2, 1}, {1, 1}});
    SECTION("powers, determinant, trace") {
        CHECK(det(fib) == 1);
        CHECK(fib.pow(2) == IntMat::from_longs({{5, 3}, {3, 2}}));
        CHECK((fib.pow(2) - IntMat::identity(2)) == IntMat::from_longs({{4, 3}, {3, 1}}));
        CHECK(det(fib.pow(2) - IntMat::identity(2)) == -5);
        CHECK(fib.trace() == 3);
        CHECK(char_poly(fib) == IntPoly{BigInt(1), BigInt(-3), BigInt(1)});
    }
    SECTION("det(I - Mz)") {
        CHECK(det_identity_minus_z(IntMat::from_longs({{2}})) == IntPoly{BigInt(1), BigInt(-2)});
        CHECK(det_identity_minus_z(IntMat::from_longs({{2, 0}, {0, 3}})) ==
              IntPoly{BigInt(1), BigInt(-5), BigInt(6)});
    }
    SECTION("smith normal form") {
        CHECK(smith_normal_form(IntMat::from_longs({{7}})) == std::vector<BigInt>{BigInt(7)});
        CHECK(smith_normal_form(IntMat::identity(2)) ==
              std::vector<BigInt>(2, BigInt(1)));
        const auto d = smith_normal_form(IntMat::from_longs({{4, 3}, {3, 1}}));
        CHECK(d == std::vector<BigInt>{BigInt(1), BigInt(5)});
        const auto z = smith_normal_form(IntMat::from_longs({{2, 4}, {1, 2}}));
        CHECK(z == std::vector<BigInt>{BigInt(1), BigInt(0)});
    }
    SECTION("unimodular inverse") {
        const IntMat inv = inverse_unimodular(fib);
        CHECK(fib * inv == IntMat::identity(2));
        CHECK_THROWS_AS(inverse_unimodular(IntMat::from_longs({{2, 0}, {0, 1}})), Error);
    }
    SECTION("shape checks") {
        CHECK_THROWS_AS(fib * IntMat::identity(3), ShapeMismatch);
        CHECK_THROWS_AS(fib + IntMat::identity(3), ShapeMismatch);
    }
}
