#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <span>
#include <string>
#include <vector>

#include "flagchern/errors.hpp"
#include "flagchern/parser.hpp"
#include "flagchern/sympoly.hpp"

#include "oracles.hpp"

using namespace flagchern;
using namespace flagchern::testing;

namespace {

std::vector<Rational> random_rationals(std::size_t n, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 5);
    std::vector<Rational> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(make_rational(num(rng), den(rng)));
    return out;
}

SymPolyExpr random_expr(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> nterms(1, 4);
    std::uniform_int_distribution<int> nfactors(0, 3);
    std::uniform_int_distribution<int> index(1, 4);
    std::uniform_int_distribution<int> expo(1, 3);
    std::uniform_int_distribution<int> num(-7, 7);
    std::uniform_int_distribution<int> den(1, 4);
    std::uniform_int_distribution<int> kind(0, 1);
    SymPolyExpr f;
    const int terms = nterms(rng);
    for (int t = 0; t < terms; ++t) {
        SymPolyExpr term = SymPolyExpr::constant(make_rational(num(rng), den(rng)));
        const int factors = nfactors(rng);
        for (int q = 0; q < factors; ++q) {
            const GenKind k = kind(rng) == 0 ? GenKind::Elementary : GenKind::PowerSum;
            term = term * SymPolyExpr::generator(k, static_cast<unsigned>(index(rng)))
                              .pow(static_cast<unsigned>(expo(rng)));
        }
        f += term;
    }
    return f;
}

}  // namespace

TEST_CASE("elementary symmetric values match brute-force subset enumeration") {
    std::mt19937_64 rng(11);
    for (std::size_t n = 0; n <= 8; ++n) {
        for (int rep = 0; rep < 6; ++rep) {
            const std::vector<Rational> vals = random_rationals(n, rng);
            for (unsigned k = 0; k <= n + 2; ++k) {
                CAPTURE(n);
                CAPTURE(k);
                CHECK(elementary_symmetric(k, vals) == brute_elementary(k, vals));
            }
        }
    }
}

TEST_CASE("elementary symmetric table agrees with the per-index function") {
    std::mt19937_64 rng(12);
    const std::vector<Rational> vals = random_rationals(7, rng);
    const std::vector<Rational> table = elementary_symmetric_table(9, vals);
    REQUIRE(table.size() == 10);
    for (unsigned k = 0; k <= 9; ++k) CHECK(table[k] == elementary_symmetric(k, vals));
    CHECK(table[0] == Rational(1));
    CHECK(table[8] == Rational(0));  // beyond the number of values
    CHECK(table[9] == Rational(0));
}

TEST_CASE("power sums match the direct definition") {
    std::mt19937_64 rng(13);
    for (int rep = 0; rep < 10; ++rep) {
        const std::vector<Rational> vals = random_rationals(6, rng);
        for (unsigned k = 1; k <= 7; ++k) {
            CHECK(power_sum(k, vals) == brute_power_sum(k, vals));
        }
    }
}

TEST_CASE("Newton's identities tie e_k to power sums") {
    // k * e_k = sum_{i=1..k} (-1)^(i-1) * e_{k-i} * p_i
    std::mt19937_64 rng(14);
    for (int rep = 0; rep < 20; ++rep) {
        const std::vector<Rational> vals = random_rationals(6, rng);
        const std::vector<Rational> e = elementary_symmetric_table(6, vals);
        for (unsigned k = 1; k <= 6; ++k) {
            Rational rhs(0);
            for (unsigned i = 1; i <= k; ++i) {
                const Rational term = e[k - i] * power_sum(i, vals);
                if (i % 2 == 1) {
                    rhs += term;
                } else {
                    rhs -= term;
                }
            }
            CHECK(Rational(static_cast<long>(k)) * e[k] == rhs);
        }
    }
}

TEST_CASE("c_lambda evaluates to the product of elementary symmetrics") {
    std::mt19937_64 rng(15);
    const std::vector<Rational> vals = random_rationals(5, rng);
    const Partition lambda({2, 1, 1});
    const Rational expected =
        brute_elementary(2, vals) * brute_elementary(1, vals) * brute_elementary(1, vals);
    CHECK(c_lambda(lambda, vals) == expected);
    CHECK(SymPolyExpr::c_lambda(lambda).evaluate(vals) == expected);
}

TEST_CASE("expression arithmetic is exact ring arithmetic") {
    std::mt19937_64 rng(16);
    for (int rep = 0; rep < 25; ++rep) {
        const SymPolyExpr f = random_expr(rng);
        const SymPolyExpr g = random_expr(rng);
        const SymPolyExpr h = random_expr(rng);

        CHECK((f + g) * h == f * h + g * h);  // distributivity in canonical form
        CHECK(f * g == g * f);
        CHECK(f - f == SymPolyExpr());
        CHECK(f.pow(3) == f * f * f);

        // Evaluation is a ring homomorphism.
        const std::vector<Rational> vals = random_rationals(5, rng);
        CHECK((f * g + h).evaluate(vals) ==
              f.evaluate(vals) * g.evaluate(vals) + h.evaluate(vals));
    }
}

TEST_CASE("degree bookkeeping") {
    const SymPolyExpr e1 = SymPolyExpr::generator(GenKind::Elementary, 1);
    const SymPolyExpr e2 = SymPolyExpr::generator(GenKind::Elementary, 2);
    const SymPolyExpr p3 = SymPolyExpr::generator(GenKind::PowerSum, 3);

    CHECK(e1.pow(4).degree() == 4);
    CHECK(e1.pow(4).homogeneous_degree() == 4u);
    CHECK((e2 * p3).homogeneous_degree() == 5u);
    CHECK((e1 + e2).homogeneous_degree() == std::nullopt);
    CHECK((e1 * e1 + e2).homogeneous_degree() == 2u);
    CHECK(SymPolyExpr::constant(Rational(7)).homogeneous_degree() == 0u);
    CHECK(SymPolyExpr().homogeneous_degree() == 0u);
    CHECK(SymPolyExpr().is_zero());
    CHECK((e1 - e1).is_zero());
}

TEST_CASE("evaluation binds e_k beyond the value count to zero") {
    const std::vector<Rational> vals{Rational(2), Rational(3)};
    CHECK(SymPolyExpr::generator(GenKind::Elementary, 3).evaluate(vals) == Rational(0));
    CHECK(SymPolyExpr::generator(GenKind::Elementary, 2).evaluate(vals) == Rational(6));
    CHECK(SymPolyExpr::generator(GenKind::PowerSum, 2).evaluate(vals) == Rational(13));
}

TEST_CASE("parser accepts the documented grammar") {
    const SymPolyExpr e1 = SymPolyExpr::generator(GenKind::Elementary, 1);
    const SymPolyExpr e2 = SymPolyExpr::generator(GenKind::Elementary, 2);
    const SymPolyExpr p2 = SymPolyExpr::generator(GenKind::PowerSum, 2);

    CHECK(parse_expr("e1") == e1);
    CHECK(parse_expr("e1^2") == e1 * e1);
    CHECK(parse_expr("e1 * e2") == e1 * e2);
    CHECK(parse_expr("e1*e2 - 3*p2") == e1 * e2 - SymPolyExpr::constant(Rational(3)) * p2);
    CHECK(parse_expr("-e1") == SymPolyExpr() - e1);
    CHECK(parse_expr("+e1") == e1);
    CHECK(parse_expr("(e1 + e2)*(e1 + e2)") == (e1 + e2) * (e1 + e2));
    CHECK(parse_expr("(e1 + 2) * p2") == (e1 + SymPolyExpr::constant(Rational(2))) * p2);
    CHECK(parse_expr("2/3 * e1") == SymPolyExpr::constant(make_rational(2, 3)) * e1);
    CHECK(parse_expr("5") == SymPolyExpr::constant(Rational(5)));
    CHECK(parse_expr(" e1 ^ 2 * p2 ") == e1 * e1 * p2);
    CHECK(parse_expr("e1 - e1").is_zero());
}

TEST_CASE("parser errors carry byte positions") {
    CHECK_THROWS_AS(parse_expr(""), ParseError);
    CHECK_THROWS_AS(parse_expr("e0"), ZeroGeneratorIndex);
    CHECK_THROWS_AS(parse_expr("p0"), ZeroGeneratorIndex);
    CHECK_THROWS_AS(parse_expr("e1^0"), ParseError);
    CHECK_THROWS_AS(parse_expr("1/0"), ParseError);
    CHECK_THROWS_AS(parse_expr("e1 +"), ParseError);
    CHECK_THROWS_AS(parse_expr("(e1"), ParseError);
    CHECK_THROWS_AS(parse_expr("2e1"), ParseError);  // implicit products are not accepted
    CHECK_THROWS_AS(parse_expr("q1"), ParseError);
    CHECK_THROWS_AS(parse_expr("e1^^2"), ParseError);
    CHECK_THROWS_AS(parse_expr("(e1+e2)^2"), ParseError);  // ^ binds to generators only

    try {
        parse_expr("e1 + q2");
        FAIL("expected ParseError");
    } catch (const ParseError& err) {
        CHECK(std::string(err.what()).find("position") != std::string::npos);
    }
}

TEST_CASE("printed form round-trips through the parser") {
    std::mt19937_64 rng(17);
    for (int rep = 0; rep < 50; ++rep) {
        const SymPolyExpr f = random_expr(rng);
        CAPTURE(f.to_string());
        CHECK(parse_expr(f.to_string()) == f);
    }
    CHECK(SymPolyExpr().to_string() == "0");
    CHECK(parse_expr("0").is_zero());
}
