#include <doctest.h>

#include "helpers.hpp"
#include "sl2/laurent.hpp"

using namespace sl2;
using sl2test::Rng;

namespace {

LaurentPoly var(const std::string& n) { return LaurentPoly::variable(n); }

LaurentPoly random_poly(Rng& rng, int max_terms = 4) {
    const std::vector<std::string> names{"x", "y", "z"};
    LaurentPoly p;
    std::uniform_int_distribution<int> coeff(-5, 5), exp(-2, 3);
    std::uniform_int_distribution<std::size_t> nvars(0, 2);
    const int terms = 1 + static_cast<int>(rng() % max_terms);
    for (int t = 0; t < terms; ++t) {
        Monomial m;
        const std::size_t k = nvars(rng);
        for (std::size_t i = 0; i <= k; ++i) {
            m = m * Monomial::variable(names[rng() % names.size()], exp(rng));
        }
        p += LaurentPoly::term(m, coeff(rng));
    }
    return p;
}

} // namespace

TEST_CASE("laurent arithmetic basics") {
    const LaurentPoly x = var("x"), y = var("y");
    CHECK(x + (-x) == LaurentPoly(0));
    CHECK((x + (-x)).is_zero());

    // monomial cancellation
    const LaurentPoly xy_inv = LaurentPoly::term(
        Monomial::variable("x") * Monomial::variable("y", -1), 1);
    CHECK(xy_inv * y == x);

    // schoolbook expansion of (1+x)^2
    const LaurentPoly one_plus_x = LaurentPoly(1) + x;
    LaurentPoly expanded = LaurentPoly(1) + LaurentPoly::term(Monomial::variable("x"), 2) +
                           LaurentPoly::term(Monomial::variable("x", 2), 1);
    CHECK(one_plus_x * one_plus_x == expanded);
}

TEST_CASE("laurent canonical text form") {
    const LaurentPoly x = var("x");
    const LaurentPoly p = LaurentPoly(1) + LaurentPoly::term(Monomial::variable("x"), 2) +
                          LaurentPoly::term(Monomial::variable("x", 2), 1);
    CHECK(p.str() == "1 + 2*x + x^2");
    CHECK(LaurentPoly::term(Monomial::variable("x", -1), 1).str() == "x^-1");
    CHECK(LaurentPoly(0).str() == "0");
    CHECK((x - LaurentPoly(1)).str() == "-1 + x");
}

TEST_CASE("laurent ring axioms on random triples") {
    Rng rng(20240901);
    for (int i = 0; i < 50; ++i) {
        const LaurentPoly p = random_poly(rng), q = random_poly(rng), r = random_poly(rng);
        CHECK((p + q) + r == p + (q + r));
        CHECK(p + q == q + p);
        CHECK(p * q == q * p);
        CHECK((p * q) * r == p * (q * r));
        CHECK(p * (q + r) == p * q + p * r);
    }
}

TEST_CASE("exact division") {
    const LaurentPoly x = var("x"), y = var("y");
    const LaurentPoly one_plus_x = LaurentPoly(1) + x;

    SUBCASE("perfect square") {
        CHECK(exact_div(one_plus_x * one_plus_x, one_plus_x) == one_plus_x);
    }
    SUBCASE("mixed variables, verified by re-multiplication") {
        // (x^2 y - y) / (x - 1) = (x+1) y
        const LaurentPoly num = LaurentPoly::term(
                                    Monomial::variable("x", 2) * Monomial::variable("y"), 1) -
                                y;
        const LaurentPoly den = x - LaurentPoly(1);
        const LaurentPoly quot = exact_div(num, den);
        CHECK(quot == (x + LaurentPoly(1)) * y);
        CHECK(quot * den == num);
    }
    SUBCASE("distinct irreducibles do not divide") {
        CHECK_THROWS_WITH_AS(exact_div(one_plus_x, LaurentPoly(1) + y), doctest::Contains("NotDivisible"),
                             DomainError);
    }
    SUBCASE("random products divide exactly") {
        Rng rng(77);
        int done = 0;
        while (done < 40) {
            const LaurentPoly p = random_poly(rng), q = random_poly(rng);
            if (q.is_zero()) continue;
            CHECK(exact_div(p * q, q) == p);
            ++done;
        }
    }
}

TEST_CASE("rational function normalization") {
    const LaurentPoly x1 = var("x1"), x2 = var("x2"), x = var("x"), y = var("y");

    SUBCASE("monomial denominator") {
        const RationalFunction f(LaurentPoly(1) + x2, x1);
        const LaurentPoly got = normalize_to_laurent(f);
        const LaurentPoly want =
            LaurentPoly::term(Monomial::variable("x1", -1), 1) +
            LaurentPoly::term(Monomial::variable("x1", -1) * Monomial::variable("x2"), 1);
        CHECK(got == want);
    }
    SUBCASE("cancelling polynomial denominator") {
        const LaurentPoly num = LaurentPoly(1) +
                                LaurentPoly::term(Monomial::variable("x"), 2) +
                                LaurentPoly::term(Monomial::variable("x", 2), 1);
        CHECK(normalize_to_laurent(RationalFunction(num, LaurentPoly(1) + x)) ==
              LaurentPoly(1) + x);
    }
    SUBCASE("not Laurent") {
        CHECK_THROWS_WITH_AS(normalize_to_laurent(RationalFunction(LaurentPoly(1) + x,
                                                                   LaurentPoly(1) + y)),
                             doctest::Contains("NotLaurent"), DomainError);
    }
    SUBCASE("identity on monomial-denominator inputs") {
        Rng rng(31337);
        for (int i = 0; i < 30; ++i) {
            LaurentPoly p = random_poly(rng);
            const Monomial shift = Monomial::variable("x", 1) * Monomial::variable("y", -2);
            const RationalFunction f(p, LaurentPoly::term(shift, 1));
            LaurentPoly expected;
            for (const auto& [m, c] : p.terms()) {
                expected += LaurentPoly::term(m.div(shift), c);
            }
            CHECK(normalize_to_laurent(f) == expected);
        }
    }
}

TEST_CASE("substitute ones") {
    const LaurentPoly x = var("x"), y = var("y");
    CHECK((x + y).substitute_ones({"x", "y"}) == LaurentPoly(2));
    const LaurentPoly xy_inv =
        LaurentPoly::term(Monomial::variable("x") * Monomial::variable("y", -1), 1);
    CHECK(xy_inv.substitute_ones({"y"}) == x);

    // (b + d + acd) / (bc), all variables to 1, gives 3
    const LaurentPoly num = var("b") + var("d") + var("a") * var("c") * var("d");
    const Monomial bc = Monomial::variable("b") * Monomial::variable("c");
    LaurentPoly cell;
    for (const auto& [m, c] : num.terms()) cell += LaurentPoly::term(m.div(bc), c);
    CHECK(cell.substitute_all_ones() == LaurentPoly(3));
}
