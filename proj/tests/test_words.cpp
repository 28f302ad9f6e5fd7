#include <doctest.h>

#include "helpers.hpp"
#include "sl2/laurent.hpp"
#include "sl2/words.hpp"

using namespace sl2;
using sl2test::Rng;

TEST_CASE("mu morphism values") {
    CHECK(mu(parse_word("xxy")) == IMat2{3, 2, 1, 1});
    CHECK(mu(parse_word("")) == IMat2::identity());
    CHECK(mu(parse_word("xxyxxyxxy")) == IMat2{41, 30, 15, 11});
    CHECK(mu(parse_word("xxyxxyxxy")).det() == 1);
}

TEST_CASE("mu is a morphism with unimodular nonnegative values") {
    Rng rng(42);
    for (int i = 0; i < 60; ++i) {
        const Word u = sl2test::random_word(rng, rng() % 10);
        const Word v = sl2test::random_word(rng, rng() % 10);
        Word uv = u;
        uv.insert(uv.end(), v.begin(), v.end());
        CHECK(mu(uv) == mu(u) * mu(v));
        const IMat2 m = mu(uv);
        CHECK(m.det() == 1);
        CHECK(m.a >= 0);
        CHECK(m.b >= 0);
        CHECK(m.c >= 0);
        CHECK(m.d >= 0);
    }
}

TEST_CASE("word transposition") {
    CHECK(word_str(transpose_word(parse_word("xyyxy"))) == "xyxxy");
    CHECK(transpose_word(Word{}).empty());
    CHECK(word_str(transpose_word(parse_word("x"))) == "y");

    Rng rng(43);
    for (int i = 0; i < 40; ++i) {
        const Word w = sl2test::random_word(rng, rng() % 12);
        CHECK(transpose_word(transpose_word(w)) == w); // involution
        CHECK(mu(transpose_word(w)) == mu(w).transpose());
    }
}

TEST_CASE("factor_sl2") {
    CHECK(word_str(factor_sl2({3, 2, 1, 1})) == "xxy");
    CHECK(factor_sl2(IMat2::identity()).empty());
    CHECK(word_str(factor_sl2({41, 30, 15, 11})) == "xxyxxyxxy");
    CHECK(word_str(factor_sl2({2, 1, 1, 1})) == "xy");
    CHECK_THROWS_AS(factor_sl2({1, 2, 3, 4}), DomainError);  // det -2
    CHECK_THROWS_AS(factor_sl2({2, -1, -1, 1}), DomainError); // negative entries

    // freeness: factor_sl2 is a left inverse of mu
    Rng rng(44);
    for (int i = 0; i < 80; ++i) {
        const Word w = sl2test::random_word(rng, rng() % 21);
        CHECK(factor_sl2(mu(w)) == w);
    }
}

TEST_CASE("continuants") {
    CHECK(continuant<Integer>({}) == 1);
    CHECK(continuant<Integer>({Integer(2), Integer(2)}) == 3);
    CHECK(continuant<Integer>({Integer(5)}) == 5);

    // symbolic: q(a,b,c) = abc - a - c
    const LaurentPoly a = LaurentPoly::variable("a"), b = LaurentPoly::variable("b"),
                      c = LaurentPoly::variable("c");
    CHECK(continuant<LaurentPoly>({a, b, c}) == a * b * c - a - c);
}

TEST_CASE("q-matrix products carry the four continuants") {
    const LaurentPoly a = LaurentPoly::variable("a");
    const auto single = q_matrix_product<LaurentPoly>({a});
    CHECK(single.a == LaurentPoly(0));
    CHECK(single.b == LaurentPoly(-1));
    CHECK(single.c == LaurentPoly(1));
    CHECK(single.d == a);

    const auto m = q_matrix_product<Integer>({Integer(2), Integer(2), Integer(2)});
    CHECK(m.d == 4); // q(2,2,2)
    CHECK(m.det() == 1);

    Rng rng(45);
    std::uniform_int_distribution<long> val(-4, 4);
    for (int i = 0; i < 40; ++i) {
        std::vector<Integer> seq;
        const std::size_t n = rng() % 7;
        for (std::size_t k = 0; k < n; ++k) seq.emplace_back(val(rng));
        const auto q = q_matrix_product<Integer>(seq);
        CHECK(q.det() == 1);
        CHECK(q.d == continuant(seq));
        if (n >= 1) {
            CHECK(q.c == continuant(std::vector<Integer>(seq.begin(), seq.end() - 1)));
            CHECK(q.b == -continuant(std::vector<Integer>(seq.begin() + 1, seq.end())));
        }
    }
}

TEST_CASE("continuant identities") {
    Rng rng(46);
    std::uniform_int_distribution<long> val(-3, 3);
    const auto slice = [](const std::vector<Integer>& a, std::size_t from,
                          std::size_t to) { // q(a_from..a_to), 1-based inclusive
        // empty range gives q_0 = 1, a range of length -1 gives q_{-1} = 0
        if (from == to + 2) return Integer(0);
        if (from > to) return Integer(1);
        return continuant(std::vector<Integer>(a.begin() + static_cast<long>(from) - 1,
                                               a.begin() + static_cast<long>(to)));
    };

    for (int rep = 0; rep < 60; ++rep) {
        const std::size_t n = 1 + rng() % 8;
        std::vector<Integer> a;
        for (std::size_t k = 0; k < n; ++k) a.emplace_back(val(rng));

        // q(a_{i+1}..a_n) = q(a_1..a_{i-1}) q(a_2..a_n) - q(a_2..a_{i-1}) q(a_1..a_n)
        for (std::size_t i = 1; i <= n; ++i) {
            CHECK(slice(a, i + 1, n) ==
                  slice(a, 1, i - 1) * slice(a, 2, n) - slice(a, 2, i - 1) * slice(a, 1, n));
        }
        // q(a_1..a_{j-1}) q(a_{i+1}..a_k) =
        //   q(a_1..a_{i-1}) q(a_{j+1}..a_k) + q(a_1..a_k) q(a_{i+1}..a_{j-1})
        for (std::size_t i = 1; i <= n; ++i) {
            for (std::size_t j = i + 1; j <= n; ++j) {
                const std::size_t k = n;
                CHECK(slice(a, 1, j - 1) * slice(a, i + 1, k) ==
                      slice(a, 1, i - 1) * slice(a, j + 1, k) +
                          slice(a, 1, k) * slice(a, i + 1, j - 1));
            }
        }
    }
}
