#pragma once

#include <optional>
#include <tuple>

#include "sl2/mat2.hpp"
#include "sl2/words.hpp"

namespace sl2 {

// Corner values of the tiling over the frontier ...^t(s) w s... at the four
// points where the diagonal from w's lower corner meets the column of the
// horizontal ray through its upper corner. All values come from
// Q(x,y) = a x^2 + (b+c) xy + d y^2 and the bilinear form of mu(w).
struct QuadCornerReport {
    IMat2 m_w, m_u, m_v;
    Integer form_a, form_e, form_d; // Q(x,y) = a x^2 + e xy + d y^2
    Integer t_a, t_b, t_c, t_d;
    Integer q, s;            // entries of mu(u); s = t(M), q = semi-adjacent minor
    Integer b_minus_c;
    bool unimodular_ok;      // t(A) t(D) - t(B) t(C) == 1
    bool corner_ok;          // b - c == t(C) - t(B)

    // Present when w = y x^h y: then t(A) = (h+1) t(M')^2,
    // t(B) = (h+1) t(M') t(N') + 1 and t(C) = t(B) - 2.
    struct SquareCase {
        long long h;
        Integer t_m_prime, t_n_prime;
        bool square_ok;
    };
    std::optional<SquareCase> square;
};

// v = u y^l x is the word of the point one step east of u's point.
QuadCornerReport quad_corner_report(const Word& w, const Word& u, long long l);

// (m^2+n^2, n^2-m^2, 2mn) for 0 < m < n; first entry squared equals the sum
// of squares of the other two.
std::tuple<Integer, Integer, Integer> pythagorean_triple(const Integer& m,
                                                         const Integer& n);

// Triples produced by the corner construction: relatively prime with the
// last entry even.
bool is_cor_pyth_form(const Integer& a, const Integer& b, const Integer& c);

// Word w with mu(w) = (a b; c d) realizing Q = a x^2 + e xy + d y^2, where
// b - c = n >= 0 for the discriminant e^2 - 4ad = n^2 - 4 and b + c = e.
// Tie-break b = (e+n)/2 >= c.
Word qform_to_word(const Integer& a, const Integer& e, const Integer& d);

} // namespace sl2
