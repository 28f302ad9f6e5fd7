#pragma once

#include <string>
#include <vector>

#include "sl2/errors.hpp"
#include "sl2/mat2.hpp"
#include "sl2/numeric.hpp"

namespace sl2 {

enum class Letter : unsigned char { X, Y };

using Word = std::vector<Letter>;

Word parse_word(const std::string& s); // ASCII over {x,y}
std::string word_str(const Word& w);

inline Letter swap_letter(Letter l) { return l == Letter::X ? Letter::Y : Letter::X; }

// The monoid morphism into SL2(Z): mu(x) = (1 1; 0 1), mu(y) = (1 0; 1 1).
IMat2 mu_letter(Letter l);
IMat2 mu(const Word& w);

// Reverse the word and exchange x and y; mu of the transposed word is the
// matrix transpose of mu(w).
Word transpose_word(const Word& w);

// Inverse of mu on the monoid of nonnegative SL2(Z) matrices (which is free
// on mu(x), mu(y)): greedily peels mu(x)^-1 or mu(y)^-1 while entries stay
// nonnegative. Exactly one peel applies at each step away from the
// identity; anything else violates the precondition.
Word factor_sl2(const IMat2& m);

/// Signed continuant: q() = 1, q(a1) = a1, q_n = q_{n-1}*a_n - q_{n-2}.
template <class R>
R continuant(const std::vector<R>& a) {
    R prev2(0), prev1(1); // q_{-1}, q_0
    for (const R& an : a) {
        R cur = prev1 * an - prev2;
        prev2 = prev1;
        prev1 = cur;
    }
    return prev1;
}

/// Product Q(a1)...Q(an) of the matrices Q(a) = (0 -1; 1 a); its entries are
/// the four continuants of the inner/outer subsequences.
template <class R>
Mat2<R> q_matrix_product(const std::vector<R>& a) {
    Mat2<R> m = Mat2<R>::identity();
    for (const R& ai : a) {
        m = m * Mat2<R>{R(0), R(0) - R(1), R(1), ai};
    }
    return m;
}

} // namespace sl2
