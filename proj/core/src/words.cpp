#include "sl2/words.hpp"

namespace sl2 {

Word parse_word(const std::string& s) {
    Word w;
    w.reserve(s.size());
    for (char ch : s) {
        if (ch == 'x' || ch == 'X') {
            w.push_back(Letter::X);
        } else if (ch == 'y' || ch == 'Y') {
            w.push_back(Letter::Y);
        } else {
            fail("BadWord", std::string("unexpected character '") + ch + "' in word");
        }
    }
    return w;
}

std::string word_str(const Word& w) {
    std::string s;
    s.reserve(w.size());
    for (Letter l : w) s.push_back(l == Letter::X ? 'x' : 'y');
    return s;
}

IMat2 mu_letter(Letter l) {
    return l == Letter::X ? IMat2{1, 1, 0, 1} : IMat2{1, 0, 1, 1};
}

IMat2 mu(const Word& w) {
    IMat2 m = IMat2::identity();
    for (Letter l : w) m = m * mu_letter(l);
    return m;
}

Word transpose_word(const Word& w) {
    Word r;
    r.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) r.push_back(swap_letter(*it));
    return r;
}

Word factor_sl2(const IMat2& m) {
    if (m.det() != 1 || m.a < 0 || m.b < 0 || m.c < 0 || m.d < 0) {
        fail("NotFactorable", "matrix must be nonnegative with determinant 1");
    }
    Word w;
    IMat2 cur = m;
    while (cur != IMat2::identity()) {
        // mu(x)^-1 on the left subtracts row 2 from row 1; mu(y)^-1 the other way.
        const bool peel_x = cur.a >= cur.c && cur.b >= cur.d;
        const bool peel_y = cur.c >= cur.a && cur.d >= cur.b;
        if (peel_x == peel_y) {
            fail("NotFactorable", "matrix is outside the free monoid on mu(x), mu(y)");
        }
        if (peel_x) {
            w.push_back(Letter::X);
            cur = {cur.a - cur.c, cur.b - cur.d, cur.c, cur.d};
        } else {
            w.push_back(Letter::Y);
            cur = {cur.a, cur.b, cur.c - cur.a, cur.d - cur.b};
        }
    }
    return w;
}

} // namespace sl2
