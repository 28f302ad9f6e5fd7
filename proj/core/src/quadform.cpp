#include "sl2/quadform.hpp"

namespace sl2 {

namespace {

Integer bilinear(const IMat2& m, const Integer& x, const Integer& y, const Integer& xp,
                 const Integer& yp) {
    return m.a * x * xp + m.b * x * yp + m.c * y * xp + m.d * y * yp;
}

std::optional<long long> square_exponent(const Word& w) {
    if (w.size() < 2 || w.front() != Letter::Y || w.back() != Letter::Y) {
        return std::nullopt;
    }
    for (std::size_t i = 1; i + 1 < w.size(); ++i) {
        if (w[i] != Letter::X) return std::nullopt;
    }
    return static_cast<long long>(w.size()) - 2;
}

} // namespace

QuadCornerReport quad_corner_report(const Word& w, const Word& u, long long l) {
    if (w.empty() || u.empty()) fail("BadWord", "quad_corner_report needs nonempty words");
    if (l < 0) fail("BadWord", "l must be nonnegative");

    Word v = u;
    for (long long i = 0; i < l; ++i) v.push_back(Letter::Y);
    v.push_back(Letter::X);

    QuadCornerReport r;
    r.m_w = mu(w);
    r.m_u = mu(u);
    r.m_v = mu(v);
    r.form_a = r.m_w.a;
    r.form_e = r.m_w.b + r.m_w.c;
    r.form_d = r.m_w.d;
    r.q = r.m_u.b;
    r.s = r.m_u.d;
    r.b_minus_c = r.m_w.b - r.m_w.c;

    const Integer &q = r.m_u.b, &s = r.m_u.d;
    const Integer &qp = r.m_v.b, &sp = r.m_v.d;
    r.t_a = bilinear(r.m_w, q, s, q, s);
    r.t_b = bilinear(r.m_w, q, s, qp, sp);
    r.t_c = bilinear(r.m_w, qp, sp, q, s);
    r.t_d = bilinear(r.m_w, qp, sp, qp, sp);
    r.unimodular_ok = r.t_a * r.t_d - r.t_b * r.t_c == 1;
    r.corner_ok = r.b_minus_c == r.t_c - r.t_b;

    if (auto h = square_exponent(w)) {
        Word yu = {Letter::Y};
        yu.insert(yu.end(), u.begin(), u.end());
        Word yv = {Letter::Y};
        yv.insert(yv.end(), v.begin(), v.end());
        QuadCornerReport::SquareCase sq;
        sq.h = *h;
        sq.t_m_prime = mu(yu).d;
        sq.t_n_prime = mu(yv).d;
        const Integer hp1 = to_integer(*h) + 1;
        sq.square_ok = r.t_a == hp1 * sq.t_m_prime * sq.t_m_prime &&
                       r.t_b == hp1 * sq.t_m_prime * sq.t_n_prime + 1 &&
                       r.t_c == hp1 * sq.t_m_prime * sq.t_n_prime - 1;
        r.square = sq;
    }
    return r;
}

std::tuple<Integer, Integer, Integer> pythagorean_triple(const Integer& m,
                                                         const Integer& n) {
    if (!(0 < m && m < n)) fail("BadInput", "pythagorean_triple needs 0 < m < n");
    Integer a = m * m + n * n;
    Integer b = n * n - m * m;
    Integer c = 2 * m * n;
    if (a * a != b * b + c * c) fail("Internal", "pythagorean identity failed");
    return {a, b, c};
}

bool is_cor_pyth_form(const Integer& a, const Integer& b, const Integer& c) {
    Integer g = gcd(gcd(a, b), c);
    return g == 1 && c % 2 == 0;
}

Word qform_to_word(const Integer& a, const Integer& e, const Integer& d) {
    if (a < 1 || d < 1 || e < 0) {
        fail("NotRealizable", "need a, d >= 1 and e >= 0");
    }
    const Integer n2 = e * e - 4 * a * d + 4;
    if (n2 < 0) fail("NotRealizable", "discriminant is below -4");
    Integer n = sqrt(n2);
    if (n * n != n2) {
        fail("NotRealizable", "discriminant is not of the form n^2 - 4");
    }
    const Integer b = (e + n) / 2;
    const Integer c = (e - n) / 2;
    if (c < 0) fail("NotRealizable", "form has no nonnegative matrix");
    const IMat2 m{a, b, c, d};
    if (m.det() != 1) fail("NotRealizable", "matrix is not unimodular");
    Word w;
    try {
        w = factor_sl2(m);
    } catch (const DomainError&) {
        fail("NotRealizable", "matrix does not factor over mu(x), mu(y)");
    }
    if (w.empty()) fail("NotRealizable", "form corresponds to the empty word");
    return w;
}

} // namespace sl2
