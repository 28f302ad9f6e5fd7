#include "sl2/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace sl2 {

Monomial Monomial::variable(const std::string& name, Integer exp) {
    Monomial m;
    if (exp != 0) m.exps_[name] = std::move(exp);
    return m;
}

Integer Monomial::degree() const {
    Integer d = 0;
    for (const auto& [name, e] : exps_) d += e;
    return d;
}

Monomial Monomial::operator*(const Monomial& other) const {
    Monomial r = *this;
    for (const auto& [name, e] : other.exps_) {
        auto it = r.exps_.find(name);
        if (it == r.exps_.end()) {
            r.exps_[name] = e;
        } else {
            it->second += e;
            if (it->second == 0) r.exps_.erase(it);
        }
    }
    return r;
}

Monomial Monomial::inverse() const {
    Monomial r;
    for (const auto& [name, e] : exps_) r.exps_[name] = -e;
    return r;
}

Monomial Monomial::div(const Monomial& other) const { return *this * other.inverse(); }

bool Monomial::divides_poly(const Monomial& other) const {
    return !other.div(*this).has_negative_exponent();
}

bool Monomial::has_negative_exponent() const {
    for (const auto& [name, e] : exps_) {
        if (e < 0) return true;
    }
    return false;
}

int Monomial::compare(const Monomial& other) const {
    const Integer da = degree(), db = other.degree();
    if (da != db) return da < db ? -1 : 1;
    // Lexicographic on exponent vectors over the union of names.
    auto a = exps_.begin(), b = other.exps_.begin();
    while (a != exps_.end() || b != other.exps_.end()) {
        std::string name;
        Integer ea = 0, eb = 0;
        if (a == exps_.end()) {
            name = b->first;
        } else if (b == other.exps_.end()) {
            name = a->first;
        } else {
            name = std::min(a->first, b->first);
        }
        if (a != exps_.end() && a->first == name) ea = (a++)->second;
        if (b != other.exps_.end() && b->first == name) eb = (b++)->second;
        if (ea != eb) return ea < eb ? -1 : 1;
    }
    return 0;
}

std::string Monomial::str() const {
    if (exps_.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& [name, e] : exps_) {
        if (!first) os << "*";
        first = false;
        os << name;
        if (e != 1) os << "^" << e.get_str();
    }
    return os.str();
}

LaurentPoly::LaurentPoly(const Integer& value) {
    if (value != 0) terms_[Monomial()] = value;
}

LaurentPoly LaurentPoly::variable(const std::string& name) {
    return term(Monomial::variable(name), 1);
}

LaurentPoly LaurentPoly::term(const Monomial& m, const Integer& coeff) {
    LaurentPoly p;
    if (coeff != 0) p.terms_[m] = coeff;
    return p;
}

bool LaurentPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_unit());
}

Integer LaurentPoly::constant_value() const {
    if (terms_.empty()) return 0;
    if (!is_constant()) fail("NotConstant", "polynomial " + str() + " is not constant");
    return terms_.begin()->second;
}

bool LaurentPoly::all_coefficients_nonnegative() const {
    for (const auto& [m, c] : terms_) {
        if (c < 0) return false;
    }
    return true;
}

void LaurentPoly::add_term(const Monomial& m, const Integer& coeff) {
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        if (coeff != 0) terms_[m] = coeff;
    } else {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    r += o;
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (const auto& [m, c] : terms_) r.terms_[m] = -c;
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + (-o); }

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly r;
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) {
            r.add_term(ma * mb, ca * cb);
        }
    }
    return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
    *this = *this * o;
    return *this;
}

LaurentPoly LaurentPoly::pow(unsigned long e) const {
    LaurentPoly r(1);
    LaurentPoly base = *this;
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

LaurentPoly LaurentPoly::substitute_ones(const std::set<std::string>& vars) const {
    LaurentPoly r;
    for (const auto& [m, c] : terms_) {
        Monomial kept;
        for (const auto& [name, e] : m.exponents()) {
            if (!vars.count(name)) kept = kept * Monomial::variable(name, e);
        }
        r.add_term(kept, c);
    }
    return r;
}

LaurentPoly LaurentPoly::substitute_all_ones() const {
    Integer sum = 0;
    for (const auto& [m, c] : terms_) sum += c;
    return LaurentPoly(sum);
}

Monomial LaurentPoly::low_content() const {
    if (terms_.empty()) return Monomial();
    std::map<std::string, Integer> low;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (first) {
            low = m.exponents();
            first = false;
            continue;
        }
        // A variable missing from a term has exponent 0 there.
        for (auto it = low.begin(); it != low.end();) {
            auto jt = m.exponents().find(it->first);
            Integer e = jt == m.exponents().end() ? Integer(0) : jt->second;
            if (e < it->second) it->second = e;
            if (it->second == 0) {
                it = low.erase(it);
            } else {
                ++it;
            }
        }
        for (const auto& [name, e] : m.exponents()) {
            if (e < 0 && !low.count(name)) low[name] = e;
        }
    }
    Monomial r;
    for (const auto& [name, e] : low) r = r * Monomial::variable(name, e);
    return r;
}

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Integer a = abs(c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (m.is_unit()) {
            os << a.get_str();
        } else if (a == 1) {
            os << m.str();
        } else {
            os << a.get_str() << "*" << m.str();
        }
    }
    return os.str();
}

LaurentPoly exact_div(const LaurentPoly& p, const LaurentPoly& q) {
    if (q.is_zero()) fail("DivisionByZero", "exact_div by the zero polynomial");
    if (p.is_zero()) return LaurentPoly();

    // Shift both operands into the honest polynomial ring.
    const Monomial sp = p.low_content();
    const Monomial sq = q.low_content();
    std::map<Monomial, Rational> rem;
    for (const auto& [m, c] : p.terms()) rem[m.div(sp)] = Rational(c);
    std::map<Monomial, Integer> divisor;
    for (const auto& [m, c] : q.terms()) divisor[m.div(sq)] = c;
    const Monomial qlead = divisor.rbegin()->first;
    const Integer qlc = divisor.rbegin()->second;

    std::map<Monomial, Rational> quot;
    while (!rem.empty()) {
        const auto lead = *rem.rbegin();
        if (!qlead.divides_poly(lead.first)) {
            fail("NotDivisible", q.str() + " does not divide " + p.str());
        }
        const Monomial mq = lead.first.div(qlead);
        const Rational cq = lead.second / Rational(qlc);
        quot[mq] = cq;
        for (const auto& [m, c] : divisor) {
            const Monomial target = m * mq;
            auto it = rem.find(target);
            Rational delta = cq * Rational(c);
            if (it == rem.end()) {
                if (delta != 0) rem[target] = -delta;
            } else {
                it->second -= delta;
                if (it->second == 0) rem.erase(it);
            }
        }
    }

    LaurentPoly result;
    const Monomial adjust = sp.div(sq);
    for (const auto& [m, c] : quot) {
        if (!is_integral(c)) {
            fail("NotDivisible",
                 q.str() + " does not divide " + p.str() + " over the integers");
        }
        result += LaurentPoly::term(m * adjust, c.get_num());
    }
    if (result * q != p) fail("NotDivisible", "division verification failed");
    return result;
}

RationalFunction::RationalFunction(LaurentPoly numerator, LaurentPoly denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
    if (den_.is_zero()) fail("DivisionByZero", "rational function with zero denominator");
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
    return {num_ * o.den_ + o.num_ * den_, den_ * o.den_};
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
    return {num_ * o.num_, den_ * o.den_};
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
    if (o.num_.is_zero()) fail("DivisionByZero", "division by zero rational function");
    return {num_ * o.den_, den_ * o.num_};
}

RationalFunction RationalFunction::pow(unsigned long e) const {
    return {num_.pow(e), den_.pow(e)};
}

bool RationalFunction::equals(const RationalFunction& o) const {
    return num_ * o.den_ == o.num_ * den_;
}

std::string RationalFunction::str() const {
    if (den_ == LaurentPoly(1)) return num_.str();
    return "(" + num_.str() + ") / (" + den_.str() + ")";
}

LaurentPoly normalize_to_laurent(const RationalFunction& f) {
    const Monomial s = f.den().low_content();
    LaurentPoly honest_den;
    for (const auto& [m, c] : f.den().terms()) {
        honest_den += LaurentPoly::term(m.div(s), c);
    }
    LaurentPoly shifted_num;
    for (const auto& [m, c] : f.num().terms()) {
        shifted_num += LaurentPoly::term(m.div(s), c);
    }
    try {
        return exact_div(shifted_num, honest_den);
    } catch (const DomainError& e) {
        fail("NotLaurent", f.str() + " is not a Laurent polynomial");
    }
}

} // namespace sl2
