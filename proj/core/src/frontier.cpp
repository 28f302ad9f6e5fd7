#include "sl2/frontier.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <sstream>

namespace sl2 {

namespace {

Point step(Letter l) { return l == Letter::X ? Point{1, 0} : Point{0, -1}; }

std::vector<Point> prefix_points(const Word& w) {
    std::vector<Point> pts;
    pts.reserve(w.size() + 1);
    Point cur{0, 0};
    pts.push_back(cur);
    for (Letter l : w) {
        cur = cur + step(l);
        pts.push_back(cur);
    }
    return pts;
}

bool mixed(const Word& w) {
    bool has_x = false, has_y = false;
    for (Letter l : w) (l == Letter::X ? has_x : has_y) = true;
    return has_x && has_y;
}

// Smallest index at which a monotone predicate becomes true.
template <class Pred>
long long first_true(Pred pred) {
    long long hi = 1;
    while (!pred(hi)) hi *= 2;
    long long lo = -1;
    while (pred(lo)) lo *= 2;
    // pred(lo) false, pred(hi) true
    while (hi - lo > 1) {
        long long mid = lo + (hi - lo) / 2;
        (pred(mid) ? hi : lo) = mid;
    }
    return hi;
}

} // namespace

Frontier::Frontier(Word left, Word core, Word right)
    : left_(std::move(left)), core_(std::move(core)), right_(std::move(right)) {
    if (left_.empty() || right_.empty()) {
        fail("NotAdmissible", "periods must be nonempty");
    }
    if (!mixed(left_) || !mixed(right_)) {
        fail("NotAdmissible", "each period must contain both x and y");
    }
    left_prefix_ = prefix_points(left_);
    core_prefix_ = prefix_points(core_);
    right_prefix_ = prefix_points(right_);
    left_step_ = left_prefix_.back();
    right_step_ = right_prefix_.back();
}

Frontier Frontier::from_text(const std::string& text) {
    const auto first = text.find('|');
    const auto second = text.find('|', first == std::string::npos ? 0 : first + 1);
    if (first == std::string::npos || second == std::string::npos) {
        fail("BadFrontier", "expected LEFT|CORE|RIGHT, got '" + text + "'");
    }
    return Frontier(parse_word(text.substr(0, first)),
                    parse_word(text.substr(first + 1, second - first - 1)),
                    parse_word(text.substr(second + 1)));
}

std::string Frontier::text() const {
    return word_str(left_) + "|" + word_str(core_) + "|" + word_str(right_);
}

Frontier& Frontier::set_variable(long long index, const std::string& name) {
    vars_[index] = name;
    return *this;
}

Letter Frontier::letter_at(long long i) const {
    const long long c = static_cast<long long>(core_.size());
    if (i >= 0) {
        return right_[static_cast<std::size_t>(i % static_cast<long long>(right_.size()))];
    }
    if (i >= -c) return core_[static_cast<std::size_t>(i + c)];
    const long long n = static_cast<long long>(left_.size());
    long long k = (i + c) % n;
    if (k < 0) k += n;
    return left_[static_cast<std::size_t>(k)];
}

Point Frontier::point_at(long long i) const {
    const long long c = static_cast<long long>(core_.size());
    if (i >= 0) {
        const long long n = static_cast<long long>(right_.size());
        const long long q = i / n, r = i % n;
        return scale(right_step_, q) + right_prefix_[static_cast<std::size_t>(r)];
    }
    const Point core_start = Point{0, 0} - core_prefix_.back();
    if (i >= -c) return core_start + core_prefix_[static_cast<std::size_t>(i + c)];
    const long long n = static_cast<long long>(left_.size());
    const long long off = -c - i; // > 0, counted leftwards from the core start
    const long long q = off / n, r = off % n;
    Point p = core_start - scale(left_step_, q);
    if (r > 0) p = p - (left_step_ - left_prefix_[static_cast<std::size_t>(n - r)]);
    return p;
}

std::pair<long long, long long> Frontier::column_index_range(long long x) const {
    const long long lo = first_true([&](long long i) { return point_at(i).x >= x; });
    const long long hi = first_true([&](long long i) { return point_at(i).x > x; }) - 1;
    assert(point_at(lo).x == x && point_at(hi).x == x);
    return {lo, hi};
}

std::pair<long long, long long> Frontier::row_index_range(long long y) const {
    const long long lo = first_true([&](long long i) { return point_at(i).y <= y; });
    const long long hi = first_true([&](long long i) { return point_at(i).y < y; }) - 1;
    assert(point_at(lo).y == y && point_at(hi).y == y);
    return {lo, hi};
}

Region Frontier::region(const Point& p) const {
    const auto [lo, hi] = column_index_range(p.x);
    if (p.y > point_at(lo).y) return Region::Below;
    if (p.y < point_at(hi).y) return Region::Above;
    return Region::On;
}

PointWord Frontier::word_of(const Point& p) const {
    const Region reg = region(p);
    PointWord pw;
    pw.region = reg;
    long long first = 0, last = 0;
    if (reg == Region::On) {
        const long long lo = column_index_range(p.x).first;
        pw.first_index = lo + (point_at(lo).y - p.y);
        return pw;
    }
    if (reg == Region::Below) {
        first = row_index_range(p.y).second;   // horizontal projection, west
        last = column_index_range(p.x).first;  // vertical projection, north
    } else {
        first = column_index_range(p.x).second; // vertical projection, south
        last = row_index_range(p.y).first;      // horizontal projection, east
    }
    assert(first < last);
    pw.first_index = first;
    pw.word.reserve(static_cast<std::size_t>(last - first));
    for (long long i = first; i < last; ++i) pw.word.push_back(letter_at(i));
    return pw;
}

Frontier Frontier::transposed() const {
    return Frontier(transpose_word(right_), transpose_word(core_),
                    transpose_word(left_));
}

Integer evaluate(const Frontier& f, const Point& p) {
    if (!f.all_ones()) {
        fail("BadFrontier", "integer evaluation needs all variables equal to 1");
    }
    const PointWord pw = f.word_of(p);
    if (pw.region == Region::On) return 1;
    // Below-words read y...x, above-words x...y; either way the value is the
    // coefficient sum of mu over the interior letters, which equals
    // mu(word)_22 in the below case.
    assert(pw.word.size() >= 2);
    if (pw.region == Region::Below) {
        assert(pw.word.front() == Letter::Y && pw.word.back() == Letter::X);
    } else {
        assert(pw.word.front() == Letter::X && pw.word.back() == Letter::Y);
    }
    IMat2 m = IMat2::identity();
    for (std::size_t i = 1; i + 1 < pw.word.size(); ++i) m = m * mu_letter(pw.word[i]);
    return m.coeff_sum();
}

LaurentPoly evaluate_general(const Frontier& f, const Point& p) {
    const PointWord pw = f.word_of(p);
    const auto var_at = [&](long long index) {
        auto it = f.variables().find(index);
        return it == f.variables().end() ? LaurentPoly(1)
                                         : LaurentPoly::variable(it->second);
    };
    if (pw.region == Region::On) return var_at(pw.first_index);
    if (pw.region == Region::Above) {
        fail("NotBelow", "evaluate_general expects a point on or below the frontier");
    }

    // Word a_0 x_1 a_1 ... x_{n+1} a_{n+1}: the outer letters drop out and
    // t = (1,a_0) mu(a_1,x_2,a_2)...mu(a_{n-1},x_n,a_n) (1,a_{n+1})^t /(a_1...a_n).
    const std::size_t letters = pw.word.size();
    std::vector<LaurentPoly> v(letters + 1);
    for (std::size_t i = 0; i <= letters; ++i) {
        v[i] = var_at(pw.first_index + static_cast<long long>(i));
    }
    LaurentPoly row0(1), row1 = v[0];
    for (std::size_t k = 1; k + 1 < letters; ++k) {
        // mu(a,x,b) = (a 1; 0 b), mu(a,y,b) = (b 0; 1 a)
        const LaurentPoly& a = v[k];
        const LaurentPoly& b = v[k + 1];
        LaurentPoly n0, n1;
        if (pw.word[k] == Letter::X) {
            n0 = row0 * a;
            n1 = row0 + row1 * b;
        } else {
            n0 = row0 * b + row1;
            n1 = row1 * a;
        }
        row0 = std::move(n0);
        row1 = std::move(n1);
    }
    LaurentPoly numerator = row0 + row1 * v[letters];

    Monomial denom;
    for (std::size_t i = 1; i < letters; ++i) {
        for (const auto& [m, c] : v[i].terms()) denom = denom * m;
    }
    LaurentPoly result;
    for (const auto& [m, c] : numerator.terms()) {
        result += LaurentPoly::term(m.div(denom), c);
    }
    return result;
}

IntSeq ray(const Frontier& f, const Point& origin, const Point& dir, long long count) {
    if (dir == Point{0, 0}) fail("BadDirection", "ray direction must be nonzero");
    if (count < 1) fail("BadCount", "ray needs count >= 1");
    IntSeq values;
    values.reserve(static_cast<std::size_t>(count));
    for (long long n = 0; n < count; ++n) {
        values.push_back(evaluate(f, origin + scale(dir, n)));
    }
    return values;
}

Integer linearization_coefficient(const Frontier& f, long long column_x) {
    const auto [lo, hi] = f.column_index_range(column_x);
    return to_integer(hi - lo + 1) + 1;
}

Integer semi_adjacent_minor(const Frontier& f, long long col1, long long col2,
                            long long row) {
    if (col1 >= col2) fail("BadColumns", "semi_adjacent_minor needs col1 < col2");
    const Integer a = evaluate(f, {col1, row});
    const Integer b = evaluate(f, {col2, row});
    const Integer c = evaluate(f, {col1, row + 1});
    const Integer d = evaluate(f, {col2, row + 1});
    return a * d - b * c;
}

Integer count_fringe_paths(const Word& w) {
    if (w.size() < 2 || w.front() != Letter::Y || w.back() != Letter::X) {
        fail("MalformedWord", "fringe-path word must start with y and end with x");
    }
    std::set<Point> fringe;
    Point cur{0, 0};
    fringe.insert(cur);
    fringe.insert(cur + Point{1, 1});
    for (Letter l : w) {
        cur = cur + step(l);
        fringe.insert(cur);
        fringe.insert(cur + Point{1, 1});
    }
    const Point target = cur;

    std::map<Point, Integer> memo;
    const std::function<Integer(const Point&)> count = [&](const Point& p) -> Integer {
        if (p == target) return 1;
        auto it = memo.find(p);
        if (it != memo.end()) return it->second;
        Integer total = 0;
        for (const Point next : {p + Point{1, 0}, p + Point{0, -1}}) {
            if (fringe.count(next)) total += count(next);
        }
        memo[p] = total;
        return total;
    };
    return count({0, 0});
}

TilingOracle TilingOracle::for_frontier(const Frontier& f) {
    return TilingOracle([f](const Point& p) { return evaluate(f, p); });
}

Integer TilingOracle::value(const Point& p) const {
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = memo_.find(p);
        if (it != memo_.end()) return it->second;
    }
    Integer v = eval_(p);
    std::lock_guard<std::mutex> lock(mutex_);
    memo_.emplace(p, v);
    return v;
}

std::vector<IntSeq> TilingOracle::window(long long x0, long long y0, long long w,
                                         long long h) const {
    std::vector<IntSeq> rows;
    rows.reserve(static_cast<std::size_t>(h));
    for (long long y = y0; y < y0 + h; ++y) {
        IntSeq row;
        row.reserve(static_cast<std::size_t>(w));
        for (long long x = x0; x < x0 + w; ++x) row.push_back(value({x, y}));
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace sl2
