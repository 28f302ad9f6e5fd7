#include "sl2/rayrep.hpp"

#include <numeric>

namespace sl2 {

namespace {

QMat qmat_of(const IMat2& m) {
    QMat q(2, 2);
    q.at(0, 0) = Rational(m.a);
    q.at(0, 1) = Rational(m.b);
    q.at(1, 0) = Rational(m.c);
    q.at(1, 1) = Rational(m.d);
    return q;
}

long long count_letter(const Word& w, Letter l) {
    long long n = 0;
    for (Letter x : w) n += x == l;
    return n;
}

struct RayWord {
    Word word;
    long long first = 0; // index of the horizontal projection
    long long last = 0;  // index of the vertical projection
};

RayWord word_at(const Frontier& f, const Point& p) {
    const PointWord pw = f.word_of(p);
    if (pw.region != Region::Below) fail("Internal", "expected a below-frontier point");
    return {pw.word, pw.first_index,
            pw.first_index + static_cast<long long>(pw.word.size())};
}

Word letters_range(const Frontier& f, long long from, long long to) {
    Word w;
    w.reserve(static_cast<std::size_t>(to - from));
    for (long long i = from; i < to; ++i) w.push_back(f.letter_at(i));
    return w;
}

} // namespace

RayRep ray_representation(const Frontier& f, const Point& origin, const Point& dir) {
    if (dir.x < 0 || dir.y < 0 || (dir.x == 0 && dir.y == 0)) {
        fail("BadDirection",
             "ray representations require a nonzero componentwise nonnegative direction");
    }
    if (!f.all_ones()) {
        fail("BadFrontier", "ray representations require all variables equal to 1");
    }

    const long long cols_per_right = count_letter(f.right(), Letter::X);
    const long long rows_per_left = count_letter(f.left(), Letter::Y);
    const long long qx = dir.x == 0 ? 1 : cols_per_right / std::gcd(dir.x, cols_per_right);
    const long long qy = dir.y == 0 ? 1 : rows_per_left / std::gcd(dir.y, rows_per_left);
    const long long q = std::lcm(qx, qy);
    const long long left_shift =
        dir.y == 0 ? 0
                   : dir.y * q / rows_per_left * static_cast<long long>(f.left().size());
    const long long right_shift =
        dir.x == 0 ? 0
                   : dir.x * q / cols_per_right * static_cast<long long>(f.right().size());
    const long long core_len = static_cast<long long>(f.core().size());

    // Wait until the point is strictly below with both projections strictly
    // inside the periodic parts of the frontier: the horizontal projection
    // is the row index whose following letter is y, so its phase (and the
    // letter before the vertical projection) must already be periodic.
    long long start = 0;
    for (;; ++start) {
        if (start > 100000) fail("Internal", "ray failed to stabilize");
        const Point p = origin + scale(dir, start);
        if (f.region(p) != Region::Below) continue;
        const RayWord rw = word_at(f, p);
        const bool left_ok = dir.y == 0 || rw.first <= -core_len - 1;
        const bool right_ok = dir.x == 0 || rw.last >= 1;
        if (left_ok && right_ok) break;
    }

    std::vector<LinearRep> classes;
    classes.reserve(static_cast<std::size_t>(q));
    for (long long i = 0; i < q; ++i) {
        const RayWord rw = word_at(f, origin + scale(dir, start + i));
        const Word prefix = letters_range(f, rw.first - left_shift, rw.first);
        const Word suffix = letters_range(f, rw.last, rw.last + right_shift);

        // The periodic growth law must hold exactly.
        for (long long reps = 1; reps <= 2; ++reps) {
            const RayWord grown = word_at(f, origin + scale(dir, start + i + reps * q));
            Word expect;
            for (long long k = 0; k < reps; ++k) expect.insert(expect.end(), prefix.begin(), prefix.end());
            expect.insert(expect.end(), rw.word.begin(), rw.word.end());
            for (long long k = 0; k < reps; ++k) expect.insert(expect.end(), suffix.begin(), suffix.end());
            if (grown.word != expect) fail("Internal", "ray word growth law violated");
        }

        // t(n) = (0,1) mu(prefix)^n mu(word) mu(suffix)^n (0,1)^t
        //      = (lambda x gamma^t) (mu(prefix) x mu(suffix)^t)^n vec(mu(word)).
        const QMat growth = QMat::kronecker(qmat_of(mu(prefix)), qmat_of(mu(suffix)).transpose());
        QVec lambda(4, Rational(0));
        lambda[3] = 1;
        const IMat2 center = mu(rw.word);
        QVec gamma{Rational(center.a), Rational(center.b), Rational(center.c),
                   Rational(center.d)};
        classes.push_back(make_rep(std::move(lambda), growth, std::move(gamma)));
    }

    RayRep result{merge(classes), start, q};
    const QVec sample = result.rep.terms(static_cast<std::size_t>(2 * q + 4));
    for (long long m = 0; m < 2 * q + 4; ++m) {
        const Rational& got = sample[static_cast<std::size_t>(m)];
        const Integer want = evaluate(f, origin + scale(dir, start + m));
        if (!is_integral(got) || got.get_num() != want) {
            fail("Internal", "ray representation disagrees with the tiling");
        }
    }
    return result;
}

} // namespace sl2
