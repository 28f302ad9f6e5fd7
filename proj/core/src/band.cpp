#include "sl2/band.hpp"

#include <cassert>

namespace sl2 {

BandTiling::BandTiling(Band band) : band_(std::move(band)) {
    if (band_.width() < 4) fail("BandInvalid", "band width must be at least 4");
    const long long rows = band_.rows();
    if (rows < 2) fail("BandInvalid", "band needs at least two rows");
    for (const auto& s : band_.seqs) {
        if (static_cast<long long>(s.size()) != rows) {
            fail("BandInvalid", "band sequences must have equal length");
        }
    }
    const long long k = static_cast<long long>(band_.width());
    for (long long r = band_.first_row; r + 1 <= last_row(); ++r) {
        // Columns covered by both row r and row r+1.
        for (long long c = r + 1 + band_.col_offset;
             c + 1 <= r + band_.col_offset + k - 1; ++c) {
            const Integer det = at({c, r}) * at({c + 1, r + 1}) -
                                at({c + 1, r}) * at({c, r + 1});
            if (det != 1) {
                fail("BandInvalid", "interior minor at column " + std::to_string(c) +
                                        ", row " + std::to_string(r) + " is " +
                                        det.get_str() + ", expected 1");
            }
        }
    }
}

bool BandTiling::in_band(const Point& p) const {
    if (p.y < band_.first_row || p.y > last_row()) return false;
    const long long j = p.x - p.y - band_.col_offset;
    return j >= 0 && j < static_cast<long long>(band_.width());
}

const Integer& BandTiling::at(const Point& p) const {
    assert(in_band(p));
    const long long j = p.x - p.y - band_.col_offset;
    return band_.seqs[static_cast<std::size_t>(j)]
                     [static_cast<std::size_t>(p.y - band_.first_row)];
}

Integer BandTiling::alpha(long long column) const {
    auto it = alphas_.find(column);
    if (it != alphas_.end()) return it->second;

    const long long k = static_cast<long long>(band_.width());
    const long long off = band_.col_offset;
    // Rows whose band cells include both column-1 and column+1.
    const long long det_lo = column - off - k + 2;
    const long long det_hi = column - off - 1;
    for (long long r = det_lo; r + 1 <= det_hi; ++r) {
        if (r < band_.first_row || r + 1 > last_row()) continue;
        const Integer a = at({column - 1, r}) * at({column + 1, r + 1}) -
                          at({column + 1, r}) * at({column - 1, r + 1});
        alphas_[column] = a;
        return a;
    }
    // Diagonal bands hide those row pairs near their edges; the three-column
    // relation on a single fully covered row still pins alpha.
    for (long long r = det_lo; r <= det_hi; ++r) {
        if (r < band_.first_row || r > last_row()) continue;
        const Integer& mid = at({column, r});
        if (mid == 0) continue;
        const Integer sum = at({column - 1, r}) + at({column + 1, r});
        if (sum % mid != 0) {
            fail("BandInvalid", "column " + std::to_string(column) +
                                    " has no integral linearization coefficient");
        }
        Integer a = sum / mid;
        alphas_[column] = a;
        return a;
    }
    fail("BandInvalid", "band rows do not determine the linearization coefficient "
                        "of column " +
                            std::to_string(column));
}

Integer BandTiling::value(const Point& p) const {
    if (p.y < band_.first_row || p.y > last_row()) {
        fail("RowOutsideBand", "row " + std::to_string(p.y) +
                                   " is not covered by the band");
    }
    if (in_band(p)) return at(p);
    const long long k = static_cast<long long>(band_.width());
    const long long west_edge = p.y + band_.col_offset;
    const long long east_edge = west_edge + k - 1;
    if (p.x > east_edge) {
        Integer prev = at({east_edge - 1, p.y});
        Integer cur = at({east_edge, p.y});
        for (long long c = east_edge + 1; c <= p.x; ++c) {
            Integer next = alpha(c - 1) * cur - prev;
            prev = std::move(cur);
            cur = std::move(next);
        }
        return cur;
    }
    Integer prev = at({west_edge + 1, p.y});
    Integer cur = at({west_edge, p.y});
    for (long long c = west_edge - 1; c >= p.x; --c) {
        Integer next = alpha(c + 1) * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

TilingOracle BandTiling::oracle() const {
    return TilingOracle([this](const Point& p) { return value(p); });
}

FringeTiling::FringeTiling(Frontier shape, std::function<Integer(long long)> staircase_value,
                           std::function<Integer(long long)> translate_value)
    : shape_(std::move(shape)), stair_(std::move(staircase_value)),
      trans_(std::move(translate_value)) {}

Integer FringeTiling::value(const Point& p) const {
    auto it = memo_.find(p);
    if (it != memo_.end()) return it->second;
    Integer v = value_inner(p);
    memo_.emplace(p, v);
    return v;
}

Integer FringeTiling::value_inner(const Point& p) const {
    const Region reg = shape_.region(p);
    if (reg == Region::On) {
        return stair_(shape_.word_of(p).first_index);
    }
    if (reg == Region::Below) {
        const Point q = p - Point{1, 1};
        if (shape_.region(q) == Region::On) {
            return trans_(shape_.word_of(q).first_index);
        }
        const Integer nw = value(p - Point{1, 1});
        const Integer n = value({p.x, p.y - 1});
        const Integer w = value({p.x - 1, p.y});
        if (nw == 0) fail("BandInvalid", "fringe completion hit a zero divisor");
        const Integer num = 1 + n * w;
        if (num % nw != 0) fail("BandInvalid", "fringe completion is not integral");
        return num / nw;
    }
    const Integer se = value(p + Point{1, 1});
    const Integer e = value({p.x + 1, p.y});
    const Integer s = value({p.x, p.y + 1});
    if (se == 0) fail("BandInvalid", "fringe completion hit a zero divisor");
    const Integer num = 1 + e * s;
    if (num % se != 0) fail("BandInvalid", "fringe completion is not integral");
    return num / se;
}

TilingOracle FringeTiling::oracle() const {
    return TilingOracle([this](const Point& p) { return value(p); });
}

namespace {

Integer continuant_slice(const IntSeq& a, long long a_first, long long from,
                         long long to) {
    // q(a_from, ..., a_to); empty when from > to.
    if (from > to) return 1;
    if (from < a_first ||
        to >= a_first + static_cast<long long>(a.size())) {
        fail("BadWindow", "continuant tiling window exceeds the provided sequence");
    }
    IntSeq slice(a.begin() + static_cast<std::ptrdiff_t>(from - a_first),
                 a.begin() + static_cast<std::ptrdiff_t>(to - a_first + 1));
    return continuant(slice);
}

} // namespace

Integer continuant_tiling_value(const IntSeq& a, long long a_first, const Point& p) {
    if (p.x <= p.y + 1) return continuant_slice(a, a_first, p.x, p.y);
    if (p.x == p.y + 2) return 0;
    return -continuant_slice(a, a_first, p.y + 2, p.x - 2);
}

std::vector<IntSeq> continuant_window(const IntSeq& a, long long a_first, long long x0,
                                      long long y0, long long w, long long h) {
    std::vector<IntSeq> rows;
    rows.reserve(static_cast<std::size_t>(h));
    for (long long y = y0; y < y0 + h; ++y) {
        IntSeq row;
        row.reserve(static_cast<std::size_t>(w));
        for (long long x = x0; x < x0 + w; ++x) {
            row.push_back(continuant_tiling_value(a, a_first, {x, y}));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace sl2
