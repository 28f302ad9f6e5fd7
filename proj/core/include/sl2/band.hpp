#pragma once

#include <functional>
#include <map>
#include <vector>

#include "sl2/frontier.hpp"
#include "sl2/numeric.hpp"

namespace sl2 {

/**
 * k >= 4 parallel sequences in staircase offset: entry seqs[j][i] is the
 * value of sequence j at row n = first_row + i, placed at plane position
 * (x = n + j + col_offset, y = n). Every adjacent 2x2 minor inside the band
 * must equal 1.
 */
struct Band {
    long long first_row = 0;
    long long col_offset = 0;
    std::vector<IntSeq> seqs;

    std::size_t width() const { return seqs.size(); }
    long long rows() const {
        return seqs.empty() ? 0 : static_cast<long long>(seqs.front().size());
    }
};

/**
 * The unique tame extension of a band to the plane strip whose rows the band
 * covers: column linearization coefficients come out of the band
 * (alpha = det of the 2x2 on columns c-1, c+1 and adjacent rows, falling
 * back to the three-column relation when the diagonal shape hides those
 * rows) and columns extend east/west through C0 + C2 = alpha * C1.
 */
class BandTiling {
  public:
    explicit BandTiling(Band band); // throws BandInvalid

    Integer value(const Point& p) const;
    Integer alpha(long long column) const;
    TilingOracle oracle() const;

    long long first_row() const { return band_.first_row; }
    long long last_row() const { return band_.first_row + band_.rows() - 1; }

  private:
    bool in_band(const Point& p) const;
    const Integer& at(const Point& p) const;

    Band band_;
    mutable std::map<long long, Integer> alphas_;
};

/**
 * Tame extension of values prescribed on a fringe: the staircase points of a
 * frontier shape together with their (1,1)-translates. Values are supplied
 * by staircase index; extension is SL2-completion with exact division, so
 * all prescribed values must be nonzero along the completion paths
 * (positive fringes always are).
 */
class FringeTiling {
  public:
    FringeTiling(Frontier shape, std::function<Integer(long long)> staircase_value,
                 std::function<Integer(long long)> translate_value);

    Integer value(const Point& p) const;
    TilingOracle oracle() const;

  private:
    Integer value_inner(const Point& p) const;

    Frontier shape_;
    std::function<Integer(long long)> stair_, trans_;
    mutable std::map<Point, Integer> memo_;
};

// The skew-symmetric tame tiling determined by a two-sided sequence along
// the diagonal below a diagonal of 1s: a_n sits at (n, n), the diagonals
// x-y = 1, 2, 3 hold 1, 0, -1, entries below are continuants
// q(a_u, ..., a_v) and entries above their negatives.
Integer continuant_tiling_value(const IntSeq& a, long long a_first, const Point& p);

std::vector<IntSeq> continuant_window(const IntSeq& a, long long a_first,
                                      long long x0, long long y0, long long w,
                                      long long h);

} // namespace sl2
