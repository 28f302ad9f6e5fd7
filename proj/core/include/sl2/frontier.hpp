#pragma once

#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "sl2/laurent.hpp"
#include "sl2/mat2.hpp"
#include "sl2/numeric.hpp"
#include "sl2/words.hpp"

namespace sl2 {

// Plane coordinates, y-axis pointing downwards.
struct Point {
    long long x = 0;
    long long y = 0;

    Point operator+(const Point& o) const { return {x + o.x, y + o.y}; }
    Point operator-(const Point& o) const { return {x - o.x, y - o.y}; }
    bool operator==(const Point& o) const { return x == o.x && y == o.y; }
    bool operator!=(const Point& o) const { return !(*this == o); }
    bool operator<(const Point& o) const { return x != o.x ? x < o.x : y < o.y; }
};

inline Point scale(const Point& p, long long n) { return {p.x * n, p.y * n}; }

enum class Region { Below, On, Above };

struct PointWord {
    Word word;
    Region region;
    long long first_index = 0; // staircase index of the first projection point
};

/**
 * Ultimately periodic bi-infinite staircase word ^inf(left) core (right)^inf
 * embedded in the plane. Reading forward, x steps (+1,0) and y steps (0,-1);
 * the staircase position between core and right period is anchored at (0,0).
 * Staircase points are indexed by integers: point 0 is the anchor, letter i
 * joins point i to point i+1. Optional variables label staircase points by
 * index; an absent entry means the variable is 1.
 */
class Frontier {
  public:
    // Validates admissibility: both periods nonempty and containing x and y.
    Frontier(Word left, Word core, Word right);

    static Frontier from_text(const std::string& text); // "LEFT|CORE|RIGHT"
    std::string text() const;

    const Word& left() const { return left_; }
    const Word& core() const { return core_; }
    const Word& right() const { return right_; }

    Frontier& set_variable(long long index, const std::string& name);
    const std::map<long long, std::string>& variables() const { return vars_; }
    bool all_ones() const { return vars_.empty(); }

    Letter letter_at(long long i) const;
    Point point_at(long long i) const;

    Region region(const Point& p) const;
    PointWord word_of(const Point& p) const;

    // Staircase index interval occupying column x (nonempty for every column).
    std::pair<long long, long long> column_index_range(long long x) const;
    std::pair<long long, long long> row_index_range(long long y) const;

    // Reverse the bi-infinite word and exchange x and y.
    Frontier transposed() const;

  private:
    Word left_, core_, right_;
    std::map<long long, std::string> vars_;
    std::vector<Point> left_prefix_, core_prefix_, right_prefix_;
    Point left_step_, right_step_; // displacement of one full period
};

// Tiling value at p for a frontier with all variables 1; positive for every
// point. Below the frontier with word w this is mu(w)_22; on it, 1; above,
// the symmetric formula through the transposed word.
Integer evaluate(const Frontier& f, const Point& p);

// Laurent-polynomial tiling value for a decorated frontier at a point on or
// strictly below the frontier.
LaurentPoly evaluate_general(const Frontier& f, const Point& p);

// t(origin + n*dir) for n = 0..count-1.
IntSeq ray(const Frontier& f, const Point& origin, const Point& dir, long long count);

// k+1 where k is the number of staircase points in the column (all-ones
// variables).
Integer linearization_coefficient(const Frontier& f, long long column_x);

// det [t(c1,row) t(c2,row); t(c1,row+1) t(c2,row+1)]; independent of row and
// equal to the continuant of the linearization coefficients strictly between
// the columns.
Integer semi_adjacent_minor(const Frontier& f, long long col1, long long col2,
                            long long row);

// Number of monotone lattice paths (steps east and north) between the word's
// endpoints that stay on the staircase or its (1,1)-translate. Equals
// mu(w)_22 for every below-frontier word.
Integer count_fringe_paths(const Word& w);

/// Memoizing evaluator for any exact SL2-tiling; safe for concurrent reads.
class TilingOracle {
  public:
    explicit TilingOracle(std::function<Integer(const Point&)> eval)
        : eval_(std::move(eval)) {}

    static TilingOracle for_frontier(const Frontier& f);

    Integer value(const Point& p) const;
    // h rows of w values starting at top-left corner (x0, y0).
    std::vector<IntSeq> window(long long x0, long long y0, long long w,
                               long long h) const;

  private:
    std::function<Integer(const Point&)> eval_;
    mutable std::map<Point, Integer> memo_;
    mutable std::mutex mutex_;
};

} // namespace sl2
