#pragma once

#include <random>
#include <set>
#include <vector>

#include "sl2/dynkin.hpp"
#include "sl2/frontier.hpp"
#include "sl2/linrec.hpp"
#include "sl2/quiver.hpp"
#include "sl2/words.hpp"

namespace sl2test {

using namespace sl2;

using Rng = std::mt19937_64;

inline Word random_word(Rng& rng, std::size_t len) {
    Word w;
    for (std::size_t i = 0; i < len; ++i) {
        w.push_back(rng() % 2 ? Letter::X : Letter::Y);
    }
    return w;
}

// Random period containing both letters, length in [2, max_len].
inline Word random_period(Rng& rng, std::size_t max_len) {
    std::uniform_int_distribution<std::size_t> len_dist(2, max_len);
    for (;;) {
        Word w = random_word(rng, len_dist(rng));
        bool has_x = false, has_y = false;
        for (Letter l : w) (l == Letter::X ? has_x : has_y) = true;
        if (has_x && has_y) return w;
    }
}

inline Frontier random_frontier(Rng& rng, std::size_t max_period = 4,
                                std::size_t max_core = 4) {
    std::uniform_int_distribution<std::size_t> core_dist(0, max_core);
    return Frontier(random_period(rng, max_period), random_word(rng, core_dist(rng)),
                    random_period(rng, max_period));
}

// Independent path oracle: explicit depth-first enumeration of monotone
// paths inside the fringe (no matrices, no DP reuse of the implementation).
inline long brute_force_fringe_paths(const Word& w) {
    std::set<Point> fringe;
    Point cur{0, 0};
    fringe.insert(cur);
    fringe.insert(cur + Point{1, 1});
    for (Letter l : w) {
        cur = cur + (l == Letter::X ? Point{1, 0} : Point{0, -1});
        fringe.insert(cur);
        fringe.insert(cur + Point{1, 1});
    }
    const Point target = cur;
    long count = 0;
    std::vector<Point> stack{{0, 0}};
    while (!stack.empty()) {
        const Point p = stack.back();
        stack.pop_back();
        if (p == target) {
            ++count;
            continue;
        }
        for (const Point n : {p + Point{1, 0}, p + Point{0, -1}}) {
            if (fringe.count(n)) stack.push_back(n);
        }
    }
    return count;
}

// Random quiver on n vertices without loops or 2-cycles.
inline Quiver random_quiver(Rng& rng, std::size_t n, long max_mult = 2) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
    std::vector<Arrow> arrows;
    std::uniform_int_distribution<long> mult_dist(1, max_mult);
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = u + 1; v < n; ++v) {
            switch (rng() % 3) {
                case 0: break;
                case 1: arrows.emplace_back(names[u], names[v], mult_dist(rng)); break;
                default: arrows.emplace_back(names[v], names[u], mult_dist(rng)); break;
            }
        }
    }
    return Quiver(std::move(names), arrows);
}

inline QVec to_rationals(const IntSeq& seq) {
    QVec out;
    out.reserve(seq.size());
    for (const Integer& v : seq) out.emplace_back(v);
    return out;
}

// --- Cartan-kernel classification oracle -----------------------------------
//
// For a connected simple graph: Dynkin iff the Cartan matrix is positive
// definite, extended iff positive semidefinite and singular (its kernel then
// carries the positive additive function), neither otherwise. Decided
// exactly through the characteristic polynomial: a symmetric matrix is PSD
// iff every sum of k-by-k principal minors is nonnegative, and those sums
// are the (sign-alternated) characteristic coefficients.
enum class OracleKind { Dynkin, Extended, Neither };

inline OracleKind cartan_oracle(const Graph& g) {
    const auto cm = cartan_matrix(g);
    const std::size_t n = cm.size();
    QMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) m.at(i, j) = cm[i][j];
    }
    const QVec coef = char_poly(m); // det(tI - C) = sum coef[i] t^i
    // det(tI - C) = prod (t - mu_i); e_k = sum of k-by-k principal minors
    // satisfies coef[n-k] = (-1)^k e_k.
    bool all_pos = true, all_nonneg = true;
    for (std::size_t k = 1; k <= n; ++k) {
        Rational e = coef[n - k];
        if (k % 2 == 1) e = -e;
        if (e <= 0) all_pos = false;
        if (e < 0) all_nonneg = false;
    }
    if (all_pos) return OracleKind::Dynkin;
    if (all_nonneg) return OracleKind::Extended;
    return OracleKind::Neither;
}

// Exact rational kernel vector of the Cartan matrix (nonzero only when the
// matrix is singular); used to confirm the positive additive function of
// extended diagrams.
inline std::optional<QVec> cartan_kernel_vector(const Graph& g) {
    const auto cm = cartan_matrix(g);
    const std::size_t n = cm.size();
    std::vector<QVec> a(n, QVec(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a[i][j] = Rational(cm[i][j]);
    }
    // Gauss-Jordan; record pivot columns.
    std::vector<long> pivot_of_col(n, -1);
    std::size_t row = 0;
    for (std::size_t col = 0; col < n && row < n; ++col) {
        std::size_t p = row;
        while (p < n && a[p][col] == 0) ++p;
        if (p == n) continue;
        std::swap(a[p], a[row]);
        const Rational inv = a[row][col];
        for (auto& x : a[row]) x /= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == row || a[i][col] == 0) continue;
            const Rational f = a[i][col];
            for (std::size_t j = 0; j < n; ++j) a[i][j] -= f * a[row][j];
        }
        pivot_of_col[col] = static_cast<long>(row);
        ++row;
    }
    // First free column gives a kernel vector.
    for (std::size_t col = 0; col < n; ++col) {
        if (pivot_of_col[col] != -1) continue;
        QVec v(n, Rational(0));
        v[col] = 1;
        for (std::size_t c = 0; c < n; ++c) {
            if (pivot_of_col[c] != -1) {
                v[c] = -a[static_cast<std::size_t>(pivot_of_col[c])][col];
            }
        }
        return v;
    }
    return std::nullopt;
}

// --- enumeration of connected graphs up to isomorphism ----------------------

inline int pair_index(int n, int i, int j) {
    // index of the pair (i < j) among all pairs of 0..n-1, row by row
    int idx = 0;
    for (int a = 0; a < i; ++a) idx += n - 1 - a;
    return idx + (j - i - 1);
}

inline std::uint32_t canonical_mask(int n, std::uint32_t mask) {
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::uint32_t best = ~0u;
    const int pairs = n * (n - 1) / 2;
    do {
        std::uint32_t remapped = 0;
        int idx = 0;
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j, ++idx) {
                if (mask & (1u << idx)) {
                    const int a = std::min(perm[i], perm[j]);
                    const int b = std::max(perm[i], perm[j]);
                    remapped |= 1u << pair_index(n, a, b);
                }
            }
        }
        best = std::min(best, remapped);
        (void)pairs;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

// All connected graphs on exactly n vertices up to isomorphism, as edge
// masks. Built by attaching a fresh vertex to every nonempty neighbour
// subset of each smaller graph (every connected graph has a non-cut vertex,
// so this reaches everything) and deduplicating by canonical form.
inline std::vector<std::uint32_t> connected_graphs_up_to_iso(int n) {
    std::vector<std::uint32_t> cur{0}; // the one-vertex graph
    for (int size = 2; size <= n; ++size) {
        std::set<std::uint32_t> next;
        for (std::uint32_t g : cur) {
            // Re-encode the (size-1)-vertex mask in the size-vertex indexing.
            std::uint32_t base = 0;
            int idx = 0;
            for (int i = 0; i < size - 1; ++i) {
                for (int j = i + 1; j < size - 1; ++j, ++idx) {
                    if (g & (1u << idx)) base |= 1u << pair_index(size, i, j);
                }
            }
            for (std::uint32_t nb = 1; nb < (1u << (size - 1)); ++nb) {
                std::uint32_t mask = base;
                for (int i = 0; i < size - 1; ++i) {
                    if (nb & (1u << i)) mask |= 1u << pair_index(size, i, size - 1);
                }
                next.insert(canonical_mask(size, mask));
            }
        }
        cur.assign(next.begin(), next.end());
    }
    return cur;
}

inline Graph graph_of_mask(int n, std::uint32_t mask) {
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back(std::to_string(i));
    std::vector<std::pair<std::string, std::string>> edges;
    int idx = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j, ++idx) {
            if (mask & (1u << idx)) edges.emplace_back(names[i], names[j]);
        }
    }
    return Graph(std::move(names), edges);
}

} // namespace sl2test
