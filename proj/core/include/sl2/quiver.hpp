#pragma once

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "sl2/frontier.hpp"
#include "sl2/laurent.hpp"
#include "sl2/linrec.hpp"
#include "sl2/numeric.hpp"

namespace sl2 {

using Arrow = std::tuple<std::string, std::string, long>; // (from, to, multiplicity)

/**
 * Finite quiver without loops or 2-cycles, stored as the antisymmetric
 * matrix b[u][v] = #arrows u->v minus #arrows v->u.
 */
class Quiver {
  public:
    Quiver(std::vector<std::string> vertices, const std::vector<Arrow>& arrows);

    const std::vector<std::string>& vertices() const { return vertices_; }
    std::size_t size() const { return vertices_.size(); }
    std::size_t index_of(const std::string& name) const;
    long b(std::size_t u, std::size_t v) const { return b_[u][v]; }
    // Arrow multiplicity u -> v (zero or positive).
    long arrows(std::size_t u, std::size_t v) const { return std::max(b_[u][v], 0L); }
    std::vector<Arrow> arrow_list() const;

    Quiver mutate(const std::string& u) const;
    LaurentPoly mutation_polynomial(const std::string& u) const;

    bool is_acyclic() const;
    // Sources-first order; ties broken by vertex name.
    std::vector<std::size_t> topological_order() const; // throws NotAcyclic

    bool operator==(const Quiver& o) const {
        return vertices_ == o.vertices_ && b_ == o.b_;
    }
    bool operator!=(const Quiver& o) const { return !(*this == o); }

  private:
    Quiver() = default;
    std::vector<std::string> vertices_;
    std::vector<std::vector<long>> b_;
};

/// Quiver with a cluster of rational functions attached to its vertices.
struct Seed {
    Quiver quiver;
    std::map<std::string, RationalFunction> cluster;

    static Seed initial(const Quiver& q);
};

// Exchange at u: the new variable is (prod in + prod out)/x_u, normalized to
// a Laurent polynomial (its failure would contradict the Laurent phenomenon,
// hence LaurentViolation flags an implementation bug).
Seed mutate_seed(const Seed& s, const std::string& u);

struct NumericFrieze {
    Quiver quiver;
    long long first_n = 0;
    std::map<std::string, IntSeq> rows;

    const Integer& at(const std::string& v, long long n) const;
};

// a(v,0) = 1 and a(v,n+1) = (1 + prod_{w->v} a(w,n+1) prod_{v->w} a(w,n)) / a(v,n),
// each division checked exact (NonIntegralStep would flag a bug).
NumericFrieze frieze_numeric(const Quiver& q, long long steps);
// Two-sided frieze on n in [from, to] (from <= 0 <= to).
NumericFrieze frieze_numeric_range(const Quiver& q, long long from, long long to);

struct SymbolicFrieze {
    Quiver quiver;
    std::map<std::string, std::vector<LaurentPoly>> rows;
    bool coefficients_nonnegative = true;

    const LaurentPoly& at(const std::string& v, long long n) const;
};

// Same recursion with a(v,0) = x_v; all entries are Laurent polynomials and
// specializing every variable to 1 reproduces the numeric frieze.
SymbolicFrieze frieze_symbolic(const Quiver& q, long long steps);

/// Outcome of matching a cycle quiver's frieze against its tiling rays.
struct BridgeReport {
    std::vector<std::string> cycle_order;
    Word word;
    Frontier frontier;
    std::map<std::string, IntSeq> frieze_rows;
    std::map<std::string, IntSeq> ray_rows;
    bool match = false;
    std::map<std::string, Recursion> recursions;
};

// For an acyclically oriented cycle: encode the orientation as a word
// (x for j -> j+1, y for j <- j+1), embed the purely periodic frontier, and
// check the frieze sequences against the diagonal rays from the embedded
// staircase points.
BridgeReport atilde_bridge(const Quiver& q, long long steps);

} // namespace sl2
