#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "sl2/numeric.hpp"
#include "sl2/quiver.hpp"

namespace sl2 {

/// Simple undirected graph without loops.
struct Graph {
    std::vector<std::string> vertices;
    std::set<std::pair<std::size_t, std::size_t>> edges; // normalized first < second

    Graph() = default;
    Graph(std::vector<std::string> names,
          const std::vector<std::pair<std::string, std::string>>& edge_list);

    std::size_t size() const { return vertices.size(); }
    std::size_t index_of(const std::string& name) const;
    std::size_t degree(std::size_t v) const;
    std::vector<std::size_t> neighbors(std::size_t v) const;
    bool connected() const;
};

enum class DynkinFamily { A, D, E6, E7, E8 };

struct Classification {
    enum class Kind { Dynkin, Extended, Neither };

    Kind kind = Kind::Neither;
    DynkinFamily family = DynkinFamily::A;
    long index = 0; // A_n/D_n/E_n subscripts; extended diagrams have index+1 nodes
    // Table additive function, filled for extended diagrams.
    std::map<std::string, Rational> additive;

    std::string name() const; // "A5", "E6~", "Neither"
};

// Shape recognition: cycles are extended A; trees are analyzed through
// degrees and leg lengths with the extended diagrams as excluded minors.
Classification classify_graph(const Graph& g); // throws NotConnected

// The table additive function of an extended diagram (2f(v) equals the
// neighbor sum at every vertex).
std::map<std::string, Rational> additive_function(const Classification& c);

enum class FunctionKind { Additive, SubadditiveNotAdditive, NotSubadditive };

// Exact comparison of 2f(v) against the neighbor sum at every vertex.
FunctionKind check_function(const Graph& g, const std::map<std::string, Rational>& f);

// 2 on the diagonal, -1 on edges; additive functions span its kernel.
std::vector<std::vector<long>> cartan_matrix(const Graph& g);

enum class Growth { PeriodicBounded, UnboundedRational, ConjecturedIrrational };

// Frieze growth predicted from the underlying graph's classification; the
// Neither case is conjectural.
Growth predict_growth(const Quiver& q);

std::string growth_name(Growth g);
std::string function_kind_name(FunctionKind k);

} // namespace sl2
