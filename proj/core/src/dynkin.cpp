#include "sl2/dynkin.hpp"

#include <algorithm>
#include <cstdlib>

namespace sl2 {

Graph::Graph(std::vector<std::string> names,
             const std::vector<std::pair<std::string, std::string>>& edge_list)
    : vertices(std::move(names)) {
    std::set<std::string> seen(vertices.begin(), vertices.end());
    if (seen.size() != vertices.size()) fail("BadGraph", "duplicate vertex names");
    for (const auto& [a, b] : edge_list) {
        const std::size_t u = index_of(a), v = index_of(b);
        if (u == v) fail("HasLoop", "loop at vertex '" + a + "'");
        edges.insert({std::min(u, v), std::max(u, v)});
    }
}

std::size_t Graph::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (vertices[i] == name) return i;
    }
    fail("UnknownVertex", "no vertex named '" + name + "'");
}

std::size_t Graph::degree(std::size_t v) const { return neighbors(v).size(); }

std::vector<std::size_t> Graph::neighbors(std::size_t v) const {
    std::vector<std::size_t> out;
    for (const auto& [a, b] : edges) {
        if (a == v) out.push_back(b);
        if (b == v) out.push_back(a);
    }
    return out;
}

bool Graph::connected() const {
    if (vertices.empty()) return false;
    std::vector<bool> seen(size(), false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    std::size_t visited = 1;
    while (!stack.empty()) {
        const std::size_t v = stack.back();
        stack.pop_back();
        for (std::size_t w : neighbors(v)) {
            if (!seen[w]) {
                seen[w] = true;
                ++visited;
                stack.push_back(w);
            }
        }
    }
    return visited == size();
}

std::string Classification::name() const {
    if (kind == Kind::Neither) return "Neither";
    std::string base;
    switch (family) {
        case DynkinFamily::A: base = "A" + std::to_string(index); break;
        case DynkinFamily::D: base = "D" + std::to_string(index); break;
        case DynkinFamily::E6: base = "E6"; break;
        case DynkinFamily::E7: base = "E7"; break;
        case DynkinFamily::E8: base = "E8"; break;
    }
    return kind == Kind::Extended ? base + "~" : base;
}

namespace {

// Walk a leg away from `from` starting at `first`; returns the vertex
// indices of the leg in order.
std::vector<std::size_t> walk_leg(const Graph& g, std::size_t from, std::size_t first) {
    std::vector<std::size_t> leg{first};
    std::size_t prev = from, cur = first;
    while (g.degree(cur) == 2) {
        const auto nb = g.neighbors(cur);
        const std::size_t next = nb[0] == prev ? nb[1] : nb[0];
        leg.push_back(next);
        prev = cur;
        cur = next;
    }
    // The leg must end in a leaf for the shapes handled here.
    return leg;
}

void assign_additive(Classification& c, const Graph& g,
                     const std::map<std::size_t, long>& values) {
    for (const auto& [v, val] : values) c.additive[g.vertices[v]] = Rational(val);
    // The table must be exactly additive; anything else is a bug.
    for (std::size_t v = 0; v < g.size(); ++v) {
        Rational sum = 0;
        for (std::size_t w : g.neighbors(v)) sum += c.additive.at(g.vertices[w]);
        if (Rational(2) * c.additive.at(g.vertices[v]) != sum) {
            fail("Internal", "additive table construction failed");
        }
    }
}

} // namespace

Classification classify_graph(const Graph& g) {
    if (!g.connected()) fail("NotConnected", "classification needs a connected graph");
    const std::size_t n = g.size();
    Classification c;

    const std::size_t edge_count = g.edges.size();
    if (edge_count >= n) {
        // Connected with a cycle: an extended A diagram only when it is the
        // bare cycle, otherwise it properly contains one.
        bool all_deg2 = true;
        for (std::size_t v = 0; v < n; ++v) {
            if (g.degree(v) != 2) all_deg2 = false;
        }
        if (edge_count == n && all_deg2 && n >= 3) {
            c.kind = Classification::Kind::Extended;
            c.family = DynkinFamily::A;
            c.index = static_cast<long>(n) - 1;
            std::map<std::size_t, long> vals;
            for (std::size_t v = 0; v < n; ++v) vals[v] = 1;
            assign_additive(c, g, vals);
        }
        return c;
    }

    // Tree analysis.
    std::size_t max_deg = 0;
    std::vector<std::size_t> branch;
    for (std::size_t v = 0; v < n; ++v) {
        max_deg = std::max(max_deg, g.degree(v));
        if (g.degree(v) >= 3) branch.push_back(v);
    }

    if (max_deg >= 4) {
        // Only the 4-star survives; it is extended D4.
        if (n == 5 && max_deg == 4 && branch.size() == 1) {
            c.kind = Classification::Kind::Extended;
            c.family = DynkinFamily::D;
            c.index = 4;
            std::map<std::size_t, long> vals;
            for (std::size_t v = 0; v < n; ++v) vals[v] = v == branch[0] ? 2 : 1;
            assign_additive(c, g, vals);
        }
        return c;
    }

    if (branch.empty()) {
        c.kind = Classification::Kind::Dynkin;
        c.family = DynkinFamily::A;
        c.index = static_cast<long>(n);
        return c;
    }

    if (branch.size() == 1) {
        const std::size_t center = branch[0];
        std::vector<std::vector<std::size_t>> legs;
        for (std::size_t first : g.neighbors(center)) {
            legs.push_back(walk_leg(g, center, first));
        }
        std::sort(legs.begin(), legs.end(),
                  [](const auto& a, const auto& b) { return a.size() < b.size(); });
        const long r = static_cast<long>(legs[0].size());
        const long s = static_cast<long>(legs[1].size());
        const long t = static_cast<long>(legs[2].size());
        std::map<std::size_t, long> vals;
        if (r == 1 && s == 1) {
            c.kind = Classification::Kind::Dynkin;
            c.family = DynkinFamily::D;
            c.index = t + 3;
        } else if (r == 1 && s == 2 && t == 2) {
            c.kind = Classification::Kind::Dynkin;
            c.family = DynkinFamily::E6;
            c.index = 6;
        } else if (r == 1 && s == 2 && t == 3) {
            c.kind = Classification::Kind::Dynkin;
            c.family = DynkinFamily::E7;
            c.index = 7;
        } else if (r == 1 && s == 2 && t == 4) {
            c.kind = Classification::Kind::Dynkin;
            c.family = DynkinFamily::E8;
            c.index = 8;
        } else if (r == 2 && s == 2 && t == 2) {
            c.kind = Classification::Kind::Extended;
            c.family = DynkinFamily::E6;
            c.index = 6;
            vals[center] = 3;
            for (const auto& leg : legs) {
                vals[leg[0]] = 2;
                vals[leg[1]] = 1;
            }
            assign_additive(c, g, vals);
        } else if (r == 1 && s == 3 && t == 3) {
            c.kind = Classification::Kind::Extended;
            c.family = DynkinFamily::E7;
            c.index = 7;
            vals[center] = 4;
            vals[legs[0][0]] = 2;
            for (const auto* leg : {&legs[1], &legs[2]}) {
                vals[(*leg)[0]] = 3;
                vals[(*leg)[1]] = 2;
                vals[(*leg)[2]] = 1;
            }
            assign_additive(c, g, vals);
        } else if (r == 1 && s == 2 && t == 5) {
            c.kind = Classification::Kind::Extended;
            c.family = DynkinFamily::E8;
            c.index = 8;
            vals[center] = 6;
            vals[legs[0][0]] = 3;
            vals[legs[1][0]] = 4;
            vals[legs[1][1]] = 2;
            for (std::size_t i = 0; i < 5; ++i) {
                vals[legs[2][i]] = 5 - static_cast<long>(i);
            }
            assign_additive(c, g, vals);
        }
        return c;
    }

    if (branch.size() == 2) {
        // Double fork: both branch vertices carry exactly two leaf
        // neighbours, everything else lies on the path between them.
        std::size_t leaves = 0;
        for (std::size_t v = 0; v < n; ++v) leaves += g.degree(v) == 1;
        bool forks_ok = true;
        for (std::size_t b : branch) {
            std::size_t leaf_nbrs = 0;
            for (std::size_t w : g.neighbors(b)) leaf_nbrs += g.degree(w) == 1;
            if (leaf_nbrs != 2) forks_ok = false;
        }
        if (leaves == 4 && forks_ok) {
            c.kind = Classification::Kind::Extended;
            c.family = DynkinFamily::D;
            c.index = static_cast<long>(n) - 1;
            std::map<std::size_t, long> vals;
            for (std::size_t v = 0; v < n; ++v) vals[v] = g.degree(v) == 1 ? 1 : 2;
            assign_additive(c, g, vals);
        }
        return c;
    }

    return c; // three or more branch vertices contain extended D properly
}

std::map<std::string, Rational> additive_function(const Classification& c) {
    if (c.kind != Classification::Kind::Extended) {
        fail("NotExtended", "additive functions exist for extended diagrams only");
    }
    return c.additive;
}

FunctionKind check_function(const Graph& g, const std::map<std::string, Rational>& f) {
    bool strict_somewhere = false;
    for (std::size_t v = 0; v < g.size(); ++v) {
        auto it = f.find(g.vertices[v]);
        if (it == f.end() || it->second <= 0) {
            fail("BadFunction", "function must be positive on every vertex");
        }
        Rational sum = 0;
        for (std::size_t w : g.neighbors(v)) sum += f.at(g.vertices[w]);
        const Rational lhs = Rational(2) * it->second;
        if (lhs < sum) return FunctionKind::NotSubadditive;
        if (lhs > sum) strict_somewhere = true;
    }
    return strict_somewhere ? FunctionKind::SubadditiveNotAdditive
                            : FunctionKind::Additive;
}

std::vector<std::vector<long>> cartan_matrix(const Graph& g) {
    std::vector<std::vector<long>> m(g.size(), std::vector<long>(g.size(), 0));
    for (std::size_t v = 0; v < g.size(); ++v) m[v][v] = 2;
    for (const auto& [a, b] : g.edges) {
        m[a][b] = -1;
        m[b][a] = -1;
    }
    return m;
}

Growth predict_growth(const Quiver& q) {
    if (!q.is_acyclic()) fail("NotAcyclic", "growth prediction needs an acyclic quiver");
    std::vector<std::pair<std::string, std::string>> edge_list;
    for (std::size_t u = 0; u < q.size(); ++u) {
        for (std::size_t v = u + 1; v < q.size(); ++v) {
            if (q.b(u, v) != 0) {
                if (std::abs(q.b(u, v)) > 1) {
                    fail("NotSimple", "underlying graph has a multiple edge");
                }
                edge_list.emplace_back(q.vertices()[u], q.vertices()[v]);
            }
        }
    }
    const Graph g(q.vertices(), edge_list);
    if (!g.connected()) fail("NotConnected", "underlying graph must be connected");
    switch (classify_graph(g).kind) {
        case Classification::Kind::Dynkin: return Growth::PeriodicBounded;
        case Classification::Kind::Extended: return Growth::UnboundedRational;
        default: return Growth::ConjecturedIrrational;
    }
}

std::string growth_name(Growth g) {
    switch (g) {
        case Growth::PeriodicBounded: return "PeriodicBounded";
        case Growth::UnboundedRational: return "UnboundedRational";
        default: return "ConjecturedIrrational";
    }
}

std::string function_kind_name(FunctionKind k) {
    switch (k) {
        case FunctionKind::Additive: return "Additive";
        case FunctionKind::SubadditiveNotAdditive: return "SubadditiveNotAdditive";
        default: return "NotSubadditive";
    }
}

} // namespace sl2
