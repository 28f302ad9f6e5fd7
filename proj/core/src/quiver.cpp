#include "sl2/quiver.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

namespace sl2 {

Quiver::Quiver(std::vector<std::string> vertices, const std::vector<Arrow>& arrows)
    : vertices_(std::move(vertices)) {
    std::set<std::string> seen(vertices_.begin(), vertices_.end());
    if (seen.size() != vertices_.size()) fail("BadQuiver", "duplicate vertex names");
    b_.assign(vertices_.size(), std::vector<long>(vertices_.size(), 0));
    for (const auto& [from, to, mult] : arrows) {
        if (mult < 1) fail("BadQuiver", "arrow multiplicity must be positive");
        const std::size_t u = index_of(from), v = index_of(to);
        if (u == v) fail("HasLoop", "loop at vertex '" + from + "'");
        b_[u][v] += mult;
        b_[v][u] -= mult;
    }
    // Opposite arrows may not both be present, so the matrix entry must
    // carry the full multiplicity of one direction.
    std::map<std::pair<std::size_t, std::size_t>, long> totals;
    for (const auto& [from, to, mult] : arrows) {
        totals[{index_of(from), index_of(to)}] += mult;
    }
    for (const auto& [key, mult] : totals) {
        if (totals.count({key.second, key.first})) {
            fail("HasTwoCycle", "opposite arrows between '" + vertices_[key.first] +
                                    "' and '" + vertices_[key.second] + "'");
        }
    }
}

std::size_t Quiver::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        if (vertices_[i] == name) return i;
    }
    fail("UnknownVertex", "no vertex named '" + name + "'");
}

std::vector<Arrow> Quiver::arrow_list() const {
    std::vector<Arrow> out;
    for (std::size_t u = 0; u < size(); ++u) {
        for (std::size_t v = 0; v < size(); ++v) {
            if (b_[u][v] > 0) out.emplace_back(vertices_[u], vertices_[v], b_[u][v]);
        }
    }
    return out;
}

Quiver Quiver::mutate(const std::string& name) const {
    const std::size_t u = index_of(name);
    Quiver q = *this;
    for (std::size_t v = 0; v < size(); ++v) {
        for (std::size_t w = 0; w < size(); ++w) {
            if (v == u || w == u) {
                q.b_[v][w] = -b_[v][w];
            } else {
                const long prod = b_[v][u] * b_[u][w];
                const long sgn = b_[v][u] > 0 ? 1 : b_[v][u] < 0 ? -1 : 0;
                q.b_[v][w] = b_[v][w] + sgn * std::max(prod, 0L);
            }
        }
    }
    return q;
}

LaurentPoly Quiver::mutation_polynomial(const std::string& name) const {
    const std::size_t u = index_of(name);
    Monomial in, out;
    for (std::size_t v = 0; v < size(); ++v) {
        if (b_[v][u] > 0) in = in * Monomial::variable(vertices_[v], b_[v][u]);
        if (b_[u][v] > 0) out = out * Monomial::variable(vertices_[v], b_[u][v]);
    }
    return LaurentPoly::term(in, 1) + LaurentPoly::term(out, 1);
}

bool Quiver::is_acyclic() const {
    try {
        topological_order();
        return true;
    } catch (const DomainError&) {
        return false;
    }
}

std::vector<std::size_t> Quiver::topological_order() const {
    std::vector<long> indegree(size(), 0);
    for (std::size_t u = 0; u < size(); ++u) {
        for (std::size_t v = 0; v < size(); ++v) {
            if (b_[u][v] > 0) ++indegree[v];
        }
    }
    std::vector<std::size_t> order;
    std::set<std::pair<std::string, std::size_t>> ready;
    for (std::size_t v = 0; v < size(); ++v) {
        if (indegree[v] == 0) ready.insert({vertices_[v], v});
    }
    while (!ready.empty()) {
        const std::size_t v = ready.begin()->second;
        ready.erase(ready.begin());
        order.push_back(v);
        for (std::size_t w = 0; w < size(); ++w) {
            if (b_[v][w] > 0 && --indegree[w] == 0) ready.insert({vertices_[w], w});
        }
    }
    if (order.size() != size()) fail("NotAcyclic", "quiver has an oriented cycle");
    return order;
}

Seed Seed::initial(const Quiver& q) {
    Seed s{q, {}};
    for (const auto& v : q.vertices()) {
        s.cluster.emplace(v, RationalFunction(LaurentPoly::variable(v)));
    }
    return s;
}

Seed mutate_seed(const Seed& s, const std::string& name) {
    const Quiver& q = s.quiver;
    const std::size_t u = q.index_of(name);
    RationalFunction in(LaurentPoly(1)), out(LaurentPoly(1));
    for (std::size_t v = 0; v < q.size(); ++v) {
        if (q.b(v, u) > 0) {
            in = in * s.cluster.at(q.vertices()[v]).pow(static_cast<unsigned long>(q.b(v, u)));
        }
        if (q.b(u, v) > 0) {
            out = out * s.cluster.at(q.vertices()[v]).pow(static_cast<unsigned long>(q.b(u, v)));
        }
    }
    RationalFunction exchanged = (in + out) / s.cluster.at(name);
    LaurentPoly normalized;
    try {
        normalized = normalize_to_laurent(exchanged);
    } catch (const DomainError&) {
        fail("LaurentViolation", "mutated variable at '" + name + "' is not Laurent");
    }
    Seed next{q.mutate(name), s.cluster};
    next.cluster.at(name) = RationalFunction(normalized);
    return next;
}

const Integer& NumericFrieze::at(const std::string& v, long long n) const {
    const auto& row = rows.at(v);
    const long long i = n - first_n;
    if (i < 0 || i >= static_cast<long long>(row.size())) {
        fail("BadIndex", "frieze value out of computed range");
    }
    return row[static_cast<std::size_t>(i)];
}

namespace {

Integer pow_int(const Integer& base, long exp) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(exp));
    return r;
}

} // namespace

NumericFrieze frieze_numeric_range(const Quiver& q, long long from, long long to) {
    if (from > 0 || to < 0) fail("BadIndex", "frieze range must contain 0");
    const auto topo = q.topological_order(); // also rejects non-acyclic quivers
    const std::size_t n = q.size();
    const std::size_t len = static_cast<std::size_t>(to - from + 1);
    std::vector<IntSeq> data(n, IntSeq(len));
    const auto slot = [&](std::size_t v, long long step) -> Integer& {
        return data[v][static_cast<std::size_t>(step - from)];
    };
    for (std::size_t v = 0; v < n; ++v) slot(v, 0) = 1;

    for (long long step = 1; step <= to; ++step) {
        for (const std::size_t v : topo) {
            Integer prod = 1;
            for (std::size_t w = 0; w < n; ++w) {
                if (q.b(w, v) > 0) prod *= pow_int(slot(w, step), q.b(w, v));
                if (q.b(v, w) > 0) prod *= pow_int(slot(w, step - 1), q.b(v, w));
            }
            const Integer num = 1 + prod;
            const Integer& den = slot(v, step - 1);
            if (num % den != 0) fail("NonIntegralStep", "frieze step is not integral");
            slot(v, step) = num / den;
        }
    }
    for (long long step = -1; step >= from; --step) {
        for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
            const std::size_t v = *it;
            Integer prod = 1;
            for (std::size_t w = 0; w < n; ++w) {
                if (q.b(w, v) > 0) prod *= pow_int(slot(w, step + 1), q.b(w, v));
                if (q.b(v, w) > 0) prod *= pow_int(slot(w, step), q.b(v, w));
            }
            const Integer num = 1 + prod;
            const Integer& den = slot(v, step + 1);
            if (num % den != 0) fail("NonIntegralStep", "frieze step is not integral");
            slot(v, step) = num / den;
        }
    }

    NumericFrieze fr{q, from, {}};
    for (std::size_t v = 0; v < n; ++v) fr.rows.emplace(q.vertices()[v], std::move(data[v]));
    return fr;
}

NumericFrieze frieze_numeric(const Quiver& q, long long steps) {
    if (steps < 0) fail("BadIndex", "steps must be nonnegative");
    return frieze_numeric_range(q, 0, steps);
}

const LaurentPoly& SymbolicFrieze::at(const std::string& v, long long n) const {
    const auto& row = rows.at(v);
    if (n < 0 || n >= static_cast<long long>(row.size())) {
        fail("BadIndex", "frieze value out of computed range");
    }
    return row[static_cast<std::size_t>(n)];
}

SymbolicFrieze frieze_symbolic(const Quiver& q, long long steps) {
    if (steps < 0) fail("BadIndex", "steps must be nonnegative");
    const auto topo = q.topological_order();
    const std::size_t n = q.size();
    std::vector<std::vector<LaurentPoly>> data(n);
    for (std::size_t v = 0; v < n; ++v) {
        data[v].resize(static_cast<std::size_t>(steps + 1));
        data[v][0] = LaurentPoly::variable(q.vertices()[v]);
    }
    SymbolicFrieze fr{q, {}, true};
    for (long long step = 1; step <= steps; ++step) {
        for (const std::size_t v : topo) {
            LaurentPoly prod(1);
            for (std::size_t w = 0; w < n; ++w) {
                if (q.b(w, v) > 0) {
                    prod *= data[w][static_cast<std::size_t>(step)].pow(
                        static_cast<unsigned long>(q.b(w, v)));
                }
                if (q.b(v, w) > 0) {
                    prod *= data[w][static_cast<std::size_t>(step - 1)].pow(
                        static_cast<unsigned long>(q.b(v, w)));
                }
            }
            LaurentPoly cell;
            try {
                cell = normalize_to_laurent(RationalFunction(
                    LaurentPoly(1) + prod, data[v][static_cast<std::size_t>(step - 1)]));
            } catch (const DomainError&) {
                fail("LaurentViolation", "symbolic frieze cell is not Laurent");
            }
            if (!cell.all_coefficients_nonnegative()) fr.coefficients_nonnegative = false;
            data[v][static_cast<std::size_t>(step)] = std::move(cell);
        }
    }
    for (std::size_t v = 0; v < n; ++v) fr.rows.emplace(q.vertices()[v], std::move(data[v]));
    return fr;
}

BridgeReport atilde_bridge(const Quiver& q, long long steps) {
    const std::size_t n = q.size();
    if (n < 3) fail("NotACycle", "underlying graph must be a cycle of length >= 3");
    // Underlying graph must be a cycle: every vertex with exactly two
    // neighbours, connected, as many edges as vertices.
    std::vector<std::vector<std::size_t>> nbrs(n);
    std::size_t edges = 0;
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = u + 1; v < n; ++v) {
            if (q.b(u, v) != 0) {
                if (std::abs(q.b(u, v)) != 1) {
                    fail("NotACycle", "multiple edges are not a cycle");
                }
                nbrs[u].push_back(v);
                nbrs[v].push_back(u);
                ++edges;
            }
        }
    }
    for (std::size_t u = 0; u < n; ++u) {
        if (nbrs[u].size() != 2) fail("NotACycle", "vertex degree differs from 2");
    }
    if (edges != n) fail("NotACycle", "edge count differs from vertex count");
    if (!q.is_acyclic()) fail("NotAcyclic", "orientation must be acyclic");

    // Deterministic traversal from the first vertex toward its first
    // neighbour in vertex order.
    std::vector<std::size_t> cycle{0, std::min(nbrs[0][0], nbrs[0][1])};
    while (cycle.size() < n) {
        const std::size_t cur = cycle.back(), prev = cycle[cycle.size() - 2];
        cycle.push_back(nbrs[cur][0] == prev ? nbrs[cur][1] : nbrs[cur][0]);
    }

    std::vector<std::string> order_names;
    Word word;
    for (std::size_t j = 0; j < n; ++j) {
        order_names.push_back(q.vertices()[cycle[j]]);
        const std::size_t next = cycle[(j + 1) % n];
        word.push_back(q.b(cycle[j], next) > 0 ? Letter::X : Letter::Y);
    }
    BridgeReport report{std::move(order_names), word, Frontier(word, {}, word),
                        {},  {},   false,       {}};

    const long long rec_order = static_cast<long long>(2 * n);
    const long long terms = std::max(steps + 1, 2 * rec_order + 2);
    const NumericFrieze fr = frieze_numeric(q, terms - 1);
    report.match = true;
    for (std::size_t j = 0; j < n; ++j) {
        const std::string& name = report.cycle_order[j];
        const Point origin = report.frontier.point_at(static_cast<long long>(j));
        IntSeq ray_values = ray(report.frontier, origin, {1, 1}, terms);
        const IntSeq& frieze_values = fr.rows.at(name);
        for (long long k = 0; k <= steps; ++k) {
            if (ray_values[static_cast<std::size_t>(k)] !=
                frieze_values[static_cast<std::size_t>(k)]) {
                report.match = false;
            }
        }
        QVec qterms;
        qterms.reserve(ray_values.size());
        for (const Integer& t : ray_values) qterms.emplace_back(t);
        if (auto rec = guess_recursion(qterms, static_cast<std::size_t>(rec_order))) {
            report.recursions.emplace(name, std::move(*rec));
        }
        report.frieze_rows.emplace(
            name, IntSeq(frieze_values.begin(),
                         frieze_values.begin() + static_cast<std::ptrdiff_t>(steps + 1)));
        ray_values.resize(static_cast<std::size_t>(steps + 1));
        report.ray_rows.emplace(name, std::move(ray_values));
    }
    return report;
}

} // namespace sl2
