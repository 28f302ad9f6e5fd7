#include "sl2/json_io.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace sl2 {

namespace {

using nlohmann::json;

json parse(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        fail("BadJson", e.what());
    }
}

Integer integer_from(const json& j) {
    if (j.is_string()) return Integer(j.get<std::string>());
    if (j.is_number_integer()) return to_integer(j.get<long long>());
    fail("BadJson", "expected an integer or decimal string");
}

json seq_json(const IntSeq& seq) {
    json arr = json::array();
    for (const Integer& v : seq) arr.push_back(v.get_str());
    return arr;
}

IntSeq seq_from(const json& arr) {
    if (!arr.is_array()) fail("BadJson", "expected an array of integers");
    IntSeq out;
    out.reserve(arr.size());
    for (const auto& v : arr) out.push_back(integer_from(v));
    return out;
}

} // namespace

std::string quiver_to_json(const Quiver& q) {
    json j;
    j["vertices"] = q.vertices();
    json arrows = json::array();
    for (const auto& [from, to, mult] : q.arrow_list()) {
        arrows.push_back(json::array({from, to, mult}));
    }
    j["arrows"] = arrows;
    return j.dump();
}

Quiver quiver_from_json(const std::string& text) {
    const json j = parse(text);
    if (!j.contains("vertices") || !j.contains("arrows")) {
        fail("BadJson", "quiver JSON needs 'vertices' and 'arrows'");
    }
    std::vector<std::string> vertices = j["vertices"].get<std::vector<std::string>>();
    std::vector<Arrow> arrows;
    for (const auto& a : j["arrows"]) {
        if (!a.is_array() || a.size() < 2 || a.size() > 3) {
            fail("BadJson", "arrow entries are [from, to] or [from, to, mult]");
        }
        const long mult = a.size() == 3 ? a[2].get<long>() : 1;
        arrows.emplace_back(a[0].get<std::string>(), a[1].get<std::string>(), mult);
    }
    return Quiver(std::move(vertices), arrows);
}

std::string graph_to_json(const Graph& g) {
    json j;
    j["vertices"] = g.vertices;
    json edges = json::array();
    for (const auto& [a, b] : g.edges) {
        edges.push_back(json::array({g.vertices[a], g.vertices[b]}));
    }
    j["edges"] = edges;
    return j.dump();
}

Graph graph_from_json(const std::string& text) {
    const json j = parse(text);
    if (!j.contains("vertices") || !j.contains("edges")) {
        fail("BadJson", "graph JSON needs 'vertices' and 'edges'");
    }
    std::vector<std::string> vertices = j["vertices"].get<std::vector<std::string>>();
    std::vector<std::pair<std::string, std::string>> edges;
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2) fail("BadJson", "edge entries are [u, v]");
        edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
    }
    return Graph(std::move(vertices), edges);
}

std::string band_to_json(const Band& b) {
    json j;
    j["first_row"] = b.first_row;
    j["col_offset"] = b.col_offset;
    json seqs = json::array();
    for (const auto& s : b.seqs) seqs.push_back(seq_json(s));
    j["sequences"] = seqs;
    return j.dump();
}

Band band_from_json(const std::string& text) {
    const json j = parse(text);
    if (!j.contains("sequences")) fail("BadJson", "band JSON needs 'sequences'");
    Band b;
    b.first_row = j.value("first_row", 0LL);
    b.col_offset = j.value("col_offset", 0LL);
    for (const auto& s : j["sequences"]) b.seqs.push_back(seq_from(s));
    return b;
}

std::string sequence_to_json(const IntSeq& seq) { return seq_json(seq).dump(); }

IntSeq sequence_from_json(const std::string& text) { return seq_from(parse(text)); }

std::string window_to_json(long long x0, long long y0,
                           const std::vector<IntSeq>& rows) {
    json j;
    j["origin"] = json::array({x0, y0});
    json out = json::array();
    for (const auto& r : rows) out.push_back(seq_json(r));
    j["rows"] = out;
    return j.dump();
}

std::string window_to_tsv(const std::vector<IntSeq>& rows) {
    std::ostringstream os;
    for (const auto& r : rows) {
        for (std::size_t i = 0; i < r.size(); ++i) {
            if (i) os << '\t';
            os << r[i].get_str();
        }
        os << '\n';
    }
    return os.str();
}

std::string window_to_ascii(const std::vector<IntSeq>& rows) {
    std::size_t width = 1;
    for (const auto& r : rows) {
        for (const auto& v : r) width = std::max(width, v.get_str().size());
    }
    std::ostringstream os;
    for (const auto& r : rows) {
        for (std::size_t i = 0; i < r.size(); ++i) {
            const std::string s = r[i].get_str();
            if (i) os << ' ';
            os << std::string(width - s.size(), ' ') << s;
        }
        os << '\n';
    }
    return os.str();
}

} // namespace sl2
