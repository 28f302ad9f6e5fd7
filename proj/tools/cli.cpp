#include "cli.hpp"

#include <array>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "sl2/band.hpp"
#include "sl2/dynkin.hpp"
#include "sl2/frontier.hpp"
#include "sl2/json_io.hpp"
#include "sl2/linrec.hpp"
#include "sl2/quadform.hpp"
#include "sl2/quiver.hpp"
#include "sl2/rayrep.hpp"
#include "sl2/words.hpp"

namespace sl2cli {

namespace {

using nlohmann::json;
using namespace sl2;

struct PairFlag {
    long long a = 0, b = 0;
};

struct WindowFlag {
    long long x = 0, y = 0, w = 0, h = 0;
};

PairFlag parse_pair(const std::string& s) {
    PairFlag p;
    char comma = 0;
    std::istringstream is(s);
    if (!(is >> p.a >> comma >> p.b) || comma != ',' || !is.eof()) {
        throw CLI::ValidationError("expected two comma-separated integers: " + s);
    }
    return p;
}

WindowFlag parse_window(const std::string& s) {
    WindowFlag w;
    char c1 = 0, c2 = 0, c3 = 0;
    std::istringstream is(s);
    if (!(is >> w.x >> c1 >> w.y >> c2 >> w.w >> c3 >> w.h) || c1 != ',' ||
        c2 != ',' || c3 != ',' || !is.eof() || w.w < 1 || w.h < 1) {
        throw CLI::ValidationError("expected x,y,w,h with positive size: " + s);
    }
    return w;
}

std::array<long long, 4> parse_four(const std::string& s) {
    std::array<long long, 4> v{};
    char c1 = 0, c2 = 0, c3 = 0;
    std::istringstream is(s);
    if (!(is >> v[0] >> c1 >> v[1] >> c2 >> v[2] >> c3 >> v[3]) || c1 != ',' ||
        c2 != ',' || c3 != ',' || !is.eof()) {
        throw CLI::ValidationError("expected four comma-separated integers: " + s);
    }
    return v;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail("BadFile", "cannot read '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

// --terms takes inline JSON or @file.
std::string inline_or_file(const std::string& arg) {
    if (!arg.empty() && arg.front() == '@') return slurp(arg.substr(1));
    return arg;
}

json rational_strings(const QVec& v) {
    json arr = json::array();
    for (const Rational& x : v) arr.push_back(to_string(x));
    return arr;
}

void emit_window(std::ostream& out, const std::string& format, long long x0,
                 long long y0, const std::vector<IntSeq>& rows) {
    if (format == "tsv") {
        out << window_to_tsv(rows);
    } else if (format == "ascii") {
        out << window_to_ascii(rows);
    } else {
        out << window_to_json(x0, y0, rows) << "\n";
    }
}

void emit_sequence(std::ostream& out, const std::string& format, const IntSeq& seq) {
    if (format == "tsv") {
        for (std::size_t i = 0; i < seq.size(); ++i) {
            out << (i ? "\t" : "") << seq[i].get_str();
        }
        out << "\n";
    } else {
        out << sequence_to_json(seq) << "\n";
    }
}

int dispatch(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err) {
    CLI::App app{"Exact SL2-tilings, friezes, and Dynkin classification"};
    app.require_subcommand(1);

    std::string frontier_text, quiver_file, graph_file, band_file;
    std::string format = "json", word_arg, u_arg, terms_arg, matrix_arg, at_vertex;
    std::string window_arg, origin_arg = "0,0", dir_arg, offset_arg = "0,0";
    long long count = 10, steps = 5, back = 0, ell = 0, rep_terms = 12;
    std::size_t max_order = 6;
    bool symbolic = false;

    auto* tile = app.add_subcommand("tile", "Evaluate a tiling window from a frontier");
    tile->add_option("--frontier", frontier_text, "frontier as LEFT|CORE|RIGHT")->required();
    tile->add_option("--window", window_arg, "window x,y,w,h (y grows downward)")->required();
    tile->add_option("--offset", offset_arg, "shift the frontier anchor by dx,dy");
    tile->add_option("--format", format)->check(CLI::IsMember({"json", "tsv", "ascii"}));

    auto* rayc = app.add_subcommand("ray", "Values along a ray of the tiling");
    rayc->add_option("--frontier", frontier_text)->required();
    rayc->add_option("--origin", origin_arg, "ray origin x,y");
    rayc->add_option("--dir", dir_arg, "ray direction dx,dy")->required();
    rayc->add_option("--count", count, "number of terms");
    rayc->add_option("--offset", offset_arg);
    rayc->add_option("--format", format)->check(CLI::IsMember({"json", "tsv"}));

    auto* rayrep = app.add_subcommand("ray-rep", "Linear representation of a ray");
    rayrep->add_option("--frontier", frontier_text)->required();
    rayrep->add_option("--origin", origin_arg);
    rayrep->add_option("--dir", dir_arg)->required();
    rayrep->add_option("--terms", rep_terms, "verification terms to print");

    auto* frieze = app.add_subcommand("frieze", "Frieze of an acyclic quiver");
    frieze->add_option("--quiver", quiver_file, "quiver JSON file")->required();
    frieze->add_option("--steps", steps);
    frieze->add_option("--back", back, "extra backward steps (numeric only)");
    frieze->add_flag("--symbolic", symbolic, "Laurent-polynomial frieze");

    auto* mutate = app.add_subcommand("mutate", "Mutate a quiver at a vertex");
    mutate->add_option("--quiver", quiver_file)->required();
    mutate->add_option("--at", at_vertex, "vertex to mutate at")->required();

    auto* classify = app.add_subcommand("classify", "Classify an undirected graph");
    classify->add_option("--graph", graph_file, "graph JSON file")->required();

    auto* guess = app.add_subcommand("guess-rec", "Guess a minimal linear recursion");
    guess->add_option("--terms", terms_arg, "JSON array of terms, or @file")->required();
    guess->add_option("--max-order", max_order);

    auto* paths = app.add_subcommand("paths-oracle", "Fringe path count vs mu(w)_22");
    paths->add_option("--word", word_arg, "below-frontier word over {x,y}")->required();

    auto* factor = app.add_subcommand("factor-sl2", "Factor a nonnegative SL2 matrix");
    factor->add_option("--matrix", matrix_arg, "entries a,b,c,d")->required();

    auto* quad = app.add_subcommand("quad-report", "Quadratic-form corner identities");
    quad->add_option("--w", word_arg, "frontier segment word")->required();
    quad->add_option("--u", u_arg, "word of the horizontal ray point")->required();
    quad->add_option("--l", ell, "v = u y^l x");

    auto* extend = app.add_subcommand("extend-band", "Extend a band to a window");
    extend->add_option("--band", band_file, "band JSON file")->required();
    extend->add_option("--window", window_arg)->required();
    extend->add_option("--format", format)->check(CLI::IsMember({"json", "tsv", "ascii"}));

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 64;
    }

    if (tile->parsed()) {
        const Frontier f = Frontier::from_text(frontier_text);
        const WindowFlag w = parse_window(window_arg);
        const PairFlag off = parse_pair(offset_arg);
        TilingOracle oracle([&](const Point& p) {
            return evaluate(f, {p.x - off.a, p.y - off.b});
        });
        emit_window(out, format, w.x, w.y, oracle.window(w.x, w.y, w.w, w.h));
        return 0;
    }
    if (rayc->parsed()) {
        const Frontier f = Frontier::from_text(frontier_text);
        const PairFlag o = parse_pair(origin_arg), d = parse_pair(dir_arg),
                       off = parse_pair(offset_arg);
        emit_sequence(out, format,
                      ray(f, {o.a - off.a, o.b - off.b}, {d.a, d.b}, count));
        return 0;
    }
    if (rayrep->parsed()) {
        const Frontier f = Frontier::from_text(frontier_text);
        const PairFlag o = parse_pair(origin_arg), d = parse_pair(dir_arg);
        const RayRep rr = ray_representation(f, {o.a, o.b}, {d.a, d.b});
        json j;
        j["dim"] = rr.rep.dim();
        j["offset"] = rr.offset;
        j["period"] = rr.period;
        j["nonnegative"] = rr.rep.nonnegative;
        j["lambda"] = rational_strings(rr.rep.lambda);
        json m = json::array();
        for (std::size_t r = 0; r < rr.rep.m.rows(); ++r) {
            json row = json::array();
            for (std::size_t c = 0; c < rr.rep.m.cols(); ++c) {
                row.push_back(to_string(rr.rep.m.at(r, c)));
            }
            m.push_back(row);
        }
        j["matrix"] = m;
        j["gamma"] = rational_strings(rr.rep.gamma);
        j["terms"] = rational_strings(rr.rep.terms(static_cast<std::size_t>(rep_terms)));
        out << j.dump() << "\n";
        return 0;
    }
    if (frieze->parsed()) {
        const Quiver q = quiver_from_json(slurp(quiver_file));
        json j;
        if (symbolic) {
            const SymbolicFrieze fr = frieze_symbolic(q, steps);
            json rows;
            for (const auto& [v, row] : fr.rows) {
                json arr = json::array();
                for (const auto& p : row) arr.push_back(p.str());
                rows[v] = arr;
            }
            j["rows"] = rows;
            j["coefficients_nonnegative"] = fr.coefficients_nonnegative;
        } else {
            const NumericFrieze fr = frieze_numeric_range(q, -back, steps);
            j["first_n"] = fr.first_n;
            json rows;
            for (const auto& [v, row] : fr.rows) {
                json arr = json::array();
                for (const auto& x : row) arr.push_back(x.get_str());
                rows[v] = arr;
            }
            j["rows"] = rows;
        }
        out << j.dump() << "\n";
        return 0;
    }
    if (mutate->parsed()) {
        const Quiver q = quiver_from_json(slurp(quiver_file));
        json j;
        j["mutation_polynomial"] = q.mutation_polynomial(at_vertex).str();
        j["quiver"] = json::parse(quiver_to_json(q.mutate(at_vertex)));
        out << j.dump() << "\n";
        return 0;
    }
    if (classify->parsed()) {
        const Graph g = graph_from_json(slurp(graph_file));
        const Classification c = classify_graph(g);
        json j;
        switch (c.kind) {
            case Classification::Kind::Dynkin: j["type"] = "Dynkin"; break;
            case Classification::Kind::Extended: j["type"] = "Extended"; break;
            default: j["type"] = "Neither"; break;
        }
        j["name"] = c.name();
        if (c.kind != Classification::Kind::Neither) j["index"] = c.index;
        if (c.kind == Classification::Kind::Extended) {
            json f;
            for (const auto& [v, val] : c.additive) f[v] = to_string(val);
            j["additive_function"] = f;
        }
        out << j.dump() << "\n";
        return 0;
    }
    if (guess->parsed()) {
        const IntSeq seq = sequence_from_json(inline_or_file(terms_arg));
        QVec terms;
        terms.reserve(seq.size());
        for (const Integer& v : seq) terms.emplace_back(v);
        json j;
        if (auto rec = guess_recursion(terms, max_order)) {
            j["order"] = rec->order();
            j["coefficients"] = rational_strings(rec->coeffs);
            j["initial"] = rational_strings(rec->initial);
        } else {
            j["order"] = nullptr;
        }
        out << j.dump() << "\n";
        return 0;
    }
    if (paths->parsed()) {
        const Word w = parse_word(word_arg);
        json j;
        j["word"] = word_str(w);
        j["paths"] = count_fringe_paths(w).get_str();
        j["mu22"] = mu(w).d.get_str();
        out << j.dump() << "\n";
        return 0;
    }
    if (factor->parsed()) {
        const auto m = parse_four(matrix_arg);
        const Word w =
            factor_sl2({to_integer(m[0]), to_integer(m[1]), to_integer(m[2]), to_integer(m[3])});
        json j;
        j["word"] = word_str(w);
        out << j.dump() << "\n";
        return 0;
    }
    if (quad->parsed()) {
        const QuadCornerReport r =
            quad_corner_report(parse_word(word_arg), parse_word(u_arg), ell);
        json j;
        j["tA"] = r.t_a.get_str();
        j["tB"] = r.t_b.get_str();
        j["tC"] = r.t_c.get_str();
        j["tD"] = r.t_d.get_str();
        j["q"] = r.q.get_str();
        j["s"] = r.s.get_str();
        j["b_minus_c"] = r.b_minus_c.get_str();
        j["form"] = {{"a", r.form_a.get_str()},
                     {"e", r.form_e.get_str()},
                     {"d", r.form_d.get_str()}};
        j["checks"] = {{"unimodular", r.unimodular_ok}, {"corner", r.corner_ok}};
        if (r.square) {
            j["square_case"] = {{"h", r.square->h},
                                {"tM_prime", r.square->t_m_prime.get_str()},
                                {"tN_prime", r.square->t_n_prime.get_str()},
                                {"ok", r.square->square_ok}};
        }
        out << j.dump() << "\n";
        return 0;
    }
    if (extend->parsed()) {
        const Band b = band_from_json(slurp(band_file));
        const BandTiling tiling(b);
        const WindowFlag w = parse_window(window_arg);
        emit_window(out, format, w.x, w.y, tiling.oracle().window(w.x, w.y, w.w, w.h));
        return 0;
    }
    return 64;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        return dispatch(args, out, err);
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 64;
    } catch (const DomainError& e) {
        nlohmann::json j;
        j["error"] = e.code();
        j["message"] = e.what();
        out << j.dump() << "\n";
        return 2;
    }
}

} // namespace sl2cli
