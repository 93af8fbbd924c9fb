#ifndef MINE_IO_HPP
#define MINE_IO_HPP

#include <charconv>
#include <cstdint>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"

#include "mine/energy.hpp"
#include "mine/error.hpp"
#include "mine/geometry.hpp"
#include "mine/rational.hpp"
#include "mine/trace.hpp"
#include "mine/w3sat.hpp"

namespace mine {

struct InstanceFile {
    EnergyInstance instance;
    std::optional<Drawing> drawing;
};

namespace io {

struct Token {
    std::string_view text;
    std::size_t column;
};

/// Splits one line into whitespace-separated tokens, dropping '#' comments.
inline std::vector<Token> tokenize(std::string_view line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        const char ch = line[i];
        if (ch == '#') {
            break;
        }
        if (ch == ' ' || ch == '\t' || ch == '\r') {
            ++i;
            continue;
        }
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r' && line[i] != '#') {
            ++i;
        }
        out.push_back({line.substr(start, i - start), start + 1});
    }
    return out;
}

struct Line {
    std::size_t number;
    std::vector<Token> tokens;
};

inline std::vector<Line> split_lines(std::string_view text) {
    std::vector<Line> out;
    std::size_t number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t end = std::min(text.find('\n', pos), text.size());
        ++number;
        auto tokens = tokenize(text.substr(pos, end - pos));
        if (!tokens.empty()) {
            out.push_back({number, std::move(tokens)});
        }
        if (end == text.size()) {
            break;
        }
        pos = end + 1;
    }
    return out;
}

template <class Int>
Int parse_int(const Line& line, const Token& tok, const char* what) {
    Int value{};
    const char* first = tok.text.data();
    const char* last = first + tok.text.size();
    if (!tok.text.empty() && *first == '+') {
        ++first;
    }
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || first == last) {
        throw ParseError(line.number, tok.column, std::string("expected ") + what + ", got '" + std::string(tok.text) + "'");
    }
    return value;
}

inline ExtendedCost parse_cost(const Line& line, const Token& tok) {
    if (tok.text == "INF") {
        return kInfinity;
    }
    return ExtendedCost(parse_int<std::int64_t>(line, tok, "integer cost or INF"));
}

inline Rational parse_rational(const Line& line, const Token& tok) {
    const std::string text(tok.text);
    const std::size_t slash = text.find('/');
    auto integer = [&](const std::string& s) {
        const bool neg = !s.empty() && s[0] == '-';
        const std::string digits = neg ? s.substr(1) : s;
        if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) {
            throw ParseError(line.number, tok.column, "expected rational num/den, got '" + text + "'");
        }
        BigInt v(digits);
        return neg ? BigInt(-v) : v;
    };
    if (slash == std::string::npos) {
        return Rational(integer(text));
    }
    const BigInt num = integer(text.substr(0, slash));
    const BigInt den = integer(text.substr(slash + 1));
    if (den <= 0) {
        throw ParseError(line.number, tok.column, "denominator must be positive in '" + text + "'");
    }
    return Rational(num, den);
}

inline void expect_count(const Line& line, std::size_t expected, const char* what) {
    if (line.tokens.size() != expected) {
        const std::size_t col = line.tokens.size() > expected ? line.tokens[expected].column : line.tokens.back().column;
        throw ParseError(line.number, col,
                         std::string(what) + ": expected " + std::to_string(expected - 1) + " values, got " +
                             std::to_string(line.tokens.size() - 1));
    }
}

} // namespace io

/// Parses the instance grammar:
///   MINE 1
///   nodes N [id_1 .. id_N]          ids default to 0..N-1
///   labels k | k_1 .. k_N
///   coords                          optional, followed by coord lines
///   coord id x y                    x, y as num/den or integers
///   unary id c_0 .. c_{k-1}         unlisted nodes get zero unaries
///   edge u v c_00 c_01 ..           row-major, rows follow u
///   constant c
/// Costs are integers or INF; '#' starts a comment.
inline InstanceFile parse_instance(std::string_view text) {
    using namespace io;
    const std::vector<Line> lines = split_lines(text);
    if (lines.empty()) {
        throw ParseError(1, 1, "empty instance file");
    }
    std::size_t li = 0;
    auto next = [&](const char* keyword) -> const Line& {
        if (li >= lines.size()) {
            throw ParseError(lines.back().number + 1, 1, std::string("expected '") + keyword + "'");
        }
        const Line& line = lines[li];
        if (line.tokens[0].text != keyword) {
            throw ParseError(line.number, line.tokens[0].column,
                             std::string("expected '") + keyword + "', got '" + std::string(line.tokens[0].text) + "'");
        }
        ++li;
        return line;
    };

    const Line& header = next("MINE");
    expect_count(header, 2, "MINE");
    if (header.tokens[1].text != "1") {
        throw ParseError(header.number, header.tokens[1].column, "unsupported format version");
    }

    const Line& nodes_line = next("nodes");
    if (nodes_line.tokens.size() < 2) {
        throw ParseError(nodes_line.number, nodes_line.tokens[0].column, "nodes: missing count");
    }
    const auto n = parse_int<std::size_t>(nodes_line, nodes_line.tokens[1], "node count");
    std::vector<NodeId> ids(n);
    if (nodes_line.tokens.size() == 2) {
        for (std::size_t i = 0; i < n; ++i) {
            ids[i] = i;
        }
    } else {
        expect_count(nodes_line, n + 2, "nodes");
        for (std::size_t i = 0; i < n; ++i) {
            ids[i] = parse_int<NodeId>(nodes_line, nodes_line.tokens[i + 2], "node id");
            if (i > 0 && ids[i] <= ids[i - 1]) {
                throw ParseError(nodes_line.number, nodes_line.tokens[i + 2].column, "node ids must be strictly increasing");
            }
        }
    }
    std::map<NodeId, std::size_t> index;
    for (std::size_t i = 0; i < n; ++i) {
        index[ids[i]] = i;
    }

    const Line& labels_line = next("labels");
    std::vector<std::size_t> k(n);
    if (labels_line.tokens.size() == 2) {
        const auto kk = parse_int<std::size_t>(labels_line, labels_line.tokens[1], "label count");
        std::fill(k.begin(), k.end(), kk);
    } else {
        expect_count(labels_line, n + 1, "labels");
        for (std::size_t i = 0; i < n; ++i) {
            k[i] = parse_int<std::size_t>(labels_line, labels_line.tokens[i + 1], "label count");
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (k[i] == 0) {
            throw ParseError(labels_line.number, labels_line.tokens.back().column, "label counts must be positive");
        }
    }

    auto node_at = [&](const Line& line, const Token& tok) {
        const auto id = parse_int<NodeId>(line, tok, "node id");
        auto it = index.find(id);
        if (it == index.end()) {
            throw ParseError(line.number, tok.column, "unknown node id " + std::to_string(id));
        }
        return it->second;
    };

    std::vector<std::optional<std::vector<ExtendedCost>>> unary(n);
    struct PendingEdge {
        const Line* line;
        std::size_t a, b;
        CostTable table;
    };
    std::vector<PendingEdge> edges;
    std::optional<Drawing> drawing;
    std::optional<std::int64_t> constant;

    for (; li < lines.size(); ++li) {
        const Line& line = lines[li];
        const std::string_view kw = line.tokens[0].text;
        if (kw == "coords") {
            expect_count(line, 1, "coords");
            if (drawing) {
                throw ParseError(line.number, line.tokens[0].column, "duplicate coords section");
            }
            drawing.emplace();
        } else if (kw == "coord") {
            expect_count(line, 4, "coord");
            if (!drawing) {
                drawing.emplace();
            }
            const std::size_t i = node_at(line, line.tokens[1]);
            if (!drawing->emplace(ids[i], Point{parse_rational(line, line.tokens[2]), parse_rational(line, line.tokens[3])})
                     .second) {
                throw ParseError(line.number, line.tokens[1].column, "duplicate coordinates for node " + std::to_string(ids[i]));
            }
        } else if (kw == "unary") {
            if (line.tokens.size() < 2) {
                throw ParseError(line.number, line.tokens[0].column, "unary: missing node id");
            }
            const std::size_t i = node_at(line, line.tokens[1]);
            expect_count(line, k[i] + 2, "unary");
            if (unary[i]) {
                throw ParseError(line.number, line.tokens[1].column, "duplicate unary for node " + std::to_string(ids[i]));
            }
            std::vector<ExtendedCost> u;
            for (std::size_t a = 0; a < k[i]; ++a) {
                u.push_back(parse_cost(line, line.tokens[a + 2]));
            }
            unary[i] = std::move(u);
        } else if (kw == "edge") {
            if (line.tokens.size() < 3) {
                throw ParseError(line.number, line.tokens[0].column, "edge: missing node ids");
            }
            const std::size_t a = node_at(line, line.tokens[1]);
            const std::size_t b = node_at(line, line.tokens[2]);
            expect_count(line, k[a] * k[b] + 3, "edge");
            CostTable t(k[a], k[b]);
            for (std::size_t r = 0; r < k[a]; ++r) {
                for (std::size_t c = 0; c < k[b]; ++c) {
                    t(r, c) = parse_cost(line, line.tokens[3 + r * k[b] + c]);
                }
            }
            edges.push_back({&line, a, b, std::move(t)});
        } else if (kw == "constant") {
            expect_count(line, 2, "constant");
            if (constant) {
                throw ParseError(line.number, line.tokens[0].column, "duplicate constant");
            }
            constant = parse_int<std::int64_t>(line, line.tokens[1], "integer constant");
        } else {
            throw ParseError(line.number, line.tokens[0].column, "unknown record '" + std::string(kw) + "'");
        }
    }

    InstanceFile out;
    for (std::size_t i = 0; i < n; ++i) {
        try {
            out.instance.add_node(ids[i], unary[i] ? std::move(*unary[i]) : std::vector<ExtendedCost>(k[i], 0));
        } catch (const PreconditionError& e) {
            throw ParseError(nodes_line.number, 1, e.what());
        }
    }
    for (auto& e : edges) {
        try {
            out.instance.add_edge(ids[e.a], ids[e.b], std::move(e.table));
        } catch (const PreconditionError& err) {
            throw ParseError(e.line->number, e.line->tokens[0].column, err.what());
        }
    }
    out.instance.set_constant(constant.value_or(0));
    if (drawing) {
        for (NodeId id : ids) {
            if (drawing->count(id) == 0) {
                throw ParseError(lines.back().number, 1, "coords section lacks node " + std::to_string(id));
            }
        }
    }
    out.drawing = std::move(drawing);
    return out;
}

/// Canonical text: nodes in id order, edges by (u, v) with u < v, every unary
/// listed, coordinates as reduced num/den, constant only when nonzero.
inline std::string serialize_instance(const EnergyInstance& instance, const Drawing* drawing = nullptr) {
    std::ostringstream os;
    const std::size_t n = instance.size();
    os << "MINE 1\n";
    os << "nodes " << n;
    bool dense = true;
    for (std::size_t i = 0; i < n; ++i) {
        dense = dense && instance.node_id(i) == i;
    }
    if (!dense) {
        for (std::size_t i = 0; i < n; ++i) {
            os << ' ' << instance.node_id(i);
        }
    }
    os << "\nlabels";
    if (auto k = instance.uniform_label_count()) {
        os << ' ' << *k;
    } else if (n == 0) {
        os << " 1";
    } else {
        for (std::size_t i = 0; i < n; ++i) {
            os << ' ' << instance.label_count(i);
        }
    }
    os << '\n';
    if (drawing != nullptr) {
        check_drawing(instance, *drawing);
        os << "coords\n";
        for (std::size_t i = 0; i < n; ++i) {
            const Point& p = drawing->at(instance.node_id(i));
            os << "coord " << instance.node_id(i) << ' ' << to_fraction_string(p.x) << ' ' << to_fraction_string(p.y) << '\n';
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        os << "unary " << instance.node_id(i);
        for (ExtendedCost c : instance.unary(i)) {
            os << ' ' << c.to_string();
        }
        os << '\n';
    }
    for (const auto& [key, t] : instance.edges()) {
        os << "edge " << instance.node_id(key.first) << ' ' << instance.node_id(key.second);
        for (ExtendedCost c : t.data()) {
            os << ' ' << c.to_string();
        }
        os << '\n';
    }
    if (instance.constant() != 0) {
        os << "constant " << instance.constant() << '\n';
    }
    return os.str();
}

inline std::string serialize_instance(const InstanceFile& file) {
    return serialize_instance(file.instance, file.drawing ? &*file.drawing : nullptr);
}

/// Parses the weighted 3-CNF grammar:
///   c comment
///   p wcnf3 n m
///   w w_1 .. w_n
///   l_1 l_2 l_3 0                   m clause lines
inline W3SatTriv parse_wcnf3(std::string_view text) {
    using namespace io;
    std::vector<Line> lines;
    for (auto& line : split_lines(text)) {
        if (line.tokens[0].text != "c") {
            lines.push_back(std::move(line));
        }
    }
    if (lines.empty()) {
        throw ParseError(1, 1, "empty wcnf3 file");
    }
    const Line& p = lines[0];
    if (p.tokens[0].text != "p") {
        throw ParseError(p.number, p.tokens[0].column, "expected problem line 'p wcnf3 n m'");
    }
    expect_count(p, 4, "p");
    if (p.tokens[1].text != "wcnf3") {
        throw ParseError(p.number, p.tokens[1].column, "expected format 'wcnf3'");
    }
    W3SatTriv s;
    s.num_vars = parse_int<std::size_t>(p, p.tokens[2], "variable count");
    const auto m = parse_int<std::size_t>(p, p.tokens[3], "clause count");
    if (lines.size() < 2 || lines[1].tokens[0].text != "w") {
        const std::size_t at = lines.size() < 2 ? p.number + 1 : lines[1].number;
        throw ParseError(at, 1, "expected weight line 'w w_1 .. w_n'");
    }
    const Line& w = lines[1];
    expect_count(w, s.num_vars + 1, "w");
    for (std::size_t i = 0; i < s.num_vars; ++i) {
        const auto wi = parse_int<std::int64_t>(w, w.tokens[i + 1], "weight");
        if (wi < 0) {
            throw ParseError(w.number, w.tokens[i + 1].column, "weights must be non-negative");
        }
        s.weights.push_back(wi);
    }
    if (lines.size() != m + 2) {
        const std::size_t at = lines.size() > m + 2 ? lines[m + 2].number : lines.back().number + 1;
        throw ParseError(at, 1, "expected " + std::to_string(m) + " clauses, got " + std::to_string(lines.size() - 2));
    }
    for (std::size_t c = 0; c < m; ++c) {
        const Line& line = lines[c + 2];
        if (line.tokens.back().text != "0") {
            throw ParseError(line.number, line.tokens.back().column, "clause must end with 0");
        }
        if (line.tokens.size() != 4) {
            throw ParseError(line.number, line.tokens[0].column,
                             "clause must have exactly 3 literals, got " + std::to_string(line.tokens.size() - 1));
        }
        Clause clause;
        for (std::size_t j = 0; j < 3; ++j) {
            clause.literals[j] = parse_int<Literal>(line, line.tokens[j], "literal");
        }
        try {
            validate_clause(clause, s.num_vars);
        } catch (const PreconditionError& e) {
            throw ParseError(line.number, line.tokens[0].column, e.what());
        }
        s.clauses.push_back(clause);
    }
    return s;
}

inline std::string serialize_wcnf3(const W3SatTriv& s) {
    std::ostringstream os;
    os << "p wcnf3 " << s.num_vars << ' ' << s.clauses.size() << "\nw";
    for (std::int64_t w : s.weights) {
        os << ' ' << w;
    }
    os << '\n';
    for (const Clause& c : s.clauses) {
        os << c.literals[0] << ' ' << c.literals[1] << ' ' << c.literals[2] << " 0\n";
    }
    return os.str();
}

/// One "node label" line per node plus "energy <value>".
inline std::string serialize_solution(const EnergyInstance& instance, const Labeling& x) {
    check_labeling(instance, x);
    std::ostringstream os;
    for (std::size_t i = 0; i < instance.size(); ++i) {
        os << instance.node_id(i) << ' ' << x[i] << '\n';
    }
    os << "energy " << evaluate(instance, x).to_string() << '\n';
    return os.str();
}

/// Reads a solution for `instance`; the energy record, when present, is not
/// trusted and ignored.
inline Labeling parse_solution(std::string_view text, const EnergyInstance& instance) {
    using namespace io;
    std::vector<std::optional<Label>> labels(instance.size());
    for (const Line& line : split_lines(text)) {
        if (line.tokens[0].text == "energy") {
            expect_count(line, 2, "energy");
            continue;
        }
        expect_count(line, 2, "solution");
        const auto id = parse_int<NodeId>(line, line.tokens[0], "node id");
        const auto idx = instance.find(id);
        if (!idx) {
            throw ParseError(line.number, line.tokens[0].column, "unknown node id " + std::to_string(id));
        }
        if (labels[*idx]) {
            throw ParseError(line.number, line.tokens[0].column, "duplicate label for node " + std::to_string(id));
        }
        const auto l = parse_int<Label>(line, line.tokens[1], "label");
        if (l >= instance.label_count(*idx)) {
            throw ParseError(line.number, line.tokens[1].column, "label out of range for node " + std::to_string(id));
        }
        labels[*idx] = l;
    }
    std::vector<Label> out;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (!labels[i]) {
            throw ParseError(1, 1, "solution lacks node " + std::to_string(instance.node_id(i)));
        }
        out.push_back(*labels[i]);
    }
    return Labeling(std::move(out));
}

/// Truth assignment as "variable value" lines, 1-based.
inline std::string serialize_assignment(const TruthAssignment& tau) {
    std::ostringstream os;
    for (std::size_t i = 0; i < tau.size(); ++i) {
        os << (i + 1) << ' ' << (tau[i] ? 1 : 0) << '\n';
    }
    return os.str();
}

namespace io {

inline nlohmann::json point_to_json(const Point& p) {
    return nlohmann::json::array({to_fraction_string(p.x), to_fraction_string(p.y)});
}

inline Rational rational_from_json(const nlohmann::json& j) {
    const Line line{0, {}};
    const std::string s = j.get<std::string>();
    return parse_rational(line, Token{s, 0});
}

} // namespace io

inline nlohmann::json trace_to_json(const ReductionTrace& t) {
    nlohmann::json j;
    j["kind"] = to_string(t.kind);
    j["original_nodes"] = t.original_nodes;
    j["aux_nodes"] = t.aux_nodes;
    j["big_m"] = t.big_m;
    j["k"] = t.k;
    j["next_id"] = t.next_id;
    j["crossings"] = nlohmann::json::array();
    for (const auto& c : t.crossings) {
        nlohmann::json cj;
        cj["edge_a"] = {c.crossing.edge_a.first, c.crossing.edge_a.second};
        cj["edge_b"] = {c.crossing.edge_b.first, c.crossing.edge_b.second};
        cj["point"] = io::point_to_json(c.crossing.point);
        cj["radius"] = to_fraction_string(c.radius);
        cj["near_copy_a"] = c.near_copy_a;
        cj["far_copy_a"] = c.far_copy_a;
        cj["near_copy_b"] = c.near_copy_b;
        cj["far_copy_b"] = c.far_copy_b;
        cj["aux_nodes"] = c.aux_nodes;
        j["crossings"].push_back(std::move(cj));
    }
    return j;
}

inline ReductionTrace trace_from_json(const nlohmann::json& j) {
    try {
        ReductionTrace t;
        t.kind = reduction_kind_from_string(j.at("kind").get<std::string>());
        t.original_nodes = j.at("original_nodes").get<std::vector<NodeId>>();
        t.aux_nodes = j.at("aux_nodes").get<std::vector<NodeId>>();
        t.big_m = j.at("big_m").get<std::int64_t>();
        t.k = j.at("k").get<std::size_t>();
        t.next_id = j.at("next_id").get<NodeId>();
        for (const auto& cj : j.at("crossings")) {
            CrossingRecord c;
            c.crossing.edge_a = {cj.at("edge_a").at(0).get<NodeId>(), cj.at("edge_a").at(1).get<NodeId>()};
            c.crossing.edge_b = {cj.at("edge_b").at(0).get<NodeId>(), cj.at("edge_b").at(1).get<NodeId>()};
            c.crossing.point = {io::rational_from_json(cj.at("point").at(0)), io::rational_from_json(cj.at("point").at(1))};
            c.radius = io::rational_from_json(cj.at("radius"));
            c.near_copy_a = cj.at("near_copy_a").get<NodeId>();
            c.far_copy_a = cj.at("far_copy_a").get<NodeId>();
            c.near_copy_b = cj.at("near_copy_b").get<NodeId>();
            c.far_copy_b = cj.at("far_copy_b").get<NodeId>();
            c.aux_nodes = cj.at("aux_nodes").get<std::vector<NodeId>>();
            t.crossings.push_back(std::move(c));
        }
        return t;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(1, 1, std::string("malformed trace: ") + e.what());
    } catch (const PreconditionError& e) {
        throw ParseError(1, 1, std::string("malformed trace: ") + e.what());
    }
}

inline std::string serialize_trace(const ReductionTrace& t) { return trace_to_json(t).dump(2) + "\n"; }

inline ReductionTrace parse_trace(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(1, e.byte, std::string("invalid JSON: ") + e.what());
    }
    return trace_from_json(j);
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error("cannot open '" + path + "'");
    }
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

inline void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error("cannot write '" + path + "'");
    }
    out << content;
}

} // namespace mine

#endif // MINE_IO_HPP
