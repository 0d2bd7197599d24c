#include "listpack/io.hpp"

#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include "listpack/errors.hpp"

namespace listpack::io {

namespace {

[[noreturn]] void fail(const std::string& source, const std::string& what) { throw InputError(source + ": " + what); }

[[noreturn]] void fail_line(const std::string& source, std::size_t line, const std::string& what) {
    fail(source + ":" + std::to_string(line), what);
}

/// Strict decimal parse: digits only, no sign, no leading zeros.
std::optional<std::uint64_t> parse_decimal(std::string_view s) {
    if (s.empty() || s.size() > 18 || (s.size() > 1 && s[0] == '0')) return std::nullopt;
    std::uint64_t v = 0;
    for (char c : s) {
        if (c < '0' || c > '9') return std::nullopt;
        v = v * 10 + static_cast<std::uint64_t>(c - '0');
    }
    return v;
}

std::vector<Color> color_array(const json& value, const std::string& source, const std::string& key) {
    const std::string where = "entry \"" + key + "\"";
    if (!value.is_array()) fail(source, where + " must be an array of colors");
    if (value.empty()) fail(source, where + " is an empty list");
    std::vector<Color> colors;
    for (const auto& c : value) {
        if (!c.is_number_integer() || c.get<std::int64_t>() <= 0 ||
            c.get<std::int64_t>() > std::numeric_limits<Color>::max())
            fail(source, where + " contains a non-positive or non-integer color");
        colors.push_back(static_cast<Color>(c.get<std::int64_t>()));
    }
    std::set<Color> unique(colors.begin(), colors.end());
    if (unique.size() != colors.size()) fail(source, where + " repeats a color");
    return colors;
}

std::string edge_key(Edge e) { return std::to_string(e.u) + "-" + std::to_string(e.v); }

}  // namespace

// ---------------------------------------------------------------- DIMACS

Graph read_dimacs(std::istream& in, const std::string& source) {
    std::optional<std::size_t> n;
    std::size_t declared_edges = 0;
    std::vector<Edge> edges;
    std::set<Edge> seen;

    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream iss(line);
        std::string tag;
        if (!(iss >> tag) || tag == "c") continue;

        if (tag == "p") {
            if (n) fail_line(source, lineno, "second problem line");
            std::string format, nv, ne, extra;
            if (!(iss >> format >> nv >> ne) || (format != "edge" && format != "col"))
                fail_line(source, lineno, "expected 'p edge <n> <e>'");
            if (iss >> extra) fail_line(source, lineno, "trailing tokens after problem line");
            auto pn = parse_decimal(nv);
            auto pe = parse_decimal(ne);
            if (!pn || !pe) fail_line(source, lineno, "vertex and edge counts must be non-negative integers");
            if (*pn == 0) fail_line(source, lineno, "graph must have at least one vertex");
            n = *pn;
            declared_edges = *pe;
        } else if (tag == "e") {
            if (!n) fail_line(source, lineno, "edge before problem line");
            std::string su, sv, extra;
            if (!(iss >> su >> sv)) fail_line(source, lineno, "expected 'e <u> <v>'");
            if (iss >> extra) fail_line(source, lineno, "trailing tokens after edge");
            auto u = parse_decimal(su);
            auto v = parse_decimal(sv);
            if (!u || !v) fail_line(source, lineno, "edge endpoints must be positive integers");
            if (*u < 1 || *u > *n || *v < 1 || *v > *n)
                fail_line(source, lineno, "edge " + su + "-" + sv + " has an endpoint outside 1.." + std::to_string(*n));
            if (*u == *v) fail_line(source, lineno, "loop at vertex " + su + " rejected");
            const Edge e = make_edge(static_cast<VertexId>(*u), static_cast<VertexId>(*v));
            if (!seen.insert(e).second) fail_line(source, lineno, "duplicate edge " + edge_key(e) + " rejected");
            edges.push_back(e);
        } else {
            fail_line(source, lineno, "unknown line type '" + tag + "'");
        }
    }
    if (!n) fail(source, "missing 'p edge' problem line");
    if (edges.size() != declared_edges)
        fail(source, "problem line declares " + std::to_string(declared_edges) + " edges, found " +
                         std::to_string(edges.size()));
    return Graph(*n, std::move(edges));
}

Graph read_dimacs_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InputError(path.string() + ": cannot open graph file");
    return read_dimacs(in, path.string());
}

void write_dimacs(std::ostream& out, const Graph& g, std::string_view comment) {
    if (!comment.empty()) out << "c " << comment << '\n';
    out << "p edge " << g.order() << ' ' << g.edge_count() << '\n';
    for (const Edge& e : g.edges()) out << "e " << e.u << ' ' << e.v << '\n';
}

// ---------------------------------------------------------------- lists

json lists_to_json(const ListAssignment& lists) {
    json doc = json::object();
    for (std::size_t v = 1; v <= lists.vertex_count(); ++v) {
        auto l = lists.list(static_cast<VertexId>(v));
        doc[std::to_string(v)] = std::vector<Color>(l.begin(), l.end());
    }
    return doc;
}

ListAssignment lists_from_json(const json& doc, std::size_t n, const std::string& source) {
    if (!doc.is_object()) fail(source, "expected an object mapping vertex ids to color arrays");
    std::vector<std::vector<Color>> lists(n);
    std::vector<bool> covered(n, false);
    for (const auto& [key, value] : doc.items()) {
        auto v = parse_decimal(key);
        if (!v || *v < 1 || *v > n) fail(source, "key \"" + key + "\" is not a vertex id in 1.." + std::to_string(n));
        lists[*v - 1] = color_array(value, source, key);
        covered[*v - 1] = true;
    }
    for (std::size_t v = 0; v < n; ++v)
        if (!covered[v]) fail(source, "no list for vertex " + std::to_string(v + 1));
    return ListAssignment(std::move(lists));
}

json edge_lists_to_json(const EdgeListAssignment& lists) {
    json doc = json::object();
    for (std::size_t i = 0; i < lists.size(); ++i) doc[edge_key(lists.edges()[i])] = lists.lists()[i];
    return doc;
}

EdgeListAssignment edge_lists_from_json(const json& doc, const Graph& g, const std::string& source) {
    if (!doc.is_object()) fail(source, "expected an object mapping \"u-v\" keys to color arrays");
    std::vector<std::vector<Color>> lists(g.edge_count());
    std::vector<bool> covered(g.edge_count(), false);
    for (const auto& [key, value] : doc.items()) {
        const auto dash = key.find('-');
        std::optional<std::uint64_t> u, v;
        if (dash != std::string::npos) {
            u = parse_decimal(std::string_view(key).substr(0, dash));
            v = parse_decimal(std::string_view(key).substr(dash + 1));
        }
        if (!u || !v || *u >= *v) fail(source, "key \"" + key + "\" is not of the form \"u-v\" with u < v");
        if (*v > g.order()) fail(source, "key \"" + key + "\" names a vertex outside the graph");
        auto idx = g.edge_index(static_cast<VertexId>(*u), static_cast<VertexId>(*v));
        if (!idx) fail(source, "key \"" + key + "\" is not an edge of the graph");
        lists[*idx] = color_array(value, source, key);
        covered[*idx] = true;
    }
    for (std::size_t i = 0; i < covered.size(); ++i)
        if (!covered[i]) fail(source, "no list for edge " + edge_key(g.edges()[i]));
    return EdgeListAssignment({g.edges().begin(), g.edges().end()}, std::move(lists));
}

// ---------------------------------------------------------------- packings

json packing_to_json(const Packing& packing) {
    json rows = json::array();
    for (const auto& row : packing.rows()) rows.push_back(row.values());
    return json{{"k", packing.size()}, {"colorings", std::move(rows)}};
}

Packing packing_from_json(const json& doc, std::size_t n, const std::string& source) {
    if (!doc.is_object() || !doc.contains("k") || !doc.contains("colorings"))
        fail(source, "expected an object with \"k\" and \"colorings\"");
    const json& k = doc.at("k");
    const json& rows = doc.at("colorings");
    if (!k.is_number_unsigned() || k.get<std::uint64_t>() == 0) fail(source, "\"k\" must be a positive integer");
    if (!rows.is_array() || rows.size() != k.get<std::uint64_t>())
        fail(source, "\"colorings\" must hold exactly k arrays");
    std::vector<Coloring> colorings;
    for (std::size_t j = 0; j < rows.size(); ++j) {
        const json& row = rows[j];
        const std::string where = "coloring " + std::to_string(j + 1);
        if (!row.is_array() || row.size() != n) fail(source, where + " must have exactly " + std::to_string(n) + " entries");
        std::vector<Color> f;
        for (const auto& c : row) {
            if (!c.is_number_integer() || c.get<std::int64_t>() <= 0 ||
                c.get<std::int64_t>() > std::numeric_limits<Color>::max())
                fail(source, where + " contains a non-positive or non-integer color");
            f.push_back(static_cast<Color>(c.get<std::int64_t>()));
        }
        colorings.emplace_back(std::move(f));
    }
    return Packing(std::move(colorings));
}

json edge_coloring_to_json(const EdgeColoring& coloring) {
    json colors = json::object();
    for (std::size_t i = 0; i < coloring.size(); ++i) colors[edge_key(coloring.edges()[i])] = coloring.colors()[i];
    return json{{"palette_size", coloring.palette_size()}, {"colors", std::move(colors)}};
}

// ---------------------------------------------------------------- files

json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InputError(path.string() + ": cannot open file");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw InputError(path.string() + ": invalid JSON: " + e.what());
    }
}

void write_json_file(const std::filesystem::path& path, const json& doc) { write_text_file(path, doc.dump(2) + "\n"); }

void write_text_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw InputError(path.string() + ": cannot open for writing");
    out << text;
    if (!out) throw InputError(path.string() + ": write failed");
}

ParsedInputs parse_inputs(const std::filesystem::path& graph_path, const std::filesystem::path& lists_path) {
    Graph g = read_dimacs_file(graph_path);
    ListAssignment lists = lists_from_json(read_json_file(lists_path), g.order(), lists_path.string());
    return {std::move(g), std::move(lists)};
}

}  // namespace listpack::io
