#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "json.hpp"
#include "listpack/coloring.hpp"
#include "listpack/galvin.hpp"
#include "listpack/graph.hpp"

namespace listpack::io {

using nlohmann::json;

/// DIMACS edge format: `c` comments, one `p edge <n> <e>` header, then
/// `e <u> <v>` lines. Errors name the source and line.
Graph read_dimacs(std::istream& in, const std::string& source = "<graph>");
Graph read_dimacs_file(const std::filesystem::path& path);
void write_dimacs(std::ostream& out, const Graph& g, std::string_view comment = {});

/// {"1": [..], "2": [..], ...}; every vertex exactly once.
json lists_to_json(const ListAssignment& lists);
ListAssignment lists_from_json(const json& doc, std::size_t n, const std::string& source = "<lists>");

/// {"u-v": [..], ...} with u < v; every edge exactly once.
json edge_lists_to_json(const EdgeListAssignment& lists);
EdgeListAssignment edge_lists_from_json(const json& doc, const Graph& g, const std::string& source = "<edge lists>");

/// {"k": k, "colorings": [[f_1(v_1), ..., f_1(v_n)], ...]}.
json packing_to_json(const Packing& packing);
Packing packing_from_json(const json& doc, std::size_t n, const std::string& source = "<packing>");

/// {"palette_size": p, "colors": {"u-v": c, ...}}.
json edge_coloring_to_json(const EdgeColoring& coloring);

json read_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const json& doc);
void write_text_file(const std::filesystem::path& path, const std::string& text);

struct ParsedInputs {
    Graph graph;
    ListAssignment lists;
};

ParsedInputs parse_inputs(const std::filesystem::path& graph_path, const std::filesystem::path& lists_path);

}  // namespace listpack::io
