#pragma once

#include <dlab/graph.hpp>
#include <dlab/labeling.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace dlab {

enum class GraphFormat { json, dot };

// json: {"order":n,"edges":[[u,v],...]} with u < v, edges sorted.
// dot: undirected graph; vertex ids as node names, labels attached when given.
std::string encode_graph(const Graph & g, GraphFormat fmt, const Labeling * labels = nullptr);

// Parses graph JSON. Malformed text raises GraphError(malformed); structural
// problems raise the GraphError kind build_graph would.
Graph decode_graph(std::string_view text);

// {"labels":[l_0,...]}
std::string encode_labeling(const Labeling & f);
Labeling decode_labeling(std::string_view text);

// Comma separated nonnegative integers, e.g. "4,2,3,2,4,3,1,1". Throws
// std::invalid_argument on anything else.
std::vector<int> parse_int_list(std::string_view text);
std::string format_int_list(const std::vector<int> & values);

}
