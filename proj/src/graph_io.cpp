#include <dlab/io.hpp>

#include <charconv>
#include <json.hpp>
#include <sstream>

namespace dlab {

using nlohmann::json;

std::string encode_graph(const Graph & g, GraphFormat fmt, const Labeling * labels)
{
    if (fmt == GraphFormat::json) {
        nlohmann::ordered_json doc;
        doc["order"] = g.order();
        doc["edges"] = nlohmann::ordered_json::array();
        for (auto [u, v] : g.edges())
            doc["edges"].push_back({u, v});
        return doc.dump();
    }

    std::ostringstream out;
    out << "graph G {\n";
    for (Vertex v = 0; v < g.order(); ++v) {
        out << "  " << v;
        if (labels)
            out << " [label=\"" << (*labels)[v] << "\"]";
        out << ";\n";
    }
    for (auto [u, v] : g.edges())
        out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

Graph decode_graph(std::string_view text)
{
    int order = 0;
    std::vector<Edge> edges;
    try {
        auto doc = json::parse(text);
        if (! doc.is_object() || ! doc.contains("order") || ! doc.contains("edges"))
            throw GraphError(GraphErrorKind::malformed, "graph JSON needs \"order\" and \"edges\"");
        if (! doc["order"].is_number_integer() || ! doc["edges"].is_array())
            throw GraphError(GraphErrorKind::malformed, "graph JSON has wrongly typed fields");
        order = doc["order"].get<int>();
        for (const auto & e : doc["edges"]) {
            if (! e.is_array() || e.size() != 2 || ! e[0].is_number_integer() || ! e[1].is_number_integer())
                throw GraphError(GraphErrorKind::malformed, "every edge must be a pair of integers");
            edges.emplace_back(e[0].get<int>(), e[1].get<int>());
        }
    }
    catch (const json::exception & e) {
        throw GraphError(GraphErrorKind::malformed, std::string("malformed graph JSON: ") + e.what());
    }
    return build_graph(order, edges);
}

std::string encode_labeling(const Labeling & f)
{
    return json{{"labels", f.labels()}}.dump();
}

Labeling decode_labeling(std::string_view text)
{
    try {
        auto doc = json::parse(text);
        if (! doc.is_object() || ! doc.contains("labels") || ! doc["labels"].is_array())
            throw std::invalid_argument("labeling JSON needs a \"labels\" array");
        std::vector<Label> labels;
        for (const auto & v : doc["labels"]) {
            if (! v.is_number_integer())
                throw std::invalid_argument("labels must be integers");
            labels.push_back(v.get<Label>());
        }
        return Labeling(std::move(labels));
    }
    catch (const json::exception & e) {
        throw std::invalid_argument(std::string("malformed labeling JSON: ") + e.what());
    }
}

std::vector<int> parse_int_list(std::string_view text)
{
    while (! text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' '))
        text.remove_suffix(1);
    while (! text.empty() && text.front() == ' ')
        text.remove_prefix(1);

    std::vector<int> values;
    if (text.empty())
        return values;
    std::size_t pos = 0;
    while (true) {
        auto comma = text.find(',', pos);
        auto item = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        while (! item.empty() && item.front() == ' ')
            item.remove_prefix(1);
        while (! item.empty() && item.back() == ' ')
            item.remove_suffix(1);
        int value = 0;
        auto [end, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
        if (item.empty() || ec != std::errc{} || end != item.data() + item.size() || value < 0)
            throw std::invalid_argument("not a comma-separated list of nonnegative integers: \"" + std::string(text)
                + "\"");
        values.push_back(value);
        if (comma == std::string_view::npos)
            break;
        pos = comma + 1;
    }
    return values;
}

std::string format_int_list(const std::vector<int> & values)
{
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i)
        out += (i ? "," : "") + std::to_string(values[i]);
    return out;
}

}
