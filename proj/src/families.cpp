#include <dlab/families.hpp>

#include <algorithm>
#include <array>
#include <stdexcept>

namespace dlab {

namespace {
    constexpr std::array family_names{
        std::pair{Family::path, std::string_view{"path"}},
        std::pair{Family::cycle, std::string_view{"cycle"}},
        std::pair{Family::complete, std::string_view{"complete"}},
        std::pair{Family::star, std::string_view{"star"}},
        std::pair{Family::complete_bipartite, std::string_view{"complete_bipartite"}},
        std::pair{Family::spider, std::string_view{"spider"}},
        std::pair{Family::wheel, std::string_view{"wheel"}},
        std::pair{Family::fan, std::string_view{"fan"}},
        std::pair{Family::caterpillar, std::string_view{"caterpillar"}},
    };

    void require(bool condition, const FamilySpec & spec, const char * rule)
    {
        if (! condition)
            throw std::invalid_argument(std::string(family_name(spec.family)) + ": " + rule);
    }
}

std::string_view family_name(Family f)
{
    for (auto [family, name] : family_names)
        if (family == f)
            return name;
    return "unknown";
}

std::optional<Family> parse_family(std::string_view name)
{
    for (auto [family, n] : family_names)
        if (n == name)
            return family;
    return std::nullopt;
}

void validate(const FamilySpec & spec)
{
    switch (spec.family) {
    case Family::path:
    case Family::complete: require(spec.n >= 1, spec, "needs n >= 1"); break;
    case Family::cycle:
    case Family::wheel: require(spec.n >= 3, spec, "needs n >= 3"); break;
    case Family::fan: require(spec.n >= 2, spec, "needs n >= 2"); break;
    case Family::star: require(spec.k >= 1, spec, "needs k >= 1"); break;
    case Family::complete_bipartite: require(spec.m >= 1 && spec.n >= 1, spec, "needs m >= 1 and n >= 1"); break;
    case Family::spider: require(spec.k >= 1 && spec.n >= 1, spec, "needs k >= 1 and n >= 1"); break;
    case Family::caterpillar:
        require(! spec.spine.empty(), spec, "needs a nonempty spine");
        require(std::all_of(spec.spine.begin(), spec.spine.end(), [](int c) { return c >= 0; }), spec,
            "leaf counts must be nonnegative");
        break;
    }
}

std::string describe(const FamilySpec & spec)
{
    auto s = [](int v) { return std::to_string(v); };
    switch (spec.family) {
    case Family::path: return "P_" + s(spec.n);
    case Family::cycle: return "C_" + s(spec.n);
    case Family::complete: return "K_" + s(spec.n);
    case Family::star: return "K_{1," + s(spec.k) + "}";
    case Family::complete_bipartite: return "K_{" + s(spec.m) + "," + s(spec.n) + "}";
    case Family::spider: return "S_" + s(spec.k) + "^" + s(spec.n);
    case Family::wheel: return "W_" + s(spec.n);
    case Family::fan: return "F_" + s(spec.n);
    case Family::caterpillar: {
        std::string out = "caterpillar(";
        for (std::size_t i = 0; i < spec.spine.size(); ++i)
            out += (i ? "," : "") + s(spec.spine[i]);
        return out + ")";
    }
    }
    return "?";
}

Graph gen_family(const FamilySpec & spec)
{
    validate(spec);
    std::vector<Edge> edges;
    int order = 0;

    switch (spec.family) {
    case Family::path:
        order = spec.n;
        for (int i = 0; i + 1 < spec.n; ++i)
            edges.emplace_back(i, i + 1);
        break;

    case Family::cycle:
        order = spec.n;
        for (int i = 0; i < spec.n; ++i)
            edges.emplace_back(i, (i + 1) % spec.n);
        break;

    case Family::complete:
        order = spec.n;
        for (int i = 0; i < spec.n; ++i)
            for (int j = i + 1; j < spec.n; ++j)
                edges.emplace_back(i, j);
        break;

    case Family::star:
        order = spec.k + 1;
        for (int i = 1; i <= spec.k; ++i)
            edges.emplace_back(0, i);
        break;

    case Family::complete_bipartite:
        order = spec.m + spec.n;
        for (int x = 0; x < spec.m; ++x)
            for (int y = 0; y < spec.n; ++y)
                edges.emplace_back(x, spec.m + y);
        break;

    case Family::spider:
        order = spec.k * spec.n + 1;
        for (int arm = 0; arm < spec.k; ++arm) {
            edges.emplace_back(0, spider_vertex(spec.n, arm, 1));
            for (int pos = 1; pos < spec.n; ++pos)
                edges.emplace_back(spider_vertex(spec.n, arm, pos), spider_vertex(spec.n, arm, pos + 1));
        }
        break;

    case Family::wheel:
    case Family::fan:
        // hub 0, rim 1..n
        order = spec.n + 1;
        for (int i = 1; i <= spec.n; ++i)
            edges.emplace_back(0, i);
        for (int i = 1; i < spec.n; ++i)
            edges.emplace_back(i, i + 1);
        if (spec.family == Family::wheel)
            edges.emplace_back(spec.n, 1);
        break;

    case Family::caterpillar: {
        const int spine = static_cast<int>(spec.spine.size());
        order = spine;
        for (int i = 0; i + 1 < spine; ++i)
            edges.emplace_back(i, i + 1);
        for (int i = 0; i < spine; ++i)
            for (int c = 0; c < spec.spine[i]; ++c)
                edges.emplace_back(i, order++);
        break;
    }
    }

    return build_graph(order, edges);
}

bool is_caterpillar(const Graph & g)
{
    if (static_cast<int>(g.size()) != g.order() - 1)
        return false;
    for (Vertex v = 0; v < g.order(); ++v) {
        if (g.degree(v) <= 1)
            continue;
        int internal = 0;
        for (auto w : g.neighbours(v))
            if (g.degree(w) > 1)
                ++internal;
        if (internal > 2)
            return false;
    }
    return true;
}

}
