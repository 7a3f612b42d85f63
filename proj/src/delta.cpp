#include <dlab/delta.hpp>

#include <dlab/io.hpp>
#include <dlab/label_search.hpp>

#include <json.hpp>

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <limits>
#include <map>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace dlab {

std::string_view construction_name(Construction c)
{
    switch (c) {
    case Construction::regular_lr: return "regular_lr";
    case Construction::dense_degree2: return "dense_degree2";
    case Construction::caterpillar: return "caterpillar";
    case Construction::gap_concatenation: return "gap_concatenation";
    case Construction::search: return "search";
    }
    return "?";
}

std::string_view verdict_name(DeltaVerdict v)
{
    switch (v) {
    case DeltaVerdict::rejected_lower_bound: return "rejected_lower_bound";
    case DeltaVerdict::rejected_two_n: return "rejected_two_n";
    case DeltaVerdict::passes: return "passes";
    }
    return "?";
}

bool meets_size_bound(const DeltaSet & sigma)
{
    if (sigma.empty())
        return false;
    return sigma.size() >= (sigma.max() + 2) / 2;
}

bool certificate_holds(const RealizationCertificate & c)
{
    if (c.labeling.size() != c.graph.order())
        return false;
    auto report = verify_labeling(c.graph, c.labeling, SetKind{c.sigma});
    if (! report.valid)
        return false;
    const bool degenerate = c.regular_degree == 1;
    if (! report.proper && ! degenerate)
        return false;
    if (c.regular_degree && report.regular_degree != c.regular_degree)
        return false;
    return true;
}

namespace {
    DeltaSet image_of(const Labeling & f)
    {
        auto v = f.labels();
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
        return DeltaSet(std::move(v));
    }

    // Every construction goes through here: nothing leaves unverified.
    RealizationCertificate certify(
        int order, const std::vector<Edge> & edges, std::vector<Label> labels, std::optional<int> degree, Construction how)
    {
        Labeling f(std::move(labels));
        RealizationCertificate c{build_graph(order, edges), f, image_of(f), degree, how};
        if (! certificate_holds(c))
            throw std::logic_error(std::string(construction_name(how)) + " produced an invalid certificate for "
                + to_string(c.sigma));
        if (! meets_size_bound(c.sigma))
            throw std::logic_error("realized set " + to_string(c.sigma) + " violates the size bound");
        return c;
    }

    // Appends vertices to a growing graph.
    struct Builder {
        std::vector<Edge> edges;
        std::vector<Label> labels;

        Vertex add(Label x)
        {
            labels.push_back(x);
            return static_cast<Vertex>(labels.size()) - 1;
        }

        Vertex attach(Vertex to, Label x)
        {
            auto v = add(x);
            edges.emplace_back(to, v);
            return v;
        }

        int order() const { return static_cast<int>(labels.size()); }
    };
}

RealizationCertificate realize_regular(int l, int r)
{
    if (l < 1 || r < 1)
        throw std::invalid_argument("realize_regular needs l >= 1 and r >= 1");

    const int odd_l = l % 2 == 1 ? l : l - 1;
    const int h = odd_l / 2;

    Builder b;
    for (int i = 0; i < r; ++i)
        b.add(1);
    for (Vertex i = 0; i < r; ++i)
        for (Vertex j = i + 1; j < r; ++j)
            b.edges.emplace_back(i, j);

    auto path = [&](Vertex at, auto label_at_depth) {
        Vertex end = at;
        for (int depth = 1; depth <= h; ++depth)
            end = b.attach(end, label_at_depth(depth));
        return end;
    };
    auto odd = [](int depth) { return 2 * depth + 1; };
    auto even = [](int depth) { return 2 * depth; };

    for (Vertex v = 1; v < r; ++v)
        path(v, odd);
    path(0, odd);
    std::vector<Vertex> even_ends;
    for (int i = 0; i < r; ++i)
        even_ends.push_back(path(0, even));

    if (l % 2 == 0)
        for (auto e : even_ends)
            b.attach(e, l);

    return certify(b.order(), b.edges, b.labels, r, Construction::regular_lr);
}

RealizationCertificate realize_dense_degree2(int l)
{
    if (l < 1)
        throw std::invalid_argument("realize_dense_degree2 needs l >= 1");

    // clique 0..l with u = 0, path u, l+1, .., 2l-1
    Builder b;
    b.add(1);
    b.add(1);
    for (int i = 2; i <= l; ++i)
        b.add(i);
    for (Vertex i = 0; i <= l; ++i)
        for (Vertex j = i + 1; j <= l; ++j)
            b.edges.emplace_back(i, j);
    Vertex end = 0;
    for (int depth = 1; depth < l; ++depth)
        end = b.attach(end, depth + 1);

    return certify(b.order(), b.edges, b.labels, 2, Construction::dense_degree2);
}

RealizationCertificate realize_caterpillar(const DeltaSet & sigma)
{
    const auto & s = sigma.values();
    if (s.empty() || s.front() != 1)
        throw std::invalid_argument("caterpillar realization needs a set starting at 1");
    for (std::size_t i = 1; i < s.size(); ++i)
        if (s[i] - s[i - 1] > 2)
            throw std::invalid_argument(
                "caterpillar realization needs consecutive gaps of at most 2, got " + to_string(sigma));

    // P_2 realizes {1}; u1 and u2 carry the current maximum, u1_nbr is u1's
    // only neighbour.
    Builder b;
    Vertex u1 = b.add(1);
    Vertex u2 = b.attach(u1, 1);
    Vertex u1_nbr = u2;
    for (std::size_t i = 1; i < s.size(); ++i) {
        const bool gap_two = s[i] - s[i - 1] == 2;
        const Vertex anchor = gap_two ? u1 : u1_nbr;
        const Vertex v1 = b.attach(anchor, s[i]);
        const Vertex v2 = b.attach(u2, s[i]);
        u1_nbr = anchor;
        u1 = v1;
        u2 = v2;
    }

    auto c = certify(b.order(), b.edges, b.labels, 2, Construction::caterpillar);
    if (c.graph.degree(u1) != 1 || c.graph.degree(u2) != 1)
        throw std::logic_error("caterpillar maximum is not on two leaves");
    return c;
}

GapSetRealization realize_gap_set(const std::vector<int> & gaps, int d1, std::uint64_t budget)
{
    if (d1 < 1)
        throw std::invalid_argument("d1 must be at least 1");
    for (std::size_t i = 0; i < gaps.size(); ++i) {
        if (gaps[i] < 1)
            throw std::invalid_argument("gaps must be positive");
        if (i > 0 && gaps[i] <= gaps[i - 1])
            throw std::invalid_argument("gaps must be strictly increasing");
    }

    std::vector<Sequence> blocks;
    std::vector<int> entries;
    std::uint64_t left = budget;
    int d = d1;
    for (std::size_t i = 0; i <= gaps.size(); ++i) {
        int m = std::max(1, 2 * d - 1);
        while (! langford_exists(m, d).exists)
            ++m;
        auto block = generate_langford(m, d, left);
        left -= std::min(left, block.nodes);
        if (block.status == SearchStatus::budget_exceeded)
            throw BudgetExceeded("Langford block of order " + std::to_string(m) + " and defect " + std::to_string(d)
                + " ran out of budget");
        if (! block.found())
            throw std::logic_error("Langford generator found no block where one exists");
        entries.insert(entries.end(), block.value->entries.begin(), block.value->entries.end());
        blocks.push_back(*block.value);
        if (i < gaps.size())
            d = d + m - 1 + gaps[i];
    }

    auto p = path_labeling_of(entries);
    GapSetRealization out{
        certify(p.graph.order(), p.graph.edges(), p.labeling.labels(), 2, Construction::gap_concatenation),
        std::move(blocks)};

    // The last boundary must fall strictly before the final element of sigma.
    if (! gaps.empty()) {
        const auto & s = out.certificate.sigma.values();
        const int last_block_start = out.blocks.back().defect;
        const auto pos = std::find(s.begin(), s.end(), last_block_start) - s.begin();
        if (pos >= static_cast<std::ptrdiff_t>(s.size()) - 1)
            throw std::logic_error("last block boundary is not before the end of sigma");
    }
    return out;
}

DeltaVerdict delta_filter(const DeltaSet & sigma)
{
    if (sigma.empty())
        throw std::invalid_argument("delta_filter needs a nonempty set");
    const auto & s = sigma.values();
    if ((s.size() == 1 && s[0] == 2) || (s.size() == 2 && s[0] == 2 && s[1] >= 3))
        return DeltaVerdict::rejected_two_n;
    if (! meets_size_bound(sigma))
        return DeltaVerdict::rejected_lower_bound;
    return DeltaVerdict::passes;
}

SearchResult<Labeling> sigma_labeling(
    const DistanceMatrix & d, const DeltaSet & sigma, int max_singletons, std::uint64_t budget)
{
    LabelSearchOptions options;
    options.labels = sigma.values();
    options.max_singletons = max_singletons;
    options.fail_first = true;
    options.budget = budget;
    return find_labeling(d, options);
}

namespace {
    constexpr int hard_cap = 8;
    constexpr std::uint64_t chunk = 1u << 14;

    void check_search_args(const DeltaSet & sigma, const DeltaSearchOptions & o)
    {
        if (sigma.empty())
            throw std::invalid_argument("sigma must be nonempty");
        if (sigma.size() > max_search_labels)
            throw std::invalid_argument("sigma has too many values to search");
        if (o.max_order < 1)
            throw std::invalid_argument("max_order must be positive");
        const int cap = o.allow_order8 ? hard_cap : delta_search_default_cap;
        if (o.max_order > cap)
            throw std::invalid_argument("max_order " + std::to_string(o.max_order) + " exceeds the cap of "
                + std::to_string(cap) + (o.allow_order8 ? "" : " (order 8 must be enabled explicitly)"));
    }

    // Fewest vertices a labeling with at most r singletons could use.
    int least_order(const DeltaSet & sigma, int r)
    {
        std::vector<int> nz;
        for (int v : sigma.values())
            if (v > 0)
                nz.push_back(v);
        const int zero = sigma.contains(0) ? 1 : 0;
        const int paired = std::max(0, static_cast<int>(nz.size()) - r);
        int least = 2 * paired + (static_cast<int>(nz.size()) - paired) + zero;
        // the paired labels include at least the paired-th smallest value
        if (paired > 0)
            least = std::max(least, nz[static_cast<std::size_t>(paired) - 1] + 1);
        return std::max(least, 1);
    }

    struct Pairs {
        int n;
        int count;
        std::array<std::pair<int, int>, hard_cap *(hard_cap - 1) / 2> at;

        explicit Pairs(int order) : n(order), count(0), at{}
        {
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    at[count++] = {i, j};
        }

        std::vector<Edge> edges(std::uint64_t mask) const
        {
            std::vector<Edge> out;
            for (int b = 0; b < count; ++b)
                if (mask >> b & 1)
                    out.emplace_back(at[b].first, at[b].second);
            return out;
        }
    };

    struct Scan {
        const DeltaSet & sigma;
        int r;
        std::uint64_t budget;
        // bit s set for every nonzero value s in sigma
        std::uint64_t wanted = 0;
        // some pair must sit this far apart
        int least_diameter = 0;

        std::atomic<std::uint64_t> next{0};
        std::atomic<std::uint64_t> best{std::numeric_limits<std::uint64_t>::max()};
        std::atomic<std::uint64_t> nodes{0};
        std::atomic<bool> out_of_budget{false};
        std::mutex lock;
        std::map<std::uint64_t, Labeling> hits;

        Scan(const DeltaSet & s, int singletons, std::uint64_t b) : sigma(s), r(singletons), budget(b)
        {
            std::vector<int> nz;
            for (int v : s.values())
                if (v > 0) {
                    wanted |= std::uint64_t{1} << v;
                    nz.push_back(v);
                }
            const int paired = static_cast<int>(nz.size()) - r;
            if (paired > 0)
                least_diameter = nz[static_cast<std::size_t>(paired) - 1];
        }

        // Most edges a graph of order n and diameter at least D can have: a
        // vertex off a diametral path sees at most three consecutive path vertices.
        static int max_edges(int n, int D)
        {
            if (D < 2)
                return n * (n - 1) / 2;
            const int rest = n - D - 1;
            return D + 3 * rest + rest * (rest - 1) / 2;
        }

        void record(std::uint64_t mask, Labeling f)
        {
            {
                std::lock_guard guard(lock);
                hits.emplace(mask, std::move(f));
            }
            auto seen = best.load();
            while (mask < seen && ! best.compare_exchange_weak(seen, mask)) {
            }
        }

        // Returns true when the mask carries a labeling.
        bool test(const Pairs & p, std::uint64_t mask)
        {
            const int n = p.n;
            const int size = std::popcount(mask);
            if (size < n - 1 || size > max_edges(n, least_diameter))
                return false;
            std::array<std::uint32_t, hard_cap> adj{};
            for (std::uint64_t m = mask; m; m &= m - 1) {
                auto [i, j] = p.at[std::countr_zero(m)];
                adj[i] |= 1u << j;
                adj[j] |= 1u << i;
            }

            const std::uint32_t all = (1u << n) - 1;
            std::array<int, hard_cap * hard_cap> dist;
            std::uint64_t present = 0;
            for (int s = 0; s < n; ++s) {
                std::uint32_t seen = 1u << s, frontier = seen;
                for (int level = 0; frontier; ++level) {
                    std::uint32_t next = 0;
                    for (auto f = frontier; f; f &= f - 1) {
                        const int v = std::countr_zero(f);
                        dist[static_cast<std::size_t>(s) * n + v] = level;
                        next |= adj[v];
                    }
                    if (level > 0 && level < 64)
                        present |= std::uint64_t{1} << level;
                    frontier = next & ~seen;
                    seen |= next;
                }
                if (seen != all)
                    return false;
            }
            // each nonzero label used twice needs a pair of vertices at that distance
            if (std::popcount(wanted & ~present) > r)
                return false;

            const auto spent = nodes.load();
            if (spent >= budget) {
                out_of_budget = true;
                return false;
            }
            auto found = sigma_labeling(DistanceMatrix(n, std::vector<int>(dist.begin(), dist.begin() + n * n)), sigma,
                r, budget - spent);
            nodes += found.nodes;
            if (found.status == SearchStatus::budget_exceeded) {
                out_of_budget = true;
                return false;
            }
            if (found.found()) {
                record(mask, std::move(*found.value));
                return true;
            }
            return false;
        }

        void work(const Pairs & p)
        {
            const std::uint64_t total = std::uint64_t{1} << p.count;
            for (;;) {
                const std::uint64_t start = chunk * next++;
                if (start >= total || start > best || out_of_budget)
                    return;
                const std::uint64_t stop = std::min(total, start + chunk);
                for (std::uint64_t mask = start; mask < stop; ++mask) {
                    if (mask > best || out_of_budget)
                        return;
                    if (test(p, mask))
                        break;
                }
            }
        }
    };

    struct Hit {
        int order;
        std::uint64_t mask;
        Labeling labeling;
    };

    SearchResult<Hit> scan_orders(const DeltaSet & sigma, int r, const DeltaSearchOptions & o)
    {
        SearchResult<Hit> result;
        unsigned threads = o.threads ? o.threads : std::max(1u, std::thread::hardware_concurrency());
        for (int n = least_order(sigma, r); n <= o.max_order; ++n) {
            const Pairs p(n);
            Scan scan(sigma, r, o.budget - result.nodes);
            const std::uint64_t chunks = ((std::uint64_t{1} << p.count) + chunk - 1) / chunk;
            const unsigned used = static_cast<unsigned>(std::min<std::uint64_t>(threads, chunks));
            if (used <= 1)
                scan.work(p);
            else {
                std::vector<std::thread> pool;
                for (unsigned t = 0; t < used; ++t)
                    pool.emplace_back([&] { scan.work(p); });
                for (auto & t : pool)
                    t.join();
            }
            result.nodes += scan.nodes;
            if (! scan.hits.empty()) {
                auto first = scan.hits.begin();
                result.status = SearchStatus::found;
                result.value = Hit{n, first->first, std::move(first->second)};
                return result;
            }
            if (scan.out_of_budget) {
                result.status = SearchStatus::budget_exceeded;
                return result;
            }
        }
        result.status = SearchStatus::exhausted;
        return result;
    }
}

SearchResult<RealizationCertificate> delta_search(const DeltaSet & sigma, const DeltaSearchOptions & options)
{
    check_search_args(sigma, options);
    auto scan = scan_orders(sigma, 0, options);
    SearchResult<RealizationCertificate> result{scan.status, std::nullopt, scan.nodes};
    if (scan.found()) {
        const auto & hit = *scan.value;
        auto report_degree = verify_labeling(
            build_graph(hit.order, Pairs(hit.order).edges(hit.mask)), hit.labeling, SetKind{sigma})
                                 .regular_degree;
        result.value = certify(hit.order, Pairs(hit.order).edges(hit.mask), hit.labeling.labels(), report_degree,
            Construction::search);
    }
    return result;
}

SearchResult<FreedomResult> delta_freedom(const DeltaSet & sigma, const DeltaSearchOptions & options)
{
    check_search_args(sigma, options);
    const int nonzero = sigma.nonzero_count();
    SearchResult<FreedomResult> result;
    for (int r = 0; r <= nonzero; ++r) {
        auto scan = scan_orders(sigma, r, options);
        result.nodes += scan.nodes;
        if (scan.status == SearchStatus::budget_exceeded) {
            result.status = SearchStatus::budget_exceeded;
            return result;
        }
        if (! scan.found())
            continue;
        const auto & hit = *scan.value;
        auto g = build_graph(hit.order, Pairs(hit.order).edges(hit.mask));
        auto report = verify_labeling(g, hit.labeling, SetKind{sigma});
        if (! report.valid)
            throw std::logic_error("delta_freedom produced an invalid labeling");
        result.status = SearchStatus::found;
        result.value = FreedomResult{
            r, RealizationCertificate{std::move(g), hit.labeling, sigma, std::nullopt, Construction::search}, r > 0};
        return result;
    }

    // Nothing within max_order: every value on its own vertex of a path.
    const int n = sigma.size();
    std::vector<Edge> edges;
    for (Vertex v = 0; v + 1 < n; ++v)
        edges.emplace_back(v, v + 1);
    result.status = SearchStatus::found;
    result.value = FreedomResult{nonzero,
        RealizationCertificate{build_graph(n, edges), Labeling(sigma.values()), sigma, std::nullopt, Construction::search},
        nonzero > 0};
    return result;
}

std::string encode_certificate(const RealizationCertificate & c)
{
    nlohmann::ordered_json j;
    j["graph"] = nlohmann::ordered_json::parse(encode_graph(c.graph, GraphFormat::json));
    j["labels"] = c.labeling.labels();
    j["sigma"] = c.sigma.values();
    j["construction"] = construction_name(c.construction);
    if (c.regular_degree)
        j["regular_degree"] = *c.regular_degree;
    else
        j["regular_degree"] = nullptr;
    return j.dump();
}

}
