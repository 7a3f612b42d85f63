#include <dlab/lambda.hpp>

#include <dlab/label_search.hpp>
#include <dlab/sequences.hpp>

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace dlab {

namespace {
    std::vector<Label> interval(int lo, int hi)
    {
        std::vector<Label> out(static_cast<std::size_t>(hi - lo + 1));
        std::iota(out.begin(), out.end(), lo);
        return out;
    }

    int ceil_half(int n) { return (n + 1) / 2; }
}

SearchResult<LambdaWitness> lambda_exact(const Graph & g, std::optional<int> l_max, std::uint64_t budget)
{
    const int limit = l_max.value_or(g.order());
    if (limit < 1)
        throw std::invalid_argument("l_max must be positive");

    const DistanceMatrix d(g);
    const auto order = eccentricity_order(d);
    SearchResult<LambdaWitness> result;
    for (int l = 1; l <= limit; ++l) {
        if (l >= max_search_labels)
            throw std::length_error("lambda_exact supports lengths up to " + std::to_string(max_search_labels - 1));
        for (int lo : {1, 0}) {
            LabelSearchOptions options;
            options.labels = interval(lo, l);
            options.order = order;
            options.budget = budget - result.nodes;
            auto found = find_labeling(d, options);
            result.nodes += found.nodes;
            if (found.status == SearchStatus::budget_exceeded) {
                result.status = SearchStatus::budget_exceeded;
                return result;
            }
            if (found.found()) {
                result.status = SearchStatus::found;
                result.value = LambdaWitness{l, std::move(*found.value)};
                return result;
            }
        }
    }
    result.status = SearchStatus::exhausted;
    return result;
}

std::optional<int> lambda_closed_form(const FamilySpec & spec)
{
    validate(spec);
    switch (spec.family) {
    case Family::complete: return 1;
    case Family::path:
        if (spec.n < 2)
            return std::nullopt;
        return spec.n / 2;
    case Family::cycle: return spec.n / 2;
    case Family::star: return spec.k >= 3 ? 2 : 1;
    case Family::complete_bipartite: {
        const int small = std::min(spec.m, spec.n);
        const int large = std::max(spec.m, spec.n);
        if (small == 1)
            return large >= 3 ? 2 : 1;
        return small;
    }
    case Family::spider: {
        const int k = spec.k, n = spec.n;
        if (k < 4 || k < n - 1)
            return std::nullopt;
        if (k == n - 1)
            return 2 * (n - 1);
        if (k == n)
            return 2 * n - 1;
        return 2 * n;
    }
    case Family::wheel:
        // W_3 is K_4, whose length is 1, not ceil(3/2).
        if (spec.n < 4)
            return std::nullopt;
        return ceil_half(spec.n);
    case Family::fan: return spec.n / 2;
    case Family::caterpillar: return std::nullopt;
    }
    return std::nullopt;
}

namespace {
    std::vector<Label> star_labels(int k)
    {
        // centre first
        std::vector<Label> f(static_cast<std::size_t>(k) + 1, 2);
        f[0] = 1;
        f[1] = 1;
        if (k == 2)
            f[2] = 0;
        return f;
    }

    std::vector<Label> bipartite_labels(int m, int n)
    {
        std::vector<Label> f(static_cast<std::size_t>(m + n));
        const bool x_small = m <= n;
        const int small = x_small ? m : n;
        const int large = x_small ? n : m;
        const int small_base = x_small ? 0 : m;
        const int large_base = x_small ? m : 0;

        if (small == 1) {
            auto s = star_labels(large);
            f[small_base] = s[0];
            for (int i = 0; i < large; ++i)
                f[large_base + i] = s[i + 1];
            return f;
        }
        for (int i = 0; i < large; ++i)
            f[large_base + i] = i + 1 < large ? 2 : 1;
        f[small_base] = 1;
        f[small_base + 1] = 0;
        for (int i = 2; i < small; ++i)
            f[small_base + i] = i + 1;
        return f;
    }

    // Hub 0 labelled 1; a maximum set of rim vertices pairwise at distance 2 gets
    // label 2; the remaining rim vertices get 1, 0, 3, 4, ... in order.
    std::vector<Label> hub_labels(int n, bool closed_rim)
    {
        std::vector<Label> f(static_cast<std::size_t>(n) + 1, -1);
        f[0] = 1;
        const int twos_end = closed_rim && n % 2 == 1 ? n - 1 : n;
        for (int i = 0; i < twos_end; i += 2)
            f[i + 1] = 2;
        int next = 1;
        for (int i = 0; i < n; ++i)
            if (f[i + 1] < 0) {
                f[i + 1] = next;
                next = next == 1 ? 0 : (next == 0 ? 3 : next + 1);
            }
        return f;
    }

    std::vector<Label> fan_labels(int n)
    {
        if (n == 2)
            return {1, 1, 1};
        if (n == 3)
            return {1, 1, 1, 0};
        return hub_labels(n, false);
    }

    std::vector<Label> spider_labels(int k, int n)
    {
        std::vector<Label> f(static_cast<std::size_t>(k * n + 1), 0);
        for (int arm = 0; arm < k; ++arm)
            for (int pos = 1; pos <= n; ++pos)
                f[spider_vertex(n, arm, pos)] = 2 * pos;

        if (k <= n) {
            // leaves carry the odd labels 1, 3, ..., one per arm
            for (int arm = 0; arm < k; ++arm)
                f[spider_vertex(n, arm, n)] = 2 * arm + 1;
        }
        else {
            // all leaves share 2n; arm 0 carries the odd labels instead
            for (int pos = 1; pos <= n; ++pos)
                f[spider_vertex(n, 0, pos)] = 2 * pos - 1;
        }
        return f;
    }

    std::vector<Label> pattern_labels(const FamilySpec & spec)
    {
        switch (spec.family) {
        case Family::complete: return std::vector<Label>(static_cast<std::size_t>(spec.n), 1);
        case Family::path: {
            auto s = extended_skolem(spec.n / 2).entries;
            if (spec.n % 2 == 0)
                s.erase(s.begin());
            return s;
        }
        case Family::cycle: {
            auto s = extended_skolem(spec.n / 2).entries;
            if (spec.n % 2 == 0)
                s.pop_back();
            return s;
        }
        case Family::star: return star_labels(spec.k);
        case Family::complete_bipartite: return bipartite_labels(spec.m, spec.n);
        case Family::spider: return spider_labels(spec.k, spec.n);
        case Family::wheel: return hub_labels(spec.n, true);
        case Family::fan: return fan_labels(spec.n);
        case Family::caterpillar: break;
        }
        throw std::invalid_argument("no construction for " + describe(spec));
    }
}

FamilyLabeling construct_family_labeling(const FamilySpec & spec, std::uint64_t budget)
{
    auto length = lambda_closed_form(spec);
    if (! length)
        throw std::invalid_argument("no closed-form length for " + describe(spec));

    auto g = gen_family(spec);
    Labeling f(pattern_labels(spec));
    if (verify_labeling(g, f, LengthKind{*length}).valid)
        return {std::move(g), std::move(f), *length, "pattern"};

    const DistanceMatrix d(g);
    for (int lo : {1, 0}) {
        LabelSearchOptions options;
        options.labels = interval(lo, *length);
        options.fail_first = true;
        options.budget = budget;
        auto found = find_labeling(d, options);
        if (found.found())
            return {std::move(g), std::move(*found.value), *length, "search"};
    }
    throw std::runtime_error("could not build a labeling of length " + std::to_string(*length) + " for "
        + describe(spec));
}

std::optional<Labeling> find_proper_labeling(const Graph & g, int l, std::uint64_t budget)
{
    const DistanceMatrix d(g);
    for (int lo : {1, 0}) {
        LabelSearchOptions options;
        options.labels = interval(lo, l);
        options.max_singletons = 0;
        options.fail_first = true;
        options.descending_values = true;
        options.budget = budget;
        auto found = find_labeling(d, options);
        if (found.found())
            return std::move(found.value);
    }
    return std::nullopt;
}

}
