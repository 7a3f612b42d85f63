#pragma once

#include <dlab/graph.hpp>
#include <dlab/labeling.hpp>
#include <dlab/search.hpp>

#include <cstdint>
#include <optional>
#include <vector>

namespace dlab {

inline constexpr int max_search_labels = 64;

struct LabelSearchOptions {
    // Target image, strictly increasing, at most max_search_labels values. Every
    // value must be used.
    std::vector<Label> labels;
    // Bound on nonzero labels used exactly once; 0 asks for a proper labeling,
    // nullopt leaves multiplicities free.
    std::optional<int> max_singletons;
    // Static vertex order. Empty means descending eccentricity, then index.
    std::vector<Vertex> order;
    // Pick the unassigned vertex with the smallest domain instead of following order.
    bool fail_first = false;
    // Try larger labels first.
    bool descending_values = false;
    std::uint64_t budget = default_node_budget;
};

// Backtracking over vertex label assignments with forward checking: assigning
// label k to v removes k from every unassigned vertex not at distance k from v.
// Deterministic for fixed options.
SearchResult<Labeling> find_labeling(const DistanceMatrix & d, const LabelSearchOptions & options);

std::vector<Vertex> eccentricity_order(const DistanceMatrix & d);

}
