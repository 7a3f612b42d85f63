#pragma once

#include <dlab/families.hpp>
#include <dlab/graph.hpp>
#include <dlab/labeling.hpp>
#include <dlab/search.hpp>

#include <optional>
#include <string>

namespace dlab {

struct LambdaWitness {
    int length = 0;
    Labeling labeling;
};

// Smallest l in [1, l_max] admitting a distance l-labeling; for each l the image
// [1,l] is tried before [0,l]. l_max defaults to the order, which always suffices.
// status is exhausted when no l <= l_max works.
SearchResult<LambdaWitness> lambda_exact(
    const Graph & g, std::optional<int> l_max = std::nullopt, std::uint64_t budget = default_node_budget);

// Known labeling lengths: K_n -> 1, P_n and C_n -> floor(n/2), K_{1,k} -> 2 for
// k >= 3 else 1, K_{m,n} -> min(m,n), S_k^n for k >= 4 and k >= n-1, W_n ->
// ceil(n/2) for n >= 4, F_n -> floor(n/2). nullopt where no closed form is known
// (spiders with k < n-1, W_3, P_1, caterpillars).
std::optional<int> lambda_closed_form(const FamilySpec & spec);

struct FamilyLabeling {
    Graph graph;
    Labeling labeling;
    int length = 0;
    // "pattern" when the explicit construction verified, "search" otherwise.
    std::string construction;
};

// Labeling of length lambda_closed_form(spec), checked by verify_labeling before
// it is returned. Throws std::invalid_argument outside the covered ranges and
// std::runtime_error if neither the pattern nor the fallback search succeeds.
FamilyLabeling construct_family_labeling(const FamilySpec & spec, std::uint64_t budget = default_node_budget);

// Proper distance labeling of length l found by search (fail-first vertex
// choice, large labels first). nullopt when the budget runs out or none exists.
std::optional<Labeling> find_proper_labeling(const Graph & g, int l, std::uint64_t budget = default_node_budget);

}
