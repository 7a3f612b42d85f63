#pragma once

#include <dlab/graph.hpp>
#include <dlab/labeling.hpp>
#include <dlab/search.hpp>
#include <dlab/sequences.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dlab {

enum class Construction { regular_lr, dense_degree2, caterpillar, gap_concatenation, search };

std::string_view construction_name(Construction c);

struct RealizationCertificate {
    Graph graph;
    Labeling labeling;
    DeltaSet sigma;
    std::optional<int> regular_degree;
    Construction construction;
};

// {"graph": .., "labels": [..], "sigma": [..], "construction": "..", "regular_degree": r or null}
std::string encode_certificate(const RealizationCertificate & c);

// Re-verifies a certificate from scratch: the labeling must be a valid distance
// sigma-labeling, proper (except in the degenerate degree-1 regular case), with
// the claimed regular degree when one is given.
bool certificate_holds(const RealizationCertificate & c);

// |sigma| >= ceil((max sigma + 1)/2), necessary for every realizable sigma.
bool meets_size_bound(const DeltaSet & sigma);

// Graph of order l*r with an r-regular distance l-labeling: K_r with 2r pendant
// paths of length floor(l/2) (r+1 of them at one clique vertex); for even l, a
// leaf labelled l hangs off each end of the paths labelled 2, 4, .., l-2.
RealizationCertificate realize_regular(int l, int r);

// K_{l+1} and P_l glued at one vertex: order 2l, size (l+2)(l+1)/2 - 2,
// 2-regular distance l-labeling.
RealizationCertificate realize_dense_degree2(int l);

// Caterpillar of order 2|sigma| with a 2-regular sigma-labeling whose largest
// label sits on exactly two leaves. Needs sigma = {1 = s_1 < ...} with
// consecutive differences at most 2; throws std::invalid_argument otherwise.
RealizationCertificate realize_caterpillar(const DeltaSet & sigma);

struct GapSetRealization {
    RealizationCertificate certificate;
    std::vector<Sequence> blocks;
};

// Path labelled by a concatenation of Langford sequences: the first has defect
// d1, block i+1 has defect max(block i) + gaps[i], each of the smallest
// feasible order. Sigma then has the requested differences at the block
// boundaries. gaps must be strictly increasing positive integers. Throws
// BudgetExceeded if a block's search runs out of budget.
GapSetRealization realize_gap_set(const std::vector<int> & gaps, int d1, std::uint64_t budget = default_node_budget);

enum class DeltaVerdict { rejected_lower_bound, rejected_two_n, passes };

std::string_view verdict_name(DeltaVerdict v);

// Necessary conditions only: "passes" does not make sigma a delta-set.
DeltaVerdict delta_filter(const DeltaSet & sigma);

inline constexpr int delta_search_default_cap = 7;

struct DeltaSearchOptions {
    int max_order = delta_search_default_cap;
    // Orders above the default cap (up to 8) must be asked for explicitly.
    bool allow_order8 = false;
    std::uint64_t budget = 10'000'000'000ULL;
    // 0 picks std::thread::hardware_concurrency().
    unsigned threads = 0;
};

// Enumerates every connected graph of order <= max_order by its upper-triangular
// adjacency bitmask and searches each for a proper distance sigma-labeling.
// The certificate with the least (order, bitmask) is returned, independent of
// the thread count. Throws std::invalid_argument when max_order exceeds the cap.
SearchResult<RealizationCertificate> delta_search(const DeltaSet & sigma, const DeltaSearchOptions & options = {});

struct FreedomResult {
    // Number of nonzero values of sigma allowed to appear only once.
    int r = 0;
    RealizationCertificate certificate;
    // Smaller values of r were refuted only on graphs up to max_order, so r is
    // an upper bound on the true minimum. Always false when r = 0.
    bool bounded_only = false;
};

// Smallest r for which some graph of order <= max_order carries a sigma-labeling
// with at most r nonzero labels used once. Falls back to the all-distinct path
// (r = number of nonzero values) when the bounded search finds nothing.
SearchResult<FreedomResult> delta_freedom(const DeltaSet & sigma, const DeltaSearchOptions & options = {});

// The per-graph test delta_search runs: does d admit a sigma-labeling with at most
// max_singletons nonzero labels used once?
SearchResult<Labeling> sigma_labeling(
    const DistanceMatrix & d, const DeltaSet & sigma, int max_singletons, std::uint64_t budget = default_node_budget);

}
