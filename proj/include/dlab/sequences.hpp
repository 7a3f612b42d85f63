#pragma once

#include <dlab/graph.hpp>
#include <dlab/labeling.hpp>
#include <dlab/search.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dlab {

enum class SequenceKind { skolem, hooked_skolem, extended_skolem, langford };

std::string_view kind_name(SequenceKind kind);
std::optional<SequenceKind> parse_sequence_kind(std::string_view name);

// Skolem-type sequence. Skolem kinds have defect 1; a Langford sequence of order
// m and defect d uses each of d..d+m-1 twice, the two copies of k sitting k apart.
struct Sequence {
    std::vector<int> entries;
    SequenceKind kind = SequenceKind::skolem;
    int defect = 1;

    friend bool operator==(const Sequence &, const Sequence &) = default;
};

struct ExistenceVerdict {
    bool exists = false;
    std::string reason;
};

// Langford sequences of order m and defect d exist iff m >= 2d-1 and
// m = 0,1 (mod 4) for odd d, m = 0,3 (mod 4) for even d. d = 1 is the Skolem case.
ExistenceVerdict langford_exists(int m, int d);

// Closed form (p, p-2, .., 2, 0, 2, .., p, q, q-2, .., 3, 1, 1, 3, .., q) where p and
// q are the largest even and odd numbers not exceeding m.
Sequence extended_skolem(int m);

// Longest sequence the backtracking generators accept.
inline constexpr std::size_t max_search_slots = 512;

// Langford sequence found by backtracking: values are placed largest first and
// each value's pair is tried at the rightmost free slots first, so the witness
// is deterministic. Returns ruled_out without searching when langford_exists
// says no.
SearchResult<Sequence> generate_langford(int m, int d, std::uint64_t budget = default_node_budget);

// The same backtracking search, run whether or not a sequence can exist. Used to
// cross-check the existence criterion.
SearchResult<Sequence> search_langford(int m, int d, std::uint64_t budget = default_node_budget);

// Hooked Skolem sequence (zero at position 2m of 2m+1), same search order.
SearchResult<Sequence> generate_hooked_skolem(int m, std::uint64_t budget = default_node_budget);

struct SequenceCheck {
    bool valid = false;
    std::string diagnostic;
};

SequenceCheck verify_sequence(const Sequence & s);

struct PathLabeling {
    Graph graph;
    Labeling labeling;
    LabelSetKind kind;
};

// Path of order entries.size() with vertex i labelled entries[i]. The kind is a
// length kind when the image is [0,l] or [1,l] and the image set otherwise. No
// check that the entries form a valid sequence.
PathLabeling path_labeling_of(const std::vector<int> & entries);

// As path_labeling_of, after verify_sequence; throws std::invalid_argument on an
// invalid sequence.
PathLabeling sequence_to_path_labeling(const Sequence & s);

}
