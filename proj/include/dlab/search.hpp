#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string_view>

namespace dlab {

inline constexpr std::uint64_t default_node_budget = 100'000'000;

enum class SearchStatus {
    found,
    // the whole space was searched and holds no solution
    exhausted,
    // a closed-form criterion rules out a solution, nothing was searched
    ruled_out,
    // node budget ran out before the search finished; says nothing either way
    budget_exceeded,
};

std::string_view status_name(SearchStatus s);

// Raised by constructions whose internal search ran out of budget.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

template <typename T>
struct SearchResult {
    SearchStatus status = SearchStatus::exhausted;
    std::optional<T> value;
    std::uint64_t nodes = 0;

    bool found() const noexcept { return status == SearchStatus::found; }
};

}
