#include <dlab/sequences.hpp>

#include <algorithm>
#include <bitset>
#include <map>
#include <stdexcept>

namespace dlab {

std::string_view status_name(SearchStatus s)
{
    switch (s) {
    case SearchStatus::found: return "found";
    case SearchStatus::exhausted: return "exhausted";
    case SearchStatus::ruled_out: return "ruled_out";
    case SearchStatus::budget_exceeded: return "budget_exceeded";
    }
    return "?";
}

std::string_view kind_name(SequenceKind kind)
{
    switch (kind) {
    case SequenceKind::skolem: return "skolem";
    case SequenceKind::hooked_skolem: return "hooked_skolem";
    case SequenceKind::extended_skolem: return "extended_skolem";
    case SequenceKind::langford: return "langford";
    }
    return "?";
}

std::optional<SequenceKind> parse_sequence_kind(std::string_view name)
{
    for (auto k : {SequenceKind::skolem, SequenceKind::hooked_skolem, SequenceKind::extended_skolem,
             SequenceKind::langford})
        if (kind_name(k) == name)
            return k;
    if (name == "hooked")
        return SequenceKind::hooked_skolem;
    if (name == "extended")
        return SequenceKind::extended_skolem;
    return std::nullopt;
}

ExistenceVerdict langford_exists(int m, int d)
{
    if (m < 1 || d < 1)
        throw std::invalid_argument("order and defect must be positive");
    if (m < 2 * d - 1)
        return {false, "order " + std::to_string(m) + " is below 2d-1 = " + std::to_string(2 * d - 1)};
    const int r = m % 4;
    if (d % 2 == 1) {
        if (r == 0 || r == 1)
            return {true, "m >= 2d-1 and m = " + std::to_string(r) + " (mod 4) with d odd"};
        return {false, "d odd needs m = 0 or 1 (mod 4), but m = " + std::to_string(r) + " (mod 4)"};
    }
    if (r == 0 || r == 3)
        return {true, "m >= 2d-1 and m = " + std::to_string(r) + " (mod 4) with d even"};
    return {false, "d even needs m = 0 or 3 (mod 4), but m = " + std::to_string(r) + " (mod 4)"};
}

Sequence extended_skolem(int m)
{
    if (m < 1)
        throw std::invalid_argument("order must be positive");
    const int p = m % 2 == 0 ? m : m - 1;
    const int q = m % 2 == 1 ? m : m - 1;

    std::vector<int> s;
    s.reserve(2 * m + 1);
    for (int v = p; v >= 2; v -= 2)
        s.push_back(v);
    s.push_back(0);
    for (int v = 2; v <= p; v += 2)
        s.push_back(v);
    for (int v = q; v >= 1; v -= 2)
        s.push_back(v);
    for (int v = 1; v <= q; v += 2)
        s.push_back(v);
    return {std::move(s), SequenceKind::extended_skolem, 1};
}

namespace {
    constexpr int empty_slot = -1;

    // Places values largest first; the first copy of each value goes to the
    // rightmost slot pair that is still free, then further left. Forward
    // checking prunes when an unplaced value has no free pair of slots or a free
    // slot can no longer be covered by any unplaced value.
    template <std::size_t Bits>
    class PairPlacer {
    public:
        using Mask = std::bitset<Bits>;

        PairPlacer(int m, int d, std::vector<int> slots, std::uint64_t budget) :
            _m(m),
            _d(d),
            _slots(std::move(slots)),
            _budget(budget)
        {
            for (std::size_t i = 0; i < _slots.size(); ++i)
                if (_slots[i] == empty_slot)
                    _free.set(i);
        }

        SearchStatus run()
        {
            if (place(_d + _m - 1))
                return SearchStatus::found;
            return _out_of_budget ? SearchStatus::budget_exceeded : SearchStatus::exhausted;
        }

        const std::vector<int> & slots() const { return _slots; }
        std::uint64_t nodes() const { return _nodes; }

    private:
        // Values d..largest are still unplaced.
        bool viable(int largest) const
        {
            Mask covered;
            for (int v = _d; v <= largest; ++v) {
                const auto shift = static_cast<std::size_t>(v);
                const Mask starts = _free & (_free >> shift);
                if (starts.none())
                    return false;
                covered |= starts | (starts << shift);
            }
            return (_free & ~covered).none();
        }

        bool place(int v)
        {
            if (v < _d)
                return true;
            if (! viable(v))
                return false;

            const auto len = static_cast<int>(_slots.size());
            for (int i = len - 1 - v; i >= 0; --i) {
                if (! _free[i] || ! _free[i + v])
                    continue;
                if (++_nodes > _budget) {
                    _out_of_budget = true;
                    return false;
                }
                _slots[i] = _slots[i + v] = v;
                _free.reset(i);
                _free.reset(i + v);
                if (place(v - 1))
                    return true;
                _slots[i] = _slots[i + v] = empty_slot;
                _free.set(i);
                _free.set(i + v);
                if (_out_of_budget)
                    return false;
            }
            return false;
        }

        int _m;
        int _d;
        std::vector<int> _slots;
        Mask _free;
        std::uint64_t _budget;
        std::uint64_t _nodes = 0;
        bool _out_of_budget = false;
    };

    template <std::size_t Bits>
    SearchResult<Sequence> run_placer_with(
        int m, int d, std::vector<int> slots, SequenceKind kind, std::uint64_t budget)
    {
        PairPlacer<Bits> placer(m, d, std::move(slots), budget);
        SearchResult<Sequence> result;
        result.status = placer.run();
        result.nodes = placer.nodes();
        if (result.found())
            result.value = Sequence{placer.slots(), kind, d};
        return result;
    }

    SearchResult<Sequence> run_placer(int m, int d, std::vector<int> slots, SequenceKind kind, std::uint64_t budget)
    {
        const auto len = slots.size();
        if (len <= 64)
            return run_placer_with<64>(m, d, std::move(slots), kind, budget);
        if (len <= 128)
            return run_placer_with<128>(m, d, std::move(slots), kind, budget);
        if (len <= 256)
            return run_placer_with<256>(m, d, std::move(slots), kind, budget);
        if (len <= max_search_slots)
            return run_placer_with<max_search_slots>(m, d, std::move(slots), kind, budget);
        throw std::invalid_argument("sequence search supports at most " + std::to_string(max_search_slots) + " slots");
    }
}

SearchResult<Sequence> search_langford(int m, int d, std::uint64_t budget)
{
    if (m < 1 || d < 1)
        throw std::invalid_argument("order and defect must be positive");
    auto kind = d == 1 ? SequenceKind::skolem : SequenceKind::langford;
    return run_placer(m, d, std::vector<int>(2 * static_cast<std::size_t>(m), empty_slot), kind, budget);
}

SearchResult<Sequence> generate_langford(int m, int d, std::uint64_t budget)
{
    if (! langford_exists(m, d).exists)
        return {SearchStatus::ruled_out, std::nullopt, 0};
    return search_langford(m, d, budget);
}

SearchResult<Sequence> generate_hooked_skolem(int m, std::uint64_t budget)
{
    if (m < 1)
        throw std::invalid_argument("order must be positive");
    std::vector<int> slots(2 * static_cast<std::size_t>(m) + 1, empty_slot);
    slots[2 * static_cast<std::size_t>(m) - 1] = 0;
    return run_placer(m, 1, std::move(slots), SequenceKind::hooked_skolem, budget);
}

SequenceCheck verify_sequence(const Sequence & s)
{
    const auto & e = s.entries;
    const auto len = static_cast<int>(e.size());
    const bool with_zero = s.kind == SequenceKind::hooked_skolem || s.kind == SequenceKind::extended_skolem;

    if (s.defect < 1)
        return {false, "defect must be positive"};
    if (s.kind != SequenceKind::langford && s.defect != 1)
        return {false, std::string(kind_name(s.kind)) + " sequences have defect 1"};
    if (len == 0)
        return {false, "sequence is empty"};
    if (with_zero ? len % 2 != 1 : len % 2 != 0)
        return {false, "length " + std::to_string(len) + " is not " + (with_zero ? "2m+1" : "2m")};
    const int m = len / 2;

    std::map<int, std::vector<int>> positions;
    for (int i = 0; i < len; ++i) {
        if (e[i] < 0)
            return {false, "negative entry at position " + std::to_string(i + 1)};
        positions[e[i]].push_back(i);
    }

    if (with_zero) {
        auto zeros = positions.count(0) ? positions[0].size() : 0;
        if (zeros != 1)
            return {false, "expected exactly one zero, found " + std::to_string(zeros)};
        if (s.kind == SequenceKind::hooked_skolem && positions[0][0] != len - 2)
            return {false, "hooked zero must sit at position " + std::to_string(len - 1) + ", found at "
                    + std::to_string(positions[0][0] + 1)};
        positions.erase(0);
    }

    const int lo = s.defect;
    const int hi = s.defect + m - 1;
    for (const auto & [value, where] : positions)
        if (value < lo || value > hi)
            return {false, "value " + std::to_string(value) + " outside [" + std::to_string(lo) + ","
                    + std::to_string(hi) + "]"};
    for (int k = lo; k <= hi; ++k) {
        auto it = positions.find(k);
        const auto count = it == positions.end() ? 0 : it->second.size();
        if (count != 2)
            return {false, "value " + std::to_string(k) + " occurs " + std::to_string(count) + " times, not twice"};
        const int gap = it->second[1] - it->second[0];
        if (gap != k)
            return {false, "the two " + std::to_string(k) + "s are " + std::to_string(gap) + " apart, not "
                    + std::to_string(k)};
    }
    return {true, "ok"};
}

PathLabeling path_labeling_of(const std::vector<int> & entries)
{
    if (entries.empty())
        throw std::invalid_argument("cannot label an empty path");
    const int n = static_cast<int>(entries.size());
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i)
        edges.emplace_back(i, i + 1);

    Labeling f(entries);
    std::vector<int> image(entries);
    std::sort(image.begin(), image.end());
    image.erase(std::unique(image.begin(), image.end()), image.end());

    const int top = image.back();
    const int lo = image.front();
    const bool interval = (lo == 0 || lo == 1) && static_cast<int>(image.size()) == top - lo + 1;
    LabelSetKind kind = interval && top >= 1 ? LabelSetKind{LengthKind{top}} : LabelSetKind{SetKind{DeltaSet(image)}};
    return {build_graph(n, edges), std::move(f), std::move(kind)};
}

PathLabeling sequence_to_path_labeling(const Sequence & s)
{
    auto check = verify_sequence(s);
    if (! check.valid)
        throw std::invalid_argument("invalid sequence: " + check.diagnostic);
    return path_labeling_of(s.entries);
}

}
