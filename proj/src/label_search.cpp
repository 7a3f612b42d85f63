#include <dlab/label_search.hpp>

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace dlab {

using Bits = std::uint64_t;

std::vector<Vertex> eccentricity_order(const DistanceMatrix & d)
{
    std::vector<Vertex> order(static_cast<std::size_t>(d.order()));
    std::iota(order.begin(), order.end(), 0);
    std::vector<int> ecc(order.size());
    for (Vertex v = 0; v < d.order(); ++v)
        ecc[v] = d.eccentricity(v);
    std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return ecc[a] > ecc[b]; });
    return order;
}

namespace {
    class LabelSearcher {
    public:
        LabelSearcher(const DistanceMatrix & d, const LabelSearchOptions & o) :
            _d(d),
            _o(o),
            _n(d.order()),
            _k(static_cast<int>(o.labels.size())),
            _order(o.order.empty() ? eccentricity_order(d) : o.order),
            _domains(static_cast<std::size_t>(_n) + 1, std::vector<Bits>(static_cast<std::size_t>(_n))),
            _assigned(static_cast<std::size_t>(_n), -1),
            _count(static_cast<std::size_t>(_k), 0)
        {
            _all = _k == 64 ? ~Bits{0} : (Bits{1} << _k) - 1;
            for (int i = 0; i < _k; ++i)
                if (o.labels[i] != 0)
                    _nonzero |= Bits{1} << i;
            std::fill(_domains[0].begin(), _domains[0].end(), _all);
        }

        SearchResult<Labeling> run()
        {
            SearchResult<Labeling> result;
            if (_k == 0 || _k > _n) {
                result.status = SearchStatus::exhausted;
                return result;
            }
            bool ok = search(0);
            result.nodes = _nodes;
            if (ok) {
                std::vector<Label> labels(static_cast<std::size_t>(_n));
                for (Vertex v = 0; v < _n; ++v)
                    labels[v] = _o.labels[_assigned[v]];
                result.status = SearchStatus::found;
                result.value = Labeling(std::move(labels));
            }
            else
                result.status = _out_of_budget ? SearchStatus::budget_exceeded : SearchStatus::exhausted;
            return result;
        }

    private:
        Bits used_labels() const
        {
            Bits used = 0;
            for (int i = 0; i < _k; ++i)
                if (_count[i] > 0)
                    used |= Bits{1} << i;
            return used;
        }

        // Feasibility of the remaining problem given the domains at this depth.
        bool consistent(int depth) const
        {
            const auto & dom = _domains[depth];
            Bits once = 0, twice = 0;
            for (Vertex u = 0; u < _n; ++u)
                if (_assigned[u] < 0) {
                    twice |= once & dom[u];
                    once |= dom[u];
                }
            const Bits used = used_labels();
            if ((_all & ~used & ~once) != 0)
                return false;
            if (_o.max_singletons) {
                Bits reach_two = 0;
                for (int i = 0; i < _k; ++i) {
                    const Bits b = Bits{1} << i;
                    if (_count[i] >= 2 || (_count[i] == 1 && (once & b)) || (_count[i] == 0 && (twice & b)))
                        reach_two |= b;
                }
                if (std::popcount(_nonzero & ~reach_two) > *_o.max_singletons)
                    return false;
            }
            return true;
        }

        Vertex pick(int depth) const
        {
            if (! _o.fail_first)
                return _order[depth];
            Vertex best = -1;
            int best_size = 65;
            for (auto v : _order)
                if (_assigned[v] < 0) {
                    int size = std::popcount(_domains[depth][v]);
                    if (size < best_size) {
                        best = v;
                        best_size = size;
                    }
                }
            return best;
        }

        bool search(int depth)
        {
            if (depth == _n) {
                if (used_labels() != _all)
                    return false;
                if (_o.max_singletons) {
                    int singles = 0;
                    for (int i = 0; i < _k; ++i)
                        if (_o.labels[i] != 0 && _count[i] == 1)
                            ++singles;
                    if (singles > *_o.max_singletons)
                        return false;
                }
                return true;
            }
            if (! consistent(depth))
                return false;

            const Vertex v = pick(depth);
            const Bits domain = _domains[depth][v];
            for (int step = 0; step < _k; ++step) {
                const int i = _o.descending_values ? _k - 1 - step : step;
                if (! (domain & (Bits{1} << i)))
                    continue;
                if (++_nodes > _o.budget) {
                    _out_of_budget = true;
                    return false;
                }
                if (assign(depth, v, i) && search(depth + 1))
                    return true;
                _assigned[v] = -1;
                --_count[i];
                if (_out_of_budget)
                    return false;
            }
            return false;
        }

        // Writes domains for depth+1. Returns false on a wipe-out.
        bool assign(int depth, Vertex v, int i)
        {
            _assigned[v] = i;
            ++_count[i];
            const Label x = _o.labels[i];
            const Bits clear = ~(Bits{1} << i);
            const auto & from = _domains[depth];
            auto & to = _domains[depth + 1];
            auto row = _d.row(v);
            bool ok = true;
            for (Vertex u = 0; u < _n; ++u) {
                to[u] = from[u];
                if (_assigned[u] >= 0)
                    continue;
                if (row[u] != x) {
                    to[u] &= clear;
                    if (! to[u])
                        ok = false;
                }
            }
            return ok;
        }

        const DistanceMatrix & _d;
        const LabelSearchOptions & _o;
        int _n;
        int _k;
        std::vector<Vertex> _order;
        std::vector<std::vector<Bits>> _domains;
        std::vector<int> _assigned;
        std::vector<int> _count;
        Bits _all = 0;
        Bits _nonzero = 0;
        std::uint64_t _nodes = 0;
        bool _out_of_budget = false;
    };
}

SearchResult<Labeling> find_labeling(const DistanceMatrix & d, const LabelSearchOptions & options)
{
    if (options.labels.size() > static_cast<std::size_t>(max_search_labels))
        throw std::invalid_argument("label search supports at most 64 distinct labels");
    if (! std::is_sorted(options.labels.begin(), options.labels.end())
        || std::adjacent_find(options.labels.begin(), options.labels.end()) != options.labels.end())
        throw std::invalid_argument("label search needs strictly increasing labels");
    if (! options.order.empty() && options.order.size() != static_cast<std::size_t>(d.order()))
        throw std::invalid_argument("vertex order must list every vertex once");
    return LabelSearcher(d, options).run();
}

}
