#pragma once

// Reference implementations for tests. Each is written independently of the
// library's search code: Floyd-Warshall instead of BFS, plain enumeration
// instead of pruned backtracking.

#include <dlab/graph.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <vector>

namespace oracle {

using Matrix = std::vector<std::vector<int>>;

inline constexpr int unreachable = 1 << 20;

inline Matrix floyd_warshall(const dlab::Graph & g)
{
    const int n = g.order();
    Matrix d(n, std::vector<int>(n, unreachable));
    for (int i = 0; i < n; ++i)
        d[i][i] = 0;
    for (auto [u, v] : g.edges())
        d[u][v] = d[v][u] = 1;
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    return d;
}

inline int diameter(const Matrix & d)
{
    int best = 0;
    for (auto & row : d)
        for (int x : row)
            best = std::max(best, x);
    return best;
}

// Equal labels k must sit at distance exactly k; the image must equal `image`.
inline bool labels_fit(const Matrix & d, const std::vector<int> & labels, const std::set<int> & image)
{
    if (std::set<int>(labels.begin(), labels.end()) != image)
        return false;
    const int n = static_cast<int>(labels.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (labels[i] == labels[j] && d[i][j] != labels[i])
                return false;
    return true;
}

inline std::map<int, int> multiplicities(const std::vector<int> & labels)
{
    std::map<int, int> count;
    for (int x : labels)
        ++count[x];
    return count;
}

inline int singletons(const std::vector<int> & labels)
{
    int once = 0;
    for (auto [x, c] : multiplicities(labels))
        if (x != 0 && c == 1)
            ++once;
    return once;
}

// Does some assignment of sigma's values to the vertices partition them into
// classes, class k all pairwise at distance k, with every value used and at most
// max_once nonzero values used once? Plain |sigma|^n enumeration.
inline bool partition_exists(const Matrix & d, const std::vector<int> & sigma, int max_once)
{
    const int n = static_cast<int>(d.size());
    const std::set<int> image(sigma.begin(), sigma.end());
    std::vector<int> labels(n, sigma[0]);
    std::vector<int> digit(n, 0);
    const int base = static_cast<int>(sigma.size());
    for (;;) {
        for (int i = 0; i < n; ++i)
            labels[i] = sigma[digit[i]];
        if (labels_fit(d, labels, image) && singletons(labels) <= max_once)
            return true;
        int i = 0;
        while (i < n && ++digit[i] == base)
            digit[i++] = 0;
        if (i == n)
            return false;
    }
}

// Langford sequence of order m and defect d by filling slots left to right.
inline bool langford_by_slots(int m, int d)
{
    const int len = 2 * m;
    std::vector<int> slot(len, 0);
    std::vector<bool> used(d + m, false);
    std::function<bool(int)> fill = [&](int i) {
        while (i < len && slot[i] != 0)
            ++i;
        if (i == len)
            return true;
        for (int k = d; k < d + m; ++k) {
            if (used[k] || i + k >= len || slot[i + k] != 0)
                continue;
            used[k] = true;
            slot[i] = slot[i + k] = k;
            if (fill(i + 1))
                return true;
            used[k] = false;
            slot[i] = slot[i + k] = 0;
        }
        return false;
    };
    return fill(0);
}

// Smallest l with a distance l-labeling, by trying every labeling with values
// in [0,l]. Only for very small graphs.
inline int lambda_brute(const dlab::Graph & g)
{
    const auto d = floyd_warshall(g);
    const int n = g.order();
    for (int l = 1; l <= n; ++l) {
        std::set<int> from_one, from_zero;
        for (int x = 1; x <= l; ++x)
            from_one.insert(x);
        from_zero = from_one;
        from_zero.insert(0);
        std::vector<int> labels(n, 0);
        for (;;) {
            if (labels_fit(d, labels, from_one) || labels_fit(d, labels, from_zero))
                return l;
            int i = 0;
            while (i < n && ++labels[i] > l)
                labels[i++] = 0;
            if (i == n)
                break;
        }
    }
    return n;
}

}
