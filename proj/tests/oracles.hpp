#pragma once

// Slow, obviously-correct reference computations used only by the tests.
// Nothing here calls into the search code under test.

#include "orturan/digraph.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

namespace oracle {

using orturan::Arc;
using orturan::OrientedGraph;
using orturan::Vertex;

struct Dense {
    Vertex n = 0;
    std::vector<std::vector<int>> adj; // adj[u][v] = 1 iff u->v

    explicit Dense(Vertex n_) : n(n_), adj(n_, std::vector<int>(n_, 0)) {}
};

inline Dense toDense(const OrientedGraph& g)
{
    Dense d(g.n());
    for (Vertex u = 0; u < g.n(); ++u)
        for (Vertex v = 0; v < g.n(); ++v)
            d.adj[u][v] = g.hasArc(u, v) ? 1 : 0;
    return d;
}

inline OrientedGraph fromDense(const Dense& d)
{
    std::vector<Arc> arcs;
    for (Vertex u = 0; u < d.n; ++u)
        for (Vertex v = 0; v < d.n; ++v)
            if (d.adj[u][v])
                arcs.emplace_back(u, v);
    return OrientedGraph::fromArcs(d.n, arcs);
}

inline std::size_t arcCount(const Dense& d)
{
    std::size_t c = 0;
    for (auto& row : d.adj)
        c += static_cast<std::size_t>(std::count(row.begin(), row.end(), 1));
    return c;
}

// Ternary code of the labeling perm (position i holds vertex perm[i]).
inline std::string codeUnder(const Dense& d, const std::vector<Vertex>& perm)
{
    std::string s;
    for (Vertex i = 0; i < d.n; ++i)
        for (Vertex j = i + 1; j < d.n; ++j)
            s += d.adj[perm[i]][perm[j]] ? '1' : d.adj[perm[j]][perm[i]] ? '2' : '0';
    return s;
}

// Minimum code over all n! labelings.
inline std::string minCode(const OrientedGraph& g)
{
    const auto d = toDense(g);
    std::vector<Vertex> perm(g.n());
    std::iota(perm.begin(), perm.end(), Vertex{0});
    std::string best = codeUnder(d, perm);
    while (std::next_permutation(perm.begin(), perm.end()))
        best = std::min(best, codeUnder(d, perm));
    return best;
}

inline std::size_t automorphismCount(const OrientedGraph& g)
{
    const auto d = toDense(g);
    std::vector<Vertex> perm(g.n());
    std::iota(perm.begin(), perm.end(), Vertex{0});
    const auto id = codeUnder(d, perm);
    std::size_t count = 0;
    do {
        if (codeUnder(d, perm) == id)
            ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

inline std::size_t factorial(std::size_t n)
{
    std::size_t f = 1;
    for (std::size_t i = 2; i <= n; ++i)
        f *= i;
    return f;
}

// Every labeled oriented graph on n vertices: each pair is absent, forward or
// backward. Tournaments only when `complete`.
inline void forEachLabeled(Vertex n, bool complete, const std::function<void(const Dense&)>& visit)
{
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j)
            pairs.emplace_back(i, j);
    const int base = complete ? 2 : 3;
    std::vector<int> digit(pairs.size(), 0);
    Dense d(n);
    for (;;) {
        for (std::size_t k = 0; k < pairs.size(); ++k) {
            auto [i, j] = pairs[k];
            const int x = complete ? digit[k] + 1 : digit[k];
            d.adj[i][j] = x == 1;
            d.adj[j][i] = x == 2;
        }
        visit(d);
        std::size_t k = 0;
        while (k < digit.size() && ++digit[k] == base)
            digit[k++] = 0;
        if (k == digit.size())
            return;
    }
}

// Any map f -> host (not necessarily injective) preserving arcs.
inline bool naiveHom(const Dense& f, const Dense& host)
{
    if (f.n == 0)
        return true;
    std::vector<Vertex> img(f.n, 0);
    for (;;) {
        bool ok = true;
        for (Vertex u = 0; u < f.n && ok; ++u)
            for (Vertex v = 0; v < f.n && ok; ++v)
                if (f.adj[u][v] && !host.adj[img[u]][img[v]])
                    ok = false;
        if (ok)
            return true;
        std::size_t k = 0;
        while (k < f.n && ++img[k] == host.n)
            img[k++] = 0;
        if (k == f.n)
            return false;
    }
}

// Injective arc-preserving map f -> host, tried over all ordered selections.
inline bool naiveContains(const Dense& host, const Dense& f)
{
    if (f.n > host.n)
        return false;
    std::vector<Vertex> img;
    std::vector<bool> used(host.n, false);
    std::function<bool(Vertex)> place = [&](Vertex k) {
        if (k == f.n) {
            for (Vertex u = 0; u < f.n; ++u)
                for (Vertex v = 0; v < f.n; ++v)
                    if (f.adj[u][v] && !host.adj[img[u]][img[v]])
                        return false;
            return true;
        }
        for (Vertex h = 0; h < host.n; ++h) {
            if (used[h])
                continue;
            used[h] = true;
            img.push_back(h);
            const bool found = place(k + 1);
            img.pop_back();
            used[h] = false;
            if (found)
                return true;
        }
        return false;
    };
    return place(0);
}

// exo(n, F) by scanning every labeled oriented graph.
inline std::size_t naiveExo(Vertex n, const OrientedGraph& pattern)
{
    const auto f = toDense(pattern);
    std::size_t best = 0;
    forEachLabeled(n, false, [&](const Dense& d) {
        const auto arcs = arcCount(d);
        if (arcs > best && !naiveContains(d, f))
            best = arcs;
    });
    return best;
}

// Smallest k with a homomorphism into every labeled k-tournament (0 if none up to kMax).
inline std::size_t naiveCompressibility(const OrientedGraph& pattern, Vertex kMax)
{
    const auto f = toDense(pattern);
    for (Vertex k = 1; k <= kMax; ++k) {
        bool all = true;
        forEachLabeled(k, true, [&](const Dense& t) {
            if (all && !naiveHom(f, t))
                all = false;
        });
        if (all)
            return k;
    }
    return 0;
}

inline std::uint64_t splitmix(std::uint64_t& x)
{
    std::uint64_t z = (x += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Each pair joined with probability num/den, direction by a fair coin.
inline OrientedGraph randomGraph(Vertex n, std::uint64_t seed, unsigned num = 1, unsigned den = 2)
{
    std::vector<Arc> arcs;
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j) {
            if (splitmix(seed) % den >= num)
                continue;
            if (splitmix(seed) & 1U)
                arcs.emplace_back(i, j);
            else
                arcs.emplace_back(j, i);
        }
    return OrientedGraph::fromArcs(n, arcs);
}

inline std::size_t binomial(std::size_t n, std::size_t k)
{
    if (k > n)
        return 0;
    std::size_t r = 1;
    for (std::size_t i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

// Best number of X->Y arcs over all balanced splits (n small).
inline std::size_t bestBalancedSplit(const OrientedGraph& g)
{
    const Vertex n = g.n();
    std::size_t best = 0;
    for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
        const auto size = static_cast<unsigned>(__builtin_popcount(mask));
        if (size != n / 2 && size != (n + 1) / 2)
            continue;
        std::size_t v = 0;
        for (Vertex u = 0; u < n; ++u)
            for (Vertex w = 0; w < n; ++w)
                if (((mask >> u) & 1U) && !((mask >> w) & 1U) && g.hasArc(u, w))
                    ++v;
        best = std::max(best, v);
    }
    return best;
}

} // namespace oracle
