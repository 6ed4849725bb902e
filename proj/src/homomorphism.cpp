#include "orturan/homomorphism.hpp"

#include "orturan/canon.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace orturan {

bool VertexMap::isTotal() const
{
    return std::all_of(assignment.begin(), assignment.end(), [](const auto& a) { return a.has_value(); });
}

bool VertexMap::isInjective() const
{
    std::vector<Vertex> images;
    for (const auto& a : assignment)
        if (a)
            images.push_back(*a);
    std::sort(images.begin(), images.end());
    return std::adjacent_find(images.begin(), images.end()) == images.end();
}

std::vector<std::pair<Vertex, Vertex>> VertexMap::pairs() const
{
    std::vector<std::pair<Vertex, Vertex>> result;
    for (Vertex v = 0; v < assignment.size(); ++v)
        if (assignment[v])
            result.emplace_back(v, *assignment[v]);
    return result;
}

bool isHomomorphism(const OrientedGraph& f, const OrientedGraph& d, const VertexMap& map)
{
    if (map.assignment.size() != f.n() || !map.isTotal())
        return false;
    for (const auto& a : map.assignment)
        if (*a >= d.n())
            return false;
    for (auto [u, v] : f.arcs())
        if (!d.hasArc(*map.assignment[u], *map.assignment[v]))
            return false;
    return true;
}

namespace {

    // Backtracking over source vertices. Adjacent source vertices necessarily get
    // distinct images because the target has no loops; non-adjacent ones may share.
    class HomSearch {
    public:
        HomSearch(const OrientedGraph& f, const OrientedGraph& d) : f_(f), d_(d), image_(f.n(), 0)
        {
            // Descending degree, then prefer vertices adjacent to already ordered ones.
            std::vector<Vertex> rest(f.n());
            std::iota(rest.begin(), rest.end(), 0);
            std::uint64_t placed = 0;
            while (!rest.empty()) {
                auto best = std::max_element(rest.begin(), rest.end(), [&](Vertex a, Vertex b) {
                    auto ka = std::make_tuple(std::popcount(f.neighbourMask(a) & placed), f.degree(a), -static_cast<int>(a));
                    auto kb = std::make_tuple(std::popcount(f.neighbourMask(b) & placed), f.degree(b), -static_cast<int>(b));
                    return ka < kb;
                });
                order_.push_back(*best);
                placed |= bit(*best);
                rest.erase(best);
            }
            std::uint64_t hasOut = 0, hasIn = 0;
            for (Vertex t = 0; t < d.n(); ++t) {
                if (d.outMask(t))
                    hasOut |= bit(t);
                if (d.inMask(t))
                    hasIn |= bit(t);
            }
            const std::uint64_t all = d.n() == 64 ? ~std::uint64_t{0} : bit(d.n()) - 1;
            domain_.resize(f.n());
            for (Vertex s = 0; s < f.n(); ++s) {
                std::uint64_t dom = all;
                if (f.outMask(s))
                    dom &= hasOut;
                if (f.inMask(s))
                    dom &= hasIn;
                domain_[s] = dom;
            }
        }

        bool run() { return extend(0, 0); }

        VertexMap witness() const
        {
            VertexMap m(f_.n(), d_.n());
            for (Vertex s = 0; s < f_.n(); ++s)
                m.assignment[s] = image_[s];
            return m;
        }

    private:
        bool extend(std::size_t depth, std::uint64_t assigned)
        {
            if (depth == order_.size())
                return true;
            const Vertex s = order_[depth];
            std::uint64_t cand = domain_[s];
            for (std::uint64_t m = f_.inMask(s) & assigned; m; m &= m - 1)
                cand &= d_.outMask(image_[std::countr_zero(m)]);
            for (std::uint64_t m = f_.outMask(s) & assigned; m; m &= m - 1)
                cand &= d_.inMask(image_[std::countr_zero(m)]);
            for (; cand; cand &= cand - 1) {
                image_[s] = static_cast<Vertex>(std::countr_zero(cand));
                if (extend(depth + 1, assigned | bit(s)))
                    return true;
            }
            return false;
        }

        const OrientedGraph& f_;
        const OrientedGraph& d_;
        std::vector<Vertex> order_;
        std::vector<std::uint64_t> domain_;
        std::vector<Vertex> image_;
    };

} // namespace

std::optional<VertexMap> homExists(const OrientedGraph& f, const OrientedGraph& d)
{
    if (f.n() == 0)
        return VertexMap(0, d.n());
    if (d.n() == 0)
        return std::nullopt;
    HomSearch search(f, d);
    if (!search.run())
        return std::nullopt;
    return search.witness();
}

bool isAntidirected(const OrientedGraph& f)
{
    for (Vertex v = 0; v < f.n(); ++v)
        if (f.inMask(v) && f.outMask(v))
            return false;
    return true;
}

namespace {

    // Kahn's algorithm; returns the topological order found (shorter than n iff cyclic).
    std::vector<Vertex> topologicalOrder(const OrientedGraph& f)
    {
        std::vector<std::size_t> indeg(f.n());
        std::vector<Vertex> queue;
        for (Vertex v = 0; v < f.n(); ++v) {
            indeg[v] = f.inDegree(v);
            if (indeg[v] == 0)
                queue.push_back(v);
        }
        for (std::size_t head = 0; head < queue.size(); ++head)
            for (std::uint64_t m = f.outMask(queue[head]); m; m &= m - 1) {
                const auto w = static_cast<Vertex>(std::countr_zero(m));
                if (--indeg[w] == 0)
                    queue.push_back(w);
            }
        return queue;
    }

} // namespace

bool hasDirectedCycle(const OrientedGraph& f)
{
    return topologicalOrder(f).size() != f.n();
}

std::size_t longestPathVertices(const OrientedGraph& f)
{
    auto order = topologicalOrder(f);
    if (order.size() != f.n())
        throw Error(ErrorKind::InvalidArgument, "longest path requires an acyclic graph");
    std::vector<std::size_t> level(f.n(), 1);
    std::size_t best = 0;
    for (Vertex v : order) {
        best = std::max(best, level[v]);
        for (std::uint64_t m = f.outMask(v); m; m &= m - 1) {
            const auto w = static_cast<Vertex>(std::countr_zero(m));
            level[w] = std::max(level[w], level[v] + 1);
        }
    }
    return best;
}

CompressibilityResult compressibility(const OrientedGraph& f)
{
    if (f.arcCount() == 0)
        throw Error(ErrorKind::EmptyPattern, "compressibility is undefined for a pattern without arcs");
    if (hasDirectedCycle(f))
        return {};

    // Any tournament of order 1 witnesses z > 1 since f has an arc.
    OrientedGraph previousWitness(1);
    for (Vertex k = 2;; ++k) {
        if (k > tournament_enumeration_max)
            throw Error(ErrorKind::TooLarge,
                        "compressibility exceeds the tournament enumeration cap of " +
                            std::to_string(tournament_enumeration_max));
        std::optional<OrientedGraph> counterexample;
        for (const auto& t : enumerateTournaments(k))
            if (!homExists(f, t)) {
                counterexample = t;
                break;
            }
        if (!counterexample)
            return {k, previousWitness};
        previousWitness = *counterexample;
    }
}

} // namespace orturan
