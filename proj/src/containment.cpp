#include "orturan/containment.hpp"

#include "orturan/canon.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <limits>
#include <thread>

namespace orturan {

bool isEmbedding(const OrientedGraph& host, const OrientedGraph& pattern, const VertexMap& map)
{
    return map.isInjective() && isHomomorphism(pattern, host, map);
}

namespace {

    class CopySearch {
    public:
        CopySearch(const OrientedGraph& host, const OrientedGraph& pattern)
            : host_(host), pattern_(pattern), image_(pattern.n(), 0), domain_(pattern.n(), 0)
        {
            for (Vertex p = 0; p < pattern.n(); ++p) {
                const auto pin = pattern.inDegree(p);
                const auto pout = pattern.outDegree(p);
                for (Vertex h = 0; h < host.n(); ++h)
                    if (host.inDegree(h) >= pin && host.outDegree(h) >= pout)
                        domain_[p] |= bit(h);
            }
        }

        // Searches for a copy, optionally with pattern vertex `first` pinned to host vertex `target`.
        bool run(std::optional<std::pair<Vertex, Vertex>> pin)
        {
            order(pin ? std::optional<Vertex>(pin->first) : std::nullopt);
            if (pin) {
                if (!(domain_[pin->first] & bit(pin->second)))
                    return false;
                image_[pin->first] = pin->second;
                return extend(1, bit(pin->first), bit(pin->second));
            }
            return extend(0, 0, 0);
        }

        VertexMap witness() const
        {
            VertexMap m(pattern_.n(), host_.n());
            for (Vertex p = 0; p < pattern_.n(); ++p)
                m.assignment[p] = image_[p];
            return m;
        }

    private:
        // Decreasing degree, preferring vertices joined to those already ordered.
        void order(std::optional<Vertex> first)
        {
            order_.clear();
            std::uint64_t placed = 0;
            if (first) {
                order_.push_back(*first);
                placed |= bit(*first);
            }
            while (order_.size() < pattern_.n()) {
                Vertex best = 0;
                bool have = false;
                std::tuple<int, std::size_t> bestKey{};
                for (Vertex p = 0; p < pattern_.n(); ++p) {
                    if (placed & bit(p))
                        continue;
                    std::tuple<int, std::size_t> key{std::popcount(pattern_.neighbourMask(p) & placed),
                                                     pattern_.degree(p)};
                    if (!have || key > bestKey) {
                        best = p;
                        bestKey = key;
                        have = true;
                    }
                }
                order_.push_back(best);
                placed |= bit(best);
            }
        }

        bool extend(std::size_t depth, std::uint64_t assigned, std::uint64_t used)
        {
            if (depth == order_.size())
                return true;
            const Vertex p = order_[depth];
            std::uint64_t cand = domain_[p] & ~used;
            for (std::uint64_t m = pattern_.inMask(p) & assigned; m && cand; m &= m - 1)
                cand &= host_.outMask(image_[std::countr_zero(m)]);
            for (std::uint64_t m = pattern_.outMask(p) & assigned; m && cand; m &= m - 1)
                cand &= host_.inMask(image_[std::countr_zero(m)]);
            for (; cand; cand &= cand - 1) {
                const auto h = static_cast<Vertex>(std::countr_zero(cand));
                image_[p] = h;
                if (extend(depth + 1, assigned | bit(p), used | bit(h)))
                    return true;
            }
            return false;
        }

        const OrientedGraph& host_;
        const OrientedGraph& pattern_;
        std::vector<Vertex> order_;
        std::vector<Vertex> image_;
        std::vector<std::uint64_t> domain_;
    };

    // Runs check(i) for i in [0, count) across `jobs` threads and returns the
    // smallest i for which it returns false (or count).
    template <typename Check>
    std::size_t firstFailure(std::size_t count, unsigned jobs, Check&& check)
    {
        if (jobs <= 1 || count < 2) {
            for (std::size_t i = 0; i < count; ++i)
                if (!check(i))
                    return i;
            return count;
        }
        std::atomic<std::size_t> firstBad{count};
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= count || i >= firstBad.load())
                    return;
                if (!check(i)) {
                    std::size_t cur = firstBad.load();
                    while (i < cur && !firstBad.compare_exchange_weak(cur, i)) {
                    }
                }
            }
        };
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < jobs; ++t)
            pool.emplace_back(worker);
        for (auto& t : pool)
            t.join();
        return firstBad.load();
    }

} // namespace

std::optional<VertexMap> containsCopy(const OrientedGraph& host, const OrientedGraph& pattern)
{
    if (pattern.n() > host.n())
        return std::nullopt;
    if (pattern.arcCount() > host.arcCount())
        return std::nullopt;
    CopySearch search(host, pattern);
    if (!search.run(std::nullopt))
        return std::nullopt;
    return search.witness();
}

std::optional<VertexMap> containsCopyUsing(const OrientedGraph& host, const OrientedGraph& pattern, Vertex v)
{
    if (pattern.n() > host.n() || v >= host.n())
        return std::nullopt;
    CopySearch search(host, pattern);
    for (Vertex p = 0; p < pattern.n(); ++p)
        if (search.run(std::make_pair(p, v)))
            return search.witness();
    return std::nullopt;
}

bool isFree(const OrientedGraph& host, const OrientedGraph& pattern)
{
    return !containsCopy(host, pattern).has_value();
}

UniversalCheck allTournamentsContain(Vertex k, const OrientedGraph& pattern, unsigned jobs)
{
    const auto tournaments = enumerateTournaments(k);
    const auto bad = firstFailure(tournaments.size(), jobs,
                                  [&](std::size_t i) { return containsCopy(tournaments[i], pattern).has_value(); });
    UniversalCheck result;
    if (bad < tournaments.size()) {
        result.holds = false;
        result.counterexample = tournaments[bad];
    }
    return result;
}

namespace {

    OrientedGraph orientationFor(const UndirectedGraph& host, std::uint64_t mask)
    {
        GraphBuilder b(host.n);
        for (std::size_t e = 0; e < host.edges.size(); ++e) {
            auto [u, v] = host.edges[e];
            if ((mask >> e) & 1U)
                b.addArc(v, u);
            else
                b.addArc(u, v);
        }
        return b.build();
    }

} // namespace

UniversalCheck allOrientationsContain(const UndirectedGraph& host, const OrientedGraph& pattern, unsigned jobs)
{
    const std::size_t m = host.edges.size();
    if (m > orientation_edge_cap)
        throw Error(ErrorKind::TooLarge, "host has " + std::to_string(m) + " edges; at most 24 supported");
    const std::size_t total = std::size_t{1} << m;

    // Workers walk contiguous blocks of Gray-code indices, flipping one arc per step.
    const std::size_t blocks = std::max<std::size_t>(1, std::min<std::size_t>(total, jobs <= 1 ? 1 : jobs * 8));
    const std::size_t blockSize = (total + blocks - 1) / blocks;
    std::vector<std::size_t> blockFailure(blocks, total);

    firstFailure(blocks, jobs, [&](std::size_t blk) {
        const std::size_t begin = blk * blockSize;
        const std::size_t end = std::min(total, begin + blockSize);
        if (begin >= end)
            return true;
        GraphBuilder b(orientationFor(host, begin ^ (begin >> 1)));
        for (std::size_t i = begin; i < end; ++i) {
            if (i != begin) {
                const auto e = static_cast<std::size_t>(std::countr_zero(i));
                auto [u, v] = host.edges[e];
                if (((i ^ (i >> 1)) >> e) & 1U)
                    b.orient(v, u);
                else
                    b.orient(u, v);
            }
            if (!containsCopy(b.peek(), pattern)) {
                blockFailure[blk] = i;
                return false;
            }
        }
        return true;
    });

    UniversalCheck result;
    const auto bad = *std::min_element(blockFailure.begin(), blockFailure.end());
    if (bad < total) {
        result.holds = false;
        result.counterexample = orientationFor(host, bad ^ (bad >> 1));
    }
    return result;
}

} // namespace orturan
