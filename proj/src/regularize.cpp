#include "orturan/regularize.hpp"

#include "orturan/containment.hpp"
#include "orturan/rng.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <set>
#include <unordered_map>

namespace orturan {

// ---------------------------------------------------------------------------
// BipartiteDigraph

BipartiteDigraph::BipartiteDigraph(std::size_t sizeU, std::size_t sizeW)
{
    uLabels_.resize(sizeU);
    wLabels_.resize(sizeW);
    std::iota(uLabels_.begin(), uLabels_.end(), Vertex{0});
    std::iota(wLabels_.begin(), wLabels_.end(), static_cast<Vertex>(sizeU));
    out_.assign(sizeU, Row(sizeW));
    in_.assign(sizeW, Row(sizeU));
}

BipartiteDigraph::BipartiteDigraph(std::vector<Vertex> uLabels, std::vector<Vertex> wLabels)
    : uLabels_(std::move(uLabels)), wLabels_(std::move(wLabels))
{
    out_.assign(uLabels_.size(), Row(wLabels_.size()));
    in_.assign(wLabels_.size(), Row(uLabels_.size()));
}

BipartiteDigraph BipartiteDigraph::complete(std::size_t sizeU, std::size_t sizeW)
{
    BipartiteDigraph g(sizeU, sizeW);
    for (auto& row : g.out_)
        row.set();
    for (auto& row : g.in_)
        row.set();
    g.arcs_ = sizeU * sizeW;
    return g;
}

void BipartiteDigraph::addArc(std::size_t u, std::size_t w)
{
    if (u >= sizeU() || w >= sizeW())
        throw Error(ErrorKind::InvalidArgument, "bipartite arc endpoint out of range");
    if (!out_[u].test(w)) {
        out_[u].set(w);
        in_[w].set(u);
        ++arcs_;
    }
}

void BipartiteDigraph::removeArc(std::size_t u, std::size_t w)
{
    if (u >= sizeU() || w >= sizeW())
        throw Error(ErrorKind::InvalidArgument, "bipartite arc endpoint out of range");
    if (out_[u].test(w)) {
        out_[u].reset(w);
        in_[w].reset(u);
        --arcs_;
    }
}

std::size_t BipartiteDigraph::degree(std::size_t global) const
{
    return global < sizeU() ? outDegree(global) : inDegree(global - sizeU());
}

std::size_t BipartiteDigraph::minOutDegree() const
{
    std::size_t best = sizeU() ? SIZE_MAX : 0;
    for (std::size_t u = 0; u < sizeU(); ++u)
        best = std::min(best, outDegree(u));
    return best;
}

BipartiteDigraph BipartiteDigraph::induced(const std::vector<std::size_t>& us, const std::vector<std::size_t>& ws) const
{
    std::vector<Vertex> ul, wl;
    for (auto u : us)
        ul.push_back(uLabels_[u]);
    for (auto w : ws)
        wl.push_back(wLabels_[w]);
    BipartiteDigraph sub(std::move(ul), std::move(wl));
    for (std::size_t i = 0; i < us.size(); ++i)
        for (std::size_t j = 0; j < ws.size(); ++j)
            if (out_[us[i]].test(ws[j])) {
                sub.out_[i].set(j);
                sub.in_[j].set(i);
                ++sub.arcs_;
            }
    return sub;
}

DegreeProfile BipartiteDigraph::profile() const
{
    DegreeProfile p;
    p.vertices.resize(order());
    for (std::size_t u = 0; u < sizeU(); ++u)
        p.vertices[u] = {0, outDegree(u), outDegree(u)};
    for (std::size_t w = 0; w < sizeW(); ++w)
        p.vertices[sizeU() + w] = {inDegree(w), 0, inDegree(w)};
    return p;
}

OrientedGraph BipartiteDigraph::toOriented() const
{
    if (order() > max_vertices)
        throw Error(ErrorKind::TooLarge, "bipartite digraph has more than 64 vertices");
    GraphBuilder b(static_cast<Vertex>(order()));
    for (std::size_t u = 0; u < sizeU(); ++u)
        for (auto w = out_[u].find_first(); w != Row::npos; w = out_[u].find_next(w))
            b.addArc(static_cast<Vertex>(u), static_cast<Vertex>(sizeU() + w));
    return b.build();
}

BipartiteDigraph bipartitePattern(const OrientedGraph& pattern)
{
    if (!isAntidirected(pattern))
        throw Error(ErrorKind::InvalidArgument, "pattern must be antidirected (every vertex a source or a sink)");
    std::vector<Vertex> a, b;
    for (Vertex v = 0; v < pattern.n(); ++v)
        (pattern.outMask(v) ? a : b).push_back(v);
    BipartiteDigraph h(a, b);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            if (pattern.hasArc(a[i], b[j]))
                h.addArc(i, j);
    return h;
}

std::size_t maxOutDegree(const BipartiteDigraph& pattern)
{
    std::size_t best = 0;
    for (std::size_t a = 0; a < pattern.sizeU(); ++a)
        best = std::max(best, pattern.outDegree(a));
    return best;
}

// ---------------------------------------------------------------------------
// Bipartite extraction

namespace {

    std::size_t forwardArcs(const OrientedGraph& g, std::uint64_t xMask)
    {
        std::size_t total = 0;
        for (auto m = xMask; m; m &= m - 1) {
            const auto u = static_cast<Vertex>(std::countr_zero(m));
            total += static_cast<std::size_t>(std::popcount(g.outMask(u) & ~xMask));
        }
        return total;
    }

} // namespace

ExtractResult extractBipartite(const OrientedGraph& g, std::uint64_t seed, std::size_t maxAttempts)
{
    const Vertex n = g.n();
    const std::size_t needed = (g.arcCount() + 3) / 4;
    Rng rng(seed);
    ExtractResult result;
    for (std::size_t attempt = 1; attempt <= maxAttempts; ++attempt) {
        std::vector<Vertex> perm(n);
        std::iota(perm.begin(), perm.end(), Vertex{0});
        rng.shuffle(perm);
        std::uint64_t x = 0;
        for (Vertex i = 0; i < (n + 1) / 2; ++i)
            x |= bit(perm[i]);
        const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : bit(n) - 1;

        std::size_t value = forwardArcs(g, x);
        std::size_t swaps = 0;
        for (bool improved = true; improved;) {
            improved = false;
            for (auto xs = x; xs && !improved; xs &= xs - 1) {
                const auto a = static_cast<Vertex>(std::countr_zero(xs));
                for (auto ys = all & ~x; ys; ys &= ys - 1) {
                    const auto b = static_cast<Vertex>(std::countr_zero(ys));
                    const auto candidate = (x & ~bit(a)) | bit(b);
                    const auto v = forwardArcs(g, candidate);
                    if (v > value) {
                        x = candidate;
                        value = v;
                        ++swaps;
                        improved = true;
                        break;
                    }
                }
            }
        }
        result.swaps += swaps;
        if (value < needed)
            continue;

        std::vector<Vertex> xs, ys;
        for (Vertex v = 0; v < n; ++v)
            ((x >> v) & 1U ? xs : ys).push_back(v);
        BipartiteDigraph h(xs, ys);
        for (std::size_t i = 0; i < xs.size(); ++i)
            for (std::size_t j = 0; j < ys.size(); ++j)
                if (g.hasArc(xs[i], ys[j]))
                    h.addArc(i, j);
        result.graph = std::move(h);
        result.attempts = attempt;
        return result;
    }
    throw Error(ErrorKind::AttemptsExhausted,
                "no balanced split reached ceil(|E|/4) within " + std::to_string(maxAttempts) + " attempts");
}

// ---------------------------------------------------------------------------
// Almost-regular extraction

std::size_t defaultSplitParameter(std::size_t r)
{
    if (r < 2)
        throw Error(ErrorKind::BadParams, "the split parameter needs r >= 2 (epsilon > 0)");
    const double eps = 1.0 - 1.0 / static_cast<double>(r);
    return static_cast<std::size_t>(std::ceil(std::exp2(1.0 / (eps * eps) + 1.0)));
}

namespace {

    struct Split {
        std::vector<std::size_t> us;
        std::vector<std::size_t> ws;
    };

    Split sides(const BipartiteDigraph& g, const std::vector<std::size_t>& globals)
    {
        Split s;
        for (auto v : globals)
            (v < g.sizeU() ? s.us : s.ws).push_back(v < g.sizeU() ? v : v - g.sizeU());
        std::sort(s.us.begin(), s.us.end());
        std::sort(s.ws.begin(), s.ws.end());
        return s;
    }

    std::size_t arcsWithin(const BipartiteDigraph& g, const Split& s)
    {
        BipartiteDigraph::Row wMask(g.sizeW());
        for (auto w : s.ws)
            wMask.set(w);
        std::size_t total = 0;
        for (auto u : s.us)
            total += (g.outRow(u) & wMask).count();
        return total;
    }

    // Repeatedly removes a vertex of smallest degree (ties by index) while that
    // degree is below d0.
    BipartiteDigraph pruneLowDegree(const BipartiteDigraph& g, double d0)
    {
        const std::size_t nu = g.sizeU();
        std::vector<std::size_t> deg(g.order());
        std::set<std::pair<std::size_t, std::size_t>> queue;
        for (std::size_t v = 0; v < g.order(); ++v) {
            deg[v] = g.degree(v);
            queue.emplace(deg[v], v);
        }
        std::vector<bool> alive(g.order(), true);
        auto lower = [&](std::size_t v) {
            queue.erase({deg[v], v});
            --deg[v];
            queue.emplace(deg[v], v);
        };
        while (!queue.empty() && static_cast<double>(queue.begin()->first) < d0) {
            const auto v = queue.begin()->second;
            queue.erase(queue.begin());
            alive[v] = false;
            if (v < nu) {
                const auto& row = g.outRow(v);
                for (auto w = row.find_first(); w != BipartiteDigraph::Row::npos; w = row.find_next(w))
                    if (alive[nu + w])
                        lower(nu + w);
            } else {
                const auto& row = g.inRow(v - nu);
                for (auto u = row.find_first(); u != BipartiteDigraph::Row::npos; u = row.find_next(u))
                    if (alive[u])
                        lower(u);
            }
        }
        std::vector<std::size_t> keep;
        for (std::size_t v = 0; v < g.order(); ++v)
            if (alive[v])
                keep.push_back(v);
        const auto s = sides(g, keep);
        return g.induced(s.us, s.ws);
    }

    BipartiteDigraph trimTo(const BipartiteDigraph& g, std::size_t target)
    {
        BipartiteDigraph out = g;
        std::size_t kept = 0;
        for (std::size_t u = 0; u < g.sizeU(); ++u) {
            const auto& row = g.outRow(u);
            for (auto w = row.find_first(); w != BipartiteDigraph::Row::npos; w = row.find_next(w)) {
                if (kept < target)
                    ++kept;
                else
                    out.removeArc(u, w);
            }
        }
        return out;
    }

} // namespace

RegularizeResult almostRegularSubdigraph(const BipartiteDigraph& h, std::optional<double> c, std::size_t r,
                                         std::optional<std::size_t> tOverride)
{
    if (r == 0)
        throw Error(ErrorKind::BadParams, "r must be positive");
    if (!tOverride && r < 2)
        throw Error(ErrorKind::BadParams, "r = 1 gives epsilon = 0; pass an explicit t");
    const std::size_t t = tOverride ? *tOverride : defaultSplitParameter(r);
    if (t == 0)
        throw Error(ErrorKind::BadParams, "t must be positive");

    RegularizeResult result;
    result.epsilon = 1.0 - 1.0 / static_cast<double>(r);
    result.t = t;
    result.K = 20.0 * static_cast<double>(t);
    const double eps = result.epsilon;
    auto density = [eps](std::size_t arcs, std::size_t m) {
        return 4.0 * static_cast<double>(arcs) / std::pow(static_cast<double>(m), 1.0 + eps);
    };

    BipartiteDigraph current = h;
    if (c) {
        const double target = std::ceil(*c / 4.0 * std::pow(static_cast<double>(h.order()), 1.0 + eps));
        if (!(target >= 1.0) || target > static_cast<double>(h.arcCount()))
            throw Error(ErrorKind::BadParams, "density constant does not match the input's arc count");
        const auto keep = static_cast<std::size_t>(target);
        result.trimmedArcs = h.arcCount() - keep;
        current = trimTo(h, keep);
    }
    if (current.arcCount() == 0)
        throw Error(ErrorKind::TooSmall, "input has no arcs");
    result.cInitial = density(current.arcCount(), current.order());

    for (;;) {
        const std::size_t m = current.order();
        const std::size_t e = current.arcCount();
        if (2 * t > m)
            throw Error(ErrorKind::TooSmall, "2t = " + std::to_string(2 * t) + " exceeds " + std::to_string(m) +
                                                 " vertices before Case 1 applied");
        RegularizeLevel level;
        level.vertices = m;
        level.arcs = e;
        level.c = density(e, m);

        std::vector<std::size_t> byDegree(m);
        std::iota(byDegree.begin(), byDegree.end(), std::size_t{0});
        std::stable_sort(byDegree.begin(), byDegree.end(),
                         [&](std::size_t a, std::size_t b) { return current.degree(a) > current.degree(b); });
        std::vector<std::vector<std::size_t>> buckets(2 * t);
        {
            std::size_t pos = 0;
            for (std::size_t i = 0; i < 2 * t; ++i) {
                const std::size_t size = m / (2 * t) + (i < m % (2 * t) ? 1 : 0);
                buckets[i].assign(byDegree.begin() + static_cast<std::ptrdiff_t>(pos),
                                  byDegree.begin() + static_cast<std::ptrdiff_t>(pos + size));
                pos += size;
            }
        }
        const auto top = sides(current, buckets[0]);
        std::size_t degreeSum = 0;
        for (auto v : buckets[0])
            degreeSum += current.degree(v);
        level.touchingTop = degreeSum - arcsWithin(current, top);

        if (2 * level.touchingTop <= e) {
            level.caseOne = true;
            result.levels.push_back(level);
            std::vector<std::size_t> rest;
            for (std::size_t i = 1; i < 2 * t; ++i)
                rest.insert(rest.end(), buckets[i].begin(), buckets[i].end());
            const auto s = sides(current, rest);
            const double d0 = level.c / 40.0 * std::pow(static_cast<double>(m), eps);
            result.subgraph = pruneLowDegree(current.induced(s.us, s.ws), d0);
            result.cExit = level.c;
            break;
        }

        std::size_t bestBucket = 0, bestArcs = 0;
        Split best;
        for (std::size_t i = 1; i < 2 * t; ++i) {
            auto pair = buckets[0];
            pair.insert(pair.end(), buckets[i].begin(), buckets[i].end());
            auto s = sides(current, pair);
            const auto arcs = arcsWithin(current, s);
            if (arcs > bestArcs) {
                bestArcs = arcs;
                bestBucket = i;
                best = std::move(s);
            }
        }
        level.chosenBucket = bestBucket + 1;
        result.levels.push_back(level);
        if (bestArcs == 0 || best.us.size() + best.ws.size() == m)
            throw Error(ErrorKind::TooSmall, "Case 2 cannot shrink a " + std::to_string(m) + "-vertex level");
        current = current.induced(best.us, best.ws);
    }

    const auto& hs = result.subgraph;
    result.nS = hs.order();
    if (result.nS == 0 || hs.arcCount() == 0)
        throw Error(ErrorKind::InvariantViolation, "Case 1 left an empty subgraph");
    const auto profile = hs.profile();
    const double avg = profile.averageDegree();
    const auto delta = profile.minDegree();
    const auto Delta = profile.maxDegree();
    result.K1 = avg / static_cast<double>(delta);
    result.K2 = avg / static_cast<double>(Delta);

    if (static_cast<double>(Delta) > result.K * static_cast<double>(delta))
        throw Error(ErrorKind::InvariantViolation, "almost-regularity bound violated");
    const double arcBound = result.cExit / 10.0 * std::pow(static_cast<double>(result.nS), 1.0 + eps);
    if (static_cast<double>(hs.arcCount()) < arcBound * (1.0 - 1e-12))
        throw Error(ErrorKind::InvariantViolation, "arc-count bound violated");
    return result;
}

// ---------------------------------------------------------------------------
// Rich sets

namespace {

    // Calls visit(indices) for each r-subset of [0, n) in lexicographic order
    // until visit returns false.
    template <typename Visit>
    void forEachSubset(std::size_t n, std::size_t r, Visit&& visit)
    {
        if (r > n)
            return;
        std::vector<std::size_t> idx(r);
        std::iota(idx.begin(), idx.end(), std::size_t{0});
        for (;;) {
            if (!visit(idx))
                return;
            std::size_t i = r;
            while (i > 0 && idx[i - 1] == n - r + i - 1)
                --i;
            if (i == 0)
                return;
            ++idx[i - 1];
            for (std::size_t j = i; j < r; ++j)
                idx[j] = idx[j - 1] + 1;
        }
    }

    double binomial(std::size_t n, std::size_t k)
    {
        if (k > n)
            return 0;
        double v = 1;
        for (std::size_t i = 1; i <= k; ++i)
            v = v * static_cast<double>(n - k + i) / static_cast<double>(i);
        return v;
    }

    BipartiteDigraph::Row commonInNeighbours(const BipartiteDigraph& g, const std::vector<std::size_t>& ws)
    {
        BipartiteDigraph::Row common(g.sizeU());
        common.set();
        for (auto w : ws)
            common &= g.inRow(w);
        return common;
    }

} // namespace

std::optional<RichSetCertificate> findRichSet(const BipartiteDigraph& g, std::size_t r, std::size_t h)
{
    if (r == 0 || h < r)
        throw Error(ErrorKind::InvalidArgument, "rich sets need 1 <= r <= h");
    const double keySpace = std::pow(static_cast<double>(g.sizeW()) + 1.0, static_cast<double>(r));
    if (keySpace >= 0x1.0p63)
        throw Error(ErrorKind::TooLarge, "r-subsets of W do not fit a 64-bit key");

    std::unordered_map<std::uint64_t, std::size_t> colours;
    std::optional<std::size_t> anchor;
    std::vector<std::size_t> nbrs;
    for (std::size_t u = 0; u < g.sizeU() && !anchor; ++u) {
        nbrs.clear();
        const auto& row = g.outRow(u);
        for (auto w = row.find_first(); w != BipartiteDigraph::Row::npos; w = row.find_next(w))
            nbrs.push_back(w);
        bool coloured = false;
        forEachSubset(nbrs.size(), r, [&](const std::vector<std::size_t>& idx) {
            std::uint64_t key = 0;
            for (auto i : idx)
                key = key * (g.sizeW() + 1) + nbrs[i];
            auto& count = colours[key];
            if (count < h) {
                ++count;
                coloured = true;
                return false;
            }
            return true;
        });
        if (!coloured && nbrs.size() >= h)
            anchor = u;
    }
    if (!anchor)
        return std::nullopt;

    RichSetCertificate cert;
    cert.r = r;
    cert.h = h;
    cert.anchor = *anchor;
    const auto& row = g.outRow(*anchor);
    for (auto w = row.find_first(); w != BipartiteDigraph::Row::npos && cert.R.size() < h; w = row.find_next(w))
        cert.R.push_back(w);

    if (binomial(h, r) <= static_cast<double>(rich_verify_limit)) {
        bool ok = true;
        std::vector<std::size_t> subset(r);
        forEachSubset(h, r, [&](const std::vector<std::size_t>& idx) {
            for (std::size_t i = 0; i < r; ++i)
                subset[i] = cert.R[idx[i]];
            const auto common = commonInNeighbours(g, subset);
            std::vector<std::size_t> witness;
            for (auto u = common.find_first(); u != BipartiteDigraph::Row::npos && witness.size() < h;
                 u = common.find_next(u))
                witness.push_back(u);
            if (witness.size() < h) {
                ok = false;
                return false;
            }
            cert.witnesses.push_back(std::move(witness));
            return true;
        });
        if (!ok)
            throw Error(ErrorKind::InvariantViolation, "greedy colouring produced a set that is not rich");
        cert.verified = true;
    }
    return cert;
}

bool verifyRichSet(const BipartiteDigraph& g, const RichSetCertificate& cert)
{
    if (cert.R.size() < cert.h || cert.r == 0)
        return false;
    for (auto w : cert.R)
        if (w >= g.sizeW())
            return false;
    bool ok = true;
    std::vector<std::size_t> subset(cert.r);
    forEachSubset(cert.R.size(), cert.r, [&](const std::vector<std::size_t>& idx) {
        for (std::size_t i = 0; i < cert.r; ++i)
            subset[i] = cert.R[idx[i]];
        ok = commonInNeighbours(g, subset).count() >= cert.h;
        return ok;
    });
    return ok;
}

namespace {

    Vertex maxLabel(const BipartiteDigraph& g)
    {
        Vertex best = 0;
        for (auto l : g.uLabels())
            best = std::max(best, l);
        for (auto l : g.wLabels())
            best = std::max(best, l);
        return best;
    }

} // namespace

VertexMap embedViaRichSet(const BipartiteDigraph& g, const BipartiteDigraph& pattern, const RichSetCertificate& cert)
{
    if (maxOutDegree(pattern) > cert.r)
        throw Error(ErrorKind::InvalidArgument, "pattern has an A-vertex of out-degree above r");
    if (pattern.sizeW() > cert.R.size())
        throw Error(ErrorKind::CertificateInsufficient, "rich set smaller than the pattern's B side");

    VertexMap map(pattern.order() ? maxLabel(pattern) + 1 : 0, g.order() ? maxLabel(g) + 1 : 0);
    std::vector<std::size_t> imageB(pattern.sizeW());
    for (std::size_t b = 0; b < pattern.sizeW(); ++b) {
        imageB[b] = cert.R[b];
        map.assignment[pattern.wLabel(b)] = g.wLabel(cert.R[b]);
    }
    BipartiteDigraph::Row used(g.sizeU());
    for (std::size_t a = 0; a < pattern.sizeU(); ++a) {
        BipartiteDigraph::Row common(g.sizeU());
        common.set();
        const auto& row = pattern.outRow(a);
        for (auto b = row.find_first(); b != BipartiteDigraph::Row::npos; b = row.find_next(b))
            common &= g.inRow(imageB[b]);
        common -= used;
        const auto u = common.find_first();
        if (u == BipartiteDigraph::Row::npos)
            throw Error(ErrorKind::CertificateInsufficient,
                        "no unused common in-neighbour for pattern vertex " + std::to_string(pattern.uLabel(a)));
        used.set(u);
        map.assignment[pattern.uLabel(a)] = g.uLabel(u);
    }
    return map;
}

bool isValidEmbedding(const BipartiteDigraph& host, const BipartiteDigraph& pattern, const VertexMap& map)
{
    const auto f = pattern.toOriented();
    std::unordered_map<Vertex, std::pair<bool, std::size_t>> where;
    for (std::size_t u = 0; u < host.sizeU(); ++u)
        where.emplace(host.uLabel(u), std::make_pair(true, u));
    for (std::size_t w = 0; w < host.sizeW(); ++w)
        where.emplace(host.wLabel(w), std::make_pair(false, w));

    // Host restricted to the image, numbered like the pattern.
    std::vector<std::pair<bool, std::size_t>> image;
    for (std::size_t i = 0; i < pattern.order(); ++i) {
        const Vertex label = i < pattern.sizeU() ? pattern.uLabel(i) : pattern.wLabel(i - pattern.sizeU());
        if (label >= map.assignment.size() || !map.assignment[label])
            return false;
        auto it = where.find(*map.assignment[label]);
        if (it == where.end())
            return false;
        image.push_back(it->second);
    }
    std::vector<std::pair<bool, std::size_t>> sorted = image;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        return false;

    GraphBuilder b(f.n());
    for (Vertex i = 0; i < f.n(); ++i)
        for (Vertex j = 0; j < f.n(); ++j)
            if (image[i].first && !image[j].first && host.hasArc(image[i].second, image[j].second))
                b.addArc(i, j);
    VertexMap identity(f.n(), f.n());
    for (Vertex i = 0; i < f.n(); ++i)
        identity.assignment[i] = i;
    return isEmbedding(b.build(), f, identity);
}

bool isValidEmbedding(const OrientedGraph& host, const BipartiteDigraph& pattern, const VertexMap& map)
{
    const auto f = pattern.toOriented();
    VertexMap m(f.n(), host.n());
    for (std::size_t i = 0; i < pattern.order(); ++i) {
        const Vertex label = i < pattern.sizeU() ? pattern.uLabel(i) : pattern.wLabel(i - pattern.sizeU());
        if (label >= map.assignment.size() || !map.assignment[label] || *map.assignment[label] >= host.n())
            return false;
        m.assignment[i] = map.assignment[label];
    }
    return isEmbedding(host, f, m);
}

// ---------------------------------------------------------------------------
// Random zooming

namespace {

    double truncationLimit(std::size_t h, std::size_t sizeW, std::size_t r)
    {
        return 4.0 * static_cast<double>(h) * std::pow(2.0 * static_cast<double>(sizeW), static_cast<double>(r));
    }

} // namespace

ZoomConfig ZoomConfig::forInstance(const BipartiteDigraph& g, const BipartiteDigraph& pattern, std::size_t r,
                                   std::uint64_t seed)
{
    ZoomConfig cfg;
    cfg.r = r;
    cfg.h = pattern.order();
    cfg.d = g.minOutDegree();
    cfg.seed = seed;
    if (g.sizeW() == 0 || cfg.h == 0 || r == 0) {
        cfg.p = 0;
        return cfg;
    }
    const double limit = truncationLimit(cfg.h, g.sizeW(), r);
    if (static_cast<double>(g.sizeU()) >= limit) {
        cfg.p = 1;
    } else {
        cfg.p = 1.0 / (2.0 * static_cast<double>(g.sizeW())) *
                std::pow(static_cast<double>(g.sizeU()) / (4.0 * static_cast<double>(cfg.h)),
                         1.0 / static_cast<double>(r));
        cfg.p = std::min(cfg.p, 1.0);
    }
    return cfg;
}

bool ZoomConfig::feasible() const
{
    const auto hd = static_cast<double>(h);
    return r > 0 && h > 0 && p > 0 && d >= std::max<std::size_t>(40, 2 * h) &&
           p * static_cast<double>(d) / 2.0 >= std::max(20.0, hd);
}

ZoomResult randomZoom(const BipartiteDigraph& g, const BipartiteDigraph& pattern, const ZoomConfig& cfg)
{
    if (!cfg.feasible())
        throw Error(ErrorKind::InfeasibleConfig, "need d >= max{40,2h} and p*d/2 >= max{20,h}");
    if (pattern.order() > cfg.h)
        throw Error(ErrorKind::InfeasibleConfig, "h is smaller than the pattern");
    if (maxOutDegree(pattern) > cfg.r)
        throw Error(ErrorKind::InfeasibleConfig, "pattern has an A-vertex of out-degree above r");
    if (g.minOutDegree() < cfg.d)
        throw Error(ErrorKind::InfeasibleConfig, "host has a U vertex of out-degree below d");

    ZoomResult result;
    const double limit = truncationLimit(cfg.h, g.sizeW(), cfg.r);
    result.truncatedU = static_cast<double>(g.sizeU()) > limit ? static_cast<std::size_t>(limit) : g.sizeU();
    const double threshold = cfg.p * static_cast<double>(cfg.d) / 2.0;
    const double maxW = 2.0 * cfg.p * static_cast<double>(g.sizeW());

    Rng rng(cfg.seed);
    for (std::size_t trial = 1; trial <= cfg.maxRetries; ++trial) {
        result.trials = trial;
        BipartiteDigraph::Row sample(g.sizeW());
        std::vector<std::size_t> ws;
        for (std::size_t w = 0; w < g.sizeW(); ++w)
            if (rng.chance(cfg.p)) {
                sample.set(w);
                ws.push_back(w);
            }
        std::vector<std::size_t> us;
        for (std::size_t u = 0; u < result.truncatedU; ++u)
            if (static_cast<double>((g.outRow(u) & sample).count()) >= threshold)
                us.push_back(u);
        if (static_cast<double>(ws.size()) > maxW || 4 * us.size() < result.truncatedU)
            continue;

        const auto zoomed = g.induced(us, ws);
        auto cert = findRichSet(zoomed, cfg.r, cfg.h);
        if (!cert)
            continue;
        result.embedding = embedViaRichSet(zoomed, pattern, *cert);
        result.sampledW = ws.size();
        result.keptU = us.size();
        result.certificate = std::move(*cert);
        return result;
    }
    throw Error(ErrorKind::RetriesExhausted,
                "no accepted sample yielded a rich set in " + std::to_string(cfg.maxRetries) + " trials");
}

// ---------------------------------------------------------------------------
// Pipeline

double densityConstant(std::size_t h, std::size_t r, double K1, double K2)
{
    const double rd = static_cast<double>(r);
    const double hd = static_cast<double>(h);
    return std::max(20.0, hd) * 20.0 * std::pow(K1, 1.0 + 1.0 / rd) * std::pow(K2 / (4.0 * hd), 1.0 / rd) *
           std::pow(K1 / (K2 + K1), 1.0 - 1.0 / rd);
}

nlohmann::json PipelineReport::json() const
{
    nlohmann::json j = diagnostics;
    j["ok"] = embedding.has_value();
    j["failedStage"] = failedStage.empty() ? nlohmann::json(nullptr) : nlohmann::json(failedStage);
    j["message"] = message;
    if (embedding) {
        nlohmann::json pairs = nlohmann::json::array();
        for (auto [from, to] : embedding->pairs())
            pairs.push_back({from, to});
        j["embedding"] = pairs;
    } else {
        j["embedding"] = nullptr;
    }
    return j;
}

PipelineReport faksPipeline(const OrientedGraph& g, const BipartiteDigraph& pattern, std::size_t r,
                            std::uint64_t seed, const PipelineOptions& options)
{
    if (r == 0)
        throw Error(ErrorKind::BadParams, "r must be positive");
    if (maxOutDegree(pattern) > r)
        throw Error(ErrorKind::BadParams, "pattern has an A-vertex of out-degree above r");

    PipelineReport report;
    auto& diag = report.diagnostics;
    diag["seed"] = seed;
    diag["r"] = r;
    diag["pattern"] = {{"A", pattern.sizeU()}, {"B", pattern.sizeW()}, {"arcs", pattern.arcCount()}};
    auto fail = [&](const std::string& stage, const std::string& message) {
        report.failedStage = stage;
        report.message = message;
        return report;
    };

    diag["extract"] = {{"vertices", g.n()}, {"arcs", g.arcCount()}};
    ExtractResult extracted;
    try {
        extracted = extractBipartite(g, seed, options.maxAttempts);
    } catch (const Error& e) {
        return fail("extract", e.what());
    }
    diag["extract"]["X"] = extracted.graph.sizeU();
    diag["extract"]["Y"] = extracted.graph.sizeW();
    diag["extract"]["retained"] = extracted.graph.arcCount();
    diag["extract"]["attempts"] = extracted.attempts;
    diag["extract"]["meetsQuarter"] = 4 * extracted.graph.arcCount() >= g.arcCount();

    diag["regularize"] = {{"vertices", extracted.graph.order()}, {"arcs", extracted.graph.arcCount()}};
    RegularizeResult reg;
    try {
        reg = almostRegularSubdigraph(extracted.graph, std::nullopt, r, options.tOverride);
    } catch (const Error& e) {
        return fail("regularize", e.what());
    }
    const double cH = densityConstant(pattern.order(), r, reg.K1, reg.K2);
    diag["regularize"].update({{"c", reg.cInitial},
                               {"cExit", reg.cExit},
                               {"t", reg.t},
                               {"K", reg.K},
                               {"epsilon", reg.epsilon},
                               {"levels", reg.levels.size()},
                               {"nS", reg.nS},
                               {"arcsS", reg.subgraph.arcCount()},
                               {"K1", reg.K1},
                               {"K2", reg.K2},
                               {"cH", cH}});

    auto cfg = ZoomConfig::forInstance(reg.subgraph, pattern, r, seed);
    cfg.maxRetries = options.maxRetries;
    diag["zoom"] = {{"U", reg.subgraph.sizeU()}, {"W", reg.subgraph.sizeW()}, {"d", cfg.d},
                    {"h", cfg.h},              {"p", cfg.p},                 {"feasible", cfg.feasible()}};
    if (!cfg.feasible())
        return fail("zoom", std::string(to_string(ErrorKind::InfeasibleConfig)) +
                                ": regularized host misses d >= max{40,2h} or p*d/2 >= max{20,h}");
    ZoomResult zoom;
    try {
        zoom = randomZoom(reg.subgraph, pattern, cfg);
    } catch (const Error& e) {
        return fail("zoom", e.what());
    }
    diag["zoom"].update({{"trials", zoom.trials}, {"Wprime", zoom.sampledW}, {"Uprime", zoom.keptU}});
    if (!isValidEmbedding(g, pattern, zoom.embedding))
        throw Error(ErrorKind::InvariantViolation, "pipeline produced an invalid embedding");
    report.embedding = zoom.embedding;
    return report;
}

} // namespace orturan
