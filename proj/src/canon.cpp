#include "orturan/canon.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <map>

namespace orturan {

std::string CanonicalCode::str() const
{
    return std::to_string(n) + ":" + digits;
}

CanonicalCode CanonicalCode::parse(const std::string& text)
{
    auto colon = text.find(':');
    if (colon == std::string::npos || colon == 0)
        throw ParseError(1, 1, "canonical code must look like 'n:digits'");
    unsigned long n = 0;
    for (std::size_t i = 0; i < colon; ++i) {
        if (text[i] < '0' || text[i] > '9')
            throw ParseError(1, i + 1, "bad vertex count");
        n = n * 10 + static_cast<unsigned long>(text[i] - '0');
        if (n > max_vertices)
            throw ParseError(1, i + 1, "vertex count exceeds 64");
    }
    CanonicalCode c{static_cast<Vertex>(n), text.substr(colon + 1)};
    if (c.digits.size() != n * (n == 0 ? 0 : n - 1) / 2)
        throw ParseError(1, colon + 2, "code length does not match n(n-1)/2");
    for (std::size_t i = 0; i < c.digits.size(); ++i)
        if (c.digits[i] < '0' || c.digits[i] > '2')
            throw ParseError(1, colon + 2 + i, "code digits must be 0, 1 or 2");
    return c;
}

CanonicalCode codeOf(const OrientedGraph& g)
{
    CanonicalCode c{g.n(), {}};
    c.digits.reserve(g.n() * (g.n() == 0 ? 0 : g.n() - 1) / 2);
    for (Vertex i = 0; i < g.n(); ++i)
        for (Vertex j = i + 1; j < g.n(); ++j)
            c.digits.push_back(g.hasArc(i, j) ? '1' : g.hasArc(j, i) ? '2' : '0');
    return c;
}

OrientedGraph graphFromCode(const CanonicalCode& code)
{
    GraphBuilder b(code.n);
    std::size_t k = 0;
    for (Vertex i = 0; i < code.n; ++i)
        for (Vertex j = i + 1; j < code.n; ++j, ++k) {
            if (code.digits.at(k) == '1')
                b.addArc(i, j);
            else if (code.digits.at(k) == '2')
                b.addArc(j, i);
        }
    return b.build();
}

namespace {

    using Row = std::uint32_t; // base-3 encoding, at most 9 digits

    // Exhaustive lexicographic minimisation by individualisation: the vertex
    // placed at position i is chosen from the cell starting at i, which fixes
    // row i once every later cell is sorted by its digit against that vertex.
    // Rows are compared as base-3 integers of equal length.
    class CanonSearch {
    public:
        explicit CanonSearch(const OrientedGraph& g) : n_(g.n())
        {
            for (Vertex a = 0; a < n_; ++a)
                for (Vertex b = 0; b < n_; ++b)
                    digit_[a][b] = g.hasArc(a, b) ? 1 : g.hasArc(b, a) ? 2 : 0;
            for (Vertex a = 0; a < n_; ++a) {
                twins_[a] = 0;
                for (Vertex b = 0; b < n_; ++b) {
                    if (a == b || digit_[a][b] != 0)
                        continue;
                    bool same = true;
                    for (Vertex x = 0; x < n_ && same; ++x)
                        if (x != a && x != b && digit_[a][x] != digit_[b][x])
                            same = false;
                    if (same)
                        twins_[a] |= 1U << b;
                }
            }
        }

        void minimise()
        {
            haveBest_ = false;
            State s = initial();
            search(0, s, n_);
        }

        // Requires minimise() first. True if some optimal labeling starts with v.
        bool matchesWithFirst(Vertex v)
        {
            matchMode_ = true;
            found_ = false;
            State s = initial();
            search(0, s, v);
            matchMode_ = false;
            return found_;
        }

        const std::array<Vertex, canonical_max_vertices>& bestOrder() const { return bestOrder_; }

        CanonicalCode bestCode() const
        {
            CanonicalCode c{n_, {}};
            for (Vertex i = 0; i + 1 < n_; ++i) {
                const Vertex len = n_ - 1 - i;
                std::string row(len, '0');
                Row value = best_[i];
                for (Vertex k = 0; k < len; ++k) {
                    row[len - 1 - k] = static_cast<char>('0' + value % 3);
                    value /= 3;
                }
                c.digits += row;
            }
            return c;
        }

    private:
        struct State {
            std::array<Vertex, canonical_max_vertices> order{};
            std::uint32_t cellStart = 0; // bit j: a cell starts at position j
            std::array<Row, canonical_max_vertices> rows{};
        };

        State initial() const
        {
            State s;
            for (Vertex i = 0; i < n_; ++i)
                s.order[i] = i;
            s.cellStart = 1U | (1U << n_);
            return s;
        }

        // Negative / zero / positive as rows[0..depth] compare to best_[0..depth].
        int comparePrefix(const State& s, Vertex depth) const
        {
            for (Vertex i = 0; i <= depth; ++i) {
                if (s.rows[i] != best_[i])
                    return s.rows[i] < best_[i] ? -1 : 1;
            }
            return 0;
        }

        void search(Vertex depth, const State& s, Vertex forced)
        {
            if (depth + 1 >= n_) {
                if (matchMode_) {
                    found_ = true;
                    return;
                }
                if (!haveBest_ || comparePrefix(s, n_ - 2) < 0) {
                    best_ = s.rows;
                    bestOrder_ = s.order;
                    haveBest_ = true;
                }
                return;
            }

            const Vertex cellEnd = static_cast<Vertex>(std::countr_zero(s.cellStart >> (depth + 1))) + depth + 1;
            std::uint32_t tried = 0;
            for (Vertex idx = depth; idx < cellEnd; ++idx) {
                const Vertex w = s.order[idx];
                if (forced < n_ && w != forced)
                    continue;
                if (twins_[w] & tried)
                    continue;
                tried |= 1U << w;

                State next = s;
                std::swap(next.order[depth], next.order[idx]);
                refine(depth, w, next);

                if (haveBest_) {
                    const int cmp = comparePrefix(next, depth);
                    if (cmp > 0 || (matchMode_ && cmp < 0))
                        continue;
                }
                search(depth + 1, next, n_);
                if (matchMode_ && found_)
                    return;
            }
        }

        // Splits every cell after `depth` by digit against w and records row `depth`.
        void refine(Vertex depth, Vertex w, State& s) const
        {
            std::uint32_t starts = (s.cellStart & ~((2U << depth) - 1)) | (1U << (depth + 1)) | (1U << n_);
            std::uint32_t newStarts = 1U << n_;
            for (std::uint32_t m = starts & ((1U << n_) - 1); m; m &= m - 1) {
                const Vertex a = static_cast<Vertex>(std::countr_zero(m));
                if (a <= depth)
                    continue;
                const Vertex b = static_cast<Vertex>(std::countr_zero(starts >> (a + 1))) + a + 1;
                std::array<Vertex, canonical_max_vertices> buckets[3];
                Vertex sizes[3] = {0, 0, 0};
                for (Vertex p = a; p < b; ++p) {
                    const Vertex x = s.order[p];
                    const auto d = digit_[w][x];
                    buckets[d][sizes[d]++] = x;
                }
                Vertex p = a;
                for (int d = 0; d < 3; ++d) {
                    if (sizes[d] == 0)
                        continue;
                    newStarts |= 1U << p;
                    for (Vertex k = 0; k < sizes[d]; ++k)
                        s.order[p++] = buckets[d][k];
                }
            }
            Row row = 0;
            for (Vertex p = depth + 1; p < n_; ++p)
                row = row * 3 + digit_[w][s.order[p]];
            s.rows[depth] = row;
            s.cellStart = (s.cellStart & ((2U << depth) - 1)) | newStarts;
        }

        Vertex n_;
        std::uint8_t digit_[canonical_max_vertices][canonical_max_vertices]{};
        std::array<std::uint32_t, canonical_max_vertices> twins_{};
        std::array<Row, canonical_max_vertices> best_{};
        std::array<Vertex, canonical_max_vertices> bestOrder_{};
        bool haveBest_ = false;
        bool matchMode_ = false;
        bool found_ = false;
    };

    void checkCanonSize(const OrientedGraph& g)
    {
        if (g.n() > canonical_max_vertices)
            throw Error(ErrorKind::TooLarge, "canonical form supports at most 10 vertices, got " + std::to_string(g.n()));
    }

    CanonicalForm formFrom(const OrientedGraph& g, const CanonSearch& search)
    {
        CanonicalForm f;
        f.order.assign(search.bestOrder().begin(), search.bestOrder().begin() + g.n());
        f.graph = g.relabeled(f.order);
        f.code = search.bestCode();
        return f;
    }

} // namespace

CanonicalForm canonicalForm(const OrientedGraph& g)
{
    checkCanonSize(g);
    if (g.n() <= 1) {
        CanonicalForm f;
        f.code = CanonicalCode{g.n(), ""};
        for (Vertex v = 0; v < g.n(); ++v)
            f.order.push_back(v);
        f.graph = g;
        return f;
    }
    CanonSearch search(g);
    search.minimise();
    return formFrom(g, search);
}

CanonicalCode canonicalCode(const OrientedGraph& g)
{
    return canonicalForm(g).code;
}

bool isIsomorphic(const OrientedGraph& g, const OrientedGraph& h)
{
    if (g.n() != h.n() || g.arcCount() != h.arcCount())
        return false;
    auto key = [](const OrientedGraph& x) {
        std::vector<std::pair<std::size_t, std::size_t>> seq;
        for (Vertex v = 0; v < x.n(); ++v)
            seq.emplace_back(x.inDegree(v), x.outDegree(v));
        std::sort(seq.begin(), seq.end());
        return seq;
    };
    if (key(g) != key(h))
        return false;
    return canonicalCode(g) == canonicalCode(h);
}

bool canBeCanonicallyFirst(const OrientedGraph& g, Vertex v)
{
    checkCanonSize(g);
    if (g.n() <= 1)
        return v < g.n();
    CanonSearch search(g);
    search.minimise();
    if (search.bestOrder()[0] == v)
        return true;
    return search.matchesWithFirst(v);
}

std::vector<OrientedGraph> canonicalChildren(const OrientedGraph& parent, ArcMode mode, const ChildFilter& accept)
{
    const Vertex k = parent.n();
    if (k + 1 > canonical_max_vertices)
        throw Error(ErrorKind::TooLarge, "augmentation beyond 10 vertices");

    std::array<std::size_t, canonical_max_vertices> deg{}, out{};
    for (Vertex j = 0; j < k; ++j) {
        deg[j] = parent.degree(j);
        out[j] = parent.outDegree(j);
    }
    const std::uint64_t all = k == 0 ? 0 : (bit(k) - 1);

    std::map<std::string, OrientedGraph> kids;
    auto consider = [&](std::uint64_t outBits, std::uint64_t inBits) {
        // The new vertex must be able to sit at position 0: row 0 is minimised by
        // the most non-neighbours, then the most out-neighbours.
        const std::uint64_t adj = outBits | inBits;
        const std::size_t xNon = k - static_cast<std::size_t>(std::popcount(adj));
        const std::size_t xOut = static_cast<std::size_t>(std::popcount(outBits));
        for (Vertex j = 0; j < k; ++j) {
            const std::size_t jNon = k - deg[j] - ((adj >> j) & 1U);
            const std::size_t jOut = out[j] + ((inBits >> j) & 1U);
            if (jNon > xNon || (jNon == xNon && jOut > xOut))
                return;
        }
        OrientedGraph child = parent.withVertex(outBits, inBits);
        if (accept && !accept(child))
            return;
        CanonSearch search(child);
        search.minimise();
        if (search.bestOrder()[0] != k && !search.matchesWithFirst(k))
            return;
        CanonicalForm f = formFrom(child, search);
        kids.emplace(f.code.digits, std::move(f.graph));
    };

    if (mode == ArcMode::Complete) {
        for (std::uint64_t t = 0; t <= all; ++t)
            consider(t, all & ~t);
    } else {
        // base-3 counter over old vertices: 0 none, 1 new->j, 2 j->new
        std::array<std::uint8_t, canonical_max_vertices> digits{};
        std::uint64_t outBits = 0, inBits = 0;
        while (true) {
            consider(outBits, inBits);
            Vertex j = 0;
            while (j < k && digits[j] == 2) {
                digits[j] = 0;
                inBits &= ~bit(j);
                ++j;
            }
            if (j == k)
                break;
            if (digits[j] == 0) {
                outBits |= bit(j);
            } else {
                outBits &= ~bit(j);
                inBits |= bit(j);
            }
            ++digits[j];
        }
    }

    std::vector<OrientedGraph> result;
    result.reserve(kids.size());
    for (auto& [code, g] : kids)
        result.push_back(std::move(g));
    return result;
}

std::vector<OrientedGraph> enumerateTournaments(Vertex k)
{
    if (k == 0)
        throw Error(ErrorKind::InvalidArgument, "tournament order must be at least 1");
    if (k > tournament_enumeration_max)
        throw Error(ErrorKind::TooLarge, "tournament enumeration supports k <= 7, got " + std::to_string(k));
    std::vector<OrientedGraph> level{OrientedGraph(1)};
    for (Vertex size = 1; size < k; ++size) {
        std::vector<OrientedGraph> next;
        for (const auto& parent : level) {
            auto kids = canonicalChildren(parent, ArcMode::Complete);
            next.insert(next.end(), std::make_move_iterator(kids.begin()), std::make_move_iterator(kids.end()));
        }
        std::sort(next.begin(), next.end(),
                  [](const OrientedGraph& a, const OrientedGraph& b) { return codeOf(a) < codeOf(b); });
        level = std::move(next);
    }
    return level;
}

namespace {

    void enumerateFrom(const OrientedGraph& g, Vertex n, const EnumerationOptions& options,
                       const std::function<void(const OrientedGraph&)>& visit)
    {
        if (g.n() == n) {
            if (!options.hereditary && options.predicate && !options.predicate(g))
                return;
            visit(g);
            return;
        }
        ChildFilter filter;
        if (options.hereditary && options.predicate)
            filter = options.predicate;
        for (const auto& child : canonicalChildren(g, ArcMode::Any, filter))
            enumerateFrom(child, n, options, visit);
    }

} // namespace

void forEachOrientedGraph(Vertex n, const EnumerationOptions& options,
                          const std::function<void(const OrientedGraph&)>& visit)
{
    if (n > oriented_enumeration_max)
        throw Error(ErrorKind::TooLarge, "oriented graph enumeration supports n <= 7, got " + std::to_string(n));
    OrientedGraph root(0);
    if (options.hereditary && options.predicate && !options.predicate(root))
        return;
    enumerateFrom(root, n, options, visit);
}

std::vector<OrientedGraph> enumerateOrientedGraphs(Vertex n, const EnumerationOptions& options)
{
    std::vector<OrientedGraph> result;
    forEachOrientedGraph(n, options, [&](const OrientedGraph& g) { result.push_back(g); });
    return result;
}

} // namespace orturan
