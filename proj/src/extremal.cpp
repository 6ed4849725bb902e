#include "orturan/extremal.hpp"

#include "orturan/containment.hpp"
#include "orturan/homomorphism.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <mutex>
#include <sstream>
#include <thread>

namespace orturan {

namespace {

    unsigned parseUnsigned(std::string_view text, std::string_view whole)
    {
        unsigned value = 0;
        auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
        if (ec != std::errc{} || ptr != text.data() + text.size())
            throw Error(ErrorKind::InvalidArgument, "bad number in pattern '" + std::string(whole) + "'");
        return value;
    }

    OrientedGraph pathLike(unsigned k, bool alternate)
    {
        GraphBuilder b(k);
        for (Vertex i = 0; i + 1 < k; ++i) {
            if (alternate && i % 2 == 1)
                b.addArc(i + 1, i);
            else
                b.addArc(i, i + 1);
        }
        return b.build();
    }

} // namespace

PatternSpec PatternSpec::parse(std::string_view name)
{
    static const std::pair<std::string_view, PatternSpec> fixed[] = {
        {"oc4", orientedC4()},       {"prop23", prop23()}, {"prop23m", prop23Mirror()},
        {"p3plusarc", p3PlusArc()}, {"thm32", thm32()},
    };
    for (const auto& [key, spec] : fixed)
        if (name == key)
            return spec;

    if (name.starts_with("star:")) {
        auto rest = name.substr(5);
        auto comma = rest.find(',');
        if (comma == std::string_view::npos)
            throw Error(ErrorKind::InvalidArgument, "star pattern must be star:p,q");
        return star(parseUnsigned(rest.substr(0, comma), name), parseUnsigned(rest.substr(comma + 1), name));
    }

    static const std::pair<std::string_view, PatternKind> sized[] = {
        {"dpath", PatternKind::DirectedPath},     {"dcycle", PatternKind::DirectedCycle},
        {"ttour", PatternKind::TransitiveTournament}, {"matching", PatternKind::Matching},
        {"adpath", PatternKind::AntidirectedPath}, {"c", PatternKind::DirectedCycle},
    };
    for (const auto& [prefix, kind] : sized) {
        if (!name.starts_with(prefix))
            continue;
        auto rest = name.substr(prefix.size());
        if (rest.starts_with(":"))
            rest.remove_prefix(1);
        if (rest.empty() || rest.front() < '0' || rest.front() > '9')
            continue;
        PatternSpec s;
        s.kind = kind;
        s.k = parseUnsigned(rest, name);
        return s;
    }
    throw Error(ErrorKind::InvalidArgument, "unknown pattern '" + std::string(name) + "'");
}

std::string PatternSpec::name() const
{
    switch (kind) {
    case PatternKind::DirectedPath: return "dpath" + std::to_string(k);
    case PatternKind::DirectedCycle: return "dcycle" + std::to_string(k);
    case PatternKind::TransitiveTournament: return "ttour" + std::to_string(k);
    case PatternKind::Star: return "star:" + std::to_string(p) + "," + std::to_string(q);
    case PatternKind::Matching: return "matching" + std::to_string(k);
    case PatternKind::AntidirectedPath: return "adpath" + std::to_string(k);
    case PatternKind::OrientedC4: return "oc4";
    case PatternKind::Prop23Graph: return "prop23";
    case PatternKind::Prop23Mirror: return "prop23m";
    case PatternKind::P3PlusArc: return "p3plusarc";
    case PatternKind::Thm32Graph: return "thm32";
    case PatternKind::Custom: return "custom";
    }
    return "custom";
}

OrientedGraph PatternSpec::graph() const
{
    switch (kind) {
    case PatternKind::DirectedPath: return pathLike(k, false);
    case PatternKind::AntidirectedPath: return pathLike(k, true);
    case PatternKind::DirectedCycle: {
        if (k < 3)
            throw Error(ErrorKind::InvalidArgument, "directed cycle needs at least 3 vertices");
        GraphBuilder b(k);
        for (Vertex i = 0; i < k; ++i)
            b.addArc(i, (i + 1) % k);
        return b.build();
    }
    case PatternKind::TransitiveTournament: {
        GraphBuilder b(k);
        for (Vertex i = 0; i < k; ++i)
            for (Vertex j = i + 1; j < k; ++j)
                b.addArc(i, j);
        return b.build();
    }
    case PatternKind::Star: {
        GraphBuilder b(p + q + 1);
        for (Vertex i = 1; i <= p; ++i)
            b.addArc(i, 0);
        for (Vertex i = p + 1; i <= p + q; ++i)
            b.addArc(0, i);
        return b.build();
    }
    case PatternKind::Matching: {
        GraphBuilder b(2 * k);
        for (Vertex i = 0; i < k; ++i)
            b.addArc(2 * i, 2 * i + 1);
        return b.build();
    }
    case PatternKind::OrientedC4: return OrientedGraph::fromArcs(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    case PatternKind::Prop23Graph: return OrientedGraph::fromArcs(4, {{0, 1}, {1, 2}, {3, 2}});
    case PatternKind::Prop23Mirror: return OrientedGraph::fromArcs(4, {{1, 0}, {1, 2}, {2, 3}});
    case PatternKind::P3PlusArc: return OrientedGraph::fromArcs(5, {{0, 1}, {2, 1}, {3, 4}});
    case PatternKind::Thm32Graph: return OrientedGraph::fromArcs(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
    case PatternKind::Custom:
        if (!custom)
            throw Error(ErrorKind::InvalidArgument, "custom pattern without a graph");
        return *custom;
    }
    throw Error(ErrorKind::InvalidArgument, "unknown pattern kind");
}

const char* to_string(Validity v)
{
    return v == Validity::AllN ? "all n" : "sufficiently large n";
}

std::size_t turanArcCount(std::size_t n, std::size_t r)
{
    if (r == 0)
        return 0;
    std::vector<std::size_t> parts(r, n / r);
    for (std::size_t i = 0; i < n % r; ++i)
        ++parts[i];
    std::size_t total = 0;
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = i + 1; j < r; ++j)
            total += parts[i] * parts[j];
    return total;
}

FormulaValue formulaValue(const PatternSpec& pattern, std::size_t n)
{
    auto noFormula = [&](const std::string& why) {
        return Error(ErrorKind::NoFormula, pattern.name() + ": " + why);
    };
    const std::size_t half = n * n / 4;
    switch (pattern.kind) {
    case PatternKind::DirectedPath:
        if (pattern.k < 2)
            throw noFormula("path needs an arc");
        return {turanArcCount(n, pattern.k - 1), Validity::AllN};
    case PatternKind::DirectedCycle:
        // the transitive tournament has no directed cycle
        return {n * (n == 0 ? 0 : n - 1) / 2, Validity::AllN};
    case PatternKind::TransitiveTournament: {
        if (pattern.k < 2)
            throw noFormula("tournament needs an arc");
        try {
            auto z = compressibility(pattern.graph());
            return {turanArcCount(n, *z.value - 1), Validity::AllN};
        } catch (const Error& e) {
            if (e.kind() == ErrorKind::TooLarge)
                throw noFormula("compressibility beyond the enumeration cap");
            throw;
        }
    }
    case PatternKind::Star: {
        // S_{p,q} reversed is S_{q,p}
        const unsigned a = std::min(pattern.p, pattern.q);
        const unsigned b = std::max(pattern.p, pattern.q);
        if (b == 0)
            throw noFormula("star without arcs");
        if (a == 0)
            return {(b - 1) * n, Validity::AllN};
        const std::size_t s = n + b - a;
        return {(a - 1) * n + s * s / 4, Validity::SufficientlyLargeN};
    }
    case PatternKind::Matching: {
        if (pattern.k == 0)
            throw noFormula("empty matching");
        const long long k = pattern.k;
        const long long value = (k - 1) * (static_cast<long long>(n) - k + 1) + (k - 1) * (k - 2) / 2;
        if (value < 0)
            throw noFormula("formula negative at this n");
        return {static_cast<std::size_t>(value), Validity::AllN};
    }
    case PatternKind::AntidirectedPath:
        if (pattern.k != 4 || n < 2)
            throw noFormula("only the 4-vertex antidirected path for n > 1");
        return {2 * n - 3, Validity::AllN};
    case PatternKind::OrientedC4: return {turanArcCount(n, 3), Validity::AllN};
    case PatternKind::Prop23Graph:
    case PatternKind::Prop23Mirror: return {half, Validity::SufficientlyLargeN};
    case PatternKind::P3PlusArc:
        if (n < 2)
            throw noFormula("defined for n > 1");
        return {2 * n - 3, Validity::SufficientlyLargeN};
    case PatternKind::Thm32Graph: return {half + (n + 1) / 2, Validity::SufficientlyLargeN};
    case PatternKind::Custom: throw noFormula("custom patterns have no closed form");
    }
    throw noFormula("unknown pattern");
}

// ---------------------------------------------------------------------------
// Exact oracle

namespace {

    struct BudgetHit {};

    struct Best {
        bool have = false;
        std::size_t value = 0;
        std::string code;
        OrientedGraph graph;

        void offer(const OrientedGraph& g)
        {
            // g is in canonical form, so its own code is canonical
            auto code = codeOf(g).digits;
            if (!have || g.arcCount() > value || (g.arcCount() == value && code < this->code)) {
                have = true;
                value = g.arcCount();
                this->code = std::move(code);
                graph = g;
            }
        }

        void merge(const Best& other)
        {
            if (other.have)
                offer(other.graph);
        }
    };

    class Oracle {
    public:
        Oracle(Vertex n, OrientedGraph pattern, const OracleOptions& options)
            : n_(n), pattern_(std::move(pattern)), options_(options), start_(std::chrono::steady_clock::now())
        {
        }

        Best run()
        {
            const OrientedGraph root(0);
            if (options_.jobs <= 1) {
                Best best;
                try {
                    dfs(root, best);
                } catch (const BudgetHit&) {
                    budgetHit_ = true;
                }
                merged_.merge(best);
                return merged_;
            }

            // Collect a frontier sequentially, then share its subtrees.
            std::vector<OrientedGraph> frontier{root};
            while (!frontier.empty() && frontier.front().n() < n_ && frontier.size() < options_.jobs * 8u) {
                std::vector<OrientedGraph> next;
                for (const auto& g : frontier) {
                    auto kids = children(g);
                    next.insert(next.end(), kids.begin(), kids.end());
                }
                frontier = std::move(next);
            }
            std::atomic<std::size_t> cursor{0};
            std::mutex mutex;
            auto worker = [&] {
                Best local;
                try {
                    for (;;) {
                        const auto i = cursor.fetch_add(1);
                        if (i >= frontier.size() || stop_.load())
                            break;
                        dfs(frontier[i], local);
                    }
                } catch (const BudgetHit&) {
                    stop_ = true;
                }
                std::lock_guard lock(mutex);
                merged_.merge(local);
            };
            std::vector<std::thread> pool;
            for (unsigned t = 0; t < options_.jobs; ++t)
                pool.emplace_back(worker);
            for (auto& t : pool)
                t.join();
            budgetHit_ = stop_.load();
            return merged_;
        }

        bool budgetHit() const { return budgetHit_; }
        std::uint64_t nodes() const { return nodes_.load(); }

    private:
        std::vector<OrientedGraph> children(const OrientedGraph& g) const
        {
            const Vertex x = g.n();
            auto kids = canonicalChildren(g, ArcMode::Any, [&](const OrientedGraph& child) {
                return !containsCopyUsing(child, pattern_, x).has_value();
            });
            std::stable_sort(kids.begin(), kids.end(), [](const OrientedGraph& a, const OrientedGraph& b) {
                return a.arcCount() > b.arcCount();
            });
            return kids;
        }

        void tick()
        {
            const auto count = nodes_.fetch_add(1) + 1;
            if (stop_.load())
                throw BudgetHit{};
            if (options_.nodeBudget && count > *options_.nodeBudget) {
                stop_ = true;
                throw BudgetHit{};
            }
            if (options_.secondsBudget && (count & 255) == 0) {
                const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start_;
                if (elapsed.count() > *options_.secondsBudget) {
                    stop_ = true;
                    throw BudgetHit{};
                }
            }
        }

        void raiseBound(std::size_t value)
        {
            std::size_t cur = bound_.load();
            while (value > cur && !bound_.compare_exchange_weak(cur, value)) {
            }
        }

        void dfs(const OrientedGraph& g, Best& best)
        {
            tick();
            if (g.n() == n_) {
                best.offer(g);
                raiseBound(g.arcCount());
                return;
            }
            // Each later vertex j can add at most j arcs. Ties are kept so the
            // smallest-code witness survives.
            std::size_t reachable = g.arcCount();
            for (Vertex j = g.n(); j < n_; ++j)
                reachable += j;
            if (reachable < bound_.load())
                return;
            for (const auto& child : children(g))
                dfs(child, best);
        }

        Vertex n_;
        OrientedGraph pattern_;
        OracleOptions options_;
        std::chrono::steady_clock::time_point start_;
        std::atomic<std::size_t> bound_{0};
        std::atomic<std::uint64_t> nodes_{0};
        std::atomic<bool> stop_{false};
        bool budgetHit_ = false;
        Best merged_;
    };

} // namespace

ExtremalRecord oracleExo(Vertex n, const PatternSpec& pattern, const OracleOptions& options)
{
    if (n > oracle_exhaustive_max && !(options.lowerBoundMode && n <= canonical_max_vertices))
        throw Error(ErrorKind::TooLarge, "exhaustive oracle supports n <= 7 (10 in lower-bound mode), got " +
                                             std::to_string(n));
    const OrientedGraph f = pattern.graph();
    if (f.arcCount() == 0 && f.n() <= n)
        throw Error(ErrorKind::EmptyPattern, "every graph on " + std::to_string(n) + " vertices contains " +
                                                 pattern.name());

    Oracle oracle(n, f, options);
    Best best = oracle.run();

    ExtremalRecord rec;
    rec.n = n;
    rec.pattern = pattern;
    rec.nodes = oracle.nodes();
    if (best.have) {
        rec.value = best.value;
        rec.witness = best.graph;
        rec.witnessCode = CanonicalCode{n, best.code};
    } else {
        rec.witness = OrientedGraph(n);
        rec.witnessCode = codeOf(rec.witness);
    }
    if (containsCopy(rec.witness, f).has_value())
        throw Error(ErrorKind::InvariantViolation, "oracle witness contains the pattern");
    try {
        auto fv = formulaValue(pattern, n);
        rec.formulaValue = fv.value;
        rec.matchesFormula = fv.value == rec.value;
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::NoFormula)
            throw;
    }
    if (oracle.budgetHit()) {
        rec.exact = false;
        throw BudgetExceeded(rec);
    }
    return rec;
}

nlohmann::json toJson(const ExtremalRecord& r)
{
    nlohmann::json j;
    j["n"] = r.n;
    j["pattern"] = r.pattern.name();
    j["value"] = r.value;
    j["exact"] = r.exact;
    j["witness"] = r.witnessCode.str();
    j["formula"] = r.formulaValue ? nlohmann::json(*r.formulaValue) : nlohmann::json(nullptr);
    j["matchesFormula"] = r.matchesFormula ? nlohmann::json(*r.matchesFormula) : nlohmann::json(nullptr);
    return j;
}

// ---------------------------------------------------------------------------
// Constructions

const char* to_string(Construction c)
{
    switch (c) {
    case Construction::TuranOrientation: return "turan";
    case Construction::CyclePower: return "cyclepower";
    case Construction::StarPartition: return "star";
    case Construction::Thm32: return "thm32";
    case Construction::Prop26: return "prop26";
    case Construction::Prop27: return "prop27";
    }
    return "unknown";
}

Construction parseConstruction(std::string_view name)
{
    for (auto c : {Construction::TuranOrientation, Construction::CyclePower, Construction::StarPartition,
                   Construction::Thm32, Construction::Prop26, Construction::Prop27})
        if (name == to_string(c))
            return c;
    throw Error(ErrorKind::BadParams, "unknown construction '" + std::string(name) + "'");
}

namespace {

    // Arcs i -> i+1, ..., i+s (mod m) over `vertices`; oriented iff 2s < m.
    void addCyclePower(GraphBuilder& b, const std::vector<Vertex>& vertices, unsigned s)
    {
        const auto m = vertices.size();
        for (std::size_t i = 0; i < m; ++i)
            for (unsigned step = 1; step <= s; ++step)
                b.addArc(vertices[i], vertices[(i + step) % m]);
    }

    bool cyclePowerFits(std::size_t m, unsigned s)
    {
        return s == 0 || 2 * static_cast<std::size_t>(s) < m;
    }

    std::vector<std::size_t> partSizes(std::size_t n, std::size_t r)
    {
        std::vector<std::size_t> parts(r, n / r);
        for (std::size_t i = 0; i < n % r; ++i)
            ++parts[i];
        return parts;
    }

    // Valid |D| maximising |D|(n - |D| + q - p), smallest such |D| on ties.
    std::optional<unsigned> bestDSize(Vertex n, unsigned p, unsigned q)
    {
        std::optional<unsigned> best;
        long long bestValue = -1;
        for (unsigned d = 0; d <= n; ++d) {
            if (!cyclePowerFits(n - d, p - 1) || !cyclePowerFits(d, q - 1))
                continue;
            const long long v = static_cast<long long>(d) * (static_cast<long long>(n) - d + q - p);
            if (v > bestValue) {
                bestValue = v;
                best = d;
            }
        }
        return best;
    }

    void checkStarParams(const ConstructionParams& params)
    {
        if (params.p < 1 || params.p > params.q)
            throw Error(ErrorKind::BadParams, "star construction needs 1 <= p <= q");
    }

} // namespace

std::size_t constructionTarget(Construction c, Vertex n, const ConstructionParams& params)
{
    switch (c) {
    case Construction::TuranOrientation: return turanArcCount(n, params.r);
    case Construction::CyclePower: return params.q == 0 ? 0 : static_cast<std::size_t>(params.q - 1) * n;
    case Construction::StarPartition: {
        checkStarParams(params);
        const std::size_t s = n + params.q - params.p;
        return static_cast<std::size_t>(params.p - 1) * n + s * s / 4;
    }
    case Construction::Thm32: return static_cast<std::size_t>(n) * n / 4 + (n + 1) / 2;
    case Construction::Prop26:
    case Construction::Prop27: return n < 2 ? 0 : 2 * static_cast<std::size_t>(n) - 3;
    }
    return 0;
}

PatternSpec pairedPattern(Construction c, const ConstructionParams& params)
{
    switch (c) {
    case Construction::TuranOrientation:
        if (params.partTournament)
            throw Error(ErrorKind::BadParams, "custom part tournaments have no fixed paired pattern");
        return PatternSpec::directedPath(params.r + 1);
    case Construction::CyclePower: return PatternSpec::star(0, params.q);
    case Construction::StarPartition: return PatternSpec::star(params.p, params.q);
    case Construction::Thm32: return PatternSpec::thm32();
    case Construction::Prop26: return PatternSpec::antidirectedPath(4);
    case Construction::Prop27: return PatternSpec::p3PlusArc();
    }
    throw Error(ErrorKind::BadParams, "unknown construction");
}

Vertex constructionMinN(Construction c, const ConstructionParams& params)
{
    switch (c) {
    case Construction::TuranOrientation: return 1;
    case Construction::CyclePower: return params.q <= 1 ? 1 : 2 * params.q - 1;
    case Construction::StarPartition: {
        checkStarParams(params);
        for (Vertex n = 1; n <= max_vertices; ++n) {
            auto d = bestDSize(n, params.p, params.q);
            if (!d)
                continue;
            const auto dd = static_cast<std::size_t>(*d);
            const auto arcs = static_cast<std::size_t>(params.p - 1) * (n - dd) +
                              static_cast<std::size_t>(params.q - 1) * dd + (n - dd) * dd;
            if (arcs == constructionTarget(c, n, params))
                return n;
        }
        return max_vertices + 1;
    }
    case Construction::Thm32: return 5;
    case Construction::Prop26:
    case Construction::Prop27: return 2;
    }
    return 1;
}

OrientedGraph buildConstruction(Construction c, Vertex n, const ConstructionParams& params)
{
    if (n > max_vertices)
        throw Error(ErrorKind::BadParams, "constructions are limited to 64 vertices");
    GraphBuilder b(n);
    switch (c) {
    case Construction::TuranOrientation: {
        if (params.r == 0)
            throw Error(ErrorKind::BadParams, "need at least one part");
        OrientedGraph parts = params.partTournament.value_or(PatternSpec::transitiveTournament(params.r).graph());
        if (parts.n() != params.r || !parts.isTournament())
            throw Error(ErrorKind::BadParams, "part orientation must be a tournament on r vertices");
        const auto sizes = partSizes(n, params.r);
        std::vector<Vertex> partOf;
        for (Vertex i = 0; i < params.r; ++i)
            partOf.insert(partOf.end(), sizes[i], i);
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = 0; v < n; ++v)
                if (parts.hasArc(partOf[u], partOf[v]))
                    b.addArc(u, v);
        break;
    }
    case Construction::CyclePower: {
        if (params.q == 0)
            throw Error(ErrorKind::BadParams, "cycle power needs q >= 1");
        if (!cyclePowerFits(n, params.q - 1))
            throw Error(ErrorKind::BadParams, "cycle power with q=" + std::to_string(params.q) + " needs n >= " +
                                                  std::to_string(2 * params.q - 1));
        std::vector<Vertex> all(n);
        for (Vertex v = 0; v < n; ++v)
            all[v] = v;
        addCyclePower(b, all, params.q - 1);
        break;
    }
    case Construction::StarPartition: {
        checkStarParams(params);
        std::optional<unsigned> d = params.dSize ? params.dSize : bestDSize(n, params.p, params.q);
        if (!d || *d > n || !cyclePowerFits(n - *d, params.p - 1) || !cyclePowerFits(*d, params.q - 1))
            throw Error(ErrorKind::BadParams, "no valid C/D split for n=" + std::to_string(n));
        std::vector<Vertex> cPart, dPart;
        for (Vertex v = 0; v < n; ++v)
            (v < n - *d ? cPart : dPart).push_back(v);
        addCyclePower(b, cPart, params.p - 1);
        addCyclePower(b, dPart, params.q - 1);
        for (Vertex u : cPart)
            for (Vertex w : dPart)
                b.addArc(u, w);
        break;
    }
    case Construction::Thm32: {
        if (n < 5)
            throw Error(ErrorKind::BadParams, "the directed cycle on the larger part needs n >= 5");
        const Vertex small = n / 2;
        std::vector<Vertex> large;
        for (Vertex v = small; v < n; ++v)
            large.push_back(v);
        for (Vertex u = 0; u < small; ++u)
            for (Vertex w : large)
                b.addArc(u, w);
        addCyclePower(b, large, 1);
        break;
    }
    case Construction::Prop26:
    case Construction::Prop27: {
        if (n < 2)
            throw Error(ErrorKind::BadParams, "needs n >= 2");
        const Vertex v = 0, u = 1;
        b.addArc(v, u);
        for (Vertex w = 2; w < n; ++w) {
            b.addArc(u, w);
            if (c == Construction::Prop26)
                b.addArc(w, v);
            else
                b.addArc(v, w);
        }
        break;
    }
    }
    return b.build();
}

// ---------------------------------------------------------------------------
// Formula verification

const char* to_string(FormulaStatus s)
{
    switch (s) {
    case FormulaStatus::Match: return "MATCH";
    case FormulaStatus::OracleHigher: return "ORACLE_HIGHER";
    case FormulaStatus::OracleLower: return "ORACLE_LOWER";
    }
    return "?";
}

namespace {

    std::optional<std::pair<Construction, ConstructionParams>> constructionFor(const PatternSpec& p)
    {
        ConstructionParams params;
        switch (p.kind) {
        case PatternKind::DirectedPath:
            if (p.k < 2)
                return std::nullopt;
            params.r = p.k - 1;
            return std::make_pair(Construction::TuranOrientation, params);
        case PatternKind::Prop23Graph:
        case PatternKind::Prop23Mirror:
            params.r = 2;
            return std::make_pair(Construction::TuranOrientation, params);
        case PatternKind::OrientedC4:
            params.r = 3;
            return std::make_pair(Construction::TuranOrientation, params);
        case PatternKind::Star:
            params.p = p.p;
            params.q = p.q;
            if (p.p == 0 && p.q > 0)
                return std::make_pair(Construction::CyclePower, params);
            if (p.p >= 1 && p.p <= p.q)
                return std::make_pair(Construction::StarPartition, params);
            return std::nullopt;
        case PatternKind::Thm32Graph: return std::make_pair(Construction::Thm32, params);
        case PatternKind::AntidirectedPath:
            if (p.k != 4)
                return std::nullopt;
            return std::make_pair(Construction::Prop26, params);
        case PatternKind::P3PlusArc: return std::make_pair(Construction::Prop27, params);
        default: return std::nullopt;
        }
    }

} // namespace

bool VerificationReport::ok() const
{
    for (const auto& r : rows) {
        if (r.status == FormulaStatus::OracleLower)
            return false;
        if (r.validity == Validity::AllN && r.status != FormulaStatus::Match)
            return false;
        if (r.constructionFree && !*r.constructionFree)
            return false;
        if (r.constructionArcs && *r.constructionArcs > r.oracle)
            return false;
    }
    return true;
}

std::string VerificationReport::table() const
{
    std::ostringstream os;
    os << "pattern " << pattern.name() << "\n";
    os << "n  oracle  formula  validity              status         witness\n";
    for (const auto& r : rows) {
        std::string validity = to_string(r.validity);
        validity.resize(22, ' ');
        std::string status = to_string(r.status);
        status.resize(15, ' ');
        std::string n = std::to_string(r.n);
        n.resize(3, ' ');
        std::string oracle = std::to_string(r.oracle);
        oracle.resize(8, ' ');
        std::string formula = std::to_string(r.formula);
        formula.resize(9, ' ');
        os << n << oracle << formula << validity << status << r.witnessCode.str() << "\n";
    }
    return os.str();
}

nlohmann::json VerificationReport::json() const
{
    nlohmann::json j;
    j["pattern"] = pattern.name();
    j["ok"] = ok();
    j["rows"] = nlohmann::json::array();
    for (const auto& r : rows) {
        nlohmann::json row;
        row["n"] = r.n;
        row["oracle"] = r.oracle;
        row["formula"] = r.formula;
        row["validityNote"] = to_string(r.validity);
        row["status"] = to_string(r.status);
        row["witness"] = r.witnessCode.str();
        row["constructionArcs"] = r.constructionArcs ? nlohmann::json(*r.constructionArcs) : nlohmann::json(nullptr);
        row["constructionFree"] = r.constructionFree ? nlohmann::json(*r.constructionFree) : nlohmann::json(nullptr);
        j["rows"].push_back(row);
    }
    return j;
}

VerificationReport verifyAgainstFormula(const PatternSpec& pattern, Vertex nMin, Vertex nMax,
                                        const OracleOptions& options)
{
    VerificationReport report;
    report.pattern = pattern;
    const auto f = pattern.graph();
    const auto construction = constructionFor(pattern);
    for (Vertex n = nMin; n <= nMax; ++n) {
        const auto fv = formulaValue(pattern, n);
        const auto rec = oracleExo(n, pattern, options);
        VerificationRow row;
        row.n = n;
        row.oracle = rec.value;
        row.formula = fv.value;
        row.validity = fv.validity;
        row.witnessCode = rec.witnessCode;
        row.status = rec.value == fv.value  ? FormulaStatus::Match
                     : rec.value > fv.value ? FormulaStatus::OracleHigher
                                            : FormulaStatus::OracleLower;
        if (construction && n >= constructionMinN(construction->first, construction->second)) {
            const auto g = buildConstruction(construction->first, n, construction->second);
            row.constructionArcs = g.arcCount();
            row.constructionFree = isFree(g, f);
        }
        report.rows.push_back(row);
    }
    return report;
}

} // namespace orturan
