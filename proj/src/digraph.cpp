#include "orturan/digraph.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <sstream>

namespace orturan {

const char* to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::LoopArc: return "LoopArc";
    case ErrorKind::AntiparallelViolation: return "AntiparallelViolation";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InvariantViolation: return "InvariantViolation";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::EmptyPattern: return "EmptyPattern";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::BadParams: return "BadParams";
    case ErrorKind::NoFormula: return "NoFormula";
    case ErrorKind::AttemptsExhausted: return "AttemptsExhausted";
    case ErrorKind::TooSmall: return "TooSmall";
    case ErrorKind::CertificateInsufficient: return "CertificateInsufficient";
    case ErrorKind::RetriesExhausted: return "RetriesExhausted";
    case ErrorKind::InfeasibleConfig: return "InfeasibleConfig";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

std::size_t DegreeProfile::maxDegree() const
{
    std::size_t best = 0;
    for (const auto& d : vertices)
        best = std::max(best, d.total);
    return best;
}

std::size_t DegreeProfile::minDegree() const
{
    if (vertices.empty())
        return 0;
    std::size_t best = vertices.front().total;
    for (const auto& d : vertices)
        best = std::min(best, d.total);
    return best;
}

double DegreeProfile::averageDegree() const
{
    if (vertices.empty())
        return 0.0;
    std::size_t sum = 0;
    for (const auto& d : vertices)
        sum += d.total;
    return static_cast<double>(sum) / static_cast<double>(vertices.size());
}

std::size_t DegreeProfile::sumIn() const
{
    std::size_t s = 0;
    for (const auto& d : vertices)
        s += d.in;
    return s;
}

std::size_t DegreeProfile::sumOut() const
{
    std::size_t s = 0;
    for (const auto& d : vertices)
        s += d.out;
    return s;
}

OrientedGraph::OrientedGraph(Vertex n) : n_(n), out_(n, 0), in_(n, 0)
{
    if (n > max_vertices)
        throw Error(ErrorKind::InvariantViolation,
                    "vertex count " + std::to_string(n) + " exceeds " + std::to_string(max_vertices));
}

OrientedGraph OrientedGraph::fromArcs(Vertex n, const std::vector<Arc>& arcs)
{
    GraphBuilder b(n);
    for (auto [u, v] : arcs)
        b.addArc(u, v);
    return b.build();
}

void OrientedGraph::checkVertex(Vertex v) const
{
    if (v >= n_)
        throw Error(ErrorKind::InvalidArgument,
                    "vertex " + std::to_string(v) + " out of range for n=" + std::to_string(n_));
}

std::size_t OrientedGraph::outDegree(Vertex v) const
{
    return static_cast<std::size_t>(std::popcount(out_[v]));
}

std::size_t OrientedGraph::inDegree(Vertex v) const
{
    return static_cast<std::size_t>(std::popcount(in_[v]));
}

std::vector<Arc> OrientedGraph::arcs() const
{
    std::vector<Arc> result;
    result.reserve(arcs_);
    for (Vertex u = 0; u < n_; ++u)
        for (std::uint64_t m = out_[u]; m; m &= m - 1)
            result.emplace_back(u, static_cast<Vertex>(std::countr_zero(m)));
    return result;
}

OrientedGraph OrientedGraph::withArc(Vertex u, Vertex v) const
{
    return GraphBuilder(*this).addArc(u, v).build();
}

OrientedGraph OrientedGraph::withoutArc(Vertex u, Vertex v) const
{
    return GraphBuilder(*this).removeArc(u, v).build();
}

OrientedGraph OrientedGraph::withVertex(std::uint64_t outBits, std::uint64_t inBits) const
{
    if (n_ >= max_vertices)
        throw Error(ErrorKind::InvariantViolation, "cannot grow beyond 64 vertices");
    if (outBits & inBits)
        throw Error(ErrorKind::AntiparallelViolation, "new vertex has antiparallel arcs");
    const std::uint64_t valid = n_ == 64 ? ~std::uint64_t{0} : bit(n_) - 1;
    if ((outBits | inBits) & ~valid)
        throw Error(ErrorKind::InvalidArgument, "arc to nonexistent vertex");

    OrientedGraph g = *this;
    const Vertex x = n_;
    g.n_ = n_ + 1;
    g.out_.push_back(outBits);
    g.in_.push_back(inBits);
    for (std::uint64_t m = outBits; m; m &= m - 1)
        g.in_[std::countr_zero(m)] |= bit(x);
    for (std::uint64_t m = inBits; m; m &= m - 1)
        g.out_[std::countr_zero(m)] |= bit(x);
    g.arcs_ += static_cast<std::size_t>(std::popcount(outBits) + std::popcount(inBits));
    return g;
}

OrientedGraph OrientedGraph::reversed() const
{
    OrientedGraph g = *this;
    std::swap(g.out_, g.in_);
    return g;
}

OrientedGraph OrientedGraph::relabeled(const std::vector<Vertex>& order) const
{
    if (order.size() != n_)
        throw Error(ErrorKind::InvalidArgument, "relabeling must be a permutation of all vertices");
    std::vector<Vertex> position(n_, max_vertices);
    for (Vertex i = 0; i < n_; ++i) {
        checkVertex(order[i]);
        if (position[order[i]] != max_vertices)
            throw Error(ErrorKind::InvalidArgument, "relabeling is not a permutation");
        position[order[i]] = i;
    }
    OrientedGraph g(n_);
    for (Vertex u = 0; u < n_; ++u)
        for (std::uint64_t m = out_[u]; m; m &= m - 1) {
            const Vertex a = position[u];
            const Vertex b = position[std::countr_zero(m)];
            g.out_[a] |= bit(b);
            g.in_[b] |= bit(a);
        }
    g.arcs_ = arcs_;
    return g;
}

OrientedGraph OrientedGraph::induced(const std::vector<Vertex>& vertices) const
{
    OrientedGraph g(static_cast<Vertex>(vertices.size()));
    for (Vertex i = 0; i < vertices.size(); ++i) {
        checkVertex(vertices[i]);
        for (Vertex j = 0; j < vertices.size(); ++j)
            if (hasArc(vertices[i], vertices[j])) {
                g.out_[i] |= bit(j);
                g.in_[j] |= bit(i);
                ++g.arcs_;
            }
    }
    return g;
}

bool OrientedGraph::isTournament() const
{
    return arcs_ == static_cast<std::size_t>(n_) * (n_ == 0 ? 0 : n_ - 1) / 2;
}

GraphBuilder& GraphBuilder::addArc(Vertex u, Vertex v)
{
    g_.checkVertex(u);
    g_.checkVertex(v);
    if (u == v)
        throw Error(ErrorKind::LoopArc, "loop at vertex " + std::to_string(u));
    if (g_.hasArc(v, u))
        throw Error(ErrorKind::AntiparallelViolation,
                    "arc " + std::to_string(v) + "->" + std::to_string(u) + " already present");
    if (!g_.hasArc(u, v)) {
        g_.out_[u] |= bit(v);
        g_.in_[v] |= bit(u);
        ++g_.arcs_;
    }
    return *this;
}

GraphBuilder& GraphBuilder::removeArc(Vertex u, Vertex v)
{
    g_.checkVertex(u);
    g_.checkVertex(v);
    if (g_.hasArc(u, v)) {
        g_.out_[u] &= ~bit(v);
        g_.in_[v] &= ~bit(u);
        --g_.arcs_;
    }
    return *this;
}

GraphBuilder& GraphBuilder::orient(Vertex u, Vertex v)
{
    removeArc(v, u);
    return addArc(u, v);
}

OrientedGraph addArc(const OrientedGraph& g, Vertex u, Vertex v)
{
    return g.withArc(u, v);
}

DegreeProfile degreeProfile(const OrientedGraph& g)
{
    DegreeProfile p;
    p.vertices.resize(g.n());
    for (Vertex v = 0; v < g.n(); ++v) {
        auto& d = p.vertices[v];
        d.in = g.inDegree(v);
        d.out = g.outDegree(v);
        d.total = d.in + d.out;
    }
    return p;
}

std::string encode(const OrientedGraph& g)
{
    std::string s = std::to_string(g.n()) + "\n";
    for (auto [u, v] : g.arcs())
        s += std::to_string(u) + " " + std::to_string(v) + "\n";
    return s;
}

namespace {

    struct Token {
        std::string_view text;
        std::size_t column; // 1-based
    };

    std::vector<Token> tokenize(std::string_view line)
    {
        std::vector<Token> tokens;
        std::size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
                ++i;
            if (i >= line.size())
                break;
            std::size_t j = i;
            while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r')
                ++j;
            tokens.push_back({line.substr(i, j - i), i + 1});
            i = j;
        }
        return tokens;
    }

    unsigned long parseNumber(const Token& t, std::size_t lineNo)
    {
        unsigned long value = 0;
        auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
        if (ec != std::errc{} || ptr != t.text.data() + t.text.size())
            throw ParseError(lineNo, t.column, "expected a non-negative integer, got '" + std::string(t.text) + "'");
        return value;
    }

    // Calls onHeader(tokens, lineNo) for the first content line, then onPair for
    // every following content line.
    template <typename Header, typename Pair>
    void scanLines(std::string_view text, Header&& onHeader, Pair&& onPair)
    {
        std::size_t lineNo = 0;
        bool seenHeader = false;
        std::size_t pos = 0;
        while (pos <= text.size()) {
            std::size_t end = text.find('\n', pos);
            if (end == std::string_view::npos)
                end = text.size();
            std::string_view line = text.substr(pos, end - pos);
            ++lineNo;
            pos = end + 1;

            auto tokens = tokenize(line);
            if (tokens.empty() || tokens.front().text.front() == '#')
                continue;
            if (!seenHeader) {
                onHeader(tokens, lineNo);
                seenHeader = true;
            } else {
                onPair(tokens, lineNo);
            }
            if (end == text.size())
                break;
        }
        if (!seenHeader)
            throw ParseError(lineNo == 0 ? 1 : lineNo, 1, "missing vertex count");
    }

    std::pair<Vertex, Vertex> parsePair(const std::vector<Token>& tokens, std::size_t lineNo, Vertex n)
    {
        if (tokens.size() != 2)
            throw ParseError(lineNo, tokens.size() > 2 ? tokens[2].column : tokens.back().column + tokens.back().text.size(),
                             "expected exactly two vertex ids");
        auto u = parseNumber(tokens[0], lineNo);
        auto v = parseNumber(tokens[1], lineNo);
        if (u >= n)
            throw ParseError(lineNo, tokens[0].column, "vertex " + std::to_string(u) + " out of range");
        if (v >= n)
            throw ParseError(lineNo, tokens[1].column, "vertex " + std::to_string(v) + " out of range");
        return {static_cast<Vertex>(u), static_cast<Vertex>(v)};
    }

    Vertex parseCount(const std::vector<Token>& tokens, std::size_t lineNo)
    {
        if (tokens.size() != 1)
            throw ParseError(lineNo, tokens[1].column, "expected a single vertex count");
        auto n = parseNumber(tokens[0], lineNo);
        if (n > max_vertices)
            throw Error(ErrorKind::InvariantViolation, "vertex count " + std::to_string(n) + " exceeds 64");
        return static_cast<Vertex>(n);
    }

} // namespace

OrientedGraph decode(std::string_view text)
{
    GraphBuilder builder(0);
    Vertex n = 0;
    scanLines(
        text,
        [&](const std::vector<Token>& tokens, std::size_t lineNo) {
            n = parseCount(tokens, lineNo);
            builder = GraphBuilder(n);
        },
        [&](const std::vector<Token>& tokens, std::size_t lineNo) {
            auto [u, v] = parsePair(tokens, lineNo, n);
            if (u == v)
                throw Error(ErrorKind::InvariantViolation,
                            "line " + std::to_string(lineNo) + ": loop at vertex " + std::to_string(u));
            if (builder.peek().hasArc(v, u))
                throw Error(ErrorKind::InvariantViolation,
                            "line " + std::to_string(lineNo) + ": antiparallel pair " + std::to_string(u) + "," +
                                std::to_string(v));
            builder.addArc(u, v);
        });
    return builder.build();
}

UndirectedGraph decodeUndirected(std::string_view text)
{
    UndirectedGraph g;
    bool sawKeyword = false;
    bool sawCount = false;
    scanLines(
        text,
        [&](const std::vector<Token>& tokens, std::size_t lineNo) {
            if (tokens.size() != 1 || tokens[0].text != "undirected")
                throw ParseError(lineNo, tokens[0].column, "expected 'undirected' header");
            sawKeyword = true;
        },
        [&](const std::vector<Token>& tokens, std::size_t lineNo) {
            if (!sawCount) {
                g.n = parseCount(tokens, lineNo);
                sawCount = true;
                return;
            }
            auto [u, v] = parsePair(tokens, lineNo, g.n);
            if (u == v)
                throw Error(ErrorKind::InvariantViolation,
                            "line " + std::to_string(lineNo) + ": loop at vertex " + std::to_string(u));
            g.edges.emplace_back(std::min(u, v), std::max(u, v));
        });
    if (!sawKeyword || !sawCount)
        throw ParseError(1, 1, "missing vertex count after 'undirected'");
    std::sort(g.edges.begin(), g.edges.end());
    g.edges.erase(std::unique(g.edges.begin(), g.edges.end()), g.edges.end());
    return g;
}

std::string encodeUndirected(const UndirectedGraph& g)
{
    std::string s = "undirected\n" + std::to_string(g.n) + "\n";
    for (auto [u, v] : g.edges)
        s += std::to_string(u) + " " + std::to_string(v) + "\n";
    return s;
}

UndirectedGraph underlying(const OrientedGraph& g)
{
    UndirectedGraph u;
    u.n = g.n();
    for (auto [a, b] : g.arcs())
        u.edges.emplace_back(std::min(a, b), std::max(a, b));
    std::sort(u.edges.begin(), u.edges.end());
    return u;
}

} // namespace orturan
