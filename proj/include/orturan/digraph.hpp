#pragma once

#include "orturan/error.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace orturan {

using Vertex = unsigned;
using Arc = std::pair<Vertex, Vertex>;

inline constexpr Vertex max_vertices = 64;

inline std::uint64_t bit(Vertex v) { return std::uint64_t{1} << v; }

struct VertexDegree {
    std::size_t in = 0;
    std::size_t out = 0;
    std::size_t total = 0;
};

struct DegreeProfile {
    std::vector<VertexDegree> vertices;

    std::size_t maxDegree() const;   // Delta(D)
    std::size_t minDegree() const;   // delta(D)
    double averageDegree() const;    // d(D) = 2|E|/n
    std::size_t sumIn() const;
    std::size_t sumOut() const;
};

// Loopless digraph without antiparallel pairs on at most 64 vertices.
// Adjacency rows are single machine words. Instances are values: every
// modifying operation returns a new graph; in-place construction goes
// through GraphBuilder.
class OrientedGraph {
public:
    OrientedGraph() = default;
    explicit OrientedGraph(Vertex n);

    static OrientedGraph fromArcs(Vertex n, const std::vector<Arc>& arcs);

    Vertex n() const noexcept { return n_; }
    std::size_t arcCount() const noexcept { return arcs_; }

    bool hasArc(Vertex u, Vertex v) const { return (out_[u] >> v) & 1U; }
    bool adjacent(Vertex u, Vertex v) const { return hasArc(u, v) || hasArc(v, u); }

    std::uint64_t outMask(Vertex v) const { return out_[v]; }
    std::uint64_t inMask(Vertex v) const { return in_[v]; }
    std::uint64_t neighbourMask(Vertex v) const { return out_[v] | in_[v]; }

    std::size_t outDegree(Vertex v) const;
    std::size_t inDegree(Vertex v) const;
    std::size_t degree(Vertex v) const { return outDegree(v) + inDegree(v); }

    // Arcs sorted by (tail, head).
    std::vector<Arc> arcs() const;

    // Value-returning edits.
    OrientedGraph withArc(Vertex u, Vertex v) const;
    OrientedGraph withoutArc(Vertex u, Vertex v) const;

    // Appends vertex n() with arcs new->j for j in outBits and j->new for j in inBits.
    OrientedGraph withVertex(std::uint64_t outBits, std::uint64_t inBits) const;

    OrientedGraph reversed() const;

    // Vertex `v` of the result is vertex `order[v]` of this graph.
    OrientedGraph relabeled(const std::vector<Vertex>& order) const;

    OrientedGraph induced(const std::vector<Vertex>& vertices) const;

    bool isTournament() const;

    friend bool operator==(const OrientedGraph& a, const OrientedGraph& b)
    {
        return a.n_ == b.n_ && a.out_ == b.out_;
    }

private:
    friend class GraphBuilder;

    void checkVertex(Vertex v) const;

    Vertex n_ = 0;
    std::size_t arcs_ = 0;
    std::vector<std::uint64_t> out_;
    std::vector<std::uint64_t> in_;
};

class GraphBuilder {
public:
    explicit GraphBuilder(Vertex n) : g_(n) {}
    explicit GraphBuilder(OrientedGraph g) : g_(std::move(g)) {}

    GraphBuilder& addArc(Vertex u, Vertex v);
    GraphBuilder& removeArc(Vertex u, Vertex v);
    // Replaces whatever joins u and v (nothing, u->v or v->u) by u->v.
    GraphBuilder& orient(Vertex u, Vertex v);

    const OrientedGraph& peek() const { return g_; }
    OrientedGraph build() const { return g_; }

private:
    OrientedGraph g_;
};

// Free-function forms of the core operations.
OrientedGraph addArc(const OrientedGraph& g, Vertex u, Vertex v);
DegreeProfile degreeProfile(const OrientedGraph& g);

// ".og" text format.
std::string encode(const OrientedGraph& g);
OrientedGraph decode(std::string_view text);

// Simple undirected graph used as host for orientation enumeration.
struct UndirectedGraph {
    Vertex n = 0;
    std::vector<std::pair<Vertex, Vertex>> edges; // u < v, sorted, no duplicates
};

// Same format with a leading "undirected" header line.
UndirectedGraph decodeUndirected(std::string_view text);
std::string encodeUndirected(const UndirectedGraph& g);

UndirectedGraph underlying(const OrientedGraph& g);

} // namespace orturan
