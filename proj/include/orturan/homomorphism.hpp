#pragma once

#include "orturan/digraph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace orturan {

// Total or partial map from source vertices to target vertices. Serves as a
// homomorphism witness, or (when injective) an embedding witness.
struct VertexMap {
    std::size_t sourceSize = 0;
    std::size_t targetSize = 0;
    std::vector<std::optional<Vertex>> assignment;

    VertexMap() = default;
    VertexMap(std::size_t source, std::size_t target)
        : sourceSize(source), targetSize(target), assignment(source)
    {
    }

    bool isTotal() const;
    bool isInjective() const;
    // (source, target) pairs for assigned vertices, by source.
    std::vector<std::pair<Vertex, Vertex>> pairs() const;

    friend bool operator==(const VertexMap&, const VertexMap&) = default;
};

// Independent checker: total map, every arc of f lands on an arc of d.
bool isHomomorphism(const OrientedGraph& f, const OrientedGraph& d, const VertexMap& map);

std::optional<VertexMap> homExists(const OrientedGraph& f, const OrientedGraph& d);

bool isAntidirected(const OrientedGraph& f);
bool hasDirectedCycle(const OrientedGraph& f);

// Number of vertices on a longest directed path; requires an acyclic graph.
std::size_t longestPathVertices(const OrientedGraph& f);

struct CompressibilityResult {
    // nullopt = infinite (f contains a directed cycle).
    std::optional<std::size_t> value;
    // Tournament of order value-1 admitting no homomorphism from f (finite case).
    std::optional<OrientedGraph> witness;

    bool infinite() const { return !value.has_value(); }
    std::string str() const { return value ? std::to_string(*value) : "infinite"; }
};

// Smallest k such that f maps homomorphically into every k-vertex tournament.
// Throws EmptyPattern for arc-less f and TooLarge if k would exceed 7.
CompressibilityResult compressibility(const OrientedGraph& f);

} // namespace orturan
