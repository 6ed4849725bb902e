#pragma once

#include "orturan/digraph.hpp"
#include "orturan/homomorphism.hpp"

#include <optional>

namespace orturan {

// Injective, total, arc-preserving map pattern -> host (non-induced copy).
bool isEmbedding(const OrientedGraph& host, const OrientedGraph& pattern, const VertexMap& map);

std::optional<VertexMap> containsCopy(const OrientedGraph& host, const OrientedGraph& pattern);

// Only copies whose image contains `v`. For a host whose other vertices span a
// pattern-free graph this decides containment outright.
std::optional<VertexMap> containsCopyUsing(const OrientedGraph& host, const OrientedGraph& pattern, Vertex v);

bool isFree(const OrientedGraph& host, const OrientedGraph& pattern);

struct UniversalCheck {
    bool holds = true;
    std::optional<OrientedGraph> counterexample;
};

// Every tournament class of order k contains pattern (k <= 7).
UniversalCheck allTournamentsContain(Vertex k, const OrientedGraph& pattern, unsigned jobs = 1);

inline constexpr std::size_t orientation_edge_cap = 24;

// Every orientation of host contains pattern; orientations are visited in
// reflected Gray-code order over the edge list, the counterexample is the first
// failing one in that order.
UniversalCheck allOrientationsContain(const UndirectedGraph& host, const OrientedGraph& pattern, unsigned jobs = 1);

} // namespace orturan
