#pragma once

#include "orturan/digraph.hpp"

#include <functional>
#include <string>
#include <vector>

namespace orturan {

inline constexpr Vertex canonical_max_vertices = 10;
inline constexpr Vertex tournament_enumeration_max = 7;
inline constexpr Vertex oriented_enumeration_max = 7;

// Ternary upper-triangle code, pairs (i,j), i<j in row-major order:
// 0 = no arc, 1 = i->j, 2 = j->i.
struct CanonicalCode {
    Vertex n = 0;
    std::string digits;

    // "n:digits", e.g. "3:120".
    std::string str() const;
    static CanonicalCode parse(const std::string& text);

    friend bool operator==(const CanonicalCode&, const CanonicalCode&) = default;
    friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;
};

// Code of g under its current labeling (not minimised).
CanonicalCode codeOf(const OrientedGraph& g);
OrientedGraph graphFromCode(const CanonicalCode& code);

struct CanonicalForm {
    CanonicalCode code;
    // order[i] = original vertex placed at position i.
    std::vector<Vertex> order;
    OrientedGraph graph; // g.relabeled(order)
};

// Lexicographically minimal code over all vertex relabelings. Throws TooLarge
// for n > 10.
CanonicalForm canonicalForm(const OrientedGraph& g);
CanonicalCode canonicalCode(const OrientedGraph& g);

bool isIsomorphic(const OrientedGraph& g, const OrientedGraph& h);

// True when some optimal labeling of g places vertex v first, i.e. v lies in
// the automorphism orbit of the canonically first vertex.
bool canBeCanonicallyFirst(const OrientedGraph& g, Vertex v);

enum class ArcMode {
    Any,      // the new vertex may be non-adjacent, an in- or out-neighbour of each old vertex
    Complete, // the new vertex is adjacent to every old vertex (tournament growth)
};

// Receives the raw child (new vertex = parent.n()) before canonical processing.
using ChildFilter = std::function<bool(const OrientedGraph&)>;

// One step of canonical augmentation. `parent` must be in canonical form.
// Returns one representative (in canonical form) of every isomorphism class
// of (n+1)-vertex graphs whose canonical deletion yields `parent` and which
// pass `accept`; sorted by code.
std::vector<OrientedGraph> canonicalChildren(const OrientedGraph& parent, ArcMode mode,
                                             const ChildFilter& accept = {});

std::vector<OrientedGraph> enumerateTournaments(Vertex k);

using GraphPredicate = std::function<bool(const OrientedGraph&)>;

struct EnumerationOptions {
    GraphPredicate predicate;
    // The predicate is closed under vertex and arc deletion, so failing
    // partial graphs are pruned during generation. Otherwise it is only
    // applied to complete n-vertex graphs.
    bool hereditary = false;
};

// Visits one canonical representative per isomorphism class of n-vertex
// oriented graphs. Visitation order is deterministic.
void forEachOrientedGraph(Vertex n, const EnumerationOptions& options,
                          const std::function<void(const OrientedGraph&)>& visit);

std::vector<OrientedGraph> enumerateOrientedGraphs(Vertex n, const EnumerationOptions& options = {});

} // namespace orturan
