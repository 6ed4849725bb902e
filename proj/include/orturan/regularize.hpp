#pragma once

#include "orturan/digraph.hpp"
#include "orturan/homomorphism.hpp"

#include <boost/dynamic_bitset.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace orturan {

// Bipartite digraph G(U ∪ W, U -> W). Vertices are addressed by side-local
// indices; each carries a label (its id in the graph it was taken from).
// Unlike OrientedGraph there is no size cap: rows are dynamic bitsets.
class BipartiteDigraph {
public:
    using Row = boost::dynamic_bitset<std::uint64_t>;

    BipartiteDigraph() = default;
    // Labels default to u -> u and w -> |U| + w.
    BipartiteDigraph(std::size_t sizeU, std::size_t sizeW);
    BipartiteDigraph(std::vector<Vertex> uLabels, std::vector<Vertex> wLabels);

    static BipartiteDigraph complete(std::size_t sizeU, std::size_t sizeW);

    std::size_t sizeU() const { return uLabels_.size(); }
    std::size_t sizeW() const { return wLabels_.size(); }
    std::size_t order() const { return sizeU() + sizeW(); }
    std::size_t arcCount() const { return arcs_; }

    Vertex uLabel(std::size_t u) const { return uLabels_[u]; }
    Vertex wLabel(std::size_t w) const { return wLabels_[w]; }
    const std::vector<Vertex>& uLabels() const { return uLabels_; }
    const std::vector<Vertex>& wLabels() const { return wLabels_; }

    bool hasArc(std::size_t u, std::size_t w) const { return out_[u].test(w); }
    void addArc(std::size_t u, std::size_t w);
    void removeArc(std::size_t u, std::size_t w);

    const Row& outRow(std::size_t u) const { return out_[u]; }
    const Row& inRow(std::size_t w) const { return in_[w]; }
    std::size_t outDegree(std::size_t u) const { return out_[u].count(); }
    std::size_t inDegree(std::size_t w) const { return in_[w].count(); }

    // Total degree of a vertex in the combined numbering: U first, then W.
    std::size_t degree(std::size_t global) const;

    std::size_t minOutDegree() const;

    // Sub-digraph on the given side-local index lists (labels carried over).
    BipartiteDigraph induced(const std::vector<std::size_t>& us, const std::vector<std::size_t>& ws) const;

    DegreeProfile profile() const;

    // Oriented graph on the combined numbering; requires order() <= 64.
    OrientedGraph toOriented() const;

    friend bool operator==(const BipartiteDigraph& a, const BipartiteDigraph& b)
    {
        return a.uLabels_ == b.uLabels_ && a.wLabels_ == b.wLabels_ && a.out_ == b.out_;
    }

private:
    std::vector<Vertex> uLabels_;
    std::vector<Vertex> wLabels_;
    std::vector<Row> out_;
    std::vector<Row> in_;
    std::size_t arcs_ = 0;
};

// Antidirected pattern as H(A ∪ B, A -> B): A holds the vertices with an
// out-arc, B the rest; labels are the original vertex ids.
BipartiteDigraph bipartitePattern(const OrientedGraph& pattern);

// Largest out-degree on the A side.
std::size_t maxOutDegree(const BipartiteDigraph& pattern);

struct ExtractResult {
    BipartiteDigraph graph; // U = X, W = Y; labels are vertices of the input
    std::size_t attempts = 0;
    std::size_t swaps = 0;
};

// Balanced X/Y split keeping only X -> Y arcs, at least ceil(|E|/4) of them.
ExtractResult extractBipartite(const OrientedGraph& g, std::uint64_t seed, std::size_t maxAttempts = 64);

struct RegularizeLevel {
    std::size_t vertices = 0;
    std::size_t arcs = 0;
    double c = 0;
    std::size_t touchingTop = 0;
    bool caseOne = false;
    std::size_t chosenBucket = 0; // Case 2 only, 1-based
};

struct RegularizeResult {
    BipartiteDigraph subgraph;
    double epsilon = 0;
    std::size_t t = 0;
    double K = 0;
    std::size_t nS = 0;
    double K1 = 0;
    double K2 = 0;
    double cInitial = 0; // density constant of the (trimmed) input
    double cExit = 0;    // density constant of the level where Case 1 fired
    std::size_t trimmedArcs = 0;
    std::vector<RegularizeLevel> levels;
};

// Default bucket parameter ceil(2^(1/eps^2 + 1)) with eps = 1 - 1/r.
std::size_t defaultSplitParameter(std::size_t r);

// Splitting recursion of the almost-regular lemma. When `c` is given the input
// is first trimmed to ceil((c/4) n^(1+eps)) arcs; otherwise c is measured.
RegularizeResult almostRegularSubdigraph(const BipartiteDigraph& h, std::optional<double> c, std::size_t r,
                                         std::optional<std::size_t> tOverride = std::nullopt);

struct RichSetCertificate {
    std::vector<std::size_t> R; // side-local W indices, ascending
    std::size_t r = 0;
    std::size_t h = 0;
    std::size_t anchor = 0; // the uncoloured U vertex whose out-neighbours gave R
    // One list of h common in-neighbours per r-subset of R, subsets in
    // lexicographic order; filled when there are at most 10^6 subsets.
    std::vector<std::vector<std::size_t>> witnesses;
    bool verified = false;
};

inline constexpr std::size_t rich_verify_limit = 1'000'000;

std::optional<RichSetCertificate> findRichSet(const BipartiteDigraph& g, std::size_t r, std::size_t h);

// Checks every r-subset of cert.R against g directly.
bool verifyRichSet(const BipartiteDigraph& g, const RichSetCertificate& cert);

// Embedding indexed by pattern labels, valued in host labels.
VertexMap embedViaRichSet(const BipartiteDigraph& g, const BipartiteDigraph& pattern, const RichSetCertificate& cert);

// Independent check through the containment module.
bool isValidEmbedding(const BipartiteDigraph& host, const BipartiteDigraph& pattern, const VertexMap& map);
bool isValidEmbedding(const OrientedGraph& host, const BipartiteDigraph& pattern, const VertexMap& map);

struct ZoomConfig {
    std::size_t r = 1;
    std::size_t h = 1;
    std::size_t d = 0;
    double p = 1;
    std::uint64_t seed = 0;
    std::size_t maxRetries = 1024;

    // h = |pattern|, d = min out-degree of g, p from the sizes of g after
    // truncating U to 4h(2|W|)^r.
    static ZoomConfig forInstance(const BipartiteDigraph& g, const BipartiteDigraph& pattern, std::size_t r,
                                  std::uint64_t seed);
    bool feasible() const;
};

struct ZoomResult {
    VertexMap embedding;
    std::size_t trials = 0;
    std::size_t truncatedU = 0;
    std::size_t sampledW = 0;
    std::size_t keptU = 0;
    RichSetCertificate certificate;
};

ZoomResult randomZoom(const BipartiteDigraph& g, const BipartiteDigraph& pattern, const ZoomConfig& cfg);

struct PipelineOptions {
    std::optional<std::size_t> tOverride;
    std::size_t maxAttempts = 64;
    std::size_t maxRetries = 1024;
};

struct PipelineReport {
    std::optional<VertexMap> embedding;
    std::string failedStage; // empty on success
    std::string message;
    nlohmann::json diagnostics;

    nlohmann::json json() const;
};

// extractBipartite -> almostRegularSubdigraph -> randomZoom on the result.
PipelineReport faksPipeline(const OrientedGraph& g, const BipartiteDigraph& pattern, std::size_t r,
                            std::uint64_t seed, const PipelineOptions& options = {});

// max{20,h} * 20 * K1^(1+1/r) * (K2/4h)^(1/r) * (K1/(K1+K2))^(1-1/r)
double densityConstant(std::size_t h, std::size_t r, double K1, double K2);

} // namespace orturan
