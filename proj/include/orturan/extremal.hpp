#pragma once

#include "orturan/canon.hpp"
#include "orturan/digraph.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace orturan {

enum class PatternKind {
    DirectedPath,         // k vertices, 0->1->...->k-1
    DirectedCycle,        // k vertices
    TransitiveTournament, // k vertices, i->j for i<j
    Star,                 // centre with in-degree p and out-degree q
    Matching,             // k independent arcs
    AntidirectedPath,     // k vertices, arcs alternate direction
    OrientedC4,           // v1->v2, v2->v3, v3->v4, v1->v4
    Prop23Graph,          // v1->v2, v2->v3, v4->v3
    Prop23Mirror,         // v2->v1, v2->v3, v3->v4
    P3PlusArc,            // a->b<-c plus an independent arc
    Thm32Graph,           // x->y1, x->y2, y1->z, y2->z
    Custom,
};

struct PatternSpec {
    PatternKind kind = PatternKind::Custom;
    unsigned k = 0;
    unsigned p = 0;
    unsigned q = 0;
    std::optional<OrientedGraph> custom;

    static PatternSpec make(PatternKind kind, unsigned k = 0, unsigned p = 0, unsigned q = 0)
    {
        PatternSpec s;
        s.kind = kind;
        s.k = k;
        s.p = p;
        s.q = q;
        return s;
    }
    static PatternSpec directedPath(unsigned k) { return make(PatternKind::DirectedPath, k); }
    static PatternSpec directedCycle(unsigned k) { return make(PatternKind::DirectedCycle, k); }
    static PatternSpec transitiveTournament(unsigned k) { return make(PatternKind::TransitiveTournament, k); }
    static PatternSpec star(unsigned p, unsigned q) { return make(PatternKind::Star, 0, p, q); }
    static PatternSpec matching(unsigned k) { return make(PatternKind::Matching, k); }
    static PatternSpec antidirectedPath(unsigned k) { return make(PatternKind::AntidirectedPath, k); }
    static PatternSpec orientedC4() { return make(PatternKind::OrientedC4); }
    static PatternSpec prop23() { return make(PatternKind::Prop23Graph); }
    static PatternSpec prop23Mirror() { return make(PatternKind::Prop23Mirror); }
    static PatternSpec p3PlusArc() { return make(PatternKind::P3PlusArc); }
    static PatternSpec thm32() { return make(PatternKind::Thm32Graph); }
    static PatternSpec customGraph(OrientedGraph g)
    {
        auto s = make(PatternKind::Custom);
        s.custom = std::move(g);
        return s;
    }

    // Named form accepted by parse(): dpath3, dcycle3 (or c3), ttour3,
    // star:p,q, matching2, adpath4, oc4, prop23, prop23m, p3plusarc, thm32.
    static PatternSpec parse(std::string_view name);
    std::string name() const;

    OrientedGraph graph() const;
};

enum class Validity { AllN, SufficientlyLargeN };
const char* to_string(Validity v);

struct FormulaValue {
    std::size_t value = 0;
    Validity validity = Validity::AllN;
};

// Arc count of the Turán graph T(n, r): complete r-partite, parts as equal as possible.
std::size_t turanArcCount(std::size_t n, std::size_t r);

// Closed-form exo(n, F) for the named patterns. Throws NoFormula otherwise.
FormulaValue formulaValue(const PatternSpec& pattern, std::size_t n);

struct OracleOptions {
    std::optional<std::uint64_t> nodeBudget;
    std::optional<double> secondsBudget;
    unsigned jobs = 1;
    // Permits 7 < n <= 10; the result is still exact whenever the search
    // completes within budget.
    bool lowerBoundMode = false;
};

inline constexpr Vertex oracle_exhaustive_max = 7;

struct ExtremalRecord {
    Vertex n = 0;
    PatternSpec pattern;
    std::size_t value = 0;
    OrientedGraph witness;
    CanonicalCode witnessCode;
    std::optional<std::size_t> formulaValue;
    std::optional<bool> matchesFormula;
    bool exact = true;
    std::uint64_t nodes = 0;
};

class BudgetExceeded : public Error {
public:
    explicit BudgetExceeded(ExtremalRecord bestSoFar)
        : Error(ErrorKind::BudgetExceeded,
                "search budget exhausted; certified lower bound " + std::to_string(bestSoFar.value)),
          best_(std::move(bestSoFar))
    {
    }
    const ExtremalRecord& bestSoFar() const { return best_; }

private:
    ExtremalRecord best_;
};

// Exact exo(n, F) by canonical augmentation over F-free graphs with
// branch-and-bound. The witness is the extremal graph with the smallest
// canonical code, stored in canonical form.
ExtremalRecord oracleExo(Vertex n, const PatternSpec& pattern, const OracleOptions& options = {});

enum class Construction {
    TuranOrientation, // (a) blow-up of a tournament on r parts; antidirected for r = 2
    CyclePower,       // (b) v_i -> v_{i+1..i+q-1} mod n
    StarPartition,    // (c) C -> D with cyclic powers inside C and D
    Thm32,            // (d) antidirected K_{n/2,n/2} plus a directed cycle on the larger part
    Prop26,           // (e) arc v->u with u->w->v for every other w
    Prop27,           // (f) arc v->u with u->w and v->w for every other w
};

struct ConstructionParams {
    unsigned r = 2;                            // (a) number of parts
    std::optional<OrientedGraph> partTournament; // (a) orientation between parts; transitive if absent
    unsigned p = 0;                            // (c)
    unsigned q = 0;                            // (b), (c)
    std::optional<unsigned> dSize;             // (c) |D|; optimal valid size if absent
};

const char* to_string(Construction c);
Construction parseConstruction(std::string_view name);

OrientedGraph buildConstruction(Construction c, Vertex n, const ConstructionParams& params = {});
// Arc count the construction is designed to reach.
std::size_t constructionTarget(Construction c, Vertex n, const ConstructionParams& params = {});
PatternSpec pairedPattern(Construction c, const ConstructionParams& params = {});
// Smallest n for which the construction is defined with its target count.
Vertex constructionMinN(Construction c, const ConstructionParams& params = {});

enum class FormulaStatus { Match, OracleHigher, OracleLower };
const char* to_string(FormulaStatus s);

struct VerificationRow {
    Vertex n = 0;
    std::size_t oracle = 0;
    std::size_t formula = 0;
    Validity validity = Validity::AllN;
    FormulaStatus status = FormulaStatus::Match;
    CanonicalCode witnessCode;
    std::optional<std::size_t> constructionArcs;
    std::optional<bool> constructionFree;
};

struct VerificationReport {
    PatternSpec pattern;
    std::vector<VerificationRow> rows;

    // No ORACLE_LOWER, every construction free and below the oracle, and an
    // exact match at every n for formulas claimed for all n.
    bool ok() const;
    std::string table() const;
    nlohmann::json json() const;
};

VerificationReport verifyAgainstFormula(const PatternSpec& pattern, Vertex nMin, Vertex nMax,
                                        const OracleOptions& options = {});

nlohmann::json toJson(const ExtremalRecord& record);

} // namespace orturan
