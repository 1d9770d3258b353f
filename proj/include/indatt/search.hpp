#ifndef INDATT_SEARCH_HPP
#define INDATT_SEARCH_HPP

#include <compare>
#include <map>
#include <vector>

#include "indatt/graph.hpp"
#include "indatt/poly.hpp"

namespace indatt {

class EnumCapError : public Error {
public:
    using Error::Error;
};

enum class CaseKind {
    FourComponents,  // (n1, n2, n3, n4)
    ThreeComponents, // (m, n1, n2, n3)
    TwoComponents22, // (m1, m2, n1, n2)
    TwoComponents13, // (n1, m2, n2, m1)
};

/// One row of the component analysis for the quartic
/// 1 + 16z + 20k z^2 + 8k^2 z^3 + k^3 z^4.
struct ComponentSolution {
    CaseKind case_kind;
    int k;
    std::vector<long> params;     // tuple in the case's column order
    std::vector<IntPoly> factors; // component independence polynomials
};

/// Exhaustive solutions of the case's Diophantine system, sorted by params.
/// Symmetric rows are kept separately, matching the published tables.
std::vector<ComponentSolution> solve_components(CaseKind kind, int k);

/// Collapses rows whose factor multisets coincide.
std::vector<ComponentSolution> dedup_symmetric(std::vector<ComponentSolution> rows);

/// The target quartic for segment index k.
IntPoly component_target(int k);

struct EnumConstraints {
    int vertices = 0;
    int complement_edges = 0;     // a_2 of the realized polynomial
    int complement_triangles = 0; // a_3
    int complement_k4 = 0;        // a_4
    bool require_co_connected = false;

    auto operator<=>(const EnumConstraints&) const = default;
};

/// Complete isomorph-free list of graphs with the exact vertex/edge/triangle/
/// K4 counts, grown edge-by-edge with canonical-form rejection (triangle and
/// K4 counts are monotone, so overshoot prunes the search). Results are
/// canonically labeled and sorted by their graph6 line.
/// Enumeration is capped at 12 vertices (throws EnumCapError beyond).
std::vector<Graph> enumerate_complements(const EnumConstraints& c);

/// Every isomorphism class on exactly n vertices (isolated vertices allowed),
/// canonically labeled and sorted. n <= 10.
std::vector<Graph> enumerate_all_graphs(int n);

enum class FactorVerdict {
    Realizable,   // at least one connected graph realizes the factor
    Empty,        // enumeration ran and found none
    Undetermined, // factor exceeds the enumeration cap
};

struct FactorRealization {
    IntPoly factor;
    FactorVerdict verdict = FactorVerdict::Undetermined;
    long long count = -1; // connected realizations; -1 when undetermined
};

struct RealizationReport {
    ComponentSolution solution;
    std::vector<FactorRealization> per_factor;
    bool realizable = false;
    /// Non-isomorphic disconnected graphs assembled from the factors
    /// (multisets of component choices); -1 when any factor is undetermined.
    long long disconnected_count = -1;
};

using EnumCache = std::map<EnumConstraints, std::vector<Graph>>;

/// Pipes every component solution for k through the complement enumeration.
/// Degree-1 factors realize uniquely as complete graphs; factors beyond the
/// enumeration cap are reported undetermined, never dropped.
std::vector<RealizationReport> realize_disconnected(int k, EnumCache* cache = nullptr);

} // namespace indatt

#endif
