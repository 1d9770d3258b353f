#ifndef INDATT_CLASSIFIER_HPP
#define INDATT_CLASSIFIER_HPP

#include <optional>

#include "indatt/dynamics.hpp"
#include "indatt/graph.hpp"

namespace indatt {

enum class AttractorClass {
    PointZero,     // complete graph: attractor {0}
    PointMinusOne, // edgeless graph: attractor {-1}
    Segment,       // line segment [-4/k, 0], k in 1..4
    General,
};

enum class FractalRelation {
    Equal,           // -1 not a root of I_G
    EqualSimpleRoot, // -1 a simple root
    DisjointUnion,   // -1 a multiple root: attractor = fractal + backward orbit
};

struct SegmentDiagnostics {
    int depth = 0;
    std::size_t cloud_size = 0;
    double hausdorff_to_segment = 0.0;
};

struct AttractorReport {
    int alpha = 0;
    AttractorClass klass = AttractorClass::General;
    int k = 0; // valid when klass == Segment
    int minus_one_multiplicity = 0;
    FractalRelation fractal_relation = FractalRelation::Equal;
    bool connected = false; // informational
    std::optional<SegmentDiagnostics> numeric;

    double segment_left() const { return -4.0 / k; } // valid when Segment
};

struct ClassifyOptions {
    int depth = 10;
    std::size_t cap = 200000;
    bool corroborate = true; // run the backward orbit for Segment reports
    int threads = 0;
};

/// Exact decision procedure: edgeless -> PointMinusOne; complete -> PointZero;
/// otherwise Segment(k) exactly when the vertex count is alpha^2 and the
/// reduced coefficients equal the degree-alpha Chebyshev conjugate for some
/// k in {1,2,3,4}; else General. The segment verdict from the coefficient
/// match alone is sound: the Julia set of an affine conjugate of T_n is the
/// affine image of [-1,1], so those coefficients force the segment.
AttractorReport attractor_report(const Graph& g, const ClassifyOptions& opts = {});

/// Would-be complement statistics at a = 5/2 and the triangle lower bound
/// they violate: no graph realizes the a = 5/2 conjugate for any n >= 2.
struct K5Exclusion {
    BigInt vertices;
    BigRat edges;
    BigRat triangles;
    BigRat bound; // E (4E - N^2) / (3N)
    bool violated = false;
};

K5Exclusion exclude_k5(int n);

/// True iff the reduced polynomial is (1+z)^n - 1 with n = degree >= 2:
/// the only reduced independence polynomial whose Julia set is a circle.
bool circle_check(const IntPoly& reduced_poly);

const char* to_string(AttractorClass c);
const char* to_string(FractalRelation r);

} // namespace indatt

#endif
