#include "indatt/classifier.hpp"

#include "indatt/chebyshev.hpp"

namespace indatt {

AttractorReport attractor_report(const Graph& g, const ClassifyOptions& opts) {
    AttractorReport rep;
    const IntPoly ipoly = independence_polynomial(g);
    rep.alpha = ipoly.degree();
    rep.connected = is_connected(g);
    rep.minus_one_multiplicity = multiplicity_at(ipoly, BigInt(-1));
    if (rep.minus_one_multiplicity == 0)
        rep.fractal_relation = FractalRelation::Equal;
    else if (rep.minus_one_multiplicity == 1)
        rep.fractal_relation = FractalRelation::EqualSimpleRoot;
    else
        rep.fractal_relation = FractalRelation::DisjointUnion;

    if (g.edge_count() == 0) {
        rep.klass = AttractorClass::PointMinusOne;
        return rep;
    }
    if (rep.alpha == 1) {
        rep.klass = AttractorClass::PointZero;
        return rep;
    }

    rep.klass = AttractorClass::General;
    if (g.order() == rep.alpha * rep.alpha) {
        const IntPoly red = reduced(ipoly);
        for (auto& [k, candidate] : segment_candidates(rep.alpha)) {
            if (red == candidate) {
                rep.klass = AttractorClass::Segment;
                rep.k = k;
                break;
            }
        }
    }

    if (rep.klass == AttractorClass::Segment && opts.corroborate) {
        BackwardOrbit orbit = backward_orbit(reduced(ipoly), Complex(-1.0, 0.0), opts.depth,
                                             opts.cap, 1e-12, opts.threads);
        SegmentDiagnostics diag;
        diag.depth = opts.depth;
        diag.cloud_size = orbit.levels.back().cloud.size();
        diag.hausdorff_to_segment =
            hausdorff_to_segment(orbit.levels.back().cloud, 4.0 / rep.k);
        rep.numeric = diag;
    }
    return rep;
}

K5Exclusion exclude_k5(int n) {
    if (n < 2) throw Error("exclude_k5 requires n >= 2");
    BigRat a(5, 2);
    a.canonicalize();
    std::vector<BigRat> coeffs = conjugate_coefficients({a, n});
    K5Exclusion out;
    out.vertices = BigInt(n) * n;                            // a_1
    out.edges = coeffs[1];                                   // a_2: complement edges
    out.triangles = (n >= 3) ? coeffs[2] : BigRat(0);        // a_3: complement triangles
    BigRat N(out.vertices);
    out.bound = out.edges * (BigRat(4) * out.edges - N * N) / (BigRat(3) * N);
    out.bound.canonicalize();
    out.violated = out.triangles < out.bound;
    return out;
}

bool circle_check(const IntPoly& reduced_poly) {
    if (reduced_poly.coeff(0) != 0) throw Error("circle_check requires a reduced polynomial");
    const int n = reduced_poly.degree();
    if (n < 2) return false;
    BigInt binom(1);
    for (int i = 1; i <= n; ++i) {
        binom = binom * (n - i + 1) / i; // C(n, i)
        if (reduced_poly.coeff(i) != binom) return false;
    }
    return true;
}

const char* to_string(AttractorClass c) {
    switch (c) {
        case AttractorClass::PointZero: return "PointZero";
        case AttractorClass::PointMinusOne: return "PointMinusOne";
        case AttractorClass::Segment: return "Segment";
        case AttractorClass::General: return "General";
    }
    return "?";
}

const char* to_string(FractalRelation r) {
    switch (r) {
        case FractalRelation::Equal: return "equal";
        case FractalRelation::EqualSimpleRoot: return "equal-simple-root";
        case FractalRelation::DisjointUnion: return "disjoint-union";
    }
    return "?";
}

} // namespace indatt
