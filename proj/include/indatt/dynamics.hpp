#ifndef INDATT_DYNAMICS_HPP
#define INDATT_DYNAMICS_HPP

#include <iosfwd>
#include <optional>
#include <vector>

#include "indatt/poly.hpp"

namespace indatt {

class RootSolveError : public Error {
public:
    RootSolveError(const std::string& msg, std::vector<Complex> best)
        : Error(msg), best_iterate(std::move(best)) {}
    std::vector<Complex> best_iterate;
};

/// Finite set of complex points with tolerance-based dedupe.
/// Points are kept in canonical order (sorted by re, then im) and no two
/// stored points lie within tol of each other, so every producer is
/// schedule-independent.
struct PointCloud {
    std::vector<Complex> points;
    double tol = 1e-9;

    std::size_t size() const { return points.size(); }
};

PointCloud make_cloud(std::vector<Complex> pts, double tol = 1e-9);

/// All distinct roots of p (multiplicities collapsed exactly via the
/// squarefree part). Simultaneous Aberth-Ehrlich iteration with Newton
/// polish; every root r satisfies |p(r)| <= tol * (1 + sum |a_i|).
PointCloud roots(const IntPoly& p, double tol = 1e-12);

/// Solutions of p(z) = w. Exact integer shifts (w an integer point) reuse
/// the exact root path so repeated solutions collapse precisely.
PointCloud preimages(const IntPoly& p, Complex w, double tol = 1e-12);

struct OrbitLevel {
    PointCloud cloud;
    bool thinned = false;
};

struct BackwardOrbit {
    std::vector<OrbitLevel> levels; // level m at index m-1
    bool any_thinned() const {
        for (const auto& l : levels)
            if (l.thinned) return true;
        return false;
    }
};

/// Level m is the deduplicated union of preimages of every level-(m-1)
/// point (level 0 = {seed}). Levels exceeding `cap` points are thinned
/// deterministically (every j-th point of the canonical order) and flagged.
/// threads = 0 picks the hardware concurrency.
BackwardOrbit backward_orbit(const IntPoly& p, Complex seed = Complex(-1.0, 0.0),
                             int depth = 12, std::size_t cap = 200000,
                             double tol = 1e-12, int threads = 0);

/// Hausdorff distance between two non-empty clouds.
double hausdorff(const PointCloud& a, const PointCloud& b);

/// Symmetric Hausdorff distance between a cloud and the segment [-r, 0] on
/// the real axis. The segment side is sampled at spacing r / 10^4, so the
/// reported value is exact up to +r/10^4.
double hausdorff_to_segment(const PointCloud& a, double r);

enum class FixedPointKind {
    Attracting,
    SuperAttracting,
    Repelling,
    RationallyIndifferent,
    IrrationallyIndifferent,
};

struct FixedPointClass {
    FixedPointKind kind;
    Complex multiplier;
};

/// Classifies the fixed point z0 of p from the multiplier p'(z0).
/// Thresholds: super-attracting |m| <= 1e-9; attracting |m| < 1 - 1e-9;
/// repelling |m| > 1 + 1e-9; otherwise indifferent, rational when m^q is
/// within 1e-6 of 1 for some q <= 64.
FixedPointClass classify_fixed_point(const IntPoly& p, Complex z0);

struct Window {
    double x0, x1; // real range
    double y0, y1; // imaginary range
};

/// Per-pixel escape iteration counts (0 = still bounded after max_iter).
struct Raster {
    int width = 0;
    int height = 0;
    Window window{};
    std::vector<int> values; // row-major, top row first
};

Raster filled_julia_raster(const IntPoly& p, const Window& window, int width,
                           int height, int max_iter);

/// CSV lines "re,im" with 17 significant digits.
void write_cloud_csv(const PointCloud& c, std::ostream& out);

/// Binary PPM (P6). Non-escaping pixels are black; escaping pixels use a
/// fixed HSV palette with hue = (9 * count) mod 360 at full saturation.
void write_ppm(const Raster& r, std::ostream& out);

} // namespace indatt

#endif
