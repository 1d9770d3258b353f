#include "indatt/dynamics.hpp"

#include <algorithm>
#include <climits>
#include <cmath>
#include <cstdio>
#include <limits>
#include <mutex>
#include <numbers>
#include <ostream>
#include <thread>
#include <unordered_map>

namespace indatt {

namespace {

struct CellKey {
    long long x, y;
    bool operator==(const CellKey&) const = default;
};

struct CellHash {
    std::size_t operator()(const CellKey& k) const {
        return std::hash<long long>()(k.x * 1000003LL ^ k.y);
    }
};

bool cloud_less(const Complex& a, const Complex& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
}

} // namespace

PointCloud make_cloud(std::vector<Complex> pts, double tol) {
    if (tol <= 0) throw Error("cloud tolerance must be positive");
    for (const Complex& z : pts)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
            throw Error("non-finite point in cloud");
    std::sort(pts.begin(), pts.end(), cloud_less);
    PointCloud out;
    out.tol = tol;
    // spatial hash on rounded coordinates; greedy keep in canonical order
    std::unordered_map<CellKey, std::vector<std::size_t>, CellHash> grid;
    for (const Complex& z : pts) {
        long long cx = static_cast<long long>(std::floor(z.real() / tol));
        long long cy = static_cast<long long>(std::floor(z.imag() / tol));
        bool dup = false;
        for (long long dx = -1; dx <= 1 && !dup; ++dx)
            for (long long dy = -1; dy <= 1 && !dup; ++dy) {
                auto it = grid.find({cx + dx, cy + dy});
                if (it == grid.end()) continue;
                for (std::size_t idx : it->second)
                    if (std::abs(out.points[idx] - z) < tol) {
                        dup = true;
                        break;
                    }
            }
        if (!dup) {
            grid[{cx, cy}].push_back(out.points.size());
            out.points.push_back(z);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Aberth-Ehrlich simultaneous iteration on double-complex coefficients.

namespace {

constexpr int kAberthBudget = 500;

void horner(const std::vector<Complex>& c, Complex z, Complex& val, Complex& der) {
    Complex p(0.0, 0.0), d(0.0, 0.0);
    for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) {
        d = d * z + p;
        p = p * z + c[i];
    }
    val = p;
    der = d;
}

// All roots of the polynomial with ascending coefficients c (degree >= 1,
// nonzero constant and leading coefficient).
std::vector<Complex> aberth(const std::vector<Complex>& c, double tol) {
    const int n = static_cast<int>(c.size()) - 1;
    if (n == 1) return {-c[0] / c[1]};

    double cauchy = 0.0;
    for (int i = 0; i < n; ++i) cauchy = std::max(cauchy, std::abs(c[i] / c[n]));
    const double r_hi = 1.0 + cauchy;
    double r0 = std::pow(std::abs(c[0] / c[n]), 1.0 / n);
    r0 = std::clamp(r0, 1e-12, r_hi);

    std::vector<Complex> z(n);
    for (int i = 0; i < n; ++i) {
        // perturbed circle: irrational-ish offset breaks axis symmetry
        double theta = 2.0 * std::numbers::pi * (i + 0.25) / n + 0.42;
        double r = r0 * (1.0 + 0.05 * i / std::max(1, n));
        z[i] = Complex(r * std::cos(theta), r * std::sin(theta));
    }

    for (int iter = 0; iter < kAberthBudget; ++iter) {
        double worst = 0.0;
        for (int i = 0; i < n; ++i) {
            Complex val, der;
            horner(c, z[i], val, der);
            if (val == Complex(0.0, 0.0)) continue;
            if (der == Complex(0.0, 0.0)) {
                z[i] += Complex(tol + 1e-8, tol + 1e-8);
                worst = 1.0;
                continue;
            }
            Complex newton = val / der;
            Complex sum(0.0, 0.0);
            for (int j = 0; j < n; ++j)
                if (j != i) sum += 1.0 / (z[i] - z[j]);
            Complex denom = 1.0 - newton * sum;
            Complex step = (denom == Complex(0.0, 0.0)) ? newton : newton / denom;
            z[i] -= step;
            worst = std::max(worst, std::abs(step) / (1.0 + std::abs(z[i])));
        }
        if (worst <= tol) break;
    }
    // two Newton polish steps
    for (int i = 0; i < n; ++i) {
        for (int s = 0; s < 2; ++s) {
            Complex val, der;
            horner(c, z[i], val, der);
            if (der == Complex(0.0, 0.0)) break;
            z[i] -= val / der;
        }
    }
    return z;
}

// Coefficients as doubles scaled by a common power of two so the largest
// magnitude is near 1 (roots are scale-invariant).
std::vector<Complex> scaled_doubles(const IntPoly& p) {
    long emax = LONG_MIN;
    std::vector<std::pair<double, long>> parts(p.degree() + 1);
    for (int i = 0; i <= p.degree(); ++i) {
        long e = 0;
        double m = mpz_get_d_2exp(&e, p.coeff(i).get_mpz_t());
        parts[i] = {m, e};
        if (m != 0.0) emax = std::max(emax, e);
    }
    std::vector<Complex> c(p.degree() + 1);
    for (int i = 0; i <= p.degree(); ++i) {
        auto [m, e] = parts[i];
        c[i] = (m == 0.0) ? Complex(0.0, 0.0)
                          : Complex(std::ldexp(m, static_cast<int>(e - emax)), 0.0);
    }
    return c;
}

// Shared tail: strip exact zero roots at the origin, run Aberth, check the
// residual bound |q(r)| <= tol * (1 + sum |c_i|) and dedupe.
PointCloud solve_coeffs(std::vector<Complex> c, double tol, const char* what) {
    std::vector<Complex> found;
    while (c.size() > 1 && c.front() == Complex(0.0, 0.0)) {
        found.push_back(Complex(0.0, 0.0));
        c.erase(c.begin());
    }
    if (c.size() > 1) {
        auto rs = aberth(c, tol);
        found.insert(found.end(), rs.begin(), rs.end());
    }
    double bound = 1.0;
    for (const Complex& ci : c) bound += std::abs(ci);
    bound *= tol;
    for (const Complex& r : found) {
        if (!std::isfinite(r.real()) || !std::isfinite(r.imag()))
            throw RootSolveError(std::string(what) + ": iteration diverged", found);
        Complex val, der;
        horner(c, r, val, der);
        if (r != Complex(0.0, 0.0) && std::abs(val) > bound)
            throw RootSolveError(std::string(what) + ": residual " +
                                     std::to_string(std::abs(val)) + " above bound " +
                                     std::to_string(bound),
                                 found);
    }
    return make_cloud(std::move(found));
}

} // namespace

PointCloud roots(const IntPoly& p, double tol) {
    if (p.degree() < 1) throw Error("roots requires degree >= 1");
    IntPoly sf = squarefree_part(p);
    return solve_coeffs(scaled_doubles(sf), tol, "roots");
}

PointCloud preimages(const IntPoly& p, Complex w, double tol) {
    if (p.degree() < 1) throw Error("preimages requires degree >= 1");
    // Exact integer targets stay on the exact path, so repeated solutions
    // (e.g. (1+z)^n = 0) collapse precisely.
    double ip;
    if (w.imag() == 0.0 && std::modf(w.real(), &ip) == 0.0 && std::abs(ip) < 9e15) {
        BigInt wi(static_cast<long>(ip));
        return roots(p - IntPoly::constant(wi), tol);
    }
    std::vector<Complex> c = scaled_doubles(p);
    // rescale w consistently with the coefficient scaling
    long emax = LONG_MIN;
    for (int i = 0; i <= p.degree(); ++i) {
        long e = 0;
        double m = mpz_get_d_2exp(&e, p.coeff(i).get_mpz_t());
        if (m != 0.0) emax = std::max(emax, e);
    }
    c[0] -= Complex(std::ldexp(w.real(), static_cast<int>(-emax)),
                    std::ldexp(w.imag(), static_cast<int>(-emax)));
    return solve_coeffs(std::move(c), tol, "preimages");
}

BackwardOrbit backward_orbit(const IntPoly& p, Complex seed, int depth, std::size_t cap,
                             double tol, int threads) {
    if (p.degree() < 1) throw Error("backward orbit requires degree >= 1");
    if (depth < 1) throw Error("backward orbit depth must be positive");
    if (cap < 1) throw Error("backward orbit cap must be positive");
    int nthreads = threads > 0 ? threads : static_cast<int>(std::thread::hardware_concurrency());
    if (nthreads < 1) nthreads = 1;

    BackwardOrbit orbit;
    std::vector<Complex> current{seed};
    for (int level = 1; level <= depth; ++level) {
        std::vector<std::vector<Complex>> per_point(current.size());
        std::exception_ptr error;
        std::mutex error_mutex;
        auto work = [&](std::size_t lo, std::size_t hi) {
            try {
                for (std::size_t i = lo; i < hi; ++i)
                    per_point[i] = preimages(p, current[i], tol).points;
            } catch (...) {
                std::lock_guard<std::mutex> lk(error_mutex);
                if (!error) error = std::current_exception();
            }
        };
        const std::size_t total = current.size();
        const int used = static_cast<int>(std::min<std::size_t>(nthreads, total));
        if (used <= 1) {
            work(0, total);
        } else {
            std::vector<std::thread> pool;
            const std::size_t chunk = (total + used - 1) / used;
            for (int t = 0; t < used; ++t) {
                std::size_t lo = t * chunk, hi = std::min(total, lo + chunk);
                if (lo >= hi) break;
                pool.emplace_back(work, lo, hi);
            }
            for (auto& th : pool) th.join();
        }
        if (error) {
            try {
                std::rethrow_exception(error);
            } catch (const RootSolveError& e) {
                throw RootSolveError("backward orbit level " + std::to_string(level) + ": " +
                                         e.what(),
                                     e.best_iterate);
            }
        }
        std::vector<Complex> merged;
        for (auto& v : per_point) merged.insert(merged.end(), v.begin(), v.end());
        PointCloud cloud = make_cloud(std::move(merged));
        bool thinned = false;
        if (cloud.points.size() > cap) {
            std::size_t j = (cloud.points.size() + cap - 1) / cap;
            std::vector<Complex> kept;
            for (std::size_t i = 0; i < cloud.points.size(); i += j) kept.push_back(cloud.points[i]);
            cloud.points = std::move(kept);
            thinned = true;
        }
        current = cloud.points;
        orbit.levels.push_back({std::move(cloud), thinned});
    }
    return orbit;
}

// ---------------------------------------------------------------------------

namespace {

// nearest distance from q to the cloud (points sorted by re)
double nearest_dist(const PointCloud& c, Complex q) {
    const auto& pts = c.points;
    auto it = std::lower_bound(pts.begin(), pts.end(), q.real(),
                               [](const Complex& a, double x) { return a.real() < x; });
    std::size_t idx = static_cast<std::size_t>(it - pts.begin());
    double best = std::numeric_limits<double>::infinity();
    // expand left and right while the re-gap alone can still beat `best`
    std::size_t r = idx;
    while (r < pts.size()) {
        double dx = pts[r].real() - q.real();
        if (dx * dx >= best * best && dx > 0) break;
        best = std::min(best, std::abs(pts[r] - q));
        ++r;
    }
    std::size_t l = idx;
    while (l > 0) {
        --l;
        double dx = q.real() - pts[l].real();
        if (dx * dx >= best * best && dx > 0) break;
        best = std::min(best, std::abs(pts[l] - q));
    }
    return best;
}

double directed_hausdorff(const PointCloud& from, const PointCloud& to) {
    double worst = 0.0;
    for (const Complex& z : from.points) worst = std::max(worst, nearest_dist(to, z));
    return worst;
}

} // namespace

double hausdorff(const PointCloud& a, const PointCloud& b) {
    if (a.points.empty() || b.points.empty()) throw Error("hausdorff distance of an empty cloud");
    return std::max(directed_hausdorff(a, b), directed_hausdorff(b, a));
}

double hausdorff_to_segment(const PointCloud& a, double r) {
    if (a.points.empty()) throw Error("hausdorff distance of an empty cloud");
    if (r <= 0) throw Error("segment length must be positive");
    double cloud_to_seg = 0.0;
    for (const Complex& z : a.points) {
        double x = z.real(), y = z.imag();
        double d;
        if (x < -r)
            d = std::hypot(x + r, y);
        else if (x > 0)
            d = std::hypot(x, y);
        else
            d = std::abs(y);
        cloud_to_seg = std::max(cloud_to_seg, d);
    }
    double seg_to_cloud = 0.0;
    const int samples = 10000;
    for (int i = 0; i <= samples; ++i) {
        Complex s(-r + r * static_cast<double>(i) / samples, 0.0);
        seg_to_cloud = std::max(seg_to_cloud, nearest_dist(a, s));
    }
    return std::max(cloud_to_seg, seg_to_cloud);
}

FixedPointClass classify_fixed_point(const IntPoly& p, Complex z0) {
    Complex image = evaluate(p, z0);
    if (std::abs(image - z0) > 1e-9)
        throw Error("classify_fixed_point: point is not fixed (|p(z0)-z0| = " +
                    std::to_string(std::abs(image - z0)) + ")");
    Complex lambda = evaluate(derivative(p), z0);
    double mod = std::abs(lambda);
    FixedPointKind kind;
    if (mod <= 1e-9)
        kind = FixedPointKind::SuperAttracting;
    else if (mod < 1.0 - 1e-9)
        kind = FixedPointKind::Attracting;
    else if (mod > 1.0 + 1e-9)
        kind = FixedPointKind::Repelling;
    else {
        kind = FixedPointKind::IrrationallyIndifferent;
        Complex pw(1.0, 0.0);
        for (int q = 1; q <= 64; ++q) {
            pw *= lambda;
            if (std::abs(pw - Complex(1.0, 0.0)) <= 1e-6) {
                kind = FixedPointKind::RationallyIndifferent;
                break;
            }
        }
    }
    return {kind, lambda};
}

Raster filled_julia_raster(const IntPoly& p, const Window& window, int width, int height,
                           int max_iter) {
    if (p.degree() < 2) throw Error("raster requires degree >= 2");
    if (width < 1 || height < 1) throw Error("raster dimensions must be positive");
    double sum = 0.0;
    for (int i = 0; i <= p.degree(); ++i) sum += std::abs(p.coeff(i).get_d());
    // escape radius: |P(z)| > |z| is guaranteed outside
    const double radius = std::max(2.0, 1.0 + sum / std::abs(p.leading().get_d()));
    const double r2 = radius * radius;

    std::vector<double> coeffs(p.degree() + 1);
    for (int i = 0; i <= p.degree(); ++i) coeffs[i] = p.coeff(i).get_d();

    Raster rast;
    rast.width = width;
    rast.height = height;
    rast.window = window;
    rast.values.assign(static_cast<std::size_t>(width) * height, 0);
    for (int py = 0; py < height; ++py) {
        double y = window.y1 - (window.y1 - window.y0) * (py + 0.5) / height;
        for (int px = 0; px < width; ++px) {
            double x = window.x0 + (window.x1 - window.x0) * (px + 0.5) / width;
            Complex z(x, y);
            int escape = 0;
            for (int it = 1; it <= max_iter; ++it) {
                Complex acc(coeffs[p.degree()], 0.0);
                for (int i = p.degree() - 1; i >= 0; --i) acc = acc * z + coeffs[i];
                z = acc;
                if (z.real() * z.real() + z.imag() * z.imag() > r2) {
                    escape = it;
                    break;
                }
            }
            rast.values[static_cast<std::size_t>(py) * width + px] = escape;
        }
    }
    return rast;
}

void write_cloud_csv(const PointCloud& c, std::ostream& out) {
    char buf[80];
    for (const Complex& z : c.points) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", z.real(), z.imag());
        out << buf;
    }
}

namespace {

void hsv_to_rgb(double h, unsigned char rgb[3]) {
    // s = v = 1
    double hh = h / 60.0;
    int i = static_cast<int>(hh) % 6;
    double f = hh - std::floor(hh);
    double q = 1.0 - f, t = f;
    double r, g, b;
    switch (i) {
        case 0: r = 1, g = t, b = 0; break;
        case 1: r = q, g = 1, b = 0; break;
        case 2: r = 0, g = 1, b = t; break;
        case 3: r = 0, g = q, b = 1; break;
        case 4: r = t, g = 0, b = 1; break;
        default: r = 1, g = 0, b = q; break;
    }
    rgb[0] = static_cast<unsigned char>(255.0 * r);
    rgb[1] = static_cast<unsigned char>(255.0 * g);
    rgb[2] = static_cast<unsigned char>(255.0 * b);
}

} // namespace

void write_ppm(const Raster& r, std::ostream& out) {
    out << "P6\n" << r.width << " " << r.height << "\n255\n";
    for (int v : r.values) {
        unsigned char rgb[3] = {0, 0, 0};
        if (v > 0) hsv_to_rgb(static_cast<double>((9 * v) % 360), rgb);
        out.write(reinterpret_cast<const char*>(rgb), 3);
    }
}

} // namespace indatt
