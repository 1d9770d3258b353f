// Command-line front end: independence polynomials, attractor orbits and
// classification, Chebyshev segment candidates, the component tables and the
// complement enumeration, all on graph6 input.

#include <cmath>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "indatt/chebyshev.hpp"
#include "indatt/classifier.hpp"
#include "indatt/dynamics.hpp"
#include "indatt/graph.hpp"
#include "indatt/poly.hpp"
#include "indatt/search.hpp"

using nlohmann::json;
using namespace indatt;

namespace {

struct CliConfig {
    int threads = 0;
    int depth = 12;
    std::size_t cap = 200000;
    double tol = 1e-12;
    std::string out_path;
};

void validate(const CliConfig& cfg) {
    if (cfg.tol <= 0) throw CLI::ValidationError("--tol must be positive");
    if (cfg.depth < 1 || cfg.depth > 20) throw CLI::ValidationError("--depth must be in 1..20");
    if (cfg.cap < 1 || cfg.cap > 1000000) throw CLI::ValidationError("--cap must be in 1..10^6");
}

std::ostream& output_stream(const CliConfig& cfg, std::ofstream& file, std::ios::openmode mode) {
    if (cfg.out_path.empty()) return std::cout;
    file.open(cfg.out_path, mode);
    if (!file) throw Error("cannot open output file " + cfg.out_path);
    return file;
}

const char* case_name(CaseKind k) {
    switch (k) {
        case CaseKind::FourComponents: return "4comp";
        case CaseKind::ThreeComponents: return "3comp";
        case CaseKind::TwoComponents22: return "2comp22";
        case CaseKind::TwoComponents13: return "2comp13";
    }
    return "?";
}

int run_verify();

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"independence attractors of graphs"};
    app.require_subcommand(1);
    CliConfig cfg;
    app.add_option("--threads", cfg.threads, "worker threads (0 = auto)");

    // ipoly
    std::string g6, g6b;
    bool reduced_flag = false;
    auto* ipoly_cmd = app.add_subcommand("ipoly", "independence polynomial of a graph");
    ipoly_cmd->add_option("graph6", g6, "graph6 line")->required();
    ipoly_cmd->add_flag("--reduced", reduced_flag, "subtract the constant term");

    // product
    auto* product_cmd = app.add_subcommand("product", "lexicographic product (graph6 out)");
    product_cmd->add_option("graph6", g6, "left factor")->required();
    product_cmd->add_option("graph6b", g6b, "right factor")->required();

    // power
    int power_m = 2;
    auto* power_cmd = app.add_subcommand("power", "independence polynomial of the m-fold product");
    power_cmd->add_option("graph6", g6, "graph6 line")->required();
    power_cmd->add_option("-m", power_m, "product exponent")->required();

    // attractor
    bool all_levels = false;
    std::string raster_path;
    std::vector<double> win{-4.5, 0.5, -1.5, 1.5};
    int raster_w = 800, raster_h = 600, raster_iter = 200;
    auto* attractor_cmd = app.add_subcommand("attractor", "backward-orbit point cloud (CSV)");
    attractor_cmd->add_option("graph6", g6, "graph6 line")->required();
    attractor_cmd->add_option("--depth", cfg.depth, "backward iteration depth (<= 20)");
    attractor_cmd->add_option("--cap", cfg.cap, "per-level point cap (<= 10^6)");
    attractor_cmd->add_option("--tol", cfg.tol, "root solver tolerance");
    attractor_cmd->add_option("--out", cfg.out_path, "write CSV here instead of stdout");
    attractor_cmd->add_flag("--all-levels", all_levels, "emit every level, blank-line separated");
    attractor_cmd->add_option("--raster", raster_path, "also render the filled Julia set (PPM)");
    attractor_cmd->add_option("--window", win, "raster window: x0 x1 y0 y1")->expected(4);
    attractor_cmd->add_option("--width", raster_w, "raster width");
    attractor_cmd->add_option("--height", raster_h, "raster height");
    attractor_cmd->add_option("--max-iter", raster_iter, "raster iteration budget");

    // classify
    bool as_json = false;
    auto* classify_cmd = app.add_subcommand("classify", "attractor classification report");
    classify_cmd->add_option("graph6", g6, "graph6 line")->required();
    classify_cmd->add_flag("--json", as_json, "emit a JSON object");
    classify_cmd->add_option("--depth", cfg.depth, "corroboration depth");
    classify_cmd->add_option("--cap", cfg.cap, "corroboration point cap");

    // cheb
    int cheb_n = 0, cheb_k = 0;
    auto* cheb_cmd = app.add_subcommand("cheb", "Chebyshev segment candidates");
    cheb_cmd->add_option("--n", cheb_n, "degree")->required();
    cheb_cmd->add_option("--k", cheb_k, "segment index 1..4 (omit for T_n itself)");

    // tables
    int table_k = 0;
    std::string table_case;
    bool dedup = false;
    auto* tables_cmd = app.add_subcommand("tables", "component analysis rows");
    tables_cmd->add_option("--k", table_k, "segment index 1..4")->required();
    tables_cmd->add_option("--case", table_case, "one of 4comp 3comp 2comp22 2comp13")->required();
    tables_cmd->add_flag("--dedup", dedup, "collapse symmetric rows");

    // enumerate
    std::string poly_text;
    bool co_connected = false;
    auto* enum_cmd = app.add_subcommand("enumerate", "graphs matching a target polynomial's complement counts");
    enum_cmd->add_option("--poly", poly_text, "target polynomial, e.g. \"1+12z+9z^2\"")->required();
    enum_cmd->add_flag("--co-connected", co_connected, "require the complement to be connected");

    // verify
    app.add_subcommand("verify", "run the built-in invariant suite");

    try {
        app.parse(argc, argv);
        validate(cfg);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (ipoly_cmd->parsed()) {
            IntPoly p = independence_polynomial(parse_graph6(g6));
            std::cout << to_string(reduced_flag ? reduced(p) : p) << "\n";
        } else if (product_cmd->parsed()) {
            std::cout << write_graph6(lexicographic_product(parse_graph6(g6), parse_graph6(g6b)))
                      << "\n";
        } else if (power_cmd->parsed()) {
            if (power_m < 1) throw Error("power exponent must be positive");
            IntPoly base = reduced(independence_polynomial(parse_graph6(g6)));
            // refuse exponents whose result would trip the coefficient guard:
            // coefficient sizes grow like log10(sum |a_i|) * alpha^(m-1) and the
            // term count like alpha^m
            double sum = 0;
            for (int i = 0; i <= base.degree(); ++i) sum += std::abs(base.coeff(i).get_d());
            double est_digits = std::log10(std::max(sum, 2.0)) *
                                std::pow(double(base.degree()), power_m - 1);
            double est_terms = std::pow(double(base.degree()), power_m);
            if (est_digits > double(coefficient_digit_limit()) || est_terms > 2e7) {
                std::cerr << "error(poly): exponent " << power_m
                          << " would trip the coefficient guard; use `attractor` when "
                             "only the roots are wanted\n";
                return 1;
            }
            IntPoly acc = base;
            try {
                for (int i = 1; i < power_m; ++i) acc = compose(base, acc);
            } catch (const CoefficientLimitError&) {
                std::cerr << "error(poly): coefficient guard tripped at this exponent; "
                             "use `attractor` when only the roots are wanted\n";
                return 1;
            }
            std::cout << to_string(acc + IntPoly{1}) << "\n";
        } else if (attractor_cmd->parsed()) {
            Graph g = parse_graph6(g6);
            IntPoly p = reduced(independence_polynomial(g));
            if (!raster_path.empty()) {
                Raster r = filled_julia_raster(p, {win[0], win[1], win[2], win[3]}, raster_w,
                                               raster_h, raster_iter);
                std::ofstream f(raster_path, std::ios::binary);
                if (!f) throw Error("cannot open raster file " + raster_path);
                write_ppm(r, f);
            }
            BackwardOrbit orbit =
                backward_orbit(p, Complex(-1.0, 0.0), cfg.depth, cfg.cap, cfg.tol, cfg.threads);
            std::ofstream file;
            std::ostream& out = output_stream(cfg, file, std::ios::out);
            if (all_levels) {
                for (const OrbitLevel& level : orbit.levels) {
                    write_cloud_csv(level.cloud, out);
                    out << "\n";
                }
            } else {
                write_cloud_csv(orbit.levels.back().cloud, out);
            }
            if (orbit.any_thinned())
                std::cerr << "note: levels beyond the point cap were thinned deterministically\n";
        } else if (classify_cmd->parsed()) {
            Graph g = parse_graph6(g6);
            ClassifyOptions opts;
            if (classify_cmd->count("--depth")) opts.depth = cfg.depth;
            if (classify_cmd->count("--cap")) opts.cap = cfg.cap;
            opts.threads = cfg.threads;
            AttractorReport rep = attractor_report(g, opts);
            if (as_json) {
                json j;
                j["schema"] = "indatt/1";
                j["alpha"] = rep.alpha;
                j["class"] = to_string(rep.klass);
                j["minusOneMultiplicity"] = rep.minus_one_multiplicity;
                j["fractalRelation"] = to_string(rep.fractal_relation);
                j["connected"] = rep.connected;
                if (rep.klass == AttractorClass::Segment) {
                    j["k"] = rep.k;
                    j["segment"] = {rep.segment_left(), 0.0};
                } else {
                    j["k"] = nullptr;
                    j["segment"] = nullptr;
                }
                if (rep.numeric) {
                    j["hausdorffToSegment"] = rep.numeric->hausdorff_to_segment;
                    j["depth"] = rep.numeric->depth;
                } else {
                    j["hausdorffToSegment"] = nullptr;
                    j["depth"] = nullptr;
                }
                std::cout << j.dump() << "\n";
            } else {
                std::cout << "class=" << to_string(rep.klass);
                if (rep.klass == AttractorClass::Segment) {
                    std::ostringstream seg;
                    seg << "[" << rep.segment_left() << ",0]";
                    std::cout << " k=" << rep.k << " segment=" << seg.str();
                }
                std::cout << " alpha=" << rep.alpha
                          << " minusOneMultiplicity=" << rep.minus_one_multiplicity
                          << " fractalRelation=" << to_string(rep.fractal_relation)
                          << " connected=" << (rep.connected ? "true" : "false");
                if (rep.numeric)
                    std::cout << " hausdorffToSegment=" << rep.numeric->hausdorff_to_segment
                              << " depth=" << rep.numeric->depth;
                std::cout << "\n";
            }
        } else if (cheb_cmd->parsed()) {
            if (cheb_cmd->count("--k")) {
                if (cheb_k < 1 || cheb_k > 4) throw Error("segment index k must be in 1..4");
                std::cout << to_string(segment_candidates(cheb_n).at(cheb_k)) << "\n";
            } else {
                std::cout << to_string(chebyshev(cheb_n)) << "\n";
            }
        } else if (tables_cmd->parsed()) {
            CaseKind kind;
            if (table_case == "4comp") kind = CaseKind::FourComponents;
            else if (table_case == "3comp") kind = CaseKind::ThreeComponents;
            else if (table_case == "2comp22") kind = CaseKind::TwoComponents22;
            else if (table_case == "2comp13") kind = CaseKind::TwoComponents13;
            else throw Error("unknown case " + table_case);
            auto rows = solve_components(kind, table_k);
            if (dedup) rows = dedup_symmetric(std::move(rows));
            for (const ComponentSolution& row : rows) {
                for (std::size_t i = 0; i < row.params.size(); ++i)
                    std::cout << (i ? " " : "") << row.params[i];
                std::cout << "  ";
                for (const IntPoly& f : row.factors) std::cout << "(" << to_string(f) << ")";
                std::cout << "\n";
            }
            std::cerr << rows.size() << " row(s) for k=" << table_k << " case="
                      << case_name(kind) << "\n";
        } else if (enum_cmd->parsed()) {
            IntPoly target = parse_poly(poly_text);
            if (target.coeff(0) != 1 || target.degree() < 2 || target.degree() > 4)
                throw Error("enumeration target must be 1 + n z + ... of degree 2..4");
            EnumConstraints c;
            c.vertices = static_cast<int>(target.coeff(1).get_si());
            c.complement_edges = static_cast<int>(target.coeff(2).get_si());
            c.complement_triangles = static_cast<int>(target.coeff(3).get_si());
            c.complement_k4 = static_cast<int>(target.coeff(4).get_si());
            c.require_co_connected = co_connected;
            auto graphs = enumerate_complements(c);
            for (const Graph& g : graphs) std::cout << write_graph6(g) << "\n";
            std::cerr << graphs.size() << " graph(s)\n";
        } else { // verify
            return run_verify();
        }
    } catch (const Graph6Error& e) {
        std::cerr << "error(graph6): " << e.what() << "\n";
        return 1;
    } catch (const EnumCapError& e) {
        std::cerr << "error(search): " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

// ---------------------------------------------------------------------------
// verify: the cross-module invariant battery. Exits nonzero iff a check fails.

namespace {

struct Verifier {
    int passed = 0, failed = 0;
    void check(const std::string& name, bool ok) {
        std::cout << (ok ? "[PASS] " : "[FAIL] ") << name << "\n";
        ++(ok ? passed : failed);
    }
};

Graph random_graph(std::mt19937_64& rng, int n, double p) {
    Graph g(n);
    std::bernoulli_distribution coin(p);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

int run_verify() {
    Verifier v;
    std::mt19937_64 rng(20240817);

    {
        bool ok = true;
        for (int i = 0; i < 200 && ok; ++i) {
            int n = 1 + static_cast<int>(rng() % 12);
            Graph g = random_graph(rng, n, 0.4);
            ok = parse_graph6(write_graph6(g)) == g;
        }
        v.check("graph6 round-trip on random graphs", ok);
    }
    {
        bool ok = true;
        for (int i = 0; i < 300 && ok; ++i) {
            int n = 1 + static_cast<int>(rng() % 12);
            GraphStats s = graph_stats(random_graph(rng, n, 0.5));
            long long lhs5 = s.edge_far_pair_count + 2 * s.open_wedge_count + 3 * s.triangle_count;
            ok = lhs5 == static_cast<long long>(s.vertex_count - 2) * s.edge_count &&
                 2 * s.open_wedge_count + 6 * s.triangle_count ==
                     -2 * s.edge_count + s.degree_sq_sum;
            if (ok && 4 * s.edge_count > static_cast<long long>(s.vertex_count) * s.vertex_count)
                ok = 3 * s.vertex_count * s.triangle_count >=
                     s.edge_count * (4 * s.edge_count -
                                     static_cast<long long>(s.vertex_count) * s.vertex_count);
        }
        v.check("edge/wedge/triangle identities and triangle bound", ok);
    }
    {
        bool ok = true;
        for (int i = 0; i < 50 && ok; ++i) {
            Graph a = random_graph(rng, 1 + static_cast<int>(rng() % 8), 0.5);
            Graph b = random_graph(rng, 1 + static_cast<int>(rng() % 8), 0.5);
            ok = independence_polynomial(disjoint_union(a, b)) ==
                 multiply(independence_polynomial(a), independence_polynomial(b));
        }
        v.check("independence polynomial multiplicative over disjoint union", ok);
    }
    {
        bool ok = true;
        for (int i = 0; i < 8 && ok; ++i) {
            Graph g = random_graph(rng, 2 + static_cast<int>(rng() % 6), 0.5);
            IntPoly ig = independence_polynomial(g);
            IntPoly left = independence_polynomial(lexicographic_product_wide(g, g));
            ok = left == compose(ig, ig - IntPoly{1});
        }
        v.check("composition identity I_{G[G]} = I_G(I_G - 1)", ok);
    }
    {
        bool ok = true;
        for (int i = 0; i < 100 && ok; ++i) {
            int n = 1 + static_cast<int>(rng() % 10);
            Graph g = random_graph(rng, n, 0.5);
            ok = independence_polynomial(g) == independence_polynomial_subsets(g);
        }
        v.check("branching vs subset-enumeration cross-check", ok);
    }
    {
        bool ok = true;
        for (int n = 1; n <= 64 && ok; ++n) {
            IntPoly t = chebyshev(n);
            ok = evaluate_exact(t, BigInt(1)) == 1 && t.leading() == (BigInt(1) << (n - 1)) &&
                 (n < 2 || t.coeff(n - 1) == 0);
        }
        v.check("Chebyshev values at 1 and extreme coefficients", ok);
    }
    {
        bool ok = true;
        for (int n = 2; n <= 8 && ok; ++n)
            for (int k = 1; k <= 4 && ok; ++k) {
                // 2^n * (a P + 1) == 2^n * T_n(a z + 1) with a = k/2, cleared of denominators
                IntPoly p = segment_candidates(n).at(k);
                IntPoly lhs = multiply(IntPoly::constant(BigInt(k)), p) + IntPoly{2}; // 2(aP + 1)
                IntPoly kz2 = IntPoly{2, k};                                          // 2(az+1)
                // compare 2^n T_n(az+1) with expanded scaled form
                IntPoly rhs;
                {
                    IntPoly t = chebyshev(n);
                    // T_n(w/2) * 2^n where w = kz + 2: substitute and scale exactly
                    IntPoly acc = IntPoly::constant(t.leading());
                    for (int i = n - 1; i >= 0; --i)
                        acc = multiply(acc, kz2) + IntPoly::constant(t.coeff(i) * (BigInt(1) << (n - i)));
                    rhs = acc;
                }
                IntPoly lhs_scaled = multiply(lhs, IntPoly::constant(BigInt(1) << (n - 1)));
                ok = lhs_scaled == rhs;
            }
        v.check("conjugacy identity a*P + 1 = T_n(a z + 1)", ok);
    }
    {
        bool ok = true;
        for (int n = 3; n <= 20 && ok; ++n) {
            BigInt lhs = 1;
            for (int i = 0; i < n - 1; ++i) lhs *= 6;
            BigInt rhs = 1;
            for (int i = 0; i < n; ++i) rhs = rhs * (BigInt(n) * n - i) / (i + 1);
            ok = lhs < rhs;
        }
        v.check("6^(n-1) below the central binomial bound", ok);
    }
    {
        bool ok = true;
        for (int n = 2; n <= 50 && ok; ++n) ok = exclude_k5(n).violated;
        v.check("a = 5/2 conjugates violate the triangle bound", ok);
    }
    {
        bool ok = solve_components(CaseKind::ThreeComponents, 3).size() == 2 &&
                  solve_components(CaseKind::TwoComponents22, 4).size() == 1 &&
                  solve_components(CaseKind::TwoComponents22, 2).empty() &&
                  solve_components(CaseKind::FourComponents, 4).empty();
        v.check("component table spot checks", ok);
    }
    {
        bool ok = true;
        IntPoly p = segment_candidates(3).at(4); // 9z + 24z^2 + 16z^3
        BackwardOrbit orbit = backward_orbit(p, Complex(-1.0, 0.0), 8, 200000);
        for (const OrbitLevel& level : orbit.levels) {
            for (const Complex& z : level.cloud.points) {
                if (z.imag() == 0.0 && z.real() > 1e-9) ok = false; // no positive reals
                bool mirrored = false;
                for (const Complex& w : level.cloud.points)
                    if (std::abs(w - std::conj(z)) <= 1e-7) {
                        mirrored = true;
                        break;
                    }
                if (!mirrored) ok = false;
            }
        }
        ok = ok && hausdorff_to_segment(orbit.levels.back().cloud, 1.0) < 0.2;
        v.check("orbit clouds: conjugation symmetry, no positive reals, near segment", ok);
    }
    {
        AttractorReport rep = attractor_report(disjoint_union(
            disjoint_union(complete_graph(4), complete_graph(4)), complete_graph(1)));
        bool ok = rep.klass == AttractorClass::Segment && rep.k == 4 &&
                  rep.minus_one_multiplicity == 1;
        rep = attractor_report(complete_graph(7));
        ok = ok && rep.klass == AttractorClass::PointZero;
        rep = attractor_report(edgeless_graph(5));
        ok = ok && rep.klass == AttractorClass::PointMinusOne &&
             circle_check(reduced(independence_polynomial(edgeless_graph(5))));
        v.check("classifier spot checks", ok);
    }

    std::cout << v.passed << " passed, " << v.failed << " failed\n";
    return v.failed == 0 ? 0 : 1;
}

} // namespace
