// Batch front door: compute measures, enumerate involutions, run the
// verification suites, sample boundary curves and render the region.
// File-based in and out; no interactive mode.

#include <cstdio>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "phirho/bounds.hpp"
#include "phirho/diagonals.hpp"
#include "phirho/families.hpp"
#include "phirho/grid_oracle.hpp"
#include "phirho/io.hpp"
#include "phirho/rearrange.hpp"
#include "phirho/segment_map.hpp"
#include "phirho/shuffles.hpp"
#include "phirho/verify.hpp"

namespace {

using namespace phirho;

constexpr int kEnumerationCeiling = 10;

void emit(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    write_file(out_path, text);
}

std::string dash_label(const Permutation& p) {
    std::string out;
    for (int i = 1; i <= p.size(); ++i) {
        if (i > 1) out += '-';
        out += std::to_string(p(i));
    }
    return out;
}

double diagonal_at(const Diagonal& d, double t) {
    const auto& xs = d.breakpoints();
    const auto& ys = d.values();
    if (t <= 0.0) return 0.0;
    if (t >= 1.0) return 1.0;
    for (std::size_t j = 0; j + 1 < xs.size(); ++j) {
        const double lo = xs[j].to_double();
        const double hi = xs[j + 1].to_double();
        if (t <= hi) {
            const double ylo = ys[j].to_double();
            const double yhi = ys[j + 1].to_double();
            return ylo + (yhi - ylo) * (t - lo) / (hi - lo);
        }
    }
    return 1.0;
}

CdfCallable diagonal_copula_cdf(Diagonal d) {
    return [d = std::move(d)](double u, double v) {
        return std::min({u, v, 0.5 * (diagonal_at(d, u) + diagonal_at(d, v))});
    };
}

CdfCallable segment_map_cdf(SegmentMap m) {
    return [m = std::move(m)](double u, double v) { return cdf(m, u, v); };
}

// Ordinal sum of rescaled copies of one diagonal copula, comonotone outside
// the blocks.
CdfCallable ordinal_cdf(const OrdinalInterpolation& fam, Diagonal component) {
    std::vector<std::pair<double, double>> blocks;
    for (const OrdinalBlock& b : fam.blocks)
        blocks.emplace_back(b.lo.to_double(), b.hi.to_double());
    return [blocks, component = std::move(component)](double u, double v) {
        const double m = std::min(u, v);
        for (const auto& [lo, hi] : blocks) {
            if (m < lo || m > hi) continue;
            const double w = hi - lo;
            const double cu = std::min((u - lo) / w, 1.0);
            const double cv = std::min((v - lo) / w, 1.0);
            return lo + w * std::min({cu, cv, 0.5 * (diagonal_at(component, cu) +
                                                     diagonal_at(component, cv))});
        }
        return m;
    };
}

struct MeasuresInput {
    std::string description;
    Rational phi;
    Rational rho;
    CdfCallable cdf;
};

MeasuresInput from_family(const FamilySpec& spec) {
    switch (spec.family) {
        case Family::c_alpha: {
            const EndReflection fam = end_reflection(spec.parameter);
            return {"family c_alpha (parameter = " + spec.parameter.str() + ")", fam.stats.phi,
                    fam.stats.rho, segment_map_cdf(fam.support)};
        }
        case Family::rising: {
            const RisingDiagonal fam = rising_diagonal(spec.parameter);
            return {"family rising (parameter = " + spec.parameter.str() + ")", fam.stats.phi,
                    fam.stats.rho, diagonal_copula_cdf(fam.diagonal)};
        }
        case Family::plateau: {
            const PlateauDiagonal fam = plateau_diagonal(spec.parameter);
            return {"family plateau (parameter = " + spec.parameter.str() + ")", fam.stats.phi,
                    fam.stats.rho, diagonal_copula_cdf(fam.diagonal)};
        }
        case Family::interpolation: {
            if (!spec.parameter.is_integer())
                throw std::invalid_argument("interpolation parameter must be an integer");
            const long n = spec.parameter.to_long();
            const OrdinalInterpolation fam = ordinal_interpolation(static_cast<int>(n));
            const Diagonal component = rising_diagonal(Rational(n, 2 * n + 2)).diagonal;
            return {"family interpolation (blocks = " + std::to_string(n) + ")", fam.stats.phi,
                    fam.stats.rho, ordinal_cdf(fam, component)};
        }
    }
    throw std::invalid_argument("unknown family");
}

MeasuresInput from_file(const std::string& path) {
    const std::string text = read_file(path);
    switch (classify_input(text)) {
        case InputKind::permutation: {
            const Permutation p = parse_permutation(text);
            return {"permutation (n = " + std::to_string(p.size()) + ")", shuffle_phi(p),
                    shuffle_rho(p), segment_map_cdf(shuffle_support(p))};
        }
        case InputKind::segment_map: {
            const SegmentMap m = parse_segment_map(text);
            return {"segment map (" + std::to_string(m.pieces().size()) + " pieces)",
                    phi_exact(m), rho_exact(m), segment_map_cdf(m)};
        }
        case InputKind::zero_two: {
            const ZeroTwoDiagonal d = parse_zero_two(text);
            const Involution pi = diagonal_to_shuffle(d);
            return {"slope pattern " + d.pattern(), shuffle_phi(pi), shuffle_rho(pi),
                    segment_map_cdf(shuffle_support(pi))};
        }
        case InputKind::family_spec:
            return from_family(parse_family_spec(text));
        case InputKind::diagonal:
            throw std::invalid_argument(
                "bare diagonal records carry no exact rho route here; encode the diagonal as a "
                "slope pattern or a family spec");
    }
    throw std::invalid_argument("unrecognized input record");
}

int run_measures(const std::string& in_path, const std::string& alpha, const std::string& a,
                 const std::string& b, int blocks, int grid, const std::string& out_path) {
    const int sources = (!in_path.empty()) + (!alpha.empty()) + (!a.empty()) + (!b.empty()) +
                        (blocks > 0);
    if (sources != 1)
        throw std::invalid_argument(
            "measures needs exactly one input: --in, --alpha, --a, --b or --N");

    MeasuresInput input;
    if (!in_path.empty()) {
        input = from_file(in_path);
    } else if (!alpha.empty()) {
        input = from_family({Family::c_alpha, Rational::parse(alpha)});
    } else if (!a.empty()) {
        input = from_family({Family::rising, Rational::parse(a)});
    } else if (!b.empty()) {
        input = from_family({Family::plateau, Rational::parse(b)});
    } else {
        input = from_family({Family::interpolation, Rational(blocks)});
    }

    std::string report;
    report += "input: " + input.description + "\n";
    report += "phi = " + input.phi.str() + " = " + format_double(input.phi.to_double()) + "\n";
    report += "rho = " + input.rho.str() + " = " + format_double(input.rho.to_double()) + "\n";
    if (grid > 0) {
        const GridOracleConfig cfg{grid};
        const Estimate ephi = phi_numeric(input.cdf, cfg);
        const Estimate erho = rho_numeric(input.cdf, cfg);
        report += "grid resolution = " + std::to_string(grid) + "\n";
        report += "phi_grid = " + format_double(ephi.value) + " (error bound = " +
                  ephi.error_bound.str() + " = " + format_double(ephi.error_bound.to_double()) +
                  ")\n";
        report += "rho_grid = " + format_double(erho.value) + " (error bound = " +
                  erho.error_bound.str() + " = " + format_double(erho.error_bound.to_double()) +
                  ")\n";
    }
    emit(out_path, report);
    return 0;
}

int run_enumerate(int n, const std::string& out_path) {
    std::vector<PointRow> rows;
    for_each_involution(n, [&rows](const Involution& p) {
        const Rational phi = shuffle_phi(p);
        const Rational rho = shuffle_rho(p);
        const RegionPoint pt = make_region_point(phi, rho);
        rows.push_back(PointRow{dash_label(p), phi, rho,
                                check_upper(pt) == BoundCheck::equality,
                                check_lower(pt) == BoundCheck::equality});
    });
    emit(out_path, points_csv(rows));
    return 0;
}

int run_verify(const std::string& suite, int n_max, std::uint64_t seed,
               const std::string& out_path) {
    std::vector<std::string> suites;
    if (suite == "all")
        suites = suite_names();
    else
        suites.push_back(suite);

    std::string report;
    int failures = 0;
    int checks = 0;
    for (const std::string& s : suites) {
        for (const CheckResult& r : verify_suite(s, n_max, seed)) {
            ++checks;
            if (!r.pass) ++failures;
            report += std::string(r.pass ? "PASS" : "FAIL") + "\t" + s + "/" + r.name + "\t" +
                      r.detail + "\n";
        }
    }
    report += std::to_string(checks) + " checks, " + std::to_string(failures) + " failures\n";
    emit(out_path, report);
    return failures == 0 ? 0 : 1;
}

int run_boundary(const std::string& curve, int samples, const std::string& out_path) {
    std::vector<CurveRow> rows;
    const long m = samples - 1;
    for (long i = 0; i <= m; ++i) {
        const Rational x(3 * i - m, 2 * m);  // uniform over [-1/2, 1]
        double y = 0.0;
        if (curve == "lower")
            y = lower_bound(x).to_double();
        else if (curve == "upper")
            y = upper_bound(x).to_double();
        else if (curve == "r")
            y = reference_envelope(x).to_double();
        else if (curve == "s")
            y = refined_envelope(x).to_double();
        else
            throw std::invalid_argument("unknown curve \"" + curve +
                                        "\" (expected lower, upper, r or s)");
        rows.push_back(CurveRow{curve, x.to_double(), y});
    }
    emit(out_path, curves_csv(rows));
    return 0;
}

std::string svg_num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

int run_render(const std::vector<std::string>& in_paths, const std::string& out_path) {
    std::vector<PointRow> points;
    std::vector<std::string> curve_order;
    std::map<std::string, std::vector<CurveRow>> curves;
    for (const std::string& path : in_paths) {
        const std::string text = read_file(path);
        std::size_t pos = 0;
        while (pos < text.size() && (text[pos] == '#' || text[pos] == '\n'))
            pos = text.find('\n', pos) == std::string::npos ? text.size()
                                                            : text.find('\n', pos) + 1;
        if (text.compare(pos, 6, "curve,") == 0) {
            for (CurveRow& row : parse_curves_csv(text)) {
                if (curves.find(row.curve) == curves.end()) curve_order.push_back(row.curve);
                curves[row.curve].push_back(row);
            }
        } else {
            for (PointRow& row : parse_points_csv(text)) points.push_back(std::move(row));
        }
    }

    const double left = 70, top = 30, w = 740, h = 520;
    const auto mx = [&](double phi) { return left + (phi + 0.5) / 1.5 * w; };
    const auto my = [&](double rho) { return top + (1.0 - rho) / 2.0 * h; };
    const std::vector<std::string> palette = {"#1f77b4", "#d62728", "#2ca02c",
                                              "#9467bd", "#ff7f0e", "#8c564b"};

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 840 600\" "
           "font-family=\"sans-serif\" font-size=\"13\">\n";
    svg += "<rect width=\"840\" height=\"600\" fill=\"white\"/>\n";
    for (double phi : {-0.5, -0.25, 0.0, 0.25, 0.5, 0.75, 1.0}) {
        const std::string x = svg_num(mx(phi));
        svg += "<line x1=\"" + x + "\" y1=\"" + svg_num(top) + "\" x2=\"" + x + "\" y2=\"" +
               svg_num(top + h) + "\" stroke=\"#ddd\"/>\n";
        svg += "<text x=\"" + x + "\" y=\"" + svg_num(top + h + 18) +
               "\" text-anchor=\"middle\">" + svg_num(phi) + "</text>\n";
    }
    for (double rho : {-1.0, -0.5, 0.0, 0.5, 1.0}) {
        const std::string y = svg_num(my(rho));
        svg += "<line x1=\"" + svg_num(left) + "\" y1=\"" + y + "\" x2=\"" + svg_num(left + w) +
               "\" y2=\"" + y + "\" stroke=\"#ddd\"/>\n";
        svg += "<text x=\"" + svg_num(left - 8) + "\" y=\"" + y +
               "\" text-anchor=\"end\" dominant-baseline=\"middle\">" + svg_num(rho) +
               "</text>\n";
    }
    svg += "<rect x=\"" + svg_num(left) + "\" y=\"" + svg_num(top) + "\" width=\"" + svg_num(w) +
           "\" height=\"" + svg_num(h) + "\" fill=\"none\" stroke=\"#333\"/>\n";
    svg += "<text x=\"" + svg_num(left + w / 2) + "\" y=\"592\" text-anchor=\"middle\">phi</text>\n";
    svg += "<text x=\"16\" y=\"" + svg_num(top + h / 2) +
           "\" text-anchor=\"middle\" transform=\"rotate(-90 16 " + svg_num(top + h / 2) +
           ")\">rho</text>\n";

    std::size_t color = 0;
    for (const std::string& name : curve_order) {
        const std::string& stroke = palette[color % palette.size()];
        ++color;
        std::string pts;
        for (const CurveRow& row : curves[name]) {
            if (!pts.empty()) pts += ' ';
            pts += svg_num(mx(row.x)) + "," + svg_num(my(row.y));
        }
        svg += "<polyline points=\"" + pts + "\" fill=\"none\" stroke=\"" + stroke +
               "\" stroke-width=\"1.8\"/>\n";
    }
    for (const PointRow& row : points) {
        const std::string fill = row.upper_equality   ? "#d62728"
                                 : row.lower_equality ? "#2ca02c"
                                                      : "#444";
        svg += "<circle cx=\"" + svg_num(mx(row.phi.to_double())) + "\" cy=\"" +
               svg_num(my(row.rho.to_double())) + "\" r=\"3\" fill=\"" + fill +
               "\" fill-opacity=\"0.75\"><title>" + row.label + "</title></circle>\n";
    }
    if (!curve_order.empty()) {
        double ly = top + 16;
        color = 0;
        for (const std::string& name : curve_order) {
            const std::string& stroke = palette[color % palette.size()];
            ++color;
            svg += "<line x1=\"" + svg_num(left + 12) + "\" y1=\"" + svg_num(ly - 4) + "\" x2=\"" +
                   svg_num(left + 40) + "\" y2=\"" + svg_num(ly - 4) + "\" stroke=\"" + stroke +
                   "\" stroke-width=\"1.8\"/>\n";
            svg += "<text x=\"" + svg_num(left + 46) + "\" y=\"" + svg_num(ly) + "\">" + name +
                   "</text>\n";
            ly += 18;
        }
    }
    svg += "</svg>\n";
    write_file(out_path, svg);
    return 0;
}

int run_rearrange(const std::string& in_path, const std::string& out_path) {
    const Permutation p = parse_permutation(read_file(in_path));
    const Involution pi = Involution::from_permutation(p);
    emit(out_path, rearrangement_report_json(pi));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact toolkit for the footrule/rho region of copulas"};
    app.require_subcommand(1);

    std::string in_path, out_path, alpha, a, b, suite, curve;
    std::vector<std::string> in_paths;
    int n = 0, n_max = 8, grid = 0, blocks = 0, samples = 256;
    std::uint64_t seed = 123456789;

    CLI::App* measures =
        app.add_subcommand("measures", "compute phi and rho for a permutation, support map, "
                                       "slope pattern or family");
    measures->add_option("--in", in_path, "input JSON record");
    measures->add_option("--alpha", alpha, "c_alpha family parameter in [0, 1/2]");
    measures->add_option("--a", a, "rising family parameter in [1/4, 1/2]");
    measures->add_option("--b", b, "plateau family parameter in [0, 1/4]");
    measures->add_option("--N", blocks, "interpolation family block count")
        ->check(CLI::Range(2, 1000));
    measures->add_option("--grid", grid, "also run the grid oracle at this resolution")
        ->check(CLI::Range(16, 1048576));
    measures->add_option("--out", out_path, "output file (default stdout)");

    CLI::App* enumerate =
        app.add_subcommand("enumerate", "CSV of region points for every involution of order n");
    enumerate->add_option("--n", n, "number of strips")
        ->required()
        ->check(CLI::Range(2, kEnumerationCeiling));
    enumerate->add_option("--out", out_path, "output file (default stdout)");

    CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("--suite", suite, "bounds, rearrange, roundtrip, families, boundary or all")
        ->required();
    verify->add_option("--n-max", n_max, "largest involution order for exhaustive checks")
        ->check(CLI::Range(2, kEnumerationCeiling));
    verify->add_option("--seed", seed, "seed for the sampled checks");
    verify->add_option("--out", out_path, "output file (default stdout)");

    CLI::App* boundary = app.add_subcommand("boundary", "sample a boundary curve to CSV");
    boundary->add_option("--curve", curve, "lower, upper, r or s")->required();
    boundary->add_option("--samples", samples, "sample count over [-1/2, 1]")
        ->check(CLI::Range(2, 1000000));
    boundary->add_option("--out", out_path, "output file (default stdout)");

    CLI::App* render =
        app.add_subcommand("render", "render point and curve CSVs to one SVG scatter");
    render->add_option("--in", in_paths, "points or curves CSV (repeatable)")->required();
    render->add_option("--out", out_path, "output SVG file")->required();

    CLI::App* rearrange =
        app.add_subcommand("rearrange", "canonical rearrangement report for an involution");
    rearrange->add_option("--in", in_path, "permutation JSON record")->required();
    rearrange->add_option("--out", out_path, "output file (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (measures->parsed())
            return run_measures(in_path, alpha, a, b, blocks, grid, out_path);
        if (enumerate->parsed()) return run_enumerate(n, out_path);
        if (verify->parsed()) return run_verify(suite, n_max, seed, out_path);
        if (boundary->parsed()) return run_boundary(curve, samples, out_path);
        if (render->parsed()) return run_render(in_paths, out_path);
        if (rearrange->parsed()) return run_rearrange(in_path, out_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
