#include "cli.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ostream.h>

#include "poncelet/errors.hpp"
#include "poncelet/invariants.hpp"
#include "poncelet/oracle.hpp"

namespace poncelet::cli {

namespace {

constexpr double kClosureTol = 1e-8;

std::string num(double x) { return fmt::format("{:.17g}", x); }

std::string opt_num(const std::optional<double>& x) { return x ? num(*x) : std::string(); }

void validate_config(const RunConfig& config) {
    if (config.samples < 8 && config.command != Command::Locus) {
        throw DomainError("--samples must be at least 8");
    }
    if (config.samples < 3) {
        throw DomainError("--samples must be at least 3");
    }
    if (!(config.tol > 0.0)) {
        throw DomainError("--tol must be positive");
    }
}

FamilySpec spec_of(const RunConfig& config) {
    FamilySpec spec{config.family, config.a, config.b, config.n, config.tau};
    spec.validate();
    return spec;
}

// Writes to `path`, or to `fallback` when path is "-".
template <typename Writer>
bool write_output(const std::string& path, std::ostream& fallback, Writer&& writer) {
    if (path == "-") {
        writer(fallback);
        return static_cast<bool>(fallback);
    }
    std::ofstream file(path, std::ios::out | std::ios::trunc);
    if (!file) {
        return false;
    }
    writer(file);
    file.flush();
    return static_cast<bool>(file);
}

}  // namespace

int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err) {
    std::vector<InvariantReport> reports;
    FamilySpec spec;
    try {
        validate_config(config);
        spec = spec_of(config);
        reports = sweep_all(spec, config.samples, config.tol);
    } catch (const DomainError& e) {
        err << "verify: " << e.what() << '\n';
        return kBadParameters;
    } catch (const GeometryError& e) {
        err << "verify: " << e.what() << '\n';
        return kBadParameters;
    }

    fmt::print(out, "family={} a={} b={}", to_string(spec.kind), num(spec.a), num(spec.b));
    if (spec.kind == FamilyKind::BilliardN) {
        fmt::print(out, " n={} tau={}", spec.n, spec.tau);
    }
    fmt::print(out, " samples={} tol={:g}\n", config.samples, config.tol);
    fmt::print(out, "{:<22}{:<26}{:<26}{:<12}{}\n", "quantity", "target", "mean", "max_dev", "status");
    bool all_pass = true;
    for (const auto& r : reports) {
        all_pass = all_pass && r.passed;
        fmt::print(out, "{:<22}{:<26}{:<26}{:<12.3e}{}\n", r.quantity,
                   r.closed_form_target ? num(*r.closed_form_target) : std::string("-"), num(r.mean),
                   r.max_abs_deviation, r.passed ? "pass" : "FAIL");
    }
    fmt::print(out, "{}\n", all_pass ? "all invariants pass" : "invariant check FAILED");
    return all_pass ? kOk : kInvariantFailure;
}

void write_locus_csv(std::ostream& os, const std::vector<LocusBlock>& blocks) {
    os << "family,a_over_b,param,c1,c2,c3,u,v,residual_cubic,residual_sphere,residual_titeica\n";
    for (const auto& block : blocks) {
        const auto family = to_string(block.family);
        for (const auto& s : block.samples) {
            fmt::print(os, "{},{},{},{},{},{},{},{},{},{},{}\n", family, num(block.a_over_b), num(s.param),
                       num(s.coords.x()), num(s.coords.y()), num(s.coords.z()), num(s.plane.u), num(s.plane.v),
                       opt_num(s.cubic), opt_num(s.sphere), opt_num(s.titeica));
        }
    }
}

void write_locus_svg(std::ostream& os, const std::vector<LocusBlock>& blocks) {
    static constexpr std::array<const char*, 6> kColors{"#1f77b4", "#d62728", "#2ca02c",
                                                        "#9467bd", "#ff7f0e", "#17becf"};
    double min_u = std::numeric_limits<double>::infinity();
    double max_u = -min_u;
    double min_v = min_u;
    double max_v = -min_u;
    for (const auto& block : blocks) {
        for (const auto& s : block.samples) {
            min_u = std::min(min_u, s.plane.u);
            max_u = std::max(max_u, s.plane.u);
            min_v = std::min(min_v, s.plane.v);
            max_v = std::max(max_v, s.plane.v);
        }
    }
    if (!std::isfinite(min_u)) {
        min_u = min_v = -1.0;
        max_u = max_v = 1.0;
    }
    const double span = std::max({max_u - min_u, max_v - min_v, 1e-6});
    const double margin = 0.05 * span;
    const double x0 = min_u - margin;
    const double y0 = -max_v - margin;  // SVG y grows downward
    const double w = (max_u - min_u) + 2.0 * margin;
    const double h = (max_v - min_v) + 2.0 * margin;
    const double stroke = 0.004 * span;

    fmt::print(os, "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"{} {} {} {}\">\n", num(x0), num(y0),
               num(std::max(w, 2.0 * margin)), num(std::max(h, 2.0 * margin)));
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        const auto& block = blocks[i];
        std::ostringstream d;
        for (std::size_t j = 0; j < block.samples.size(); ++j) {
            const auto& p = block.samples[j].plane;
            d << (j == 0 ? "M" : " L") << num(p.u) << ' ' << num(-p.v);
        }
        d << " Z";
        fmt::print(os,
                   "  <path data-family=\"{}\" data-a-over-b=\"{}\" fill=\"none\" stroke=\"{}\" "
                   "stroke-width=\"{}\" d=\"{}\"/>\n",
                   to_string(block.family), num(block.a_over_b), kColors[i % kColors.size()], num(stroke), d.str());
    }
    os << "</svg>\n";
}

int cmd_locus(const RunConfig& config, std::ostream& out, std::ostream& err) {
    std::vector<LocusBlock> blocks;
    try {
        validate_config(config);
        if (config.ratios.empty()) {
            throw DomainError("--ratios must list at least one a/b value");
        }
        for (double ratio : config.ratios) {
            RunConfig block_config = config;
            block_config.a = ratio;
            block_config.b = 1.0;
            const auto spec = spec_of(block_config);
            blocks.push_back({spec.kind, ratio, sample_locus(spec, config.samples, config.space)});
        }
    } catch (const DomainError& e) {
        err << "locus: " << e.what() << '\n';
        return kBadParameters;
    } catch (const GeometryError& e) {
        err << "locus: " << e.what() << '\n';
        return kBadParameters;
    }

    if (!write_output(config.out_path, out, [&](std::ostream& os) { write_locus_csv(os, blocks); })) {
        err << "locus: cannot write " << config.out_path << '\n';
        return kIoError;
    }
    if (!config.svg_path.empty() &&
        !write_output(config.svg_path, out, [&](std::ostream& os) { write_locus_svg(os, blocks); })) {
        err << "locus: cannot write " << config.svg_path << '\n';
        return kIoError;
    }
    return kOk;
}

int cmd_family(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        const auto spec = spec_of(config);
        const auto poly = family_member(spec, config.param);
        const auto outer = family_outer(spec);
        const auto caustic = family_caustic(spec);
        const auto cosines = internal_cosines(poly);

        fmt::print(out, "kind={}\na={}\nb={}\n", to_string(spec.kind), num(spec.a), num(spec.b));
        if (spec.kind == FamilyKind::BilliardN) {
            fmt::print(out, "n={}\ntau={}\n", spec.n, spec.tau);
        }
        fmt::print(out, "param={}\nouter={},{}\ncaustic={},{}\nvertex_count={}\n", num(config.param),
                   num(outer.a()), num(outer.b()), num(caustic.a()), num(caustic.b()), poly.size());
        for (std::size_t i = 0; i < poly.size(); ++i) {
            const auto& v = poly.vertices()[i];
            fmt::print(out, "vertex.{}={},{}\n", i + 1, num(v.x()), num(v.y()));
        }
        double sum = 0.0;
        double product = 1.0;
        for (std::size_t i = 0; i < cosines.size(); ++i) {
            fmt::print(out, "cos.{}={}\n", i + 1, num(cosines[i]));
            sum += cosines[i];
            product *= cosines[i];
        }
        fmt::print(out, "cosine_sum={}\ncosine_product={}\nperimeter={}\n", num(sum), num(product),
                   num(perimeter(poly)));
        fmt::print(out, "tangency_residual={}\n", num(max_tangency_residual(poly, caustic)));
        fmt::print(out, "reflection_residual={}\n", num(reflection_residual(poly, outer)));
        for (Quantity q : {Quantity::CosineSum, Quantity::CosineProduct}) {
            if (const auto target = closed_form_target(spec, q)) {
                fmt::print(out, "{}_target={}\n", to_string(q), num(*target));
            }
        }
    } catch (const DomainError& e) {
        err << "family: " << e.what() << '\n';
        return kBadParameters;
    } catch (const GeometryError& e) {
        err << "family: " << e.what() << '\n';
        return kBadParameters;
    }
    return kOk;
}

int cmd_caustic(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        validate_config(config);
        const Ellipse outer(config.a, config.b);
        const auto caustic = solve_confocal_caustic(config.a, config.b, config.n, config.tau);
        const FamilySpec spec{FamilyKind::BilliardN, caustic.a(), caustic.b(), config.n, config.tau};

        const auto first = family_member(spec, 0.0);
        const auto trace = trace_closure(Ray(first[0], first[1] - first[0]), outer, config.n);
        const auto report = sweep(spec, Quantity::CosineSum, config.samples, config.tol);

        fmt::print(out, "outer={},{}\nn={}\ntau={}\n", num(outer.a()), num(outer.b()), config.n, config.tau);
        fmt::print(out, "caustic.a={}\ncaustic.b={}\n", num(caustic.a()), num(caustic.b()));
        fmt::print(out, "closure_error={}\n", num(trace.closure_error));
        fmt::print(out, "cosine_sum={}\ncosine_sum_max_dev={}\n", num(report.mean), num(report.max_abs_deviation));
        const bool ok = trace.closure_error <= kClosureTol && report.passed;
        fmt::print(out, "status={}\n", ok ? "pass" : "FAIL");
        return ok ? kOk : kInvariantFailure;
    } catch (const NoSolutionError& e) {
        err << "caustic: " << e.what() << '\n';
        return kNoSolution;
    } catch (const DomainError& e) {
        err << "caustic: " << e.what() << '\n';
        return kBadParameters;
    } catch (const GeometryError& e) {
        err << "caustic: " << e.what() << '\n';
        return kBadParameters;
    }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Poncelet triangle families: cosine invariants, loci and caustics"};
    app.require_subcommand(1);

    RunConfig config;
    std::string family_name;
    std::string space_name = "cosine";

    auto add_family_params = [&](CLI::App* sub) {
        sub->add_option("--a", config.a, "first semi-axis");
        sub->add_option("--b", config.b, "second semi-axis");
        sub->add_option("--n", config.n, "polygon size (billiard only)");
        sub->add_option("--tau", config.tau, "turning number (billiard only)");
    };

    auto* verify = app.add_subcommand("verify", "sweep a family and check its conserved quantities");
    verify->add_option("--family", family_name, "incircle|confocal|circumcircle|excentral|billiard")->required();
    add_family_params(verify);
    verify->add_option("--samples", config.samples, "samples per sweep")->capture_default_str();
    verify->add_option("--tol", config.tol, "absolute tolerance")->capture_default_str();

    auto* locus = app.add_subcommand("locus", "export cosine or log-cosine loci as CSV/SVG");
    locus->add_option("--kind", space_name, "cosine|logcos")->check(CLI::IsMember({"cosine", "logcos"}));
    locus->add_option("--family", family_name, "triangle family (default: incircle / circumcircle)");
    locus->add_option("--ratios", config.ratios, "comma-separated a/b values (b = 1)")->delimiter(',')->required();
    locus->add_option("--samples", config.samples, "samples per curve");
    locus->add_option("--out", config.out_path, "CSV path, '-' for stdout");
    locus->add_option("--svg", config.svg_path, "optional SVG path");

    auto* family = app.add_subcommand("family", "dump one family member");
    family->add_option("--kind", family_name, "incircle|confocal|circumcircle|excentral|billiard")->required();
    add_family_params(family);
    family->add_option("--t", config.param, "family parameter");

    auto* caustic = app.add_subcommand("caustic", "solve the confocal caustic of an (n, tau) family");
    caustic->add_option("--a", config.a, "outer semi-axis along x")->required();
    caustic->add_option("--b", config.b, "outer semi-axis along y")->required();
    caustic->add_option("--n", config.n, "polygon size");
    caustic->add_option("--tau", config.tau, "turning number");
    caustic->add_option("--samples", config.samples, "samples for the cosine-sum estimate");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kBadParameters;
    }

    if (!family_name.empty()) {
        const auto kind = parse_family_kind(family_name);
        if (!kind) {
            err << "unknown family '" << family_name << "'\n";
            return kBadParameters;
        }
        config.family = *kind;
        config.family_given = true;
    }

    if (verify->parsed()) {
        config.command = Command::Verify;
        return cmd_verify(config, out, err);
    }
    if (locus->parsed()) {
        config.command = Command::Locus;
        config.space = space_name == "logcos" ? LocusSpace::LogCosine : LocusSpace::Cosine;
        if (!config.family_given) {
            config.family = config.space == LocusSpace::LogCosine ? FamilyKind::Circumcircle : FamilyKind::Incircle;
        }
        if (locus->count("--samples") == 0) {
            config.samples = 720;
        }
        return cmd_locus(config, out, err);
    }
    if (family->parsed()) {
        config.command = Command::Family;
        return cmd_family(config, out, err);
    }
    config.command = Command::Caustic;
    if (caustic->count("--samples") == 0) {
        config.samples = 500;
    }
    return cmd_caustic(config, out, err);
}

}  // namespace poncelet::cli
