#include "thermgrav/cli.hpp"

#include "thermgrav/constants.hpp"
#include "thermgrav/correction.hpp"
#include "thermgrav/errors.hpp"
#include "thermgrav/output.hpp"
#include "thermgrav/physics.hpp"
#include "thermgrav/validation.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>

#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

namespace thermgrav::cli {

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

void usage_check(bool ok, const std::string& message) {
    if (!ok) throw UsageError(message);
}

struct GlobalOptions {
    std::string constants_path;
    OutputFormat format = OutputFormat::csv;
    std::string out_path;
};

struct CorrectionArgs {
    std::optional<double> y;
    std::optional<double> r;
    std::optional<double> temperature;
    std::string convention = "ratio";
};

struct FigureArgs {
    double y_min = 0.01;
    double y_max = 30.0;
    int points = 300;
    std::string spacing = "log";
};

struct ForceArgs {
    double m1 = 0.0;
    double m2 = 0.0;
    double r = 0.0;
    double temperature = 0.0;
};

struct RangeArgs {
    double temperature = 0.0;
    double threshold = 0.0;
};

OutputRecord cmd_correction(const CorrectionArgs& a, const PhysicalConstants& consts) {
    const bool by_y = a.y.has_value();
    const bool by_rt = a.r.has_value() || a.temperature.has_value();
    usage_check(by_y != by_rt, "give exactly one of --y or the pair --r/--T");
    double y = 0.0;
    if (by_y) {
        y = *a.y;
    } else {
        usage_check(a.r.has_value() && a.temperature.has_value(), "--r and --T must be given together");
        usage_check(*a.r >= 0.0 && *a.temperature >= 0.0, "--r and --T must be nonnegative");
        y = reduced_y(*a.r, *a.temperature, consts);
    }
    usage_check(y > 0.0 && std::isfinite(y), "y must be positive");
    const Convention convention = parse_convention(a.convention);

    const ReducedVariables rv = reduce(y);
    const CorrectionResult g = correction_factor(y, convention);
    OutputRecord rec = make_record("correction", consts, {"y", "x", "z", "G", "convention", "underflowed"});
    rec.rows.push_back({rv.y, rv.x, rv.z, g.value, std::string(to_string(g.convention)), g.underflowed});
    return rec;
}

OutputRecord cmd_figure1(const FigureArgs& a, const PhysicalConstants& consts) {
    usage_check(a.points >= 2, "--points must be at least 2");
    usage_check(a.y_min > 0.0 && a.y_min < a.y_max, "need 0 < --ymin < --ymax");
    const auto rows = correction_table(a.y_min, a.y_max, static_cast<std::size_t>(a.points), parse_spacing(a.spacing));
    OutputRecord rec = make_record("figure1", consts, {"y", "G"});
    for (const auto& row : rows) rec.rows.push_back({row.y, row.g});
    return rec;
}

OutputRecord cmd_force(const ForceArgs& a, const PhysicalConstants& consts) {
    usage_check(a.m1 > 0.0 && a.m2 > 0.0, "masses must be positive");
    usage_check(a.r > 0.0, "--r must be positive");
    usage_check(a.temperature >= 0.0, "--T must be nonnegative");
    const ThermalForce f = force_finite_T(ParticlePair(a.m1, a.m2), a.r, a.temperature, consts);
    OutputRecord rec = make_record("force", consts, {"m1", "m2", "r", "T", "y", "G", "F", "underflowed"});
    rec.rows.push_back({a.m1, a.m2, a.r, a.temperature, f.y, f.correction, f.force, f.underflowed});
    return rec;
}

OutputRecord cmd_range(const RangeArgs& a, const PhysicalConstants& consts) {
    usage_check(a.temperature > 0.0, "--T must be positive");
    usage_check(a.threshold > 0.0 && a.threshold < 1.0, "--threshold must lie in (0, 1)");
    const RangeSolution s = gravity_range(a.temperature, a.threshold, consts);
    OutputRecord rec =
        make_record("range", consts, {"T", "threshold", "y_star", "r_star", "crossings_found", "thermal_length"});
    rec.rows.push_back({a.temperature, s.threshold, s.y_star, s.r_star, static_cast<double>(s.crossings_found),
                        thermal_length(a.temperature, consts)});
    return rec;
}

int emit(const OutputRecord& rec, const GlobalOptions& g, std::ostream& out, std::ostream& err) {
    std::ostringstream buffer;
    write_record(rec, g.format, buffer);
    if (g.out_path.empty()) {
        out << buffer.str();
        return exit_success;
    }
    std::ofstream file(g.out_path, std::ios::binary | std::ios::trunc);
    if (file) file << buffer.str();
    if (!file) {
        err << "error: cannot write " << g.out_path << '\n';
        return exit_failure;
    }
    return exit_success;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Thermal correction to dispersion-force gravity"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOptions global;
    std::string format_name = "csv";
    app.add_option("--constants", global.constants_path, "key = value file overriding CODATA 2018 constants");
    app.add_option("--format", format_name, "output format")->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--out", global.out_path, "write output to this file instead of stdout");

    CorrectionArgs corr;
    auto* correction = app.add_subcommand("correction", "temperature correction factor at one point");
    correction->add_option("--y", corr.y, "reduced distance y");
    correction->add_option("--r", corr.r, "separation (m)");
    correction->add_option("--T", corr.temperature, "temperature (K)");
    correction->add_option("--convention", corr.convention)->check(CLI::IsMember({"ratio", "literal"}));

    FigureArgs fig;
    auto* figure = app.add_subcommand("figure1", "tabulate the correction factor over a y range");
    figure->add_option("--ymin", fig.y_min);
    figure->add_option("--ymax", fig.y_max);
    figure->add_option("--points", fig.points);
    figure->add_option("--spacing", fig.spacing)->check(CLI::IsMember({"linear", "log"}));

    ForceArgs frc;
    auto* force = app.add_subcommand("force", "radial force between two masses");
    force->add_option("--m1", frc.m1, "mass 1 (kg)")->required();
    force->add_option("--m2", frc.m2, "mass 2 (kg)")->required();
    force->add_option("--r", frc.r, "separation (m)")->required();
    force->add_option("--T", frc.temperature, "temperature (K)");

    RangeArgs rng;
    auto* range = app.add_subcommand("range", "finite range of gravity at a temperature");
    range->add_option("--T", rng.temperature, "temperature (K)")->required();
    range->add_option("--threshold", rng.threshold, "cutoff level for G in (0, 1)")->required();

    bool quick = false;
    auto* validate = app.add_subcommand("validate", "run the oracle self-checks");
    validate->add_flag("--quick", quick, "thin grids 10x");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_success : exit_usage;
    }
    global.format = format_name == "json" ? OutputFormat::json : OutputFormat::csv;

    PhysicalConstants consts;
    try {
        if (!global.constants_path.empty()) consts = load_constants(global.constants_path);
    } catch (const std::exception& ex) {
        err << "error: " << ex.what() << '\n';
        return exit_failure;
    }

    try {
        if (*validate) {
            ValidationOptions opts;
            opts.quick = quick;
            const bool ok = report_validation(run_validation(consts, opts), out);
            return ok ? exit_success : exit_failure;
        }
        OutputRecord rec;
        if (*correction) {
            rec = cmd_correction(corr, consts);
        } else if (*figure) {
            rec = cmd_figure1(fig, consts);
        } else if (*force) {
            rec = cmd_force(frc, consts);
        } else {
            rec = cmd_range(rng, consts);
        }
        return emit(rec, global, out, err);
    } catch (const UsageError& ex) {
        err << "usage error: " << ex.what() << '\n';
        return exit_usage;
    } catch (const NotFoundError& ex) {
        err << "not found: " << ex.what() << '\n';
        return exit_failure;
    } catch (const std::exception& ex) {
        err << "error: " << ex.what() << '\n';
        return exit_failure;
    }
}

}  // namespace thermgrav::cli
