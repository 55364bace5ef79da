#include "cli/commands.hpp"
#include "cli/parser.hpp"
#include "exactmath/scalar.hpp"

#include "CLI11.hpp"

#include <iostream>

namespace {

enum class Format { text, json };

int emit(const cli::Report& r, Format f)
{
    if (f == Format::json)
        std::cout << r.to_json().dump(2) << "\n";
    else
        std::cout << r.to_text();
    return r.exit_code();
}

int fail(const std::string& command, Format f, const std::string& kind, const std::string& msg, int code)
{
    std::cerr << "curvetool " << command << ": " << msg << "\n";
    if (f == Format::json)
        std::cout << cli::error_json(command, cli::json::object(), kind, msg, code).dump(2) << "\n";
    return code;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Plane curve analysis, fibrewise transforms and degeneration families"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "text";
    int trunc = 16;
    int tower = 2;
    app.add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--trunc", trunc, "Series truncation order")->envname("CURVETOOL_TRUNC")->check(CLI::Range(1, 4096));
    app.add_option("--tower-depth", tower, "Maximum depth of extension towers")->check(CLI::Range(1, 16));

    cli::AnalyzeOptions ao;
    std::string expr;
    auto* analyze = app.add_subcommand("analyze", "Analyze a plane curve F(x, y) = 0");
    analyze->add_option("expr", expr, "Polynomial in x, y")->required();
    analyze->add_flag("--asymptotes", ao.asymptotes, "List the asymptotes");
    analyze->add_flag("--present", ao.present, "Check that the curve is presented");
    analyze->add_option("--factor", ao.factor, "Sheets of the fibrewise factorization to order N")
        ->check(CLI::Range(0, 4096));
    analyze->add_flag("--classify", ao.classify, "Branch colours on x = 0 and at infinity");
    analyze->add_option("--emit-points", ao.emit_points, "Rational points over x = 0..K-1")->check(CLI::Range(0, 10000));

    cli::TransformOptions to;
    std::string texpr, script;
    std::vector<std::string> steps;
    auto* transform = app.add_subcommand("transform", "Apply fibrewise Mobius steps to C(x, z) = 0");
    transform->add_option("expr", texpr, "Polynomial in x, z (y is read as z)")->required();
    transform->add_option("--script", script, "File with one step per line")->check(CLI::ExistingFile);
    transform->add_option("--step", steps, "A step, e.g. \"shear alpha=1\"");
    transform->add_flag("--verify", to.verify, "Compare predicted and transported branch centres");

    cli::DegenerateOptions dopt;
    std::string config, fiber, mode, track;
    auto* degenerate = app.add_subcommand("degenerate", "Build and check a degeneration family");
    degenerate->add_option("config", config, "Family config file")->required();
    auto* fiber_opt = degenerate->add_option("--fiber", fiber, "Fibre at parameter t");
    auto* mode_opt =
        degenerate->add_option("--check-asymptotic", mode, "strict or weak")->check(CLI::IsMember({"strict", "weak"}));
    degenerate->add_flag("--at-infinity", dopt.at_infinity, "Also require fixed points on W = 0");
    auto* track_opt = degenerate->add_option("--track", track, "Comma separated parameters");
    degenerate->add_flag("--good-spec", dopt.good_spec, "Follow the nodes along t* + 2^-k");
    degenerate->add_option("--samples", dopt.samples, "Number of samples for --good-spec")->check(CLI::Range(1, 64));
    degenerate->add_option("--tol", dopt.tolerance, "Final gap tolerance for --good-spec");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        for (int i = 1; i < argc; ++i) {
            std::string a = argv[i];
            if (a == "--format=json" || (a == "--format" && i + 1 < argc && std::string(argv[i + 1]) == "json")) {
                std::string cmd = argc > 1 ? argv[1] : "";
                for (int k = 1; k < argc; ++k)
                    for (const char* name : {"analyze", "transform", "degenerate"})
                        if (argv[k] == std::string(name))
                            cmd = name;
                std::cout << cli::error_json(cmd, cli::json::object(), "usage", e.what(), 2).dump(2) << "\n";
                break;
            }
        }
        return 2;
    }

    Format f = format == "json" ? Format::json : Format::text;
    exactmath::set_tower_depth_limit(tower);
    std::string command = analyze->parsed() ? "analyze" : transform->parsed() ? "transform" : "degenerate";
    try {
        if (analyze->parsed()) {
            ao.trunc = trunc;
            return emit(cli::cmd_analyze(expr, ao), f);
        }
        if (transform->parsed()) {
            to.trunc = trunc;
            if (!script.empty())
                to.steps = cli::read_script(script);
            to.steps.insert(to.steps.end(), steps.begin(), steps.end());
            return emit(cli::cmd_transform(texpr, to), f);
        }
        if (*fiber_opt)
            dopt.fiber = fiber;
        if (*mode_opt)
            dopt.asymptotic = mode;
        if (*track_opt)
            dopt.track = track;
        return emit(cli::cmd_degenerate(cli::Config::load(config), dopt), f);
    } catch (const cli::ParseError& e) {
        return fail(command, f, "parse", e.what(), 2);
    } catch (const cli::InputError& e) {
        return fail(command, f, "input", e.what(), 2);
    } catch (const std::invalid_argument& e) {
        return fail(command, f, "input", e.what(), 2);
    } catch (const exactmath::ExtensionBudgetExceeded& e) {
        return fail(command, f, "extension-budget", e.what(), 3);
    } catch (const std::exception& e) {
        return fail(command, f, "check", e.what(), 1);
    }
}
