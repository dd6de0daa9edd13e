#include "cli/commands.hpp"

#include "dvr/format.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using dvr::Complex;

// Binds a complex-valued option given as "RE+IMi".
CLI::Option* add_complex(CLI::App& app, const std::string& name, std::optional<Complex>& target,
                         const std::string& help)
{
    return app.add_option_function<std::string>(
        name, [&target](const std::string& s) { target = dvr::parse_complex(s); }, help);
}

CLI::Option* add_complex(CLI::App& app, const std::string& name, Complex& target, const std::string& help)
{
    return app.add_option_function<std::string>(
        name, [&target](const std::string& s) { target = dvr::parse_complex(s); }, help);
}

// Writes to --out when given, stdout otherwise.
int emit(const std::string& out_path, const std::function<int(std::ostream&)>& run)
{
    if (out_path.empty()) return run(std::cout);
    std::ostringstream buffer;
    const int code = run(buffer);
    std::ofstream file(out_path, std::ios::binary);
    if (!file) {
        std::cerr << "cannot open output file '" << out_path << "'\n";
        return dvr::cli::kUsage;
    }
    file << buffer.str();
    return code;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Variability regions of f', f'' and f''' for self-maps of the unit disk fixing 0"};
    app.require_subcommand(1);
    std::string out_path;

    dvr::cli::DiskArgs disk;
    auto* disk_cmd = app.add_subcommand("disk", "Closed disk of f^(k)(z0) values for k = 1, 2, 3");
    disk_cmd->add_option("--order", disk.order, "Derivative order (1, 2 or 3)")->required();
    add_complex(*disk_cmd, "--z0", disk.z0, "Base point z0")->required();
    add_complex(*disk_cmd, "--w0", disk.w0, "Value f(z0)")->required();
    add_complex(*disk_cmd, "--w1", disk.w1, "Value f'(z0)");
    add_complex(*disk_cmd, "--w2", disk.w2, "Value f''(z0)");
    add_complex(*disk_cmd, "--beta", disk.beta, "Order-2 parameter (|beta| <= 1)");
    add_complex(*disk_cmd, "--lambda", disk.lambda, "Schur parameter of f'(z0)");
    add_complex(*disk_cmd, "--mu", disk.mu, "Schur parameter of f''(z0)");
    disk_cmd->add_option("--out", out_path, "Output file");

    dvr::cli::BoundaryArgs boundary;
    auto* boundary_cmd = app.add_subcommand("boundary", "Boundary curve of the f'''(z0) region");
    add_complex(*boundary_cmd, "--z0", boundary.z0, "Base point z0")->required();
    add_complex(*boundary_cmd, "--w0", boundary.w0, "Value f(z0)")->required();
    add_complex(*boundary_cmd, "--w1", boundary.w1, "Value f'(z0)");
    add_complex(*boundary_cmd, "--lambda", boundary.lambda, "Schur parameter of f'(z0)");
    boundary_cmd->add_option("--n", boundary.n, "Number of uniform angles (>= 16)");
    boundary_cmd->add_option("--format", boundary.format, "csv or svg");
    boundary_cmd->add_option("--out", out_path, "Output file");

    dvr::cli::ExtremalArgs extremal;
    std::string spec_path;
    auto* extremal_cmd = app.add_subcommand("extremal", "Extremal function and its jet at z0");
    add_complex(*extremal_cmd, "--z0", extremal.z0, "Base point z0");
    add_complex(*extremal_cmd, "--w0", extremal.w0, "Value f(z0)");
    add_complex(*extremal_cmd, "--lambda", extremal.lambda, "Schur parameter of f'(z0)");
    add_complex(*extremal_cmd, "--mu", extremal.mu, "Schur parameter of f''(z0)");
    extremal_cmd->add_option("--theta", extremal.theta, "Boundary angle (depth 3)");
    extremal_cmd->add_option("--from-spec", spec_path, "Re-evaluate a previously emitted document ('-' for stdin)");
    extremal_cmd->add_option("--out", out_path, "Output file");

    dvr::cli::VerifyArgs verify;
    auto* verify_cmd = app.add_subcommand("verify", "Monte-Carlo and grid verification suites");
    verify_cmd->add_option("--suite", verify.suite, "membership, extremal, fd, regime2 or all");
    verify_cmd->add_option("--n", verify.n, "Samples per Monte-Carlo suite");
    verify_cmd->add_option("--seed", verify.seed, "Random seed");
    verify_cmd->add_option("--max-degree", verify.max_degree, "Maximal Blaschke degree (membership)");
    verify_cmd->add_option("--grid", verify.grid, "Grid density per axis (regime2)");
    verify_cmd->add_option("--format", verify.format, "json or text");
    verify_cmd->add_option("--out", out_path, "Output file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return dvr::cli::kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return dvr::cli::kUsage;
    }

    if (*disk_cmd) {
        return emit(out_path, [&](std::ostream& os) { return dvr::cli::run_disk(disk, os, std::cerr); });
    }
    if (*boundary_cmd) {
        return emit(out_path, [&](std::ostream& os) { return dvr::cli::run_boundary(boundary, os, std::cerr); });
    }
    if (*extremal_cmd) {
        if (!spec_path.empty()) {
            std::ostringstream text;
            if (spec_path == "-") {
                text << std::cin.rdbuf();
            } else {
                std::ifstream in(spec_path);
                if (!in) {
                    std::cerr << "cannot read '" << spec_path << "'\n";
                    return dvr::cli::kUsage;
                }
                text << in.rdbuf();
            }
            extremal.spec_json = text.str();
        } else if (extremal_cmd->count("--z0") == 0 || extremal_cmd->count("--w0") == 0
                   || extremal_cmd->count("--lambda") == 0) {
            std::cerr << "usage error: --z0, --w0 and --lambda are required without --from-spec\n";
            return dvr::cli::kUsage;
        }
        return emit(out_path, [&](std::ostream& os) { return dvr::cli::run_extremal(extremal, os, std::cerr); });
    }
    return emit(out_path, [&](std::ostream& os) { return dvr::cli::run_verify(verify, os, std::cerr); });
}
