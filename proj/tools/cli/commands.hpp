#pragma once

#include "dvr/boundary.hpp"
#include "dvr/dieudonne.hpp"

#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>

namespace dvr::cli {

enum ExitCode : int {
    kOk = 0,
    kUsage = 1,
    kInfeasible = 2,
    kVerificationFailed = 3,
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct DiskArgs {
    int order = 1;
    Complex z0;
    Complex w0;
    std::optional<Complex> w1;
    std::optional<Complex> w2;
    std::optional<Complex> beta;
    std::optional<Complex> lambda;
    std::optional<Complex> mu;
};

struct BoundaryArgs {
    Complex z0;
    Complex w0;
    std::optional<Complex> w1;
    std::optional<Complex> lambda;
    std::size_t n = 360;
    std::string format = "csv";
};

struct ExtremalArgs {
    Complex z0;
    Complex w0;
    Complex lambda;
    std::optional<Complex> mu;
    double theta = 0.0;
    /// JSON text of a previously emitted extremal document (or its "spec" object).
    std::optional<std::string> spec_json;
};

struct VerifyArgs {
    std::string suite = "all";
    std::size_t n = 10000;
    std::uint64_t seed = 1;
    int max_degree = 6;
    std::size_t grid = 40;
    std::string format = "json";
};

// Each command writes its document to `out`, diagnostics to `err`, and returns an ExitCode.
int run_disk(const DiskArgs& args, std::ostream& out, std::ostream& err);
int run_boundary(const BoundaryArgs& args, std::ostream& out, std::ostream& err);
int run_extremal(const ExtremalArgs& args, std::ostream& out, std::ostream& err);
int run_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err);

/// Region boundary in the original frame.
BoundaryCurve compute_boundary(const BoundaryArgs& args, Regime* regime = nullptr);

std::string boundary_csv(const BoundaryCurve& curve);

/// 800x800 SVG: unit-circle reference, the region as one closed path, and a regime legend.
std::string boundary_svg(const BoundaryCurve& curve, Regime regime);

} // namespace dvr::cli
