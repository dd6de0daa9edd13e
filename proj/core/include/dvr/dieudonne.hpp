#pragma once

#include "dvr/complex_jet.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace dvr {

/// Raised when interpolation data cannot be realized by any self-map f of the
/// disk with f(0) = 0 (for example |w0| >= |z0|, or |lambda| > 1).
class InfeasibleError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// |lambda|, |mu| up to 1 + kFeasibilityTolerance are accepted and clamped onto
/// the closed unit disk.
inline constexpr double kFeasibilityTolerance = 1e-9;

/// |lambda| (or |mu|) >= 1 - kDegenerateThreshold selects the zero-radius cases.
inline constexpr double kDegenerateThreshold = 1e-12;

struct ClosedDisk {
    Complex center;
    double radius = 0.0;

    /// max(|w - center| - radius, 0).
    double excess(Complex w) const;
    bool contains(Complex w, double slack = 0.0) const { return excess(w) <= slack; }
};

/// Values f(z0) = w0 and optionally f'(z0) = w1, f''(z0) = w2.
struct InterpolationData {
    Complex z0;
    Complex w0;
    std::optional<Complex> w1;
    std::optional<Complex> w2;
};

/// Rotated frame z0 -> r, w0 -> s with f~(z) = e^{-i xi} f(e^{i phi} z).
/// lambda and mu are expressed in that frame.
struct NormalizedConfig {
    double r = 0.0;
    double s = 0.0;
    Complex lambda;
    std::optional<Complex> mu;
    double phi = 0.0;
    double xi = 0.0;

    /// e^{i(k phi - xi)}: f~^{(k)}(r) = rotation(k) * f^{(k)}(z0).
    Complex rotation(int k) const;
    Complex z0() const { return std::polar(r, phi); }
    Complex w0() const { return std::polar(s, xi); }
};

/// Region of f'(z0) given f(z0) = w0.
ClosedDisk disk_order1(Complex z0, Complex w0);

/// Region of f''(z0) given f(z0) = w0 and f'(z0) parametrized by beta (|beta| <= 1).
ClosedDisk disk_order2(Complex z0, Complex w0, Complex beta);

/// w1 = w0/z0 + (r^2 - s^2) / (z0 (1 - r^2)) * lambda.
Complex w1_from_lambda(Complex z0, Complex w0, Complex lambda);

/// w2 for given Schur parameters (lambda, mu).
Complex w2_from_lambda_mu(Complex z0, Complex w0, Complex lambda, Complex mu);

/// Inverts w1_from_lambda. Requires data.w1. Clamps |lambda| in (1, 1 + tol].
Complex lambda_from_w1(const InterpolationData& data);

/// Inverts w2_from_lambda_mu. Throws InfeasibleError when |lambda| is in the
/// degenerate range (w2 is then forced) or |mu| > 1 + tol.
Complex mu_from_w2(const InterpolationData& data, Complex lambda);

/// Region of f'''(z0) from Schur parameters, in the original frame.
/// |lambda| = 1 or |mu| = 1 give a zero-radius disk at the forced value.
ClosedDisk disk_order3(Complex z0, Complex w0, Complex lambda, Complex mu);

/// Region of f'''(z0) from (z0, w0, w1, w2). Requires w1; w2 may be omitted only
/// when |lambda| = 1 (the value is then forced). When |lambda| = 1 and w2 is
/// given, it must match the forced value.
ClosedDisk disk_order3(const InterpolationData& data);

/// The same disk in the rotated frame (center c0, radius rho0).
ClosedDisk normalized_disk_order3(double r, double s, Complex lambda, Complex mu);

/// 6 (r^2 - s^2) / (r^3 (1 - r^2)^3).
double normalized_scale(double r, double s);

/// s^2 lambda^3 - s (1 + r^2) lambda^2 + r^2 lambda.
Complex normalized_offset(double r, double s, Complex lambda);

/// Validates data and rotates it to the real frame. mu is filled when w2 is present
/// and |lambda| < 1.
NormalizedConfig normalize(const InterpolationData& data);

/// Maps a disk (or a value) from the rotated frame back to the original one.
ClosedDisk denormalize(const ClosedDisk& disk, double phi, double xi);
Complex denormalize(Complex value, double phi, double xi);

/// f(z) = z T_{u0}(X(z)) with tau(z) = T_{-z0}(z) and
///   X = rotation * tau                                  (depth 1)
///   X = tau T_{p1}(rotation * tau)                      (depth 2)
///   X = tau T_{p1}(tau T_{p2}(rotation * tau))          (depth 3)
struct ExtremalSpec {
    Complex z0;
    Complex u0;
    std::vector<Complex> moebius_params; // outermost first
    Complex rotation{1.0, 0.0};

    int depth() const { return static_cast<int>(moebius_params.size()) + 1; }
};

/// Builds the extremal function of the requested depth for the configuration.
///
/// depth 1 requires |lambda| = 1, depth 2 requires |lambda| < 1 = |mu|, depth 3
/// requires |lambda|, |mu| < 1. For depth 3, theta is the angle on the boundary
/// circle in the original frame: f'''(z0) = c + rho e^{i theta}. theta is
/// ignored for depths 1 and 2.
ExtremalSpec extremal_spec(const NormalizedConfig& config, int depth, double theta = 0.0);

/// Jet of the extremal function at z.
Jet3 eval_extremal(const ExtremalSpec& spec, Complex z);

/// r^2 mu / z0^2 plus a lambda^2 term that vanishes when z0 and w0 are real.
/// Only right in that frame; extremal_spec uses r^2 mu / z0^2 alone. Kept for
/// comparison.
Complex inner_parameter_with_lambda_term(Complex z0, Complex w0, Complex lambda, Complex mu);

struct SharpBound {
    double bound;
    double a; // g(0) of the extremal g = f/z
};

/// max |f'''(r)| over the degenerate case |lambda| = 1, attained at lambda = -1.
SharpBound sharp_bound_lambda1(double r, double s);

} // namespace dvr
