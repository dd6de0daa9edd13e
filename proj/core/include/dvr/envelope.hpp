#pragma once

#include "dvr/complex_jet.hpp"
#include "dvr/dieudonne.hpp"

#include <utility>

namespace dvr {

/// The disk family c(zeta) = zeta (1 - eta zeta), rho(zeta) = t (1 - |zeta|^2)
/// over the closed unit disk, whose union is a compact convex set.
///
/// Any (t, eta) with t > |eta| is accepted, including pairs that do not arise
/// from admissible (r, s, lambda).
struct EnvelopeConfig {
    double t = 0.0;
    Complex eta;

    /// Throws DomainError unless t > 0 and t > |eta|.
    void validate() const;
};

/// Which part of the envelope a support point comes from.
///   arc: c(zeta) + rho(zeta) e^{i theta} with |zeta| < 1 (circular-arc part)
///   cap: c(zeta) with |zeta| = 1 (image of the unit circle)
enum class Branch { arc, cap };

const char* to_string(Branch b);

enum class Regime { i, ii, iii };

const char* to_string(Regime r);

struct SupportPoint {
    double theta = 0.0;
    double t_theta = 0.0;
    Complex zeta;
    Complex v;
    Branch branch = Branch::cap;
};

/// Absolute tolerance on |t e^{i theta} - conj(eta)| - 2 (t^2 - |eta|^2) below which
/// the cap branch is selected.
inline constexpr double kBranchTolerance = 1e-12;

ClosedDisk circle_family(const EnvelopeConfig& cfg, Complex zeta);

/// |t e^{i theta} - conj(eta)| - 2 (t^2 - |eta|^2); >= 0 selects the cap branch.
double branch_gap(const EnvelopeConfig& cfg, double theta);

/// |x e^{i theta} - conj(eta)| - 2 (x^2 - |eta|^2), the defining equation.
double defining_residual(const EnvelopeConfig& cfg, double theta, double x);

/// Root x > |eta| of the defining equation on the cap branch; t otherwise.
double solve_t_theta(const EnvelopeConfig& cfg, double theta);

Complex zeta_theta(const EnvelopeConfig& cfg, double theta);

/// Point of the envelope with outward normal e^{i theta}.
SupportPoint support_point(const EnvelopeConfig& cfg, double theta);

/// i: t + |eta| <= 1/2, ii: t - |eta| >= 1/2, iii otherwise.
Regime classify_regime(const EnvelopeConfig& cfg);

/// The two solutions -pi < theta1 < theta2 <= pi of
/// |t e^{i theta} - conj(eta)| = 2 (t^2 - |eta|^2). Throws DomainError outside regime iii.
std::pair<double, double> critical_angles(const EnvelopeConfig& cfg);

/// Maps an angle into (-pi, pi].
double wrap_angle(double theta);

} // namespace dvr
