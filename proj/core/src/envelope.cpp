#include "dvr/envelope.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace dvr {
namespace {

constexpr double kPi = std::numbers::pi;

// Derivative in x of defining_residual (valid away from x e^{i theta} = conj(eta)).
double defining_slope(const EnvelopeConfig& cfg, double theta, double x)
{
    const Complex e = std::polar(1.0, theta);
    const Complex d = x * e - std::conj(cfg.eta);
    const double m = std::abs(d);
    const double dm = m > 0.0 ? std::real(std::conj(d) * e) / m : 1.0;
    return dm - 4.0 * x;
}

} // namespace

const char* to_string(Branch b)
{
    return b == Branch::arc ? "arc" : "cap";
}

const char* to_string(Regime r)
{
    switch (r) {
    case Regime::i: return "i";
    case Regime::ii: return "ii";
    case Regime::iii: return "iii";
    }
    return "?";
}

void EnvelopeConfig::validate() const
{
    if (!(t > 0.0) || !std::isfinite(t)) throw DomainError("envelope: t must be positive");
    if (!(t > std::abs(eta))) throw DomainError("envelope: t must exceed |eta|");
}

double wrap_angle(double theta)
{
    double w = std::remainder(theta, 2.0 * kPi);
    if (w <= -kPi) w += 2.0 * kPi;
    return w;
}

ClosedDisk circle_family(const EnvelopeConfig& cfg, Complex zeta)
{
    if (!(std::abs(zeta) <= 1.0 + kFeasibilityTolerance)) {
        throw DomainError("circle_family: |zeta| must be <= 1");
    }
    const double rho = std::max(cfg.t * (1.0 - std::norm(zeta)), 0.0);
    return {zeta * (1.0 - cfg.eta * zeta), rho};
}

double defining_residual(const EnvelopeConfig& cfg, double theta, double x)
{
    return std::abs(x * std::polar(1.0, theta) - std::conj(cfg.eta))
           - 2.0 * (x * x - std::norm(cfg.eta));
}

double branch_gap(const EnvelopeConfig& cfg, double theta)
{
    return defining_residual(cfg, theta, cfg.t);
}

double solve_t_theta(const EnvelopeConfig& cfg, double theta)
{
    cfg.validate();
    if (branch_gap(cfg, theta) < -kBranchTolerance) return cfg.t;

    // residual(lo) >= 0 > residual(hi); the residual is eventually dominated by -2x^2.
    double lo = cfg.t;
    if (defining_residual(cfg, theta, lo) < 0.0) return cfg.t; // gap within tolerance
    double hi = std::max(1.0, std::abs(cfg.eta) + 1.0);
    int expansions = 0;
    while (defining_residual(cfg, theta, hi) >= 0.0) {
        hi *= 2.0;
        if (++expansions > 200) throw std::logic_error("solve_t_theta: failed to bracket root");
    }
    while (hi - lo > 1e-3) {
        const double mid = 0.5 * (lo + hi);
        (defining_residual(cfg, theta, mid) >= 0.0 ? lo : hi) = mid;
    }

    // Safeguarded Newton inside [lo, hi].
    double x = 0.5 * (lo + hi);
    for (int it = 0; it < 100; ++it) {
        const double f = defining_residual(cfg, theta, x);
        if (f == 0.0) return x;
        (f > 0.0 ? lo : hi) = x;
        const double df = defining_slope(cfg, theta, x);
        double next = df != 0.0 ? x - f / df : 0.5 * (lo + hi);
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        if (std::abs(next - x) <= 4.0 * std::numeric_limits<double>::epsilon() * x) {
            x = next;
            break;
        }
        x = next;
    }
    return x;
}

Complex zeta_theta(const EnvelopeConfig& cfg, double theta)
{
    const double x = solve_t_theta(cfg, theta);
    const double d = x * x - std::norm(cfg.eta);
    if (!(d > 0.0)) throw DomainError("zeta_theta: t_theta must exceed |eta|");
    return (x * std::polar(1.0, theta) - std::conj(cfg.eta)) / (2.0 * d);
}

SupportPoint support_point(const EnvelopeConfig& cfg, double theta)
{
    SupportPoint p;
    p.theta = theta;
    p.t_theta = solve_t_theta(cfg, theta);
    const double d = p.t_theta * p.t_theta - std::norm(cfg.eta);
    p.zeta = (p.t_theta * std::polar(1.0, theta) - std::conj(cfg.eta)) / (2.0 * d);
    p.branch = branch_gap(cfg, theta) < -kBranchTolerance ? Branch::arc : Branch::cap;
    const ClosedDisk disk = circle_family(cfg, p.zeta);
    p.v = p.branch == Branch::arc ? disk.center + disk.radius * std::polar(1.0, theta)
                                  : disk.center;
    return p;
}

Regime classify_regime(const EnvelopeConfig& cfg)
{
    cfg.validate();
    const double m = std::abs(cfg.eta);
    if (cfg.t + m <= 0.5) return Regime::i;
    if (cfg.t - m >= 0.5) return Regime::ii;
    return Regime::iii;
}

std::pair<double, double> critical_angles(const EnvelopeConfig& cfg)
{
    if (classify_regime(cfg) != Regime::iii) {
        throw DomainError("critical angles exist only in regime iii");
    }
    const double t = cfg.t;
    const double m = std::abs(cfg.eta);
    const double d = t * t - m * m;
    const double k = std::clamp((t * t + m * m - 4.0 * d * d) / (2.0 * t * m), -1.0, 1.0);
    const double base = -std::arg(cfg.eta);
    const double spread = std::acos(k);
    double a = wrap_angle(base - spread);
    double b = wrap_angle(base + spread);
    if (a > b) std::swap(a, b);
    return {a, b};
}

} // namespace dvr
