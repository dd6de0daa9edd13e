#include "dvr/dieudonne.hpp"

#include <cmath>
#include <numbers>

namespace dvr {
namespace {

struct Moduli {
    double r;
    double s;
};

Moduli check_points(Complex z0, Complex w0)
{
    const double r = std::abs(z0);
    const double s = std::abs(w0);
    if (r == 0.0) throw DomainError("z0 must be nonzero");
    if (!(r < 1.0)) throw DomainError("z0 must lie inside the unit disk");
    if (!(s < r)) throw InfeasibleError("Schwarz bound violated: |w0| must be < |z0|");
    return {r, s};
}

// Clamps a Schur parameter onto the closed disk, or throws if it is too far out.
Complex clamp_schur(Complex x, const char* name)
{
    const double m = std::abs(x);
    if (!(m <= 1.0 + kFeasibilityTolerance)) {
        throw InfeasibleError(std::string("infeasible constraint: |") + name + "| > 1");
    }
    return m > 1.0 ? x / m : x;
}

bool on_circle(Complex x) { return std::abs(x) >= 1.0 - kDegenerateThreshold; }

Complex unit(Complex x) { return x / std::abs(x); }

} // namespace

double ClosedDisk::excess(Complex w) const
{
    return std::max(std::abs(w - center) - radius, 0.0);
}

Complex NormalizedConfig::rotation(int k) const
{
    return std::polar(1.0, k * phi - xi);
}

ClosedDisk disk_order1(Complex z0, Complex w0)
{
    const auto [r, s] = check_points(z0, w0);
    return {w0 / z0, (r * r - s * s) / (r * (1.0 - r * r))};
}

ClosedDisk disk_order2(Complex z0, Complex w0, Complex beta)
{
    const auto [r, s] = check_points(z0, w0);
    beta = clamp_schur(beta, "beta");
    const double r2 = r * r;
    const double scale = 2.0 * (r2 - s * s) / (r2 * (1.0 - r2) * (1.0 - r2));
    const Complex c = std::conj(z0) / z0 * beta * (1.0 - std::conj(w0) * beta);
    const double rho = on_circle(beta) ? 0.0 : r * (1.0 - std::norm(beta));
    return {scale * c, scale * rho};
}

Complex w1_from_lambda(Complex z0, Complex w0, Complex lambda)
{
    const auto [r, s] = check_points(z0, w0);
    return w0 / z0 + (r * r - s * s) / (z0 * (1.0 - r * r)) * lambda;
}

Complex w2_from_lambda_mu(Complex z0, Complex w0, Complex lambda, Complex mu)
{
    const auto [r, s] = check_points(z0, w0);
    const double k = 2.0 * (r * r - s * s) / ((1.0 - r * r) * (1.0 - r * r));
    return k * lambda * (1.0 - std::conj(w0) * lambda) / (z0 * z0)
           + k * (1.0 - std::norm(lambda)) / z0 * mu;
}

Complex lambda_from_w1(const InterpolationData& data)
{
    if (!data.w1) throw std::invalid_argument("lambda_from_w1: w1 is required");
    const auto [r, s] = check_points(data.z0, data.w0);
    const Complex lambda =
        (*data.w1 - data.w0 / data.z0) * data.z0 * (1.0 - r * r) / (r * r - s * s);
    return clamp_schur(lambda, "lambda");
}

Complex mu_from_w2(const InterpolationData& data, Complex lambda)
{
    if (!data.w2) throw std::invalid_argument("mu_from_w2: w2 is required");
    const auto [r, s] = check_points(data.z0, data.w0);
    if (on_circle(lambda)) {
        throw DomainError("|lambda| = 1: f''(z0) is forced and mu is undefined");
    }
    const Complex z0 = data.z0;
    const double q = 1.0 - r * r;
    const Complex lead = *data.w2 * z0 * z0 * q * q / (2.0 * (r * r - s * s));
    const Complex mu =
        (lead - lambda * (1.0 - std::conj(data.w0) * lambda)) / (z0 * (1.0 - std::norm(lambda)));
    return clamp_schur(mu, "mu");
}

ClosedDisk disk_order3(Complex z0, Complex w0, Complex lambda, Complex mu)
{
    const auto [r, s] = check_points(z0, w0);
    lambda = clamp_schur(lambda, "lambda");
    const double r2 = r * r;
    const double q = 1.0 - r2;
    const Complex wc = std::conj(w0);
    const Complex scale = 6.0 * (r2 - s * s) / (z0 * z0 * z0 * q * q * q);
    const Complex offset =
        wc * wc * lambda * lambda * lambda - wc * (1.0 + r2) * lambda * lambda + r2 * lambda;
    if (on_circle(lambda)) {
        return {scale * offset, 0.0};
    }
    mu = clamp_schur(mu, "mu");
    const double pl = 1.0 - std::norm(lambda);
    const Complex center =
        scale * (offset + z0 * mu * pl * (1.0 + r2 - 2.0 * wc * lambda - z0 * std::conj(lambda) * mu));
    const double radius =
        on_circle(mu) ? 0.0 : 6.0 * (r2 - s * s) / (r * q * q * q) * pl * (1.0 - std::norm(mu));
    return {center, radius};
}

ClosedDisk disk_order3(const InterpolationData& data)
{
    const Complex lambda = lambda_from_w1(data);
    if (on_circle(lambda)) {
        const ClosedDisk forced = disk_order3(data.z0, data.w0, lambda, 0.0);
        if (data.w2) {
            const Complex w2 = w2_from_lambda_mu(data.z0, data.w0, lambda, 0.0);
            if (std::abs(*data.w2 - w2) > kFeasibilityTolerance * (1.0 + std::abs(w2))) {
                throw InfeasibleError("|lambda| = 1 forces f''(z0); the given w2 differs");
            }
        }
        return forced;
    }
    if (!data.w2) throw std::invalid_argument("disk_order3: w2 is required when |lambda| < 1");
    return disk_order3(data.z0, data.w0, lambda, mu_from_w2(data, lambda));
}

double normalized_scale(double r, double s)
{
    const double q = 1.0 - r * r;
    return 6.0 * (r * r - s * s) / (r * r * r * q * q * q);
}

Complex normalized_offset(double r, double s, Complex lambda)
{
    return s * s * lambda * lambda * lambda - s * (1.0 + r * r) * lambda * lambda + r * r * lambda;
}

ClosedDisk normalized_disk_order3(double r, double s, Complex lambda, Complex mu)
{
    check_points(r, s);
    lambda = clamp_schur(lambda, "lambda");
    const double a = normalized_scale(r, s);
    const Complex b = normalized_offset(r, s, lambda);
    if (on_circle(lambda)) return {a * b, 0.0};
    mu = clamp_schur(mu, "mu");
    const double pl = 1.0 - std::norm(lambda);
    const Complex center =
        a * (b + r * mu * pl * (1.0 + r * r - 2.0 * s * lambda - r * std::conj(lambda) * mu));
    const double radius = on_circle(mu) ? 0.0 : a * r * r * pl * (1.0 - std::norm(mu));
    return {center, radius};
}

NormalizedConfig normalize(const InterpolationData& data)
{
    const auto [r, s] = check_points(data.z0, data.w0);
    NormalizedConfig cfg;
    cfg.r = r;
    cfg.s = s;
    cfg.phi = std::arg(data.z0);
    cfg.xi = s == 0.0 ? 0.0 : std::arg(data.w0);
    const Complex lambda = lambda_from_w1(data);
    cfg.lambda = std::polar(1.0, -cfg.xi) * lambda;
    if (data.w2 && !on_circle(lambda)) {
        cfg.mu = std::polar(1.0, cfg.phi - cfg.xi) * mu_from_w2(data, lambda);
    }
    return cfg;
}

Complex denormalize(Complex value, double phi, double xi)
{
    return std::polar(1.0, -(3.0 * phi - xi)) * value;
}

ClosedDisk denormalize(const ClosedDisk& disk, double phi, double xi)
{
    return {denormalize(disk.center, phi, xi), disk.radius};
}

ExtremalSpec extremal_spec(const NormalizedConfig& config, int depth, double theta)
{
    const Complex z0 = config.z0();
    const Complex w0 = config.w0();
    check_points(z0, w0);
    const Complex lambda = std::polar(1.0, config.xi) * clamp_schur(config.lambda, "lambda");
    const Complex e2 = std::polar(1.0, -2.0 * config.phi); // r^2 / z0^2

    ExtremalSpec spec;
    spec.z0 = z0;
    spec.u0 = w0 / z0;
    switch (depth) {
    case 1:
        if (!on_circle(lambda)) throw DomainError("depth-1 extremal requires |lambda| = 1");
        spec.rotation = e2 * unit(lambda);
        return spec;
    case 2:
    case 3: {
        if (on_circle(lambda)) throw DomainError("depth-2/3 extremal requires |lambda| < 1");
        if (!config.mu) throw DomainError("depth-2/3 extremal requires mu");
        const Complex mu =
            std::polar(1.0, config.xi - config.phi) * clamp_schur(*config.mu, "mu");
        spec.moebius_params.push_back(e2 * lambda);
        if (depth == 2) {
            if (!on_circle(mu)) throw DomainError("depth-2 extremal requires |mu| = 1");
            spec.rotation = e2 * unit(mu);
            return spec;
        }
        if (on_circle(mu)) throw DomainError("depth-3 extremal requires |mu| < 1");
        const Complex eta = e2 * mu;
        if (!(std::abs(eta) < 1.0)) {
            throw DomainError("constructed inner parameter lies outside the unit disk");
        }
        spec.moebius_params.push_back(eta);
        // Inner rotation e^{i(theta - phi)} places f'''(z0) at c + rho e^{i theta}.
        spec.rotation = std::polar(1.0, theta - config.phi);
        return spec;
    }
    default:
        throw std::invalid_argument("extremal depth must be 1, 2 or 3");
    }
}

Jet3 eval_extremal(const ExtremalSpec& spec, Complex z)
{
    const Jet3 id = Jet3::variable(z);
    const Jet3 tau = moebius_jet(MoebiusParam(-spec.z0), id);
    Jet3 x = spec.rotation * tau;
    for (auto it = spec.moebius_params.rbegin(); it != spec.moebius_params.rend(); ++it) {
        x = tau * moebius_jet(MoebiusParam(*it), x);
    }
    return id * moebius_jet(MoebiusParam(spec.u0), x);
}

Complex inner_parameter_with_lambda_term(Complex z0, Complex w0, Complex lambda, Complex mu)
{
    const double r2 = std::norm(z0);
    const Complex z2 = z0 * z0;
    const Complex z5 = z2 * z2 * z0;
    return r2 * mu / z2
           + lambda * lambda * r2 * (r2 * w0 - z2 * std::conj(w0)) / (z5 * (1.0 - std::norm(lambda)));
}

SharpBound sharp_bound_lambda1(double r, double s)
{
    check_points(r, s);
    const double a = normalized_scale(r, s);
    return {a * ((1.0 + r * r) * s + s * s + r * r), (r * r + s) / (r * (1.0 + s))};
}

} // namespace dvr
