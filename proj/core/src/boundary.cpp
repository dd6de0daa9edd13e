#include "dvr/boundary.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace dvr {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kUnitTolerance = 1e-9;

double cross(Complex a, Complex b) { return a.real() * b.imag() - a.imag() * b.real(); }

// Counter-clockwise angle from a to b in [0, 2 pi).
double ccw_angle(Complex a, Complex b)
{
    double d = std::arg(b) - std::arg(a);
    while (d < 0.0) d += 2.0 * kPi;
    while (d >= 2.0 * kPi) d -= 2.0 * kPi;
    return d;
}

double signed_area(std::span<const Complex> p)
{
    double a = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) a += cross(p[i], p[(i + 1) % p.size()]);
    return 0.5 * a;
}

double diameter_bound(std::span<const Complex> p)
{
    if (p.empty()) return 0.0;
    double x0 = p[0].real(), x1 = x0, y0 = p[0].imag(), y1 = y0;
    for (const auto& z : p) {
        x0 = std::min(x0, z.real());
        x1 = std::max(x1, z.real());
        y0 = std::min(y0, z.imag());
        y1 = std::max(y1, z.imag());
    }
    return std::hypot(x1 - x0, y1 - y0);
}

bool is_lambda_zero(const RegionSpec& spec)
{
    return spec.from_parameters && spec.lambda == Complex{};
}

} // namespace

RegionSpec region_spec(double r, double s, Complex lambda)
{
    if (!(r > 0.0 && r < 1.0)) throw DomainError("region_spec: r must lie in (0, 1)");
    if (!(s >= 0.0 && s < r)) throw InfeasibleError("region_spec: s must lie in [0, r)");
    if (!(std::abs(lambda) < 1.0)) throw DomainError("region_spec: |lambda| must be < 1");

    RegionSpec spec;
    spec.r = r;
    spec.s = s;
    spec.lambda = lambda;
    spec.from_parameters = true;
    spec.A = normalized_scale(r, s);
    spec.B = normalized_offset(r, s, lambda);
    const Complex d = 1.0 + r * r - 2.0 * s * lambda;
    spec.C = r * (1.0 - std::norm(lambda)) * d;
    spec.env.t = r / std::abs(d);
    spec.env.eta = r * std::conj(lambda) / d;
    spec.env.validate();
    return spec;
}

RegionSpec region_spec(const EnvelopeConfig& env, double A, Complex B, Complex C)
{
    env.validate();
    if (!(A > 0.0)) throw DomainError("region_spec: A must be positive");
    if (C == Complex{}) throw DomainError("region_spec: C must be nonzero");
    RegionSpec spec;
    spec.A = A;
    spec.B = B;
    spec.C = C;
    spec.env = env;
    return spec;
}

BoundaryPoint boundary_point(const RegionSpec& spec, double theta)
{
    const Complex dir = std::polar(1.0, theta);
    const Complex rot = spec.C / std::abs(spec.C);
    if (is_lambda_zero(spec)) {
        // eta = 0 and t < 1/2: the envelope is the unit circle.
        return {theta, spec.A * spec.C * dir, rot * dir, Branch::cap};
    }
    const SupportPoint sp = support_point(spec.env, theta);
    return {theta, spec.map(sp.v), rot * dir, sp.branch};
}

Complex gamma(const RegionSpec& spec, double theta)
{
    return boundary_point(spec, theta).value;
}

Complex closed_form_circle(const RegionSpec& spec, double theta)
{
    const Regime regime = spec.regime();
    const bool on_arc = regime == Regime::ii
                        || (regime == Regime::iii && branch_gap(spec.env, theta) < -kBranchTolerance);
    if (!on_arc) {
        throw DomainError("closed_form_circle: theta is not on the circular part of the boundary");
    }
    const double t = spec.env.t;
    const Complex eta = spec.env.eta;
    const double d = t * t - std::norm(eta);
    const Complex w = ((1.0 + 4.0 * d) * t * std::polar(1.0, theta) - std::conj(eta)) / (4.0 * d);
    return spec.map(w);
}

std::pair<Complex, Complex> cap_endpoints(const RegionSpec& spec)
{
    const auto [t1, t2] = critical_angles(spec.env);
    const double t = spec.env.t;
    const Complex etac = std::conj(spec.env.eta);
    const double d = 2.0 * (t * t - std::norm(spec.env.eta));
    return {(t * std::polar(1.0, t1) - etac) / d, (t * std::polar(1.0, t2) - etac) / d};
}

bool on_cap(const RegionSpec& spec, Complex zeta)
{
    if (std::abs(std::abs(zeta) - 1.0) > kUnitTolerance) return false;
    switch (spec.regime()) {
    case Regime::i: return true;
    case Regime::ii: return false;
    case Regime::iii: break;
    }
    const auto [e1, e2] = cap_endpoints(spec);
    // theta = pi - arg(eta) always lies on the cap branch.
    const Complex ref = zeta_theta(spec.env, wrap_angle(kPi - std::arg(spec.env.eta)));
    const bool forward = ccw_angle(e1, ref) <= ccw_angle(e1, e2);
    const Complex from = forward ? e1 : e2;
    const Complex to = forward ? e2 : e1;
    const double span = ccw_angle(from, to);
    const double at = ccw_angle(from, zeta);
    return at <= span + kUnitTolerance || at >= 2.0 * kPi - kUnitTolerance;
}

Complex closed_form_cap(const RegionSpec& spec, Complex zeta)
{
    if (!on_cap(spec, zeta)) {
        throw DomainError("closed_form_cap: zeta is not on the cap part of the boundary");
    }
    return spec.map(zeta * (1.0 - spec.env.eta * zeta));
}

std::vector<Complex> BoundaryCurve::values() const
{
    std::vector<Complex> v;
    v.reserve(points.size());
    for (const auto& p : points) v.push_back(p.value);
    return v;
}

BoundaryCurve sample_boundary(const RegionSpec& spec, std::size_t n)
{
    if (n < 16) throw std::invalid_argument("sample_boundary: n must be >= 16");

    std::vector<double> thetas;
    thetas.reserve(n + 2);
    for (std::size_t k = 0; k < n; ++k) {
        thetas.push_back(-kPi + 2.0 * kPi * static_cast<double>(k + 1) / static_cast<double>(n));
    }
    thetas.back() = kPi;

    const bool mixed = !is_lambda_zero(spec) && spec.regime() == Regime::iii;
    std::vector<double> critical;
    if (mixed) {
        const auto [t1, t2] = critical_angles(spec.env);
        critical = {t1, t2};
        thetas.insert(thetas.end(), critical.begin(), critical.end());
        std::sort(thetas.begin(), thetas.end());
        thetas.erase(std::unique(thetas.begin(), thetas.end()), thetas.end());
    }

    BoundaryCurve curve;
    curve.points.reserve(thetas.size());
    for (double th : thetas) curve.points.push_back(boundary_point(spec, th));
    if (!mixed) return curve;

    const double tol = 1e-3 * diameter_bound(curve.values());
    for (double crit : critical) {
        for (int side : {-1, +1}) {
            // Bisect the interval next to the critical angle on this side until its chord is short.
            for (int depth = 0; depth < 40; ++depth) {
                const auto it = std::find_if(curve.points.begin(), curve.points.end(),
                                             [crit](const BoundaryPoint& p) { return p.theta == crit; });
                const auto i = static_cast<std::size_t>(it - curve.points.begin());
                const std::size_t m = curve.points.size();
                const std::size_t j = side < 0 ? (i + m - 1) % m : (i + 1) % m;
                if (std::abs(curve.points[i].value - curve.points[j].value) <= tol) break;
                double a = curve.points[i].theta;
                double b = curve.points[j].theta;
                if (side < 0 && b > a) b -= 2.0 * kPi;
                if (side > 0 && b < a) b += 2.0 * kPi;
                const double mid = wrap_angle(0.5 * (a + b));
                const auto pos = std::lower_bound(
                    curve.points.begin(), curve.points.end(), mid,
                    [](const BoundaryPoint& p, double x) { return p.theta < x; });
                curve.points.insert(pos, boundary_point(spec, mid));
            }
        }
    }
    return curve;
}

BoundaryCurve denormalize(BoundaryCurve curve, double phi, double xi)
{
    const Complex rot = std::polar(1.0, -(3.0 * phi - xi));
    for (auto& p : curve.points) {
        p.value *= rot;
        p.normal *= rot;
    }
    return curve;
}

bool polygon_is_convex(std::span<const Complex> polygon, double slack)
{
    const std::size_t m = polygon.size();
    if (m < 3) return true;
    const double orient = signed_area(polygon) >= 0.0 ? 1.0 : -1.0;
    const double diam = diameter_bound(polygon);
    const double limit = slack * diam * diam;
    for (std::size_t i = 0; i < m; ++i) {
        const Complex e1 = polygon[(i + 1) % m] - polygon[i];
        const Complex e2 = polygon[(i + 2) % m] - polygon[(i + 1) % m];
        if (orient * cross(e1, e2) < -limit) return false;
    }
    return true;
}

double support_excess(const BoundaryCurve& curve, Complex w)
{
    double worst = -std::numeric_limits<double>::infinity();
    for (const auto& p : curve.points) {
        worst = std::max(worst, std::real(std::conj(p.normal) * (w - p.value)));
    }
    return worst;
}

double polygon_excess(std::span<const Complex> polygon, Complex w)
{
    const std::size_t m = polygon.size();
    const double orient = signed_area(polygon) >= 0.0 ? 1.0 : -1.0;
    double worst = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < m; ++i) {
        const Complex a = polygon[i];
        const Complex e = polygon[(i + 1) % m] - a;
        const double len = std::abs(e);
        if (len == 0.0) continue;
        // Outward distance: negative cross product for a counter-clockwise polygon.
        worst = std::max(worst, -orient * cross(e, w - a) / len);
    }
    return worst;
}

} // namespace dvr
