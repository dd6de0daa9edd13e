#pragma once

#include "dvr/complex_jet.hpp"
#include "dvr/envelope.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace dvr {

/// Region of f'''(r) over f(r) = s, f'(r) = s/r + (r^2 - s^2)/(r (1 - r^2)) lambda,
/// written as the affine image A (B + C V) of the envelope V of `env`.
struct RegionSpec {
    // Only meaningful when from_parameters is set.
    double r = 0.0;
    double s = 0.0;
    Complex lambda;
    bool from_parameters = false;

    double A = 1.0;
    Complex B;
    Complex C{1.0, 0.0};
    EnvelopeConfig env;

    Regime regime() const { return classify_regime(env); }
    /// A (B + C w).
    Complex map(Complex w) const { return A * (B + C * w); }
};

/// Requires 0 <= s < r < 1 and |lambda| < 1.
RegionSpec region_spec(double r, double s, Complex lambda);

/// Affine image of an arbitrary envelope configuration (not necessarily
/// attainable from any (r, s, lambda)).
RegionSpec region_spec(const EnvelopeConfig& env, double A = 1.0, Complex B = {}, Complex C = {1.0, 0.0});

struct BoundaryPoint {
    double theta = 0.0;
    Complex value;
    Complex normal; // unit outward normal
    Branch branch = Branch::cap;
};

BoundaryPoint boundary_point(const RegionSpec& spec, double theta);

/// Boundary point with outward normal e^{i (theta + arg C)}.
Complex gamma(const RegionSpec& spec, double theta);

/// Full-circle closed form, valid in regime ii and on the arc part of regime iii.
/// Throws DomainError elsewhere.
Complex closed_form_circle(const RegionSpec& spec, double theta);

/// A (B + C c(zeta)) for |zeta| = 1, valid in regime i and on the closed subarc J
/// of regime iii. Throws DomainError elsewhere.
Complex closed_form_cap(const RegionSpec& spec, Complex zeta);

/// Endpoints of the cap arc J (regime iii only), ordered as (zeta_{theta1}, zeta_{theta2}).
std::pair<Complex, Complex> cap_endpoints(const RegionSpec& spec);

/// True when |zeta| = 1 and zeta lies on the cap part of the boundary.
bool on_cap(const RegionSpec& spec, Complex zeta);

struct BoundaryCurve {
    std::vector<BoundaryPoint> points; // ordered by theta
    bool closed = true;

    std::vector<Complex> values() const;
};

/// n uniform angles in (-pi, pi]; in regime iii the critical angles are inserted
/// and the neighbouring intervals are bisected until chords are below 1e-3 of
/// the region's diameter. Requires n >= 16.
BoundaryCurve sample_boundary(const RegionSpec& spec, std::size_t n);

/// Rotates a normalized-frame curve by e^{-i(3 phi - xi)}.
BoundaryCurve denormalize(BoundaryCurve curve, double phi, double xi);

/// Cross products of consecutive edges share one sign up to `slack`
/// (relative to the squared diameter).
bool polygon_is_convex(std::span<const Complex> polygon, double slack = 1e-10);

/// Largest signed distance of w beyond the supporting lines of the curve
/// (<= 0 means inside). Every supporting line contains the whole region, so
/// this never reports true interior points as outside.
double support_excess(const BoundaryCurve& curve, Complex w);

/// Largest signed distance of w outside the polygon of the sampled values.
double polygon_excess(std::span<const Complex> polygon, Complex w);

} // namespace dvr
