#pragma once

#include "dvr/complex_jet.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>

namespace dvr {

struct WorstCase {
    BlaschkeSpec map; // f = z * map (empty for grid searches)
    Complex z0;
    std::string detail;
};

/// Outcome of one Monte-Carlo or grid check. `max_violation` is suite specific:
/// distance outside the disk (membership), boundary offset (extremal),
/// relative error (fd), margin above 1/2 (regime2).
struct VerificationReport {
    std::string suite;
    std::uint64_t samples = 0;
    std::uint64_t violations = 0;
    std::uint64_t anomalies = 0;
    double max_violation = 0.0;
    std::uint64_t seed = 0;
    double elapsed_ms = 0.0;
    std::optional<WorstCase> worst_case;
    std::string note;

    bool passed() const { return violations == 0; }
    void merge(const VerificationReport& other);
};

/// Flat JSON object with exactly: samples, violations, anomalies, max_violation, seed, elapsed_ms.
std::string to_json(const VerificationReport& report);

/// The same fields as `key=value` lines.
std::string to_key_value(const VerificationReport& report);

/// Independent generator for sample `index` of a run with `seed`.
std::mt19937_64 sample_rng(std::uint64_t seed, std::uint64_t index);

/// Uniform phase; degree uniform in [min_degree, max_degree]; zeros with |z|^2
/// uniform in (0, 0.95^2) and uniform argument.
BlaschkeSpec sample_blaschke(std::mt19937_64& rng, int min_degree, int max_degree);

/// g for f = z g: degree uniform in [0, max_degree].
BlaschkeSpec sample_self_map(std::mt19937_64& rng, int max_degree);

/// |z| uniform in [rmin, rmax], uniform argument.
Complex sample_annulus(std::mt19937_64& rng, double rmin, double rmax);

/// Point of the closed disk of radius `radius` with |z|^2 uniform.
Complex sample_disk(std::mt19937_64& rng, double radius);

/// f'''(z0) of random f = z B (deg B in [1, max_degree], |z0| in [0.1, 0.9]) against
/// the third-order disk built from the extracted Schur parameters. A violation is
/// an excess above 1e-9 (1 + rho).
VerificationReport membership_audit(std::size_t n_samples, int max_degree, std::uint64_t seed);

/// Depth-3 extremals for random (z0, w0, lambda, mu, theta): counts
/// ||f''' - c| - rho| > 1e-8 (1 + rho) as violations and interpolation mismatches
/// as anomalies.
VerificationReport extremal_audit(std::size_t n_samples, std::uint64_t seed);

/// Searches admissible (r, s, lambda) on a grid (r, s/r, |lambda|, arg lambda each
/// with `grid_density` nodes, s = 0 included) for t - |eta| >= 1/2.
VerificationReport regime2_search(std::size_t grid_density);

/// f^{(k)}(z0), k = 0..3, from the trapezoidal Cauchy integral on the circle
/// |z - z0| = radius with `nodes` points. Uses only pointwise values of f.
std::array<Complex, 4> contour_derivatives(const std::function<Complex(Complex)>& f, Complex z0,
                                           double radius, int nodes = 32);

/// Jet derivatives of f(z) = z B(T_a(z)) (deg B <= 4, |a| <= 0.5) against
/// contour_derivatives; relative error |jet - oracle| / max(|oracle|, 1) above
/// `threshold` is a violation. |z0| is drawn uniformly from [min_radius, max_radius].
VerificationReport fd_audit(std::size_t n_samples, std::uint64_t seed, double min_radius = 0.0,
                            double max_radius = 0.5, double threshold = 1e-5);

} // namespace dvr
