#include "dvr/verify.hpp"

#include "dvr/boundary.hpp"
#include "dvr/dieudonne.hpp"
#include "dvr/format.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>
#include <sstream>

namespace dvr {
namespace {

constexpr double kPi = std::numbers::pi;

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start)
{
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

double uniform(std::mt19937_64& rng, double lo, double hi)
{
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

// Records `excess` for a sample; returns true when it is the new worst.
bool record(VerificationReport& report, double excess, bool violated)
{
    if (violated) ++report.violations;
    if (excess > report.max_violation) {
        report.max_violation = excess;
        return true;
    }
    return false;
}

} // namespace

void VerificationReport::merge(const VerificationReport& other)
{
    if (suite.empty()) {
        suite = other.suite;
    } else if (!other.suite.empty()) {
        suite += "+" + other.suite;
    }
    samples += other.samples;
    violations += other.violations;
    anomalies += other.anomalies;
    if (other.worst_case && (!worst_case || other.max_violation > max_violation)) {
        worst_case = other.worst_case;
    }
    max_violation = std::max(max_violation, other.max_violation);
    elapsed_ms += other.elapsed_ms;
    if (!other.note.empty()) note += (note.empty() ? "" : "; ") + other.note;
}

std::string to_json(const VerificationReport& r)
{
    std::ostringstream os;
    os << "{\"samples\": " << r.samples << ", \"violations\": " << r.violations
       << ", \"anomalies\": " << r.anomalies << ", \"max_violation\": " << format_real(r.max_violation)
       << ", \"seed\": " << r.seed << ", \"elapsed_ms\": " << format_real(r.elapsed_ms) << "}\n";
    return os.str();
}

std::string to_key_value(const VerificationReport& r)
{
    std::ostringstream os;
    os << "samples=" << r.samples << "\nviolations=" << r.violations << "\nanomalies=" << r.anomalies
       << "\nmax_violation=" << format_real(r.max_violation) << "\nseed=" << r.seed
       << "\nelapsed_ms=" << format_real(r.elapsed_ms) << "\n";
    return os.str();
}

std::mt19937_64 sample_rng(std::uint64_t seed, std::uint64_t index)
{
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
    return std::mt19937_64(seq);
}

Complex sample_disk(std::mt19937_64& rng, double radius)
{
    const double m = radius * std::sqrt(uniform(rng, 0.0, 1.0));
    return std::polar(m, uniform(rng, -kPi, kPi));
}

Complex sample_annulus(std::mt19937_64& rng, double rmin, double rmax)
{
    return std::polar(uniform(rng, rmin, rmax), uniform(rng, -kPi, kPi));
}

BlaschkeSpec sample_blaschke(std::mt19937_64& rng, int min_degree, int max_degree)
{
    if (max_degree < min_degree || min_degree < 0) {
        throw std::invalid_argument("sample_blaschke: invalid degree range");
    }
    BlaschkeSpec b;
    b.phase = uniform(rng, -kPi, kPi);
    const int degree = std::uniform_int_distribution<int>(min_degree, max_degree)(rng);
    b.zeros.reserve(static_cast<std::size_t>(degree));
    for (int k = 0; k < degree; ++k) {
        const double m = std::sqrt(uniform(rng, 0.0, 0.95 * 0.95));
        b.zeros.push_back(std::polar(m, uniform(rng, -kPi, kPi)));
    }
    return b;
}

BlaschkeSpec sample_self_map(std::mt19937_64& rng, int max_degree)
{
    return sample_blaschke(rng, 0, max_degree);
}

VerificationReport membership_audit(std::size_t n_samples, int max_degree, std::uint64_t seed)
{
    const auto start = Clock::now();
    VerificationReport report;
    report.suite = "membership";
    report.seed = seed;
    for (std::size_t i = 0; i < n_samples; ++i) {
        auto rng = sample_rng(seed, i);
        const BlaschkeSpec g = sample_blaschke(rng, 1, std::max(max_degree, 1));
        const Complex z0 = sample_annulus(rng, 0.1, 0.9);
        const Jet3 id = Jet3::variable(z0);
        const Jet3 f = id * blaschke_jet(g, id);
        ++report.samples;

        const InterpolationData data{z0, f.derivative(0), f.derivative(1), f.derivative(2)};
        ClosedDisk disk;
        try {
            disk = disk_order3(data);
        } catch (const InfeasibleError&) {
            ++report.anomalies;
            continue;
        } catch (const DomainError&) {
            ++report.anomalies;
            continue;
        }
        const double excess = disk.excess(f.derivative(3));
        if (record(report, excess, excess > 1e-9 * (1.0 + disk.radius))) {
            report.worst_case = WorstCase{g, z0, "excess outside the third-order disk"};
        }
    }
    report.elapsed_ms = elapsed_ms(start);
    return report;
}

VerificationReport extremal_audit(std::size_t n_samples, std::uint64_t seed)
{
    const auto start = Clock::now();
    VerificationReport report;
    report.suite = "extremal";
    report.seed = seed;
    for (std::size_t i = 0; i < n_samples; ++i) {
        auto rng = sample_rng(seed, i);
        const Complex z0 = sample_annulus(rng, 0.1, 0.9);
        const Complex w0 = std::polar(uniform(rng, 0.0, 0.999) * std::abs(z0), uniform(rng, -kPi, kPi));
        const Complex lambda = sample_disk(rng, 0.95);
        const Complex mu = sample_disk(rng, 0.95);
        const double theta = uniform(rng, -kPi, kPi);
        ++report.samples;

        const InterpolationData data{z0, w0, w1_from_lambda(z0, w0, lambda),
                                     w2_from_lambda_mu(z0, w0, lambda, mu)};
        const NormalizedConfig cfg = normalize(data);
        const Jet3 f = eval_extremal(extremal_spec(cfg, 3, theta), z0);
        const ClosedDisk disk = disk_order3(z0, w0, lambda, mu);

        const double fit = std::max({std::abs(f.derivative(0) - w0),
                                     std::abs(f.derivative(1) - *data.w1) / (1.0 + std::abs(*data.w1)),
                                     std::abs(f.derivative(2) - *data.w2) / (1.0 + std::abs(*data.w2))});
        if (fit > 1e-10) ++report.anomalies;

        const Complex target = disk.center + disk.radius * std::polar(1.0, theta);
        const double off = std::abs(std::abs(f.derivative(3) - disk.center) - disk.radius);
        const double angle = std::abs(f.derivative(3) - target);
        const double excess = std::max(off, angle);
        if (record(report, excess, excess > 1e-8 * (1.0 + disk.radius))) {
            report.worst_case = WorstCase{{}, z0, "extremal third derivative off the boundary circle"};
        }
    }
    report.elapsed_ms = elapsed_ms(start);
    return report;
}

VerificationReport regime2_search(std::size_t grid_density)
{
    const auto start = Clock::now();
    VerificationReport report;
    report.suite = "regime2";
    const double n = static_cast<double>(grid_density);
    double closest = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < grid_density; ++i) {
        const double r = (static_cast<double>(i) + 0.5) / n;
        for (std::size_t j = 0; j < grid_density; ++j) {
            const double s = r * static_cast<double>(j) / n;
            for (std::size_t k = 0; k < grid_density; ++k) {
                const double m = static_cast<double>(k) / n;
                for (std::size_t l = 0; l < grid_density; ++l) {
                    const Complex lambda = std::polar(m, 2.0 * kPi * static_cast<double>(l) / n);
                    const RegionSpec spec = region_spec(r, s, lambda);
                    const double margin = spec.env.t - std::abs(spec.env.eta) - 0.5;
                    closest = std::max(closest, margin);
                    ++report.samples;
                    if (margin >= 0.0) {
                        ++report.violations;
                        if (record(report, margin, false) || !report.worst_case) {
                            report.worst_case = WorstCase{{}, r, "regime ii reached"};
                        }
                    }
                }
            }
        }
    }
    report.note = "max(t - |eta|) - 1/2 = " + format_real(closest);
    report.elapsed_ms = elapsed_ms(start);
    return report;
}

std::array<Complex, 4> contour_derivatives(const std::function<Complex(Complex)>& f, Complex z0,
                                           double radius, int nodes)
{
    if (nodes < 8 || !(radius > 0.0)) throw std::invalid_argument("contour_derivatives: bad stencil");
    std::array<Complex, 4> coeff{};
    for (int j = 0; j < nodes; ++j) {
        const Complex w = std::polar(1.0, 2.0 * kPi * j / nodes);
        const Complex v = f(z0 + radius * w);
        Complex wk{1.0, 0.0};
        for (auto& c : coeff) {
            c += v / wk;
            wk *= w;
        }
    }
    static constexpr std::array<double, 4> factorial{1.0, 1.0, 2.0, 6.0};
    double scale = 1.0;
    for (std::size_t k = 0; k < 4; ++k) {
        coeff[k] *= factorial[k] / (nodes * scale);
        scale *= radius;
    }
    return coeff;
}

VerificationReport fd_audit(std::size_t n_samples, std::uint64_t seed, double min_radius,
                            double max_radius, double threshold)
{
    const auto start = Clock::now();
    VerificationReport report;
    report.suite = "fd";
    report.seed = seed;
    for (std::size_t i = 0; i < n_samples; ++i) {
        auto rng = sample_rng(seed, i);
        const BlaschkeSpec g = sample_blaschke(rng, 1, 4);
        const MoebiusParam a(sample_disk(rng, 0.5));
        const Complex z0 = sample_annulus(rng, min_radius, max_radius);
        ++report.samples;

        const Jet3 id = Jet3::variable(z0);
        const Jet3 jet = id * blaschke_jet(g, moebius_jet(a, id));
        const auto oracle = contour_derivatives(
            [&](Complex z) { return z * blaschke(g, moebius(a, z)); }, z0, 0.5 * (1.0 - std::abs(z0)));

        double err = 0.0;
        for (int k = 1; k <= 3; ++k) {
            const auto uk = static_cast<std::size_t>(k);
            err = std::max(err, std::abs(jet.derivative(k) - oracle[uk]) / std::max(std::abs(oracle[uk]), 1.0));
        }
        if (record(report, err, err > threshold)) {
            report.worst_case = WorstCase{g, z0, "jet vs contour derivative mismatch"};
        }
    }
    report.elapsed_ms = elapsed_ms(start);
    return report;
}

} // namespace dvr
