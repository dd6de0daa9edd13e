#include "dvr/envelope.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

using dvr::Branch;
using dvr::Complex;
using dvr::EnvelopeConfig;
using dvr::Regime;

namespace {

constexpr double kPi = std::numbers::pi;

double grid_theta(int k, int n) { return -kPi + 2.0 * kPi * (k + 1) / n; }

const std::vector<EnvelopeConfig> kConfigs = {
    {0.3, 0.0},
    {0.7, 0.0},
    {0.3, Complex{0.1, 0.05}},
    {0.45, std::polar(0.2, kPi / 3.0)},
    {0.45, 0.2},
    {0.7, Complex{-0.05, 0.1}},
    {0.9, std::polar(0.6, -2.0)},
    {0.35, std::polar(0.3, 1.0)},
};

} // namespace

TEST_CASE("circle family examples")
{
    const EnvelopeConfig cfg{0.4, Complex{0.1, -0.2}};
    const auto d0 = dvr::circle_family(cfg, 0.0);
    CHECK(d0.center == Complex{0.0});
    CHECK(d0.radius == 0.4);

    const Complex z = std::polar(1.0, 0.7);
    const auto d1 = dvr::circle_family(cfg, z);
    CHECK(d1.radius == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(std::abs(d1.center - z * (1.0 - cfg.eta * z)) < 1e-16);

    const auto d2 = dvr::circle_family({0.4, 0.0}, 0.5);
    CHECK(d2.center == Complex{0.5});
    CHECK(d2.radius == doctest::Approx(0.3));

    CHECK_THROWS_AS(dvr::circle_family(cfg, 1.1), dvr::DomainError);
}

TEST_CASE("configuration validation")
{
    CHECK_THROWS_AS(EnvelopeConfig({0.0, 0.0}).validate(), dvr::DomainError);
    CHECK_THROWS_AS(EnvelopeConfig({0.2, 0.3}).validate(), dvr::DomainError);
    CHECK_THROWS_AS(dvr::solve_t_theta({0.2, Complex{0.0, 0.2}}, 0.0), dvr::DomainError);
    CHECK_NOTHROW(EnvelopeConfig({0.2, 0.19}).validate());
}

TEST_CASE("eta = 0: both branches in closed form")
{
    for (int k = 0; k < 32; ++k) {
        const double theta = grid_theta(k, 32);
        const Complex e = std::polar(1.0, theta);

        const EnvelopeConfig small{0.3, 0.0};
        CHECK(dvr::solve_t_theta(small, theta) == doctest::Approx(0.5).epsilon(1e-15));
        CHECK(std::abs(dvr::zeta_theta(small, theta) - e) < 1e-14);
        const auto p = dvr::support_point(small, theta);
        CHECK(p.branch == Branch::cap);
        CHECK(std::abs(p.v - e) < 1e-14);

        const EnvelopeConfig big{0.7, 0.0};
        CHECK(dvr::solve_t_theta(big, theta) == 0.7);
        CHECK(std::abs(dvr::zeta_theta(big, theta) - e / 1.4) < 1e-15);
        const auto q = dvr::support_point(big, theta);
        CHECK(q.branch == Branch::arc);
        CHECK(std::abs(q.v - e * (0.7 + 1.0 / 2.8)) < 1e-14);
    }
}

TEST_CASE("root branch: defining residual and unit modulus")
{
    const EnvelopeConfig cfg{0.45, std::polar(0.2, kPi / 3.0)};
    const double x = dvr::solve_t_theta(cfg, 0.0);
    CHECK(x > std::abs(cfg.eta));
    CHECK(std::abs(dvr::defining_residual(cfg, 0.0, x)) <= 1e-12);

    for (const auto& c : kConfigs) {
        for (int k = 0; k < 720; ++k) {
            const double theta = grid_theta(k, 720);
            const auto p = dvr::support_point(c, theta);
            if (p.branch == Branch::cap) {
                CHECK(std::abs(dvr::defining_residual(c, theta, p.t_theta)) <= 1e-12);
                CHECK(std::abs(std::abs(p.zeta) - 1.0) <= 1e-10);
            } else {
                CHECK(p.t_theta == c.t);
                CHECK(std::abs(p.zeta) < 1.0);
            }
        }
    }
}

TEST_CASE("support property against a brute-force member grid")
{
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<> u(0.0, 1.0);
    std::vector<Complex> zetas;
    for (int j = 0; j < 1000; ++j) zetas.push_back(std::polar(std::sqrt(u(rng)), 2.0 * kPi * u(rng)));
    for (int j = 0; j < 64; ++j) zetas.push_back(std::polar(1.0, 2.0 * kPi * j / 64.0));

    for (const auto& c : kConfigs) {
        for (int k = 0; k < 90; ++k) {
            const double theta = grid_theta(k, 90);
            const Complex e = std::polar(1.0, theta);
            const auto p = dvr::support_point(c, theta);
            const double h = std::real(std::conj(e) * p.v);
            for (const Complex z : zetas) {
                const auto d = dvr::circle_family(c, z);
                CHECK(std::real(std::conj(e) * d.center) + d.radius <= h + 1e-8);
            }
            // v itself belongs to the member disk at zeta_theta.
            const auto own = dvr::circle_family(c, p.zeta);
            CHECK(own.excess(p.v) <= 1e-12);
        }
    }
}

TEST_CASE("boundary parametrization is injective, convex and continuous")
{
    for (const auto& c : kConfigs) {
        std::vector<Complex> v;
        for (int k = 0; k < 720; ++k) v.push_back(dvr::support_point(c, grid_theta(k, 720)).v);

        double min_gap = 1e300, max_step = 0.0, diameter = 0.0;
        for (std::size_t i = 0; i < v.size(); ++i) {
            for (std::size_t j = i + 1; j < v.size(); ++j) {
                min_gap = std::min(min_gap, std::abs(v[i] - v[j]));
                diameter = std::max(diameter, std::abs(v[i] - v[j]));
            }
            max_step = std::max(max_step, std::abs(v[(i + 1) % v.size()] - v[i]));
        }
        CHECK(min_gap > 0.0);
        // Consecutive points stay close: no jumps across the branch switch.
        CHECK(max_step < 0.05 * diameter);

        int sign = 0;
        bool convex = true;
        for (std::size_t i = 0; i < v.size(); ++i) {
            const Complex a = v[(i + 1) % v.size()] - v[i];
            const Complex b = v[(i + 2) % v.size()] - v[(i + 1) % v.size()];
            const double cross = std::imag(std::conj(a) * b);
            if (std::abs(cross) <= 1e-10 * diameter * diameter) continue;
            const int sg = cross > 0 ? 1 : -1;
            if (sign == 0) sign = sg;
            convex = convex && sg == sign;
        }
        CHECK(convex);
    }
}

TEST_CASE("regime classification")
{
    CHECK(dvr::classify_regime({0.3, 0.1}) == Regime::i);
    CHECK(dvr::classify_regime({0.7, 0.1}) == Regime::ii);
    CHECK(dvr::classify_regime({0.45, 0.2}) == Regime::iii);
    // Boundaries are closed on both sides.
    CHECK(dvr::classify_regime({0.25, 0.25 - 1e-3}) == Regime::i);
    CHECK(dvr::classify_regime({0.5, 0.0}) == Regime::i);
    CHECK(dvr::classify_regime({0.75, 0.25}) == Regime::ii);
    CHECK(std::string(dvr::to_string(Regime::iii)) == "iii");
    CHECK(std::string(dvr::to_string(Branch::arc)) == "arc");
}

TEST_CASE("branch selection per regime")
{
    for (int k = 0; k < 360; ++k) {
        const double theta = grid_theta(k, 360);
        CHECK(dvr::support_point({0.3, Complex{0.1, 0.05}}, theta).branch == Branch::cap);
        CHECK(dvr::support_point({0.7, Complex{-0.05, 0.1}}, theta).branch == Branch::arc);
    }
}

TEST_CASE("critical angles solve the switching equation")
{
    for (const EnvelopeConfig c : {EnvelopeConfig{0.45, 0.2}, EnvelopeConfig{0.45, std::polar(0.2, kPi / 3.0)},
                                   EnvelopeConfig{0.9, std::polar(0.6, -2.0)},
                                   EnvelopeConfig{0.35, std::polar(0.3, 1.0)}}) {
        const auto [a, b] = dvr::critical_angles(c);
        CHECK(-kPi < a);
        CHECK(a < b);
        CHECK(b <= kPi);
        CHECK(std::abs(dvr::branch_gap(c, a)) < 1e-12);
        CHECK(std::abs(dvr::branch_gap(c, b)) < 1e-12);

        // Symmetric about -arg(eta).
        const double mid = -std::arg(c.eta);
        CHECK(std::abs(std::cos(a - mid) - std::cos(b - mid)) < 1e-12);
        const double m = std::abs(c.eta), d = c.t * c.t - m * m;
        CHECK(std::cos(a - mid) == doctest::Approx((c.t * c.t + m * m - 4 * d * d) / (2 * c.t * m)).epsilon(1e-12));

        // Left and right limits of v agree at the switch.
        for (const double th : {a, b}) {
            const Complex left = dvr::support_point(c, th - 1e-9).v;
            const Complex right = dvr::support_point(c, th + 1e-9).v;
            CHECK(std::abs(left - right) < 1e-8);
        }
    }
    CHECK_THROWS_AS(dvr::critical_angles({0.3, 0.1}), dvr::DomainError);
    CHECK_THROWS_AS(dvr::critical_angles({0.7, 0.1}), dvr::DomainError);
}

TEST_CASE("wrap_angle maps into (-pi, pi]")
{
    CHECK(dvr::wrap_angle(kPi) == doctest::Approx(kPi));
    CHECK(dvr::wrap_angle(-kPi) == doctest::Approx(kPi));
    CHECK(dvr::wrap_angle(3.0 * kPi / 2.0) == doctest::Approx(-kPi / 2.0));
    CHECK(dvr::wrap_angle(0.25) == 0.25);
}
