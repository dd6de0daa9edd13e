#include "dvr/complex_jet.hpp"
#include "dvr/verify.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <cmath>

using dvr::Complex;
using dvr::Jet3;

namespace {

double rel(Complex got, Complex want) { return std::abs(got - want) / std::max(std::abs(want), 1.0); }

} // namespace

TEST_CASE("jet product of z with itself is z^2")
{
    const Jet3 z{0.0, 1.0, 0.0, 0.0};
    CHECK(z * z == Jet3{0.0, 0.0, 1.0, 0.0});
}

TEST_CASE("composing the identity jet leaves a jet unchanged")
{
    const Jet3 j{Complex{0.3, -0.1}, Complex{1.5, 2.0}, Complex{-0.7, 0.2}, Complex{0.05, 4.0}};
    CHECK(dvr::compose(Jet3::variable(j.a[0]), j) == j);
    CHECK(dvr::compose(j, Jet3::variable(0.25)) == j);
}

TEST_CASE("third derivative of 1/(1-z) via jet division matches finite differences")
{
    const Complex z0 = 0.3;
    const Jet3 f = Jet3::constant(1.0) / (Jet3::constant(1.0) - Jet3::variable(z0));
    const auto g = [](Complex z) { return 1.0 / (1.0 - z); };
    const Complex fd = dvr::oracle::d3(g, z0, 5e-3);
    CHECK(rel(f.derivative(3), fd) < 1e-6);
    CHECK(std::abs(f.derivative(3) - 6.0 / std::pow(0.7, 4)) < 1e-12);
}

TEST_CASE("division by a jet with zero constant term is a domain error")
{
    CHECK_THROWS_AS(dvr::reciprocal(Jet3::variable(0.0)), dvr::DomainError);
    CHECK_THROWS_AS(Jet3::constant(1.0) / Jet3{}, dvr::DomainError);
}

TEST_CASE("derivative order outside 0..3 is rejected")
{
    CHECK_THROWS_AS((void)Jet3::variable(0.0).derivative(4), std::out_of_range);
}

TEST_CASE("Moebius jet: identity, value at origin, symbolic derivatives")
{
    const Jet3 z = Jet3::variable(Complex{0.1, -0.4});
    CHECK(dvr::jet_distance(dvr::moebius_jet(dvr::MoebiusParam(0.0), z), z) == 0.0);

    const Jet3 at0 = dvr::moebius_jet(dvr::MoebiusParam(0.5), Jet3::constant(0.0));
    CHECK(at0 == Jet3::constant(0.5));

    // T_a(z) = (z + a)/(1 + conj(a) z):  T' = (1 - |a|^2)/D^2, T'' = -2 c (1 - |a|^2)/D^3,
    // T''' = 6 c^2 (1 - |a|^2)/D^4 with c = conj(a), D = 1 + c z.
    const Complex a{0.3, 0.4};
    const Complex z0 = 0.2;
    const Complex c = std::conj(a);
    const Complex d = 1.0 + c * z0;
    const double k = 1.0 - std::norm(a);
    const Jet3 j = dvr::moebius_jet(dvr::MoebiusParam(a), Jet3::variable(z0));
    CHECK(std::abs(j.derivative(0) - (z0 + a) / d) < 1e-15);
    CHECK(std::abs(j.derivative(1) - k / (d * d)) < 1e-14);
    CHECK(std::abs(j.derivative(2) - (-2.0 * c * k / (d * d * d))) < 1e-14);
    CHECK(std::abs(j.derivative(3) - 6.0 * c * c * k / (d * d * d * d)) < 1e-13);
}

TEST_CASE("Moebius parameters and poles are validated")
{
    CHECK_THROWS_AS(dvr::MoebiusParam(1.0), dvr::DomainError);
    CHECK_THROWS_AS(dvr::MoebiusParam(Complex{0.8, 0.6}), dvr::DomainError);
    const dvr::MoebiusParam a(0.5);
    CHECK_THROWS_AS(dvr::moebius_jet(a, Jet3::variable(-2.0)), dvr::DomainError);
    CHECK_THROWS_AS(dvr::moebius(a, -2.0), dvr::DomainError);
}

TEST_CASE("T_a composed with T_{-a} is the identity jet")
{
    auto rng = dvr::sample_rng(11, 0);
    for (int trial = 0; trial < 200; ++trial) {
        const Complex a = dvr::sample_disk(rng, 0.95);
        const Complex z = dvr::sample_disk(rng, 0.9);
        const Jet3 inner = dvr::moebius_jet(dvr::MoebiusParam(-a), Jet3::variable(z));
        const Jet3 outer = dvr::moebius_jet(dvr::MoebiusParam(a), Jet3::variable(inner.value()));
        CHECK(dvr::jet_distance(dvr::compose(outer, inner), Jet3::variable(z)) < 1e-12);
    }
}

TEST_CASE("empty Blaschke product is the constant 1")
{
    const dvr::BlaschkeSpec b;
    CHECK(dvr::blaschke_jet(b, Complex{0.3, 0.2}) == Jet3::constant(1.0));
}

TEST_CASE("single-zero Blaschke product at its zero is a scaled Moebius jet")
{
    const Complex z0{0.35, -0.25};
    const double phase = 0.9;
    const dvr::BlaschkeSpec b{phase, {z0}};
    const Jet3 j = dvr::blaschke_jet(b, z0);
    CHECK(std::abs(j.value()) < 1e-16);
    CHECK(std::abs(j.derivative(1) - std::polar(1.0, phase) / (1.0 - std::norm(z0))) < 1e-14);
    const Jet3 m = std::polar(1.0, phase) * dvr::moebius_jet(dvr::MoebiusParam(-z0), Jet3::variable(z0));
    CHECK(dvr::jet_distance(j, m) < 1e-14);
}

TEST_CASE("Blaschke products stay inside the disk and match finite differences")
{
    auto rng = dvr::sample_rng(5, 0);
    for (int trial = 0; trial < 100; ++trial) {
        const dvr::BlaschkeSpec b = dvr::sample_blaschke(rng, 3, 3);
        const Complex z0 = 0.4;
        const Jet3 j = dvr::blaschke_jet(b, z0);
        CHECK(std::abs(j.value()) < 1.0);
        const auto f = [&](Complex z) { return dvr::oracle::blaschke(b.phase, b.zeros, z); };
        const auto ref = dvr::oracle::derivatives(f, z0, 0.25);
        for (int k = 1; k <= 3; ++k) CHECK(rel(j.derivative(k), ref[static_cast<std::size_t>(k)]) < 1e-6);
    }
}

TEST_CASE("Blaschke zeros on or outside the circle are rejected")
{
    const dvr::BlaschkeSpec b{0.0, {Complex{1.0, 0.0}}};
    CHECK_THROWS_AS(b.validate(), dvr::DomainError);
    CHECK_THROWS_AS(dvr::blaschke_jet(dvr::BlaschkeSpec{}, Complex{1.0, 0.0}), dvr::DomainError);
}

TEST_CASE("property: jets of random compositions agree with finite differences")
{
    auto rng = dvr::sample_rng(21, 0);
    double worst = 0.0;
    for (int trial = 0; trial < 300; ++trial) {
        const dvr::BlaschkeSpec b = dvr::sample_blaschke(rng, 1, 5);
        const Complex a = dvr::sample_disk(rng, 0.6);
        const Complex z0 = dvr::sample_disk(rng, 0.6);
        const Jet3 id = Jet3::variable(z0);
        const Jet3 j = id * dvr::blaschke_jet(b, dvr::moebius_jet(dvr::MoebiusParam(a), id));
        const auto f = [&](Complex z) {
            return z * dvr::oracle::blaschke(b.phase, b.zeros, dvr::oracle::mobius(a, z));
        };
        const auto ref = dvr::oracle::derivatives(f, z0, 0.4 * (1.0 - std::abs(z0)));
        for (int k = 1; k <= 3; ++k) worst = std::max(worst, rel(j.derivative(k), ref[static_cast<std::size_t>(k)]));
    }
    CHECK(worst < 1e-5);
}
