#pragma once

#include <array>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace dvr {

using Complex = std::complex<double>;

/// Raised when an argument leaves the domain of an operation (pole crossing,
/// point outside the unit disk, zero constant term in a jet division).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Degree-3 truncated Taylor expansion f(b + h) = a0 + a1 h + a2 h^2 + a3 h^3 + O(h^4)
/// about a fixed base point b. The base point itself is not stored; jets only
/// combine meaningfully when they share it.
struct Jet3 {
    std::array<Complex, 4> a{};

    constexpr Jet3() = default;
    constexpr Jet3(Complex a0, Complex a1, Complex a2, Complex a3) : a{a0, a1, a2, a3} {}

    static constexpr Jet3 constant(Complex c) { return {c, 0.0, 0.0, 0.0}; }
    /// Jet of the identity map at z0.
    static constexpr Jet3 variable(Complex z0) { return {z0, 1.0, 0.0, 0.0}; }

    constexpr Complex value() const { return a[0]; }

    /// k-th derivative, k = 0..3 (k! * a_k).
    Complex derivative(int k) const;

    Jet3& operator+=(const Jet3& o);
    Jet3& operator-=(const Jet3& o);
    Jet3& operator*=(const Jet3& o);
    Jet3& operator/=(const Jet3& o);
    Jet3& operator*=(Complex s);

    friend bool operator==(const Jet3&, const Jet3&) = default;
};

Jet3 operator+(Jet3 x, const Jet3& y);
Jet3 operator-(Jet3 x, const Jet3& y);
Jet3 operator-(const Jet3& x);
Jet3 operator*(Jet3 x, const Jet3& y);
Jet3 operator*(Complex s, Jet3 x);
Jet3 operator*(Jet3 x, Complex s);
Jet3 operator/(Jet3 x, const Jet3& y);
Jet3 operator+(Jet3 x, Complex s);
Jet3 operator+(Complex s, Jet3 x);

/// Degree-3 reciprocal series. Throws DomainError when x.a0 == 0.
Jet3 reciprocal(const Jet3& x);

/// Jet of F o G at the base point of G, where `outer` is the jet of F taken at
/// G(b) = inner.a0 (Faa di Bruno to order 3).
Jet3 compose(const Jet3& outer, const Jet3& inner);

/// Max componentwise distance between two jets.
double jet_distance(const Jet3& x, const Jet3& y);

/// Parameter of the disk automorphism T_a(z) = (z + a) / (1 + conj(a) z).
class MoebiusParam {
public:
    /// Throws DomainError unless |a| < 1.
    explicit MoebiusParam(Complex a);

    Complex value() const { return a_; }
    MoebiusParam inverse() const { return MoebiusParam(-a_); }

private:
    Complex a_;
};

/// T_a(z) evaluated pointwise. Throws DomainError at the pole.
Complex moebius(const MoebiusParam& a, Complex z);

/// Jet of T_a along the jet z. Throws DomainError when 1 + conj(a) z.a0 == 0.
Jet3 moebius_jet(const MoebiusParam& a, const Jet3& z);

/// e^{i phase} prod_j (z - z_j) / (1 - conj(z_j) z).
struct BlaschkeSpec {
    double phase = 0.0;
    std::vector<Complex> zeros;

    /// Throws DomainError if a zero is not strictly inside the unit disk.
    void validate() const;
    std::size_t degree() const { return zeros.size(); }
};

Complex blaschke(const BlaschkeSpec& b, Complex z);

/// Jet of the Blaschke product at z0, |z0| < 1.
Jet3 blaschke_jet(const BlaschkeSpec& b, Complex z0);

/// Same, along an arbitrary inner jet (used for compositions).
Jet3 blaschke_jet(const BlaschkeSpec& b, const Jet3& z);

std::string to_string(const Jet3& j);

} // namespace dvr
