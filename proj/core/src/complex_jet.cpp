#include "dvr/complex_jet.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace dvr {

Complex Jet3::derivative(int k) const
{
    static constexpr std::array<double, 4> factorial{1.0, 1.0, 2.0, 6.0};
    if (k < 0 || k > 3) {
        throw std::out_of_range("Jet3::derivative: order must be in 0..3");
    }
    return factorial[static_cast<std::size_t>(k)] * a[static_cast<std::size_t>(k)];
}

Jet3& Jet3::operator+=(const Jet3& o)
{
    for (std::size_t k = 0; k < 4; ++k) a[k] += o.a[k];
    return *this;
}

Jet3& Jet3::operator-=(const Jet3& o)
{
    for (std::size_t k = 0; k < 4; ++k) a[k] -= o.a[k];
    return *this;
}

Jet3& Jet3::operator*=(const Jet3& o)
{
    const auto& x = a;
    const auto& y = o.a;
    *this = Jet3(x[0] * y[0],
                 x[0] * y[1] + x[1] * y[0],
                 x[0] * y[2] + x[1] * y[1] + x[2] * y[0],
                 x[0] * y[3] + x[1] * y[2] + x[2] * y[1] + x[3] * y[0]);
    return *this;
}

Jet3& Jet3::operator/=(const Jet3& o) { return *this *= reciprocal(o); }

Jet3& Jet3::operator*=(Complex s)
{
    for (auto& c : a) c *= s;
    return *this;
}

Jet3 operator+(Jet3 x, const Jet3& y) { return x += y; }
Jet3 operator-(Jet3 x, const Jet3& y) { return x -= y; }
Jet3 operator-(const Jet3& x) { return Jet3{} - x; }
Jet3 operator*(Jet3 x, const Jet3& y) { return x *= y; }
Jet3 operator*(Complex s, Jet3 x) { return x *= s; }
Jet3 operator*(Jet3 x, Complex s) { return x *= s; }
Jet3 operator/(Jet3 x, const Jet3& y) { return x /= y; }

Jet3 operator+(Jet3 x, Complex s)
{
    x.a[0] += s;
    return x;
}

Jet3 operator+(Complex s, Jet3 x) { return std::move(x) + s; }

Jet3 reciprocal(const Jet3& x)
{
    if (x.a[0] == Complex{}) {
        throw DomainError("jet reciprocal: constant term is zero");
    }
    // b_k = -(1/a0) sum_{j=1..k} a_j b_{k-j}
    std::array<Complex, 4> b{};
    b[0] = 1.0 / x.a[0];
    for (std::size_t k = 1; k < 4; ++k) {
        Complex acc{};
        for (std::size_t j = 1; j <= k; ++j) acc += x.a[j] * b[k - j];
        b[k] = -acc * b[0];
    }
    return {b[0], b[1], b[2], b[3]};
}

Jet3 compose(const Jet3& outer, const Jet3& inner)
{
    const auto& f = outer.a;
    const auto& g = inner.a;
    return {f[0],
            f[1] * g[1],
            f[1] * g[2] + f[2] * g[1] * g[1],
            f[1] * g[3] + 2.0 * f[2] * g[1] * g[2] + f[3] * g[1] * g[1] * g[1]};
}

double jet_distance(const Jet3& x, const Jet3& y)
{
    double d = 0.0;
    for (std::size_t k = 0; k < 4; ++k) d = std::max(d, std::abs(x.a[k] - y.a[k]));
    return d;
}

MoebiusParam::MoebiusParam(Complex a) : a_(a)
{
    if (!(std::abs(a) < 1.0)) {
        throw DomainError("Moebius parameter must satisfy |a| < 1");
    }
}

Complex moebius(const MoebiusParam& a, Complex z)
{
    const Complex den = 1.0 + std::conj(a.value()) * z;
    if (den == Complex{}) {
        throw DomainError("Moebius transformation evaluated at its pole");
    }
    return (z + a.value()) / den;
}

Jet3 moebius_jet(const MoebiusParam& a, const Jet3& z)
{
    const Jet3 den = std::conj(a.value()) * z + Complex{1.0};
    if (den.a[0] == Complex{}) {
        throw DomainError("Moebius transformation evaluated at its pole");
    }
    return (z + a.value()) / den;
}

void BlaschkeSpec::validate() const
{
    for (const auto& zj : zeros) {
        if (!(std::abs(zj) < 1.0)) {
            throw DomainError("Blaschke zero must lie strictly inside the unit disk");
        }
    }
}

Complex blaschke(const BlaschkeSpec& b, Complex z)
{
    Complex p = std::polar(1.0, b.phase);
    for (const auto& zj : b.zeros) p *= moebius(MoebiusParam(-zj), z);
    return p;
}

Jet3 blaschke_jet(const BlaschkeSpec& b, const Jet3& z)
{
    Jet3 p = Jet3::constant(std::polar(1.0, b.phase));
    for (const auto& zj : b.zeros) p *= moebius_jet(MoebiusParam(-zj), z);
    return p;
}

Jet3 blaschke_jet(const BlaschkeSpec& b, Complex z0)
{
    if (!(std::abs(z0) < 1.0)) {
        throw DomainError("blaschke_jet: base point must lie inside the unit disk");
    }
    return blaschke_jet(b, Jet3::variable(z0));
}

std::string to_string(const Jet3& j)
{
    std::ostringstream os;
    os.precision(17);
    os << "Jet3{" << j.a[0] << ", " << j.a[1] << ", " << j.a[2] << ", " << j.a[3] << "}";
    return os.str();
}

} // namespace dvr
