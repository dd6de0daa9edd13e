#include "dvr/peschl.hpp"

#include <cmath>

namespace dvr {

PeschlTriple peschl_derivatives(const Jet3& g_jet, Complex z)
{
    if (!(std::abs(z) < 1.0)) {
        throw DomainError("peschl_derivatives: |z| must be < 1");
    }
    const Complex g = g_jet.derivative(0);
    if (!(std::abs(g) < 1.0)) {
        throw DomainError("peschl_derivatives: |g(z)| must be < 1");
    }
    const Complex g1 = g_jet.derivative(1);
    const Complex g2 = g_jet.derivative(2);
    const Complex g3 = g_jet.derivative(3);

    const double pz = 1.0 - std::norm(z);
    const double pg = 1.0 - std::norm(g);
    const Complex zc = std::conj(z);
    const Complex gc = std::conj(g);

    const Complex d1 = pz * g1 / pg;
    const Complex d2 = pz * pz / pg * (g2 - 2.0 * zc * g1 / pz + 2.0 * gc * g1 * g1 / pg);
    const Complex d3 = pz * pz * pz / pg
                       * (g3 - 6.0 * zc * g2 / pz + 6.0 * gc * g1 * g2 / pg
                          + 6.0 * zc * zc * g1 / (pz * pz)
                          - 12.0 * zc * gc * g1 * g1 / (pz * pg)
                          + 6.0 * gc * gc * g1 * g1 * g1 / (pg * pg));
    return {d1, d2, d3};
}

double schur_residual(const PeschlTriple& p)
{
    const double q = 1.0 - std::norm(p.d1);
    const Complex half2 = p.d2 / 2.0;
    return q * q - std::norm(half2) - std::abs(p.d3 / 6.0 * q + std::conj(p.d1) * half2 * half2);
}

} // namespace dvr
