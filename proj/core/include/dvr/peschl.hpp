#pragma once

#include "dvr/complex_jet.hpp"

namespace dvr {

/// Peschl invariant derivatives D1 g(z), D2 g(z), D3 g(z) of a self-map g of the disk.
struct PeschlTriple {
    Complex d1;
    Complex d2;
    Complex d3;
};

/// Evaluates the closed-form invariant derivatives from the jet of g at z.
/// Throws DomainError if |z| >= 1 or |g(z)| >= 1.
PeschlTriple peschl_derivatives(const Jet3& g_jet, Complex z);

/// (1 - |D1|^2)^2 - |D2/2|^2 - |D3/6 (1 - |D1|^2) + conj(D1) (D2/2)^2|.
///
/// Nonnegative for every holomorphic self-map of the disk; zero exactly at
/// Blaschke products of degree at most 3. Returned unclamped so callers can
/// observe rounding-level violations.
double schur_residual(const PeschlTriple& p);

} // namespace dvr
