#pragma once

#include <array>
#include <complex>

#include "qent/forms.hpp"
#include "qent/ketstate.hpp"

namespace qent::inv4 {

using Complex = std::complex<double>;

// Invariant evaluation runs in extended precision: the exact hyperdeterminant
// values of states in the scanned tables go down to ~1e-17, below the
// double-precision cancellation floor of Det2222 = I2^3 - 27*I3^2.
using LComplex = std::complex<long double>;

// The four generating SLOCC invariants of a 4-qubit state plus N = -L-M.
// H has degree 2 in the amplitudes, L/M/N degree 4, Dxy degree 6.
struct Invariants4 {
    LComplex H, L, M, N, Dxy;
};

// Binary quartic c4*x^4 + c3*x^3 y + c2*x^2 y^2 + c1*x y^3 + c0*y^4.
struct Quartic {
    LComplex c4, c3, c2, c1, c0;
};

struct QuarticInvariants {
    LComplex I2, I3, Det2222;
};

// Evaluates H, L, M, N, Dxy. Only the arity is checked; the values scale
// covariantly when the input is not unit norm (degree 2/4/4/4/6).
Invariants4 compute_invariants(const ket::StateVec& s);

// The three quartics Q1, Q2, Q3 attached to the invariants.
std::array<Quartic, 3> quartics(const Invariants4& inv);

// Closed-form I2, I3 and Det2222 = I2^3 - 27 I3^2.
QuarticInvariants quartic_invariants(const Invariants4& inv);

// Hessian of a binary quartic, as a degree-(4,0,0,0) form in the first pair.
forms::MultiForm hessian(const Quartic& q);

// Jacobian of (Q, Hess Q), a degree-(6,0,0,0) form.
forms::MultiForm jacobian_t(const Quartic& q);

double abs_hyperdeterminant(const ket::StateVec& s);

// Degree-compensated magnitude used to scale invariant zero tests.
double zero_scale(const Invariants4& inv);

forms::MultiForm quartic_to_form(const Quartic& q);

}  // namespace qent::inv4
