#pragma once

#include <complex>

#include "qent/ketstate.hpp"

namespace qent::normal_forms {

using Complex = std::complex<double>;

// The nine parametrized normal forms covering all 4-qubit SLOCC orbits up
// to qubit permutation. States are returned unit-normalized.
ket::StateVec g_abcd(Complex a, Complex b, Complex c, Complex d);
ket::StateVec l_abc2(Complex a, Complex b, Complex c);
ket::StateVec l_a2b2(Complex a, Complex b);
ket::StateVec l_ab3(Complex a, Complex b);
ket::StateVec l_a4(Complex a);
ket::StateVec l_a2_03p1(Complex a);
ket::StateVec l_05p3();
ket::StateVec l_07p1();
ket::StateVec l_03p1_03p1();

}  // namespace qent::normal_forms
