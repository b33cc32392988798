#pragma once

#include <string>
#include <vector>

#include "qent/ketstate.hpp"

namespace qent::ketparse {

using Complex = std::complex<double>;

// One additive term of a ket expression: coefficient times a basis ket
// given as a '0'/'1' bitstring (qubit 1 first).
struct KetTerm {
    Complex coeff;
    std::string bits;
};

struct KetExpr {
    std::vector<KetTerm> terms;  // duplicate kets merged, coefficients summed
    int n = 0;                   // common ket length
};

// Parses expressions such as
//   "1/sqrt(3)*(|011>+|101>+|111>)"
//   "(1+i)/4*|01> + w8^3*|10>"
// Coefficients support integers, rationals p/q, sqrt(int), i, wN^k =
// e^{2 pi i k / N}, products/quotients and parenthesized sums. '*' between a
// coefficient and a ket is optional; whitespace is ignored.
KetExpr parse_ket(const std::string& text);

// Evaluates to an amplitude vector; ZeroState if everything cancels.
ket::StateVec eval_ket(const KetExpr& e, bool normalize = true);

ket::StateVec parse_state(const std::string& text, bool normalize = true);

// Formats a state as a ket expression with decimal coefficients (round-trip
// within 1e-12 for exactly representable amplitudes).
std::string format_state(const ket::StateVec& s);

}  // namespace qent::ketparse
