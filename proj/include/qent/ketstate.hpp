#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <vector>

#include "qent/errors.hpp"

namespace qent::ket {

using Complex = std::complex<double>;

// Dense n-qubit pure state. Amplitude index is the big-endian bitstring
// j_1 j_2 ... j_n, i.e. qubit 1 is the most significant bit.
struct StateVec {
    int n = 0;
    std::vector<Complex> amps;

    std::size_t dim() const { return amps.size(); }
};

constexpr int kMaxQubits = 12;

// Bit mask of qubit q (1-based, MSB first) in an n-qubit index.
inline std::uint64_t qubit_mask(int n, int q) { return std::uint64_t{1} << (n - q); }

double norm(const StateVec& s);

// Rescales to unit norm; ZeroState if the vector is numerically zero.
StateVec normalized(StateVec s);

StateVec basis_state(int n, std::uint64_t x);

// Builds a state from raw amplitudes (length must be 2^n). If normalize is
// false the amplitudes must already have unit norm within 1e-12.
StateVec from_amplitudes(int n, std::vector<Complex> amps, bool normalize = false);

StateVec uniform_state(int n);  // |+>^{(x)n}

StateVec apply_hadamard(const StateVec& s, int q);

// Controlled phase R_k: multiplies by e^{2 pi i / 2^k} the amplitudes of
// basis states with both the control and target bits set. Symmetric in
// (control, target).
StateVec apply_controlled_rk(const StateVec& s, int control, int target, int k);

StateVec apply_swap(const StateVec& s, int q1, int q2);

// perm[i-1] is the destination slot of qubit i; perm must be a bijection of
// [1..n]. Bit at position i moves to position perm[i-1].
StateVec permute_qubits(const StateVec& s, const std::vector<int>& perm);

// Row-major 2x2 matrix {u00, u01, u10, u11}.
using Mat2 = std::array<Complex, 4>;

// Applies u on qubit q; u must be unitary within 1e-10.
StateVec apply_local_unitary(const StateVec& s, int q, const Mat2& u);

}  // namespace qent::ket
