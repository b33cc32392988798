#include "qent/ketstate.hpp"

#include <cmath>
#include <numeric>

namespace qent::ket {

namespace {

void check_qubit(int n, int q) {
    if (q < 1 || q > n) throw InvalidIndex("qubit index " + std::to_string(q) + " out of range [1," + std::to_string(n) + "]");
}

void check_n(int n) {
    if (n < 1 || n > kMaxQubits) throw InvalidIndex("qubit count " + std::to_string(n) + " out of range [1," + std::to_string(kMaxQubits) + "]");
}

}  // namespace

double norm(const StateVec& s) {
    double acc = 0.0;
    for (const Complex& a : s.amps) acc += std::norm(a);
    return std::sqrt(acc);
}

StateVec normalized(StateVec s) {
    const double nrm = norm(s);
    if (nrm < 1e-14) throw ZeroState("cannot normalize the zero vector");
    for (Complex& a : s.amps) a /= nrm;
    return s;
}

StateVec basis_state(int n, std::uint64_t x) {
    check_n(n);
    const std::uint64_t dim = std::uint64_t{1} << n;
    if (x >= dim) throw InvalidIndex("basis index " + std::to_string(x) + " out of range for " + std::to_string(n) + " qubits");
    StateVec s{n, std::vector<Complex>(dim, Complex{0.0, 0.0})};
    s.amps[x] = Complex{1.0, 0.0};
    return s;
}

StateVec from_amplitudes(int n, std::vector<Complex> amps, bool normalize) {
    check_n(n);
    const std::uint64_t dim = std::uint64_t{1} << n;
    if (amps.size() != dim) throw InvalidIndex("amplitude vector has length " + std::to_string(amps.size()) + ", expected " + std::to_string(dim));
    StateVec s{n, std::move(amps)};
    if (normalize) return normalized(std::move(s));
    if (std::abs(norm(s) - 1.0) > 1e-12) throw ZeroState("amplitudes are not unit norm");
    return s;
}

StateVec uniform_state(int n) {
    check_n(n);
    const std::uint64_t dim = std::uint64_t{1} << n;
    const double a = 1.0 / std::sqrt(static_cast<double>(dim));
    return StateVec{n, std::vector<Complex>(dim, Complex{a, 0.0})};
}

StateVec apply_hadamard(const StateVec& s, int q) {
    check_qubit(s.n, q);
    const std::uint64_t mask = qubit_mask(s.n, q);
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    StateVec out{s.n, std::vector<Complex>(s.dim())};
    for (std::uint64_t i = 0; i < s.dim(); ++i) {
        if (i & mask) continue;
        const std::uint64_t j = i | mask;
        out.amps[i] = (s.amps[i] + s.amps[j]) * inv_sqrt2;
        out.amps[j] = (s.amps[i] - s.amps[j]) * inv_sqrt2;
    }
    return out;
}

StateVec apply_controlled_rk(const StateVec& s, int control, int target, int k) {
    check_qubit(s.n, control);
    check_qubit(s.n, target);
    if (control == target) throw InvalidIndex("control and target must differ");
    if (k < 1) throw InvalidIndex("phase order k must be >= 1");
    const double theta = 2.0 * M_PI / static_cast<double>(std::uint64_t{1} << k);
    const Complex phase = std::polar(1.0, theta);
    const std::uint64_t both = qubit_mask(s.n, control) | qubit_mask(s.n, target);
    StateVec out = s;
    for (std::uint64_t i = 0; i < s.dim(); ++i) {
        if ((i & both) == both) out.amps[i] *= phase;
    }
    return out;
}

StateVec apply_swap(const StateVec& s, int q1, int q2) {
    check_qubit(s.n, q1);
    check_qubit(s.n, q2);
    if (q1 == q2) throw InvalidIndex("swap requires distinct qubits");
    const std::uint64_t m1 = qubit_mask(s.n, q1);
    const std::uint64_t m2 = qubit_mask(s.n, q2);
    StateVec out = s;
    for (std::uint64_t i = 0; i < s.dim(); ++i) {
        const bool b1 = (i & m1) != 0;
        const bool b2 = (i & m2) != 0;
        if (b1 != b2) {
            const std::uint64_t j = i ^ (m1 | m2);
            if (i < j) std::swap(out.amps[i], out.amps[j]);
        }
    }
    return out;
}

StateVec permute_qubits(const StateVec& s, const std::vector<int>& perm) {
    if (perm.size() != static_cast<std::size_t>(s.n)) throw InvalidPermutation("permutation has wrong length");
    std::vector<bool> seen(s.n, false);
    for (int p : perm) {
        if (p < 1 || p > s.n || seen[p - 1]) throw InvalidPermutation("not a bijection of [1..n]");
        seen[p - 1] = true;
    }
    StateVec out{s.n, std::vector<Complex>(s.dim())};
    for (std::uint64_t i = 0; i < s.dim(); ++i) {
        std::uint64_t j = 0;
        for (int q = 1; q <= s.n; ++q) {
            if (i & qubit_mask(s.n, q)) j |= qubit_mask(s.n, perm[q - 1]);
        }
        out.amps[j] = s.amps[i];
    }
    return out;
}

StateVec apply_local_unitary(const StateVec& s, int q, const Mat2& u) {
    check_qubit(s.n, q);
    // u u^dagger = I within 1e-10
    const Complex r00 = u[0] * std::conj(u[0]) + u[1] * std::conj(u[1]);
    const Complex r01 = u[0] * std::conj(u[2]) + u[1] * std::conj(u[3]);
    const Complex r11 = u[2] * std::conj(u[2]) + u[3] * std::conj(u[3]);
    if (std::abs(r00 - 1.0) > 1e-10 || std::abs(r11 - 1.0) > 1e-10 || std::abs(r01) > 1e-10)
        throw InvalidUnitary("matrix is not unitary");
    const std::uint64_t mask = qubit_mask(s.n, q);
    StateVec out{s.n, std::vector<Complex>(s.dim())};
    for (std::uint64_t i = 0; i < s.dim(); ++i) {
        if (i & mask) continue;
        const std::uint64_t j = i | mask;
        out.amps[i] = u[0] * s.amps[i] + u[1] * s.amps[j];
        out.amps[j] = u[2] * s.amps[i] + u[3] * s.amps[j];
    }
    return out;
}

}  // namespace qent::ket
