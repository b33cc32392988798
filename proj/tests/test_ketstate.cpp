#include <doctest.h>

#include <cmath>
#include <random>

#include "qent/ketstate.hpp"

using namespace qent;
using ket::Complex;
using ket::StateVec;

namespace {

double max_dev(const StateVec& a, const StateVec& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.amps.size(); ++i) m = std::max(m, std::abs(a.amps[i] - b.amps[i]));
    return m;
}

StateVec random_state(int n, std::mt19937_64& rng) {
    std::normal_distribution<double> dist(0.0, 1.0);
    std::vector<Complex> amps(std::size_t{1} << n);
    for (auto& a : amps) a = Complex{dist(rng), dist(rng)};
    return ket::normalized(StateVec{n, std::move(amps)});
}

ket::Mat2 random_su2(std::mt19937_64& rng) {
    std::normal_distribution<double> dist(0.0, 1.0);
    Complex a{dist(rng), dist(rng)}, b{dist(rng), dist(rng)};
    const double nrm = std::sqrt(std::norm(a) + std::norm(b));
    a /= nrm;
    b /= nrm;
    return {a, -std::conj(b), b, std::conj(a)};
}

}  // namespace

TEST_CASE("basis_state places a single amplitude") {
    const StateVec s = ket::basis_state(4, 0);
    CHECK(s.amps[0] == Complex{1.0, 0.0});
    for (int i = 1; i < 16; ++i) CHECK(s.amps[i] == Complex{0.0, 0.0});

    const StateVec t = ket::basis_state(3, 5);  // |101>
    CHECK(t.amps[5] == Complex{1.0, 0.0});
    CHECK(ket::norm(t) == doctest::Approx(1.0));

    CHECK_THROWS_AS(ket::basis_state(4, 16), InvalidIndex);
}

TEST_CASE("hadamard definition and involution") {
    const StateVec plus = ket::apply_hadamard(ket::basis_state(1, 0), 1);
    CHECK(plus.amps[0].real() == doctest::Approx(1.0 / std::sqrt(2.0)));
    CHECK(plus.amps[1].real() == doctest::Approx(1.0 / std::sqrt(2.0)));

    std::mt19937_64 rng(7);
    for (int rep = 0; rep < 10; ++rep) {
        const StateVec s = random_state(4, rng);
        const int q = 1 + static_cast<int>(rng() % 4);
        CHECK(max_dev(ket::apply_hadamard(ket::apply_hadamard(s, q), q), s) < 1e-12);
    }

    StateVec u = ket::basis_state(4, 0);
    for (int q = 1; q <= 4; ++q) u = ket::apply_hadamard(u, q);
    for (int i = 0; i < 16; ++i) CHECK(u.amps[i].real() == doctest::Approx(0.25));
    CHECK(max_dev(u, ket::uniform_state(4)) < 1e-15);

    CHECK_THROWS_AS(ket::apply_hadamard(ket::basis_state(2, 0), 3), InvalidIndex);
}

TEST_CASE("controlled phase gate") {
    // k=1 is a controlled-Z
    StateVec s = ket::basis_state(2, 3);
    s = ket::apply_controlled_rk(s, 1, 2, 1);
    CHECK(s.amps[3].real() == doctest::Approx(-1.0));

    // k=2 puts i on |11>
    s = ket::basis_state(2, 3);
    s = ket::apply_controlled_rk(s, 1, 2, 2);
    CHECK(s.amps[3].real() == doctest::Approx(0.0));
    CHECK(s.amps[3].imag() == doctest::Approx(1.0));

    // control clear: nothing happens
    for (std::uint64_t x : {0ull, 1ull, 2ull}) {
        const StateVec b = ket::basis_state(2, x);
        CHECK(max_dev(ket::apply_controlled_rk(b, 1, 2, 3), b) == 0.0);
    }

    // symmetric in (control, target)
    std::mt19937_64 rng(11);
    const StateVec r = random_state(4, rng);
    CHECK(max_dev(ket::apply_controlled_rk(r, 2, 4, 3), ket::apply_controlled_rk(r, 4, 2, 3)) == 0.0);

    CHECK_THROWS_AS(ket::apply_controlled_rk(r, 2, 2, 1), InvalidIndex);
}

TEST_CASE("swap exchanges bits") {
    const StateVec s = ket::basis_state(4, 0b0100);  // |0100>
    const StateVec t = ket::apply_swap(s, 1, 2);
    CHECK(t.amps[0b1000].real() == doctest::Approx(1.0));

    std::mt19937_64 rng(13);
    const StateVec r = random_state(4, rng);
    CHECK(max_dev(ket::apply_swap(ket::apply_swap(r, 2, 3), 2, 3), r) == 0.0);

    // GHZ is symmetric under swaps
    std::vector<Complex> gz(8); gz[0] = gz[7] = Complex{1 / std::sqrt(2.0), 0}; StateVec ghz{3, gz};
    CHECK(max_dev(ket::apply_swap(ghz, 1, 3), ghz) == 0.0);

    CHECK_THROWS_AS(ket::apply_swap(r, 2, 2), InvalidIndex);
}

TEST_CASE("permute_qubits") {
    const StateVec s = ket::basis_state(4, 0b0011);
    const StateVec rev = ket::permute_qubits(s, {4, 3, 2, 1});
    CHECK(rev.amps[0b1100].real() == doctest::Approx(1.0));

    std::mt19937_64 rng(17);
    const StateVec r = random_state(4, rng);
    CHECK(max_dev(ket::permute_qubits(r, {1, 2, 3, 4}), r) == 0.0);

    // round trip through the inverse is exact
    const std::vector<int> perm = {3, 1, 4, 2};
    std::vector<int> inv(4);
    for (int i = 0; i < 4; ++i) inv[perm[i] - 1] = i + 1;
    CHECK(max_dev(ket::permute_qubits(ket::permute_qubits(r, perm), inv), r) == 0.0);
    CHECK(ket::norm(ket::permute_qubits(r, perm)) == doctest::Approx(1.0));

    CHECK_THROWS_AS(ket::permute_qubits(r, {1, 1, 2, 3}), InvalidPermutation);
}

TEST_CASE("local unitary application") {
    const StateVec s = ket::basis_state(4, 0);
    const ket::Mat2 eye = {Complex{1, 0}, Complex{0, 0}, Complex{0, 0}, Complex{1, 0}};
    CHECK(max_dev(ket::apply_local_unitary(s, 2, eye), s) == 0.0);

    const ket::Mat2 x = {Complex{0, 0}, Complex{1, 0}, Complex{1, 0}, Complex{0, 0}};
    CHECK(ket::apply_local_unitary(s, 1, x).amps[0b1000].real() == doctest::Approx(1.0));

    std::mt19937_64 rng(19);
    for (int rep = 0; rep < 20; ++rep) {
        const StateVec r = random_state(3, rng);
        const StateVec t = ket::apply_local_unitary(r, 1 + static_cast<int>(rng() % 3), random_su2(rng));
        CHECK(ket::norm(t) == doctest::Approx(1.0).epsilon(1e-12));
    }

    const ket::Mat2 bad = {Complex{2, 0}, Complex{0, 0}, Complex{0, 0}, Complex{1, 0}};
    CHECK_THROWS_AS(ket::apply_local_unitary(s, 1, bad), InvalidUnitary);
}

TEST_CASE("gates preserve the norm") {
    std::mt19937_64 rng(23);
    StateVec s = random_state(4, rng);
    for (int step = 0; step < 40; ++step) {
        switch (rng() % 3) {
            case 0: s = ket::apply_hadamard(s, 1 + static_cast<int>(rng() % 4)); break;
            case 1: {
                const int c = 1 + static_cast<int>(rng() % 4);
                int t = 1 + static_cast<int>(rng() % 4);
                if (t == c) t = (t % 4) + 1;
                s = ket::apply_controlled_rk(s, c, t, 1 + static_cast<int>(rng() % 4));
                break;
            }
            default: {
                const int q1 = 1 + static_cast<int>(rng() % 4);
                int q2 = 1 + static_cast<int>(rng() % 4);
                if (q2 == q1) q2 = (q1 % 4) + 1;
                s = ket::apply_swap(s, q1, q2);
            }
        }
        CHECK(std::abs(ket::norm(s) - 1.0) < 1e-12);
    }
}
