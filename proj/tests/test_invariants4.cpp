#include <doctest.h>

#include <cmath>
#include <random>

#include "qent/invariants4.hpp"
#include "qent/ketparse.hpp"
#include "qent/ketstate.hpp"
#include "qent/normal_forms.hpp"

using namespace qent;
using inv4::LComplex;
using ket::Complex;

namespace {

ket::StateVec random_state4(std::mt19937_64& rng) {
    std::normal_distribution<double> d(0.0, 1.0);
    std::vector<Complex> amps(16);
    for (auto& a : amps) a = Complex{d(rng), d(rng)};
    return ket::normalized(ket::StateVec{4, std::move(amps)});
}

ket::Mat2 random_su2(std::mt19937_64& rng) {
    std::normal_distribution<double> d(0.0, 1.0);
    Complex a{d(rng), d(rng)}, b{d(rng), d(rng)};
    const double nrm = std::sqrt(std::norm(a) + std::norm(b));
    a /= nrm;
    b /= nrm;
    return {a, -std::conj(b), b, std::conj(a)};
}

// Standard binary-quartic invariants in the apolar normalization, the
// independent cross-check route for I2/I3 (measured proportionality
// constant: exactly 1 for both).
std::pair<LComplex, LComplex> standard_quartic_invariants(const inv4::Quartic& q) {
    // q = c4 x^4 + c3 x^3 y + c2 x^2 y^2 + c1 x y^3 + c0 y^4
    // a_e = coefficient of x^e y^(4-e) / binom(4, e)
    const LComplex a4 = q.c4, a3 = q.c3 / 4.0L, a2 = q.c2 / 6.0L, a1 = q.c1 / 4.0L, a0 = q.c0;
    const LComplex i = a4 * a0 - 4.0L * a3 * a1 + 3.0L * a2 * a2;
    const LComplex j = a4 * a2 * a0 - a4 * a1 * a1 - a3 * a3 * a0 + 2.0L * a3 * a2 * a1 - a2 * a2 * a2;
    return {i, j};
}

}  // namespace

TEST_CASE("invariants on pinned states") {
    // separable: everything dies
    const auto z = inv4::compute_invariants(ket::basis_state(4, 0));
    CHECK(std::abs(z.H) < 1e-15);
    CHECK(std::abs(z.L) < 1e-15);
    CHECK(std::abs(z.M) < 1e-15);
    CHECK(std::abs(z.Dxy) < 1e-15);

    // two-term cat state: H = 1/2 by the first product term, the rest die
    const auto g = inv4::compute_invariants(ketparse::parse_state("|0000>+|1111>"));
    CHECK(std::abs(g.H - LComplex{0.5L, 0.0L}) < 1e-14);
    CHECK(std::abs(g.L) < 1e-15);
    CHECK(std::abs(g.M) < 1e-15);
    CHECK(std::abs(g.Dxy) < 1e-15);

    // single-excitation state sits in the nullcone
    const auto w = inv4::compute_invariants(ketparse::parse_state("|0001>+|0010>+|0100>+|1000>"));
    CHECK(std::abs(w.H) < 1e-15);
    CHECK(std::abs(w.L) < 1e-15);
    CHECK(std::abs(w.M) < 1e-15);
    CHECK(std::abs(w.Dxy) < 1e-15);

    CHECK_THROWS_AS(inv4::compute_invariants(ket::basis_state(3, 0)), WrongArity);

    std::mt19937_64 rng(67);
    const auto inv = inv4::compute_invariants(random_state4(rng));
    CHECK(std::abs(inv.N + inv.L + inv.M) < 1e-18);  // N = -L-M as computed
}

TEST_CASE("quartics transcription") {
    const inv4::Invariants4 zero{0.0L, 0.0L, 0.0L, 0.0L, 0.0L};
    for (const auto& q : inv4::quartics(zero)) {
        CHECK(std::abs(q.c4 - 1.0L) == 0.0);
        CHECK(std::abs(q.c3) == 0.0);
        CHECK(std::abs(q.c2) == 0.0);
        CHECK(std::abs(q.c1) == 0.0);
        CHECK(std::abs(q.c0) == 0.0);
    }

    // H=1/2, rest zero: Q1 = x^4 - x^3 y + 1/4 x^2 y^2
    const inv4::Invariants4 ghz{0.5L, 0.0L, 0.0L, 0.0L, 0.0L};
    const auto q1 = inv4::quartics(ghz)[0];
    CHECK(std::abs(q1.c3 + 1.0L) < 1e-18);
    CHECK(std::abs(q1.c2 - 0.25L) < 1e-18);
    CHECK(std::abs(q1.c1) == 0.0);
    CHECK(std::abs(q1.c0) == 0.0);

    // I2 and I3 agree across the three quartics (standard-invariant route)
    std::mt19937_64 rng(71);
    for (int rep = 0; rep < 50; ++rep) {
        const auto inv = inv4::compute_invariants(random_state4(rng));
        const auto qs = inv4::quartics(inv);
        const auto [i_a, j_a] = standard_quartic_invariants(qs[0]);
        const auto [i_b, j_b] = standard_quartic_invariants(qs[1]);
        const auto [i_c, j_c] = standard_quartic_invariants(qs[2]);
        CHECK(std::abs(i_a - i_b) < 1e-9);
        CHECK(std::abs(i_a - i_c) < 1e-9);
        CHECK(std::abs(j_a - j_b) < 1e-9);
        CHECK(std::abs(j_a - j_c) < 1e-9);
    }
}

TEST_CASE("closed-form I2/I3 match the standard quartic invariants up to a frozen constant") {
    // Proportionality constants measured once on a single state and frozen:
    // both are exactly 1 in the apolar normalization.
    std::mt19937_64 rng(73);
    for (int rep = 0; rep < 50; ++rep) {
        const auto inv = inv4::compute_invariants(random_state4(rng));
        const auto qi = inv4::quartic_invariants(inv);
        const auto [i_std, j_std] = standard_quartic_invariants(inv4::quartics(inv)[1]);
        CHECK(std::abs(qi.I2 - i_std) <= 1e-8 * (1.0L + std::abs(qi.I2)));
        CHECK(std::abs(qi.I3 - j_std) <= 1e-8 * (1.0L + std::abs(qi.I3)));
    }
}

TEST_CASE("hyperdeterminant identity and pinned values") {
    const inv4::Invariants4 zero{0.0L, 0.0L, 0.0L, 0.0L, 0.0L};
    const auto qz = inv4::quartic_invariants(zero);
    CHECK(std::abs(qz.I2) == 0.0);
    CHECK(std::abs(qz.I3) == 0.0);
    CHECK(std::abs(qz.Det2222) == 0.0);

    // cat state: Q1 = x^2 (x - y/2)^2 has double roots, discriminant 0
    CHECK(inv4::abs_hyperdeterminant(ketparse::parse_state("|0000>+|1111>")) < 1e-18);
    CHECK(inv4::abs_hyperdeterminant(ket::basis_state(4, 5)) < 1e-18);

    // generic diagonal state (parameters 1,2,3,4 up to norm) leaves the
    // dual variety
    CHECK(inv4::abs_hyperdeterminant(normal_forms::g_abcd(1.0, 2.0, 3.0, 4.0)) > 1e-10);

    // identity Det = I2^3 - 27 I3^2 on random states
    std::mt19937_64 rng(79);
    for (int rep = 0; rep < 1000; ++rep) {
        const auto qi = inv4::quartic_invariants(inv4::compute_invariants(random_state4(rng)));
        CHECK(std::abs(qi.Det2222 - (qi.I2 * qi.I2 * qi.I2 - 27.0L * qi.I3 * qi.I3)) < 1e-9);
    }
}

TEST_CASE("hessian and jacobian of quartics") {
    // y-independent quartic: Hess = 0
    const inv4::Quartic x4{1.0L, 0.0L, 0.0L, 0.0L, 0.0L};
    CHECK(inv4::hessian(x4).max_abs_coeff() < 1e-15);
    CHECK(inv4::jacobian_t(x4).max_abs_coeff() < 1e-15);

    // x^2 y^2: Hess = -12 x^2 y^2
    const inv4::Quartic x2y2{0.0L, 0.0L, 1.0L, 0.0L, 0.0L};
    const auto h = inv4::hessian(x2y2);
    CHECK(h.at(2, 0, 0, 0).real() == doctest::Approx(-12.0));
    CHECK(h.at(4, 0, 0, 0) == Complex{0.0, 0.0});

    // perfect fourth power (x+y)^4: Hess = 0
    const inv4::Quartic p4{1.0L, 4.0L, 6.0L, 4.0L, 1.0L};
    CHECK(inv4::hessian(p4).max_abs_coeff() < 1e-12);

    // four distinct roots: T != 0 (x^4 - y^4 has roots ±1, ±i)
    const inv4::Quartic dist{1.0L, 0.0L, 0.0L, 0.0L, -1.0L};
    CHECK(inv4::jacobian_t(dist).max_abs_coeff() > 1e-6);

    // direct determinant oracle for T on a random quartic
    std::mt19937_64 rng(83);
    std::normal_distribution<double> d(0.0, 1.0);
    const inv4::Quartic q{LComplex{d(rng), d(rng)}, LComplex{d(rng), d(rng)}, LComplex{d(rng), d(rng)},
                          LComplex{d(rng), d(rng)}, LComplex{d(rng), d(rng)}};
    const auto qf = inv4::quartic_to_form(q);
    const auto hf = inv4::hessian(q);
    forms::MultiForm oracle = forms::multiply(forms::derivative(qf, 0, 0), forms::derivative(hf, 0, 1));
    const auto cross = forms::multiply(forms::derivative(qf, 0, 1), forms::derivative(hf, 0, 0));
    for (std::size_t i = 0; i < oracle.coeffs().size(); ++i) oracle.coeffs()[i] -= cross.coeffs()[i];
    const auto t = inv4::jacobian_t(q);
    double dev = 0.0;
    for (std::size_t i = 0; i < oracle.coeffs().size(); ++i)
        dev = std::max(dev, std::abs(oracle.coeffs()[i] - t.coeffs()[i]));
    CHECK(dev < 1e-9);
}

TEST_CASE("local unitary and permutation invariance of the hyperdeterminant") {
    std::mt19937_64 rng(89);
    const ket::StateVec s = random_state4(rng);
    const double det = inv4::abs_hyperdeterminant(s);
    REQUIRE(det > 1e-12);

    for (int rep = 0; rep < 100; ++rep) {
        ket::StateVec t = s;
        for (int q = 1; q <= 4; ++q) t = ket::apply_local_unitary(t, q, random_su2(rng));
        CHECK(std::abs(inv4::abs_hyperdeterminant(t) - det) <= 1e-8 * det);
    }

    std::array<int, 4> perm = {1, 2, 3, 4};
    std::sort(perm.begin(), perm.end());
    do {
        const ket::StateVec t = ket::permute_qubits(s, {perm[0], perm[1], perm[2], perm[3]});
        CHECK(std::abs(inv4::abs_hyperdeterminant(t) - det) <= 1e-8 * det);
    } while (std::next_permutation(perm.begin(), perm.end()));
}

TEST_CASE("scaling covariance") {
    std::mt19937_64 rng(97);
    const ket::StateVec s = random_state4(rng);
    const auto base = inv4::compute_invariants(s);
    std::uniform_real_distribution<double> u(0.5, 2.0);
    for (int rep = 0; rep < 10; ++rep) {
        const Complex lambda{u(rng), u(rng)};
        ket::StateVec t = s;
        for (auto& a : t.amps) a *= lambda;
        const auto scaled = inv4::compute_invariants(t);
        const LComplex lam{lambda.real(), lambda.imag()};
        const LComplex l2 = lam * lam;
        const LComplex l4 = l2 * l2;
        CHECK(std::abs(scaled.H - l2 * base.H) <= 1e-10 * std::abs(l2 * base.H));
        CHECK(std::abs(scaled.L - l4 * base.L) <= 1e-10 * std::abs(l4 * base.L));
        CHECK(std::abs(scaled.M - l4 * base.M) <= 1e-10 * std::abs(l4 * base.M));
        CHECK(std::abs(scaled.Dxy - l4 * l2 * base.Dxy) <= 1e-10 * std::abs(l4 * l2 * base.Dxy));
    }
}
