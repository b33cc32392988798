#include <doctest.h>

#include <algorithm>
#include <random>

#include "qent/covariants4.hpp"
#include "qent/ketparse.hpp"
#include "qent/normal_forms.hpp"

using namespace qent;
using ket::Complex;

namespace {

ket::StateVec random_state4(std::mt19937_64& rng) {
    std::normal_distribution<double> d(0.0, 1.0);
    std::vector<Complex> amps(16);
    for (auto& a : amps) a = Complex{d(rng), d(rng)};
    return ket::normalized(ket::StateVec{4, std::move(amps)});
}

}  // namespace

TEST_CASE("registry resolves every required name") {
    const auto& reg = cov4::default_registry();
    CHECK(reg.contains("A"));
    for (const auto* group : {&cov4::names_B(), &cov4::names_C(), &cov4::names_D1(), &cov4::names_D2(),
                              &cov4::names_F(), &cov4::names_L(), &cov4::names_K5(), &cov4::names_K3(),
                              &cov4::names_G1(), &cov4::names_G2(), &cov4::names_H()}) {
        for (const auto& name : *group) CHECK(reg.contains(name));
    }
    CHECK(reg.contains("G2_1111"));
    CHECK_THROWS_AS(reg.find("B_9999"), UnknownCovariant);
}

TEST_CASE("multidegree contract on random states") {
    const auto& reg = cov4::default_registry();
    std::mt19937_64 rng(101);
    for (int rep = 0; rep < 10; ++rep) {
        const ket::StateVec s = random_state4(rng);
        cov4::Evaluator ev(reg, s);
        for (const auto& def : reg.defs()) {
            const forms::MultiForm& value = ev.eval(def.name);
            if (value.max_abs_coeff() > 0.0) CHECK(value.multidegree() == def.multidegree);
        }
    }
}

TEST_CASE("quadratic covariant on the cat state") {
    // det(d^2 A/dz dt) of (|0000>+|1111>)/sqrt2 is proportional to x0x1y0y1
    const auto b = cov4::eval_covariant("B_2200", ketparse::parse_state("|0000>+|1111>"));
    bool found = false;
    const auto& d = b.multidegree();
    for (int ex = 0; ex <= d[0]; ++ex)
        for (int ey = 0; ey <= d[1]; ++ey) {
            const double mag = std::abs(b.at(ex, ey, 0, 0));
            if (ex == 1 && ey == 1) {
                CHECK(mag > 1e-3);
                found = true;
            } else {
                CHECK(mag < 1e-12);
            }
        }
    CHECK(found);
}

TEST_CASE("positive-multidegree covariants vanish on separable states") {
    const ket::StateVec sep = ket::basis_state(4, 0b0101);
    const auto& reg = cov4::default_registry();
    cov4::Evaluator ev(reg, sep);
    for (const auto& def : reg.defs()) {
        if (def.name == "A") {
            CHECK(ev.magnitude("A") > 0.5);
        } else {
            CHECK(ev.magnitude(def.name) < 1e-10);
        }
    }
}

TEST_CASE("binarized vector patterns") {
    const auto& reg = cov4::default_registry();
    const auto sep = cov4::binarized_vector(ket::basis_state(4, 0), reg, 1e-9);
    CHECK(sep.bits() == std::array<int, 8>{1, 0, 0, 0, 0, 0, 0, 0});

    const auto w4 = cov4::binarized_vector(ketparse::parse_state("|0001>+|0010>+|0100>+|1000>"), reg, 1e-9);
    CHECK(w4.bits() == std::array<int, 8>{1, 1, 1, 1, 0, 0, 0, 0});

    // two-term nilpotent normal form: GHZ3 (x) |0> class
    const auto nil = cov4::binarized_vector(normal_forms::l_03p1_03p1(), reg, 1e-9);
    CHECK(nil.bits() == std::array<int, 8>{1, 1, 1, 0, 1, 0, 0, 0});
}

TEST_CASE("family-discriminating covariant flags on normal forms") {
    const auto& reg = cov4::default_registry();
    const Complex a{0.613, 0.284}, b{-0.412, 0.771}, c{0.952, -0.143};

    const auto ghz = cov4::algorithm2_covariants(ketparse::parse_state("|0000>+|1111>"), reg, 1e-9);
    CHECK_FALSE(ghz.Gbar);
    CHECK_FALSE(ghz.G);
    CHECK_FALSE(ghz.Hsum);
    CHECK_FALSE(ghz.Lsum);

    const auto l00c2 = cov4::algorithm2_covariants(normal_forms::l_abc2(0, 0, c), reg, 1e-9);
    CHECK_FALSE(l00c2.Gbar);
    CHECK_FALSE(l00c2.G);
    CHECK(l00c2.Hsum);
    CHECK_FALSE(l00c2.Lsum);

    const auto laa02 = cov4::algorithm2_covariants(normal_forms::l_abc2(a, a, 0), reg, 1e-9);
    CHECK_FALSE(laa02.Gbar);
    CHECK(laa02.G);
    CHECK(laa02.Hsum);
    CHECK_FALSE(laa02.Lsum);

    const auto l02b2 = cov4::algorithm2_covariants(normal_forms::l_a2b2(0, b), reg, 1e-9);
    CHECK(l02b2.Gbar);
    CHECK(l02b2.G);
    CHECK(l02b2.Hsum);
    CHECK_FALSE(l02b2.Lsum);

    const auto l03p1 = cov4::algorithm2_covariants(normal_forms::l_a2_03p1(a), reg, 1e-9);
    CHECK(l03p1.Gbar);
    CHECK(l03p1.G);
    CHECK(l03p1.Hsum);
    CHECK(l03p1.Lsum);
}

TEST_CASE("symmetrized sums have permutation-stable zero flags") {
    const auto& reg = cov4::default_registry();
    std::mt19937_64 rng(103);
    for (int rep = 0; rep < 3; ++rep) {
        const ket::StateVec s = random_state4(rng);
        bool pb_ref = false, pd2_ref = false, k3_ref = false, first = true;
        std::array<int, 4> perm = {1, 2, 3, 4};
        do {
            const ket::StateVec ps = ket::permute_qubits(s, {perm[0], perm[1], perm[2], perm[3]});
            cov4::Evaluator ev(reg, ps);
            const bool pb = ev.sum_nonzero(cov4::names_B(), 1e-9);
            const bool pd2 = ev.sum_nonzero(cov4::names_D2(), 1e-9);
            const bool k3 = ev.sum_nonzero(cov4::names_K3(), 1e-9);
            if (first) {
                pb_ref = pb;
                pd2_ref = pd2;
                k3_ref = k3;
                first = false;
            } else {
                CHECK(pb == pb_ref);
                CHECK(pd2 == pd2_ref);
                CHECK(k3 == k3_ref);
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
}
