#include <doctest.h>

#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

#include "qent/ketparse.hpp"
#include "qent/shor.hpp"

using namespace qent;
using classify::Family;
using ket::Complex;

namespace {

double max_dev(const ket::StateVec& a, const ket::StateVec& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.amps.size(); ++i) m = std::max(m, std::abs(a.amps[i] - b.amps[i]));
    return m;
}

ket::StateVec random_state(int n, std::mt19937_64& rng) {
    std::normal_distribution<double> d(0.0, 1.0);
    std::vector<Complex> amps(std::size_t{1} << n);
    for (auto& a : amps) a = Complex{d(rng), d(rng)};
    return ket::normalized(ket::StateVec{n, std::move(amps)});
}

// Golden grids transcribed from the published tables; the documented errata
// cells where the published label contradicts an algebraic certificate.
std::vector<std::vector<std::string>> load_golden(const std::string& name, int n) {
    std::ifstream in(std::string(QENT_GOLDEN_DIR) + "/" + name);
    REQUIRE(in.good());
    std::string line;
    std::getline(in, line);  // header
    std::vector<std::vector<std::string>> rows;
    const int N = 1 << n;
    while (std::getline(in, line)) {
        std::stringstream ss(line);
        std::string cell;
        std::getline(ss, cell, ',');
        std::vector<std::string> cells;
        while (std::getline(ss, cell, ',')) cells.push_back(cell);
        REQUIRE(static_cast<int>(cells.size()) == N);
        rows.push_back(std::move(cells));
    }
    REQUIRE(static_cast<int>(rows.size()) == N - 1);
    return rows;
}

}  // namespace

TEST_CASE("periodic state construction") {
    const auto s = shor::periodic_state(shor::make_spec(3, 3, 2));
    CHECK(max_dev(s, ketparse::parse_state("|011>+|101>+|111>")) < 1e-15);
    CHECK(shor::make_spec(3, 3, 2).A == 3);

    const auto t = shor::periodic_state(shor::make_spec(4, 15, 7));
    CHECK(t.amps[15].real() == doctest::Approx(1.0));

    const auto u = shor::periodic_state(shor::make_spec(4, 0, 4));
    CHECK(max_dev(u, ketparse::parse_state("1/2*(|0000>+|0100>+|1000>+|1100>)")) < 1e-15);

    CHECK_THROWS_AS(shor::make_spec(4, 16, 1), InvalidSpec);
    CHECK_THROWS_AS(shor::make_spec(4, 0, 0), InvalidSpec);
    CHECK_THROWS_AS(shor::make_spec(4, 0, 16), InvalidSpec);
}

TEST_CASE("transform basics") {
    const auto plus = shor::qft(ket::basis_state(5, 0));
    CHECK(max_dev(plus, ket::uniform_state(5)) < 1e-12);

    // any basis state maps to a separable state
    std::mt19937_64 rng(139);
    for (int rep = 0; rep < 5; ++rep) {
        const int n = 3 + static_cast<int>(rng() % 3);
        const auto s = shor::qft(ket::basis_state(n, rng() % (1u << n)));
        CHECK(classify::is_separable(s));
    }

    // unitarity and inverse round trip
    for (int rep = 0; rep < 5; ++rep) {
        const auto s = random_state(4, rng);
        const auto t = shor::qft(s);
        CHECK(std::abs(ket::norm(t) - 1.0) < 1e-11);
        CHECK(max_dev(shor::qft_inverse(t), s) < 1e-10);
    }
}

TEST_CASE("transforming the single-excitation 3-qubit state lands in the cat class") {
    const auto w3 = ketparse::parse_state("|001>+|010>+|100>");
    const auto t = shor::qft(w3);
    const auto det = classify::cayley_det222(t);
    CHECK(std::abs(std::abs(det) - 1.0 / 36.0) < 1e-10);
    CHECK(std::abs(std::arg(det) + M_PI / 2.0) < 1e-8);
    CHECK(classify::classify3(t) == Family::O_6);
}

TEST_CASE("gate sequence matches the dense transform") {
    std::mt19937_64 rng(149);
    for (int rep = 0; rep < 100; ++rep) {
        const auto s = random_state(4, rng);
        const auto seq = shor::qft_gate_sequence_4(s);
        REQUIRE(seq.size() == 12);
        CHECK(max_dev(seq[0], s) == 0.0);
        CHECK(max_dev(seq.back(), shor::qft(s)) < 1e-10);
    }
    CHECK_THROWS_AS(shor::qft_gate_sequence_4(ket::basis_state(3, 0)), WrongArity);
}

TEST_CASE("hyperdeterminant is flat across Hadamard and swap steps") {
    // steps 1, 5, 8, 10 are Hadamards and step 11 the final swap
    for (auto [l, r] : {std::pair{1, 3}, {0, 3}, {5, 3}, {9, 1}, {0, 2}}) {
        const auto seq = shor::qft_gate_sequence_4(shor::periodic_state(shor::make_spec(4, l, r)));
        std::array<double, 12> det{};
        for (int i = 0; i < 12; ++i) det[i] = inv4::abs_hyperdeterminant(seq[i]);
        for (int i : {1, 5, 8, 10, 11}) CHECK(std::abs(det[i] - det[i - 1]) < 1e-10);
    }
}

TEST_CASE("trace case classification") {
    const auto t13 = shor::qft_trace(shor::make_spec(4, 1, 3));
    CHECK(t13.kase == shor::TraceCase::AlwaysNonzero);

    const auto t03 = shor::qft_trace(shor::make_spec(4, 0, 3));
    CHECK(t03.kase == shor::TraceCase::BecomesNonzero);
    // the first nonzero step is a controlled-phase gate, never H or swap
    CHECK(t03.step >= 2);
    CHECK(shor::qft_step_names()[t03.step].front() == 'c');

    const auto t02 = shor::qft_trace(shor::make_spec(4, 0, 2));
    CHECK(t02.kase == shor::TraceCase::AlwaysZero);
}

TEST_CASE("grid reproduction against the published tables") {
    // (row r, column l) cells where the published label contradicts an
    // explicit algebraic certificate; the computed label is listed next to it
    const std::map<std::pair<int, int>, std::pair<std::string, std::string>> errata_n4 = {
        {{3, 6}, {"L_aa02", "L_02b2"}},  // Jordan-type certificate
    };
    // after the transform: every two-term periodic state with odd period maps
    // to a sum of two independent product vectors (rank-2 cat class)
    auto is_qft_cat_cell = [](int r, int l) {
        if (r % 2 == 0) return false;
        const int A = (16 - l + r - 1) / r;
        return A == 2;
    };

    SUBCASE("4-qubit, before") {
        const auto golden = load_golden("table_periodic_n4.csv", 4);
        const auto grid = shor::periodic_table(4, false);
        for (int r = 1; r < 16; ++r)
            for (int l = 0; l < 16; ++l) {
                const std::string got{classify::label(grid[r - 1][l])};
                const auto it = errata_n4.find({r, l});
                if (it != errata_n4.end()) {
                    CHECK(golden[r - 1][l] == it->second.first);
                    CHECK(got == it->second.second);
                } else {
                    CHECK(got == golden[r - 1][l]);
                }
            }
    }
    SUBCASE("4-qubit, after") {
        const auto golden = load_golden("table_periodic_n4_qft.csv", 4);
        const auto grid = shor::periodic_table(4, true);
        for (int r = 1; r < 16; ++r)
            for (int l = 0; l < 16; ++l) {
                const std::string got{classify::label(grid[r - 1][l])};
                if (golden[r - 1][l] == "L_00c2" && is_qft_cat_cell(r, l)) {
                    CHECK(got == "G_00cc");
                } else {
                    CHECK(got == golden[r - 1][l]);
                }
            }
    }
    SUBCASE("3-qubit, both") {
        const auto golden_before = load_golden("table_periodic_n3.csv", 3);
        const auto before = shor::periodic_table(3, false);
        const auto golden_after = load_golden("table_periodic_n3_qft.csv", 3);
        const auto after = shor::periodic_table(3, true);
        for (int r = 1; r < 8; ++r)
            for (int l = 0; l < 8; ++l) {
                CHECK(std::string(classify::label(before[r - 1][l])) == golden_before[r - 1][l]);
                CHECK(std::string(classify::label(after[r - 1][l])) == golden_after[r - 1][l]);
            }
    }
}

TEST_CASE("propositions hold constructively for small sizes") {
    const auto report = shor::check_propositions(6);
    for (const auto& check : report.checks) {
        INFO(check.name);
        CHECK(check.failed == 0);
        CHECK(check.checked > 0);
    }
}

TEST_CASE("printed chain arrows and orbits") {
    const auto report = shor::phi_chain_check();
    REQUIRE(report.arrows.size() == 10);
    for (const auto& arrow : report.arrows) {
        INFO("arrow ", arrow.from, " -> ", arrow.to);
        CHECK(arrow.ok);
        CHECK(arrow.deviation <= 1e-9);
    }
    int matches = 0;
    for (const auto& label : report.labels) {
        if (label.match) ++matches;
        if (label.index == 4) {
            // printed as a biseparable orbit but algebraically separable
            CHECK_FALSE(label.match);
            CHECK(label.flagged_discrepancy);
            CHECK(label.computed == Family::O_1);
        }
    }
    CHECK(matches == 14);
}
