#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "qent/classifier.hpp"
#include "qent/ketstate.hpp"

namespace qent::grover {

// Marked basis states of the 4-qubit search space; sorted, unique, nonempty.
struct MarkedSet {
    std::vector<std::uint32_t> elems;
};

MarkedSet make_marked_set(std::vector<std::uint32_t> elems);

// One oracle (sign flip on marked indices) followed by the diffusion
// a -> 2*mean - a.
ket::StateVec grover_step(const ket::StateVec& s, const MarkedSet& m);

struct TrajectoryStep {
    int k;
    ket::StateVec state;
    classify::Family family;
    double absdet;
};

struct Trajectory {
    MarkedSet marked;
    std::vector<TrajectoryStep> steps;  // k = 0..k_max
};

Trajectory run_trajectory(const MarkedSet& m, int k_max, const classify::Options& opt = {});

enum class Exec { Serial, Parallel };

struct SizeScan {
    std::set<classify::Family> all_iterations;  // union over k = 1..k_max
    std::set<classify::Family> first_iteration;
};

using ScanResult = std::map<int, SizeScan>;

// Exhaustive scan over every marked set of each requested size. The serial
// path is the reference implementation; the parallel path distributes
// subsets over OpenMP threads and must produce identical results.
ScanResult scan_families(const std::vector<int>& sizes, int k_max, const classify::Options& opt = {},
                         Exec exec = Exec::Parallel);

struct AppendixRow {
    classify::Family expected;
    MarkedSet marked;      // empty when the table lists no example
    bool listed;           // false for the empty rows
    int found_at;          // first iteration matching expected, -1 = MISS
};

// Checks every row of the marked-set example table (k_max iterations each).
std::vector<AppendixRow> appendix_a_check(int k_max = 25, const classify::Options& opt = {});

}  // namespace qent::grover
