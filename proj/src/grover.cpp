#include "qent/grover.hpp"

#include <algorithm>
#include <cmath>

namespace qent::grover {

namespace {

constexpr int kDim = 16;

std::uint32_t to_mask(const MarkedSet& m) {
    std::uint32_t mask = 0;
    for (std::uint32_t e : m.elems) mask |= (1u << e);
    return mask;
}

classify::Family classify_state(const ket::StateVec& s, const classify::Options& opt) {
    return classify::verstraete_type(s, opt).family;
}

// Lean trajectory loop used by the exhaustive scan: no state storage.
void scan_one(std::uint32_t mask, int k_max, const classify::Options& opt, std::set<classify::Family>& all_it,
              std::set<classify::Family>& first_it) {
    ket::StateVec s = ket::uniform_state(4);
    for (int k = 1; k <= k_max; ++k) {
        double mean_re = 0.0, mean_im = 0.0;
        for (int i = 0; i < kDim; ++i) {
            const double sgn = (mask >> i) & 1u ? -1.0 : 1.0;
            mean_re += sgn * s.amps[i].real();
            mean_im += sgn * s.amps[i].imag();
        }
        const ket::Complex mean2{2.0 * mean_re / kDim, 2.0 * mean_im / kDim};
        for (int i = 0; i < kDim; ++i) {
            const double sgn = (mask >> i) & 1u ? -1.0 : 1.0;
            s.amps[i] = mean2 - sgn * s.amps[i];
        }
        const classify::Family f = classify_state(s, opt);
        all_it.insert(f);
        if (k == 1) first_it.insert(f);
    }
}

}  // namespace

MarkedSet make_marked_set(std::vector<std::uint32_t> elems) {
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    if (elems.empty()) throw InvalidIndex("marked set must be nonempty");
    if (elems.back() >= kDim) throw InvalidIndex("marked element out of range [0,15]");
    return MarkedSet{std::move(elems)};
}

ket::StateVec grover_step(const ket::StateVec& s, const MarkedSet& m) {
    if (s.n != 4) throw WrongArity("the search scan is defined on 4 qubits");
    const std::uint32_t mask = to_mask(m);
    ket::StateVec out = s;
    for (int i = 0; i < kDim; ++i) {
        if ((mask >> i) & 1u) out.amps[i] = -out.amps[i];
    }
    ket::Complex mean{0.0, 0.0};
    for (int i = 0; i < kDim; ++i) mean += out.amps[i];
    mean /= static_cast<double>(kDim);
    for (int i = 0; i < kDim; ++i) out.amps[i] = 2.0 * mean - out.amps[i];
    return out;
}

Trajectory run_trajectory(const MarkedSet& m, int k_max, const classify::Options& opt) {
    if (k_max < 1) throw InvalidSpec("k_max must be >= 1");
    Trajectory traj;
    traj.marked = m;
    ket::StateVec s = ket::uniform_state(4);
    traj.steps.push_back({0, s, classify_state(s, opt), inv4::abs_hyperdeterminant(s)});
    for (int k = 1; k <= k_max; ++k) {
        s = grover_step(s, m);
        traj.steps.push_back({k, s, classify_state(s, opt), inv4::abs_hyperdeterminant(s)});
    }
    return traj;
}

ScanResult scan_families(const std::vector<int>& sizes, int k_max, const classify::Options& opt, Exec exec) {
    ScanResult result;
    for (int size : sizes) {
        if (size < 1 || size > kDim) throw InvalidSpec("marked-set size must be in [1,16]");

        // All C(16, size) subsets as bit masks.
        std::vector<std::uint32_t> masks;
        for (std::uint32_t mask = 1; mask < (1u << kDim); ++mask) {
            if (__builtin_popcount(mask) == size) masks.push_back(mask);
        }

        SizeScan scan;
        if (exec == Exec::Serial) {
            for (std::uint32_t mask : masks) scan_one(mask, k_max, opt, scan.all_iterations, scan.first_iteration);
        } else {
#pragma omp parallel
            {
                std::set<classify::Family> local_all, local_first;
#pragma omp for schedule(dynamic, 16) nowait
                for (long idx = 0; idx < static_cast<long>(masks.size()); ++idx)
                    scan_one(masks[static_cast<std::size_t>(idx)], k_max, opt, local_all, local_first);
#pragma omp critical
                {
                    scan.all_iterations.insert(local_all.begin(), local_all.end());
                    scan.first_iteration.insert(local_first.begin(), local_first.end());
                }
            }
        }
        result.emplace(size, std::move(scan));
    }
    return result;
}

std::vector<AppendixRow> appendix_a_check(int k_max, const classify::Options& opt) {
    using classify::Family;
    // Marked-set examples per family, in table order; the four families the
    // scan never produces are listed with no example.
    static const std::vector<std::pair<Family, std::vector<std::uint32_t>>> rows = {
        {Family::G_abcd, {0b0000, 0b0001, 0b0010, 0b0101, 0b1010, 0b1111}},
        {Family::G_abc0, {0b0000, 0b1111}},
        {Family::G_00cc, {0b0000}},
        {Family::G_a000, {0b0000, 0b0011, 0b1100, 0b1111}},
        {Family::G_ab00, {0b0000, 0b0011, 0b1101, 0b1110}},
        {Family::L_abc2, {}},
        {Family::L_00c2, {0b0000, 0b0011}},
        {Family::L_aa02, {0b0000, 0b0101}},
        {Family::L_a002, {0b0000, 0b0110, 0b1001, 0b1111}},
        {Family::L_ab02, {0b0000, 0b0001, 0b0010, 0b0101, 0b1010}},
        {Family::L_a2b2, {0b0000, 0b0001, 0b0010, 0b0100, 0b1001}},
        {Family::L_02b2, {0b0000, 0b0001, 0b0110}},
        {Family::L_ab3, {}},
        {Family::L_0b3, {}},
        {Family::L_a03, {}},
        {Family::L_a4, {0b0000, 0b0001, 0b0010, 0b0101, 0b0110, 0b1101}},
        {Family::L_a2_03p1, {0b0000, 0b0001, 0b1110}},
        {Family::Gr_8, {0b0000, 0b0111}},
        {Family::Gr_7, {0b0000, 0b0001, 0b0110, 0b1011}},
        {Family::Gr_6, {0b0000, 0b0001, 0b0010, 0b1100}},
        {Family::Gr_5, {0b0000, 0b0011, 0b0101, 0b1001}},
        {Family::Gr_4, {0b0000, 0b0001}},
        {Family::Gr_3, {0b0000, 0b0001, 0b0010, 0b0100}},
        {Family::Gr_2, {0b0000, 0b0001, 0b0110, 0b0111}},
        {Family::Gr_1, {0b0000, 0b0001, 0b0010, 0b0011}},
    };

    std::vector<AppendixRow> out;
    for (const auto& [fam, elems] : rows) {
        AppendixRow row;
        row.expected = fam;
        row.listed = !elems.empty();
        row.found_at = -1;
        if (row.listed) {
            row.marked = make_marked_set(elems);
            ket::StateVec s = ket::uniform_state(4);
            for (int k = 1; k <= k_max; ++k) {
                s = grover_step(s, row.marked);
                if (classify_state(s, opt) == fam) {
                    row.found_at = k;
                    break;
                }
            }
        }
        out.push_back(std::move(row));
    }
    return out;
}

}  // namespace qent::grover
