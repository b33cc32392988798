#pragma once

#include <array>
#include <string>
#include <vector>

#include "qent/classifier.hpp"
#include "qent/grover.hpp"
#include "qent/ketstate.hpp"

namespace qent::shor {

// Periodic state parameters: shift l, period r, derived term count
// A = ceil((N - l) / r) with N = 2^n.
struct PeriodicSpec {
    int n;
    int l;
    int r;
    int A;
};

PeriodicSpec make_spec(int n, int l, int r);

// (1/sqrt(A)) * sum_i |l + i r>.
ket::StateVec periodic_state(const PeriodicSpec& spec);

// Dense transform b_y = (1/sqrt(N)) sum_x e^{+2 pi i x y / N} a_x.
ket::StateVec qft(const ket::StateVec& s);
ket::StateVec qft_inverse(const ket::StateVec& s);

// The 11-gate circuit for n=4: H(1); cR2(2,1); cR3(3,1); cR4(4,1); H(2);
// cR2(3,2); cR3(4,2); H(3); cR2(4,3); H(4); SWAP(1,4)+SWAP(2,3).
// Returns 12 states: the input followed by the state after each gate.
std::vector<ket::StateVec> qft_gate_sequence_4(const ket::StateVec& s);

// Display names for the 12 sequence entries.
const std::array<std::string, 12>& qft_step_names();

enum class TraceCase { AlwaysNonzero, BecomesNonzero, AlwaysZero, Irregular };

std::string_view trace_case_name(TraceCase c);

struct QftTrace {
    PeriodicSpec spec;
    std::array<double, 12> values;  // |Det2222| after steps 0..11
    TraceCase kase = TraceCase::Irregular;
    int step = -1;  // first nonzero step for BecomesNonzero
};

// Zero threshold for the case split is 1e-11 on |Det2222|.
QftTrace qft_trace(const PeriodicSpec& spec, const classify::Options& opt = {});

// Family grid over all (l, r) in [0,N-1] x [1,N-1]; result[r-1][l].
// n = 4 classifies with verstraete_type, n = 3 with classify3.
std::vector<std::vector<classify::Family>> periodic_table(int n, bool after_qft, const classify::Options& opt = {},
                                                          grover::Exec exec = grover::Exec::Parallel);

struct PropositionCheck {
    std::string name;
    int checked = 0;
    int failed = 0;
    std::vector<std::string> failures;

    bool ok() const { return failed == 0; }
};

struct PropositionReport {
    std::vector<PropositionCheck> checks;  // five propositions per n

    bool all_ok() const {
        for (const auto& c : checks)
            if (!c.ok()) return false;
        return true;
    }
};

// Constructive verification of the five periodic-state propositions for
// every n in [3, n_max].
PropositionReport check_propositions(int n_max);

struct PhiArrow {
    int from, to;
    double deviation;  // max amplitude deviation of qft(phi_from) vs phi_to
    bool ok;
};

struct PhiLabelCheck {
    int index;
    classify::Family printed;
    classify::Family computed;
    bool match;
    bool flagged_discrepancy;  // printed label contradicted by the separability oracle
};

struct PhiChainReport {
    std::vector<PhiArrow> arrows;
    std::vector<PhiLabelCheck> labels;
};

// Verifies the printed 3-qubit QFT chains and their orbit labels.
PhiChainReport phi_chain_check(const classify::Options& opt = {});

// The printed 15-state chain; index 1..15.
ket::StateVec phi_state(int index);
classify::Family phi_printed_orbit(int index);

}  // namespace qent::shor
