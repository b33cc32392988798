#pragma once

#include <string>
#include <vector>

#include "qent/covariants4.hpp"
#include "qent/invariants4.hpp"
#include "qent/ketstate.hpp"

namespace qent::classify {

enum class Family {
    G_abcd,
    G_abc0,
    G_00cc,
    G_a000,
    G_ab00,
    G_aam2a0,  // G_{aa(-2a)0}
    G_abb0,
    G_aaa0,
    G_abcc,
    G_abbb,
    L_abc2,
    L_00c2,
    L_aa02,
    L_a002,
    L_ab02,
    L_a2b2,
    L_02b2,
    L_0bh2,  // L_{0b(b/2)_2}
    L_a0c2,
    L_ab3,
    L_0b3,
    L_a03,
    L_abb2,
    L_a2a2,
    L_0bb2,
    L_a4,
    L_a2_03p1,
    L_05p3,
    L_07p1,
    L_03p1_03p1,
    Gr_0,
    Gr_1,
    Gr_2,
    Gr_3,
    Gr_4,
    Gr_5,
    Gr_6,
    Gr_7,
    Gr_8,
    O_1,
    O_2,
    O_3,
    O_4,
    O_5,
    O_6,
    Separable,
    EPR,
    Unclassified,
};

// Canonical ASCII label, used verbatim in all CSV/JSON output.
std::string_view label(Family f);
Family family_from_label(std::string_view s);
bool is_nullcone_stratum(Family f);

struct Options {
    double tol_invariant = 1e-9;
    double tol_covariant = 1e-9;
    double tol_rank = 1e-9;
    double tol_det = 1e-18;
    const cov4::Registry* registry = nullptr;  // default_registry() when null

    const cov4::Registry& reg() const { return registry ? *registry : cov4::default_registry(); }
};

// Ordered list of (condition, outcome) pairs visited by a decision
// procedure; kept for Unclassified diagnostics and table reproduction.
struct Trace {
    std::vector<std::pair<std::string, bool>> steps;

    void note(std::string cond, bool outcome) { steps.emplace_back(std::move(cond), outcome); }
    std::string to_string() const;
};

struct Classification {
    Family family = Family::Unclassified;
    Trace trace;
};

bool is_in_nullcone(const ket::StateVec& s, const Options& opt = {});
bool is_in_nullcone(const inv4::Invariants4& inv, const Options& opt = {});

// Nullcone stratification by the binarized covariant vector; throws
// NotNilpotent outside the nullcone.
Classification nilpotent_type(const ket::StateVec& s, const Options& opt = {});

// Full family classification of a 4-qubit state (nullcone states delegate
// to nilpotent_type). Never throws on in-domain states; uncovered condition
// patterns yield Unclassified with the visited trace.
Classification verstraete_type(const ket::StateVec& s, const Options& opt = {});

// 3-qubit orbit classification (O_1 separable, O_2/O_3/O_4 biseparable,
// O_5 W class, O_6 GHZ class).
Family classify3(const ket::StateVec& s, const Options& opt = {});

// 2x2x2 Cayley hyperdeterminant (degree 4 in the eight amplitudes).
std::complex<double> cayley_det222(const ket::StateVec& s);

// Second singular value of the one-qubit flattening along q.
double flattening_sigma2(const ket::StateVec& s, int q);

bool is_separable(const ket::StateVec& s, const Options& opt = {});

Family classify2(const ket::StateVec& s, const Options& opt = {});

}  // namespace qent::classify
