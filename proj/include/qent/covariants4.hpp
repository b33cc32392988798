#pragma once

#include <array>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "qent/forms.hpp"
#include "qent/ketstate.hpp"

namespace qent::cov4 {

// Construction tree of one covariant: transvectants, products, sums and
// differences over the ground form A and previously defined registry
// entries. Add is n-ary; the other compound ops are binary.
struct ConstructionNode {
    enum class Op { Ref, Transvect, Multiply, Add, Subtract };
    Op op = Op::Ref;
    std::string name;  // for Ref
    forms::Orders orders{};
    std::vector<ConstructionNode> args;
};

struct CovariantDef {
    std::string name;
    forms::MultiDeg multidegree;
    ConstructionNode construction;
};

// Immutable, ordered list of covariant definitions loaded from the JSON data
// file. Entries may reference only earlier entries (or "A").
class Registry {
  public:
    explicit Registry(std::vector<CovariantDef> defs);

    const CovariantDef& find(const std::string& name) const;
    bool contains(const std::string& name) const { return index_.count(name) != 0; }
    const std::vector<CovariantDef>& defs() const { return defs_; }

  private:
    std::vector<CovariantDef> defs_;
    std::map<std::string, std::size_t> index_;
};

Registry load_registry(const std::string& path);

// Shared registry loaded from $QENT_COVARIANTS or the built-in data path.
const Registry& default_registry();

// Per-state evaluation cache: covariants of one state are computed at most
// once and reused across the algorithm's sums and products.
class Evaluator {
  public:
    Evaluator(const Registry& reg, const ket::StateVec& s);

    const forms::MultiForm& eval(const std::string& name);
    double magnitude(const std::string& name);  // max |coeff|
    bool nonzero(const std::string& name, double tol);

    bool sum_nonzero(const std::vector<std::string>& names, double tol);
    bool product_nonzero(const std::vector<std::string>& names, double tol);

  private:
    const Registry& reg_;
    std::map<std::string, forms::MultiForm> memo_;
};

forms::MultiForm eval_covariant(const std::string& name, const ket::StateVec& s);

// Algorithm-1 vector V = [A, P_B, P_C1, P_C2, P_D1, P_D2, P_F, P_L],
// binarized (true = nonzero).
struct CovariantVector {
    std::array<std::pair<std::string, bool>, 8> entries;

    std::array<int, 8> bits() const {
        std::array<int, 8> b{};
        for (std::size_t i = 0; i < 8; ++i) b[i] = entries[i].second ? 1 : 0;
        return b;
    }
};

CovariantVector binarized_vector(const ket::StateVec& s, const Registry& reg, double tol);

// Zero-flags of the eight family-discriminating covariants of the
// non-nilpotent classification (true = nonzero).
struct Alg2Flags {
    bool Lsum, K5, K3, G, Gbar, D, Hsum, C;
};

Alg2Flags algorithm2_covariants(const ket::StateVec& s, const Registry& reg, double tol);

// Covariant name groups used by the two decision procedures.
const std::vector<std::string>& names_B();
const std::vector<std::string>& names_C();
const std::vector<std::string>& names_D1();
const std::vector<std::string>& names_D2();
const std::vector<std::string>& names_F();
const std::vector<std::string>& names_L();
const std::vector<std::string>& names_K5();
const std::vector<std::string>& names_K3();
const std::vector<std::string>& names_G1();
const std::vector<std::string>& names_G2();
const std::vector<std::string>& names_H();

// Checks completeness (all required names present) and the declared
// multidegrees on random states; throws RegistryError on failure.
void validate_registry_static(const Registry& reg);

}  // namespace qent::cov4
