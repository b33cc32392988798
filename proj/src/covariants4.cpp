#include "qent/covariants4.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <initializer_list>
#include <random>

#include <json.hpp>

namespace qent::cov4 {

namespace {

using nlohmann::json;

ConstructionNode parse_node(const json& j) {
    ConstructionNode node;
    const std::string op = j.at("op").get<std::string>();
    if (op == "ref") {
        node.op = ConstructionNode::Op::Ref;
        node.name = j.at("name").get<std::string>();
        return node;
    }
    for (const json& a : j.at("args")) node.args.push_back(parse_node(a));
    if (op == "transvect") {
        node.op = ConstructionNode::Op::Transvect;
        const auto& ords = j.at("orders");
        for (int w = 0; w < 4; ++w) node.orders[w] = ords.at(w).get<int>();
    } else if (op == "multiply") {
        node.op = ConstructionNode::Op::Multiply;
    } else if (op == "add") {
        node.op = ConstructionNode::Op::Add;
    } else if (op == "subtract") {
        node.op = ConstructionNode::Op::Subtract;
    } else {
        throw RegistryError("unknown construction op '" + op + "'");
    }
    if (node.args.size() < 2) throw RegistryError("construction op '" + op + "' needs at least two arguments");
    if (node.op != ConstructionNode::Op::Add && node.args.size() != 2)
        throw RegistryError("construction op '" + op + "' is binary");
    return node;
}

void collect_refs(const ConstructionNode& n, std::vector<std::string>& out) {
    if (n.op == ConstructionNode::Op::Ref) {
        out.push_back(n.name);
        return;
    }
    for (const ConstructionNode& a : n.args) collect_refs(a, out);
}

std::vector<std::string> suffixes(const std::string& stem, std::initializer_list<const char*> tags) {
    std::vector<std::string> out;
    for (const char* t : tags) out.push_back(stem + "_" + t);
    return out;
}

}  // namespace

Registry::Registry(std::vector<CovariantDef> defs) : defs_(std::move(defs)) {
    for (std::size_t i = 0; i < defs_.size(); ++i) {
        const std::string& name = defs_[i].name;
        if (index_.count(name)) throw RegistryError("duplicate covariant name '" + name + "'");
        std::vector<std::string> refs;
        collect_refs(defs_[i].construction, refs);
        for (const std::string& r : refs) {
            if (r != "A" && !index_.count(r))
                throw RegistryError("covariant '" + name + "' references undefined '" + r + "'");
        }
        index_[name] = i;
    }
}

const CovariantDef& Registry::find(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) throw UnknownCovariant("no covariant named '" + name + "'");
    return defs_[it->second];
}

Registry load_registry(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw RegistryError("cannot open covariant registry '" + path + "'");
    json j;
    in >> j;
    std::vector<CovariantDef> defs;
    for (const json& e : j) {
        CovariantDef d;
        d.name = e.at("name").get<std::string>();
        const auto& md = e.at("multidegree");
        for (int w = 0; w < 4; ++w) d.multidegree[w] = md.at(w).get<int>();
        d.construction = parse_node(e.at("construction"));
        defs.push_back(std::move(d));
    }
    Registry reg(std::move(defs));
    validate_registry_static(reg);
    return reg;
}

const Registry& default_registry() {
    static const Registry reg = [] {
        const char* env = std::getenv("QENT_COVARIANTS");
        std::string path = env ? env : std::string(QENT_DATA_DIR) + "/covariants.json";
        return load_registry(path);
    }();
    return reg;
}

Evaluator::Evaluator(const Registry& reg, const ket::StateVec& s) : reg_(reg) {
    memo_.emplace("A", forms::form_from_state(s));
}

const forms::MultiForm& Evaluator::eval(const std::string& name) {
    auto it = memo_.find(name);
    if (it != memo_.end()) return it->second;
    const CovariantDef& def = reg_.find(name);

    // Refs resolve through the memo, recursing into registry entries on
    // demand; the registry constructor guarantees the reference DAG is
    // acyclic (entries reference only earlier ones).
    std::function<forms::MultiForm(const ConstructionNode&)> run = [&](const ConstructionNode& n) -> forms::MultiForm {
        switch (n.op) {
            case ConstructionNode::Op::Ref:
                return eval(n.name);
            case ConstructionNode::Op::Transvect:
                return forms::transvect(run(n.args[0]), run(n.args[1]), n.orders);
            case ConstructionNode::Op::Multiply:
                return forms::multiply(run(n.args[0]), run(n.args[1]));
            case ConstructionNode::Op::Add:
            case ConstructionNode::Op::Subtract: {
                forms::MultiForm acc = run(n.args[0]);
                for (std::size_t i = 1; i < n.args.size(); ++i) {
                    const forms::MultiForm term = run(n.args[i]);
                    if (term.multidegree() != acc.multidegree())
                        throw RegistryError("sum of forms with mismatched multidegrees");
                    const double sgn = n.op == ConstructionNode::Op::Add ? 1.0 : -1.0;
                    for (std::size_t k = 0; k < acc.coeffs().size(); ++k) acc.coeffs()[k] += sgn * term.coeffs()[k];
                }
                acc.prune();
                return acc;
            }
        }
        throw RegistryError("corrupt construction node");
    };
    forms::MultiForm value = run(def.construction);
    if (value.max_abs_coeff() > 0.0 && value.multidegree() != def.multidegree)
        throw RegistryError("covariant '" + name + "' evaluated to an unexpected multidegree");
    auto [pos, _] = memo_.emplace(name, std::move(value));
    return pos->second;
}

double Evaluator::magnitude(const std::string& name) { return eval(name).max_abs_coeff(); }

bool Evaluator::nonzero(const std::string& name, double tol) { return magnitude(name) > tol; }

bool Evaluator::sum_nonzero(const std::vector<std::string>& names, double tol) {
    // Summands have pairwise distinct multidegrees, so their monomial
    // supports are disjoint and the sum vanishes iff every summand does.
    for (const std::string& n : names)
        if (nonzero(n, tol)) return true;
    return false;
}

bool Evaluator::product_nonzero(const std::vector<std::string>& names, double tol) {
    // Polynomials over C form an integral domain: the product vanishes iff
    // some factor does, and the factor test is the numerically stable form
    // of the statement (the explicit product can cancel to the noise floor
    // on states passing near deeper strata).
    for (const std::string& n : names) {
        if (magnitude(n) <= tol) return false;
    }
    return true;
}

forms::MultiForm eval_covariant(const std::string& name, const ket::StateVec& s) {
    Evaluator ev(default_registry(), s);
    return ev.eval(name);
}

const std::vector<std::string>& names_B() {
    static const auto v = suffixes("B", {"2200", "2020", "2002", "0220", "0202", "0022"});
    return v;
}
const std::vector<std::string>& names_C() {
    static const auto v = suffixes("C", {"3111", "1311", "1131", "1113"});
    return v;
}
const std::vector<std::string>& names_D1() {
    static const auto v = suffixes("D", {"4000", "0400", "0040", "0004"});
    return v;
}
const std::vector<std::string>& names_D2() {
    static const auto v = suffixes("D", {"2200", "2020", "2002", "0220", "0202", "0022"});
    return v;
}
const std::vector<std::string>& names_F() {
    static const auto v = suffixes("F1", {"2220", "2202", "2022", "0222"});
    return v;
}
const std::vector<std::string>& names_L() {
    static const auto v = suffixes("L", {"6000", "0600", "0060", "0006"});
    return v;
}
const std::vector<std::string>& names_K5() {
    static const auto v = suffixes("K", {"5111", "1511", "1151", "1115"});
    return v;
}
const std::vector<std::string>& names_K3() {
    static const auto v = suffixes("K", {"3311", "3131", "3113", "1331", "1313", "1133"});
    return v;
}
const std::vector<std::string>& names_G1() {
    static const auto v = suffixes("G1", {"3111", "1311", "1131", "1113"});
    return v;
}
const std::vector<std::string>& names_G2() {
    static const auto v = suffixes("G2", {"3111", "1311", "1131", "1113"});
    return v;
}
const std::vector<std::string>& names_H() {
    static const auto v = suffixes("H", {"2220", "2202", "2022", "0222"});
    return v;
}

CovariantVector binarized_vector(const ket::StateVec& s, const Registry& reg, double tol) {
    Evaluator ev(reg, s);
    CovariantVector out;
    out.entries[0] = {"A", ev.nonzero("A", tol)};
    out.entries[1] = {"P_B", ev.sum_nonzero(names_B(), tol)};
    out.entries[2] = {"P_C1", ev.sum_nonzero(names_C(), tol)};
    out.entries[3] = {"P_C2", ev.product_nonzero(names_C(), tol)};
    out.entries[4] = {"P_D1", ev.sum_nonzero(names_D1(), tol)};
    out.entries[5] = {"P_D2", ev.sum_nonzero(names_D2(), tol)};
    out.entries[6] = {"P_F", ev.sum_nonzero(names_F(), tol)};
    out.entries[7] = {"P_L", ev.sum_nonzero(names_L(), tol)};
    return out;
}

Alg2Flags algorithm2_covariants(const ket::StateVec& s, const Registry& reg, double tol) {
    Evaluator ev(reg, s);
    Alg2Flags f;
    f.Lsum = ev.sum_nonzero(names_L(), tol);
    f.K5 = ev.sum_nonzero(names_K5(), tol);
    f.K3 = ev.sum_nonzero(names_K3(), tol);
    f.G = ev.sum_nonzero(names_G2(), tol);
    f.Gbar = ev.product_nonzero(names_G1(), tol);
    f.D = ev.sum_nonzero(names_D1(), tol);
    f.Hsum = ev.sum_nonzero(names_H(), tol);
    f.C = ev.nonzero("G2_1111", tol);
    return f;
}

void validate_registry_static(const Registry& reg) {
    std::vector<std::string> required = {"A"};
    for (const auto* group : {&names_B(), &names_C(), &names_D1(), &names_D2(), &names_F(), &names_L(),
                              &names_K5(), &names_K3(), &names_G1(), &names_G2(), &names_H()})
        required.insert(required.end(), group->begin(), group->end());
    required.push_back("G2_1111");
    for (const std::string& name : required) {
        if (name == "A") continue;
        if (!reg.contains(name)) throw RegistryError("registry is missing required covariant '" + name + "'");
    }

    // Multidegree contract on a couple of pseudo-random unit states.
    std::mt19937_64 rng(20240701u);
    std::normal_distribution<double> dist(0.0, 1.0);
    for (int rep = 0; rep < 2; ++rep) {
        std::vector<ket::Complex> amps(16);
        for (auto& a : amps) a = ket::Complex{dist(rng), dist(rng)};
        const ket::StateVec s = ket::normalized(ket::StateVec{4, amps});
        Evaluator ev(reg, s);
        for (const CovariantDef& def : reg.defs()) {
            const forms::MultiForm& val = ev.eval(def.name);
            if (val.max_abs_coeff() > 0.0 && val.multidegree() != def.multidegree)
                throw RegistryError("covariant '" + def.name + "' violates its declared multidegree");
        }
    }
}

}  // namespace qent::cov4
