#include "qent/normal_forms.hpp"

#include <cmath>

namespace qent::normal_forms {

namespace {

ket::StateVec build(const std::vector<std::pair<int, Complex>>& terms) {
    std::vector<Complex> amps(16, Complex{0.0, 0.0});
    for (const auto& [idx, c] : terms) amps[static_cast<std::size_t>(idx)] += c;
    return ket::normalized(ket::StateVec{4, std::move(amps)});
}

constexpr int ket4(int b3, int b2, int b1, int b0) { return (b3 << 3) | (b2 << 2) | (b1 << 1) | b0; }

}  // namespace

ket::StateVec g_abcd(Complex a, Complex b, Complex c, Complex d) {
    const Complex apd = (a + d) / 2.0, amd = (a - d) / 2.0;
    const Complex bpc = (b + c) / 2.0, bmc = (b - c) / 2.0;
    return build({{ket4(0, 0, 0, 0), apd},
                  {ket4(1, 1, 1, 1), apd},
                  {ket4(0, 0, 1, 1), amd},
                  {ket4(1, 1, 0, 0), amd},
                  {ket4(0, 1, 0, 1), bpc},
                  {ket4(1, 0, 1, 0), bpc},
                  {ket4(0, 1, 1, 0), bmc},
                  {ket4(1, 0, 0, 1), bmc}});
}

ket::StateVec l_abc2(Complex a, Complex b, Complex c) {
    const Complex apb = (a + b) / 2.0, amb = (a - b) / 2.0;
    return build({{ket4(0, 0, 0, 0), apb},
                  {ket4(1, 1, 1, 1), apb},
                  {ket4(0, 0, 1, 1), amb},
                  {ket4(1, 1, 0, 0), amb},
                  {ket4(0, 1, 0, 1), c},
                  {ket4(1, 0, 1, 0), c},
                  {ket4(0, 1, 1, 0), 1.0}});
}

ket::StateVec l_a2b2(Complex a, Complex b) {
    return build({{ket4(0, 0, 0, 0), a},
                  {ket4(1, 1, 1, 1), a},
                  {ket4(0, 1, 0, 1), b},
                  {ket4(1, 0, 1, 0), b},
                  {ket4(0, 0, 1, 1), 1.0},
                  {ket4(0, 1, 1, 0), 1.0}});
}

ket::StateVec l_ab3(Complex a, Complex b) {
    const Complex apb = (a + b) / 2.0, amb = (a - b) / 2.0;
    const Complex is2{0.0, 1.0 / std::sqrt(2.0)};
    return build({{ket4(0, 0, 0, 0), a},
                  {ket4(1, 1, 1, 1), a},
                  {ket4(0, 1, 0, 1), apb},
                  {ket4(1, 0, 1, 0), apb},
                  {ket4(0, 1, 1, 0), amb},
                  {ket4(1, 0, 0, 1), amb},
                  {ket4(0, 0, 0, 1), is2},
                  {ket4(0, 0, 1, 0), is2},
                  {ket4(0, 1, 1, 1), -is2},
                  {ket4(1, 0, 1, 1), -is2}});
}

ket::StateVec l_a4(Complex a) {
    const Complex i{0.0, 1.0};
    return build({{ket4(0, 0, 0, 0), a},
                  {ket4(0, 1, 0, 1), a},
                  {ket4(1, 0, 1, 0), a},
                  {ket4(1, 1, 1, 1), a},
                  {ket4(0, 0, 0, 1), i},
                  {ket4(0, 1, 1, 0), 1.0},
                  {ket4(1, 0, 1, 1), -i}});
}

ket::StateVec l_a2_03p1(Complex a) {
    return build({{ket4(0, 0, 0, 0), a},
                  {ket4(1, 1, 1, 1), a},
                  {ket4(0, 0, 1, 1), 1.0},
                  {ket4(0, 1, 0, 1), 1.0},
                  {ket4(0, 1, 1, 0), 1.0}});
}

ket::StateVec l_05p3() {
    return build({{ket4(0, 0, 0, 0), 1.0}, {ket4(0, 1, 0, 1), 1.0}, {ket4(1, 0, 0, 0), 1.0}, {ket4(1, 1, 1, 0), 1.0}});
}

ket::StateVec l_07p1() {
    return build({{ket4(0, 0, 0, 0), 1.0}, {ket4(1, 0, 1, 1), 1.0}, {ket4(1, 1, 0, 1), 1.0}, {ket4(1, 1, 1, 0), 1.0}});
}

ket::StateVec l_03p1_03p1() { return build({{ket4(0, 0, 0, 0), 1.0}, {ket4(0, 1, 1, 1), 1.0}}); }

}  // namespace qent::normal_forms
