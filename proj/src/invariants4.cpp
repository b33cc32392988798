#include "qent/invariants4.hpp"

#include <cmath>

namespace qent::inv4 {

namespace {

LComplex det2(LComplex a, LComplex b, LComplex c, LComplex d) { return a * d - b * c; }

LComplex det3(const std::array<std::array<LComplex, 3>, 3>& m) {
    return m[0][0] * det2(m[1][1], m[1][2], m[2][1], m[2][2]) -
           m[0][1] * det2(m[1][0], m[1][2], m[2][0], m[2][2]) +
           m[0][2] * det2(m[1][0], m[1][1], m[2][0], m[2][1]);
}

LComplex det4(const std::array<std::array<LComplex, 4>, 4>& m) {
    LComplex acc{0.0L, 0.0L};
    for (int c = 0; c < 4; ++c) {
        std::array<std::array<LComplex, 3>, 3> minor{};
        for (int r = 1; r < 4; ++r) {
            int cc = 0;
            for (int c2 = 0; c2 < 4; ++c2) {
                if (c2 == c) continue;
                minor[r - 1][cc++] = m[r][c2];
            }
        }
        const LComplex term = m[0][c] * det3(minor);
        acc += (c % 2 == 0) ? term : -term;
    }
    return acc;
}

forms::MultiForm to_binary_form(const std::array<LComplex, 7>& coeffs, int degree) {
    forms::MultiForm f({degree, 0, 0, 0});
    for (int e = 0; e <= degree; ++e)
        f.at(e, 0, 0, 0) = Complex{static_cast<double>(coeffs[static_cast<std::size_t>(e)].real()),
                                   static_cast<double>(coeffs[static_cast<std::size_t>(e)].imag())};
    return f;
}

}  // namespace

Invariants4 compute_invariants(const ket::StateVec& s) {
    if (s.n != 4) throw WrongArity("4-qubit invariants require n=4, got n=" + std::to_string(s.n));
    std::array<LComplex, 16> v;
    for (int i = 0; i < 16; ++i) v[static_cast<std::size_t>(i)] = LComplex{s.amps[static_cast<std::size_t>(i)].real(), s.amps[static_cast<std::size_t>(i)].imag()};
    auto a = [&](int i, int j, int k, int l) { return v[static_cast<std::size_t>((i << 3) | (j << 2) | (k << 1) | l)]; };

    Invariants4 inv;
    inv.H = a(0, 0, 0, 0) * a(1, 1, 1, 1) - a(1, 1, 1, 0) * a(0, 0, 0, 1) - a(0, 0, 1, 0) * a(1, 1, 0, 1) +
            a(1, 1, 0, 0) * a(0, 0, 1, 1) - a(0, 1, 0, 0) * a(1, 0, 1, 1) + a(1, 0, 1, 0) * a(0, 1, 0, 1) +
            a(0, 1, 1, 0) * a(1, 0, 0, 1) - a(1, 0, 0, 0) * a(0, 1, 1, 1);

    const std::array<std::array<LComplex, 4>, 4> lm = {{{a(0, 0, 0, 0), a(0, 0, 1, 0), a(0, 0, 0, 1), a(0, 0, 1, 1)},
                                                        {a(1, 0, 0, 0), a(1, 0, 1, 0), a(1, 0, 0, 1), a(1, 0, 1, 1)},
                                                        {a(0, 1, 0, 0), a(0, 1, 1, 0), a(0, 1, 0, 1), a(0, 1, 1, 1)},
                                                        {a(1, 1, 0, 0), a(1, 1, 1, 0), a(1, 1, 0, 1), a(1, 1, 1, 1)}}};
    inv.L = det4(lm);

    const std::array<std::array<LComplex, 4>, 4> mm = {{{a(0, 0, 0, 0), a(0, 0, 0, 1), a(0, 1, 0, 0), a(0, 1, 0, 1)},
                                                        {a(1, 0, 0, 0), a(1, 0, 0, 1), a(1, 1, 0, 0), a(1, 1, 0, 1)},
                                                        {a(0, 0, 1, 0), a(0, 0, 1, 1), a(0, 1, 1, 0), a(0, 1, 1, 1)},
                                                        {a(1, 0, 1, 0), a(1, 0, 1, 1), a(1, 1, 1, 0), a(1, 1, 1, 1)}}};
    inv.M = det4(mm);
    inv.N = -inv.L - inv.M;

    // b_xy = det(d^2 A / dz_i dt_j), a biquadratic in (x, y); B_xy is its
    // 3x3 coefficient matrix in the bases {x0^2, x0 x1, x1^2}, {y0^2, y0 y1, y1^2}.
    std::array<std::array<LComplex, 3>, 3> B{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int ip = 0; ip < 2; ++ip)
                for (int jp = 0; jp < 2; ++jp)
                    B[static_cast<std::size_t>(i + ip)][static_cast<std::size_t>(j + jp)] +=
                        a(i, j, 0, 0) * a(ip, jp, 1, 1) - a(i, j, 0, 1) * a(ip, jp, 1, 0);
    inv.Dxy = -det3(B);
    return inv;
}

std::array<Quartic, 3> quartics(const Invariants4& inv) {
    const LComplex H = inv.H, L = inv.L, M = inv.M, N = inv.N, D = inv.Dxy;
    const Quartic q1{1.0L, -2.0L * H, H * H + 2.0L * L + 4.0L * M, 4.0L * D - 4.0L * H * (M + 0.5L * L), L * L};
    const Quartic q2{1.0L, -2.0L * H, H * H - 4.0L * L - 2.0L * M, -2.0L * M * H + 4.0L * D, M * M};
    const Quartic q3{1.0L, -2.0L * H, H * H + 2.0L * L - 2.0L * M, -(2.0L * L * H + 2.0L * M * H - 4.0L * D), N * N};
    return {q1, q2, q3};
}

QuarticInvariants quartic_invariants(const Invariants4& inv) {
    const LComplex H = inv.H, L = inv.L, M = inv.M, D = inv.Dxy;
    QuarticInvariants out;
    const LComplex H2 = H * H;
    const LComplex H3 = H2 * H;
    const LComplex H4 = H2 * H2;
    const LComplex H6 = H4 * H2;
    out.I2 = (4.0L / 3.0L) * L * L - (4.0L / 3.0L) * H2 * M + (4.0L / 3.0L) * L * M + (4.0L / 3.0L) * M * M +
             2.0L * H * D + (1.0L / 12.0L) * H4 - (2.0L / 3.0L) * H2 * L;
    out.I3 = (8.0L / 27.0L) * L * L * L - (1.0L / 216.0L) * H6 - (8.0L / 27.0L) * M * M * M - (1.0L / 6.0L) * D * H3 +
             (4.0L / 3.0L) * H * M * D - (5.0L / 9.0L) * H2 * M * L + (2.0L / 3.0L) * H * L * D -
             (2.0L / 9.0L) * H2 * L * L - (5.0L / 9.0L) * H2 * M * M - D * D + (4.0L / 9.0L) * L * L * M +
             (1.0L / 18.0L) * H4 * L + (1.0L / 9.0L) * H4 * M - (4.0L / 9.0L) * L * M * M;
    out.Det2222 = out.I2 * out.I2 * out.I2 - 27.0L * out.I3 * out.I3;
    return out;
}

forms::MultiForm quartic_to_form(const Quartic& q) {
    return to_binary_form({q.c0, q.c1, q.c2, q.c3, q.c4, 0.0L, 0.0L}, 4);
}

forms::MultiForm hessian(const Quartic& q) {
    // Hess = Q_xx Q_yy - Q_xy^2, evaluated in extended precision on the
    // quartic coefficients, then stored as a binary quartic form.
    const std::array<LComplex, 5> c = {q.c0, q.c1, q.c2, q.c3, q.c4};  // c[e] multiplies x^e y^(4-e)
    // Q = sum_e c[e] x^e y^{4-e}; Q_xx = sum c[e] e(e-1) x^{e-2} y^{4-e}, etc.
    std::array<LComplex, 7> h{};
    for (int e1 = 2; e1 <= 4; ++e1)
        for (int e2 = 0; e2 <= 2; ++e2) {
            const LComplex xx = c[static_cast<std::size_t>(e1)] * static_cast<long double>(e1 * (e1 - 1));
            const LComplex yy = c[static_cast<std::size_t>(e2)] * static_cast<long double>((4 - e2) * (3 - e2));
            h[static_cast<std::size_t>(e1 - 2 + e2)] += xx * yy;
        }
    for (int e1 = 1; e1 <= 3; ++e1)
        for (int e2 = 1; e2 <= 3; ++e2) {
            const LComplex xy1 = c[static_cast<std::size_t>(e1)] * static_cast<long double>(e1 * (4 - e1));
            const LComplex xy2 = c[static_cast<std::size_t>(e2)] * static_cast<long double>(e2 * (4 - e2));
            h[static_cast<std::size_t>(e1 - 1 + e2 - 1)] -= xy1 * xy2;
        }
    return to_binary_form(h, 4);
}

forms::MultiForm jacobian_t(const Quartic& q) {
    const std::array<LComplex, 5> c = {q.c0, q.c1, q.c2, q.c3, q.c4};
    // Hessian coefficients in extended precision (degree 4).
    std::array<LComplex, 7> h{};
    for (int e1 = 2; e1 <= 4; ++e1)
        for (int e2 = 0; e2 <= 2; ++e2)
            h[static_cast<std::size_t>(e1 - 2 + e2)] += c[static_cast<std::size_t>(e1)] * static_cast<long double>(e1 * (e1 - 1)) *
                                                        c[static_cast<std::size_t>(e2)] * static_cast<long double>((4 - e2) * (3 - e2));
    for (int e1 = 1; e1 <= 3; ++e1)
        for (int e2 = 1; e2 <= 3; ++e2)
            h[static_cast<std::size_t>(e1 - 1 + e2 - 1)] -= c[static_cast<std::size_t>(e1)] * static_cast<long double>(e1 * (4 - e1)) *
                                                            c[static_cast<std::size_t>(e2)] * static_cast<long double>(e2 * (4 - e2));
    // T = Q_x Hess_y - Q_y Hess_x (degree 6).
    std::array<LComplex, 7> t{};
    for (int e1 = 1; e1 <= 4; ++e1)
        for (int e2 = 0; e2 <= 3; ++e2)
            t[static_cast<std::size_t>(e1 - 1 + e2)] += c[static_cast<std::size_t>(e1)] * static_cast<long double>(e1) *
                                                        h[static_cast<std::size_t>(e2)] * static_cast<long double>(4 - e2);
    for (int e1 = 0; e1 <= 3; ++e1)
        for (int e2 = 1; e2 <= 4; ++e2)
            t[static_cast<std::size_t>(e1 + e2 - 1)] -= c[static_cast<std::size_t>(e1)] * static_cast<long double>(4 - e1) *
                                                        h[static_cast<std::size_t>(e2)] * static_cast<long double>(e2);
    return to_binary_form(t, 6);
}

double abs_hyperdeterminant(const ket::StateVec& s) {
    return static_cast<double>(std::abs(quartic_invariants(compute_invariants(s)).Det2222));
}

double zero_scale(const Invariants4& inv) {
    const long double m = std::norm(inv.H) + std::abs(inv.L) + std::abs(inv.M) +
                          std::pow(std::abs(inv.Dxy), 2.0L / 3.0L);
    return static_cast<double>(std::max(1.0L, m));
}

}  // namespace qent::inv4
