#include "qent/forms.hpp"

#include <algorithm>
#include <cmath>

namespace qent::forms {

namespace {

int binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    int r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

void check_deg(const MultiDeg& d) {
    for (int w = 0; w < 4; ++w) {
        if (d[w] < 0 || d[w] > MultiForm::kMaxDeg)
            throw DegreeError("multidegree component " + std::to_string(d[w]) + " outside [0," + std::to_string(MultiForm::kMaxDeg) + "]");
    }
}

}  // namespace

MultiForm::MultiForm(MultiDeg deg) : deg_(deg) {
    check_deg(deg_);
    std::size_t sz = 1;
    for (int w = 0; w < 4; ++w) sz *= static_cast<std::size_t>(deg_[w] + 1);
    coeffs_.assign(sz, Complex{0.0, 0.0});
}

std::size_t MultiForm::index(int ex, int ey, int ez, int et) const {
    return static_cast<std::size_t>(((ex * (deg_[1] + 1) + ey) * (deg_[2] + 1) + ez) * (deg_[3] + 1) + et);
}

double MultiForm::max_abs_coeff() const {
    double m = 0.0;
    for (const Complex& c : coeffs_) m = std::max(m, std::abs(c));
    return m;
}

bool MultiForm::is_zero(double tol, double scale) const { return max_abs_coeff() <= tol * scale; }

void MultiForm::prune(double threshold) {
    for (Complex& c : coeffs_) {
        if (std::abs(c) < threshold) c = Complex{0.0, 0.0};
    }
}

MultiForm form_from_state(const ket::StateVec& s) {
    if (s.n != 4) throw WrongArity("quadrilinear form requires a 4-qubit state, got n=" + std::to_string(s.n));
    MultiForm a({1, 1, 1, 1});
    for (std::uint64_t idx = 0; idx < 16; ++idx) {
        const int i = (idx >> 3) & 1, j = (idx >> 2) & 1, k = (idx >> 1) & 1, l = idx & 1;
        // x_i carries exponent 1 of the first pair variable when i == 0
        a.at(1 - i, 1 - j, 1 - k, 1 - l) = s.amps[idx];
    }
    return a;
}

MultiForm derivative(const MultiForm& f, int pair, int comp) {
    const MultiDeg& d = f.multidegree();
    if (d[pair] == 0) return MultiForm();  // derivative of a constant-in-pair form
    MultiDeg nd = d;
    nd[pair] -= 1;
    MultiForm out(nd);
    for (int ex = 0; ex <= d[0]; ++ex)
        for (int ey = 0; ey <= d[1]; ++ey)
            for (int ez = 0; ez <= d[2]; ++ez)
                for (int et = 0; et <= d[3]; ++et) {
                    const Complex c = f.at(ex, ey, ez, et);
                    if (c == Complex{0.0, 0.0}) continue;
                    int e[4] = {ex, ey, ez, et};
                    if (comp == 0) {
                        if (e[pair] == 0) continue;  // no w0 factor
                        const double factor = e[pair];
                        e[pair] -= 1;
                        out.at(e[0], e[1], e[2], e[3]) += factor * c;
                    } else {
                        const int e1 = d[pair] - e[pair];
                        if (e1 == 0) continue;  // no w1 factor
                        out.at(e[0], e[1], e[2], e[3]) += static_cast<double>(e1) * c;
                    }
                }
    return out;
}

MultiForm multiply(const MultiForm& f, const MultiForm& g) {
    const MultiDeg& df = f.multidegree();
    const MultiDeg& dg = g.multidegree();
    MultiDeg nd;
    for (int w = 0; w < 4; ++w) nd[w] = df[w] + dg[w];
    check_deg(nd);
    MultiForm out(nd);
    for (int ax = 0; ax <= df[0]; ++ax)
        for (int ay = 0; ay <= df[1]; ++ay)
            for (int az = 0; az <= df[2]; ++az)
                for (int at = 0; at <= df[3]; ++at) {
                    const Complex cf = f.at(ax, ay, az, at);
                    if (cf == Complex{0.0, 0.0}) continue;
                    for (int bx = 0; bx <= dg[0]; ++bx)
                        for (int by = 0; by <= dg[1]; ++by)
                            for (int bz = 0; bz <= dg[2]; ++bz)
                                for (int bt = 0; bt <= dg[3]; ++bt) {
                                    const Complex cg = g.at(bx, by, bz, bt);
                                    if (cg == Complex{0.0, 0.0}) continue;
                                    out.at(ax + bx, ay + by, az + bz, at + bt) += cf * cg;
                                }
                }
    out.prune();
    return out;
}

MultiForm transvect(const MultiForm& f, const MultiForm& g, const Orders& orders) {
    const MultiDeg& df = f.multidegree();
    const MultiDeg& dg = g.multidegree();
    MultiDeg nd;
    for (int w = 0; w < 4; ++w) {
        if (orders[w] < 0 || orders[w] > std::min(df[w], dg[w]))
            throw DegreeError("transvectant order " + std::to_string(orders[w]) + " exceeds degree in pair " + std::to_string(w));
        nd[w] = df[w] + dg[w] - 2 * orders[w];
    }
    check_deg(nd);

    // Mixed partial derivatives of f and g, indexed by the number of
    // w1-derivatives i_w taken in each pair (w0-derivatives make up the
    // rest of the order).
    MultiForm acc(nd);
    std::array<int, 4> i{};
    for (i[0] = 0; i[0] <= orders[0]; ++i[0])
        for (i[1] = 0; i[1] <= orders[1]; ++i[1])
            for (i[2] = 0; i[2] <= orders[2]; ++i[2])
                for (i[3] = 0; i[3] <= orders[3]; ++i[3]) {
                    MultiForm dfm = f;
                    MultiForm dgm = g;
                    long coef = 1;
                    int parity = 0;
                    for (int w = 0; w < 4; ++w) {
                        coef *= binom(orders[w], i[w]);
                        parity += i[w];
                        for (int r = 0; r < orders[w] - i[w]; ++r) dfm = derivative(dfm, w, 0);
                        for (int r = 0; r < i[w]; ++r) dfm = derivative(dfm, w, 1);
                        for (int r = 0; r < i[w]; ++r) dgm = derivative(dgm, w, 0);
                        for (int r = 0; r < orders[w] - i[w]; ++r) dgm = derivative(dgm, w, 1);
                    }
                    const double sgn = (parity % 2 == 0) ? 1.0 : -1.0;
                    MultiForm term = multiply(dfm, dgm);
                    const double factor = sgn * static_cast<double>(coef);
                    const std::vector<Complex>& tc = term.coeffs();
                    std::vector<Complex>& ac = acc.coeffs();
                    for (std::size_t p = 0; p < ac.size(); ++p) ac[p] += factor * tc[p];
                }
    acc.prune();
    return acc;
}

bool partial_eval_is_zero(const MultiForm& f, double tol, double scale) { return f.is_zero(tol, scale); }

}  // namespace qent::forms
