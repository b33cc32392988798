#pragma once

#include <array>
#include <complex>
#include <vector>

#include "qent/errors.hpp"
#include "qent/ketstate.hpp"

namespace qent::forms {

using Complex = std::complex<double>;
using MultiDeg = std::array<int, 4>;
using Orders = std::array<int, 4>;

// Multihomogeneous polynomial in the four binary variable pairs
// (x0,x1), (y0,y1), (z0,z1), (t0,t1). Coefficients are stored densely,
// indexed by the exponent e_w of the *first* variable of each pair
// (the second variable carries exponent deg_w - e_w).
class MultiForm {
  public:
    static constexpr int kMaxDeg = 6;  // per variable pair

    MultiForm() : deg_{0, 0, 0, 0}, coeffs_(1, Complex{0.0, 0.0}) {}
    explicit MultiForm(MultiDeg deg);

    const MultiDeg& multidegree() const { return deg_; }

    Complex& at(int ex, int ey, int ez, int et) { return coeffs_[index(ex, ey, ez, et)]; }
    const Complex& at(int ex, int ey, int ez, int et) const { return coeffs_[index(ex, ey, ez, et)]; }

    const std::vector<Complex>& coeffs() const { return coeffs_; }
    std::vector<Complex>& coeffs() { return coeffs_; }

    std::size_t index(int ex, int ey, int ez, int et) const;

    double max_abs_coeff() const;
    bool is_zero(double tol = 1e-13, double scale = 1.0) const;

    // Drops coefficients below the threshold (absolute).
    void prune(double threshold = kPruneThreshold);

    static constexpr double kPruneThreshold = 1e-13;

  private:
    MultiDeg deg_;
    std::vector<Complex> coeffs_;
};

// Ground form A = sum a_{ijkl} x_i y_j z_k t_l of a 4-qubit state.
MultiForm form_from_state(const ket::StateVec& s);

// d/dw_comp for pair in {0,1,2,3} and comp in {0,1}; multidegree drops by one
// in that pair. Differentiating a degree-0 pair yields the zero form.
MultiForm derivative(const MultiForm& f, int pair, int comp);

MultiForm multiply(const MultiForm& f, const MultiForm& g);

// Omega-process transvectant, raw convention (no binomial prefactor):
//   (f,g)^{k} = sum_i (-1)^{|i|} prod_w C(k_w, i_w)
//               * d^{k}f / dw0^{k_w-i_w} dw1^{i_w}
//               * d^{k}g / dw0^{i_w} dw1^{k_w-i_w}
// Orders must satisfy k_w <= min(deg_w f, deg_w g).
MultiForm transvect(const MultiForm& f, const MultiForm& g, const Orders& orders);

// True iff the maximum coefficient magnitude is <= tol * scale.
bool partial_eval_is_zero(const MultiForm& f, double tol, double scale = 1.0);

}  // namespace qent::forms
