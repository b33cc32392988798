#include "qent/classifier.hpp"

#include <array>
#include <cmath>
#include <map>
#include <sstream>

namespace qent::classify {

namespace {

using Complex = std::complex<double>;

constexpr std::array<std::string_view, 48> kLabels = {
    "G_abcd", "G_abc0", "G_00cc", "G_a000", "G_ab00", "G_aa-2a0", "G_abb0", "G_aaa0", "G_abcc", "G_abbb",
    "L_abc2", "L_00c2", "L_aa02", "L_a002", "L_ab02", "L_a2b2",   "L_02b2", "L_0bb-2", "L_a0c2", "L_ab3",
    "L_0b3",  "L_a03",  "L_abb2", "L_a2a2", "L_0bb2", "L_a4",     "L_a2_03p1", "L_05p3", "L_07p1", "L_03p1_03p1",
    "Gr_0",   "Gr_1",   "Gr_2",   "Gr_3",   "Gr_4",   "Gr_5",     "Gr_6",   "Gr_7",   "Gr_8",
    "O_1",    "O_2",    "O_3",    "O_4",    "O_5",    "O_6",      "Separable", "EPR", "Unclassified"};

}  // namespace

std::string_view label(Family f) { return kLabels[static_cast<std::size_t>(f)]; }

Family family_from_label(std::string_view s) {
    for (std::size_t i = 0; i < kLabels.size(); ++i)
        if (kLabels[i] == s) return static_cast<Family>(i);
    throw Error("unknown family label '" + std::string(s) + "'");
}

bool is_nullcone_stratum(Family f) { return f >= Family::Gr_0 && f <= Family::Gr_8; }

std::string Trace::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < steps.size(); ++i) {
        if (i) os << "; ";
        os << steps[i].first << "=" << (steps[i].second ? "1" : "0");
    }
    return os.str();
}

bool is_in_nullcone(const inv4::Invariants4& inv, const Options& opt) {
    const double tol = opt.tol_invariant * inv4::zero_scale(inv);
    return std::abs(inv.H) <= tol && std::abs(inv.L) <= tol && std::abs(inv.M) <= tol && std::abs(inv.Dxy) <= tol;
}

bool is_in_nullcone(const ket::StateVec& s, const Options& opt) {
    return is_in_nullcone(inv4::compute_invariants(s), opt);
}

namespace {

Classification nilpotent_type_impl(const ket::StateVec& s, const inv4::Invariants4& inv, const Options& opt) {
    if (!is_in_nullcone(inv, opt)) throw NotNilpotent(std::complex<double>(static_cast<double>(inv.H.real()), static_cast<double>(inv.H.imag())),
                           std::complex<double>(static_cast<double>(inv.L.real()), static_cast<double>(inv.L.imag())),
                           std::complex<double>(static_cast<double>(inv.M.real()), static_cast<double>(inv.M.imag())),
                           std::complex<double>(static_cast<double>(inv.Dxy.real()), static_cast<double>(inv.Dxy.imag())));
    const cov4::CovariantVector vec = cov4::binarized_vector(s, opt.reg(), opt.tol_covariant);
    const std::array<int, 8> bits = vec.bits();

    Classification out;
    for (const auto& [name, flag] : vec.entries) out.trace.note(name, flag);

    static const std::array<std::pair<std::array<int, 8>, Family>, 9> patterns = {{
        {{0, 0, 0, 0, 0, 0, 0, 0}, Family::Gr_0},
        {{1, 0, 0, 0, 0, 0, 0, 0}, Family::Gr_1},
        {{1, 1, 0, 0, 0, 0, 0, 0}, Family::Gr_2},
        {{1, 1, 1, 0, 0, 0, 0, 0}, Family::Gr_3},
        {{1, 1, 1, 0, 1, 0, 0, 0}, Family::Gr_4},
        {{1, 1, 1, 1, 0, 0, 0, 0}, Family::Gr_5},
        {{1, 1, 1, 1, 1, 1, 0, 0}, Family::Gr_6},
        {{1, 1, 1, 1, 1, 1, 1, 0}, Family::Gr_7},
        {{1, 1, 1, 1, 1, 1, 1, 1}, Family::Gr_8},
    }};
    for (const auto& [pat, fam] : patterns) {
        if (bits == pat) {
            out.family = fam;
            return out;
        }
    }
    out.family = Family::Unclassified;
    return out;
}

}  // namespace

Classification nilpotent_type(const ket::StateVec& s, const Options& opt) {
    if (s.n != 4) throw WrongArity("nullcone classification requires n=4");
    return nilpotent_type_impl(s, inv4::compute_invariants(s), opt);
}

Classification verstraete_type(const ket::StateVec& s, const Options& opt) {
    if (s.n != 4) throw WrongArity("family classification requires n=4");
    const inv4::Invariants4 inv = inv4::compute_invariants(s);
    if (is_in_nullcone(inv, opt)) return nilpotent_type_impl(s, inv, opt);

    const inv4::QuarticInvariants qi = inv4::quartic_invariants(inv);
    const auto qs = inv4::quartics(inv);

    const double iscale = inv4::zero_scale(inv);
    const double itol = opt.tol_invariant * iscale;
    auto inv_nonzero = [&](inv4::LComplex v) { return std::abs(v) > itol; };
    // Equality of invariant expressions, symmetric relative tolerance.
    auto eq = [&](inv4::LComplex a, inv4::LComplex b) {
        return std::abs(a - b) <= opt.tol_invariant * (1.0L + std::abs(a) + std::abs(b));
    };

    const bool Lz = !inv_nonzero(inv.L);
    const bool Mz = !inv_nonzero(inv.M);
    const bool Nz = !inv_nonzero(inv.N);
    const bool Dz = !inv_nonzero(inv.Dxy);
    const bool Hz = !inv_nonzero(inv.H);
    const bool hyper_zero = std::abs(qi.Det2222) <= opt.tol_det * iscale * iscale * iscale * iscale * iscale * iscale;
    const bool i2_zero = std::abs(qi.I2) <= opt.tol_invariant * iscale * iscale;
    const bool i3_zero = std::abs(qi.I3) <= opt.tol_invariant * iscale * iscale * iscale;

    auto form_zero = [&](const forms::MultiForm& f) { return forms::partial_eval_is_zero(f, opt.tol_covariant); };
    const bool hess1_zero = form_zero(inv4::hessian(qs[0]));
    const bool hess2_zero = form_zero(inv4::hessian(qs[1]));
    const bool t1_zero = form_zero(inv4::jacobian_t(qs[0]));
    const bool t2_zero = form_zero(inv4::jacobian_t(qs[1]));
    const bool t3_zero = form_zero(inv4::jacobian_t(qs[2]));

    const cov4::Alg2Flags cf = cov4::algorithm2_covariants(s, opt.reg(), opt.tol_covariant);

    Classification out;
    Trace& tr = out.trace;
    tr.note("nullcone", false);
    tr.note("L=0", Lz);
    tr.note("M=0", Mz);

    auto finish = [&](Family f) {
        out.family = f;
        return out;
    };
    auto unmatched = [&]() { return finish(Family::Unclassified); };

    if (Lz && Mz) {
        tr.note("Dxy!=0", !Dz);
        tr.note("Hyper!=0", !hyper_zero);
        if (!Dz && !hyper_zero) return finish(Family::G_abc0);
        if (!Dz && hyper_zero) {
            tr.note("Lsum", cf.Lsum);
            return finish(cf.Lsum ? Family::L_0bh2 : Family::G_aam2a0);
        }
        if (Dz && !Hz) {
            tr.note("Gbar", cf.Gbar);
            tr.note("G", cf.G);
            tr.note("Hsum", cf.Hsum);
            tr.note("Lsum", cf.Lsum);
            const std::array<int, 4> e = {cf.Gbar ? 1 : 0, cf.G ? 1 : 0, cf.Hsum ? 1 : 0, cf.Lsum ? 1 : 0};
            if (e == std::array<int, 4>{0, 0, 0, 0}) return finish(Family::G_00cc);
            if (e == std::array<int, 4>{0, 1, 1, 0}) return finish(Family::L_aa02);
            if (e == std::array<int, 4>{0, 0, 1, 0}) return finish(Family::L_00c2);
            if (e == std::array<int, 4>{1, 1, 1, 0}) return finish(Family::L_02b2);
            if (e == std::array<int, 4>{1, 1, 1, 1}) return finish(Family::L_a2_03p1);
            return unmatched();
        }
        return unmatched();
    }

    // Helper for the three single-zero-root branches, which share their
    // inner covariant patterns.
    auto k3_branch = [&]() {
        tr.note("K3", cf.K3);
        tr.note("Lsum", cf.Lsum);
        if (!cf.K3 && !cf.Lsum) return finish(Family::G_ab00);
        if (cf.K3 && !cf.Lsum) return finish(Family::L_ab02);
        if (cf.K3 && cf.Lsum) return finish(Family::L_a2b2);
        return unmatched();
    };
    auto double_root_branch = [&]() {
        tr.note("Lsum", cf.Lsum);
        return finish(cf.Lsum ? Family::L_a0c2 : Family::G_abb0);
    };
    auto triple_zero_branch = [&]() {
        tr.note("C", cf.C);
        tr.note("D", cf.D);
        tr.note("K5", cf.K5);
        tr.note("Lsum", cf.Lsum);
        const std::array<int, 4> e = {cf.C ? 1 : 0, cf.D ? 1 : 0, cf.K5 ? 1 : 0, cf.Lsum ? 1 : 0};
        if (e == std::array<int, 4>{0, 0, 0, 0}) return finish(Family::G_a000);
        if (e == std::array<int, 4>{1, 0, 0, 0}) return finish(Family::L_a002);
        if (e == std::array<int, 4>{1, 1, 1, 0}) return finish(Family::L_0b3);
        if (e == std::array<int, 4>{1, 1, 0, 0}) return finish(Family::L_a2a2);
        if (e == std::array<int, 4>{1, 1, 1, 1}) return finish(Family::L_a4);
        return unmatched();
    };
    auto triple_nonzero_branch = [&]() {
        tr.note("D", cf.D);
        tr.note("Lsum", cf.Lsum);
        if (!cf.D && !cf.Lsum) return finish(Family::G_aaa0);
        if (cf.D && !cf.Lsum) return finish(Family::L_0bb2);
        if (cf.D && cf.Lsum) return finish(Family::L_a03);
        return unmatched();
    };

    if (Lz && !Mz) {
        // Q1 has a zero root.
        tr.note("Hyper!=0", !hyper_zero);
        if (!hyper_zero) return finish(Family::G_abc0);
        const bool dxy_eq_hm = eq(inv.Dxy, inv.H * inv.M);
        const bool h2p4m_zero = eq(inv.H * inv.H + 4.0L * inv.M, 0.0L);
        tr.note("Dxy=H*M", dxy_eq_hm);
        tr.note("H^2+4M=0", h2p4m_zero);
        if (dxy_eq_hm && !h2p4m_zero) return k3_branch();
        tr.note("T1!=0", !t1_zero);
        tr.note("T2!=0", !t2_zero);
        if (!dxy_eq_hm && !t1_zero && !t2_zero) return double_root_branch();
        tr.note("Hess2=0", hess2_zero);
        if (dxy_eq_hm && h2p4m_zero && hess2_zero) return triple_zero_branch();
        tr.note("I2=0", i2_zero);
        if (!dxy_eq_hm && i2_zero && hyper_zero) return triple_nonzero_branch();
        return unmatched();
    }

    if (Mz && !Lz) {
        // Q2 has a zero root.
        tr.note("Hyper!=0", !hyper_zero);
        if (!hyper_zero) return finish(Family::G_abc0);
        const bool h2_eq_4l = eq(inv.H * inv.H, 4.0L * inv.L);
        tr.note("Dxy=0", Dz);
        tr.note("H^2=4L", h2_eq_4l);
        if (Dz && !h2_eq_4l) return k3_branch();
        tr.note("T1!=0", !t1_zero);
        tr.note("T2!=0", !t2_zero);
        if (!Dz && !t1_zero && !t2_zero) return double_root_branch();
        if (Dz && h2_eq_4l) return triple_zero_branch();
        tr.note("I2=0", i2_zero);
        if (!Dz && i2_zero && hyper_zero) return triple_nonzero_branch();
        return unmatched();
    }

    if (Nz && !Lz && !Mz) {
        // Q3 has a zero root.
        tr.note("N=0", true);
        tr.note("Hyper!=0", !hyper_zero);
        if (!hyper_zero) return finish(Family::G_abc0);
        const bool h2_eq_4m = eq(inv.H * inv.H, 4.0L * inv.M);
        tr.note("Dxy=0", Dz);
        tr.note("H^2=4M", h2_eq_4m);
        if (Dz && !h2_eq_4m) return k3_branch();
        tr.note("T1!=0", !t1_zero);
        tr.note("T2!=0", !t2_zero);
        if (!Dz && !t1_zero && !t2_zero) return double_root_branch();
        if (Dz && h2_eq_4m) return triple_zero_branch();
        tr.note("I2=0", i2_zero);
        if (!Dz && i2_zero && hyper_zero) return triple_nonzero_branch();
        return unmatched();
    }

    // All the quartics have only nonzero roots.
    tr.note("Hyper!=0", !hyper_zero);
    if (!hyper_zero) return finish(Family::G_abcd);
    tr.note("T1!=0", !t1_zero);
    tr.note("T2!=0", !t2_zero);
    tr.note("T3!=0", !t3_zero);
    tr.note("I2!=0", !i2_zero);
    tr.note("I3!=0", !i3_zero);
    if (!t1_zero && !t2_zero && !t3_zero && !i2_zero && !i3_zero) {
        tr.note("Lsum", cf.Lsum);
        return finish(cf.Lsum ? Family::L_abc2 : Family::G_abcc);
    }
    tr.note("Hess1!=0", !hess1_zero);
    // A quartic with a triple root annihilates both I2 and I3; the nonzero
    // Hessian excludes a quadruple root.
    if (i2_zero && i3_zero && !hess1_zero) {
        tr.note("K5", cf.K5);
        tr.note("Lsum", cf.Lsum);
        if (!cf.K5 && !cf.Lsum) return finish(Family::G_abbb);
        if (cf.K5 && !cf.Lsum) return finish(Family::L_abb2);
        if (cf.K5 && cf.Lsum) return finish(Family::L_ab3);
        return unmatched();
    }
    return unmatched();
}

std::complex<double> cayley_det222(const ket::StateVec& s) {
    if (s.n != 3) throw WrongArity("2x2x2 hyperdeterminant requires n=3");
    using LC = inv4::LComplex;
    std::array<LC, 8> v;
    for (int i = 0; i < 8; ++i) v[static_cast<std::size_t>(i)] = LC{s.amps[static_cast<std::size_t>(i)].real(), s.amps[static_cast<std::size_t>(i)].imag()};
    auto a = [&](int i, int j, int k) { return v[static_cast<std::size_t>((i << 2) | (j << 1) | k)]; };
    const LC sq = a(0, 0, 0) * a(0, 0, 0) * a(1, 1, 1) * a(1, 1, 1) + a(0, 0, 1) * a(0, 0, 1) * a(1, 1, 0) * a(1, 1, 0) +
                  a(0, 1, 0) * a(0, 1, 0) * a(1, 0, 1) * a(1, 0, 1) + a(1, 0, 0) * a(1, 0, 0) * a(0, 1, 1) * a(0, 1, 1);
    const LC pair = a(0, 0, 0) * a(0, 0, 1) * a(1, 1, 0) * a(1, 1, 1) + a(0, 0, 0) * a(0, 1, 0) * a(1, 0, 1) * a(1, 1, 1) +
                    a(0, 0, 0) * a(1, 0, 0) * a(0, 1, 1) * a(1, 1, 1) + a(0, 0, 1) * a(0, 1, 0) * a(1, 0, 1) * a(1, 1, 0) +
                    a(0, 0, 1) * a(1, 0, 0) * a(0, 1, 1) * a(1, 1, 0) + a(0, 1, 0) * a(1, 0, 0) * a(0, 1, 1) * a(1, 0, 1);
    const LC quad = a(0, 0, 0) * a(0, 1, 1) * a(1, 0, 1) * a(1, 1, 0) + a(0, 0, 1) * a(0, 1, 0) * a(1, 0, 0) * a(1, 1, 1);
    const LC det = sq - 2.0L * pair + 4.0L * quad;
    return {static_cast<double>(det.real()), static_cast<double>(det.imag())};
}

double flattening_sigma2(const ket::StateVec& s, int q) {
    // Extended precision: sigma2 = sqrt(lambda_min) amplifies Gram noise by
    // a square root, which would swamp the 1e-9 rank threshold in double.
    using LC = inv4::LComplex;
    const std::uint64_t mask = ket::qubit_mask(s.n, q);
    long double g00 = 0.0L, g11 = 0.0L;
    LC g01{0.0L, 0.0L};
    for (std::uint64_t i = 0; i < s.dim(); ++i) {
        if (i & mask) continue;
        const LC r0{s.amps[i].real(), s.amps[i].imag()};
        const LC r1{s.amps[i | mask].real(), s.amps[i | mask].imag()};
        g00 += std::norm(r0);
        g11 += std::norm(r1);
        g01 += r0 * std::conj(r1);
    }
    const long double tr = g00 + g11;
    const long double disc = std::sqrt(std::max(0.0L, (g00 - g11) * (g00 - g11) + 4.0L * std::norm(g01)));
    const long double lmin = std::max(0.0L, (tr - disc) / 2.0L);
    return static_cast<double>(std::sqrt(lmin));
}

bool is_separable(const ket::StateVec& s, const Options& opt) {
    for (int q = 1; q <= s.n; ++q)
        if (flattening_sigma2(s, q) > opt.tol_rank) return false;
    return true;
}

Family classify3(const ket::StateVec& s, const Options& opt) {
    if (s.n != 3) throw WrongArity("3-qubit classification requires n=3");
    if (std::abs(cayley_det222(s)) > opt.tol_det) return Family::O_6;
    const bool r1 = flattening_sigma2(s, 1) <= opt.tol_rank;
    const bool r2 = flattening_sigma2(s, 2) <= opt.tol_rank;
    const bool r3 = flattening_sigma2(s, 3) <= opt.tol_rank;
    const int count = int(r1) + int(r2) + int(r3);
    if (count >= 2) return Family::O_1;  // two rank-1 cuts imply full separability
    if (count == 1) {
        if (r1) return Family::O_3;
        if (r2) return Family::O_2;
        return Family::O_4;
    }
    return Family::O_5;
}

Family classify2(const ket::StateVec& s, const Options&) {
    if (s.n != 2) throw WrongArity("2-qubit classification requires n=2");
    const Complex det = s.amps[0] * s.amps[3] - s.amps[1] * s.amps[2];
    return std::abs(det) > 1e-10 ? Family::EPR : Family::Separable;
}

}  // namespace qent::classify
