#include "qent/shor.hpp"

#include <cmath>

#include "qent/ketparse.hpp"

namespace qent::shor {

namespace {

using ket::Complex;
using ket::StateVec;

StateVec product_state(const std::vector<std::array<Complex, 2>>& factors) {
    const int n = static_cast<int>(factors.size());
    std::vector<Complex> amps(std::size_t{1} << n, Complex{1.0, 0.0});
    for (std::uint64_t idx = 0; idx < amps.size(); ++idx) {
        Complex v{1.0, 0.0};
        for (int q = 1; q <= n; ++q) v *= factors[q - 1][(idx >> (n - q)) & 1];
        amps[idx] = v;
    }
    return StateVec{n, std::move(amps)};
}

double max_deviation(const StateVec& a, const StateVec& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.amps.size(); ++i) m = std::max(m, std::abs(a.amps[i] - b.amps[i]));
    return m;
}

const std::array<Complex, 2> kPlus = {Complex{1.0 / std::sqrt(2.0), 0.0}, Complex{1.0 / std::sqrt(2.0), 0.0}};
const std::array<Complex, 2> kZero = {Complex{1.0, 0.0}, Complex{0.0, 0.0}};
const std::array<Complex, 2> kOne = {Complex{0.0, 0.0}, Complex{1.0, 0.0}};

}  // namespace

PeriodicSpec make_spec(int n, int l, int r) {
    if (n < 2 || n > ket::kMaxQubits) throw InvalidSpec("qubit count out of range");
    const int N = 1 << n;
    if (l < 0 || l >= N) throw InvalidSpec("shift l out of range [0," + std::to_string(N - 1) + "]");
    if (r < 1 || r >= N) throw InvalidSpec("period r out of range [1," + std::to_string(N - 1) + "]");
    const int A = (N - l + r - 1) / r;
    return PeriodicSpec{n, l, r, A};
}

StateVec periodic_state(const PeriodicSpec& spec) {
    const int N = 1 << spec.n;
    std::vector<Complex> amps(static_cast<std::size_t>(N), Complex{0.0, 0.0});
    const double a = 1.0 / std::sqrt(static_cast<double>(spec.A));
    for (int i = 0; i < spec.A; ++i) amps[static_cast<std::size_t>(spec.l + i * spec.r)] = Complex{a, 0.0};
    return StateVec{spec.n, std::move(amps)};
}

StateVec qft(const StateVec& s) {
    const std::size_t N = s.dim();
    const double inv_sqrt = 1.0 / std::sqrt(static_cast<double>(N));
    std::vector<Complex> out(N, Complex{0.0, 0.0});
    for (std::size_t y = 0; y < N; ++y) {
        Complex acc{0.0, 0.0};
        for (std::size_t x = 0; x < N; ++x) {
            const double angle = 2.0 * M_PI * static_cast<double>((x * y) % N) / static_cast<double>(N);
            acc += s.amps[x] * std::polar(1.0, angle);
        }
        out[y] = acc * inv_sqrt;
    }
    return StateVec{s.n, std::move(out)};
}

StateVec qft_inverse(const StateVec& s) {
    const std::size_t N = s.dim();
    const double inv_sqrt = 1.0 / std::sqrt(static_cast<double>(N));
    std::vector<Complex> out(N, Complex{0.0, 0.0});
    for (std::size_t y = 0; y < N; ++y) {
        Complex acc{0.0, 0.0};
        for (std::size_t x = 0; x < N; ++x) {
            const double angle = -2.0 * M_PI * static_cast<double>((x * y) % N) / static_cast<double>(N);
            acc += s.amps[x] * std::polar(1.0, angle);
        }
        out[y] = acc * inv_sqrt;
    }
    return StateVec{s.n, std::move(out)};
}

std::vector<StateVec> qft_gate_sequence_4(const StateVec& s) {
    if (s.n != 4) throw WrongArity("the gate sequence is the 4-qubit circuit");
    std::vector<StateVec> seq;
    seq.reserve(12);
    seq.push_back(s);
    StateVec cur = ket::apply_hadamard(s, 1);
    seq.push_back(cur);
    cur = ket::apply_controlled_rk(cur, 2, 1, 2);
    seq.push_back(cur);
    cur = ket::apply_controlled_rk(cur, 3, 1, 3);
    seq.push_back(cur);
    cur = ket::apply_controlled_rk(cur, 4, 1, 4);
    seq.push_back(cur);
    cur = ket::apply_hadamard(cur, 2);
    seq.push_back(cur);
    cur = ket::apply_controlled_rk(cur, 3, 2, 2);
    seq.push_back(cur);
    cur = ket::apply_controlled_rk(cur, 4, 2, 3);
    seq.push_back(cur);
    cur = ket::apply_hadamard(cur, 3);
    seq.push_back(cur);
    cur = ket::apply_controlled_rk(cur, 4, 3, 2);
    seq.push_back(cur);
    cur = ket::apply_hadamard(cur, 4);
    seq.push_back(cur);
    cur = ket::apply_swap(ket::apply_swap(cur, 1, 4), 2, 3);
    seq.push_back(cur);
    return seq;
}

const std::array<std::string, 12>& qft_step_names() {
    static const std::array<std::string, 12> names = {"input",    "H(1)",     "cR2(2,1)", "cR3(3,1)",
                                                      "cR4(4,1)", "H(2)",     "cR2(3,2)", "cR3(4,2)",
                                                      "H(3)",     "cR2(4,3)", "H(4)",     "SWAP"};
    return names;
}

std::string_view trace_case_name(TraceCase c) {
    switch (c) {
        case TraceCase::AlwaysNonzero: return "AlwaysNonzero";
        case TraceCase::BecomesNonzero: return "BecomesNonzero";
        case TraceCase::AlwaysZero: return "AlwaysZero";
        case TraceCase::Irregular: return "Irregular";
    }
    return "Irregular";
}

QftTrace qft_trace(const PeriodicSpec& spec, const classify::Options& opt) {
    if (spec.n != 4) throw InvalidSpec("gate traces are defined for n=4");
    QftTrace trace;
    trace.spec = spec;
    const std::vector<StateVec> seq = qft_gate_sequence_4(periodic_state(spec));
    for (std::size_t i = 0; i < 12; ++i) trace.values[i] = inv4::abs_hyperdeterminant(seq[i]);

    const double tol = opt.tol_det;
    bool all_nonzero = true, all_zero = true;
    for (double v : trace.values) {
        all_nonzero = all_nonzero && v > tol;
        all_zero = all_zero && v <= tol;
    }
    if (all_nonzero) {
        trace.kase = TraceCase::AlwaysNonzero;
    } else if (all_zero) {
        trace.kase = TraceCase::AlwaysZero;
    } else if (trace.values[0] <= tol) {
        int first = -1;
        for (int i = 1; i < 12; ++i) {
            if (trace.values[static_cast<std::size_t>(i)] > tol) {
                first = i;
                break;
            }
        }
        bool tail_nonzero = true;
        for (int i = first; i < 12; ++i) tail_nonzero = tail_nonzero && trace.values[static_cast<std::size_t>(i)] > tol;
        if (first > 0 && tail_nonzero) {
            trace.kase = TraceCase::BecomesNonzero;
            trace.step = first;
        }
    }
    return trace;
}

std::vector<std::vector<classify::Family>> periodic_table(int n, bool after_qft, const classify::Options& opt,
                                                          grover::Exec exec) {
    if (n != 3 && n != 4) throw InvalidSpec("family grids exist for n=3 and n=4 only");
    const int N = 1 << n;
    std::vector<std::vector<classify::Family>> grid(static_cast<std::size_t>(N - 1),
                                                    std::vector<classify::Family>(static_cast<std::size_t>(N)));
    auto cell = [&](int r, int l) {
        StateVec s = periodic_state(make_spec(n, l, r));
        if (after_qft) s = qft(s);
        return n == 4 ? classify::verstraete_type(s, opt).family : classify::classify3(s, opt);
    };
    if (exec == grover::Exec::Serial) {
        for (int r = 1; r < N; ++r)
            for (int l = 0; l < N; ++l) grid[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(l)] = cell(r, l);
    } else {
#pragma omp parallel for schedule(dynamic) collapse(2)
        for (int r = 1; r < N; ++r)
            for (int l = 0; l < N; ++l) grid[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(l)] = cell(r, l);
    }
    return grid;
}

namespace {

void expect(PropositionCheck& c, bool ok, const std::string& what) {
    ++c.checked;
    if (!ok) {
        ++c.failed;
        if (c.failures.size() < 8) c.failures.push_back(what);
    }
}

}  // namespace

PropositionReport check_propositions(int n_max) {
    if (n_max < 3 || n_max > 10) throw InvalidSpec("n_max must be in [3,10]");
    PropositionReport report;
    for (int n = 3; n <= n_max; ++n) {
        const int N = 1 << n;
        const std::string suffix = " (n=" + std::to_string(n) + ")";

        // P1: l = 0, r = 2^s  =>  |+>^(n-s) (x) |0>^s.
        PropositionCheck p1;
        p1.name = "P1: l=0, r=2^s gives |+>^(n-s) |0>^s" + suffix;
        for (int s = 0; s < n; ++s) {
            const int r = 1 << s;
            const StateVec psi = periodic_state(make_spec(n, 0, r));
            std::vector<std::array<Complex, 2>> factors(static_cast<std::size_t>(n - s), kPlus);
            factors.insert(factors.end(), static_cast<std::size_t>(s), kZero);
            expect(p1, max_deviation(psi, product_state(factors)) <= 1e-12, "r=" + std::to_string(r));
        }

        // P2: r = N/2  =>  separable for every shift.
        PropositionCheck p2;
        p2.name = "P2: r=N/2 separable for all l" + suffix;
        for (int l = 0; l < N; ++l) {
            const StateVec psi = periodic_state(make_spec(n, l, N / 2));
            StateVec want = psi;
            if (l < N / 2) {
                std::vector<std::array<Complex, 2>> factors{kPlus};
                for (int q = 2; q <= n; ++q)
                    factors.push_back(((l >> (n - q)) & 1) ? kOne : kZero);
                want = product_state(factors);
            } else {
                want = ket::basis_state(n, static_cast<std::uint64_t>(l));
            }
            expect(p2, max_deviation(psi, want) <= 1e-12 && classify::is_separable(psi), "l=" + std::to_string(l));
        }

        // P3: l + r >= N  =>  a single basis state.
        PropositionCheck p3;
        p3.name = "P3: l+r>=N gives a basis state" + suffix;
        for (int r = 1; r < N; ++r)
            for (int l = N - r; l < N; ++l) {
                const PeriodicSpec spec = make_spec(n, l, r);
                const StateVec psi = periodic_state(spec);
                expect(p3,
                       spec.A == 1 && max_deviation(psi, ket::basis_state(n, static_cast<std::uint64_t>(l))) == 0.0 &&
                           classify::is_separable(psi),
                       "l=" + std::to_string(l) + ",r=" + std::to_string(r));
            }

        // P4: r = 2^s, shifts in [0, r-1] and [N/2, N/2+r-1] give the stated
        // product forms.
        PropositionCheck p4;
        p4.name = "P4: power-of-two periods give product states" + suffix;
        for (int s = 0; s < n; ++s) {
            const int r = 1 << s;
            for (int l = 0; l < r; ++l) {
                const StateVec psi = periodic_state(make_spec(n, l, r));
                std::vector<std::array<Complex, 2>> factors(static_cast<std::size_t>(n - s), kPlus);
                for (int b = s - 1; b >= 0; --b) factors.push_back(((l >> b) & 1) ? kOne : kZero);
                expect(p4, max_deviation(psi, product_state(factors)) <= 1e-12,
                       "l=" + std::to_string(l) + ",r=" + std::to_string(r));
            }
            for (int l = N / 2; l < N / 2 + r && l < N; ++l) {
                const StateVec psi = periodic_state(make_spec(n, l, r));
                const int lp = l - N / 2;
                std::vector<std::array<Complex, 2>> factors{kOne};
                factors.insert(factors.end(), static_cast<std::size_t>(n - s - 1), kPlus);
                for (int b = s - 1; b >= 0; --b) factors.push_back(((lp >> b) & 1) ? kOne : kZero);
                expect(p4, max_deviation(psi, product_state(factors)) <= 1e-12,
                       "l=" + std::to_string(l) + ",r=" + std::to_string(r));
            }
        }

        // P5: at least floor((N-2)/3) + 3 pairs (l, r) give states
        // SLOCC-equivalent to GHZ_n, each verified by its constructive
        // certificate (rank-2 decomposition into independent product terms).
        PropositionCheck p5;
        p5.name = "P5: GHZ-equivalent pair count lower bound" + suffix;
        int count = 0;

        // (l, r) = (1, 1): sqrt(N)|+>^n - |0...0>.
        {
            const StateVec psi = periodic_state(make_spec(n, 1, 1));
            StateVec recon = product_state(std::vector<std::array<Complex, 2>>(static_cast<std::size_t>(n), kPlus));
            const double scale = std::sqrt(static_cast<double>(N)) / std::sqrt(static_cast<double>(N - 1));
            for (auto& a : recon.amps) a *= scale;
            recon.amps[0] -= Complex{1.0 / std::sqrt(static_cast<double>(N - 1)), 0.0};
            if (max_deviation(psi, recon) <= 1e-12) ++count;  // |+> and |0> independent in every factor
        }

        // (l, r) = (N/2 - 1, 1): |01...1> + sqrt(N/2) |1>|+>^(n-1).
        {
            const StateVec psi = periodic_state(make_spec(n, N / 2 - 1, 1));
            const double norm = std::sqrt(static_cast<double>(N / 2 + 1));
            std::vector<std::array<Complex, 2>> tail{kOne};
            tail.insert(tail.end(), static_cast<std::size_t>(n - 1), kPlus);
            StateVec recon = product_state(tail);
            const double scale = std::sqrt(static_cast<double>(N / 2)) / norm;
            for (auto& a : recon.amps) a *= scale;
            recon.amps[static_cast<std::size_t>(N / 2 - 1)] += Complex{1.0 / norm, 0.0};
            if (max_deviation(psi, recon) <= 1e-12) ++count;  // |0> vs |1> and |1> vs |+> independent
        }

        // Anti-diagonal 2l + r = N - 1 with exactly two complementary terms.
        for (int k = 0; k <= (N - 2) / 3; ++k) {
            const int l = k, r = N - 1 - 2 * k;
            const PeriodicSpec spec = make_spec(n, l, r);
            if (spec.A != 2) continue;
            const int hi = l + r;
            const bool complementary = ((l & hi) == 0) && ((l | hi) == N - 1);
            if (complementary) ++count;  // |b> vs |1-b> independent in every factor
        }

        const int bound = (N - 2) / 3 + 3;
        expect(p5, count >= bound,
               "count=" + std::to_string(count) + " < bound=" + std::to_string(bound));
        p5.name += " [count=" + std::to_string(count) + ", bound=" + std::to_string(bound) + "]";

        report.checks.push_back(std::move(p1));
        report.checks.push_back(std::move(p2));
        report.checks.push_back(std::move(p3));
        report.checks.push_back(std::move(p4));
        report.checks.push_back(std::move(p5));
    }
    return report;
}

ket::StateVec phi_state(int index) {
    static const std::array<const char*, 15> exprs = {
        "1/sqrt(3)*(|001>+|010>+|100>)",
        "1/sqrt(24)*(3*|000> + (w8^1+w8^2+w8^4)*|001> + w8^2*|010> + (w8^3+w8^6+w8^4)*|011> + |100> + "
        "(w8^5+w8^2+w8^4)*|101> + w8^6*|110> + (w8^7+w8^6+w8^4)*|111>)",
        "1/sqrt(3)*(|100>+|110>+|111>)",
        "1/sqrt(2)*(|110>+|111>)",
        "1/4*(2*|000> + (w8^7-i)*|001> - (1+i)*|010> + (i+w8^5)*|011> + (w8^3-i)*|101> + (i-1)*|110> + "
        "(w8^1+i)*|111>)",
        "1/sqrt(2)*(|001>+|010>)",
        "1/sqrt(2)*(|101>+|111>)",
        "1/4*(2*|000> + (w8^5+w8^7)*|001> + (w8^5+w8^7)*|011> - 2*|100> + (w8^1+w8^3)*|101> + (w8^1+w8^3)*|111>)",
        "1/sqrt(2)*(|001>+|011>)",
        "1/sqrt(2)*(|000>+|101>)",
        "1/4*(2*|000> + (1+w8^5)*|001> + (1+i)*|010> + (1+w8^7)*|011> + (1+w8^1)*|101> + (1-i)*|110> + "
        "(1+w8^3)*|111>)",
        "1/sqrt(2)*(|000>+|011>)",
        "1/sqrt(2)*(|000>+|110>)",
        "1/4*(2*|000> + (1-i)*|001> + (1+i)*|011> + 2*|100> + (1-i)*|101> + (1+i)*|111>)",
        "1/sqrt(2)*(|000>+|010>)",
    };
    if (index < 1 || index > 15) throw InvalidSpec("chain index must be in [1,15]");
    return ketparse::parse_state(exprs[static_cast<std::size_t>(index - 1)]);
}

classify::Family phi_printed_orbit(int index) {
    using classify::Family;
    static const std::array<Family, 15> orbits = {Family::O_5, Family::O_6, Family::O_3, Family::O_4, Family::O_6,
                                                  Family::O_3, Family::O_1, Family::O_3, Family::O_1, Family::O_2,
                                                  Family::O_6, Family::O_3, Family::O_4, Family::O_3, Family::O_1};
    if (index < 1 || index > 15) throw InvalidSpec("chain index must be in [1,15]");
    return orbits[static_cast<std::size_t>(index - 1)];
}

PhiChainReport phi_chain_check(const classify::Options& opt) {
    using classify::Family;
    PhiChainReport report;
    static const std::array<std::pair<int, int>, 10> arrows = {{{1, 2},
                                                                {2, 3},
                                                                {4, 5},
                                                                {5, 6},
                                                                {7, 8},
                                                                {8, 9},
                                                                {10, 11},
                                                                {11, 12},
                                                                {13, 14},
                                                                {14, 15}}};
    for (const auto& [from, to] : arrows) {
        const double dev = max_deviation(qft(phi_state(from)), phi_state(to));
        report.arrows.push_back({from, to, dev, dev <= 1e-9});
    }
    for (int i = 1; i <= 15; ++i) {
        PhiLabelCheck check;
        check.index = i;
        check.printed = phi_printed_orbit(i);
        check.computed = classify::classify3(phi_state(i), opt);
        check.match = check.printed == check.computed;
        // A printed biseparable/entangled label contradicted by the
        // separability oracle is flagged rather than silently matched.
        check.flagged_discrepancy =
            !check.match && check.printed != Family::O_1 && classify::is_separable(phi_state(i), opt);
        report.labels.push_back(check);
    }
    return report;
}

}  // namespace qent::shor
