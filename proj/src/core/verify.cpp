#include "core/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>

#include "core/rng.hpp"
#include "core/tensor_rep.hpp"
#include "json.hpp"

namespace symtrace {

using nlohmann::json;

namespace {

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    std::int64_t ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - t0)
            .count();
    }
};

struct TrialOut {
    double residual = 0.0;
    double min_eig = 1e300;
};

double rel(double value, double scale) { return value / (1.0 + scale); }

double input_scale(std::span<const CMatrix> vars) {
    double p = 1.0;
    for (const auto& v : vars) p *= v.frobenius();
    return p;
}

std::string fmt_params(const json& j) { return j.dump(); }

}  // namespace

int harness_threads() {
    static int n = [] {
        if (const char* env = std::getenv("SYMTRACE_THREADS")) {
            int v = std::atoi(env);
            if (v >= 1) return std::min(v, 64);
        }
        unsigned hw = std::thread::hardware_concurrency();
        return (int)std::min<unsigned>(hw ? hw : 1u, 4u);
    }();
    return n;
}

namespace {

/// Runs fn over trials 0..n-1 with per-trial seeded streams; merges worst
/// statistics.  max/min merging keeps the result independent of the thread
/// count.
template <typename Fn>
TrialOut run_trials(int n, std::uint64_t seed, Fn&& fn) {
    const int nthreads = std::max(1, std::min(harness_threads(), n));
    std::vector<TrialOut> outs(n);
    std::atomic<int> next{0};
    std::exception_ptr err;
    std::mutex err_mtx;

    auto worker = [&] {
        for (;;) {
            int i = next.fetch_add(1);
            if (i >= n) return;
            try {
                Rng rng = Rng::for_trial(seed, (std::uint64_t)i);
                outs[i] = fn(i, rng);
            } catch (...) {
                std::lock_guard<std::mutex> lock(err_mtx);
                if (!err) err = std::current_exception();
                return;
            }
        }
    };
    if (nthreads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    if (err) std::rethrow_exception(err);

    TrialOut merged;
    merged.min_eig = 1e300;
    for (const auto& o : outs) {
        merged.residual = std::max(merged.residual, o.residual);
        merged.min_eig = std::min(merged.min_eig, o.min_eig);
    }
    return merged;
}

void finish(Report& r, const Timer& t, const TrialOut& w) {
    r.worst_residual = w.residual;
    r.min_eigenvalue = w.min_eig >= 1e299 ? 0.0 : w.min_eig;
    r.elapsed_ms = t.ms();
}

void merge_into(Report& main, const Report& sub) {
    main.trials += sub.trials;
    main.worst_residual = std::max(main.worst_residual, sub.worst_residual);
    main.min_eigenvalue = std::min(main.min_eigenvalue, sub.min_eigenvalue);
    main.pass = main.pass && sub.pass;
    main.negative_control_failed = main.negative_control_failed && sub.negative_control_failed;
    for (const auto& n : sub.notes) main.notes.push_back(n);
}

/// The planted non-positive map -f_{(2)}.  Returns true when the harness
/// detects the violation (as it must).
bool negative_control_caught(const TrialConfig& cfg) {
    TracePolynomial bad = polarized_ch_map(Partition({2})).scaled(Rational(-1));
    for (int i = 0; i < 16; ++i) {
        Rng rng = Rng::for_trial(cfg.seed ^ 0xC0117201u, (std::uint64_t)i);
        std::vector<CMatrix> vars{random_psd(cfg.d, rng)};
        CMatrix y = bad.evaluate(vars);
        double meig = rel(min_eigenvalue_hermitian(y), y.frobenius());
        if (meig < -cfg.tol_psd) return true;
    }
    return false;
}

/// Operator-side evaluation of a group-algebra element in the given mode:
/// tr_{...}[ T_hat(alpha) (X_1 ot ... ot X_k) ], the dictionary's oracle.
CMatrix op_eval(const AlgebraElement& alpha, DictMode mode, std::span<const CMatrix> vars,
                int d) {
    const int k = alpha.degree();
    CMatrix big = vars[0];
    for (std::size_t i = 1; i < vars.size(); ++i) big = kron(big, vars[i]);
    if (mode == DictMode::identity_in_last_slot) big = kron(big, CMatrix::identity(d));

    CMatrix prod = algebra_rep(alpha, d) * big;
    prod.with_slots(std::vector<int>(k, d));

    if (mode == DictMode::full_trace) return CMatrix::identity(d) * prod.trace();
    std::vector<int> all_but_last(k - 1);
    for (int i = 0; i < k - 1; ++i) all_but_last[i] = i + 1;
    return partial_trace(prod, all_but_last);
}

json partition_json(const Partition& p) { return json(p.parts()); }

}  // namespace

// ---------------------------------------------------------------- dictionary

Report suite_dictionary(int kmax, const TrialConfig& cfg) {
    Timer timer;
    Report r;
    r.suite = "dictionary";
    r.params_json = fmt_params({{"kmax", kmax}, {"d", cfg.d}});
    r.trials = cfg.trials;
    r.seed = cfg.seed;

    const int d = cfg.d;
    TrialOut w = run_trials(cfg.trials, cfg.seed, [&](int trial, Rng& rng) {
        TrialOut out;
        const int k = 2 + trial % (kmax - 1);
        AlgebraElement alpha = random_algebra_element(k, rng);

        std::vector<CMatrix> vars;
        for (int i = 0; i < k; ++i) vars.push_back(random_complex(d, rng));
        std::vector<CMatrix> vars1(vars.begin(), vars.end() - 1);

        auto check = [&](DictMode mode) {
            bool drop_last = mode == DictMode::identity_in_last_slot;
            std::span<const CMatrix> vs(vars.data(), drop_last ? k - 1 : k);
            CMatrix sym = poly_of_group_element(alpha, mode).evaluate(vs);
            CMatrix op = op_eval(alpha, mode, vs, d);
            out.residual = std::max(out.residual, rel((sym - op).frobenius(), op.frobenius()));
        };
        check(DictMode::full_trace);
        check(DictMode::last_slot_output);
        check(DictMode::identity_in_last_slot);

        // Pure cycle: the inverse full cycle produces the ordered product.
        std::vector<int> cyc(k);
        for (int i = 0; i < k; ++i) cyc[i] = k - i;
        AlgebraElement pure = AlgebraElement::basis(Permutation::from_cycles(k, {cyc}));
        CMatrix prod = CMatrix::identity(d);
        for (const auto& v : vars) prod = prod * v;
        CMatrix sym = poly_of_group_element(pure, DictMode::last_slot_output).evaluate(vars);
        out.residual = std::max(out.residual, rel((sym - prod).frobenius(), prod.frobenius()));
        return out;
    });

    finish(r, timer, w);
    r.pass = r.worst_residual <= cfg.tol_zero;
    return r;
}

// ---------------------------------------------------------------- idempotents

Report suite_idempotents(int kmax, const TrialConfig& cfg) {
    Timer timer;
    Report r;
    r.suite = "idempotents";
    r.params_json = fmt_params({{"kmax", kmax}});
    r.seed = cfg.seed;

    bool ok = true;
    for (int k = 2; k <= kmax; ++k) {
        auto parts = partitions(k);
        std::vector<AlgebraElement> omegas;
        for (const auto& lam : parts) omegas.push_back(central_idempotent(lam));

        AlgebraElement sum(k);
        for (std::size_t i = 0; i < omegas.size(); ++i) {
            const auto& w = omegas[i];
            ok = ok && !w.is_zero();
            ok = ok && (multiply(w, w) == w);
            ok = ok && (star(w) == w);
            ok = ok && is_central(w);
            for (std::size_t j = i + 1; j < omegas.size(); ++j) {
                ok = ok && multiply(w, omegas[j]).is_zero();
                ok = ok && multiply(omegas[j], w).is_zero();
            }
            sum = add(sum, w);
        }
        ok = ok && (sum == AlgebraElement::unit(k));

        if (k <= 4) {
            // Young symmetrizer quasi-idempotency c^2 = (k!/h_lambda) c
            for (const auto& lam : parts) {
                AlgebraElement c = young_symmetrizer(Tableau::natural(lam));
                Rational n(factorial(k), lam.hook_dimension());
                ok = ok && (multiply(c, c) == scale(n, c));
            }
        }
        r.notes.push_back("k=" + std::to_string(k) + ": " + std::to_string(parts.size()) +
                          " central idempotents, exact checks " + (ok ? "ok" : "FAILED"));
        if (!ok) break;
    }
    r.pass = ok;
    finish(r, timer, TrialOut{0.0, 1e300});
    return r;
}

// ---------------------------------------------------------------- projectors

Report suite_projectors(int kmax, const std::vector<int>& ds, const TrialConfig& cfg) {
    Timer timer;
    Report r;
    r.suite = "projectors";
    r.params_json = fmt_params({{"kmax", kmax}, {"d", ds}});
    r.seed = cfg.seed;

    double worst = 0.0;
    bool ok = true;
    for (int d : ds) {
        for (int k = 2; k <= kmax; ++k) {
            auto parts = partitions(k);
            std::vector<CMatrix> P;
            for (const auto& lam : parts) P.push_back(young_projector(lam, d));
            const int n = P[0].rows();
            CMatrix sum(n, n);
            for (std::size_t i = 0; i < parts.size(); ++i) {
                const CMatrix& Pi = P[i];
                double sc = 1.0 + Pi.frobenius();
                worst = std::max(worst, (Pi * Pi - Pi).frobenius() / sc);
                worst = std::max(worst, (Pi.adjoint() - Pi).frobenius() / sc);
                for (int s = 1; s < k; ++s) {
                    CMatrix g = rep_matrix(Permutation::from_cycles(k, {{s, s + 1}}), d);
                    worst = std::max(worst, (g * Pi - Pi * g).frobenius() / sc);
                }
                for (std::size_t j = i + 1; j < parts.size(); ++j)
                    worst = std::max(worst, (Pi * P[j]).frobenius() / sc);
                // pigeonhole: zero exactly when the shape has more than d rows
                if (parts[i].num_parts() > d) {
                    worst = std::max(worst, Pi.frobenius());
                } else {
                    ok = ok && Pi.frobenius() > 0.5;
                }
                sum += Pi;
            }
            worst = std::max(worst, (sum - CMatrix::identity(n)).frobenius() / (1.0 + std::sqrt((double)n)));
        }
    }
    r.pass = ok && worst <= cfg.tol_zero;
    finish(r, timer, TrialOut{worst, 1e300});
    return r;
}

// ---------------------------------------------------------------- vanishing

Report suite_vanishing(const Partition& lambda, const TrialConfig& cfg) {
    if (lambda.num_parts() <= cfg.d)
        throw std::invalid_argument(
            "suite_vanishing: f_lambda is not an identity when parts(lambda) <= d");
    Timer timer;
    Report r;
    r.suite = "vanishing";
    r.params_json = fmt_params({{"lambda", partition_json(lambda)}, {"d", cfg.d}});
    r.trials = cfg.trials;
    r.seed = cfg.seed;

    TracePolynomial f = polarized_ch_map(lambda);
    TrialOut w = run_trials(cfg.trials, cfg.seed, [&](int, Rng& rng) {
        std::vector<CMatrix> vars;
        for (int i = 0; i < f.nvars(); ++i) vars.push_back(random_complex(cfg.d, rng));
        TrialOut out;
        out.residual = rel(f.evaluate(vars).frobenius(), input_scale(vars));
        return out;
    });
    finish(r, timer, w);
    r.pass = r.worst_residual <= cfg.tol_zero;
    return r;
}

Report suite_vanishing_default(const TrialConfig& cfg) {
    Timer timer;
    Report r;
    r.suite = "vanishing";
    r.params_json = fmt_params({{"cases", "(1,1,1)@d=2, (1,1,1,1)@d=2, (1,1,1,1)@d=3"}});
    r.seed = cfg.seed;
    r.pass = true;
    r.min_eigenvalue = 1e300;

    TrialConfig c2 = cfg;
    c2.d = 2;
    merge_into(r, suite_vanishing(Partition({1, 1, 1}), c2));
    merge_into(r, suite_vanishing(Partition({1, 1, 1, 1}), c2));
    TrialConfig c3 = cfg;
    c3.d = 3;
    merge_into(r, suite_vanishing(Partition({1, 1, 1, 1}), c3));
    if (r.min_eigenvalue >= 1e299) r.min_eigenvalue = 0.0;
    r.elapsed_ms = timer.ms();
    return r;
}

// ---------------------------------------------------------------- positivity

Report suite_positivity(const TracePolynomial& p, const std::string& name,
                        const TrialConfig& cfg) {
    Timer timer;
    Report r;
    r.suite = "positivity";
    r.params_json = fmt_params({{"map", name}, {"d", cfg.d}});
    r.trials = cfg.trials;
    r.seed = cfg.seed;

    TrialOut w = run_trials(cfg.trials, cfg.seed, [&](int, Rng& rng) {
        std::vector<CMatrix> vars;
        for (int i = 0; i < p.nvars(); ++i) vars.push_back(random_psd(cfg.d, rng));
        CMatrix y = p.evaluate(vars);
        TrialOut out;
        out.residual = rel((y - y.adjoint()).frobenius(), y.frobenius());
        out.min_eig = rel(min_eigenvalue_hermitian(y), y.frobenius());
        return out;
    });
    finish(r, timer, w);
    r.negative_control_failed = negative_control_caught(cfg);
    r.pass = r.worst_residual <= cfg.tol_zero && r.min_eigenvalue >= -cfg.tol_psd &&
             r.negative_control_failed;
    return r;
}

Report suite_positivity_all(int kmax, const std::vector<int>& ds, const TrialConfig& cfg) {
    Timer timer;
    Report r;
    r.suite = "positivity";
    r.params_json = fmt_params({{"kmax", kmax}, {"d", ds}});
    r.seed = cfg.seed;
    r.pass = true;
    r.min_eigenvalue = 1e300;

    for (int d : ds) {
        TrialConfig c = cfg;
        c.d = d;
        for (int k = 2; k <= kmax; ++k)
            for (const auto& lam : partitions(k))
                merge_into(r, suite_positivity(polarized_ch_map(lam),
                                               "f_" + lam.str() + " d=" + std::to_string(d), c));
    }
    r.notes.push_back("negative control -f_{(2)}: " +
                      std::string(r.negative_control_failed ? "caught" : "MISSED"));
    if (r.min_eigenvalue >= 1e299) r.min_eigenvalue = 0.0;
    r.elapsed_ms = timer.ms();
    return r;
}

// ---------------------------------------------------------------- equivariance

Report suite_equivariance(int kmax, const TrialConfig& cfg) {
    Timer timer;
    Report r;
    r.suite = "equivariance";
    r.params_json = fmt_params({{"kmax", kmax}, {"d", cfg.d}});
    r.trials = cfg.trials;
    r.seed = cfg.seed;

    std::vector<TracePolynomial> maps;
    for (int k = 2; k <= kmax; ++k)
        for (const auto& lam : partitions(k)) maps.push_back(polarized_ch_map(lam));

    TrialOut w = run_trials(cfg.trials, cfg.seed, [&](int trial, Rng& rng) {
        const TracePolynomial& f = maps[trial % maps.size()];
        CMatrix u = random_unitary(cfg.d, rng);
        CMatrix udag = u.adjoint();
        std::vector<CMatrix> vars, conj_vars;
        for (int i = 0; i < f.nvars(); ++i) {
            vars.push_back(random_complex(cfg.d, rng));
            conj_vars.push_back(u * vars.back() * udag);
        }
        CMatrix lhs = f.evaluate(conj_vars);
        CMatrix rhs = u * f.evaluate(vars) * udag;
        TrialOut out;
        out.residual = rel((lhs - rhs).frobenius(), rhs.frobenius());
        return out;
    });
    finish(r, timer, w);
    r.pass = r.worst_residual <= cfg.tol_psd;
    return r;
}

// ---------------------------------------------------------------- shadow

Report suite_shadow(int n, const TrialConfig& cfg) {
    if (n < 1 || n > 4) throw std::invalid_argument("suite_shadow supports 1 <= n <= 4 qubits");
    Timer timer;
    Report r;
    r.suite = "shadow";
    r.params_json = fmt_params({{"n", n}});
    r.trials = cfg.trials;
    r.seed = cfg.seed;

    const std::vector<int> dims(n, 2);
    const Partition minus({1, 1}), plus({2});
    const double two_n = std::pow(2.0, n);

    TrialOut w = run_trials(cfg.trials, cfg.seed, [&](int, Rng& rng) {
        CMatrix rho = random_density(dims, rng);
        TrialOut out;
        for (int tmask = 0; tmask < (1 << n); ++tmask) {
            CMatrix sum(rho.rows(), rho.cols());
            for (int smask = 0; smask < (1 << n); ++smask) {
                std::vector<int> kept, traced;
                for (int j = 0; j < n; ++j)
                    ((smask >> j) & 1 ? kept : traced).push_back(j + 1);
                CMatrix red = partial_trace(rho, traced);
                CMatrix lifted = embed_op(red, kept, dims);
                int parity = __builtin_popcount(smask & tmask) & 1;
                sum += lifted * cplx(parity ? -1.0 : 1.0);
            }
            out.min_eig =
                std::min(out.min_eig, rel(min_eigenvalue_hermitian(sum), sum.frobenius()));

            std::vector<Partition> lams;
            for (int j = 0; j < n; ++j) lams.push_back(((tmask >> j) & 1) ? minus : plus);
            std::vector<CMatrix> vars{rho};
            CMatrix op = tensor_stable_eval(lams, dims, vars) * cplx(two_n);
            out.residual =
                std::max(out.residual, rel((sum - op).frobenius(), sum.frobenius()));
        }
        return out;
    });
    finish(r, timer, w);
    r.negative_control_failed = negative_control_caught(cfg);
    r.pass = r.worst_residual <= cfg.tol_zero && r.min_eigenvalue >= -cfg.tol_psd &&
             r.negative_control_failed;
    return r;
}

// ---------------------------------------------------------------- tensor stability

CMatrix tensor_stable_eval(const std::vector<Partition>& lambdas, const std::vector<int>& dims,
                           std::span<const CMatrix> vars) {
    const int n = (int)lambdas.size();
    if ((int)dims.size() != n) throw std::invalid_argument("one local dimension per partition");
    const int k = lambdas[0].k();
    for (const auto& l : lambdas)
        if (l.k() != k) throw std::invalid_argument("partitions must share a common k");
    if ((int)vars.size() != k - 1) throw std::invalid_argument("expected k-1 variables");

    double fullsize = 1.0;
    for (int d : dims) fullsize *= std::pow((double)d, k);
    if (fullsize > 4096.0) throw std::invalid_argument("tensor-stable budget exceeded");

    std::vector<int> full_dims;
    CMatrix P = CMatrix::identity(1);
    for (int j = 0; j < n; ++j) {
        P = kron(P, young_projector(lambdas[j], dims[j]));
        for (int i = 0; i < k; ++i) full_dims.push_back(dims[j]);
    }
    full_dims.insert(full_dims.begin(), 1);
    P.with_slots(full_dims);

    CMatrix acc = P;
    for (int i = 1; i <= k - 1; ++i) {
        std::vector<int> slots;
        for (int j = 0; j < n; ++j) slots.push_back(1 + j * k + i);  // +1 for the leading trivial slot
        acc = acc * embed_op(vars[i - 1], slots, full_dims);
        acc.with_slots(full_dims);
    }

    std::vector<int> traced;
    for (int s = 1; s <= (int)full_dims.size(); ++s) {
        bool keep = false;
        for (int j = 0; j < n; ++j)
            if (s == 1 + j * k + k) keep = true;
        if (!keep) traced.push_back(s);
    }
    return partial_trace(acc, traced);
}

namespace {

/// The closed partial-transpose expansion of f_{(2,1)} ot f_{(2,1)} on two
/// factors.
CMatrix deg3_closed_form(const CMatrix& rho, const CMatrix& mu) {
    const std::vector<int> dims = rho.slots();
    CMatrix out(rho.rows(), rho.cols());
    for (int smask = 0; smask < 4; ++smask) {
        std::vector<int> S, Sc;
        for (int j = 0; j < 2; ++j) ((smask >> j) & 1 ? S : Sc).push_back(j + 1);
        double coeff = std::pow(-0.5, (int)S.size());
        for (int amask = 0; amask < (1 << S.size()); ++amask) {
            std::vector<int> A;  // positions within S (1-based relative)
            for (std::size_t j = 0; j < S.size(); ++j)
                if ((amask >> j) & 1) A.push_back((int)j + 1);
            CMatrix rs = partial_trace(rho, Sc);
            CMatrix ms = partial_trace(mu, Sc);
            CMatrix term;
            if (S.empty()) {
                term = CMatrix::identity(rho.rows()) * (rs.at(0, 0) * ms.at(0, 0));
                term.with_slots(dims);
            } else {
                CMatrix prod = partial_transpose(rs, A) * partial_transpose(ms, A);
                prod.with_slots(rs.slots());
                term = embed_op(partial_transpose(prod, A), S, dims);
            }
            out += term * cplx(coeff);
        }
    }
    return out * cplx(4.0 / 9.0);
}

}  // namespace

Report suite_tensor_stable(const std::vector<Partition>& lambdas, const TrialConfig& cfg) {
    Timer timer;
    Report r;
    r.suite = "tensor_stable";
    json jl = json::array();
    for (const auto& l : lambdas) jl.push_back(partition_json(l));
    r.params_json = fmt_params({{"lambdas", jl}, {"d", cfg.d}});
    r.trials = cfg.trials;
    r.seed = cfg.seed;

    const int n = (int)lambdas.size();
    const int k = lambdas[0].k();
    const std::vector<int> dims(n, cfg.d);
    const bool deg3_case =
        n == 2 && cfg.d == 2 && lambdas[0] == Partition({2, 1}) && lambdas[1] == Partition({2, 1});

    TrialOut w = run_trials(cfg.trials, cfg.seed, [&](int, Rng& rng) {
        std::vector<CMatrix> vars;
        for (int i = 0; i < k - 1; ++i) vars.push_back(random_density(dims, rng));
        CMatrix y = tensor_stable_eval(lambdas, dims, vars);
        TrialOut out;
        out.min_eig = rel(min_eigenvalue_hermitian(y), y.frobenius());
        if (deg3_case) {
            CMatrix closed = deg3_closed_form(vars[0], vars[1]);
            out.residual = rel((y - closed).frobenius(), y.frobenius());
        }
        return out;
    });
    finish(r, timer, w);
    if (deg3_case) r.notes.push_back("matched the closed partial-transpose expansion");
    r.negative_control_failed = negative_control_caught(cfg);
    r.pass = r.worst_residual <= cfg.tol_zero && r.min_eigenvalue >= -cfg.tol_psd &&
             r.negative_control_failed;
    return r;
}

// ---------------------------------------------------------------- copositivity

Report suite_copositive(const Partition& lambda, int ancilla, const TrialConfig& cfg) {
    Timer timer;
    Report r;
    r.suite = "copositive";
    r.params_json =
        fmt_params({{"lambda", partition_json(lambda)}, {"m", ancilla}, {"d", cfg.d}});
    r.trials = cfg.trials;
    r.seed = cfg.seed;

    const int k = lambda.k();
    const int d = cfg.d;
    double input_size = std::pow((double)d, k - 1) * ancilla;
    if (input_size > 256.0) throw std::invalid_argument("copositivity budget exceeded");

    std::vector<int> z_dims(k - 1, d);
    z_dims.push_back(ancilla);
    std::vector<int> full_dims(k, d);
    full_dims.push_back(ancilla);

    std::vector<int> first_slots(k - 1), z_slots;
    for (int i = 0; i < k - 1; ++i) {
        first_slots[i] = i + 1;
        z_slots.push_back(i + 1);
    }
    z_slots.push_back(k + 1);  // ancilla

    CMatrix P = embed_op(young_projector(lambda, d), [&] {
        std::vector<int> s(k);
        for (int i = 0; i < k; ++i) s[i] = i + 1;
        return s;
    }(), full_dims);

    TrialOut w = run_trials(cfg.trials, cfg.seed, [&](int, Rng& rng) {
        int zn = 1;
        for (int dd : z_dims) zn *= dd;
        CMatrix z = random_psd(zn, rng);
        z.with_slots(z_dims);
        CMatrix zt = partial_transpose(z, first_slots);
        CMatrix prod = P * embed_op(zt, z_slots, full_dims);
        prod.with_slots(full_dims);
        CMatrix y = partial_trace(prod, first_slots);
        TrialOut out;
        out.min_eig = rel(min_eigenvalue_hermitian(y), y.frobenius());
        out.residual = rel((y - y.adjoint()).frobenius(), y.frobenius());
        return out;
    });
    finish(r, timer, w);
    r.negative_control_failed = negative_control_caught(cfg);
    r.pass = r.worst_residual <= cfg.tol_zero && r.min_eigenvalue >= -cfg.tol_psd &&
             r.negative_control_failed;
    return r;
}

// ---------------------------------------------------------------- witness

Report suite_witness(const TrialConfig& cfg) {
    if (cfg.d < 3)
        throw std::invalid_argument(
            "suite_witness: the zero floor at orthogonal pairs needs d >= 3");
    Timer timer;
    Report r;
    r.suite = "witness";
    r.params_json = fmt_params({{"k", 3}, {"d", cfg.d}});
    r.trials = cfg.trials;
    r.seed = cfg.seed;
    const int d = cfg.d;

    TracePolynomial w3 = witness_map(3);

    // (a) positivity of the witness polynomial on PSD pairs
    TrialOut pos = run_trials(cfg.trials, cfg.seed, [&](int, Rng& rng) {
        std::vector<CMatrix> vars{random_psd(d, rng), random_psd(d, rng)};
        CMatrix y = w3.evaluate(vars);
        TrialOut out;
        out.residual = rel((y - y.adjoint()).frobenius(), y.frobenius());
        out.min_eig = rel(min_eigenvalue_hermitian(y), y.frobenius());
        return out;
    });

    // (b) the zero floor at orthogonal rank-one pairs
    std::atomic<bool> floor_ok{true};
    double floor_hi = -1e300;
    std::mutex hi_mtx;
    TrialOut orth = run_trials(cfg.trials, cfg.seed ^ 0x5eed0001u, [&](int, Rng& rng) {
        CMatrix u = random_unitary(d, rng);
        CMatrix x(d, d), y(d, d);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
                x.at(i, j) = u.at(i, 0) * std::conj(u.at(j, 0));
                y.at(i, j) = u.at(i, 1) * std::conj(u.at(j, 1));
            }
        std::vector<CMatrix> vars{x, y};
        double meig = min_eigenvalue_hermitian(w3.evaluate(vars));
        if (meig < -cfg.tol_psd || meig > 10.0 * cfg.tol_psd) floor_ok = false;
        {
            std::lock_guard<std::mutex> lock(hi_mtx);
            floor_hi = std::max(floor_hi, meig);
        }
        TrialOut out;
        out.min_eig = meig;
        return out;
    });

    // (c) block positivity of (1/6) e - omega_- on pure product states
    AlgebraElement wit = sub(scale(Rational(1, 6), AlgebraElement::unit(3)),
                             central_idempotent(Partition({1, 1, 1})));
    CMatrix wit_op = algebra_rep(wit, d);
    CMatrix pminus = young_projector(Partition({1, 1, 1}), d);
    double herm_res = rel((wit_op - wit_op.adjoint()).frobenius(), wit_op.frobenius());

    std::atomic<bool> ceiling_ok{true};
    double max_overlap = -1e300, min_value = 1e300;
    std::mutex stat_mtx;
    run_trials(cfg.trials, cfg.seed ^ 0x5eed0002u, [&](int, Rng& rng) {
        CMatrix rho = random_pure_product(std::vector<int>(3, d), rng);
        double value = hs_inner(wit_op, rho).real();
        double overlap = hs_inner(pminus, rho).real();
        if (value < -cfg.tol_zero || overlap > 1.0 / 6.0 + cfg.tol_psd) ceiling_ok = false;
        {
            std::lock_guard<std::mutex> lock(stat_mtx);
            max_overlap = std::max(max_overlap, overlap);
            min_value = std::min(min_value, value);
        }
        return TrialOut{};
    });

    // (d) negative control: -e is not block positive and must be caught
    bool control = false;
    {
        Rng rng = Rng::for_trial(cfg.seed ^ 0x5eed0003u, 0);
        CMatrix rho = random_pure_product(std::vector<int>(3, d), rng);
        CMatrix neg = algebra_rep(scale(Rational(-1), AlgebraElement::unit(3)), d);
        control = hs_inner(neg, rho).real() < -cfg.tol_psd;
    }

    r.worst_residual = std::max(pos.residual, herm_res);
    r.min_eigenvalue = std::min(pos.min_eig, orth.min_eig);
    r.negative_control_failed = control && negative_control_caught(cfg);
    r.notes.push_back("orthogonal-pair floor: min " + std::to_string(orth.min_eig) + ", max " +
                      std::to_string(floor_hi));
    r.notes.push_back("block positivity: min value " + std::to_string(min_value) +
                      ", max overlap " + std::to_string(max_overlap) + " (ceiling 1/6)");
    r.notes.push_back("no violation found in " + std::to_string(cfg.trials) + " trials");
    r.pass = pos.min_eig >= -cfg.tol_psd && r.worst_residual <= cfg.tol_zero && floor_ok &&
             ceiling_ok && r.negative_control_failed;
    r.trials = 3 * cfg.trials;
    r.elapsed_ms = timer.ms();
    return r;
}

// ---------------------------------------------------------------- fine-grained

Report suite_finegrained(const TrialConfig& cfg) {
    Timer timer;
    Report r;
    r.suite = "finegrained";
    r.params_json = fmt_params({{"d", cfg.d}});
    r.seed = cfg.seed;
    r.pass = true;

    AlgebraElement omega21 = central_idempotent(Partition({2, 1}));
    bool exact = true;
    std::vector<TracePolynomial> maps;
    for (const auto& [a, b] : fine_grained_idempotents_21()) {
        exact = exact && (multiply(a, a) == a) && (multiply(b, b) == b);
        exact = exact && (star(a) == a) && (star(b) == b);
        exact = exact && multiply(a, b).is_zero() && multiply(b, a).is_zero();
        exact = exact && (add(a, b) == omega21);
        maps.push_back(poly_of_group_element(a, DictMode::identity_in_last_slot));
        maps.push_back(poly_of_group_element(b, DictMode::identity_in_last_slot));
    }
    r.notes.push_back(std::string("exact idempotent decomposition: ") +
                      (exact ? "ok" : "FAILED"));
    r.pass = exact;
    r.min_eigenvalue = 1e300;

    for (std::size_t i = 0; i < maps.size(); ++i)
        merge_into(r, suite_positivity(maps[i], "finegrained_" + std::to_string(i + 1), cfg));
    if (r.min_eigenvalue >= 1e299) r.min_eigenvalue = 0.0;
    r.elapsed_ms = timer.ms();
    return r;
}

// ---------------------------------------------------------------- identities

Report suite_identities(const TrialConfig& cfg) {
    Timer timer;
    Report r;
    r.suite = "identities";
    r.params_json = fmt_params({{"d", 2}});
    r.trials = 3 * cfg.trials;
    r.seed = cfg.seed;

    Construction s4 = construct_identity(IdentityKind::polynomial, 2, 0, 1);
    TrialOut ws4 = run_trials(cfg.trials, cfg.seed, [&](int, Rng& rng) {
        std::vector<CMatrix> vars;
        for (int i = 0; i < 4; ++i) vars.push_back(random_complex(2, rng));
        TrialOut out;
        out.residual = rel(s4.tensor.evaluate(vars).frobenius(), input_scale(vars));
        return out;
    });

    // control: s_4 must NOT vanish on M_3
    double m3_max = 0.0;
    for (int i = 0; i < 16; ++i) {
        Rng rng = Rng::for_trial(cfg.seed ^ 0x5eed0004u, (std::uint64_t)i);
        std::vector<CMatrix> vars;
        for (int j = 0; j < 4; ++j) vars.push_back(random_complex(3, rng));
        m3_max = std::max(m3_max, rel(s4.tensor.evaluate(vars).frobenius(), input_scale(vars)));
    }
    bool m3_ok = m3_max > 1e-3;

    Construction cen = construct_identity(IdentityKind::central, 2, 0, 1);
    std::atomic<bool> c_seen{false};
    TrialOut wc = run_trials(cfg.trials, cfg.seed ^ 0x5eed0005u, [&](int, Rng& rng) {
        std::vector<CMatrix> vars;
        for (int i = 0; i < 4; ++i) vars.push_back(random_complex(2, rng));
        CMatrix y = cen.tensor.evaluate(vars);
        cplx c = y.trace() / 2.0;
        if (std::abs(c) > 1e-6) c_seen = true;
        CMatrix diff = y - CMatrix::identity(2) * c;
        TrialOut out;
        out.residual = rel(diff.frobenius(), y.frobenius());
        return out;
    });

    Construction ti = construct_identity(IdentityKind::tensor_identity, 2, 6, 2);
    TrialOut wt = run_trials(cfg.trials, cfg.seed ^ 0x5eed0006u, [&](int, Rng& rng) {
        std::vector<CMatrix> vars;
        for (int i = 0; i < 4; ++i) vars.push_back(random_complex(2, rng));
        TrialOut out;
        out.residual = rel(ti.tensor.evaluate(vars).frobenius(), input_scale(vars));
        return out;
    });

    r.worst_residual = std::max({ws4.residual, wc.residual, wt.residual});
    r.negative_control_failed = m3_ok;
    r.notes.push_back("s_4 on M_3 control: max residual " + std::to_string(m3_max));
    r.notes.push_back(std::string("central polynomial constant generically nonzero: ") +
                      (c_seen.load() ? "yes" : "NO"));
    r.pass = r.worst_residual <= cfg.tol_zero && m3_ok && c_seen.load();
    r.elapsed_ms = timer.ms();
    return r;
}

Report suite_tensor_identity(const TrialConfig& cfg) {
    Timer timer;
    Report r;
    r.suite = "tensor_identity";
    r.params_json = fmt_params({{"d", 2}, {"k", 6}, {"t", 2}});
    r.trials = cfg.trials;
    r.seed = cfg.seed;

    Construction ti = construct_identity(IdentityKind::tensor_identity, 2, 6, 2);
    TrialOut w = run_trials(cfg.trials, cfg.seed, [&](int, Rng& rng) {
        std::vector<CMatrix> vars;
        for (int i = 0; i < 4; ++i) vars.push_back(random_complex(2, rng));
        TrialOut out;
        out.residual = rel(ti.tensor.evaluate(vars).frobenius(), input_scale(vars));
        return out;
    });
    finish(r, timer, w);
    r.notes.push_back(std::string("exact J_2 certificate: ") +
                      (ti.membership_certified ? "ok" : "FAILED"));
    r.pass = r.worst_residual <= cfg.tol_zero && ti.membership_certified;
    return r;
}

// ---------------------------------------------------------------- membership

Report suite_membership(const TrialConfig& cfg) {
    Timer timer;
    Report r;
    r.suite = "membership";
    r.params_json = fmt_params({{"kmax", 6}});
    r.seed = cfg.seed;

    bool ok = true;
    for (int d = 1; d <= 2; ++d)
        for (int k = d + 1; k <= 6; ++k) {
            bool in = ideal_membership(epsilon_element(d, k), d);
            ok = ok && in;
            r.notes.push_back("epsilon(S_" + std::to_string(d + 1) + ") in J_" +
                              std::to_string(d) + " at k=" + std::to_string(k) + ": " +
                              (in ? "yes" : "NO"));
        }

    bool omega_out = !ideal_membership(central_idempotent(Partition({2, 1})), 2);
    ok = ok && omega_out;
    r.notes.push_back(std::string("omega_{(2,1)} not in J_2: ") + (omega_out ? "yes" : "NO"));

    // the algebraic and counting criteria agree on every omega_lambda
    bool omega_match = true;
    for (int k = 2; k <= 4; ++k)
        for (const auto& lam : partitions(k))
            for (int d = 1; d <= 2; ++d)
                omega_match = omega_match &&
                              (ideal_membership(central_idempotent(lam), d) ==
                               (lam.num_parts() > d));
    ok = ok && omega_match;
    r.notes.push_back(std::string("omega_lambda membership matches parts(lambda) > d: ") +
                      (omega_match ? "yes" : "NO"));

    Construction ti = construct_identity(IdentityKind::tensor_identity, 2, 6, 2);
    ok = ok && ti.membership_certified;
    r.notes.push_back(std::string("two-slot tensor identity element in J_2: ") +
                      (ti.membership_certified ? "yes" : "NO"));

    r.pass = ok;
    r.elapsed_ms = timer.ms();
    return r;
}

// ---------------------------------------------------------------- motzkin

namespace {

CMatrix mat_pow(const CMatrix& a, int n) {
    CMatrix r = CMatrix::identity(a.rows());
    for (int i = 0; i < n; ++i) r = r * a;
    return r;
}

CMatrix motzkin_value(const CMatrix& a, const CMatrix& b) {
    CMatrix b2 = b * b;
    return a * b2 * b2 * a + a * a * b2 * a * a - (a * b2 * a) * cplx(3.0) +
           CMatrix::identity(a.rows());
}

CMatrix motzkin_decomposition(const CMatrix& a, const CMatrix& b) {
    const CMatrix I = CMatrix::identity(a.rows());
    CMatrix a2 = a * a, b2 = b * b;
    CMatrix t1 = (a2 - a) * b2 * (a2 - a);
    CMatrix left = a * b2 + a2 - a * cplx(2.0);
    CMatrix right = b2 * a + a2 - a * cplx(2.0);
    CMatrix t2 = left * right;
    CMatrix t3 = (I - a) * (I + a * cplx(2.0) - a2) * (I - a);
    return t1 + t2 + t3;
}

CMatrix motzkin_homogenized(const CMatrix& a, const CMatrix& b) {
    const CMatrix I = CMatrix::identity(a.rows());
    double ta = a.trace().real(), tb = b.trace().real();
    CMatrix b2 = b * b;
    CMatrix t1 = (a * b2 * b2 * a) * cplx(ta * ta);
    CMatrix t2 = (a * a * b2 * a * a) * cplx(tb * tb);
    CMatrix t3 = (a * b2 * a) * cplx(-3.0 * ta * ta * tb * tb);
    CMatrix t4 = I * cplx(std::pow(ta, 4) * std::pow(tb, 4));
    return t1 + t2 + t3 + t4;
}

}  // namespace

Report suite_motzkin(const TrialConfig& cfg) {
    if (cfg.d > 4) throw std::invalid_argument("suite_motzkin supports d <= 4");
    Timer timer;
    Report r;
    r.suite = "motzkin";
    r.params_json = fmt_params({{"d", cfg.d}});
    r.trials = 3 * cfg.trials;
    r.seed = cfg.seed;
    const int d = cfg.d;

    TrialOut wa = run_trials(cfg.trials, cfg.seed, [&](int, Rng& rng) {
        CMatrix a = random_hermitian(d, rng), b = random_hermitian(d, rng);
        CMatrix m = motzkin_value(a, b);
        TrialOut out;
        out.residual = rel((m - motzkin_decomposition(a, b)).frobenius(), m.frobenius());
        return out;
    });

    TrialOut wb = run_trials(cfg.trials, cfg.seed ^ 0x5eed0007u, [&](int, Rng& rng) {
        CMatrix a = random_psd(d, rng), b = random_psd(d, rng);
        a = a * (1.0 / a.trace().real());
        b = b * (1.0 / b.trace().real());
        CMatrix m = motzkin_value(a, b);
        TrialOut out;
        out.min_eig = rel(min_eigenvalue_hermitian(m), m.frobenius());
        return out;
    });

    TrialOut wc = run_trials(cfg.trials, cfg.seed ^ 0x5eed0008u, [&](int, Rng& rng) {
        CMatrix a = random_psd(d, rng), b = random_psd(d, rng);
        CMatrix m = motzkin_homogenized(a, b);
        TrialOut out;
        out.min_eig = rel(min_eigenvalue_hermitian(m), m.frobenius());
        return out;
    });

    r.worst_residual = wa.residual;
    r.min_eigenvalue = std::min(wb.min_eig, wc.min_eig);
    r.negative_control_failed = negative_control_caught(cfg);
    r.pass = r.worst_residual <= cfg.tol_zero && r.min_eigenvalue >= -cfg.tol_psd &&
             r.negative_control_failed;
    r.elapsed_ms = timer.ms();
    return r;
}

// ---------------------------------------------------------------- block positivity

Report suite_block_positive(const AlgebraElement& p, const std::string& name, int nslots,
                            const TrialConfig& cfg) {
    if (nslots != p.degree()) throw std::invalid_argument("slot count must match the element degree");
    Timer timer;
    Report r;
    r.suite = "block_positive";
    r.params_json = fmt_params({{"element", name}, {"d", cfg.d}});
    r.trials = cfg.trials;
    r.seed = cfg.seed;

    CMatrix op = algebra_rep(p, cfg.d);
    double herm_res = rel((op - op.adjoint()).frobenius(), op.frobenius());
    double scale_norm = op.frobenius();

    TrialOut w = run_trials(cfg.trials, cfg.seed, [&](int, Rng& rng) {
        CMatrix rho = random_pure_product(std::vector<int>(nslots, cfg.d), rng);
        TrialOut out;
        out.min_eig = hs_inner(op, rho).real() / (1.0 + scale_norm);
        return out;
    });
    finish(r, timer, w);
    r.worst_residual = herm_res;
    r.notes.push_back("no violation found in " + std::to_string(cfg.trials) +
                      " trials (one-sided sampling)");
    r.pass = herm_res <= cfg.tol_zero && r.min_eigenvalue >= -cfg.tol_psd;
    return r;
}

// ---------------------------------------------------------------- tensor output

Report verify_tensor_output(const TensorPolynomial& q, TargetKind target,
                            const Permutation& target_perm, const TrialConfig& cfg) {
    Timer timer;
    Report r;
    r.suite = "tensor_output";
    r.params_json = fmt_params({{"d", cfg.d},
                                {"t", q.t()},
                                {"target", target == TargetKind::zero ? "zero"
                                           : target == TargetKind::identity ? "identity"
                                           : target == TargetKind::permutation ? "permutation"
                                                                               : "zero_on_traceless"}});
    r.trials = cfg.trials;
    r.seed = cfg.seed;

    CMatrix F = CMatrix::identity(1);
    if (target == TargetKind::identity) {
        int n = 1;
        for (int i = 0; i < q.t(); ++i) n *= cfg.d;
        F = CMatrix::identity(n);
    } else if (target == TargetKind::permutation) {
        F = rep_matrix(target_perm, cfg.d);
    }
    double f_norm2 = target == TargetKind::zero || target == TargetKind::zero_on_traceless
                         ? 1.0
                         : hs_inner(F, F).real();

    std::atomic<bool> c_nonzero{false};
    TrialOut w = run_trials(cfg.trials, cfg.seed, [&](int, Rng& rng) {
        std::vector<CMatrix> vars;
        for (int i = 0; i < q.nvars(); ++i)
            vars.push_back(target == TargetKind::zero_on_traceless ? random_traceless(cfg.d, rng)
                                                                   : random_complex(cfg.d, rng));
        CMatrix y = q.evaluate(vars);
        TrialOut out;
        if (target == TargetKind::zero || target == TargetKind::zero_on_traceless) {
            out.residual = rel(y.frobenius(), input_scale(vars));
        } else {
            cplx c = hs_inner(F, y) / f_norm2;
            if (std::abs(c) > 1e-6) c_nonzero = true;
            out.residual = rel((y - F * c).frobenius(), y.frobenius());
        }
        return out;
    });
    finish(r, timer, w);
    if (target == TargetKind::identity || target == TargetKind::permutation)
        r.notes.push_back(std::string("proportionality constant generically nonzero: ") +
                          (c_nonzero.load() ? "yes" : "no (the expression is an identity, c = 0)"));
    r.pass = r.worst_residual <= cfg.tol_zero;
    return r;
}

// ---------------------------------------------------------------- all

std::vector<Report> suite_all(const TrialConfig& cfg) {
    std::vector<Report> out;
    TrialConfig c2 = cfg;
    c2.d = 2;
    TrialConfig c3 = cfg;
    c3.d = 3;

    out.push_back(suite_dictionary(4, c2));
    out.push_back(suite_idempotents(5, cfg));
    out.push_back(suite_projectors(4, {2, 3}, cfg));
    out.push_back(suite_vanishing_default(cfg));
    out.push_back(suite_positivity_all(4, {2, 3}, cfg));
    out.push_back(suite_equivariance(4, c2));
    out.push_back(suite_shadow(3, cfg));
    out.push_back(suite_tensor_stable({Partition({2, 1}), Partition({2, 1})}, c2));
    {
        Report cop = suite_copositive(Partition({1, 1}), 2, c2);
        merge_into(cop, suite_copositive(Partition({2, 1}), 2, c2));
        cop.params_json = fmt_params({{"lambdas", "(1,1) and (2,1)"}, {"m", 2}, {"d", 2}});
        out.push_back(cop);
    }
    out.push_back(suite_witness(c3));
    out.push_back(suite_finegrained(c3));
    out.push_back(suite_identities(cfg));
    out.push_back(suite_tensor_identity(cfg));
    out.push_back(suite_membership(cfg));
    out.push_back(suite_motzkin(c3));
    return out;
}

// ---------------------------------------------------------------- report io

std::string Report::to_json() const {
    json j;
    j["suite"] = suite;
    j["params"] = json::parse(params_json);
    j["trials"] = trials;
    j["seed"] = seed;
    j["worst_residual"] = worst_residual;
    j["min_eigenvalue"] = min_eigenvalue;
    j["negative_control_failed"] = negative_control_failed;
    j["pass"] = pass;
    j["elapsed_ms"] = elapsed_ms;
    return j.dump();
}

std::string Report::to_text() const {
    std::string s;
    s += "suite: " + suite + "\n";
    s += "params: " + params_json + "\n";
    s += "trials: " + std::to_string(trials) + "  seed: " + std::to_string(seed) + "\n";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3e", worst_residual);
    s += "worst residual: " + std::string(buf) + "\n";
    std::snprintf(buf, sizeof buf, "%.3e", min_eigenvalue);
    s += "min eigenvalue: " + std::string(buf) + "\n";
    s += std::string("negative control failed: ") + (negative_control_failed ? "yes" : "NO") + "\n";
    for (const auto& n : notes) s += "  - " + n + "\n";
    s += std::string(pass ? "PASS" : "FAIL") + " (" + std::to_string(elapsed_ms) + " ms)\n";
    return s;
}

}  // namespace symtrace
