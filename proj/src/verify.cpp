#include "lhist/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <set>
#include <sstream>
#include <thread>

#include "lhist/bijection.hpp"
#include "lhist/gamma.hpp"
#include "lhist/laguerre.hpp"
#include "lhist/perm.hpp"

namespace lhist {

namespace {

long long factorial(int n) {
    long long f = 1;
    for (int i = 2; i <= n; ++i) f = checked_mul(f, i);
    return f;
}

std::string history_str(const LaguerreHistory& h) {
    return "path=" + to_string(h.path()) + " mu=" + mu_to_string(h.mu());
}

std::string int_vec_str(const std::vector<int>& v) {
    std::string out = "{";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(v[i]);
    }
    return out + "}";
}

// A check body fills in pass/counterexample; name, range and timing are
// handled by the driver.
struct Failure {
    Counterexample ce;
};

using CheckBody = std::optional<Failure> (*)(int max_n);

std::optional<Failure> fail(std::string input, std::string expected, std::string actual) {
    return Failure{Counterexample{std::move(input), std::move(expected), std::move(actual)}};
}

// CARDINALITY: |L_n| = (n+1)! for path lengths 0..max_n.
std::optional<Failure> check_cardinality(int max_n) {
    for (int n = 0; n <= max_n; ++n) {
        long long count = 0;
        for_each_history(n, [&](const LaguerreHistory&) { ++count; });
        const long long want = factorial(n + 1);
        if (count != want) {
            return fail("all_histories(" + std::to_string(n) + ")", std::to_string(want),
                        std::to_string(count));
        }
    }
    return std::nullopt;
}

// PHI_BIJECTION: both encodings round-trip on S_n and cover L_{n-1}.
std::optional<Failure> check_phi_bijection(int max_n) {
    for (int n = 1; n <= max_n; ++n) {
        std::set<LaguerreHistory> phi_images, psi_images;
        std::optional<Failure> bad;
        for_each_permutation(n, [&](const Permutation& s) {
            if (bad) return;
            const LaguerreHistory hp = phi(s);
            if (!(phi_inverse(hp) == s)) {
                bad = fail("phi_inverse(phi(" + to_string(s) + "))", to_string(s),
                           to_string(phi_inverse(hp)));
                return;
            }
            const LaguerreHistory hq = psi(s);
            if (!(psi_inverse(hq) == s)) {
                bad = fail("psi_inverse(psi(" + to_string(s) + "))", to_string(s),
                           to_string(psi_inverse(hq)));
                return;
            }
            phi_images.insert(hp);
            psi_images.insert(hq);
        });
        if (bad) return bad;
        const long long want = factorial(n);
        if (static_cast<long long>(phi_images.size()) != want ||
            static_cast<long long>(psi_images.size()) != want) {
            return fail("image counts of phi/psi on S_" + std::to_string(n), std::to_string(want),
                        std::to_string(phi_images.size()) + "/" + std::to_string(psi_images.size()));
        }
    }
    return std::nullopt;
}

// PHI_STATS: EXC(sigma) = U(w) disjoint-union L1(w) and inv-exc = area+sum(mu).
std::optional<Failure> check_phi_stats(int max_n) {
    for (int n = 1; n <= max_n; ++n) {
        std::optional<Failure> bad;
        for_each_permutation(n, [&](const Permutation& s) {
            if (bad) return;
            const LaguerreHistory h = phi(s);
            std::vector<int> merged = h.path().u_set();
            const std::vector<int> l1 = h.path().l1_set();
            for (int i : l1) {
                if (std::binary_search(merged.begin(), merged.end(), i)) {
                    bad = fail("phi(" + to_string(s) + ") U/L1 overlap", "disjoint",
                               "index " + std::to_string(i) + " in both");
                    return;
                }
            }
            merged.insert(merged.end(), l1.begin(), l1.end());
            std::sort(merged.begin(), merged.end());
            if (merged != exc_set(s)) {
                bad = fail("exc_set(" + to_string(s) + ") vs U+L1 of phi", int_vec_str(exc_set(s)),
                           int_vec_str(merged));
                return;
            }
            const long long lhs = inv(s) - exc(s);
            const long long rhs = h.path().area() + h.mu_sum();
            if (lhs != rhs) {
                bad = fail("inv-exc of " + to_string(s) + " vs area+mu of " + history_str(h),
                           std::to_string(lhs), std::to_string(rhs));
            }
        });
        if (bad) return bad;
    }
    return std::nullopt;
}

// HEIGHT_CLAIM: h_i(w) = cros_i(sigma) + nest_i(sigma) for i in [n-1].
std::optional<Failure> check_height_claim(int max_n) {
    for (int n = 1; n <= max_n; ++n) {
        std::optional<Failure> bad;
        for_each_permutation(n, [&](const Permutation& s) {
            if (bad) return;
            const LaguerreHistory h = phi(s);
            for (int i = 1; i < n; ++i) {
                const long long want = cros_k(s, i) + nest_k(s, i);
                if (h.path().height(i) != want) {
                    bad = fail("height_" + std::to_string(i) + " of phi(" + to_string(s) + ")",
                               std::to_string(want), std::to_string(h.path().height(i)));
                    return;
                }
            }
        });
        if (bad) return bad;
    }
    return std::nullopt;
}

// INV_DECOMP: inv = exc + cros + 2*nest.
std::optional<Failure> check_inv_decomp(int max_n) {
    for (int n = 1; n <= max_n; ++n) {
        std::optional<Failure> bad;
        for_each_permutation(n, [&](const Permutation& s) {
            if (bad) return;
            const long long lhs = inv(s);
            const long long rhs = exc(s) + cros(s) + 2 * nest(s);
            if (lhs != rhs) {
                bad = fail("inv(" + to_string(s) + ") vs exc+cros+2nest", std::to_string(lhs),
                           std::to_string(rhs));
            }
        });
        if (bad) return bad;
    }
    return std::nullopt;
}

// PSI_STATS: des = #U+#L1, dd = #L1, 2(2-13)+(31-2) = area+sum(mu).
std::optional<Failure> check_psi_stats(int max_n) {
    for (int n = 1; n <= max_n; ++n) {
        std::optional<Failure> bad;
        for_each_permutation(n, [&](const Permutation& s) {
            if (bad) return;
            const LaguerreHistory h = psi(s);
            const long long ucount = static_cast<long long>(h.path().u_set().size());
            const long long l1count = static_cast<long long>(h.path().l1_set().size());
            if (des(s) != ucount + l1count) {
                bad = fail("des(" + to_string(s) + ") vs #U+#L1 of psi", std::to_string(des(s)),
                           std::to_string(ucount + l1count));
                return;
            }
            if (dd_count(s) != l1count) {
                bad = fail("dd(" + to_string(s) + ") vs #L1 of psi", std::to_string(dd_count(s)),
                           std::to_string(l1count));
                return;
            }
            const long long lhs = 2 * pattern_2_13(s) + pattern_31_2(s);
            const long long rhs = h.path().area() + h.mu_sum();
            if (lhs != rhs) {
                bad = fail("2(2-13)+(31-2) of " + to_string(s) + " vs area+mu of " + history_str(h),
                           std::to_string(lhs), std::to_string(rhs));
            }
        });
        if (bad) return bad;
    }
    return std::nullopt;
}

// ACTION_EXPANSION: identity (9) over L_n plus orbit-size bookkeeping.
std::optional<Failure> check_action_expansion(int max_n) {
    for (int n = 0; n <= max_n; ++n) {
        QTPolynomial lhs;
        long long orbit_total = 0;
        for_each_history(n, [&](const LaguerreHistory& h) {
            const int tdeg = static_cast<int>(h.path().u_set().size() + h.path().l1_set().size());
            lhs.add_term(static_cast<int>(h.path().area() + h.mu_sum()), tdeg, 1);
            if (h.path().l1_set().empty()) {
                // h is the canonical orbit member; its orbit has 2^(#level) elements.
                orbit_total += 1LL << h.path().level_set().size();
            }
        });
        const QTPolynomial one_plus_t =
            QTPolynomial::constant(1) + QTPolynomial::monomial(0, 1);
        QTPolynomial rhs;
        for (int k = 0; k <= n / 2; ++k) {
            QTPolynomial inner;
            for (const LaguerreHistory& h : orbit_reps(n, k))
                inner.add_term(static_cast<int>(h.path().area() + h.mu_sum()), 0, 1);
            QTPolynomial term = inner * QTPolynomial::monomial(0, k);
            for (int i = 0; i < n - 2 * k; ++i) term = term * one_plus_t;
            rhs = rhs + term;
        }
        if (!(lhs == rhs)) {
            return fail("expansion (t,q) over L_" + std::to_string(n), to_string(rhs),
                        to_string(lhs));
        }
        const long long want = factorial(n + 1);
        if (orbit_total != want) {
            return fail("sum of orbit sizes over L_" + std::to_string(n), std::to_string(want),
                        std::to_string(orbit_total));
        }
    }
    return std::nullopt;
}

std::optional<Failure> check_gamma_nonneg(const GammaExpansion& g, const std::string& what) {
    for (std::size_t k = 0; k < g.gammas.size(); ++k) {
        for (long long c : g.gammas[k]) {
            if (c < 0) {
                return fail(what + " gamma_" + std::to_string(k), "nonnegative coefficients",
                            q_poly_to_string(g.gammas[k]));
            }
        }
    }
    return std::nullopt;
}

// THM_MAIN_GAMMA: expansion of the (inv,exc) q-Eulerian polynomial equals
// the DE model sums; includes the hard-coded n=4 display.
std::optional<Failure> check_thm_main_gamma(int max_n) {
    for (int n = 1; n <= max_n; ++n) {
        const GammaExpansion lhs = gamma_expand(qt_eulerian(n), n);
        const GammaExpansion rhs = gamma_de(n);
        if (!(lhs == rhs)) {
            return fail("gamma_expand(qt_eulerian(" + std::to_string(n) + ")) vs gamma_de",
                        to_string(rhs), to_string(lhs));
        }
        if (auto bad = check_gamma_nonneg(rhs, "gamma_de(" + std::to_string(n) + ")")) return bad;
        // t=1: sum gamma_k(1) 2^(n-1-2k) = n!.
        long long total = 0;
        for (std::size_t k = 0; k < rhs.gammas.size(); ++k) {
            long long g1 = 0;
            for (long long c : rhs.gammas[k]) g1 += c;
            total += g1 * (1LL << (n - 1 - 2 * static_cast<int>(k)));
        }
        if (total != factorial(n)) {
            return fail("t=1 specialization at n=" + std::to_string(n),
                        std::to_string(factorial(n)), std::to_string(total));
        }
    }
    if (max_n >= 4) {
        const GammaExpansion got = gamma_de(4);
        const GammaExpansion want{4, {{1}, {0, 2, 3, 2, 1}}};
        if (!(got == want)) {
            return fail("gamma_de(4) printed display", to_string(want), to_string(got));
        }
    }
    return std::nullopt;
}

// THM_SHIN_ZENG: descent-side expansion equals the DD model sums, and (13).
std::optional<Failure> check_thm_shin_zeng(int max_n) {
    for (int n = 1; n <= max_n; ++n) {
        const QTPolynomial descent = qt_descent_polynomial(n);
        if (!(descent == qt_eulerian(n))) {
            return fail("qt_descent_polynomial(" + std::to_string(n) + ") vs qt_eulerian",
                        to_string(qt_eulerian(n)), to_string(descent));
        }
        const GammaExpansion lhs = gamma_expand(descent, n);
        const GammaExpansion rhs = gamma_dd(n);
        if (!(lhs == rhs)) {
            return fail("gamma_expand(qt_descent_polynomial(" + std::to_string(n) +
                            ")) vs gamma_dd",
                        to_string(rhs), to_string(lhs));
        }
        if (auto bad = check_gamma_nonneg(rhs, "gamma_dd(" + std::to_string(n) + ")")) return bad;
    }
    return std::nullopt;
}

// EQUIDISTRIBUTION: des and exc are equidistributed over S_n.
std::optional<Failure> check_equidistribution(int max_n) {
    for (int n = 1; n <= max_n; ++n) {
        std::vector<long long> by_des(static_cast<std::size_t>(n), 0);
        std::vector<long long> by_exc(static_cast<std::size_t>(n), 0);
        for_each_permutation(n, [&](const Permutation& s) {
            ++by_des[static_cast<std::size_t>(des(s))];
            ++by_exc[static_cast<std::size_t>(exc(s))];
        });
        if (by_des != by_exc) {
            return fail("des vs exc distribution over S_" + std::to_string(n),
                        int_vec_str(std::vector<int>(by_exc.begin(), by_exc.end())),
                        int_vec_str(std::vector<int>(by_des.begin(), by_des.end())));
        }
    }
    return std::nullopt;
}

// TANGENT: both q-tangent expressions agree; even n vanish; odd n give the
// tangent numbers at q=1.
std::optional<Failure> check_tangent(int max_n) {
    for (int n = 1; n <= max_n; ++n) {
        const std::vector<long long> via_sign = q_tangent_via_sign(n);
        const std::vector<long long> via_de = q_tangent_via_de(n);
        if (via_sign != via_de) {
            return fail("q-tangent routes at n=" + std::to_string(n), q_poly_to_string(via_de),
                        q_poly_to_string(via_sign));
        }
        if (n % 2 == 0) {
            if (!via_sign.empty()) {
                return fail("signed sum at even n=" + std::to_string(n), "0",
                            q_poly_to_string(via_sign));
            }
            continue;
        }
        long long at_one = 0;
        for (long long c : via_sign) at_one += c;
        static const long long tangent_numbers[] = {1, 2, 16, 272, 7936};  // T_1..T_5
        const int k = (n - 1) / 2;  // value is (-1)^k T_{k+1}
        const long long want = ((k % 2 == 0) ? 1 : -1) * tangent_numbers[k];
        if (at_one != want) {
            return fail("q=1 tangent value at n=" + std::to_string(n), std::to_string(want),
                        std::to_string(at_one));
        }
    }
    return std::nullopt;
}

// DE_LISTS: golden data straight from the listings.
std::optional<Failure> check_de_lists(int max_n) {
    struct Golden {
        int n, k;
        std::vector<std::string> members;
    };
    static const std::vector<Golden> golden = {
        {4, 0, {"1234"}},
        {4, 1, {"1423", "1432", "3124", "3214", "4123", "4132", "4213", "4231"}},
        {5, 2,
         {"54231", "54213", "54123", "54132", "54312", "54321", "45231", "45213", "45123",
          "45132", "45312", "45321", "32541", "32514", "31524", "31542"}},
    };
    for (const Golden& g : golden) {
        if (g.n > max_n) continue;
        std::vector<std::string> want = g.members;
        std::sort(want.begin(), want.end());
        std::vector<std::string> got;
        for (const Permutation& s : family(g.n, Family::DE, g.k)) got.push_back(to_string(s));
        std::sort(got.begin(), got.end());
        if (got != want) {
            std::string ws, gs;
            for (const auto& x : want) ws += x + " ";
            for (const auto& x : got) gs += x + " ";
            return fail("DE_" + std::to_string(g.n) + "," + std::to_string(g.k), ws, gs);
        }
    }
    return std::nullopt;
}

struct RegisteredCheck {
    const char* name;
    CheckBody body;
};

const RegisteredCheck kRegistry[] = {
    {"CARDINALITY", check_cardinality},
    {"PHI_BIJECTION", check_phi_bijection},
    {"PHI_STATS", check_phi_stats},
    {"HEIGHT_CLAIM", check_height_claim},
    {"INV_DECOMP", check_inv_decomp},
    {"PSI_STATS", check_psi_stats},
    {"ACTION_EXPANSION", check_action_expansion},
    {"THM_MAIN_GAMMA", check_thm_main_gamma},
    {"THM_SHIN_ZENG", check_thm_shin_zeng},
    {"EQUIDISTRIBUTION", check_equidistribution},
    {"TANGENT", check_tangent},
    {"DE_LISTS", check_de_lists},
};

CheckReport run_registered(const RegisteredCheck& rc, int max_n) {
    CheckReport report;
    report.check_name = rc.name;
    report.n_lo = 1;
    report.n_hi = max_n;
    const auto start = std::chrono::steady_clock::now();
    std::optional<Failure> failure;
    try {
        failure = rc.body(max_n);
    } catch (const std::exception& e) {
        failure = Failure{Counterexample{"(exception)", "no exception", e.what()}};
    }
    const auto stop = std::chrono::steady_clock::now();
    report.elapsed_seconds = std::chrono::duration<double>(stop - start).count();
    report.pass = !failure.has_value();
    if (failure) report.counterexample = failure->ce;
    return report;
}

}  // namespace

std::vector<std::string> check_names() {
    std::vector<std::string> names;
    for (const RegisteredCheck& rc : kRegistry) names.emplace_back(rc.name);
    return names;
}

CheckReport run_check(const std::string& name, int max_n) {
    if (max_n < 1 || max_n > kMaxScanN) {
        throw SizeTooLarge("max_n = " + std::to_string(max_n) + " outside [1," +
                           std::to_string(kMaxScanN) + "]");
    }
    for (const RegisteredCheck& rc : kRegistry) {
        if (name == rc.name) return run_registered(rc, max_n);
    }
    throw UnknownCheck("no check named '" + name + "'");
}

std::vector<CheckReport> run_all(int max_n, int workers) {
    if (max_n < 1 || max_n > kMaxScanN) {
        throw SizeTooLarge("max_n = " + std::to_string(max_n) + " outside [1," +
                           std::to_string(kMaxScanN) + "]");
    }
    const std::size_t count = std::size(kRegistry);
    std::vector<CheckReport> reports(count);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) reports[i] = run_registered(kRegistry[i], max_n);
        return reports;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= count) return;
            reports[i] = run_registered(kRegistry[i], max_n);
        }
    };
    std::vector<std::thread> pool;
    const std::size_t threads = std::min<std::size_t>(static_cast<std::size_t>(workers), count);
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
    return reports;
}

nlohmann::json to_json(const CheckReport& r) {
    nlohmann::json j{{"check", r.check_name},
                     {"n_lo", r.n_lo},
                     {"n_hi", r.n_hi},
                     {"status", r.pass ? "PASS" : "FAIL"},
                     {"elapsed_seconds", r.elapsed_seconds}};
    if (r.counterexample) {
        j["counterexample"] = {{"input", r.counterexample->input},
                               {"expected", r.counterexample->expected},
                               {"actual", r.counterexample->actual}};
    }
    return j;
}

std::string summary_table(const std::vector<CheckReport>& reports) {
    std::ostringstream out;
    for (const CheckReport& r : reports) {
        out << (r.pass ? "PASS" : "FAIL") << "  " << r.check_name;
        for (std::size_t i = r.check_name.size(); i < 18; ++i) out << ' ';
        out << " n<=" << r.n_hi;
        char buf[32];
        std::snprintf(buf, sizeof buf, "  %8.3fs", r.elapsed_seconds);
        out << buf;
        if (r.counterexample) {
            out << "\n      input:    " << r.counterexample->input
                << "\n      expected: " << r.counterexample->expected
                << "\n      actual:   " << r.counterexample->actual;
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace lhist
