// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure.  argv[1] is the path to the CLI binary (used for the criteria
// that exercise the command-line surface and exit codes).

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "lhist/bijection.hpp"
#include "lhist/gamma.hpp"
#include "lhist/laguerre.hpp"
#include "lhist/perm.hpp"
#include "lhist/verify.hpp"

namespace {

std::string g_cli;
int g_failures = 0;

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void criterion(int number, const std::string& what, const std::function<bool(std::string&)>& fn) {
    std::string detail;
    bool ok = false;
    try {
        ok = fn(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << number << ": " << what;
    if (!detail.empty()) std::cout << " [" << detail << "]";
    std::cout << std::endl;
    if (!ok) ++g_failures;
}

struct CommandResult {
    int exit_code;
    std::string output;
};

CommandResult run_cli(const std::string& args) {
    const std::string cmd = g_cli + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {-1, "popen failed"};
    std::string out;
    char buf[4096];
    while (std::size_t got = fread(buf, 1, sizeof buf, pipe)) out.append(buf, got);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

long long factorial(int n) {
    long long f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

using namespace lhist;

bool c1_worked_example(std::string& detail) {
    const auto start = std::chrono::steady_clock::now();
    const LaguerreHistory h = phi(parse_permutation("432189765"));
    const Permutation back = phi_inverse(h);
    const double elapsed = seconds_since(start);
    if (to_string(h.path()) != "U1D0UUDD" || mu_to_string(h.mu()) != "0,1,1,0,0,0,2,1" ||
        to_string(back) != "432189765") {
        detail = "got path " + to_string(h.path()) + " mu " + mu_to_string(h.mu());
        return false;
    }
    if (elapsed >= 0.001) {
        detail = "took " + std::to_string(elapsed) + "s, limit 1 ms";
        return false;
    }
    const CommandResult fwd = run_cli("map phi 432189765");
    if (fwd.exit_code != 0 || fwd.output.find("U1D0UUDD") == std::string::npos ||
        fwd.output.find("0,1,1,0,0,0,2,1") == std::string::npos) {
        detail = "cli map phi output: " + fwd.output;
        return false;
    }
    const CommandResult inv_res = run_cli("map phi-inv --path U1D0UUDD --mu 0,1,1,0,0,0,2,1");
    if (inv_res.exit_code != 0 || inv_res.output.find("432189765") == std::string::npos) {
        detail = "cli map phi-inv output: " + inv_res.output;
        return false;
    }
    return true;
}

bool c2_cardinality(std::string& detail) {
    const auto start = std::chrono::steady_clock::now();
    static const long long want[] = {1, 2, 6, 24, 120, 720, 5040};
    for (int n = 0; n <= 6; ++n) {
        long long count = 0;
        for_each_history(n, [&](const LaguerreHistory&) { ++count; });
        if (count != want[n]) {
            detail = "|L_" + std::to_string(n) + "| = " + std::to_string(count);
            return false;
        }
    }
    const double elapsed = seconds_since(start);
    if (elapsed >= 1.0) {
        detail = "took " + std::to_string(elapsed) + "s, limit 1 s";
        return false;
    }
    return true;
}

bool c3_bijection_suite(std::string& detail) {
    const auto start = std::chrono::steady_clock::now();
    for (int n = 1; n <= 7; ++n) {
        std::set<LaguerreHistory> phi_images, psi_images;
        bool ok = true;
        for_each_permutation(n, [&](const Permutation& s) {
            if (!ok) return;
            const LaguerreHistory hp = phi(s);
            const LaguerreHistory hq = psi(s);
            if (!(phi_inverse(hp) == s) || !(psi_inverse(hq) == s)) {
                detail = "round-trip failed on " + to_string(s);
                ok = false;
                return;
            }
            phi_images.insert(hp);
            psi_images.insert(hq);
        });
        if (!ok) return false;
        if ((long long)phi_images.size() != factorial(n) ||
            (long long)psi_images.size() != factorial(n)) {
            detail = "images not distinct/covering at n=" + std::to_string(n);
            return false;
        }
    }
    const double elapsed = seconds_since(start);
    if (elapsed >= 5.0) {
        detail = "took " + std::to_string(elapsed) + "s, limit 5 s";
        return false;
    }
    return true;
}

bool c4_phi_statistics(std::string& detail) {
    const auto start = std::chrono::steady_clock::now();
    for (int n = 1; n <= 8; ++n) {
        bool ok = true;
        for_each_permutation(n, [&](const Permutation& s) {
            if (!ok) return;
            const LaguerreHistory h = phi(s);
            std::vector<int> merged = h.path().u_set();
            const std::vector<int> l1 = h.path().l1_set();
            merged.insert(merged.end(), l1.begin(), l1.end());
            std::sort(merged.begin(), merged.end());
            if (merged != exc_set(s) || inv(s) - exc(s) != h.path().area() + h.mu_sum()) {
                detail = "statistic transport failed on " + to_string(s);
                ok = false;
                return;
            }
            for (int i = 1; i < n; ++i) {
                if (h.path().height(i) != cros_k(s, i) + nest_k(s, i)) {
                    detail = "height claim failed on " + to_string(s) + " at i=" +
                             std::to_string(i);
                    ok = false;
                    return;
                }
            }
        });
        if (!ok) return false;
    }
    const double elapsed = seconds_since(start);
    if (elapsed >= 30.0) {
        detail = "took " + std::to_string(elapsed) + "s, limit 30 s";
        return false;
    }
    return true;
}

bool c5_theorem_main(std::string& detail) {
    const auto start = std::chrono::steady_clock::now();
    for (int n = 1; n <= 8; ++n) {
        if (!(gamma_expand(qt_eulerian(n), n) == gamma_de(n))) {
            detail = "mismatch at n=" + std::to_string(n);
            return false;
        }
    }
    const GammaExpansion g4 = gamma_de(4);
    if (!(g4.gammas == std::vector<std::vector<long long>>{{1}, {0, 2, 3, 2, 1}})) {
        detail = "n=4 display mismatch: " + to_string(g4);
        return false;
    }
    const double elapsed = seconds_since(start);
    if (elapsed >= 60.0) {
        detail = "took " + std::to_string(elapsed) + "s, limit 60 s";
        return false;
    }
    return true;
}

bool c6_theorem_shin_zeng(std::string& detail) {
    const auto start = std::chrono::steady_clock::now();
    for (int n = 1; n <= 7; ++n) {
        const QTPolynomial descent = qt_descent_polynomial(n);
        if (!(descent == qt_eulerian(n))) {
            detail = "(13) fails at n=" + std::to_string(n);
            return false;
        }
        if (!(gamma_expand(descent, n) == gamma_dd(n))) {
            detail = "expansion mismatch at n=" + std::to_string(n);
            return false;
        }
    }
    const double elapsed = seconds_since(start);
    if (elapsed >= 10.0) {
        detail = "took " + std::to_string(elapsed) + "s, limit 10 s";
        return false;
    }
    return true;
}

bool c7_corollaries(std::string& detail) {
    for (int n = 2; n <= 8; n += 2) {
        if (!q_tangent_via_sign(n).empty()) {
            detail = "signed sum nonzero at even n=" + std::to_string(n);
            return false;
        }
    }
    static const long long magnitudes[] = {0, 0, 0, 2, 0, 16, 0, 272};  // index = n
    for (int n = 1; n <= 7; n += 2) {
        const std::vector<long long> a = q_tangent_via_sign(n);
        const std::vector<long long> b = q_tangent_via_de(n);
        if (a != b) {
            detail = "routes disagree at n=" + std::to_string(n);
            return false;
        }
        if (n >= 3) {
            long long at1 = 0;
            for (long long c : a) at1 += c;
            if (std::abs(at1) != magnitudes[n]) {
                detail = "q=1 value " + std::to_string(at1) + " at n=" + std::to_string(n);
                return false;
            }
        }
    }
    return true;
}

bool c8_golden_sets(std::string& detail) {
    const CheckReport r = run_check("DE_LISTS", 5);
    if (!r.pass && r.counterexample) detail = r.counterexample->input;
    return r.pass;
}

bool c9_action_expansion(std::string& detail) {
    const CheckReport r = run_check("ACTION_EXPANSION", 6);
    if (!r.pass && r.counterexample) detail = r.counterexample->input;
    return r.pass;
}

bool c10_harness_self_test(std::string& detail) {
    const CommandResult res = run_cli("verify PHI_STATS --max-n 4 --corrupt-phi-mu");
    if (res.exit_code != 2) {
        detail = "exit code " + std::to_string(res.exit_code) + ", expected 2";
        return false;
    }
    if (res.output.find("FAIL") == std::string::npos ||
        res.output.find("input:") == std::string::npos) {
        detail = "no counterexample in output: " + res.output;
        return false;
    }
    // the counterexample must be replayable: it names a concrete permutation
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: acceptance <path-to-cli>\n";
        return 2;
    }
    g_cli = argv[1];

    criterion(1, "worked example through phi and back", c1_worked_example);
    criterion(2, "|L_n| = (n+1)! for n = 0..6", c2_cardinality);
    criterion(3, "phi/psi round-trip and cover L_{n-1}, n <= 7", c3_bijection_suite);
    criterion(4, "statistic transport and height claim, n <= 8", c4_phi_statistics);
    criterion(5, "q-gamma expansion equals DE model sums, n <= 8", c5_theorem_main);
    criterion(6, "descent-side expansion equals DD model sums, n <= 7", c6_theorem_shin_zeng);
    criterion(7, "q-tangent corollaries and T-values", c7_corollaries);
    criterion(8, "golden DE sets match the published listings", c8_golden_sets);
    criterion(9, "level-toggle action expansion over L_n, n <= 6", c9_action_expansion);
    criterion(10, "harness self-test: corrupted phi fails with exit 2", c10_harness_self_test);

    if (g_failures) {
        std::cout << g_failures << " criterion(s) failed" << std::endl;
        return 1;
    }
    std::cout << "all criteria passed" << std::endl;
    return 0;
}
