#include "lhist/bijection.hpp"

#include <algorithm>
#include <atomic>

namespace lhist {

namespace {
std::atomic<bool> corrupt_phi_mu{false};
}

void set_phi_mu_corruption(bool enabled) { corrupt_phi_mu.store(enabled); }
bool phi_mu_corruption_enabled() { return corrupt_phi_mu.load(); }

LaguerreHistory phi(const Permutation& s) {
    const int n = s.size();
    const std::vector<int> v = val_vector(s);
    const std::vector<int> p = pos_vector(s);

    std::vector<Step> steps(static_cast<std::size_t>(n) - 1);
    std::vector<int> mu(static_cast<std::size_t>(n) - 1);
    for (int i = 1; i < n; ++i) {
        const int vi1 = v[static_cast<std::size_t>(i)];      // v_{i+1}
        const int pi = p[static_cast<std::size_t>(i) - 1];   // p_i
        Step st;
        if (vi1 == 0 && pi == 1)
            st = Step::U;
        else if (vi1 == 1 && pi == 0)
            st = Step::D;
        else if (vi1 == 1 && pi == 1)
            st = Step::L1;
        else
            st = Step::L0;
        steps[static_cast<std::size_t>(i) - 1] = st;
        mu[static_cast<std::size_t>(i) - 1] = static_cast<int>(nest_k(s, i));
    }

    try {
        TwoMotzkinPath w(std::move(steps));
        if (corrupt_phi_mu.load()) {
            const std::vector<int> hs = w.heights();
            for (std::size_t i = 0; i < hs.size(); ++i) {
                if (hs[i] >= 1) {
                    mu[i] = (mu[i] + 1) % (hs[i] + 1);
                    break;
                }
            }
        }
        return LaguerreHistory(std::move(w), std::move(mu));
    } catch (const std::exception& e) {
        throw InternalInconsistency(std::string("phi produced an invalid history for ") +
                                    to_string(s) + ": " + e.what());
    }
}

Permutation phi_inverse(const LaguerreHistory& h) {
    const int n = h.size() + 1;
    // Rebuild v, p, mu of length n; index n carries the forced values.
    std::vector<int> v(static_cast<std::size_t>(n), 0);
    std::vector<int> p(static_cast<std::size_t>(n), 0);
    std::vector<int> mu(static_cast<std::size_t>(n), 0);
    for (int i = 1; i < n; ++i) {
        switch (h.path().step(i)) {
            case Step::U: v[static_cast<std::size_t>(i)] = 0; p[static_cast<std::size_t>(i) - 1] = 1; break;
            case Step::D: v[static_cast<std::size_t>(i)] = 1; p[static_cast<std::size_t>(i) - 1] = 0; break;
            case Step::L1: v[static_cast<std::size_t>(i)] = 1; p[static_cast<std::size_t>(i) - 1] = 1; break;
            case Step::L0: v[static_cast<std::size_t>(i)] = 0; p[static_cast<std::size_t>(i) - 1] = 0; break;
        }
        mu[static_cast<std::size_t>(i) - 1] = h.mu()[static_cast<std::size_t>(i) - 1];
    }

    if (std::count(v.begin(), v.end(), 0) != std::count(p.begin(), p.end(), 0)) {
        throw InternalInconsistency("reconstructed val/pos vectors have unequal zero counts");
    }

    std::vector<int> word(static_cast<std::size_t>(n), 0);

    // Non-excedance positions, left to right: take the (mu_k+1)-th smallest
    // unused value with v-flag 0.
    std::vector<int> v0;
    for (int i = 1; i <= n; ++i)
        if (v[static_cast<std::size_t>(i) - 1] == 0) v0.push_back(i);
    for (int k = 1; k <= n; ++k) {
        if (p[static_cast<std::size_t>(k) - 1] != 0) continue;
        const std::size_t rank = static_cast<std::size_t>(mu[static_cast<std::size_t>(k) - 1]);
        if (rank >= v0.size()) {
            throw InternalInconsistency("no rank-" + std::to_string(rank) +
                                        " value left at position " + std::to_string(k));
        }
        word[static_cast<std::size_t>(k) - 1] = v0[rank];
        v0.erase(v0.begin() + static_cast<std::ptrdiff_t>(rank));
    }

    // Excedance positions, right to left: take the (mu_k+1)-th greatest
    // unused value with v-flag 1.
    std::vector<int> v1;
    for (int i = n; i >= 1; --i)
        if (v[static_cast<std::size_t>(i) - 1] == 1) v1.push_back(i);  // descending
    for (int k = n; k >= 1; --k) {
        if (p[static_cast<std::size_t>(k) - 1] != 1) continue;
        const std::size_t rank = static_cast<std::size_t>(mu[static_cast<std::size_t>(k) - 1]);
        if (rank >= v1.size()) {
            throw InternalInconsistency("no rank-" + std::to_string(rank) +
                                        " value left at position " + std::to_string(k));
        }
        word[static_cast<std::size_t>(k) - 1] = v1[rank];
        v1.erase(v1.begin() + static_cast<std::ptrdiff_t>(rank));
    }

    return Permutation(std::move(word));
}

LaguerreHistory psi(const Permutation& s) {
    const int n = s.size();
    const Permutation si = s.inverse();

    std::vector<Step> steps(static_cast<std::size_t>(n) - 1);
    std::vector<int> mu(static_cast<std::size_t>(n) - 1);
    for (int i = 1; i < n; ++i) {  // i is the VALUE being classified
        const int j = si(i);
        const int left = s(j - 1);
        const int right = s(j + 1);
        Step st;
        if (left > i && i < right)
            st = Step::U;
        else if (left < i && i > right)
            st = Step::D;
        else if (left > i && i > right)
            st = Step::L1;
        else
            st = Step::L0;
        steps[static_cast<std::size_t>(i) - 1] = st;
        mu[static_cast<std::size_t>(i) - 1] = static_cast<int>(pattern_2_13_at(s, i));
    }

    try {
        return LaguerreHistory(TwoMotzkinPath(std::move(steps)), std::move(mu));
    } catch (const std::exception& e) {
        throw InternalInconsistency(std::string("psi produced an invalid history for ") +
                                    to_string(s) + ": " + e.what());
    }
}

Permutation psi_inverse(const LaguerreHistory& h) {
    const int n = h.size() + 1;
    // Word under construction; 0 marks a gap still to be filled with larger
    // values.  Invariant: #gaps before inserting value i equals h_i + 1.
    std::vector<int> word{0};
    for (int i = 1; i < n; ++i) {
        std::vector<std::size_t> gaps;
        for (std::size_t k = 0; k < word.size(); ++k)
            if (word[k] == 0) gaps.push_back(k);
        const std::size_t m = static_cast<std::size_t>(h.mu()[static_cast<std::size_t>(i) - 1]);
        if (m >= gaps.size()) {
            throw NotInImage("mu_" + std::to_string(i) + " selects a missing gap");
        }
        // mu_i counts gaps strictly to the right of the insertion point.
        const std::size_t g = gaps[gaps.size() - 1 - m];
        switch (h.path().step(i)) {
            case Step::U:
                word[g] = i;
                word.insert(word.begin() + static_cast<std::ptrdiff_t>(g) + 1, 0);
                word.insert(word.begin() + static_cast<std::ptrdiff_t>(g), 0);
                break;
            case Step::D:
                word[g] = i;
                break;
            case Step::L1:
                word[g] = i;
                word.insert(word.begin() + static_cast<std::ptrdiff_t>(g), 0);
                break;
            case Step::L0:
                word[g] = i;
                word.insert(word.begin() + static_cast<std::ptrdiff_t>(g) + 1, 0);
                break;
        }
    }
    std::size_t last_gap = word.size();
    std::size_t gap_count = 0;
    for (std::size_t k = 0; k < word.size(); ++k)
        if (word[k] == 0) {
            last_gap = k;
            ++gap_count;
        }
    if (gap_count != 1) {
        throw NotInImage("expected a single gap for the maximum value, found " +
                         std::to_string(gap_count));
    }
    word[last_gap] = n;
    return Permutation(std::move(word));
}

}  // namespace lhist
