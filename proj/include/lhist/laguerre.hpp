#pragma once

#include <functional>
#include <string>
#include <vector>

#include "lhist/errors.hpp"

namespace lhist {

enum class Step : unsigned char { U, D, L0, L1 };

inline bool is_level(Step s) { return s == Step::L0 || s == Step::L1; }

/// A Motzkin path with two-colored level steps, as a word over {U,D,L0,L1}.
/// Stays weakly above the axis and returns to it.  Length 0 is allowed.
class TwoMotzkinPath {
public:
    TwoMotzkinPath() = default;

    /// Throws PathBelowAxis or PathNotClosed.
    explicit TwoMotzkinPath(std::vector<Step> steps);

    int size() const { return static_cast<int>(steps_.size()); }
    Step step(int i) const;  // 1-based
    const std::vector<Step>& steps() const { return steps_; }

    /// Height before step i: #U minus #D among steps strictly before i.
    /// h(1) = 0 always.
    int height(int i) const;
    std::vector<int> heights() const;

    /// Sum of the step heights.
    long long area() const;

    std::vector<int> u_set() const;
    std::vector<int> l1_set() const;
    std::vector<int> level_set() const;

    bool operator==(const TwoMotzkinPath&) const = default;
    bool operator<(const TwoMotzkinPath& o) const { return steps_ < o.steps_; }

private:
    std::vector<Step> steps_;
};

/// A 2-Motzkin path together with a vector mu, 0 <= mu_i <= h_i.
class LaguerreHistory {
public:
    LaguerreHistory() = default;

    /// Throws MuOutOfRange (with the offending 1-based index) if some
    /// mu_i violates 0 <= mu_i <= h_i, or if mu length differs from the path.
    LaguerreHistory(TwoMotzkinPath path, std::vector<int> mu);

    int size() const { return path_.size(); }
    const TwoMotzkinPath& path() const { return path_; }
    const std::vector<int>& mu() const { return mu_; }
    long long mu_sum() const;

    bool operator==(const LaguerreHistory&) const = default;
    bool operator<(const LaguerreHistory& o) const {
        return path_ < o.path_ || (path_ == o.path_ && mu_ < o.mu_);
    }

private:
    TwoMotzkinPath path_;
    std::vector<int> mu_;
};

// ---- Z_2^n level-toggle action ---------------------------------------------

/// phi_i: flips the label of step i if it is a level step, identity otherwise.
LaguerreHistory toggle(const LaguerreHistory& h, int i);

/// phi_S: composite of toggles over S (order-independent).  S uses 1-based
/// indices; throws IndexOutOfRange for any index outside [1,n].
LaguerreHistory act(const LaguerreHistory& h, const std::vector<int>& indices);

/// The full orbit under the action, sorted; size 2^(#level steps).
std::vector<LaguerreHistory> orbit(const LaguerreHistory& h);

/// The unique orbit member with all level steps labelled L0.
LaguerreHistory canonical(const LaguerreHistory& h);

// ---- enumeration -----------------------------------------------------------

/// All Laguerre histories of length n, paths in lexicographic order over
/// U < D < L0 < L1 and mu in lexicographic order within each path.
/// n = 0 yields the single empty history.
void for_each_history(int n, const std::function<void(const LaguerreHistory&)>& fn);
std::vector<LaguerreHistory> all_histories(int n);

/// Orbit representatives with exactly k up steps: all level steps L0,
/// #U = k.  Throws InvalidFamilyParams unless 0 <= k <= floor(n/2).
std::vector<LaguerreHistory> orbit_reps(int n, int k);

// ---- text format -----------------------------------------------------------

/// One character per step: 'U', 'D', '0' (=L0), '1' (=L1).
TwoMotzkinPath parse_path(const std::string& text);
std::string to_string(const TwoMotzkinPath& w);

/// Comma-separated integers, e.g. "0,1,1,0,0,0,2,1"; empty string for n = 0.
std::vector<int> parse_mu(const std::string& text);
std::string mu_to_string(const std::vector<int>& mu);

}  // namespace lhist
