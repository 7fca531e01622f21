#include "lhist/laguerre.hpp"

#include <algorithm>

namespace lhist {

TwoMotzkinPath::TwoMotzkinPath(std::vector<Step> steps) : steps_(std::move(steps)) {
    int h = 0;
    for (std::size_t i = 0; i < steps_.size(); ++i) {
        if (steps_[i] == Step::U) ++h;
        if (steps_[i] == Step::D) --h;
        if (h < 0) throw PathBelowAxis("path dips below the axis after step " +
                                       std::to_string(i + 1));
    }
    if (h != 0) throw PathNotClosed("path ends at height " + std::to_string(h));
}

Step TwoMotzkinPath::step(int i) const {
    if (i < 1 || i > size()) throw IndexOutOfRange("step index " + std::to_string(i));
    return steps_[static_cast<std::size_t>(i) - 1];
}

int TwoMotzkinPath::height(int i) const {
    if (i < 1 || i > size()) throw IndexOutOfRange("height index " + std::to_string(i));
    int h = 0;
    for (int j = 1; j < i; ++j) {
        if (steps_[static_cast<std::size_t>(j) - 1] == Step::U) ++h;
        if (steps_[static_cast<std::size_t>(j) - 1] == Step::D) --h;
    }
    return h;
}

std::vector<int> TwoMotzkinPath::heights() const {
    std::vector<int> hs(steps_.size());
    int h = 0;
    for (std::size_t i = 0; i < steps_.size(); ++i) {
        hs[i] = h;
        if (steps_[i] == Step::U) ++h;
        if (steps_[i] == Step::D) --h;
    }
    return hs;
}

long long TwoMotzkinPath::area() const {
    long long a = 0;
    for (int h : heights()) a += h;
    return a;
}

std::vector<int> TwoMotzkinPath::u_set() const {
    std::vector<int> out;
    for (int i = 1; i <= size(); ++i)
        if (steps_[static_cast<std::size_t>(i) - 1] == Step::U) out.push_back(i);
    return out;
}

std::vector<int> TwoMotzkinPath::l1_set() const {
    std::vector<int> out;
    for (int i = 1; i <= size(); ++i)
        if (steps_[static_cast<std::size_t>(i) - 1] == Step::L1) out.push_back(i);
    return out;
}

std::vector<int> TwoMotzkinPath::level_set() const {
    std::vector<int> out;
    for (int i = 1; i <= size(); ++i)
        if (is_level(steps_[static_cast<std::size_t>(i) - 1])) out.push_back(i);
    return out;
}

LaguerreHistory::LaguerreHistory(TwoMotzkinPath path, std::vector<int> mu)
    : path_(std::move(path)), mu_(std::move(mu)) {
    if (static_cast<int>(mu_.size()) != path_.size()) {
        throw MuOutOfRange("mu has length " + std::to_string(mu_.size()) + ", path has length " +
                               std::to_string(path_.size()),
                           0);
    }
    const std::vector<int> hs = path_.heights();
    for (int i = 1; i <= path_.size(); ++i) {
        const int m = mu_[static_cast<std::size_t>(i) - 1];
        const int h = hs[static_cast<std::size_t>(i) - 1];
        if (m < 0 || m > h) {
            throw MuOutOfRange("mu_" + std::to_string(i) + " = " + std::to_string(m) +
                                   " not in [0," + std::to_string(h) + "]",
                               i);
        }
    }
}

long long LaguerreHistory::mu_sum() const {
    long long s = 0;
    for (int m : mu_) s += m;
    return s;
}

LaguerreHistory toggle(const LaguerreHistory& h, int i) {
    if (i < 1 || i > h.size()) throw IndexOutOfRange("toggle index " + std::to_string(i));
    std::vector<Step> steps = h.path().steps();
    Step& s = steps[static_cast<std::size_t>(i) - 1];
    if (s == Step::L0)
        s = Step::L1;
    else if (s == Step::L1)
        s = Step::L0;
    else
        return h;
    return LaguerreHistory(TwoMotzkinPath(std::move(steps)), h.mu());
}

LaguerreHistory act(const LaguerreHistory& h, const std::vector<int>& indices) {
    LaguerreHistory out = h;
    for (int i : indices) out = toggle(out, i);
    return out;
}

std::vector<LaguerreHistory> orbit(const LaguerreHistory& h) {
    const std::vector<int> levels = h.path().level_set();
    std::vector<LaguerreHistory> out;
    const std::size_t m = levels.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
        std::vector<int> subset;
        for (std::size_t b = 0; b < m; ++b)
            if (mask & (std::size_t{1} << b)) subset.push_back(levels[b]);
        out.push_back(act(h, subset));
    }
    std::sort(out.begin(), out.end());
    return out;
}

LaguerreHistory canonical(const LaguerreHistory& h) {
    std::vector<Step> steps = h.path().steps();
    for (Step& s : steps)
        if (s == Step::L1) s = Step::L0;
    return LaguerreHistory(TwoMotzkinPath(std::move(steps)), h.mu());
}

namespace {

// Paths in lex order over U < D < L0 < L1, extended one step at a time.
void gen_paths(int n, int pos, int height, std::vector<Step>& acc,
               const std::function<void(const TwoMotzkinPath&)>& fn) {
    if (pos == n) {
        if (height == 0) fn(TwoMotzkinPath(acc));
        return;
    }
    const int remaining = n - pos;
    for (Step s : {Step::U, Step::D, Step::L0, Step::L1}) {
        int h2 = height;
        if (s == Step::U) ++h2;
        if (s == Step::D) --h2;
        if (h2 < 0 || h2 > remaining - 1) continue;  // cannot close from here
        acc.push_back(s);
        gen_paths(n, pos + 1, h2, acc, fn);
        acc.pop_back();
    }
}

// mu vectors in lex order (last coordinate fastest).
void for_each_mu(const TwoMotzkinPath& w, const std::function<void(const std::vector<int>&)>& fn) {
    const std::vector<int> hs = w.heights();
    std::vector<int> mu(hs.size(), 0);
    while (true) {
        fn(mu);
        int i = static_cast<int>(mu.size()) - 1;
        while (i >= 0 && mu[static_cast<std::size_t>(i)] == hs[static_cast<std::size_t>(i)]) {
            mu[static_cast<std::size_t>(i)] = 0;
            --i;
        }
        if (i < 0) break;
        ++mu[static_cast<std::size_t>(i)];
    }
}

}  // namespace

void for_each_history(int n, const std::function<void(const LaguerreHistory&)>& fn) {
    if (n < 0) throw InvalidFamilyParams("n must be >= 0, got " + std::to_string(n));
    std::vector<Step> acc;
    acc.reserve(static_cast<std::size_t>(n));
    gen_paths(n, 0, 0, acc, [&](const TwoMotzkinPath& w) {
        for_each_mu(w, [&](const std::vector<int>& mu) { fn(LaguerreHistory(w, mu)); });
    });
}

std::vector<LaguerreHistory> all_histories(int n) {
    std::vector<LaguerreHistory> out;
    for_each_history(n, [&](const LaguerreHistory& h) { out.push_back(h); });
    return out;
}

std::vector<LaguerreHistory> orbit_reps(int n, int k) {
    if (n < 0 || k < 0 || k > n / 2) {
        throw InvalidFamilyParams("k = " + std::to_string(k) + " not in [0," +
                                  std::to_string(n / 2) + "]");
    }
    std::vector<LaguerreHistory> out;
    std::vector<Step> acc;
    acc.reserve(static_cast<std::size_t>(n));
    gen_paths(n, 0, 0, acc, [&](const TwoMotzkinPath& w) {
        if (!w.l1_set().empty()) return;
        if (static_cast<int>(w.u_set().size()) != k) return;
        for_each_mu(w, [&](const std::vector<int>& mu) { out.emplace_back(w, mu); });
    });
    return out;
}

TwoMotzkinPath parse_path(const std::string& text) {
    std::vector<Step> steps;
    steps.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        switch (text[i]) {
            case 'U': steps.push_back(Step::U); break;
            case 'D': steps.push_back(Step::D); break;
            case '0': steps.push_back(Step::L0); break;
            case '1': steps.push_back(Step::L1); break;
            default:
                throw ParseError(std::string("expected U, D, 0 or 1, got '") + text[i] + "'", i);
        }
    }
    return TwoMotzkinPath(std::move(steps));
}

std::string to_string(const TwoMotzkinPath& w) {
    std::string out;
    out.reserve(static_cast<std::size_t>(w.size()));
    for (Step s : w.steps()) {
        switch (s) {
            case Step::U: out += 'U'; break;
            case Step::D: out += 'D'; break;
            case Step::L0: out += '0'; break;
            case Step::L1: out += '1'; break;
        }
    }
    return out;
}

std::vector<int> parse_mu(const std::string& text) {
    std::vector<int> mu;
    if (text.empty()) return mu;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string tok =
            text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        if (tok.empty()) throw ParseError("empty mu entry", pos);
        std::size_t used = 0;
        int v;
        try {
            v = std::stoi(tok, &used);
        } catch (const std::exception&) {
            throw ParseError("not an integer: '" + tok + "'", pos);
        }
        if (used != tok.size()) throw ParseError("trailing junk in '" + tok + "'", pos + used);
        mu.push_back(v);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return mu;
}

std::string mu_to_string(const std::vector<int>& mu) {
    std::string out;
    for (std::size_t i = 0; i < mu.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(mu[i]);
    }
    return out;
}

}  // namespace lhist
