#include "lhist/gamma.hpp"

#include <algorithm>

namespace lhist {

long long checked_add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r)) throw Overflow("integer addition overflow");
    return r;
}

long long checked_mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r)) throw Overflow("integer multiplication overflow");
    return r;
}

QTPolynomial QTPolynomial::constant(long long c) { return monomial(0, 0, c); }

QTPolynomial QTPolynomial::monomial(int qdeg, int tdeg, long long c) {
    QTPolynomial p;
    p.add_term(qdeg, tdeg, c);
    return p;
}

long long QTPolynomial::coeff(int qdeg, int tdeg) const {
    auto it = terms_.find({qdeg, tdeg});
    return it == terms_.end() ? 0 : it->second;
}

void QTPolynomial::add_term(int qdeg, int tdeg, long long c) {
    if (qdeg < 0 || tdeg < 0) throw InternalInconsistency("negative degree in QTPolynomial");
    if (c == 0) return;
    const Key key{qdeg, tdeg};
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, c);
    } else {
        it->second = checked_add(it->second, c);
        if (it->second == 0) terms_.erase(it);
    }
}

int QTPolynomial::t_degree() const {
    int d = -1;
    for (const auto& [key, c] : terms_) d = std::max(d, key.second);
    return d;
}

int QTPolynomial::q_degree() const {
    int d = -1;
    for (const auto& [key, c] : terms_) d = std::max(d, key.first);
    return d;
}

QTPolynomial QTPolynomial::operator+(const QTPolynomial& o) const {
    QTPolynomial r = *this;
    for (const auto& [key, c] : o.terms_) r.add_term(key.first, key.second, c);
    return r;
}

QTPolynomial QTPolynomial::operator-(const QTPolynomial& o) const {
    QTPolynomial r = *this;
    for (const auto& [key, c] : o.terms_) r.add_term(key.first, key.second, checked_mul(c, -1));
    return r;
}

QTPolynomial QTPolynomial::operator*(const QTPolynomial& o) const {
    QTPolynomial r;
    for (const auto& [ka, ca] : terms_)
        for (const auto& [kb, cb] : o.terms_)
            r.add_term(ka.first + kb.first, ka.second + kb.second, checked_mul(ca, cb));
    return r;
}

QTPolynomial QTPolynomial::eval_t(long long t0) const {
    QTPolynomial r;
    for (const auto& [key, c] : terms_) {
        long long pow = 1;
        for (int e = 0; e < key.second; ++e) pow = checked_mul(pow, t0);
        r.add_term(key.first, 0, checked_mul(c, pow));
    }
    return r;
}

std::vector<long long> QTPolynomial::t_coefficient(int k) const {
    std::vector<long long> c;
    for (const auto& [key, v] : terms_) {
        if (key.second != k) continue;
        if (static_cast<std::size_t>(key.first) >= c.size())
            c.resize(static_cast<std::size_t>(key.first) + 1, 0);
        c[static_cast<std::size_t>(key.first)] = v;
    }
    return c;
}

QTPolynomial QTPolynomial::from_q_coeffs(const std::vector<long long>& c) {
    QTPolynomial p;
    for (std::size_t j = 0; j < c.size(); ++j) p.add_term(static_cast<int>(j), 0, c[j]);
    return p;
}

QTPolynomial GammaExpansion::reconstruct() const {
    const QTPolynomial one_plus_t = QTPolynomial::constant(1) + QTPolynomial::monomial(0, 1);
    QTPolynomial total;
    for (std::size_t k = 0; k < gammas.size(); ++k) {
        QTPolynomial term = QTPolynomial::from_q_coeffs(gammas[k]) *
                            QTPolynomial::monomial(0, static_cast<int>(k));
        const int e = n - 1 - 2 * static_cast<int>(k);
        for (int i = 0; i < e; ++i) term = term * one_plus_t;
        total = total + term;
    }
    return total;
}

namespace {

void check_scan_size(int n) {
    if (n < 1 || n > kMaxScanN) {
        throw SizeTooLarge("n = " + std::to_string(n) + " outside supported range [1," +
                           std::to_string(kMaxScanN) + "]");
    }
}

long long de_weight(const Permutation& s) { return inv(s) - exc(s); }
long long dd_weight(const Permutation& s) { return 2 * pattern_2_13(s) + pattern_31_2(s); }

}  // namespace

QTPolynomial qt_eulerian(int n) {
    check_scan_size(n);
    QTPolynomial p;
    for_each_permutation(n, [&](const Permutation& s) {
        p.add_term(static_cast<int>(de_weight(s)), static_cast<int>(exc(s)), 1);
    });
    return p;
}

QTPolynomial qt_descent_polynomial(int n) {
    check_scan_size(n);
    QTPolynomial p;
    for_each_permutation(n, [&](const Permutation& s) {
        p.add_term(static_cast<int>(dd_weight(s)), static_cast<int>(des(s)), 1);
    });
    return p;
}

GammaExpansion gamma_expand(const QTPolynomial& p, int n) {
    if (p.t_degree() > n - 1) {
        throw NotGammaExpandable("t-degree " + std::to_string(p.t_degree()) + " exceeds n-1 = " +
                                 std::to_string(n - 1));
    }
    const QTPolynomial one_plus_t = QTPolynomial::constant(1) + QTPolynomial::monomial(0, 1);

    GammaExpansion out;
    out.n = n;
    QTPolynomial rest = p;
    int d = n - 1;  // current basis exponent
    while (!rest.is_zero()) {
        if (d < 0) throw NotGammaExpandable("nonzero remainder after peeling all layers");
        const std::vector<long long> g = rest.t_coefficient(0);
        out.gammas.push_back(g);
        QTPolynomial layer = QTPolynomial::from_q_coeffs(g);
        for (int i = 0; i < d; ++i) layer = layer * one_plus_t;
        rest = rest - layer;
        // Remainder must now be divisible by t; shift it down one t-degree.
        QTPolynomial shifted;
        for (const auto& [key, c] : rest.terms()) {
            if (key.second == 0) {
                throw NotGammaExpandable("peel left a t^0 coefficient; input is not palindromic");
            }
            shifted.add_term(key.first, key.second - 1, c);
        }
        rest = shifted;
        d -= 2;
        if (d < -1 && !rest.is_zero()) {
            throw NotGammaExpandable("nonzero remainder beyond the basis");
        }
    }
    while (static_cast<int>(out.gammas.size()) <= (n - 1) / 2) out.gammas.push_back({});

    if (!(out.reconstruct() == p)) {
        throw NotGammaExpandable("reconstruction mismatch after peeling");
    }
    return out;
}

GammaExpansion gamma_de(int n) {
    check_scan_size(n);
    GammaExpansion out;
    out.n = n;
    for (int k = 0; k <= (n - 1) / 2; ++k) {
        QTPolynomial g;
        for (const Permutation& s : family(n, Family::DE, k))
            g.add_term(static_cast<int>(de_weight(s)), 0, 1);
        out.gammas.push_back(g.t_coefficient(0));
    }
    return out;
}

GammaExpansion gamma_dd(int n) {
    check_scan_size(n);
    GammaExpansion out;
    out.n = n;
    for (int k = 0; k <= (n - 1) / 2; ++k) {
        QTPolynomial g;
        for (const Permutation& s : family(n, Family::DD, k))
            g.add_term(static_cast<int>(dd_weight(s)), 0, 1);
        out.gammas.push_back(g.t_coefficient(0));
    }
    return out;
}

std::vector<long long> q_tangent_via_sign(int n) {
    check_scan_size(n);
    QTPolynomial p;
    for_each_permutation(n, [&](const Permutation& s) {
        const long long sign = (exc(s) % 2 == 0) ? 1 : -1;
        p.add_term(static_cast<int>(de_weight(s)), 0, sign);
    });
    return p.t_coefficient(0);
}

std::vector<long long> q_tangent_via_de(int n) {
    check_scan_size(n);
    if (n % 2 == 0) return {};
    const int k = (n - 1) / 2;
    const long long sign = (k % 2 == 0) ? 1 : -1;
    QTPolynomial p;
    for (const Permutation& s : family(n, Family::DE, k))
        p.add_term(static_cast<int>(de_weight(s)), 0, sign);
    return p.t_coefficient(0);
}

// ---- printing & JSON -------------------------------------------------------

namespace {

void append_monomial(std::string& out, long long c, const std::string& vars) {
    if (out.empty()) {
        if (c < 0) out += "-";
    } else {
        out += (c < 0) ? " - " : " + ";
    }
    const long long mag = c < 0 ? -c : c;
    if (mag != 1 || vars.empty()) out += std::to_string(mag);
    out += vars;
}

std::string power(const std::string& var, int e) {
    if (e == 0) return "";
    if (e == 1) return var;
    return var + "^" + std::to_string(e);
}

}  // namespace

std::string to_string(const QTPolynomial& p) {
    if (p.is_zero()) return "0";
    // Order by (t-degree, q-degree).
    std::vector<std::pair<QTPolynomial::Key, long long>> terms(p.terms().begin(), p.terms().end());
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
        return std::pair{a.first.second, a.first.first} < std::pair{b.first.second, b.first.first};
    });
    std::string out;
    for (const auto& [key, c] : terms) append_monomial(out, c, power("q", key.first) + power("t", key.second));
    return out;
}

std::string q_poly_to_string(const std::vector<long long>& c) {
    std::string out;
    for (std::size_t j = 0; j < c.size(); ++j)
        if (c[j] != 0) append_monomial(out, c[j], power("q", static_cast<int>(j)));
    return out.empty() ? "0" : out;
}

std::string to_string(const GammaExpansion& g) {
    std::string out;
    for (std::size_t k = 0; k < g.gammas.size(); ++k) {
        if (k) out += " | ";
        out += "k=" + std::to_string(k) + ": " + q_poly_to_string(g.gammas[k]);
    }
    return out;
}

nlohmann::json to_json(const QTPolynomial& p, int n) {
    std::vector<std::pair<QTPolynomial::Key, long long>> terms(p.terms().begin(), p.terms().end());
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
        return std::pair{a.first.second, a.first.first} < std::pair{b.first.second, b.first.first};
    });
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [key, c] : terms) arr.push_back({{"q", key.first}, {"t", key.second}, {"c", c}});
    return {{"n", n}, {"terms", arr}};
}

QTPolynomial qt_from_json(const nlohmann::json& j) {
    QTPolynomial p;
    for (const auto& term : j.at("terms"))
        p.add_term(term.at("q").get<int>(), term.at("t").get<int>(), term.at("c").get<long long>());
    return p;
}

nlohmann::json to_json(const GammaExpansion& g) {
    return {{"n", g.n}, {"gamma", g.gammas}};
}

GammaExpansion gamma_from_json(const nlohmann::json& j) {
    GammaExpansion g;
    g.n = j.at("n").get<int>();
    g.gammas = j.at("gamma").get<std::vector<std::vector<long long>>>();
    return g;
}

}  // namespace lhist
