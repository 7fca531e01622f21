#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lhist/errors.hpp"
#include "lhist/perm.hpp"

#include "json.hpp"

namespace lhist {

/// Addition/multiplication on 64-bit coefficients that throws Overflow
/// instead of wrapping.
long long checked_add(long long a, long long b);
long long checked_mul(long long a, long long b);

/// Exact bivariate polynomial in q and t with integer coefficients.
/// Canonical form: no stored zero coefficients, all degrees nonnegative.
class QTPolynomial {
public:
    using Key = std::pair<int, int>;  // (q-degree, t-degree)

    QTPolynomial() = default;

    static QTPolynomial constant(long long c);
    static QTPolynomial monomial(int qdeg, int tdeg, long long c = 1);

    bool is_zero() const { return terms_.empty(); }
    long long coeff(int qdeg, int tdeg) const;
    void add_term(int qdeg, int tdeg, long long c);

    int t_degree() const;  // -1 for the zero polynomial
    int q_degree() const;

    const std::map<Key, long long>& terms() const { return terms_; }

    QTPolynomial operator+(const QTPolynomial& o) const;
    QTPolynomial operator-(const QTPolynomial& o) const;
    QTPolynomial operator*(const QTPolynomial& o) const;
    bool operator==(const QTPolynomial&) const = default;

    /// Substitute an integer for t; the result is a polynomial in q alone.
    QTPolynomial eval_t(long long t0) const;

    /// Coefficient of t^k as a q-coefficient vector (index = q-degree).
    std::vector<long long> t_coefficient(int k) const;

    /// Build from a q-coefficient vector (t-degree 0 terms).
    static QTPolynomial from_q_coeffs(const std::vector<long long>& c);

private:
    std::map<Key, long long> terms_;
};

/// The expansion of a t-palindromic polynomial in the basis
/// t^k (1+t)^(n-1-2k), one q-polynomial per k.
struct GammaExpansion {
    int n = 0;
    /// gammas[k][j] is the q^j coefficient of gamma_k.
    std::vector<std::vector<long long>> gammas;

    bool operator==(const GammaExpansion&) const = default;

    /// Sum of gamma_k(q) t^k (1+t)^(n-1-2k); used to re-verify expansions.
    QTPolynomial reconstruct() const;
};

// ---- generating functions over S_n -----------------------------------------

inline constexpr int kMaxScanN = 9;  // hard guard on full S_n scans

/// Sum over S_n of q^(inv-exc) t^exc.  Throws SizeTooLarge outside [1,9].
QTPolynomial qt_eulerian(int n);

/// Sum over S_n of t^des q^(2(2-13)+(31-2)).
QTPolynomial qt_descent_polynomial(int n);

/// Unique gamma expansion of p in the basis t^k (1+t)^(n-1-2k), found by
/// peeling the t^0 layer and recursing; throws NotGammaExpandable when no
/// such expansion exists (non-palindromic input).  The reconstruction is
/// re-verified before returning.
GammaExpansion gamma_expand(const QTPolynomial& p, int n);

/// gamma_k(q) = sum over DE_{n,k} of q^(inv-exc).
GammaExpansion gamma_de(int n);

/// gamma_k(q) = sum over DD_{n,k} of q^(2(2-13)+(31-2)).
GammaExpansion gamma_dd(int n);

/// Sum over S_n of (-1)^exc q^(inv-exc); the paper's (-1/q)^exc q^inv in
/// polynomial form.  Coefficient vector indexed by q-degree.
std::vector<long long> q_tangent_via_sign(int n);

/// (-1)^((n-1)/2) times the sum over DE_{n,(n-1)/2} of q^(inv-exc) for odd
/// n; the zero polynomial for even n.
std::vector<long long> q_tangent_via_de(int n);

// ---- text & JSON forms -----------------------------------------------------

/// Human form, e.g. "2q + 3q^2 + 2q^3 + q^4" ("0" for the zero polynomial).
std::string to_string(const QTPolynomial& p);
std::string q_poly_to_string(const std::vector<long long>& c);
std::string to_string(const GammaExpansion& g);

/// {"n": n, "terms": [{"q": a, "t": b, "c": coeff}, ...]} sorted by (t,q).
nlohmann::json to_json(const QTPolynomial& p, int n);
QTPolynomial qt_from_json(const nlohmann::json& j);

/// {"n": n, "gamma": [[c0,c1,...], ...]}.
nlohmann::json to_json(const GammaExpansion& g);
GammaExpansion gamma_from_json(const nlohmann::json& j);

}  // namespace lhist
