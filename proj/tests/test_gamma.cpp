#include "doctest.h"

#include "lhist/gamma.hpp"

using namespace lhist;

TEST_CASE("polynomial arithmetic") {
    const QTPolynomial one_plus_t = QTPolynomial::constant(1) + QTPolynomial::monomial(0, 1);
    const QTPolynomial sq = one_plus_t * one_plus_t;
    CHECK(sq.coeff(0, 0) == 1);
    CHECK(sq.coeff(0, 1) == 2);
    CHECK(sq.coeff(0, 2) == 1);
    CHECK((sq - sq).is_zero());

    // eval_t(1 + qt, t=-1) = 1 - q
    const QTPolynomial p = QTPolynomial::constant(1) + QTPolynomial::monomial(1, 1);
    const QTPolynomial at = p.eval_t(-1);
    CHECK(at.coeff(0, 0) == 1);
    CHECK(at.coeff(1, 0) == -1);

    CHECK_THROWS_AS(checked_mul(1LL << 62, 4), Overflow);
    CHECK_THROWS_AS(checked_add(0x7fffffffffffffffLL, 1), Overflow);
}

TEST_CASE("qt_eulerian") {
    CHECK(to_string(qt_eulerian(1)) == "1");
    // n=4: (1+t)^3 + (2q+3q^2+2q^3+q^4) t (1+t)
    const QTPolynomial one_plus_t = QTPolynomial::constant(1) + QTPolynomial::monomial(0, 1);
    QTPolynomial want = one_plus_t * one_plus_t * one_plus_t;
    QTPolynomial g1 = QTPolynomial::from_q_coeffs({0, 2, 3, 2, 1});
    want = want + g1 * QTPolynomial::monomial(0, 1) * one_plus_t;
    CHECK(qt_eulerian(4) == want);

    // q=1 slices are the Eulerian numbers 1, 11, 11, 1
    const QTPolynomial e4 = qt_eulerian(4);
    QTPolynomial at1;
    for (const auto& [key, c] : e4.terms()) at1.add_term(0, key.second, c);
    CHECK(at1.coeff(0, 0) == 1);
    CHECK(at1.coeff(0, 1) == 11);
    CHECK(at1.coeff(0, 2) == 11);
    CHECK(at1.coeff(0, 3) == 1);

    CHECK_THROWS_AS(qt_eulerian(0), SizeTooLarge);
    CHECK_THROWS_AS(qt_eulerian(10), SizeTooLarge);
}

TEST_CASE("qt_descent_polynomial equals qt_eulerian") {
    CHECK(to_string(qt_descent_polynomial(1)) == "1");
    for (int n = 1; n <= 6; ++n) CHECK(qt_descent_polynomial(n) == qt_eulerian(n));
}

TEST_CASE("gamma_expand") {
    const GammaExpansion g4 = gamma_expand(qt_eulerian(4), 4);
    CHECK(g4.gammas.size() == 2);
    CHECK(g4.gammas[0] == std::vector<long long>{1});
    CHECK(g4.gammas[1] == std::vector<long long>{0, 2, 3, 2, 1});

    const GammaExpansion g1 = gamma_expand(QTPolynomial::constant(1), 1);
    CHECK(g1.gammas == std::vector<std::vector<long long>>{{1}});

    CHECK_THROWS_AS(gamma_expand(QTPolynomial::monomial(0, 2), 3), NotGammaExpandable);
    // reconstruction invariant on a nontrivial case
    CHECK(gamma_expand(qt_eulerian(5), 5).reconstruct() == qt_eulerian(5));
}

TEST_CASE("gamma_de and gamma_dd") {
    const GammaExpansion de4 = gamma_de(4);
    CHECK(de4.gammas == std::vector<std::vector<long long>>{{1}, {0, 2, 3, 2, 1}});
    CHECK(gamma_de(1).gammas == std::vector<std::vector<long long>>{{1}});

    const GammaExpansion dd4 = gamma_dd(4);
    long long g0 = 0, g1 = 0;
    for (long long c : dd4.gammas[0]) g0 += c;
    for (long long c : dd4.gammas[1]) g1 += c;
    CHECK(g0 == 1);   // |DD_{4,0}|
    CHECK(g1 == 8);   // |DD_{4,1}|
}

TEST_CASE("theorems as identities") {
    for (int n = 1; n <= 6; ++n) {
        CHECK(gamma_expand(qt_eulerian(n), n) == gamma_de(n));
        CHECK(gamma_expand(qt_descent_polynomial(n), n) == gamma_dd(n));
        // gamma-positivity and the t=1 specialization
        long long total = 0, nf = 1;
        for (int i = 2; i <= n; ++i) nf *= i;
        const GammaExpansion g = gamma_de(n);
        for (std::size_t k = 0; k < g.gammas.size(); ++k) {
            long long at1 = 0;
            for (long long c : g.gammas[k]) {
                CHECK(c >= 0);
                at1 += c;
            }
            total += at1 * (1LL << (n - 1 - 2 * (int)k));
        }
        CHECK(total == nf);
    }
}

TEST_CASE("q-tangent routes") {
    CHECK(q_tangent_via_sign(4).empty());  // zero polynomial at even n
    CHECK(q_tangent_via_de(4).empty());
    for (int n = 1; n <= 7; ++n) CHECK(q_tangent_via_sign(n) == q_tangent_via_de(n));
    long long at1_3 = 0, at1_5 = 0;
    for (long long c : q_tangent_via_de(3)) at1_3 += c;
    for (long long c : q_tangent_via_de(5)) at1_5 += c;
    CHECK(at1_3 == -2);   // -T_2
    CHECK(at1_5 == 16);   // +T_3
}

TEST_CASE("printing") {
    CHECK(q_poly_to_string({0, 2, 3, 2, 1}) == "2q + 3q^2 + 2q^3 + q^4");
    CHECK(q_poly_to_string({}) == "0");
    CHECK(to_string(gamma_de(4)) == "k=0: 1 | k=1: 2q + 3q^2 + 2q^3 + q^4");
    CHECK(to_string(QTPolynomial{}) == "0");
    CHECK(to_string(QTPolynomial::from_q_coeffs({1, -1})) == "1 - q");
}

TEST_CASE("JSON round-trips") {
    const QTPolynomial p = qt_eulerian(4);
    CHECK(qt_from_json(to_json(p, 4)) == p);
    const GammaExpansion g = gamma_de(5);
    CHECK(gamma_from_json(to_json(g)) == g);
    const nlohmann::json j = to_json(p, 4);
    CHECK(j.at("n") == 4);
    CHECK(j.at("terms").is_array());
}
