#include "doctest.h"

#include <random>
#include <set>

#include "lhist/laguerre.hpp"

using namespace lhist;

namespace {

LaguerreHistory hist(const std::string& path, const std::string& mu) {
    return LaguerreHistory(parse_path(path), parse_mu(mu));
}

}  // namespace

TEST_CASE("path and history validation") {
    CHECK_NOTHROW(hist("U1D0UUDD", "0,1,1,0,0,0,2,1"));
    CHECK_NOTHROW(LaguerreHistory(TwoMotzkinPath{}, {}));
    CHECK_THROWS_AS(parse_path("D"), PathBelowAxis);
    CHECK_THROWS_AS(parse_path("UU"), PathNotClosed);
    CHECK_THROWS_AS(parse_path("UX"), ParseError);
    try {
        hist("UD", "0,2");
        FAIL("expected MuOutOfRange");
    } catch (const MuOutOfRange& e) {
        CHECK(e.index == 2);  // h_2 = 1
    }
    CHECK_THROWS_AS(hist("UD", "0"), MuOutOfRange);  // length mismatch
}

TEST_CASE("heights, area, step sets") {
    const TwoMotzkinPath w = parse_path("U1D0UUDD");
    CHECK(w.heights() == std::vector<int>{0, 1, 1, 0, 0, 1, 2, 1});
    CHECK(w.area() == 6);
    CHECK(w.u_set() == std::vector<int>{1, 5, 6});
    CHECK(w.l1_set() == std::vector<int>{2});
    CHECK(parse_path("0000").area() == 0);
    CHECK(parse_path("0000").u_set().empty());
    CHECK(parse_path("0000").l1_set().empty());
    CHECK(parse_path("UD").area() == 1);
    CHECK_THROWS_AS(w.height(0), IndexOutOfRange);
    CHECK_THROWS_AS(w.height(9), IndexOutOfRange);
}

TEST_CASE("toggle") {
    const LaguerreHistory h = hist("U1D0UUDD", "0,1,1,0,0,0,2,1");
    CHECK(toggle(h, 2) == hist("U0D0UUDD", "0,1,1,0,0,0,2,1"));
    CHECK(toggle(h, 1) == h);  // U step: identity
    CHECK_THROWS_AS(toggle(h, 0), IndexOutOfRange);
    // involution on all of L_4
    for_each_history(4, [](const LaguerreHistory& h4) {
        for (int i = 1; i <= 4; ++i) CHECK(toggle(toggle(h4, i), i) == h4);
    });
}

TEST_CASE("action phi_S") {
    const LaguerreHistory h = hist("U1D0UUDD", "0,1,1,0,0,0,2,1");
    CHECK(act(h, {}) == h);
    CHECK(act(h, {1, 5, 6, 7, 8}) == h);  // non-level toggles are identity
    CHECK(act(h, {2, 4}) == act(h, {4, 2}));
    // involution of every subset action on all of L_3
    for_each_history(3, [](const LaguerreHistory& h3) {
        for (int mask = 0; mask < 8; ++mask) {
            std::vector<int> subset;
            for (int b = 0; b < 3; ++b)
                if (mask & (1 << b)) subset.push_back(b + 1);
            CHECK(act(act(h3, subset), subset) == h3);
        }
    });
}

TEST_CASE("orbit and canonical") {
    const LaguerreHistory no_levels = hist("UUDD", "0,1,2,0");
    CHECK(orbit(no_levels) == std::vector<LaguerreHistory>{no_levels});
    CHECK(canonical(no_levels) == no_levels);

    const LaguerreHistory h = hist("U1D0UUDD", "0,1,1,0,0,0,2,1");
    CHECK(orbit(h).size() == 4);  // two level steps
    CHECK(canonical(h) == hist("U0D0UUDD", "0,1,1,0,0,0,2,1"));

    // canonical is constant on orbits, all of L_4
    for_each_history(4, [](const LaguerreHistory& h4) {
        for (const LaguerreHistory& m : orbit(h4)) CHECK(canonical(m) == canonical(h4));
    });
}

TEST_CASE("invariance of heights, area and mu under the action") {
    for_each_history(4, [](const LaguerreHistory& h) {
        for (int i = 1; i <= 4; ++i) {
            const LaguerreHistory t = toggle(h, i);
            CHECK(t.path().heights() == h.path().heights());
            CHECK(t.path().area() == h.path().area());
            CHECK(t.mu() == h.mu());
        }
    });
}

TEST_CASE("enumeration of L_n") {
    for (int n = 0; n <= 5; ++n) {
        long long want = 1;
        for (int i = 2; i <= n + 1; ++i) want *= i;
        long long count = 0;
        std::set<LaguerreHistory> seen;
        for_each_history(n, [&](const LaguerreHistory& h) {
            ++count;
            seen.insert(h);
        });
        CHECK(count == want);          // (n+1)!
        CHECK((long long)seen.size() == want);  // no duplicates
    }
}

TEST_CASE("orbit sizes partition L_n") {
    for (int n = 0; n <= 5; ++n) {
        long long want = 1;
        for (int i = 2; i <= n + 1; ++i) want *= i;
        long long total = 0;
        for (int k = 0; k <= n / 2; ++k) {
            for (const LaguerreHistory& h : orbit_reps(n, k)) {
                CHECK(h.path().l1_set().empty());
                CHECK((int)h.path().u_set().size() == k);
                total += 1LL << h.path().level_set().size();
            }
        }
        CHECK(total == want);
    }
    CHECK_THROWS_AS(orbit_reps(4, 3), InvalidFamilyParams);
    CHECK_THROWS_AS(orbit_reps(4, -1), InvalidFamilyParams);
}

TEST_CASE("text round-trip is bit-exact") {
    // property: print(parse(x)) == x on every member of L_4
    for_each_history(4, [](const LaguerreHistory& h) {
        const std::string ps = to_string(h.path());
        const std::string ms = mu_to_string(h.mu());
        CHECK(LaguerreHistory(parse_path(ps), parse_mu(ms)) == h);
    });
    CHECK(to_string(parse_path("U1D0UUDD")) == "U1D0UUDD");
    CHECK(parse_mu("") == std::vector<int>{});
    CHECK(mu_to_string({0, 1, 2}) == "0,1,2");
}
