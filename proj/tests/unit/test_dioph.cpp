#include "hirz/dioph.hpp"

#include <doctest.h>

#include <random>

using namespace hirz;

TEST_CASE("euler constraints hold exactly at projective-space values") {
    for (int n = 2; n <= 7; ++n) {
        ChernCandidate cand;
        cand.n = n;
        for (int i = 1; i <= n; ++i) cand.assigned[i] = binomial(n + 1, i);
        for (const auto& c : euler_constraints(n)) CHECK(c.holds(cand));
    }
}

TEST_CASE("euler constraints reject perturbed values") {
    ChernCandidate cand;
    cand.n = 4;
    for (int i = 1; i <= 4; ++i) cand.assigned[i] = binomial(5, i);
    cand.assigned[4] += 1;
    bool all = true;
    for (const auto& c : euler_constraints(4)) all = all && c.holds(cand);
    CHECK_FALSE(all);
}

TEST_CASE("lemma1 congruences: specializations for n = 5, 6, 7") {
    // n=5: c1^2 - 3 c1 + c2 + 3 = 0 (12); n=6: c1^2 + c2 + 6 c1 - 4 = 0
    // (12); n=7: c1^2 + c2 + 3 c1 - 8 = 0 (12).
    auto expr = [](int n, long c1, long c2) {
        switch (n) {
            case 5: return c1 * c1 - 3 * c1 + c2 + 3;
            case 6: return c1 * c1 + c2 + 6 * c1 - 4;
            default: return c1 * c1 + c2 + 3 * c1 - 8;
        }
    };
    std::mt19937 rng(112);
    std::uniform_int_distribution<long> val(-60, 60);
    for (int trial = 0; trial < 150; ++trial) {
        int n = 5 + static_cast<int>(rng() % 3);
        long c1 = val(rng), c2 = val(rng);
        CongruenceCheck cc = lemma1_congruences(n, c1, c2);
        CHECK(cc.parity_ok == (((c1 - (n + 1)) % 2) == 0));
        bool want = (((expr(n, c1, c2) % 12) + 12) % 12) == 0;
        CHECK(cc.mod12_ok == want);
    }
}

TEST_CASE("lemma1 constraints agree with the direct check") {
    std::mt19937 rng(31337);
    std::uniform_int_distribution<long> val(-40, 40);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 5 + static_cast<int>(rng() % 3);
        ChernCandidate cand;
        cand.n = n;
        cand.assigned[1] = val(rng);
        cand.assigned[2] = val(rng);
        CongruenceCheck cc = lemma1_congruences(n, cand.assigned[1],
                                                cand.assigned[2]);
        auto cs = lemma1_constraints(n);
        REQUIRE(cs.size() == 2);
        CHECK(cs[0].holds(cand) == cc.parity_ok);
        CHECK(cs[1].holds(cand) == cc.mod12_ok);
    }
}

TEST_CASE("kobayashi-ochiai bound") {
    CHECK(kobayashi_ochiai(5, 6) == KoVerdict::ForcesProjectiveSpace);
    CHECK(kobayashi_ochiai(5, 2) == KoVerdict::Allowed);
    CHECK(kobayashi_ochiai(5, 10) == KoVerdict::Excluded);
    CHECK(kobayashi_ochiai(7, 8) == KoVerdict::ForcesProjectiveSpace);
    CHECK_THROWS_AS(kobayashi_ochiai(5, -2), std::domain_error);
}

TEST_CASE("yau inequality sign cases") {
    CHECK(yau_constraint(2, -3, 3) == YauVerdict::EqualityBallQuotient);
    CHECK(yau_constraint(4, -5, 10) == YauVerdict::EqualityBallQuotient);
    CHECK(yau_constraint(6, -7, 21) == YauVerdict::EqualityBallQuotient);
    CHECK(yau_constraint(3, -2, -12) == YauVerdict::Violated);
    CHECK(yau_constraint(2, -3, 5) == YauVerdict::Strict);
    CHECK_THROWS_AS(yau_constraint(3, 2, 12), std::domain_error);
}

TEST_CASE("integer quadratic roots on randomized factored quadratics") {
    std::mt19937 rng(271828);
    std::uniform_int_distribution<long> rt(-30, 30);
    std::uniform_int_distribution<long> lead(1, 5);
    for (int trial = 0; trial < 120; ++trial) {
        Int a = lead(rng), r1 = rt(rng), r2 = rt(rng);
        // a (x - r1)(x - r2): both roots integral by construction
        Int b = -a * (r1 + r2), c = a * r1 * r2;
        auto roots = integer_quadratic_roots(a, b, c);
        std::vector<Int> want;
        want.push_back(std::min(r1, r2));
        if (r1 != r2) want.push_back(std::max(r1, r2));
        CHECK(roots == want);
    }
    // irrational and non-integral cases
    CHECK(integer_quadratic_roots(1, 0, -2).empty());
    CHECK(integer_quadratic_roots(2, -1, 0) == std::vector<Int>{0});
    CHECK(integer_quadratic_roots(3, 40, -675) == std::vector<Int>{});
    CHECK(integer_quadratic_roots(3, 100, -1300) ==
          std::vector<Int>{10});  // the other root -130/3 is rejected
}

TEST_CASE("residue elimination matches a brute-force scan") {
    auto vs = chern_vars(2);
    std::mt19937 rng(141421);
    std::uniform_int_distribution<int> coeff(-6, 6);
    for (int trial = 0; trial < 100; ++trial) {
        // random expr a c1^2 + b c2 + d
        Poly e = Poly::variable(vs, 0) * Poly::variable(vs, 0)
                     .scaled(coeff(rng)) +
                 Poly::variable(vs, 1).scaled(coeff(rng)) +
                 Poly::constant(vs, coeff(rng));
        Int mod = 5 + static_cast<int>(rng() % 8);
        std::map<int, std::vector<Int>> domain;
        for (int v = 0; v < 2; ++v) {
            std::vector<Int> vals;
            for (Int x = 0; x < mod; ++x) vals.push_back(x);
            domain[v] = vals;
        }
        auto got = residue_eliminate(e, mod, domain);
        std::size_t count = 0;
        for (Int x = 0; x < mod; ++x)
            for (Int y = 0; y < mod; ++y) {
                std::vector<Rat> assign = {Rat(x), Rat(y)};
                if (mod_residue(e.evaluate(assign).get_num(), mod) == 0)
                    ++count;
            }
        CHECK(got.size() == count);
        for (const auto& sol : got) {
            std::vector<Rat> assign = {Rat(sol.at(0)), Rat(sol.at(1))};
            CHECK(mod_residue(e.evaluate(assign).get_num(), mod) == 0);
        }
    }
}
