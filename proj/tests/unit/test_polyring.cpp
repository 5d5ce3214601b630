#include "hirz/genera.hpp"  // for parse_poly_expression
#include "hirz/polyring.hpp"

#include <doctest.h>

#include <random>

using namespace hirz;

namespace {

Poly random_poly(std::mt19937& rng, const VarSetPtr& vs) {
    std::uniform_int_distribution<int> nterms(0, 6), expo(0, 3),
        num(-9, 9), den(1, 4);
    Poly p(vs);
    int k = nterms(rng);
    for (int t = 0; t < k; ++t) {
        Mono m(vs->size(), 0);
        for (std::size_t i = 0; i < vs->size(); ++i)
            m[i] = static_cast<unsigned>(expo(rng));
        p.add_term(std::move(m), Rat(num(rng)) / den(rng));
    }
    return p;
}

}  // namespace

TEST_CASE("ring axioms on randomized polynomials") {
    std::mt19937 rng(1234);
    auto vs = make_varset({"a", "b", "c"}, {1, 1, 1});
    Poly zero(vs), one = Poly::constant(vs, 1);
    for (int trial = 0; trial < 120; ++trial) {
        Poly p = random_poly(rng, vs), q = random_poly(rng, vs),
             r = random_poly(rng, vs);
        CHECK(p + q == q + p);
        CHECK(p * q == q * p);
        CHECK((p + q) + r == p + (q + r));
        CHECK((p * q) * r == p * (q * r));
        CHECK(p * (q + r) == p * q + p * r);
        CHECK(p + zero == p);
        CHECK(p * one == p);
        CHECK(p * zero == zero);
        CHECK(p - p == zero);
        CHECK(p.scaled(Rat(3, 2)).scaled(Rat(2, 3)) == p);
    }
}

TEST_CASE("substitution is a ring homomorphism") {
    std::mt19937 rng(77);
    auto vs = make_varset({"a", "b"}, {1, 1});
    for (int trial = 0; trial < 100; ++trial) {
        Poly p = random_poly(rng, vs), q = random_poly(rng, vs);
        std::map<int, Poly> b;
        b[0] = random_poly(rng, vs);
        CHECK((p + q).substitute(b) == p.substitute(b) + q.substitute(b));
        CHECK((p * q).substitute(b) == p.substitute(b) * q.substitute(b));
    }
}

TEST_CASE("evaluate agrees with full substitution") {
    std::mt19937 rng(31);
    auto vs = make_varset({"a", "b", "c"}, {1, 1, 1});
    std::uniform_int_distribution<int> val(-5, 5);
    for (int trial = 0; trial < 100; ++trial) {
        Poly p = random_poly(rng, vs);
        std::vector<Rat> assign;
        std::map<int, Poly> b;
        for (int i = 0; i < 3; ++i) {
            int v = val(rng);
            assign.push_back(Rat(v));
            b[i] = Poly::constant(vs, Rat(v));
        }
        CHECK(p.evaluate(assign) == p.substitute(b).constant_term());
    }
}

TEST_CASE("render round-trips through the parser") {
    std::mt19937 rng(4096);
    auto vs = make_varset({"c1", "c2", "z"}, {1, 2, 0});
    for (int trial = 0; trial < 120; ++trial) {
        Poly p = random_poly(rng, vs);
        CHECK(parse_poly_expression(p.render(), vs) == p);
    }
}

TEST_CASE("json round-trips") {
    std::mt19937 rng(2718);
    auto vs = make_varset({"c1", "c2", "c3"}, {1, 2, 3});
    for (int trial = 0; trial < 100; ++trial) {
        Poly p = random_poly(rng, vs);
        Poly back = Poly::from_json(p.to_json(), vs);
        CHECK(back == p);
    }
}

TEST_CASE("coeff_of reassembles the polynomial") {
    std::mt19937 rng(8);
    auto vs = make_varset({"a", "b"}, {1, 1});
    for (int trial = 0; trial < 100; ++trial) {
        Poly p = random_poly(rng, vs);
        Poly acc(vs);
        Poly bvar = Poly::variable(vs, 1);
        Poly bpow = Poly::constant(vs, 1);
        long mx = p.max_exponent(1);
        for (long k = 0; k <= mx; ++k) {
            acc = acc + p.coeff_of(1, static_cast<unsigned>(k)) * bpow;
            bpow = bpow * bvar;
        }
        CHECK(acc == p);
    }
}

TEST_CASE("truncation drops heavy terms in products") {
    auto vs = chern_vars(3);
    Poly c1 = Poly::variable(vs, 0, 3), c3 = Poly::variable(vs, 2, 3);
    Poly prod = c1 * c3;  // weight 4 > trunc 3
    CHECK(prod.is_zero());
    Poly c1full = Poly::variable(vs, 0), c3full = Poly::variable(vs, 2);
    CHECK_FALSE((c1full * c3full).is_zero());
}

TEST_CASE("canonical ordering is descending graded-lex") {
    auto vs = chern_vars(2, {"z"});
    Poly p = parse_poly_expression("1 + c1 + c2 + c1^2 + c1*z", vs);
    CHECK(p.render() == "c1^2 + c2 + c1*z + c1 + 1");
}
