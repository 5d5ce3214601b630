#include "hirz/dioph.hpp"

#include <stdexcept>

namespace hirz {

Rat Constraint::value(const ChernCandidate& cand) const {
    std::vector<Rat> assign(expr.vars()->size(), 0);
    for (const auto& [idx, v] : cand.assigned)
        if (idx >= 1 && idx <= static_cast<int>(expr.vars()->size()))
            assign[idx - 1] = Rat(v);
    return expr.evaluate(assign);
}

bool Constraint::holds(const ChernCandidate& cand) const {
    Rat v = value(cand);
    switch (kind) {
        case ConstraintKind::Equality:
            return v == 0;
        case ConstraintKind::Congruence: {
            if (v.get_den() != 1) return false;
            return mod_residue(v.get_num(), modulus) == 0;
        }
        case ConstraintKind::Divisibility:
            return v.get_den() == 1;
        case ConstraintKind::Inequality:
            return v >= 0;
        case ConstraintKind::Square: {
            if (v.get_den() != 1) return false;
            return is_perfect_square(v.get_num()).has_value();
        }
        case ConstraintKind::ExternalAxiom:
            return true;
    }
    return false;
}

std::vector<Constraint> euler_constraints(int n) {
    if (n < 2) throw std::domain_error("euler_constraints: n < 2");
    auto vars = chern_vars(n);
    std::vector<Constraint> out;

    Constraint cn;
    cn.kind = ConstraintKind::Equality;
    cn.description = "c_" + std::to_string(n) + " = " + std::to_string(n + 1);
    cn.expr = Poly::variable(vars, n - 1) -
              Poly::constant(vars, Rat(n + 1));
    cn.citation = "the topological Euler characteristic matches that of "
                  "projective space: c_n = n+1";
    out.push_back(cn);

    Constraint cc;
    cc.kind = ConstraintKind::Equality;
    Int rhs = Int(n) * Int(n + 1) * Int(n + 1) / 2;
    cc.description = "c_1*c_" + std::to_string(n - 1) + " = " + rhs.get_str();
    cc.expr = Poly::variable(vars, 0) * Poly::variable(vars, n - 2) -
              Poly::constant(vars, Rat(rhs));
    cc.citation = "the next Chern-number constraint: c_1 c_{n-1} = "
                  "n(n+1)^2/2";
    out.push_back(cc);
    return out;
}

CongruenceCheck lemma1_congruences(int n, const Int& c1, const Int& c2) {
    CongruenceCheck r;
    r.parity_residue = mod_residue(c1 - Int(n + 1), 2);
    r.parity_ok = (r.parity_residue == 0);
    Int e = c1 * c1 + c2 - Int(3 * n) * c1 + Int(n + 1) * Int(3 * n - 2) / 2;
    r.mod12_residue = mod_residue(e, 12);
    r.mod12_ok = (r.mod12_residue == 0);
    return r;
}

std::vector<Constraint> lemma1_constraints(int n) {
    auto vars = chern_vars(n);
    Poly c1 = Poly::variable(vars, 0);
    Poly c2 = Poly::variable(vars, 1);
    std::vector<Constraint> out;

    Constraint parity;
    parity.kind = ConstraintKind::Congruence;
    parity.modulus = 2;
    parity.description = "c_1 = n+1 (mod 2)";
    parity.expr = c1 - Poly::constant(vars, Rat(n + 1));
    parity.citation = "integrality of chi(L^m) forces c_1 - (n+1) even";
    out.push_back(parity);

    Constraint mod12;
    mod12.kind = ConstraintKind::Congruence;
    mod12.modulus = 12;
    mod12.description =
        "c_1^2 + c_2 - 3n c_1 + (n+1)(3n-2)/2 = 0 (mod 12)";
    mod12.expr = c1 * c1 + c2 - c1.scaled(3 * n) +
                 Poly::constant(vars, Rat(Int(n + 1) * Int(3 * n - 2) / 2));
    mod12.citation = "integrality of the second binomial coefficient in the "
                     "decomposition of chi(L^m)";
    out.push_back(mod12);
    return out;
}

KoVerdict kobayashi_ochiai(int n, const Int& c1) {
    if (c1 <= 0)
        throw std::domain_error("kobayashi_ochiai: requires c_1 > 0");
    if (c1 > n + 1) return KoVerdict::Excluded;
    if (c1 == n + 1) return KoVerdict::ForcesProjectiveSpace;
    return KoVerdict::Allowed;
}

YauVerdict yau_constraint(int n, const Int& c1, const Int& c2) {
    if (c1 >= 0)
        throw std::domain_error("yau_constraint: requires c_1 < 0");
    Rat lhs = Rat(2 * (n + 1), n) * Rat(c2) - Rat(c1 * c1);
    Rat factor = 1;
    for (int i = 0; i < n - 2; ++i) factor *= Rat(-c1);
    Rat v = lhs * factor;
    if (v < 0) return YauVerdict::Violated;
    if (v == 0) return YauVerdict::EqualityBallQuotient;
    return YauVerdict::Strict;
}

std::vector<Int> integer_quadratic_roots(const Int& a, const Int& b,
                                         const Int& c) {
    if (a == 0) throw std::domain_error("integer_quadratic_roots: a == 0");
    std::vector<Int> roots;
    Int disc = b * b - 4 * a * c;
    auto sq = is_perfect_square(disc);
    if (!sq) return roots;
    for (int sgn : {-1, +1}) {
        Int num = -b + sgn * *sq;
        Int den = 2 * a;
        if (num % den == 0) {
            Int r = num / den;
            if (roots.empty() || roots.back() != r) {
                // verify by substitution
                if (a * r * r + b * r + c == 0) roots.push_back(r);
            }
        }
    }
    if (roots.size() == 2 && roots[0] > roots[1]) std::swap(roots[0], roots[1]);
    return roots;
}

std::vector<std::map<int, Int>> residue_eliminate(
    const Poly& expr, const Int& modulus,
    const std::map<int, std::vector<Int>>& domain) {
    std::vector<int> keys;
    for (const auto& [k, v] : domain) {
        (void)v;
        keys.push_back(k);
    }
    std::vector<std::map<int, Int>> survivors;
    std::vector<std::size_t> idx(keys.size(), 0);
    for (;;) {
        std::vector<Rat> assign(expr.vars()->size(), 0);
        std::map<int, Int> cur;
        for (std::size_t i = 0; i < keys.size(); ++i) {
            const Int& v = domain.at(keys[i])[idx[i]];
            cur[keys[i]] = v;
            assign[keys[i]] = Rat(v);
        }
        Rat val = expr.evaluate(assign);
        if (val.get_den() == 1 && mod_residue(val.get_num(), modulus) == 0)
            survivors.push_back(std::move(cur));
        // odometer increment (last key fastest)
        std::size_t i = keys.size();
        for (;;) {
            if (i == 0) return survivors;
            --i;
            if (++idx[i] < domain.at(keys[i]).size()) break;
            idx[i] = 0;
        }
    }
}

}  // namespace hirz
