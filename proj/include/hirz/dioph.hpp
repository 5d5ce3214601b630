#pragma once
// Diophantine constraint primitives: congruences, inequality bounds,
// quadratic-root integrality, and residue-based elimination over finite
// candidate domains.

#include "hirz/bigmath.hpp"
#include "hirz/polyring.hpp"

#include <map>
#include <string>
#include <vector>

namespace hirz {

// Partial assignment of the Chern numbers c_1..c_n.
struct ChernCandidate {
    int n = 0;
    std::map<int, Int> assigned;  // index in 1..n -> value
    std::vector<std::string> notes;
};

enum class ConstraintKind {
    Equality,
    Congruence,
    Divisibility,
    Inequality,
    Square,
    ExternalAxiom,
};

// A constraint with an expression over c_1..c_n; for Congruence the
// expression is tested modulo `modulus`. The citation quotes the
// mathematical statement this constraint encodes.
struct Constraint {
    ConstraintKind kind = ConstraintKind::Equality;
    std::string description;
    Poly expr;
    Int modulus = 0;
    std::string citation;

    // Evaluates expr on a candidate assigning all its variables; Equality
    // holds iff the value is 0, Congruence iff it is 0 mod modulus.
    bool holds(const ChernCandidate& cand) const;
    Rat value(const ChernCandidate& cand) const;
};

// The two Euler-characteristic equalities c_n = n+1 and
// c_1 c_{n-1} = n(n+1)^2/2.
std::vector<Constraint> euler_constraints(int n);

struct CongruenceCheck {
    bool parity_ok = false;      // c_1 - (n+1) even
    Int parity_residue = 0;      // (c_1 - (n+1)) mod 2
    bool mod12_ok = false;       // c_1^2 + c_2 - 3n c_1 + (n+1)(3n-2)/2 mod 12
    Int mod12_residue = 0;
};

CongruenceCheck lemma1_congruences(int n, const Int& c1, const Int& c2);

// The two congruences above as Constraint values (symbolic, for fixed n).
std::vector<Constraint> lemma1_constraints(int n);

enum class KoVerdict { Excluded, Allowed, ForcesProjectiveSpace };

// Upper bound c_1 <= n+1 on the Fano side, equality only for projective
// space. Requires c_1 > 0.
KoVerdict kobayashi_ochiai(int n, const Int& c1);

enum class YauVerdict { Violated, Strict, EqualityBallQuotient };

// Sign of (2(n+1)/n * c_2 - c_1^2) * (-c_1)^(n-2), exact rationals.
// Requires c_1 < 0; throws std::domain_error otherwise.
YauVerdict yau_constraint(int n, const Int& c1, const Int& c2);

// All integer roots of a x^2 + b x + c (a != 0), ascending.
std::vector<Int> integer_quadratic_roots(const Int& a, const Int& b,
                                         const Int& c);

// Exhaustive scan over the finite residue domain; returns the assignments
// (in deterministic domain order) with expr == 0 mod modulus. Domain keys
// are variable indices into expr's variable table.
std::vector<std::map<int, Int>> residue_eliminate(
    const Poly& expr, const Int& modulus,
    const std::map<int, std::vector<Int>>& domain);

}  // namespace hirz
