#pragma once
// Genus polynomials: the chi_y coefficients T_n^p, the shifted polynomial
// t_n(z), the top Todd polynomial, the twisted Euler-characteristic
// polynomials chi(X, L^m) and chi(X, T_X (x) L^m), and the binomial-basis
// integrality decomposition.

#include "hirz/polyring.hpp"

#include <array>
#include <string>
#include <vector>

namespace hirz {

struct GenusTable {
    int n = 0;
    std::vector<Poly> chiP;  // T_n^0..T_n^n over c_1..c_n
    Poly chiY;               // over c_1..c_n and y
    Poly tPoly;              // chiY with y -> z-1, over c_1..c_n and z
    Poly toddTop;            // = chiP[0]
};

enum class TwistKind { LineBundle, TangentTwist };

struct TwistPolynomial {
    int n = 0;
    TwistKind kind = TwistKind::LineBundle;
    Poly poly;  // over c_1..c_n and m
};

struct IntegralityDecomposition {
    int n = 0;
    // coeffs[k] = a_k with P(m) = sum_k a_k * binom(m+n-k, n-k); entries are
    // polynomials in whatever non-m variables P carried (a_0 = 1).
    std::vector<Poly> coeffs;
};

// Power sums p_1..p_n expressed in the Chern basis via Newton's identities,
// over a variable table whose first n entries are c_1..c_n.
std::vector<Poly> power_sums_in_chern(int n, const VarSetPtr& vars);

// Full Todd series (all weights 0..n) in the Chern basis over vars.
Poly todd_series_in_chern(int n, const VarSetPtr& vars);

GenusTable genus_table(int n);

// Computed z^0, z^1, z^2 coefficients of t_n, over c_1..c_n.
std::array<Poly, 3> t_low_order_check(int n);

// t_n at c_i = binom(n+1, i), as a univariate polynomial in z.
Poly projective_specialize(int n);

TwistPolynomial chi_line_bundle(int n);
TwistPolynomial chi_tangent_twist(int n);

// Decompose a polynomial of degree n in the variable at index mvar with
// leading coefficient 1/n! into the binomial basis binom(m+n-k, n-k).
// Throws std::domain_error if the leading coefficient is not 1/n!.
IntegralityDecomposition binomial_decompose(const Poly& P, int n, int mvar);

// Reconstruct sum_k a_k * binom(m+n-k, n-k) as a polynomial (for checking).
Poly binomial_reconstruct(const IntegralityDecomposition& d,
                          const VarSetPtr& vars, int mvar);

// --- golden fixtures ---

// Parse an expression in c_1..c_n, z with +, -, *, ^ and rational literals.
// Lines starting with '#' in fixture files are comments.
Poly parse_poly_expression(const std::string& text, const VarSetPtr& vars);
Poly load_golden_fixture(const std::string& path, const VarSetPtr& vars);

struct GoldenComparison {
    bool match = true;
    // One entry per divergent monomial: rendered monomial, engine value,
    // fixture value.
    struct Diff {
        std::string monomial;
        std::string engine;
        std::string fixture;
    };
    std::vector<Diff> diffs;
};

GoldenComparison compare_to_golden(const Poly& engine, const Poly& fixture);

}  // namespace hirz
