#pragma once
// Chern-roots calculus: Todd class, Chern character and exterior-power
// characters as truncated symmetric series in formal roots, plus the
// reduction of symmetric series to polynomials in the Chern classes.

#include "hirz/polyring.hpp"

namespace hirz {

// Symmetric series in formal roots x_1..x_n, truncated at degree n.
struct RootSeries {
    int root_count = 0;
    Poly inner;  // over root variables x_1..x_n, each of weight 1
};

// Variable table x_1..x_n, each of weight 1.
VarSetPtr root_vars(int n);

// prod_i x_i/(1 - e^{-x_i}) truncated at degree n.
RootSeries todd_class(int n);

// sum_i e^{x_i} truncated at degree n; degree-k part is p_k/k!.
RootSeries chern_character(int n);

// sum over p-element subsets S of e^{-sum_{i in S} x_i}, i.e. ch(Lambda^p
// of the dual bundle), truncated at degree n. Computed by dynamic
// programming over the roots. Throws std::domain_error if p is out of range.
RootSeries exterior_power_character(int p, int n);

// True iff s is invariant under every adjacent root transposition.
// If not and offending is non-null, *offending is set to the first index i
// such that swapping x_i and x_{i+1} (1-based) changes the series.
bool is_symmetric(const RootSeries& s, int* offending = nullptr);

// The i-th elementary symmetric polynomial e_i(x_1..x_n) as a root series
// polynomial (no truncation applied beyond degree n).
Poly elementary_symmetric(int i, int n);

// Rewrite a symmetric root series as a polynomial in c_1..c_n (graded-lex
// leading-term reduction). Throws std::domain_error on non-symmetric input,
// naming the offending transposition.
Poly reduce_to_chern_basis(const RootSeries& s);

}  // namespace hirz
