#pragma once
// Dense exact multivariate polynomials over Q with weighted grading and
// eager degree truncation, plus univariate series helpers.

#include "hirz/bigmath.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

namespace hirz {

// Shared variable table: names plus integer weights (weight 0 variables such
// as y, z, m are excluded from truncation accounting).
struct VarSet {
    std::vector<std::string> names;
    std::vector<int> weights;

    std::size_t size() const { return names.size(); }
    int index_of(const std::string& name) const;  // -1 if absent
};

using VarSetPtr = std::shared_ptr<const VarSet>;

VarSetPtr make_varset(std::vector<std::string> names,
                      std::vector<int> weights);
// c_1..c_n with weight(c_i)=i, plus optional weight-0 extras appended.
VarSetPtr chern_vars(int n, const std::vector<std::string>& extras = {});

// Exponent vector; trailing zeros trimmed so equal monomials compare equal.
using Mono = std::vector<unsigned>;

void mono_trim(Mono& m);
long mono_weight(const Mono& m, const VarSet& vars);

// Descending graded-lex: higher weighted degree first, then lexicographically
// larger exponent vector first. Used as the std::map comparator so iteration
// order is the canonical printing order.
struct MonoDescGradedLex {
    const VarSet* vars;
    bool operator()(const Mono& a, const Mono& b) const;
};

class Poly {
  public:
    using TermMap = std::map<Mono, Rat, MonoDescGradedLex>;

    Poly() = default;
    explicit Poly(VarSetPtr vars, int trunc = -1);
    static Poly constant(VarSetPtr vars, const Rat& c, int trunc = -1);
    static Poly variable(VarSetPtr vars, int index, int trunc = -1);

    const VarSetPtr& vars() const { return vars_; }
    int trunc() const { return trunc_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(Mono m, const Rat& c);  // accumulates; drops zeros

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator-() const;
    Poly scaled(const Rat& c) const;
    Poly truncated(int deg) const;

    // Exact composition; unbound variables pass through.
    Poly substitute(const std::map<int, Poly>& bindings) const;

    // sum_{k<=order} p^k/k!; requires zero constant term.
    Poly exp_series(int order) const;

    Rat evaluate(const std::vector<Rat>& assignment) const;

    // Coefficient of var^k as a polynomial in the remaining variables.
    Poly coeff_of(int var, unsigned k) const;
    // Homogeneous slice of weighted degree d.
    Poly weight_part(long d) const;
    Rat constant_term() const;
    long max_exponent(int var) const;

    std::string render() const;  // canonical text, descending graded-lex
    nlohmann::json to_json() const;
    static Poly from_json(const nlohmann::json& j, VarSetPtr vars);

    bool operator==(const Poly& o) const;

  private:
    VarSetPtr vars_;
    int trunc_ = -1;
    TermMap terms_;
    void check_compatible(const Poly& o) const;
};

// Univariate truncated series: coefficients[k] is the x^k coefficient.
struct UniSeries {
    std::vector<Rat> c;

    int order() const { return static_cast<int>(c.size()) - 1; }
    UniSeries mul(const UniSeries& o) const;
    UniSeries reciprocal() const;  // requires c[0] != 0
};

// (1 - e^{-x})/x truncated at given order; its reciprocal is the Todd factor.
UniSeries todd_factor_denominator(int order);
// Coefficients l_j with log(x/(1-e^{-x})) = sum_{j>=1} l_j x^j.
std::vector<Rat> todd_log_coefficients(int order);

}  // namespace hirz
