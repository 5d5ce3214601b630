#include "hirz/chern.hpp"

#include <stdexcept>
#include <string>

namespace hirz {

VarSetPtr root_vars(int n) {
    std::vector<std::string> names;
    std::vector<int> weights;
    names.reserve(n);
    for (int i = 1; i <= n; ++i) {
        names.push_back("x" + std::to_string(i));
        weights.push_back(1);
    }
    return make_varset(std::move(names), std::move(weights));
}

namespace {

// sum_k coeffs[k] * x_i^k as a polynomial over vars, truncated at trunc.
Poly univariate_in_root(const VarSetPtr& vars, int i,
                        const std::vector<Rat>& coeffs, int trunc) {
    Poly p(vars, trunc);
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        if (static_cast<int>(k) > trunc) break;
        if (coeffs[k] == 0) continue;
        Mono m(i + 1, 0);
        m[i] = static_cast<unsigned>(k);
        p.add_term(std::move(m), coeffs[k]);
    }
    return p;
}

// Coefficients of e^{s*x} up to given order.
std::vector<Rat> exp_coeffs(int sign, int order) {
    std::vector<Rat> c(order + 1);
    Rat cur = 1;
    for (int k = 0; k <= order; ++k) {
        c[k] = cur;
        cur *= Rat(sign, k + 1);
    }
    return c;
}

}  // namespace

RootSeries todd_class(int n) {
    auto vars = root_vars(n);
    UniSeries denom = todd_factor_denominator(n);
    UniSeries factor = denom.reciprocal();  // x/(1-e^{-x}) coefficients
    Poly prod = Poly::constant(vars, 1, n);
    for (int i = 0; i < n; ++i)
        prod = prod * univariate_in_root(vars, i, factor.c, n);
    return RootSeries{n, prod};
}

RootSeries chern_character(int n) {
    auto vars = root_vars(n);
    Poly sum(vars, n);
    auto ec = exp_coeffs(+1, n);
    for (int i = 0; i < n; ++i)
        sum = sum + univariate_in_root(vars, i, ec, n);
    return RootSeries{n, sum};
}

RootSeries exterior_power_character(int p, int n) {
    if (p < 0 || p > n)
        throw std::domain_error("exterior_power_character: p out of range [0, " +
                                std::to_string(n) + "]: " + std::to_string(p));
    auto vars = root_vars(n);
    // dp[j] = coefficient of t^j in prod_{i<=current} (1 + t*e^{-x_i})
    std::vector<Poly> dp(p + 1, Poly(vars, n));
    dp[0] = Poly::constant(vars, 1, n);
    auto ec = exp_coeffs(-1, n);
    for (int i = 0; i < n; ++i) {
        Poly ei = univariate_in_root(vars, i, ec, n);
        for (int j = std::min(p, i + 1); j >= 1; --j)
            dp[j] = dp[j] + dp[j - 1] * ei;
    }
    return RootSeries{n, dp[p]};
}

bool is_symmetric(const RootSeries& s, int* offending) {
    const int n = s.root_count;
    const auto& vars = s.inner.vars();
    for (int i = 0; i + 1 < n; ++i) {
        std::map<int, Poly> swap_sub;
        swap_sub[i] = Poly::variable(vars, i + 1, s.inner.trunc());
        swap_sub[i + 1] = Poly::variable(vars, i, s.inner.trunc());
        if (!(s.inner.substitute(swap_sub) == s.inner)) {
            if (offending) *offending = i + 1;
            return false;
        }
    }
    return true;
}

Poly elementary_symmetric(int i, int n) {
    auto vars = root_vars(n);
    // DP over roots: e[j] after processing root r is e_j(x_1..x_r).
    std::vector<Poly> e(i + 1, Poly(vars, n));
    e[0] = Poly::constant(vars, 1, n);
    for (int r = 0; r < n; ++r) {
        Poly xr = Poly::variable(vars, r, n);
        for (int j = std::min(i, r + 1); j >= 1; --j)
            e[j] = e[j] + e[j - 1] * xr;
    }
    return e[i];
}

Poly reduce_to_chern_basis(const RootSeries& s) {
    int bad = 0;
    if (!is_symmetric(s, &bad))
        throw std::domain_error(
            "reduce_to_chern_basis: input not symmetric under the "
            "transposition of roots " +
            std::to_string(bad) + " and " + std::to_string(bad + 1));
    const int n = s.root_count;
    auto cvars = chern_vars(n);

    std::vector<Poly> e(n + 1);
    for (int i = 1; i <= n; ++i) e[i] = elementary_symmetric(i, n);

    Poly rest = s.inner;
    Poly out(cvars, rest.trunc());
    while (!rest.is_zero()) {
        // Leading monomial under descending graded-lex; for a symmetric
        // polynomial its exponents are non-increasing, and the classical
        // correspondence sends x^lambda to prod c_i^(lambda_i - lambda_{i+1}).
        const auto& [mono, coef] = *rest.terms().begin();
        Mono lambda = mono;
        lambda.resize(n + 1, 0);
        Mono cexp(n, 0);
        Poly basis = Poly::constant(s.inner.vars(), 1, rest.trunc());
        for (int i = 1; i <= n; ++i) {
            unsigned d = lambda[i - 1] - lambda[i];
            cexp[i - 1] = d;
            for (unsigned k = 0; k < d; ++k) basis = basis * e[i];
        }
        out.add_term(std::move(cexp), coef);
        rest = rest - basis.scaled(coef);
    }
    return out;
}

}  // namespace hirz
