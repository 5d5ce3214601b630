#include "hirz/genera.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace hirz {

namespace {

// Copy a polynomial onto a variable table sharing the same leading variables;
// only valid when every used variable index exists in the target.
Poly transplant(const Poly& p, const VarSetPtr& target) {
    Poly out(target, p.trunc());
    for (const auto& [m, c] : p.terms()) {
        if (m.size() > target->size())
            throw std::logic_error("transplant: variable out of range");
        out.add_term(m, c);
    }
    return out;
}

// Drop terms whose exponent of var exceeds cap.
Poly cap_var(const Poly& p, int var, unsigned cap) {
    Poly out(p.vars(), p.trunc());
    for (const auto& [m, c] : p.terms()) {
        unsigned e = static_cast<std::size_t>(var) < m.size() ? m[var] : 0;
        if (e <= cap) out.add_term(m, c);
    }
    return out;
}

// exp(arg) with the exponent of capvar capped at cap after every product;
// arg must have zero constant term and positive minimum weight.
Poly exp_capped(const Poly& arg, int order, int capvar, unsigned cap) {
    Poly acc = Poly::constant(arg.vars(), 1, arg.trunc());
    Poly pw = acc;
    Rat fact = 1;
    for (int k = 1; k <= order; ++k) {
        pw = cap_var(pw * arg, capvar, cap);
        if (pw.is_zero()) break;
        fact *= k;
        acc = acc + pw.scaled(Rat(1) / fact);
    }
    return acc;
}

}  // namespace

std::vector<Poly> power_sums_in_chern(int n, const VarSetPtr& vars) {
    std::vector<Poly> p(n + 1, Poly(vars, n));
    for (int k = 1; k <= n; ++k) {
        Poly ck = Poly::variable(vars, k - 1, n);
        Poly acc = ck.scaled(k % 2 ? Rat(k) : Rat(-k));
        for (int i = 1; i < k; ++i) {
            Poly ci = Poly::variable(vars, i - 1, n);
            Poly t = ci * p[k - i];
            acc = (i % 2) ? acc + t : acc - t;
        }
        p[k] = acc;
    }
    return p;
}

Poly todd_series_in_chern(int n, const VarSetPtr& vars) {
    auto p = power_sums_in_chern(n, vars);
    auto l = todd_log_coefficients(n);
    Poly arg(vars, n);
    for (int j = 1; j <= n; ++j) arg = arg + p[j].scaled(l[j]);
    return arg.exp_series(n);
}

GenusTable genus_table(int n) {
    auto vars_y = chern_vars(n, {"y"});
    const int y = static_cast<int>(vars_y->size()) - 1;
    auto p = power_sums_in_chern(n, vars_y);

    // log prod_i(1 + y e^{-x_i}) minus its n*log(1+y) part:
    // sum_{k>=1} (-1)^{k+1} (y^k/k) sum_{j>=1} (-k)^j p_j / j!
    Poly arg(vars_y, n);
    for (int k = 1; k <= n; ++k) {
        Poly inner(vars_y, n);
        Rat kj = 1;  // (-k)^j / j!
        for (int j = 1; j <= n; ++j) {
            kj *= Rat(-k, j);
            inner = inner + p[j].scaled(kj);
        }
        Mono ym(y + 1, 0);
        ym[y] = static_cast<unsigned>(k);
        Poly yk(vars_y, n);
        yk.add_term(std::move(ym), (k % 2) ? Rat(1, k) : Rat(-1, k));
        arg = arg + yk * inner;
    }
    Poly E = exp_capped(arg, n, y, static_cast<unsigned>(n));

    // (1+y)^n exactly
    Poly onepy = Poly::constant(vars_y, 1, n) + Poly::variable(vars_y, y, n);
    Poly binom_part = Poly::constant(vars_y, 1, n);
    for (int i = 0; i < n; ++i)
        binom_part = cap_var(binom_part * onepy, y, static_cast<unsigned>(n));

    Poly Td = todd_series_in_chern(n, vars_y);
    Poly chiY = cap_var(E * binom_part * Td, y, static_cast<unsigned>(n))
                    .weight_part(n);

    GenusTable g;
    g.n = n;
    g.chiY = chiY;
    auto cvars = chern_vars(n);
    for (int q = 0; q <= n; ++q)
        g.chiP.push_back(transplant(chiY.coeff_of(y, q), cvars));
    g.toddTop = g.chiP[0];

    auto vars_z = chern_vars(n, {"z"});
    const int z = static_cast<int>(vars_z->size()) - 1;
    Poly zm1 = Poly::variable(vars_z, z, -1) - Poly::constant(vars_z, 1, -1);
    Poly t(vars_z, -1);
    Poly zp = Poly::constant(vars_z, 1, -1);
    for (int q = 0; q <= n; ++q) {
        Poly cq(vars_z, -1);
        for (const auto& [m, c] : g.chiP[q].terms()) cq.add_term(m, c);
        t = t + cq * zp;
        if (q < n) zp = zp * zm1;
    }
    g.tPoly = t;
    return g;
}

std::array<Poly, 3> t_low_order_check(int n) {
    GenusTable g = genus_table(n);
    const int z = static_cast<int>(g.tPoly.vars()->size()) - 1;
    auto cvars = chern_vars(n);
    std::array<Poly, 3> out{Poly(cvars), Poly(cvars), Poly(cvars)};
    for (unsigned k = 0; k < 3; ++k)
        out[k] = transplant(g.tPoly.coeff_of(z, k), cvars);
    return out;
}

Poly projective_specialize(int n) {
    GenusTable g = genus_table(n);
    const int z = static_cast<int>(g.tPoly.vars()->size()) - 1;
    auto zvars = make_varset({"z"}, {0});
    Poly out(zvars);
    for (long k = 0; k <= g.tPoly.max_exponent(z); ++k) {
        Poly coef = g.tPoly.coeff_of(z, static_cast<unsigned>(k));
        std::vector<Rat> assign(g.tPoly.vars()->size(), 0);
        for (int i = 1; i <= n; ++i) assign[i - 1] = Rat(binomial(n + 1, i));
        Rat v = coef.evaluate(assign);
        if (v != 0) out.add_term(Mono{static_cast<unsigned>(k)}, v);
    }
    return out;
}

TwistPolynomial chi_line_bundle(int n) {
    auto vars = chern_vars(n, {"m"});
    const int m = static_cast<int>(vars->size()) - 1;
    Poly Td = todd_series_in_chern(n, vars);
    Poly out(vars);
    Rat fact = 1;
    for (int k = 0; k <= n; ++k) {
        if (k > 0) fact *= k;
        Mono mm(m + 1, 0);
        mm[m] = static_cast<unsigned>(k);
        Poly mk(vars);
        mk.add_term(std::move(mm), Rat(1) / fact);
        out = out + mk * Td.weight_part(n - k);
    }
    return TwistPolynomial{n, TwistKind::LineBundle, out};
}

TwistPolynomial chi_tangent_twist(int n) {
    auto vars = chern_vars(n, {"m"});
    const int m = static_cast<int>(vars->size()) - 1;
    Poly Td = todd_series_in_chern(n, vars);
    auto p = power_sums_in_chern(n, vars);
    std::vector<Poly> ch(n + 1, Poly(vars, n));
    ch[0] = Poly::constant(vars, n, n);
    Rat afact = 1;
    for (int a = 1; a <= n; ++a) {
        afact *= a;
        ch[a] = p[a].scaled(Rat(1) / afact);
    }
    Poly out(vars);
    Rat fact = 1;
    for (int k = 0; k <= n; ++k) {
        if (k > 0) fact *= k;
        Poly slice(vars, n);
        for (int a = 0; a + k <= n; ++a)
            slice = slice + ch[a].weight_part(a) * Td.weight_part(n - k - a);
        Mono mm(m + 1, 0);
        mm[m] = static_cast<unsigned>(k);
        Poly mk(vars);
        mk.add_term(std::move(mm), Rat(1) / fact);
        out = out + mk * slice.weight_part(n - k);
    }
    return TwistPolynomial{n, TwistKind::TangentTwist, out};
}

namespace {

// binom(m+d, d) = prod_{i=1..d} (m+i) / d! as a polynomial.
Poly binom_poly(const VarSetPtr& vars, int mvar, int d) {
    Poly out = Poly::constant(vars, 1);
    Poly mv = Poly::variable(vars, mvar);
    for (int i = 1; i <= d; ++i)
        out = out * (mv + Poly::constant(vars, i));
    return out.scaled(Rat(1) / Rat(factorial(d)));
}

}  // namespace

IntegralityDecomposition binomial_decompose(const Poly& P, int n, int mvar) {
    Poly Q = P;
    IntegralityDecomposition d;
    d.n = n;
    for (int k = 0; k <= n; ++k) {
        const int deg = n - k;
        Poly lead = Q.coeff_of(mvar, static_cast<unsigned>(deg));
        Poly ak = lead.scaled(Rat(factorial(deg)));
        if (k == 0) {
            Poly one = Poly::constant(P.vars(), 1, P.trunc());
            if (!(ak == one))
                throw std::domain_error(
                    "binomial_decompose: leading coefficient is not 1/n!");
        }
        d.coeffs.push_back(ak);
        Q = Q - ak * binom_poly(P.vars(), mvar, deg);
    }
    if (!Q.is_zero())
        throw std::logic_error("binomial_decompose: nonzero remainder");
    return d;
}

Poly binomial_reconstruct(const IntegralityDecomposition& d,
                          const VarSetPtr& vars, int mvar) {
    Poly out(vars);
    for (std::size_t k = 0; k < d.coeffs.size(); ++k) {
        Poly ak(vars);
        for (const auto& [m, c] : d.coeffs[k].terms()) ak.add_term(m, c);
        out = out + ak * binom_poly(vars, mvar, d.n - static_cast<int>(k));
    }
    return out;
}

// ---------------------------------------------------------------- parsing

namespace {

struct Parser {
    const std::string& s;
    std::size_t i = 0;
    const VarSetPtr& vars;

    void skip() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i])))
            ++i;
    }
    bool eat(char c) {
        skip();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& what) {
        throw std::runtime_error("parse error at offset " + std::to_string(i) +
                                 ": " + what);
    }

    Poly expression() {
        skip();
        bool neg = false;
        if (eat('-')) neg = true;
        else eat('+');
        Poly acc = term();
        if (neg) acc = -acc;
        for (;;) {
            skip();
            if (eat('+')) acc = acc + term();
            else if (eat('-')) acc = acc - term();
            else break;
        }
        return acc;
    }
    Poly term() {
        Poly acc = factor();
        while (eat('*')) acc = acc * factor();
        return acc;
    }
    Poly factor() {
        Poly base = primary();
        if (eat('^')) {
            skip();
            unsigned e = uint_lit();
            Poly out = Poly::constant(vars, 1);
            for (unsigned k = 0; k < e; ++k) out = out * base;
            return out;
        }
        return base;
    }
    Poly primary() {
        skip();
        if (eat('(')) {
            Poly p = expression();
            if (!eat(')')) fail("expected ')'");
            return p;
        }
        if (i < s.size() &&
            (std::isdigit(static_cast<unsigned char>(s[i])))) {
            Int num = int_lit();
            if (eat('/')) {
                skip();
                Int den = int_lit();
                return Poly::constant(vars, Rat(num) / Rat(den));
            }
            return Poly::constant(vars, Rat(num));
        }
        if (i < s.size() &&
            std::isalpha(static_cast<unsigned char>(s[i]))) {
            std::size_t j = i;
            while (j < s.size() &&
                   (std::isalnum(static_cast<unsigned char>(s[j])) ||
                    s[j] == '_'))
                ++j;
            std::string name = s.substr(i, j - i);
            i = j;
            int idx = vars->index_of(name);
            if (idx < 0) fail("unknown variable '" + name + "'");
            return Poly::variable(vars, idx);
        }
        fail("expected a factor");
    }
    Int int_lit() {
        skip();
        std::size_t j = i;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j])))
            ++j;
        if (j == i) fail("expected an integer");
        Int v(s.substr(i, j - i));
        i = j;
        return v;
    }
    unsigned uint_lit() {
        Int v = int_lit();
        return static_cast<unsigned>(v.get_ui());
    }
};

}  // namespace

Poly parse_poly_expression(const std::string& text, const VarSetPtr& vars) {
    Parser p{text, 0, vars};
    Poly out = p.expression();
    p.skip();
    if (p.i != text.size()) p.fail("trailing input");
    return out;
}

Poly load_golden_fixture(const std::string& path, const VarSetPtr& vars) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open fixture: " + path);
    std::ostringstream body;
    std::string line;
    while (std::getline(in, line)) {
        std::size_t first = line.find_first_not_of(" \t");
        if (first != std::string::npos && line[first] == '#') continue;
        body << line << '\n';
    }
    return parse_poly_expression(body.str(), vars);
}

GoldenComparison compare_to_golden(const Poly& engine, const Poly& fixture) {
    GoldenComparison out;
    auto render_mono = [&](const Mono& m) {
        Poly one(engine.vars());
        one.add_term(m, 1);
        return one.render();
    };
    auto diff = engine - fixture;
    for (const auto& [m, c] : diff.terms()) {
        (void)c;
        Rat ev = 0, fv = 0;
        if (auto it = engine.terms().find(m); it != engine.terms().end())
            ev = it->second;
        if (auto it = fixture.terms().find(m); it != fixture.terms().end())
            fv = it->second;
        auto rstr = [](const Rat& r) {
            return r.get_num().get_str() +
                   (r.get_den() == 1 ? "" : "/" + r.get_den().get_str());
        };
        out.diffs.push_back({render_mono(m), rstr(ev), rstr(fv)});
    }
    out.match = out.diffs.empty();
    return out;
}

}  // namespace hirz
