#include "hirz/polyring.hpp"

#include <algorithm>
#include <sstream>

namespace hirz {

int VarSet::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == name) return static_cast<int>(i);
    return -1;
}

VarSetPtr make_varset(std::vector<std::string> names,
                      std::vector<int> weights) {
    if (names.size() != weights.size())
        throw std::domain_error("varset: names/weights size mismatch");
    auto v = std::make_shared<VarSet>();
    v->names = std::move(names);
    v->weights = std::move(weights);
    return v;
}

VarSetPtr chern_vars(int n, const std::vector<std::string>& extras) {
    std::vector<std::string> names;
    std::vector<int> weights;
    for (int i = 1; i <= n; ++i) {
        names.push_back("c" + std::to_string(i));
        weights.push_back(i);
    }
    for (const auto& e : extras) {
        names.push_back(e);
        weights.push_back(0);
    }
    return make_varset(std::move(names), std::move(weights));
}

void mono_trim(Mono& m) {
    while (!m.empty() && m.back() == 0) m.pop_back();
}

long mono_weight(const Mono& m, const VarSet& vars) {
    long w = 0;
    for (std::size_t i = 0; i < m.size(); ++i)
        w += static_cast<long>(m[i]) * vars.weights[i];
    return w;
}

bool MonoDescGradedLex::operator()(const Mono& a, const Mono& b) const {
    long wa = mono_weight(a, *vars), wb = mono_weight(b, *vars);
    if (wa != wb) return wa > wb;
    std::size_t n = std::max(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        unsigned ea = i < a.size() ? a[i] : 0;
        unsigned eb = i < b.size() ? b[i] : 0;
        if (ea != eb) return ea > eb;
    }
    return false;
}

Poly::Poly(VarSetPtr vars, int trunc)
    : vars_(std::move(vars)),
      trunc_(trunc),
      terms_(MonoDescGradedLex{vars_.get()}) {}

Poly Poly::constant(VarSetPtr vars, const Rat& c, int trunc) {
    Poly p(std::move(vars), trunc);
    p.add_term({}, c);
    return p;
}

Poly Poly::variable(VarSetPtr vars, int index, int trunc) {
    if (index < 0 || static_cast<std::size_t>(index) >= vars->size())
        throw std::domain_error("variable index out of range");
    Poly p(std::move(vars), trunc);
    Mono m(index + 1, 0);
    m[index] = 1;
    p.add_term(std::move(m), 1);
    return p;
}

void Poly::add_term(Mono m, const Rat& c) {
    if (c == 0) return;
    mono_trim(m);
    if (trunc_ >= 0 && mono_weight(m, *vars_) > trunc_) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(std::move(m), c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void Poly::check_compatible(const Poly& o) const {
    if (vars_->names != o.vars_->names || vars_->weights != o.vars_->weights)
        throw std::domain_error("incompatible variable sets");
}

namespace {
int merge_trunc(int a, int b) {
    if (a < 0) return b;
    if (b < 0) return a;
    return std::min(a, b);
}
}  // namespace

Poly Poly::operator+(const Poly& o) const {
    check_compatible(o);
    Poly r(vars_, merge_trunc(trunc_, o.trunc_));
    for (const auto& [m, c] : terms_) r.add_term(m, c);
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator-() const {
    Poly r(vars_, trunc_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Poly Poly::scaled(const Rat& c) const {
    Poly r(vars_, trunc_);
    if (c == 0) return r;
    for (const auto& [m, co] : terms_) r.terms_.emplace(m, co * c);
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    check_compatible(o);
    Poly r(vars_, merge_trunc(trunc_, o.trunc_));
    for (const auto& [ma, ca] : terms_) {
        long wa = mono_weight(ma, *vars_);
        for (const auto& [mb, cb] : o.terms_) {
            if (r.trunc_ >= 0 && wa + mono_weight(mb, *vars_) > r.trunc_)
                continue;
            Mono m(std::max(ma.size(), mb.size()), 0);
            for (std::size_t i = 0; i < ma.size(); ++i) m[i] += ma[i];
            for (std::size_t i = 0; i < mb.size(); ++i) m[i] += mb[i];
            r.add_term(std::move(m), ca * cb);
        }
    }
    return r;
}

Poly Poly::truncated(int deg) const {
    Poly r(vars_, deg);
    for (const auto& [m, c] : terms_)
        if (mono_weight(m, *vars_) <= deg) r.terms_.emplace(m, c);
    return r;
}

Poly Poly::substitute(const std::map<int, Poly>& bindings) const {
    Poly r(vars_, trunc_);
    for (const auto& [m, c] : terms_) {
        Poly term = Poly::constant(vars_, c, trunc_);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            auto it = bindings.find(static_cast<int>(i));
            Poly base = (it != bindings.end())
                            ? it->second
                            : Poly::variable(vars_, static_cast<int>(i),
                                             trunc_);
            for (unsigned k = 0; k < m[i]; ++k) term = term * base;
        }
        r = r + term;
    }
    return r;
}

Poly Poly::exp_series(int order) const {
    if (constant_term() != 0)
        throw std::domain_error("exp_series: nonzero constant term");
    Poly acc = Poly::constant(vars_, 1, trunc_);
    Poly powk = Poly::constant(vars_, 1, trunc_);
    Rat kfact = 1;
    for (int k = 1; k <= order; ++k) {
        powk = powk * *this;
        if (powk.is_zero()) break;
        kfact *= k;
        acc = acc + powk.scaled(Rat(1) / kfact);
    }
    return acc;
}

Rat Poly::evaluate(const std::vector<Rat>& assignment) const {
    if (assignment.size() != vars_->size())
        throw std::domain_error("evaluate: wrong assignment size");
    Rat total = 0;
    for (const auto& [m, c] : terms_) {
        Rat t = c;
        for (std::size_t i = 0; i < m.size(); ++i)
            for (unsigned k = 0; k < m[i]; ++k) t *= assignment[i];
        total += t;
    }
    return total;
}

Poly Poly::coeff_of(int var, unsigned k) const {
    Poly r(vars_, trunc_);
    for (const auto& [m, c] : terms_) {
        unsigned e = static_cast<std::size_t>(var) < m.size() ? m[var] : 0;
        if (e != k) continue;
        Mono rest = m;
        if (static_cast<std::size_t>(var) < rest.size()) rest[var] = 0;
        mono_trim(rest);
        r.add_term(std::move(rest), c);
    }
    return r;
}

Poly Poly::weight_part(long d) const {
    Poly r(vars_, trunc_);
    for (const auto& [m, c] : terms_)
        if (mono_weight(m, *vars_) == d) r.terms_.emplace(m, c);
    return r;
}

Rat Poly::constant_term() const {
    auto it = terms_.find(Mono{});
    return it == terms_.end() ? Rat(0) : it->second;
}

long Poly::max_exponent(int var) const {
    long mx = 0;
    for (const auto& [m, c] : terms_)
        if (static_cast<std::size_t>(var) < m.size())
            mx = std::max(mx, static_cast<long>(m[var]));
    return mx;
}

bool Poly::operator==(const Poly& o) const {
    if (vars_->names != o.vars_->names) return false;
    if (terms_.size() != o.terms_.size()) return false;
    auto a = terms_.begin();
    auto b = o.terms_.begin();
    for (; a != terms_.end(); ++a, ++b)
        if (a->first != b->first || a->second != b->second) return false;
    return true;
}

std::string Poly::render() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rat a = c;
        if (first) {
            if (a < 0) {
                out << "-";
                a = -a;
            }
        } else {
            out << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool unit = (a == 1);
        bool has_var = !m.empty();
        if (!unit || !has_var) out << a.get_str();
        bool need_star = !unit || !has_var;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (need_star) out << "*";
            need_star = true;
            out << vars_->names[i];
            if (m[i] > 1) out << "^" << m[i];
        }
    }
    return out.str();
}

nlohmann::json Poly::to_json() const {
    nlohmann::json vars = nlohmann::json::array();
    for (std::size_t i = 0; i < vars_->size(); ++i)
        vars.push_back({{"name", vars_->names[i]},
                        {"weight", vars_->weights[i]}});
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [m, c] : terms_) {
        std::vector<unsigned> exp(m.begin(), m.end());
        exp.resize(vars_->size(), 0);
        terms.push_back({{"exp", exp},
                         {"num", c.get_num().get_str()},
                         {"den", c.get_den().get_str()}});
    }
    return {{"vars", vars}, {"terms", terms}};
}

Poly Poly::from_json(const nlohmann::json& j, VarSetPtr vars) {
    Poly p(std::move(vars));
    for (const auto& t : j.at("terms")) {
        Mono m = t.at("exp").get<std::vector<unsigned>>();
        Rat c(Int(t.at("num").get<std::string>()),
              Int(t.at("den").get<std::string>()));
        c.canonicalize();
        p.add_term(std::move(m), c);
    }
    return p;
}

UniSeries UniSeries::mul(const UniSeries& o) const {
    int n = order();
    UniSeries r;
    r.c.assign(n + 1, 0);
    for (int i = 0; i <= n; ++i)
        for (int j = 0; i + j <= n && j <= o.order(); ++j)
            r.c[i + j] += c[i] * o.c[j];
    return r;
}

UniSeries UniSeries::reciprocal() const {
    if (c.empty() || c[0] == 0)
        throw std::domain_error("reciprocal: zero constant term");
    int n = order();
    UniSeries r;
    r.c.assign(n + 1, 0);
    r.c[0] = Rat(1) / c[0];
    for (int k = 1; k <= n; ++k) {
        Rat s = 0;
        for (int j = 1; j <= k; ++j)
            if (j <= order()) s += c[j] * r.c[k - j];
        r.c[k] = -s / c[0];
    }
    return r;
}

UniSeries todd_factor_denominator(int order) {
    // (1 - e^{-x})/x = sum_{k>=0} (-1)^k x^k/(k+1)!
    UniSeries s;
    s.c.assign(order + 1, 0);
    Rat f = 1;
    for (int k = 0; k <= order; ++k) {
        f *= (k + 1);
        s.c[k] = Rat((k % 2) ? -1 : 1) / f;
    }
    return s;
}

std::vector<Rat> todd_log_coefficients(int order) {
    // log u where u = x/(1-e^{-x}); u' /u integrated term-by-term:
    // l_k = (1/k) * [x^{k-1}] (u'/u).
    UniSeries u = todd_factor_denominator(order).reciprocal();
    UniSeries du;
    du.c.assign(order + 1, 0);
    for (int k = 1; k <= order; ++k) du.c[k - 1] = u.c[k] * k;
    UniSeries lu = du.mul(u.reciprocal());
    std::vector<Rat> l(order + 1, 0);
    for (int k = 1; k <= order; ++k) l[k] = lu.c[k - 1] / k;
    return l;
}

}  // namespace hirz
