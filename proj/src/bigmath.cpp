#include "hirz/bigmath.hpp"

#include <algorithm>
#include <map>

namespace hirz {

Int Factorization::reassemble() const {
    Int v = sign;
    for (const auto& [p, e] : factors) {
        Int pe;
        mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e);
        v *= pe;
    }
    return v;
}

std::string Factorization::to_string() const {
    std::string s = sign < 0 ? "-" : "";
    if (factors.empty()) return s + "1";
    bool first = true;
    for (const auto& [p, e] : factors) {
        if (!first) s += "*";
        first = false;
        s += p.get_str();
        if (e > 1) s += "^" + std::to_string(e);
    }
    return s;
}

std::optional<Int> is_perfect_square(const Int& n) {
    if (n < 0) return std::nullopt;
    if (mpz_perfect_square_p(n.get_mpz_t())) {
        Int r;
        mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
        return r;
    }
    return std::nullopt;
}

bool is_prime(const Int& n) {
    if (n < 2) return false;
    // Deterministic Miller-Rabin with the first 13 prime bases: correct for
    // all n < 3.317e24, comfortably above every composite this engine meets.
    static const unsigned long bases[] = {2,  3,  5,  7,  11, 13, 17,
                                          19, 23, 29, 31, 37, 41};
    Int d = n - 1;
    unsigned long s = 0;
    while (mpz_even_p(d.get_mpz_t())) {
        d >>= 1;
        ++s;
    }
    for (unsigned long a : bases) {
        if (n == a) return true;
        if (mpz_divisible_ui_p(n.get_mpz_t(), a)) return false;
        Int x;
        Int base = a;
        mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(),
                 n.get_mpz_t());
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (unsigned long r = 1; r < s; ++r) {
            x = (x * x) % n;
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

namespace {

Int pollard_rho(const Int& n) {
    // Brent's cycle variant with deterministic constants; n odd composite,
    // no prime factors below 1e6.
    for (unsigned long c = 1;; ++c) {
        Int x = 2, y = 2, d = 1, q = 1;
        Int ys = y;
        const unsigned long m = 128;
        unsigned long r = 1;
        auto f = [&](const Int& v) -> Int { return (v * v + c) % n; };
        while (d == 1) {
            x = y;
            for (unsigned long i = 0; i < r; ++i) y = f(y);
            for (unsigned long k = 0; k < r && d == 1; k += m) {
                ys = y;
                for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
                    y = f(y);
                    q = q * abs(x - y) % n;
                }
                mpz_gcd(d.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
            }
            r *= 2;
        }
        if (d == n) {
            // backtrack
            d = 1;
            while (d == 1) {
                ys = f(ys);
                Int diff = abs(x - ys);
                mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
            }
        }
        if (d != n) return d;
        // rare failure: retry with next c (still deterministic)
    }
}

void factor_into(Int n, std::map<Int, unsigned>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        ++out[n];
        return;
    }
    Int d = pollard_rho(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

}  // namespace

Factorization factorize(const Int& n) {
    if (n == 0) throw std::domain_error("factorize(0)");
    Factorization f;
    f.input = n;
    f.sign = n < 0 ? -1 : 1;
    Int m = abs(n);
    std::map<Int, unsigned> acc;
    for (unsigned long p = 2; p < 1000000 && m > 1;
         p = (p == 2 ? 3 : p + 2)) {
        if (Int(p) * p > m) break;
        while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            ++acc[Int(p)];
            m /= p;
        }
    }
    if (m > 1) {
        if (is_prime(m) || m < Int(1000000) * 1000000)
            ++acc[m];  // below 1e12 any survivor of trial division is prime
        else
            factor_into(m, acc);
    }
    f.factors.assign(acc.begin(), acc.end());
    return f;
}

std::vector<Int> divisors(const Factorization& f,
                          const std::function<bool(const Int&)>& pred) {
    // Exponent-vector odometer, then sort ascending for determinism.
    std::vector<Int> all{1};
    for (const auto& [p, e] : f.factors) {
        std::vector<Int> next;
        next.reserve(all.size() * (e + 1));
        Int pe = 1;
        for (unsigned k = 0; k <= e; ++k) {
            for (const Int& d : all) next.push_back(d * pe);
            pe *= p;
        }
        all = std::move(next);
    }
    std::sort(all.begin(), all.end());
    if (!pred) return all;
    std::vector<Int> kept;
    for (const Int& d : all)
        if (pred(d)) kept.push_back(d);
    return kept;
}

Int mod_residue(const Int& value, const Int& modulus) {
    if (modulus < 1) throw std::domain_error("mod_residue: modulus < 1");
    Int r;
    mpz_mod(r.get_mpz_t(), value.get_mpz_t(), modulus.get_mpz_t());
    return r;
}

}  // namespace hirz
