#pragma once
// Arbitrary-precision integers/rationals (GMP) plus the number-theoretic
// primitives the elimination engine consumes: deterministic factorization,
// divisor enumeration, perfect-square and residue tests.

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hirz {

using Int = mpz_class;
using Rat = mpq_class;

// Complete signed factorization: value = sign * prod(prime^exp),
// primes strictly ascending.
struct Factorization {
    Int input;
    int sign = 1;  // -1 for negative input
    std::vector<std::pair<Int, unsigned>> factors;

    Int reassemble() const;
    std::string to_string() const;  // e.g. "7^6*37*251*1559*131849"
};

// Nonnegative square root if n is a perfect square, absent otherwise
// (negative input yields absent).
std::optional<Int> is_perfect_square(const Int& n);

// Deterministic Miller-Rabin (fixed base set, valid far beyond the
// magnitudes used here, ~3.3e24).
bool is_prime(const Int& n);

// Trial division below 1e6, then Brent-Pollard rho with fixed seeding.
// factorize(0) throws.
Factorization factorize(const Int& n);

// All positive divisors of |input| in ascending order, filtered by pred.
std::vector<Int> divisors(const Factorization& f,
                          const std::function<bool(const Int&)>& pred = {});

// Canonical residue in [0, modulus).
Int mod_residue(const Int& value, const Int& modulus);

inline Int binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return r;
}

inline Int factorial(long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

}  // namespace hirz
