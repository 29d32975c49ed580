// Arbitrary-precision scalars (GMP-backed) and elementary number theory:
// primality, deterministic factorisation with an explicit budget, integer
// roots, binomials, Euler phi.
#ifndef NCT_INTEGER_HPP
#define NCT_INTEGER_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace nct {

using BigInt = mpz_class;
using BigRat = mpq_class;

inline BigInt abs(const BigInt& a) { return ::abs(a); }
inline BigRat abs(const BigRat& a) { return ::abs(a); }
inline int sgn(const BigInt& a) { return mpz_sgn(a.get_mpz_t()); }
inline int sgn(const BigRat& a) { return mpq_sgn(a.get_mpq_t()); }

BigInt gcd(const BigInt& a, const BigInt& b);
BigInt lcm(const BigInt& a, const BigInt& b);
BigInt pow(const BigInt& base, unsigned long e);
BigRat pow(const BigRat& base, unsigned long e);

// floor(sqrt(n)), n >= 0
BigInt isqrt(const BigInt& n);
// floor(n^(1/k)), n >= 0, k >= 1
BigInt iroot(const BigInt& n, unsigned long k);
bool is_perfect_square(const BigInt& n);
// exact k-th root if n is a perfect k-th power
std::optional<BigInt> exact_root(const BigInt& n, unsigned long k);
std::optional<BigRat> exact_root(const BigRat& r, unsigned long k);

bool is_prime(const BigInt& n);
// smallest prime strictly greater than n
BigInt next_prime(const BigInt& n);

BigInt binomial(unsigned long n, unsigned long k);
unsigned long euler_phi(unsigned long n);

// v_p(n): exponent of p in n (n != 0), returns quotient n / p^v via *cofactor
unsigned long p_valuation(const BigInt& n, const BigInt& p, BigInt* cofactor = nullptr);

struct Factorization {
    // prime -> exponent, ascending primes
    std::map<BigInt, unsigned long> factors;
    BigInt unfactored = 1; // composite remainder when the budget ran out
    bool complete() const { return unfactored == 1; }

    BigInt value() const;
    // largest m with m^2 | n, using the factored part only
    BigInt square_part_root() const;
};

struct FactorBudget {
    uint64_t trial_bound = 1000000; // trial division by primes up to this
    uint64_t rho_iterations = 1 << 22; // Pollard rho (Brent) iteration cap
};

// Deterministic integer factorisation: cheap trial division, Brent's rho,
// then exhaustive trial division up to the budget before giving up.
Factorization factor_integer(const BigInt& n, const FactorBudget& budget = {});

// Primes in [2, bound], simple sieve.
const std::vector<uint32_t>& small_primes(uint32_t bound = 100000);

} // namespace nct

#endif
