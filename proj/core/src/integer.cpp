#include "nct/integer.hpp"

#include <algorithm>
#include <mutex>

#include "nct/error.hpp"

namespace nct {

BigInt gcd(const BigInt& a, const BigInt& b) {
    BigInt r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

BigInt lcm(const BigInt& a, const BigInt& b) {
    BigInt r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

BigInt pow(const BigInt& base, unsigned long e) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

BigRat pow(const BigRat& base, unsigned long e) {
    BigRat r;
    mpz_pow_ui(mpq_numref(r.get_mpq_t()), mpq_numref(base.get_mpq_t()), e);
    mpz_pow_ui(mpq_denref(r.get_mpq_t()), mpq_denref(base.get_mpq_t()), e);
    return r;
}

BigInt isqrt(const BigInt& n) {
    BigInt r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

BigInt iroot(const BigInt& n, unsigned long k) {
    BigInt r;
    mpz_root(r.get_mpz_t(), n.get_mpz_t(), k);
    return r;
}

bool is_perfect_square(const BigInt& n) {
    return sgn(n) >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

std::optional<BigInt> exact_root(const BigInt& n, unsigned long k) {
    if (sgn(n) < 0 && k % 2 == 0) return std::nullopt;
    BigInt r;
    int exactp = mpz_root(r.get_mpz_t(), n.get_mpz_t(), k);
    if (exactp) return r;
    return std::nullopt;
}

std::optional<BigRat> exact_root(const BigRat& r, unsigned long k) {
    auto n = exact_root(BigInt(r.get_num()), k);
    if (!n) return std::nullopt;
    auto d = exact_root(BigInt(r.get_den()), k);
    if (!d) return std::nullopt;
    BigRat q(*n, *d);
    q.canonicalize();
    return q;
}

bool is_prime(const BigInt& n) {
    // BPSW + Miller-Rabin rounds; deterministic for the sizes in scope.
    return mpz_probab_prime_p(n.get_mpz_t(), 30) > 0;
}

BigInt next_prime(const BigInt& n) {
    BigInt r;
    mpz_nextprime(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

BigInt binomial(unsigned long n, unsigned long k) {
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

unsigned long euler_phi(unsigned long n) {
    unsigned long result = n;
    for (unsigned long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

unsigned long p_valuation(const BigInt& n, const BigInt& p, BigInt* cofactor) {
    BigInt q = n;
    unsigned long v = 0;
    BigInt r, t;
    while (sgn(q) != 0) {
        mpz_fdiv_qr(t.get_mpz_t(), r.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
        if (sgn(r) != 0) break;
        q = t;
        ++v;
    }
    if (cofactor) *cofactor = q;
    return v;
}

BigInt Factorization::value() const {
    BigInt v = unfactored;
    for (const auto& [p, e] : factors) v *= pow(p, e);
    return v;
}

BigInt Factorization::square_part_root() const {
    BigInt m = 1;
    for (const auto& [p, e] : factors)
        if (e >= 2) m *= pow(p, e / 2);
    return m;
}

const std::vector<uint32_t>& small_primes(uint32_t bound) {
    static std::vector<uint32_t> primes;
    static uint32_t sieved_to = 0;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    if (bound > sieved_to) {
        primes.clear();
        std::vector<bool> composite(bound + 1, false);
        for (uint32_t i = 2; i <= bound; ++i) {
            if (!composite[i]) {
                primes.push_back(i);
                for (uint64_t j = uint64_t(i) * i; j <= bound; j += i) composite[j] = true;
            }
        }
        sieved_to = bound;
    }
    return primes;
}

namespace {

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>((__uint128_t)a * b % m);
}

uint64_t gcd_u64(uint64_t a, uint64_t b) {
    while (b) {
        uint64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// Brent's cycle-finding variant of Pollard rho on 64-bit words.
// Returns 0 when the iteration cap was hit without finding a factor.
uint64_t brent_rho_u64(uint64_t n, uint64_t c, uint64_t max_iter) {
    if (n % 2 == 0) return 2;
    uint64_t y = 2, r = 1, q = 1, g = 1, x = 0, ys = 0;
    uint64_t iters = 0;
    const uint64_t batch = 128;
    while (g == 1) {
        x = y;
        for (uint64_t i = 0; i < r; ++i) y = (mulmod_u64(y, y, n) + c) % n;
        uint64_t k = 0;
        while (k < r && g == 1) {
            ys = y;
            uint64_t lim = std::min(batch, r - k);
            for (uint64_t i = 0; i < lim; ++i) {
                y = (mulmod_u64(y, y, n) + c) % n;
                uint64_t d = x > y ? x - y : y - x;
                q = mulmod_u64(q, d ? d : 1, n);
            }
            g = gcd_u64(q, n);
            k += lim;
            iters += lim;
            if (iters > max_iter) return 0;
        }
        r <<= 1;
        if (iters > max_iter) return 0;
    }
    if (g == n) {
        // backtrack one step at a time
        do {
            ys = (mulmod_u64(ys, ys, n) + c) % n;
            uint64_t d = x > ys ? x - ys : ys - x;
            g = gcd_u64(d ? d : n, n);
        } while (g == 1);
    }
    return g == n ? 0 : g;
}

// Rho for operands beyond 64 bits; same structure with mpz arithmetic.
BigInt brent_rho_mpz(const BigInt& n, unsigned long c, uint64_t max_iter) {
    BigInt y = 2, x, ys, q = 1, g = 1, d;
    uint64_t r = 1, iters = 0;
    const uint64_t batch = 128;
    auto step = [&](BigInt& v) {
        v = (v * v + c) % n;
    };
    while (g == 1) {
        x = y;
        for (uint64_t i = 0; i < r; ++i) step(y);
        uint64_t k = 0;
        while (k < r && g == 1) {
            ys = y;
            uint64_t lim = std::min(batch, r - k);
            for (uint64_t i = 0; i < lim; ++i) {
                step(y);
                d = x - y;
                if (sgn(d) == 0) d = 1;
                q = q * d % n;
            }
            g = gcd(q, n);
            k += lim;
            iters += lim;
            if (iters > max_iter) return 0;
        }
        r <<= 1;
        if (iters > max_iter) return 0;
    }
    if (g == n) {
        do {
            step(ys);
            d = x - ys;
            if (sgn(d) == 0) d = n;
            g = gcd(d, n);
        } while (g == 1);
    }
    return g == n ? BigInt(0) : g;
}

void factor_rec(BigInt n, const FactorBudget& budget, Factorization& out, int depth) {
    if (n == 1) return;
    if (is_prime(n)) {
        out.factors[n] += 1;
        return;
    }
    if (depth > 64) {
        out.unfactored *= n;
        return;
    }
    // perfect powers first: rho behaves badly on them
    for (unsigned long k = 2; k <= 6; ++k) {
        if (auto r = exact_root(n, k)) {
            Factorization sub;
            sub.unfactored = 1;
            factor_rec(*r, budget, sub, depth + 1);
            for (const auto& [p, e] : sub.factors) out.factors[p] += e * k;
            for (unsigned long i = 0; i < k && sub.unfactored != 1; ++i)
                out.unfactored *= sub.unfactored;
            return;
        }
    }
    BigInt g = 0;
    if (n.fits_ulong_p() || mpz_sizeinbase(n.get_mpz_t(), 2) <= 63) {
        uint64_t n64 = mpz_get_ui(n.get_mpz_t());
        for (uint64_t c = 1; c <= 8 && g == 0; ++c) {
            uint64_t f = brent_rho_u64(n64, c, budget.rho_iterations);
            if (f != 0 && f != n64) g = BigInt(static_cast<unsigned long>(f));
        }
    } else {
        for (unsigned long c = 1; c <= 8 && g == 0; ++c) {
            BigInt f = brent_rho_mpz(n, c, budget.rho_iterations);
            if (f != 0 && f != n) g = f;
        }
    }
    if (g == 0) {
        // fall back to the full trial-division budget
        const auto& primes = small_primes(static_cast<uint32_t>(
                std::min<uint64_t>(budget.trial_bound, 2000000)));
        for (uint32_t p : primes) {
            while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
                out.factors[BigInt(p)] += 1;
                mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
            }
            if (n == 1) return;
        }
        if (n == 1) return;
        if (is_prime(n)) {
            out.factors[n] += 1;
            return;
        }
        out.unfactored *= n;
        return;
    }
    factor_rec(g, budget, out, depth + 1);
    factor_rec(n / g, budget, out, depth + 1);
}

} // namespace

Factorization factor_integer(const BigInt& n_in, const FactorBudget& budget) {
    if (sgn(n_in) == 0) throw invalid_input("factor_integer: zero input");
    Factorization out;
    BigInt n = abs(n_in);
    if (n == 1) return out;
    // quick strip of small primes
    const auto& primes = small_primes(10000);
    for (uint32_t p : primes) {
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            unsigned long e = 0;
            do {
                mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
                ++e;
            } while (mpz_divisible_ui_p(n.get_mpz_t(), p));
            out.factors[BigInt(p)] = e;
        }
        if (n == 1) return out;
        if (uint64_t(p) * p > n && n.fits_ulong_p()) break;
    }
    if (n > 1) {
        if (n.fits_ulong_p() && n.get_ui() <= 100000000UL) {
            // residual below trial bound squared is prime
            out.factors[n] += 1;
        } else {
            factor_rec(n, budget, out, 0);
        }
    }
    return out;
}

} // namespace nct
