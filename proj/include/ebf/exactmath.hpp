#ifndef EBF_EXACTMATH_HPP
#define EBF_EXACTMATH_HPP

#include <array>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <span>
#include <vector>

#include "ebf/bignat.hpp"

namespace ebf {

class unfactored_error : public error {
public:
    explicit unfactored_error(const std::string& msg) : error(msg) {}
};

// ---------------------------------------------------------------------------
// 64-bit fast paths. Integer Newton only; no floating point so that
// perfect-square decisions stay bit-exact.
// ---------------------------------------------------------------------------

inline uint64_t isqrt_u64(uint64_t n) {
    if (n < 2) return n;
    unsigned bits = 64u - static_cast<unsigned>(std::countl_zero(n));
    uint64_t x = uint64_t{1} << ((bits + 1) / 2);  // x >= sqrt(n)
    while (true) {
        uint64_t y = (x + n / x) / 2;
        if (y >= x) break;
        x = y;
    }
    return x;
}

namespace detail {

template <unsigned M>
constexpr std::array<bool, M> square_residues() {
    std::array<bool, M> table{};
    for (unsigned i = 0; i < M; ++i) table[(i * i) % M] = true;
    return table;
}

inline constexpr auto kSq64 = square_residues<64>();
inline constexpr auto kSq63 = square_residues<63>();
inline constexpr auto kSq65 = square_residues<65>();
inline constexpr auto kSq11 = square_residues<11>();

}  // namespace detail

inline bool is_square_u64(uint64_t n, uint64_t* root = nullptr) {
    if (!detail::kSq64[n & 63]) return false;
    if (!detail::kSq63[n % 63]) return false;
    if (!detail::kSq65[n % 65]) return false;
    if (!detail::kSq11[n % 11]) return false;
    uint64_t r = isqrt_u64(n);
    if (r * r != n) return false;
    if (root) *root = r;
    return true;
}

using u128 = unsigned __int128;

inline uint64_t isqrt_u128(u128 n) {
    if (n <= UINT64_MAX) return isqrt_u64(static_cast<uint64_t>(n));
    unsigned bits = 128u - static_cast<unsigned>(std::countl_zero(static_cast<uint64_t>(n >> 64)));
    u128 x = u128{1} << ((bits + 1) / 2);
    while (true) {
        u128 y = (x + n / x) / 2;
        if (y >= x) break;
        x = y;
    }
    return static_cast<uint64_t>(x);
}

inline bool is_square_u128(u128 n, uint64_t* root = nullptr) {
    if (!detail::kSq64[static_cast<unsigned>(n) & 63]) return false;
    uint64_t r = isqrt_u128(n);
    if (static_cast<u128>(r) * r != n) return false;
    if (root) *root = r;
    return true;
}

// ---------------------------------------------------------------------------
// intsqrt
// ---------------------------------------------------------------------------

struct IntSqrtResult {
    BigNat root;   // floor(sqrt(n))
    bool exact;    // root * root == n
};

inline IntSqrtResult intsqrt(const BigNat& n) {
    if (n.is_zero()) return {BigNat(0), true};
    if (n.fits_u64()) {
        uint64_t v = n.to_u64();
        uint64_t r = isqrt_u64(v);
        return {BigNat(r), r * r == v};
    }
    BigNat x = BigNat(1).shifted_left((n.bit_length() + 1) / 2);  // x >= sqrt(n)
    while (true) {
        BigNat y = (x + n / x).shifted_right(1);
        if (y >= x) break;
        x = std::move(y);
    }
    bool exact = sq(x) == n;
    return {std::move(x), exact};
}

inline bool is_perfect_square(const BigNat& n, BigNat* root = nullptr) {
    if (n.fits_u64()) {
        uint64_t r;
        if (!is_square_u64(n.to_u64(), &r)) return false;
        if (root) *root = BigNat(r);
        return true;
    }
    auto [r, exact] = intsqrt(n);
    if (exact && root) *root = std::move(r);
    return exact;
}

// ---------------------------------------------------------------------------
// gcd over a list
// ---------------------------------------------------------------------------

inline BigNat gcd_all(std::span<const BigNat> values) {
    if (values.empty()) throw error("gcd of empty list");
    BigNat g;
    for (const BigNat& v : values) g = gcd(g, v);
    if (g.is_zero()) throw error("gcd of all-zero list is undefined");
    return g;
}

inline BigNat gcd_all(std::initializer_list<BigNat> values) {
    return gcd_all(std::span<const BigNat>(values.begin(), values.size()));
}

// ---------------------------------------------------------------------------
// Factorization: deterministic Miller-Rabin plus Brent's variant of Pollard
// rho for 64-bit values, trial division otherwise. Effort is capped by
// EBF_MAX_FACTOR_BUDGET; exceeding the cap throws unfactored_error rather
// than returning partial output.
// ---------------------------------------------------------------------------

inline uint64_t factor_budget() {
    static const uint64_t budget = [] {
        if (const char* env = std::getenv("EBF_MAX_FACTOR_BUDGET")) {
            char* end = nullptr;
            unsigned long long v = std::strtoull(env, &end, 10);
            if (end && *end == '\0' && v > 0) return static_cast<uint64_t>(v);
        }
        return uint64_t{1000000};
    }();
    return budget;
}

namespace detail {

inline uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>(static_cast<u128>(a) * b % m);
}

inline uint64_t powmod_u64(uint64_t base, uint64_t exp, uint64_t m) {
    uint64_t result = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) result = mulmod_u64(result, base, m);
        base = mulmod_u64(base, base, m);
        exp >>= 1;
    }
    return result;
}

inline bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

// Brent's cycle finding; deterministic constant sequence.
inline uint64_t pollard_brent(uint64_t n, uint64_t max_steps) {
    if ((n & 1) == 0) return 2;
    for (uint64_t c = 1; c < 64; ++c) {
        uint64_t x = 2, y = 2, d = 1;
        uint64_t steps = 0;
        uint64_t power = 1, lam = 1;
        while (d == 1) {
            if (++steps > max_steps) break;
            if (power == lam) { x = y; power <<= 1; lam = 0; }
            y = (mulmod_u64(y, y, n) + c) % n;
            ++lam;
            uint64_t diff = x > y ? x - y : y - x;
            if (diff == 0) break;
            d = std::gcd(diff, n);
        }
        if (d != 1 && d != n) return d;
    }
    return 0;
}

inline void factor_u64_into(uint64_t n, std::vector<uint64_t>& primes) {
    if (n == 1) return;
    if (is_prime_u64(n)) { primes.push_back(n); return; }
    for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull}) {
        if (n % p == 0) {
            primes.push_back(p);
            factor_u64_into(n / p, primes);
            return;
        }
    }
    uint64_t d = pollard_brent(n, factor_budget());
    if (d == 0) throw unfactored_error("factorization budget exhausted for " + std::to_string(n));
    factor_u64_into(d, primes);
    factor_u64_into(n / d, primes);
}

inline bool is_probable_prime_big(const BigNat& n) {
    if (n.fits_u64()) return is_prime_u64(n.to_u64());
    // n is odd here (even values were split by trial division).
    BigNat n_minus_1 = n - BigNat(1);
    BigNat d = n_minus_1;
    size_t s = 0;
    while (d.is_even()) { d = d.shifted_right(1); ++s; }
    auto powmod = [&n](BigNat base, const BigNat& exp) {
        BigNat result(1);
        BigNat e = exp;
        base = base % n;
        while (!e.is_zero()) {
            if (e.is_odd()) result = result * base % n;
            base = sq(base) % n;
            e = e.shifted_right(1);
        }
        return result;
    };
    for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        BigNat x = powmod(BigNat(a), d);
        if (x == BigNat(1) || x == n_minus_1) continue;
        bool composite = true;
        for (size_t i = 1; i < s; ++i) {
            x = sq(x) % n;
            if (x == n_minus_1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

}  // namespace detail

struct PrimePower {
    BigNat prime;
    unsigned exponent = 0;
};

inline std::vector<PrimePower> factorize(const BigNat& n) {
    if (n.is_zero()) throw error("cannot factorize 0");
    std::vector<uint64_t> small_primes;
    BigNat rest = n;

    if (rest.fits_u64()) {
        detail::factor_u64_into(rest.to_u64(), small_primes);
        rest = BigNat(1);
    } else {
        // Trial division up to the budget, then a primality check on what is left.
        uint64_t budget = factor_budget();
        for (uint64_t p = 2; p <= budget && !(rest == BigNat(1)); p += (p == 2 ? 1 : 2)) {
            if (rest.fits_u64()) {
                detail::factor_u64_into(rest.to_u64(), small_primes);
                rest = BigNat(1);
                break;
            }
            BigNat bp(p);
            if (sq(bp) > rest) break;
            while ((rest % bp).is_zero()) {
                small_primes.push_back(p);
                rest = rest / bp;
            }
        }
        if (!(rest == BigNat(1))) {
            if (rest.fits_u64()) {
                detail::factor_u64_into(rest.to_u64(), small_primes);
                rest = BigNat(1);
            } else if (detail::is_probable_prime_big(rest)) {
                // sentinel sorts last: rest exceeds every 64-bit trial prime
                small_primes.push_back(UINT64_MAX);
            } else {
                throw unfactored_error("factorization budget exhausted for " + n.to_decimal());
            }
        }
    }

    std::sort(small_primes.begin(), small_primes.end());
    std::vector<PrimePower> out;
    for (uint64_t p : small_primes) {
        BigNat prime = p == UINT64_MAX ? rest : BigNat(p);
        if (!out.empty() && out.back().prime == prime) {
            ++out.back().exponent;
        } else {
            out.push_back({std::move(prime), 1});
        }
    }
    return out;
}

// Largest s with s^2 | n, via the factorization.
inline BigNat square_part(const BigNat& n) {
    BigNat s(1);
    for (const auto& pp : factorize(n))
        for (unsigned i = 0; i < pp.exponent / 2; ++i) s = s * pp.prime;
    return s;
}

// ---------------------------------------------------------------------------
// Sums of two positive squares
// ---------------------------------------------------------------------------

struct TwoSquaresRep {
    BigNat a;  // 1 <= a <= b
    BigNat b;
};

// All (a, b) with 1 <= a <= b and a^2 + b^2 = n, ascending in a.
inline std::vector<TwoSquaresRep> two_squares_reps(const BigNat& n) {
    if (n.is_zero()) throw error("two_squares_reps requires n >= 1");
    std::vector<TwoSquaresRep> out;
    if (n.fits_u64()) {
        uint64_t v = n.to_u64();
        for (uint64_t a = 1; 2 * a * a <= v; ++a) {
            uint64_t b;
            if (is_square_u64(v - a * a, &b)) out.push_back({BigNat(a), BigNat(b)});
        }
        return out;
    }
    for (BigNat a(1); sq(a) + sq(a) <= n; a += BigNat(1)) {
        BigNat b;
        if (is_perfect_square(n - sq(a), &b)) out.push_back({a, std::move(b)});
    }
    return out;
}

// The working assumption on hypotenuses: a unique positive representation.
inline bool is_admissible_hypotenuse(const BigNat& n) {
    return two_squares_reps(n).size() == 1;
}

}  // namespace ebf

#endif
