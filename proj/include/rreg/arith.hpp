#pragma once

// Exact integer and rational arithmetic, primes, r-parts and multiplicative
// orders. Integer is Boost.Multiprecision's cpp_int; Rational is a thin
// always-normalized fraction over it.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace rreg {

using Integer = boost::multiprecision::cpp_int;

/// Exact fraction in lowest terms with a positive denominator.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(Integer n) : num_(std::move(n)), den_(1) {}   // NOLINT(google-explicit-constructor)
    Rational(int n) : num_(n), den_(1) {}                  // NOLINT(google-explicit-constructor)
    Rational(Integer n, Integer d);

    /// Parses "a/b" or "a". Throws std::invalid_argument.
    static Rational parse(std::string_view text);

    const Integer& num() const noexcept { return num_; }
    const Integer& den() const noexcept { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    int sign() const { return num_.sign(); }

    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const;

    friend bool operator==(const Rational&, const Rational&) = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    /// "n/d", or just "n" when the denominator is 1.
    std::string str() const;
    /// Nearest double. For display only.
    double approx() const;

private:
    void normalize();

    Integer num_;
    Integer den_;
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

bool is_prime(std::uint64_t n);

/// A value checked prime at construction.
class Prime {
public:
    explicit Prime(std::uint64_t p);

    std::uint64_t value() const noexcept { return p_; }
    operator std::uint64_t() const noexcept { return p_; }   // NOLINT(google-explicit-constructor)

    friend bool operator==(Prime, Prime) = default;
    friend auto operator<=>(Prime, Prime) = default;

private:
    std::uint64_t p_;
};

struct PrimePower {
    Prime p;
    unsigned f;
};

/// q = p^f with p prime, or nullopt.
std::optional<PrimePower> prime_power_decompose(const Integer& q);

/// All primes <= n, ascending.
std::vector<std::uint64_t> primes_up_to(std::uint64_t n);

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);
std::uint64_t mod_u64(const Integer& n, std::uint64_t m);

/// Largest power of r dividing n (n >= 1).
Integer r_part(const Integer& n, Prime r);

/// Smallest e >= 1 with q^e = 1 (mod r). Throws DomainError when r | q.
std::uint64_t mult_order(const Integer& q, Prime r);

/// The r-part of q^e - 1, computed with modular powers rather than by
/// expanding q^e.
Integer r_part_of_power_minus_one(const Integer& q, std::uint64_t e, Prime r);

Integer ipow(const Integer& base, unsigned exp);

} // namespace rreg
