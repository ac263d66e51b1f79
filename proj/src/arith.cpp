#include "rreg/arith.hpp"

#include "rreg/errors.hpp"

#include <array>
#include <limits>
#include <stdexcept>

namespace rreg {

namespace mp = boost::multiprecision;

// ---------------------------------------------------------------------------
// Rational

Rational::Rational(Integer n, Integer d) : num_(std::move(n)), den_(std::move(d)) {
    normalize();
}

void Rational::normalize() {
    if (den_.is_zero())
        throw std::domain_error("rational with zero denominator");
    if (den_.sign() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_.is_zero()) {
        den_ = 1;
        return;
    }
    Integer g = mp::gcd(num_, den_);
    if (g != 1) {
        num_ /= g;
        den_ /= g;
    }
}

namespace {

bool is_integer_literal(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+'))
        s.remove_prefix(1);
    if (s.empty())
        return false;
    for (char c : s)
        if (c < '0' || c > '9')
            return false;
    return true;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t'))
        s.remove_suffix(1);
    return s;
}

Integer integer_from(std::string_view s) {
    if (!s.empty() && s.front() == '+')
        s.remove_prefix(1);
    return Integer(std::string(s));
}

} // namespace

Rational Rational::parse(std::string_view text) {
    text = trim(text);
    auto slash = text.find('/');
    std::string_view n = trim(text.substr(0, slash));
    std::string_view d = slash == std::string_view::npos ? std::string_view("1") : trim(text.substr(slash + 1));
    if (!is_integer_literal(n) || !is_integer_literal(d))
        throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
    Integer den = integer_from(d);
    if (den.is_zero())
        throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
    return Rational(integer_from(n), std::move(den));
}

Rational& Rational::operator+=(const Rational& o) {
    if (den_ == o.den_) {
        num_ += o.num_;
    } else {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ *= o.den_;
    }
    normalize();
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    if (den_ == o.den_) {
        num_ -= o.num_;
    } else {
        num_ = num_ * o.den_ - o.num_ * den_;
        den_ *= o.den_;
    }
    normalize();
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    normalize();
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.num_.is_zero())
        throw std::domain_error("rational division by zero");
    num_ *= o.den_;
    den_ *= o.num_;
    normalize();
    return *this;
}

Rational Rational::operator-() const {
    Rational r = *this;
    r.num_ = -r.num_;
    return r;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    Integer lhs = a.num_ * b.den_;
    Integer rhs = b.num_ * a.den_;
    if (lhs < rhs)
        return std::strong_ordering::less;
    if (lhs > rhs)
        return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string Rational::str() const {
    if (den_ == 1)
        return num_.str();
    return num_.str() + "/" + den_.str();
}

double Rational::approx() const {
    return mp::cpp_rational(num_, den_).convert_to<double>();
}

std::ostream& operator<<(std::ostream& os, const Rational& q) {
    return os << q.str();
}

// ---------------------------------------------------------------------------
// Modular helpers and primality

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t result = 1 % m;
    base %= m;
    while (exp > 0) {
        if (exp & 1)
            result = mulmod(result, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return result;
}

std::uint64_t mod_u64(const Integer& n, std::uint64_t m) {
    Integer r = n % m;
    if (r.sign() < 0)
        r += m;
    return r.convert_to<std::uint64_t>();
}

bool is_prime(std::uint64_t n) {
    if (n < 2)
        return false;
    // These witnesses are deterministic for every n < 3.3e24.
    static constexpr std::array<std::uint64_t, 12> witnesses = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (std::uint64_t p : witnesses) {
        if (n % p == 0)
            return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : witnesses) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1)
            continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite)
            return false;
    }
    return true;
}

Prime::Prime(std::uint64_t p) : p_(p) {
    if (!is_prime(p))
        throw DomainError(std::to_string(p) + " is not prime");
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    if (n < 2)
        return out;
    std::vector<bool> composite(n + 1, false);
    for (std::uint64_t i = 2; i <= n; ++i) {
        if (composite[i])
            continue;
        out.push_back(i);
        for (std::uint64_t j = i * i; j <= n; j += i)
            composite[j] = true;
    }
    return out;
}

Integer ipow(const Integer& base, unsigned exp) {
    return mp::pow(base, exp);
}

namespace {

// Floor of the k-th root of n >= 0.
Integer iroot(const Integer& n, unsigned k) {
    if (k == 1 || n < 2)
        return n;
    unsigned bits = static_cast<unsigned>(mp::msb(n)) / k + 1;
    Integer lo = 0;
    Integer hi = Integer(1) << bits;
    while (lo < hi) {
        Integer mid = (lo + hi + 1) >> 1;
        if (mp::pow(mid, k) <= n)
            lo = mid;
        else
            hi = mid - 1;
    }
    return lo;
}

} // namespace

std::optional<PrimePower> prime_power_decompose(const Integer& q) {
    if (q < 2)
        return std::nullopt;
    const unsigned max_f = static_cast<unsigned>(mp::msb(q));
    for (unsigned f = max_f; f >= 1; --f) {
        Integer root = iroot(q, f);
        if (root < 2 || mp::pow(root, f) != q)
            continue;
        if (root > std::numeric_limits<std::uint64_t>::max())
            return std::nullopt;
        auto p = root.convert_to<std::uint64_t>();
        if (!is_prime(p))
            return std::nullopt;
        return PrimePower{Prime(p), f};
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// r-parts and orders

Integer r_part(const Integer& n, Prime r) {
    if (n < 1)
        throw DomainError("r_part needs n >= 1, got " + n.str());
    Integer part = 1;
    Integer rest = n;
    const Integer rr = r.value();
    for (;;) {
        Integer quot, rem;
        mp::divide_qr(rest, rr, quot, rem);
        if (!rem.is_zero())
            break;
        rest = std::move(quot);
        part *= rr;
    }
    return part;
}

std::uint64_t mult_order(const Integer& q, Prime r) {
    const std::uint64_t qm = mod_u64(q, r);
    if (qm == 0)
        throw DomainError("defining characteristic: r = " + std::to_string(r.value()) + " divides q = " + q.str());
    if (r == 2)
        return 1;
    std::uint64_t e = r - 1;
    std::uint64_t rest = e;
    for (std::uint64_t p = 2; p * p <= rest; ++p) {
        if (rest % p != 0)
            continue;
        while (rest % p == 0)
            rest /= p;
        while (e % p == 0 && powmod(qm, e / p, r) == 1)
            e /= p;
    }
    if (rest > 1) {
        while (e % rest == 0 && powmod(qm, e / rest, r) == 1)
            e /= rest;
    }
    return e;
}

Integer r_part_of_power_minus_one(const Integer& q, std::uint64_t e, Prime r) {
    if (mod_u64(q, r) == 0)
        throw DomainError("defining characteristic: r = " + std::to_string(r.value()) + " divides q = " + q.str());
    const std::uint64_t rv = r.value();
    // Fast path while r^(k+1) fits comfortably in 64 bits.
    std::uint64_t m = 1;
    while (m <= (std::uint64_t{1} << 62) / rv) {
        const std::uint64_t next = m * rv;
        if (powmod(mod_u64(q, next), e, next) != 1)
            return Integer(m);
        m = next;
    }
    Integer big = m;
    for (;;) {
        Integer next = big * rv;
        if (mp::powm(q % next, Integer(e), next) != 1)
            return big;
        big = std::move(next);
    }
}

} // namespace rreg
