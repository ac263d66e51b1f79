#include "rreg/cyclotomic.hpp"

#include "rreg/errors.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <utility>

namespace rreg {

namespace {

class CyclotomicCache {
public:
    const Integer* find(unsigned i, const Integer& q) const {
        std::shared_lock lock(mutex_);
        auto it = values_.find(Key{i, q});
        return it == values_.end() ? nullptr : &it->second;
    }

    void insert(unsigned i, const Integer& q, const Integer& value) {
        std::unique_lock lock(mutex_);
        values_.emplace(Key{i, q}, value);
    }

private:
    using Key = std::pair<unsigned, Integer>;

    mutable std::shared_mutex mutex_;
    // std::map never invalidates references on insert.
    std::map<Key, Integer> values_;
};

CyclotomicCache& cache() {
    static CyclotomicCache instance;
    return instance;
}

void require_coprime(const Integer& q, Prime r) {
    if (mod_u64(q, r) == 0)
        throw DomainError("defining characteristic: r = " + std::to_string(r.value()) + " divides q = " + q.str());
}

bool is_power_of(std::uint64_t n, std::uint64_t base) {
    if (n < base)
        return false;
    while (n % base == 0)
        n /= base;
    return n == 1;
}

} // namespace

Integer cyclotomic_eval(unsigned i, const Integer& q) {
    if (i == 0)
        throw DomainError("cyclotomic index must be >= 1");
    if (q < 2)
        throw DomainError("cyclotomic_eval needs q >= 2, got " + q.str());
    if (const Integer* hit = cache().find(i, q))
        return *hit;

    Integer value = ipow(q, i) - 1;
    for (unsigned j = 1; j < i; ++j) {
        if (i % j != 0)
            continue;
        Integer quot, rem;
        boost::multiprecision::divide_qr(value, cyclotomic_eval(j, q), quot, rem);
        if (!rem.is_zero())
            throw InternalError("non-exact division evaluating Phi_" + std::to_string(i) + "(" + q.str() + ")");
        value = std::move(quot);
    }
    cache().insert(i, q, value);
    return value;
}

Integer phi_r_part(unsigned i, const Integer& q, Prime r) {
    if (i == 0)
        throw DomainError("cyclotomic index must be >= 1");
    require_coprime(q, r);
    if (r == 2) {
        if (i == 1)
            return r_part(q - 1, r);
        if (i == 2)
            return r_part(q + 1, r);
        return is_power_of(i, 2) ? Integer(2) : Integer(1);
    }
    const std::uint64_t e = mult_order(q, r);
    if (i == e)
        return r_part_of_power_minus_one(q, e, r);
    if (i % e == 0 && is_power_of(i / e, r))
        return Integer(r.value());
    return 1;
}

Integer phi_r_part_oracle(unsigned i, const Integer& q, Prime r) {
    require_coprime(q, r);
    return r_part(cyclotomic_eval(i, q), r);
}

} // namespace rreg
