#include "rreg/family.hpp"

#include "rreg/errors.hpp"

#include <algorithm>
#include <cctype>

namespace rreg {

std::string_view family_name(FamilyId f) {
    switch (f) {
    case FamilyId::G2: return "G2";
    case FamilyId::F4: return "F4";
    case FamilyId::E6: return "E6";
    case FamilyId::TwE6: return "2E6";
    case FamilyId::E7: return "E7";
    case FamilyId::E8: return "E8";
    case FamilyId::TwB2: return "2B2";
    case FamilyId::TwG2: return "2G2";
    case FamilyId::TwF4: return "2F4";
    case FamilyId::TriD4: return "3D4";
    }
    return "?";
}

namespace {

std::string_view identifier_name(FamilyId f) {
    switch (f) {
    case FamilyId::TwE6: return "TwE6";
    case FamilyId::TwB2: return "TwB2";
    case FamilyId::TwG2: return "TwG2";
    case FamilyId::TwF4: return "TwF4";
    case FamilyId::TriD4: return "TriD4";
    default: return family_name(f);
    }
}

bool iequals(std::string_view a, std::string_view b) {
    return a.size() == b.size() && std::equal(a.begin(), a.end(), b.begin(), [](char x, char y) {
               return std::tolower(static_cast<unsigned char>(x)) == std::tolower(static_cast<unsigned char>(y));
           });
}

} // namespace

std::optional<FamilyId> parse_family(std::string_view text) {
    for (FamilyId f : kAllFamilies) {
        if (iequals(text, family_name(f)) || iequals(text, identifier_name(f)))
            return f;
    }
    return std::nullopt;
}

bool is_twisted_small(FamilyId f) {
    return f == FamilyId::TwB2 || f == FamilyId::TwF4 || f == FamilyId::TwG2;
}

std::optional<std::string> q_violation(FamilyId f, const Integer& q) {
    auto pp = prime_power_decompose(q);
    if (!pp)
        return "q = " + q.str() + " is not a prime power";
    switch (f) {
    case FamilyId::TwB2:
    case FamilyId::TwF4:
        if (pp->p != 2 || pp->f % 2 == 0)
            return std::string(family_name(f)) + "(q) needs q = 2^f with f odd; got q = " + q.str();
        break;
    case FamilyId::TwG2:
        if (pp->p != 3 || pp->f % 2 == 0)
            return std::string(family_name(f)) + "(q) needs q = 3^f with f odd; got q = " + q.str();
        break;
    default:
        break;
    }
    return std::nullopt;
}

GroupParams make_params(FamilyId f, const Integer& q) {
    if (auto why = q_violation(f, q))
        throw DomainError(*why);
    auto pp = prime_power_decompose(q);
    return GroupParams{f, q, pp->p, pp->f};
}

std::vector<std::uint64_t> admissible_q(FamilyId f, std::uint64_t q_max) {
    std::vector<std::uint64_t> out;
    if (is_twisted_small(f)) {
        const std::uint64_t p = f == FamilyId::TwG2 ? 3 : 2;
        for (std::uint64_t q = p; q <= q_max; q *= p * p) {
            out.push_back(q);
            if (q > q_max / (p * p))
                break;
        }
        return out;
    }
    for (std::uint64_t p : primes_up_to(q_max)) {
        for (std::uint64_t q = p; q <= q_max; q *= p) {
            out.push_back(q);
            if (q > q_max / p)
                break;
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

CenterSpec center_spec(FamilyId f) {
    switch (f) {
    case FamilyId::E6: return CenterSpec::Gcd3QMinus1;
    case FamilyId::TwE6: return CenterSpec::Gcd3QPlus1;
    case FamilyId::E7: return CenterSpec::Gcd2QMinus1;
    default: return CenterSpec::Trivial;
    }
}

Integer center_order(FamilyId f, const Integer& q) {
    switch (center_spec(f)) {
    case CenterSpec::Trivial: return 1;
    case CenterSpec::Gcd3QMinus1: return boost::multiprecision::gcd(Integer(3), q - 1);
    case CenterSpec::Gcd3QPlus1: return boost::multiprecision::gcd(Integer(3), q + 1);
    case CenterSpec::Gcd2QMinus1: return boost::multiprecision::gcd(Integer(2), q - 1);
    }
    return 1;
}

} // namespace rreg
