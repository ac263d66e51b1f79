#pragma once

#include "rreg/arith.hpp"

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace rreg {

enum class FamilyId { G2, F4, E6, TwE6, E7, E8, TwB2, TwG2, TwF4, TriD4 };

/// The ten families, in the order of the constants table (twisted rank-small first).
inline constexpr std::array<FamilyId, 10> kAllFamilies = {
    FamilyId::TwG2, FamilyId::TwB2, FamilyId::TriD4, FamilyId::TwF4, FamilyId::G2,
    FamilyId::F4,   FamilyId::E6,   FamilyId::TwE6,  FamilyId::E7,   FamilyId::E8,
};

/// ASCII name: "G2", "2E6", "3D4", ...
std::string_view family_name(FamilyId f);

/// Accepts the ASCII names ("2F4") and the identifier spellings ("TwF4", "TriD4"),
/// case-insensitively.
std::optional<FamilyId> parse_family(std::string_view text);

/// Suzuki and Ree families: q is an odd power of 2 or 3.
bool is_twisted_small(FamilyId f);

/// Why q is not admissible for the family, or nullopt if it is.
std::optional<std::string> q_violation(FamilyId f, const Integer& q);

/// A family together with an admissible q.
struct GroupParams {
    FamilyId family;
    Integer q;
    Prime p;       ///< defining characteristic
    unsigned f;    ///< q = p^f
};

/// Throws DomainError with the violated constraint.
GroupParams make_params(FamilyId f, const Integer& q);

/// Admissible q <= q_max, ascending.
std::vector<std::uint64_t> admissible_q(FamilyId f, std::uint64_t q_max);

enum class CenterSpec { Trivial, Gcd3QMinus1, Gcd3QPlus1, Gcd2QMinus1 };

CenterSpec center_spec(FamilyId f);

/// |Z(G)| of the simply connected group.
Integer center_order(FamilyId f, const Integer& q);

} // namespace rreg
