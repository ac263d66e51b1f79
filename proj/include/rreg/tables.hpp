#pragma once

// Closed-form proportions of r-regular elements, one guarded row per table
// line. A row stores coefficients c_0..c_d and evaluates to
//
//     c_0 + c_1 / phi + ... + c_d / phi^d,     phi = (Phi_i(q))_r,
//
// where i is the row's phi index (usually e, but 2 for r = 2 rows written
// in (q + 1)_2). Rows with gcd symbols such as (3, r) or (5, r) are stored
// already split into concrete r-subcases.

#include "rreg/arith.hpp"
#include "rreg/family.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace rreg {

/// Which primes r a row covers.
struct RClass {
    enum class Kind { Any, Equal, Greater };

    Kind kind = Kind::Any;
    std::uint64_t bound = 0; ///< the prime for Equal, k for Greater
    int q_mod4 = 0;          ///< 1 or 3 restricts q (only with r = 2); 0 = unrestricted

    static RClass any() { return {}; }
    static RClass equal(std::uint64_t p) { return {Kind::Equal, p, 0}; }
    static RClass greater(std::uint64_t k) { return {Kind::Greater, k, 0}; }
    static RClass two(int q_mod4) { return {Kind::Equal, 2, q_mod4}; }

    bool matches(std::uint64_t r, std::uint64_t q_mod_4) const;
    /// "", "r=3", "r>3", "r=2, q≡1 mod 4"
    std::string label() const;

    friend bool operator==(const RClass&, const RClass&) = default;
};

struct RowGuard {
    unsigned e = 1;
    RClass r_class;
    unsigned phi_index = 1;

    /// "e=2 (r>3)", "e=1 (r=2, q≡3 mod 4)", "e=12"
    std::string label() const;

    friend bool operator==(const RowGuard&, const RowGuard&) = default;
};

class FormulaRow {
public:
    FormulaRow(RowGuard guard, std::vector<Rational> coeffs);

    const RowGuard& guard() const noexcept { return guard_; }
    /// c_0..c_d, the coefficient of phi^-j at position j.
    std::span<const Rational> coeffs() const noexcept { return coeffs_; }
    unsigned degree() const noexcept { return static_cast<unsigned>(coeffs_.size() - 1); }

    Rational evaluate(const Integer& phi) const;

    friend bool operator==(const FormulaRow& a, const FormulaRow& b) {
        return a.guard_ == b.guard_ && a.coeffs_ == b.coeffs_;
    }

private:
    RowGuard guard_;
    std::vector<Rational> coeffs_;
    // Common-denominator form: value = sum_j numer_[j] phi^(d-j) / (denom_ phi^d).
    std::vector<Integer> numer_;
    Integer denom_;
};

/// All rows of a family's table, canonically ordered (by e, then r-class).
const std::vector<FormulaRow>& formula_rows(FamilyId f);

/// The row with exactly this guard, if encoded.
const FormulaRow* find_row(FamilyId f, const RowGuard& g);

struct RowMatch {
    std::uint64_t e;
    const FormulaRow* row; ///< nullptr: the table has no row for this e
};

/// Throws DomainError for r | q or q inadmissible for the family.
RowMatch row_lookup(FamilyId f, const Integer& q, Prime r);
RowMatch row_lookup(const GroupParams& g, Prime r);

enum class Engine { Formula, TorusSum };

std::string_view engine_name(Engine e);

struct ProportionReport {
    FamilyId family;
    Integer q;
    Prime r;
    std::uint64_t e;
    Integer phi;         ///< 0 when no row matched
    std::string row_id;  ///< guard label, or "no-row"
    Rational value_sc;   ///< simply connected group
    Rational value_simple;
    Engine engine;
};

/// Value of the matching row, or 1 when no row matches.
ProportionReport proportion_formula(FamilyId f, const Integer& q, Prime r);
/// For sweeps that validate q once up front.
ProportionReport proportion_formula(const GroupParams& g, Prime r);

/// Same report with the value from the builtin torus catalog.
ProportionReport proportion_torus(FamilyId f, const Integer& q, Prime r);

/// value_sc * |Z(G)|_r.
Rational center_adjust(FamilyId f, const Integer& q, Prime r, const Rational& value_sc);

/// |Z(G)|_r as forced by a guard with a fixed prime (r = 2, r = 3, ...);
/// 1 for guards that do not pin r to the center's prime.
Integer center_r_part_for_guard(FamilyId f, const RowGuard& g);

struct FamilyConstant {
    Rational c;
    RowGuard witness;
};

/// min over rows of c_0 * |Z|_r. Every row's value exceeds its c_0, so this
/// bounds the simple group's proportion from below.
FamilyConstant constant_infimum(FamilyId f);

/// Row guard under q -> -q (E6 against 2E6, and each self-dual family
/// against itself): odd e <-> 2e, e divisible by 4 fixed; r = 2 rows keep
/// e = 1 and swap q mod 4 together with the phi symbol.
RowGuard ennola_image(const RowGuard& g);

/// "e=1: 1/2 + 1/2·φ⁻¹" per row; rows whose phi index differs from e name it.
std::vector<std::string> table_emit(FamilyId f);

} // namespace rreg
