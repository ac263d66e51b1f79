#pragma once

// Maximal-torus catalogs: one entry per F-class of the Weyl group, holding
// the class weight |C|/|W| and the torus order as a product of cyclotomic
// and Suzuki/Ree ("twisted") factors. The torus-sum engine evaluates
//
//     |Q(r,G)| / |G| = sum_C  |C|/|W| * 1 / |T_C|_r
//
// at concrete (q, r).

#include "rreg/arith.hpp"
#include "rreg/family.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace rreg {

/// q +- sqrt(2q) + 1, q +- sqrt(3q) + 1 and q^2 +- sqrt(2q^3) + q +- sqrt(2q) + 1.
enum class TwistedKind { B2Plus, B2Minus, G2Plus, G2Minus, F4Plus12, F4Minus12 };

/// File token without the "tw:" prefix: "b2+", "f4-", ...
std::string_view twisted_token(TwistedKind k);
std::optional<TwistedKind> parse_twisted_token(std::string_view token);

/// Exact value at q. Throws DomainError unless q is an odd power of 2
/// (B2, F4 kinds) or of 3 (G2 kinds).
Integer twisted_factor_value(TwistedKind k, const Integer& q);

struct CycFactor {
    unsigned index;
    unsigned multiplicity = 1;
    friend bool operator==(const CycFactor&, const CycFactor&) = default;
};

struct TwistedFactor {
    TwistedKind kind;
    unsigned multiplicity = 1;
    friend bool operator==(const TwistedFactor&, const TwistedFactor&) = default;
};

struct TorusClass {
    int id = 0;
    Rational weight;
    std::vector<CycFactor> cyclotomic;  ///< sorted by index, merged
    std::vector<TwistedFactor> twisted; ///< sorted by kind, merged

    friend bool operator==(const TorusClass&, const TorusClass&) = default;
};

/// Sorts and merges repeated factors.
void canonicalize(TorusClass& tc);

enum class Provenance { Printed, Derived, File };

struct Catalog {
    FamilyId family;
    std::vector<TorusClass> classes;
    Provenance provenance = Provenance::File;

    /// Structural equality; provenance is metadata and not compared.
    friend bool operator==(const Catalog& a, const Catalog& b) {
        return a.family == b.family && a.classes == b.classes;
    }
};

/// Embedded catalogs exist for 2F4 (printed), 2B2 and 2G2 (derived).
std::optional<Catalog> builtin_catalog(FamilyId f);

Integer torus_order(const TorusClass& tc, const Integer& q);

/// Throws DomainError for r | q, for q inadmissible for the catalog's family,
/// or for a twisted factor that does not fit q.
Rational proportion_by_torus_sum(const Catalog& catalog, const Integer& q, Prime r);

/// Uses the builtin catalog. Throws DomainError("catalog unavailable ...").
Rational proportion_by_torus_sum(FamilyId f, const Integer& q, Prime r);

/// Every violated invariant, human readable; empty when the catalog is sound.
std::vector<std::string> validate_catalog(const Catalog& c);

/// Syntax only. Throws ParseError with the offending line.
Catalog parse_catalog(std::istream& in);
Catalog parse_catalog(std::string_view text);

/// Parse and validate. Throws ParseError, or DomainError listing violations.
Catalog load_catalog(const std::string& path);

/// Canonical text in the catalog file format.
std::string format_catalog(const Catalog& c);

} // namespace rreg
