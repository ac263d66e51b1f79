#include "rreg/tables.hpp"

#include "rreg/catalog.hpp"
#include "rreg/cyclotomic.hpp"
#include "rreg/errors.hpp"
#include "table_data.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace rreg {

namespace mp = boost::multiprecision;

// ---------------------------------------------------------------------------
// Guards

bool RClass::matches(std::uint64_t r, std::uint64_t q_mod_4) const {
    switch (kind) {
    case Kind::Any: return true;
    case Kind::Equal: return r == bound && (q_mod4 == 0 || q_mod_4 == static_cast<std::uint64_t>(q_mod4));
    case Kind::Greater: return r > bound;
    }
    return false;
}

std::string RClass::label() const {
    switch (kind) {
    case Kind::Any: return "";
    case Kind::Equal:
        if (q_mod4 != 0)
            return "r=" + std::to_string(bound) + ", q≡" + std::to_string(q_mod4) + " mod 4";
        return "r=" + std::to_string(bound);
    case Kind::Greater: return "r>" + std::to_string(bound);
    }
    return "";
}

std::string RowGuard::label() const {
    std::string out = "e=" + std::to_string(e);
    if (auto rc = r_class.label(); !rc.empty())
        out += " (" + rc + ")";
    return out;
}

namespace {

// Canonical order within a family: e, then r = 2 rows, fixed primes, r > k, any r.
auto guard_key(const RowGuard& g) {
    int kind_rank = g.r_class.kind == RClass::Kind::Equal ? 0 : g.r_class.kind == RClass::Kind::Greater ? 1 : 2;
    return std::tuple(g.e, kind_rank, g.r_class.bound, g.r_class.q_mod4);
}

} // namespace

// ---------------------------------------------------------------------------
// Rows

FormulaRow::FormulaRow(RowGuard guard, std::vector<Rational> coeffs) : guard_(guard), coeffs_(std::move(coeffs)) {
    if (coeffs_.empty())
        throw InternalError("formula row without coefficients");
    denom_ = 1;
    for (const auto& c : coeffs_)
        denom_ = mp::lcm(denom_, c.den());
    numer_.reserve(coeffs_.size());
    for (const auto& c : coeffs_)
        numer_.push_back(c.num() * (denom_ / c.den()));
}

Rational FormulaRow::evaluate(const Integer& phi) const {
    if (phi < 1)
        throw DomainError("phi must be >= 1, got " + phi.str());
    // Horner in phi over the common denominator.
    Integer acc = 0;
    for (const auto& a : numer_)
        acc = acc * phi + a;
    return Rational(std::move(acc), denom_ * ipow(phi, degree()));
}

const std::vector<FormulaRow>& formula_rows(FamilyId f) {
    static const std::map<FamilyId, std::vector<FormulaRow>> tables = [] {
        std::map<FamilyId, std::vector<FormulaRow>> out;
        for (FamilyId fam : kAllFamilies) {
            auto rows = detail::transcribed_rows(fam);
            std::stable_sort(rows.begin(), rows.end(), [](const FormulaRow& a, const FormulaRow& b) {
                return guard_key(a.guard()) < guard_key(b.guard());
            });
            out.emplace(fam, std::move(rows));
        }
        return out;
    }();
    return tables.at(f);
}

const FormulaRow* find_row(FamilyId f, const RowGuard& g) {
    for (const auto& row : formula_rows(f))
        if (row.guard() == g)
            return &row;
    return nullptr;
}

RowMatch row_lookup(FamilyId f, const Integer& q, Prime r) {
    return row_lookup(make_params(f, q), r);
}

RowMatch row_lookup(const GroupParams& params, Prime r) {
    const FamilyId f = params.family;
    const Integer& q = params.q;
    if (params.p == r)
        throw DomainError("defining characteristic: r = " + std::to_string(r.value()) + " divides q = " + q.str());
    const std::uint64_t e = mult_order(q, r);
    const std::uint64_t q4 = mod_u64(q, 4);
    const FormulaRow* hit = nullptr;
    for (const auto& row : formula_rows(f)) {
        if (row.guard().e != e || !row.guard().r_class.matches(r, q4))
            continue;
        if (hit)
            throw InternalError("overlapping row guards in " + std::string(family_name(f)) + ": " +
                                hit->guard().label() + " and " + row.guard().label());
        hit = &row;
    }
    return RowMatch{e, hit};
}

// ---------------------------------------------------------------------------
// Proportions

std::string_view engine_name(Engine e) {
    return e == Engine::Formula ? "formula" : "torus-sum";
}

Rational center_adjust(FamilyId f, const Integer& q, Prime r, const Rational& value_sc) {
    return value_sc * Rational(r_part(center_order(f, q), r));
}

namespace {

ProportionReport report_skeleton(const GroupParams& g, Prime r, Engine engine) {
    const Integer& q = g.q;
    RowMatch match = row_lookup(g, r);
    ProportionReport rep{g.family, q, r, match.e, 0, "no-row", Rational(1), Rational(1), engine};
    if (match.row) {
        rep.phi = phi_r_part(match.row->guard().phi_index, q, r);
        rep.row_id = match.row->guard().label();
        rep.value_sc = match.row->evaluate(rep.phi);
    }
    return rep;
}

} // namespace

ProportionReport proportion_formula(FamilyId f, const Integer& q, Prime r) {
    return proportion_formula(make_params(f, q), r);
}

ProportionReport proportion_formula(const GroupParams& g, Prime r) {
    ProportionReport rep = report_skeleton(g, r, Engine::Formula);
    rep.value_simple = center_adjust(g.family, g.q, r, rep.value_sc);
    return rep;
}

ProportionReport proportion_torus(FamilyId f, const Integer& q, Prime r) {
    ProportionReport rep = report_skeleton(make_params(f, q), r, Engine::TorusSum);
    rep.value_sc = proportion_by_torus_sum(f, q, r);
    rep.value_simple = center_adjust(f, q, r, rep.value_sc);
    return rep;
}

// ---------------------------------------------------------------------------
// Constants

Integer center_r_part_for_guard(FamilyId f, const RowGuard& g) {
    const RClass& rc = g.r_class;
    if (rc.kind != RClass::Kind::Equal)
        return 1;
    switch (center_spec(f)) {
    case CenterSpec::Trivial: return 1;
    case CenterSpec::Gcd3QMinus1:
        // 3 | q - 1 exactly when ord_3(q) = 1
        return (rc.bound == 3 && g.e == 1) ? 3 : 1;
    case CenterSpec::Gcd3QPlus1:
        return (rc.bound == 3 && g.e == 2) ? 3 : 1;
    case CenterSpec::Gcd2QMinus1:
        // r = 2 means q is odd
        return rc.bound == 2 ? 2 : 1;
    }
    return 1;
}

FamilyConstant constant_infimum(FamilyId f) {
    const auto& rows = formula_rows(f);
    std::optional<FamilyConstant> best;
    for (const auto& row : rows) {
        Rational c = row.coeffs()[0] * Rational(center_r_part_for_guard(f, row.guard()));
        if (!best || c < best->c)
            best = FamilyConstant{c, row.guard()};
    }
    return *best;
}

RowGuard ennola_image(const RowGuard& g) {
    // q -> -q sends Phi_i to +-Phi_j with j = 2i (i odd), i/2 (i = 2 mod 4), i (4 | i).
    auto swap_index = [](unsigned i) -> unsigned {
        if (i % 2 == 1)
            return 2 * i;
        if (i % 4 == 2)
            return i / 2;
        return i;
    };
    RowGuard out = g;
    if (g.r_class.kind == RClass::Kind::Equal && g.r_class.bound == 2) {
        // r = 2 keeps e = 1; only the phi symbol and q mod 4 flip.
        out.r_class.q_mod4 = g.r_class.q_mod4 == 1 ? 3 : g.r_class.q_mod4 == 3 ? 1 : 0;
        out.phi_index = swap_index(g.phi_index);
        return out;
    }
    out.e = swap_index(g.e);
    out.phi_index = swap_index(g.phi_index);
    return out;
}

// ---------------------------------------------------------------------------
// Rendering

namespace {

std::string superscript_minus(unsigned j) {
    static const char* digits[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
    std::string out = "⁻";
    for (char ch : std::to_string(j))
        out += digits[ch - '0'];
    return out;
}

} // namespace

std::vector<std::string> table_emit(FamilyId f) {
    std::vector<std::string> lines;
    for (const auto& row : formula_rows(f)) {
        const RowGuard& g = row.guard();
        std::ostringstream out;
        out << g.label();
        if (g.phi_index != g.e)
            out << " [φ=φ_{" << g.phi_index << ",r}]";
        out << ": " << row.coeffs()[0];
        for (unsigned j = 1; j <= row.degree(); ++j) {
            if (row.coeffs()[j].is_zero())
                continue;
            out << " + " << row.coeffs()[j] << "·φ" << superscript_minus(j);
        }
        lines.push_back(out.str());
    }
    return lines;
}

} // namespace rreg
