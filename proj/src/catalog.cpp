#include "rreg/catalog.hpp"

#include "rreg/cyclotomic.hpp"
#include "rreg/errors.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace rreg {

std::string_view twisted_token(TwistedKind k) {
    switch (k) {
    case TwistedKind::B2Plus: return "b2+";
    case TwistedKind::B2Minus: return "b2-";
    case TwistedKind::G2Plus: return "g2+";
    case TwistedKind::G2Minus: return "g2-";
    case TwistedKind::F4Plus12: return "f4+";
    case TwistedKind::F4Minus12: return "f4-";
    }
    return "?";
}

std::optional<TwistedKind> parse_twisted_token(std::string_view token) {
    for (auto k : {TwistedKind::B2Plus, TwistedKind::B2Minus, TwistedKind::G2Plus, TwistedKind::G2Minus,
                   TwistedKind::F4Plus12, TwistedKind::F4Minus12}) {
        if (token == twisted_token(k))
            return k;
    }
    return std::nullopt;
}

namespace {

std::uint64_t twisted_prime(TwistedKind k) {
    return (k == TwistedKind::G2Plus || k == TwistedKind::G2Minus) ? 3 : 2;
}

} // namespace

Integer twisted_factor_value(TwistedKind k, const Integer& q) {
    const std::uint64_t p = twisted_prime(k);
    auto pp = prime_power_decompose(q);
    if (!pp || pp->p != p || pp->f % 2 == 0)
        throw DomainError("twisted factor " + std::string(twisted_token(k)) + " needs q = " + std::to_string(p) +
                          "^odd; got q = " + q.str());
    // t = sqrt(p q) = p^((f + 1) / 2)
    const Integer t = ipow(Integer(p), (pp->f + 1) / 2);
    switch (k) {
    case TwistedKind::B2Plus:
    case TwistedKind::G2Plus: return q + t + 1;
    case TwistedKind::B2Minus:
    case TwistedKind::G2Minus: return q - t + 1;
    case TwistedKind::F4Plus12: return q * q + q * t + q + t + 1;
    case TwistedKind::F4Minus12: return q * q - q * t + q - t + 1;
    }
    throw InternalError("unknown twisted kind");
}

void canonicalize(TorusClass& tc) {
    std::map<unsigned, unsigned> cyc;
    for (const auto& f : tc.cyclotomic)
        cyc[f.index] += f.multiplicity;
    tc.cyclotomic.clear();
    for (auto [i, m] : cyc)
        tc.cyclotomic.push_back({i, m});

    std::map<TwistedKind, unsigned> tw;
    for (const auto& f : tc.twisted)
        tw[f.kind] += f.multiplicity;
    tc.twisted.clear();
    for (auto [k, m] : tw)
        tc.twisted.push_back({k, m});
}

// ---------------------------------------------------------------------------
// Builtin data

namespace {

TorusClass make_class(int id, Rational weight, std::vector<CycFactor> cyc, std::vector<TwistedFactor> tw = {}) {
    TorusClass tc{id, std::move(weight), std::move(cyc), std::move(tw)};
    canonicalize(tc);
    return tc;
}

Catalog twisted_f4_catalog() {
    using K = TwistedKind;
    Catalog c{FamilyId::TwF4, {}, Provenance::Printed};
    c.classes = {
        make_class(1, Rational(1, 16), {{1, 2}}),
        make_class(2, Rational(1, 4), {{1, 1}, {2, 1}}),
        make_class(3, Rational(1, 8), {{1, 1}}, {{K::B2Minus, 1}}),
        make_class(4, Rational(1, 8), {{1, 1}}, {{K::B2Plus, 1}}),
        make_class(5, Rational(1, 16), {{4, 1}}),
        make_class(6, Rational(1, 96), {}, {{K::B2Minus, 2}}),
        make_class(7, Rational(1, 96), {}, {{K::B2Plus, 2}}),
        make_class(8, Rational(1, 48), {{2, 2}}),
        make_class(9, Rational(1, 6), {{6, 1}}),
        make_class(10, Rational(1, 12), {}, {{K::F4Minus12, 1}}),
        make_class(11, Rational(1, 12), {}, {{K::F4Plus12, 1}}),
    };
    return c;
}

// Reconstructed: q - 1 and the two Suzuki factors of q^2 + 1.
Catalog twisted_b2_catalog() {
    Catalog c{FamilyId::TwB2, {}, Provenance::Derived};
    c.classes = {
        make_class(1, Rational(1, 2), {{1, 1}}),
        make_class(2, Rational(1, 4), {}, {{TwistedKind::B2Plus, 1}}),
        make_class(3, Rational(1, 4), {}, {{TwistedKind::B2Minus, 1}}),
    };
    return c;
}

// Reconstructed: q - 1, q + 1 and the two Ree factors of q^2 - q + 1.
Catalog twisted_g2_catalog() {
    Catalog c{FamilyId::TwG2, {}, Provenance::Derived};
    c.classes = {
        make_class(1, Rational(1, 2), {{1, 1}}),
        make_class(2, Rational(1, 6), {{2, 1}}),
        make_class(3, Rational(1, 6), {}, {{TwistedKind::G2Plus, 1}}),
        make_class(4, Rational(1, 6), {}, {{TwistedKind::G2Minus, 1}}),
    };
    return c;
}

} // namespace

std::optional<Catalog> builtin_catalog(FamilyId f) {
    switch (f) {
    case FamilyId::TwF4: return twisted_f4_catalog();
    case FamilyId::TwB2: return twisted_b2_catalog();
    case FamilyId::TwG2: return twisted_g2_catalog();
    default: return std::nullopt;
    }
}

// ---------------------------------------------------------------------------
// Evaluation

Integer torus_order(const TorusClass& tc, const Integer& q) {
    Integer order = 1;
    for (const auto& f : tc.cyclotomic)
        order *= ipow(cyclotomic_eval(f.index, q), f.multiplicity);
    for (const auto& f : tc.twisted)
        order *= ipow(twisted_factor_value(f.kind, q), f.multiplicity);
    return order;
}

Rational proportion_by_torus_sum(const Catalog& catalog, const Integer& q, Prime r) {
    const GroupParams params = make_params(catalog.family, q);
    if (params.p == r)
        throw DomainError("defining characteristic: r = " + std::to_string(r.value()) + " divides q = " + q.str());

    // |T|_r is multiplicative over the factors, so strip r from each factor
    // value separately instead of from the (much larger) product.
    Rational sum;
    for (const auto& tc : catalog.classes) {
        Integer part = 1;
        for (const auto& f : tc.cyclotomic)
            part *= ipow(r_part(cyclotomic_eval(f.index, q), r), f.multiplicity);
        for (const auto& f : tc.twisted)
            part *= ipow(r_part(twisted_factor_value(f.kind, q), r), f.multiplicity);
        sum += tc.weight / Rational(std::move(part));
    }
    return sum;
}

Rational proportion_by_torus_sum(FamilyId f, const Integer& q, Prime r) {
    auto catalog = builtin_catalog(f);
    if (!catalog)
        throw DomainError("catalog unavailable for " + std::string(family_name(f)) +
                          " (builtin catalogs exist for 2F4, 2B2, 2G2 only)");
    return proportion_by_torus_sum(*catalog, q, r);
}

// ---------------------------------------------------------------------------
// Validation

namespace {

bool twisted_fits_family(TwistedKind k, FamilyId f) {
    switch (k) {
    case TwistedKind::B2Plus:
    case TwistedKind::B2Minus: return f == FamilyId::TwB2 || f == FamilyId::TwF4;
    case TwistedKind::F4Plus12:
    case TwistedKind::F4Minus12: return f == FamilyId::TwF4;
    case TwistedKind::G2Plus:
    case TwistedKind::G2Minus: return f == FamilyId::TwG2;
    }
    return false;
}

} // namespace

std::vector<std::string> validate_catalog(const Catalog& c) {
    std::vector<std::string> violations;
    if (c.classes.empty()) {
        violations.push_back("catalog has no classes");
        return violations;
    }
    Rational total;
    std::set<int> ids;
    for (const auto& tc : c.classes) {
        const std::string where = "class " + std::to_string(tc.id) + ": ";
        if (!ids.insert(tc.id).second)
            violations.push_back(where + "duplicate class id");
        if (tc.weight.sign() <= 0 || tc.weight > Rational(1))
            violations.push_back(where + "weight " + tc.weight.str() + " outside (0, 1]");
        if (tc.cyclotomic.empty() && tc.twisted.empty())
            violations.push_back(where + "no factors");
        for (const auto& f : tc.cyclotomic) {
            if (f.index == 0)
                violations.push_back(where + "cyclotomic index 0");
            if (f.multiplicity == 0)
                violations.push_back(where + "factor multiplicity 0");
        }
        for (const auto& f : tc.twisted) {
            if (f.multiplicity == 0)
                violations.push_back(where + "factor multiplicity 0");
            if (!twisted_fits_family(f.kind, c.family))
                violations.push_back(where + "twisted factor tw:" + std::string(twisted_token(f.kind)) +
                                     " does not occur in " + std::string(family_name(c.family)));
        }
        total += tc.weight;
    }
    if (total != Rational(1))
        violations.push_back("weights sum to " + total.str());
    return violations;
}

// ---------------------------------------------------------------------------
// Text format

namespace {

std::vector<std::string> split_ws(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> out;
    for (std::string tok; in >> tok;)
        out.push_back(tok);
    return out;
}

unsigned parse_positive(std::string_view s, int line, std::string_view what) {
    if (s.empty() || s.size() > 9 || !std::all_of(s.begin(), s.end(), [](char ch) { return ch >= '0' && ch <= '9'; }))
        throw ParseError(line, "bad " + std::string(what) + " '" + std::string(s) + "'");
    unsigned v = static_cast<unsigned>(std::stoul(std::string(s)));
    if (v == 0)
        throw ParseError(line, std::string(what) + " must be >= 1, got '" + std::string(s) + "'");
    return v;
}

void parse_factor(const std::string& tok, int line, TorusClass& tc) {
    if (tok.rfind("cyc:", 0) == 0) {
        std::string_view body = std::string_view(tok).substr(4);
        auto caret = body.find('^');
        unsigned index = parse_positive(body.substr(0, caret), line, "cyclotomic index");
        unsigned mult = caret == std::string_view::npos ? 1 : parse_positive(body.substr(caret + 1), line, "multiplicity");
        tc.cyclotomic.push_back({index, mult});
        return;
    }
    if (tok.rfind("tw:", 0) == 0) {
        auto kind = parse_twisted_token(std::string_view(tok).substr(3));
        if (!kind)
            throw ParseError(line, "unknown twisted factor '" + tok + "'");
        tc.twisted.push_back({*kind, 1});
        return;
    }
    throw ParseError(line, "unknown factor token '" + tok + "'");
}

} // namespace

Catalog parse_catalog(std::istream& in) {
    std::optional<FamilyId> family;
    std::vector<TorusClass> classes;
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        if (auto hash = raw.find('#'); hash != std::string::npos)
            raw.erase(hash);
        auto toks = split_ws(raw);
        if (toks.empty())
            continue;
        if (toks[0] == "family") {
            if (toks.size() != 2)
                throw ParseError(line, "expected 'family <id>'");
            if (family)
                throw ParseError(line, "family given twice");
            family = parse_family(toks[1]);
            if (!family)
                throw ParseError(line, "unknown family '" + toks[1] + "'");
            continue;
        }
        if (toks[0] == "class") {
            if (!family)
                throw ParseError(line, "'class' before 'family'");
            if (toks.size() < 6 || toks[2] != "weight" || toks[4] != "factors")
                throw ParseError(line, "expected 'class <n> weight <a>/<b> factors <tok> ...'");
            TorusClass tc;
            tc.id = static_cast<int>(parse_positive(toks[1], line, "class number"));
            try {
                tc.weight = Rational::parse(toks[3]);
            } catch (const std::invalid_argument&) {
                throw ParseError(line, "bad weight '" + toks[3] + "'");
            }
            for (std::size_t i = 5; i < toks.size(); ++i)
                parse_factor(toks[i], line, tc);
            canonicalize(tc);
            classes.push_back(std::move(tc));
            continue;
        }
        throw ParseError(line, "unknown directive '" + toks[0] + "'");
    }
    if (!family)
        throw ParseError(line, "missing 'family' line");
    return Catalog{*family, std::move(classes), Provenance::File};
}

Catalog parse_catalog(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_catalog(in);
}

Catalog load_catalog(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw DomainError("cannot open catalog file '" + path + "'");
    Catalog c = parse_catalog(in);
    auto violations = validate_catalog(c);
    if (!violations.empty()) {
        std::string msg = "invalid catalog '" + path + "':";
        for (const auto& v : violations)
            msg += " " + v + ";";
        msg.pop_back();
        throw DomainError(msg);
    }
    return c;
}

std::string format_catalog(const Catalog& c) {
    std::ostringstream out;
    const char* prov = c.provenance == Provenance::Printed   ? "printed"
                       : c.provenance == Provenance::Derived ? "derived"
                                                             : "file";
    out << "# provenance: " << prov << "\n";
    out << "family " << family_name(c.family) << "\n";
    for (const auto& tc : c.classes) {
        out << "class " << tc.id << " weight " << tc.weight.num() << "/" << tc.weight.den() << " factors";
        for (const auto& f : tc.cyclotomic) {
            out << " cyc:" << f.index;
            if (f.multiplicity != 1)
                out << "^" << f.multiplicity;
        }
        for (const auto& f : tc.twisted) {
            for (unsigned m = 0; m < f.multiplicity; ++m)
                out << " tw:" << twisted_token(f.kind);
        }
        out << "\n";
    }
    return out.str();
}

} // namespace rreg
