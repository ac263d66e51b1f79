#include "rreg/verify.hpp"

#include "rreg/catalog.hpp"
#include "rreg/cyclotomic.hpp"
#include "rreg/linsolve.hpp"
#include "rreg/parallel.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <set>
#include <sstream>
#include <stdexcept>

namespace rreg {

namespace {

class Stopwatch {
public:
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string describe(FamilyId f, std::uint64_t q, std::uint64_t r) {
    return std::string(family_name(f)) + " q=" + std::to_string(q) + " r=" + std::to_string(r);
}

// Per-task partial result, merged in task order.
struct Partial {
    std::size_t cases = 0;
    std::vector<Failure> failures;
};

void merge_into(VerificationReport& rep, std::vector<Partial>&& parts) {
    for (auto& p : parts) {
        rep.cases += p.cases;
        for (auto& f : p.failures)
            rep.failures.push_back(std::move(f));
    }
}

} // namespace

// ---------------------------------------------------------------------------
// Grids and published values

SweepGrid SweepGrid::up_to(FamilyId f, std::uint64_t q_max, std::uint64_t r_max) {
    return SweepGrid{f, admissible_q(f, q_max), r_max};
}

std::vector<QR> SweepGrid::pairs() const {
    std::vector<QR> out;
    const auto primes = primes_up_to(r_max);
    for (std::uint64_t q : qs) {
        for (std::uint64_t r : primes)
            if (q % r != 0)
                out.push_back({q, r});
    }
    return out;
}

Rational published_constant(FamilyId f) {
    switch (f) {
    case FamilyId::TwG2: return Rational(1, 2);
    case FamilyId::TwB2: return Rational(1, 2);
    case FamilyId::TriD4: return Rational(17, 48);
    case FamilyId::TwF4: return Rational(7, 16);
    case FamilyId::G2: return Rational(11, 36);
    case FamilyId::F4: return Rational(3577, 18432);
    case FamilyId::E6: return Rational(281, 1296);
    case FamilyId::TwE6: return Rational(281, 1296);
    case FamilyId::E7: return Rational(131491, 589824);
    case FamilyId::E8: return Rational(Integer(5927482903LL), Integer(25480396800LL));
    }
    throw std::invalid_argument("unknown family");
}

Rational global_constant() {
    return Rational(3577, 18432);
}

// ---------------------------------------------------------------------------
// Engine cross-check

VerificationReport cross_check(FamilyId f, const SweepGrid& grid) {
    Stopwatch clock;
    VerificationReport rep("cross-check " + std::string(family_name(f)));
    const auto catalog = builtin_catalog(f);
    if (!catalog)
        throw DomainError("catalog unavailable for " + std::string(family_name(f)));
    const auto pairs = grid.pairs();
    auto parts = parallel_map(pairs.size(), [&](std::size_t k) {
        const QR& c = pairs[k];
        Partial part;
        part.cases = 1;
        const Integer q = c.q;
        const Prime r(c.r);
        const Rational torus = proportion_by_torus_sum(*catalog, q, r);
        const ProportionReport formula = proportion_formula(f, q, r);
        if (torus != formula.value_sc)
            part.failures.push_back({describe(f, c.q, c.r), formula.value_sc.str(), torus.str(), formula.row_id});
        return part;
    });
    merge_into(rep, std::move(parts));
    rep.wall_seconds = clock.seconds();
    return rep;
}

VerificationReport cross_check_all(std::uint64_t r_max) {
    Stopwatch clock;
    VerificationReport all("cross");
    const std::array<std::pair<FamilyId, std::uint64_t>, 3> grids = {{
        {FamilyId::TwF4, 512},
        {FamilyId::TwB2, 2048},
        {FamilyId::TwG2, 2187},
    }};
    for (auto [f, q_max] : grids) {
        auto rep = cross_check(f, SweepGrid::up_to(f, q_max, r_max));
        all.cases += rep.cases;
        for (auto& fail : rep.failures)
            all.failures.push_back(std::move(fail));
    }
    all.wall_seconds = clock.seconds();
    return all;
}

// ---------------------------------------------------------------------------
// Interpolation

SampleBounds default_sample_bounds(FamilyId f) {
    return SampleBounds{is_twisted_small(f) ? std::uint64_t{8192} : std::uint64_t{10000}};
}

std::vector<QR> sample_finder(FamilyId f, const RowGuard& g, std::size_t needed, std::optional<SampleBounds> bounds) {
    const SampleBounds b = bounds.value_or(default_sample_bounds(f));
    std::vector<std::uint64_t> candidates;
    if (g.r_class.kind == RClass::Kind::Equal)
        candidates = {g.r_class.bound};
    else
        candidates = primes_up_to(b.r_max);

    std::vector<QR> found;
    std::set<Integer> seen_phi;
    for (std::uint64_t q : admissible_q(f, b.q_max)) {
        const Integer qi = q;
        for (std::uint64_t r : candidates) {
            if (q % r == 0 || r > b.r_max)
                continue;
            // r | q^e - 1 is necessary; cheaper than the full order.
            if (powmod(q % r, g.e, r) != 1)
                continue;
            const Prime rp(r);
            if (mult_order(qi, rp) != g.e || !g.r_class.matches(r, q % 4))
                continue;
            Integer phi = phi_r_part(g.phi_index, qi, rp);
            if (!seen_phi.insert(phi).second)
                continue;
            found.push_back({q, r});
            if (found.size() == needed)
                return found;
        }
    }
    std::ostringstream msg;
    msg << "sample search for " << family_name(f) << " " << g.label() << " found " << found.size() << " of "
        << needed << " samples with distinct phi (q <= " << b.q_max << ", r <= " << b.r_max << "); phi seen:";
    for (const auto& phi : seen_phi)
        msg << " " << phi;
    throw SearchExhausted(msg.str(), std::move(found));
}

std::vector<Rational> interpolation_recover(FamilyId f, const RowGuard& g, std::span<const QR> samples) {
    const FormulaRow* row = find_row(f, g);
    if (!row)
        throw DomainError("no encoded row " + g.label() + " in " + std::string(family_name(f)));
    const auto catalog = builtin_catalog(f);
    if (!catalog)
        throw DomainError("catalog unavailable for " + std::string(family_name(f)));
    const std::size_t unknowns = row->degree() + 1;
    if (samples.size() < unknowns)
        throw DomainError("insufficient samples: " + std::to_string(samples.size()) + " given, " +
                          std::to_string(unknowns) + " needed");

    std::vector<Rational> nodes;
    std::vector<Rational> values;
    std::set<Integer> seen;
    for (const QR& s : samples) {
        const Integer q = s.q;
        const Prime r(s.r);
        const RowMatch match = row_lookup(f, q, r);
        if (match.row != row)
            throw DomainError("sample " + describe(f, s.q, s.r) + " does not select " + g.label());
        Integer phi = phi_r_part(g.phi_index, q, r);
        if (!seen.insert(phi).second)
            throw SingularSystem("repeated phi = " + phi.str() + " at " + describe(f, s.q, s.r));
        nodes.emplace_back(Integer(1), phi);
        values.push_back(proportion_by_torus_sum(*catalog, q, r));
    }

    std::vector<Rational> head_nodes(nodes.begin(), nodes.begin() + static_cast<std::ptrdiff_t>(unknowns));
    std::vector<Rational> head_values(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(unknowns));
    std::vector<Rational> coeffs = interpolate_exact(head_nodes, head_values);

    for (std::size_t k = unknowns; k < nodes.size(); ++k) {
        Rational v;
        Rational power(1);
        for (const auto& c : coeffs) {
            v += c * power;
            power *= nodes[k];
        }
        if (v != values[k])
            throw DomainError("extra sample " + describe(f, samples[k].q, samples[k].r) +
                              " disagrees with the interpolant: " + v.str() + " vs " + values[k].str());
    }
    return coeffs;
}

namespace {

std::string join(std::span<const Rational> xs) {
    std::string out = "(";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i)
            out += ", ";
        out += xs[i].str();
    }
    return out + ")";
}

constexpr std::array<FamilyId, 3> kCatalogFamilies = {FamilyId::TwF4, FamilyId::TwB2, FamilyId::TwG2};

} // namespace

VerificationReport interpolation_suite(std::span<const FamilyId> families) {
    Stopwatch clock;
    VerificationReport rep("interp");
    for (FamilyId f : families) {
        for (const auto& row : formula_rows(f)) {
            ++rep.cases;
            const std::string inputs = std::string(family_name(f)) + " " + row.guard().label();
            const std::string expected = join(row.coeffs());
            try {
                auto samples = sample_finder(f, row.guard(), row.degree() + 1);
                auto recovered = interpolation_recover(f, row.guard(), samples);
                if (!std::equal(recovered.begin(), recovered.end(), row.coeffs().begin(), row.coeffs().end()))
                    rep.failures.push_back({inputs, expected, join(recovered), row.guard().label()});
            } catch (const std::exception& ex) {
                rep.failures.push_back({inputs, expected, std::string("error: ") + ex.what(), row.guard().label()});
            }
        }
    }
    rep.wall_seconds = clock.seconds();
    return rep;
}

VerificationReport interpolation_suite() {
    return interpolation_suite(kCatalogFamilies);
}

// ---------------------------------------------------------------------------
// r-part sweep

VerificationReport lemma_sweep(std::uint64_t q_max, std::uint64_t r_max, unsigned i_max) {
    Stopwatch clock;
    VerificationReport rep("lemma");
    const auto qs = admissible_q(FamilyId::G2, q_max); // every prime power
    const auto primes = primes_up_to(r_max);
    auto parts = parallel_map(qs.size(), [&](std::size_t k) {
        Partial part;
        const Integer q = qs[k];
        for (std::uint64_t rv : primes) {
            if (qs[k] % rv == 0)
                continue;
            const Prime r(rv);
            const std::uint64_t e = mult_order(q, r);
            if ((rv - 1) % e != 0 && rv != 2) {
                part.failures.push_back({"q=" + q.str() + " r=" + std::to_string(rv), "e | r-1",
                                         "e=" + std::to_string(e), ""});
            }
            for (unsigned i = 1; i <= i_max; ++i) {
                ++part.cases;
                Integer lemma = phi_r_part(i, q, r);
                Integer oracle = phi_r_part_oracle(i, q, r);
                if (lemma != oracle)
                    part.failures.push_back({"q=" + q.str() + " r=" + std::to_string(rv) + " i=" + std::to_string(i),
                                             oracle.str(), lemma.str(), "e=" + std::to_string(e)});
            }
        }
        return part;
    });
    merge_into(rep, std::move(parts));
    rep.wall_seconds = clock.seconds();
    return rep;
}

// ---------------------------------------------------------------------------
// Constants

VerificationReport constants_check() {
    Stopwatch clock;
    VerificationReport rep("constants");
    std::optional<Rational> minimum;
    for (FamilyId f : kAllFamilies) {
        ++rep.cases;
        const FamilyConstant got = constant_infimum(f);
        const Rational want = published_constant(f);
        if (got.c != want)
            rep.failures.push_back({std::string(family_name(f)), want.str(), got.c.str(), got.witness.label()});
        if (!minimum || got.c < *minimum)
            minimum = got.c;
    }
    ++rep.cases;
    if (*minimum != global_constant())
        rep.failures.push_back({"global minimum", global_constant().str(), minimum->str(), ""});
    rep.wall_seconds = clock.seconds();
    return rep;
}

// ---------------------------------------------------------------------------
// Floor sweep

VerificationReport floor_sweep(std::span<const FamilyId> families, std::uint64_t q_max, std::uint64_t r_max) {
    Stopwatch clock;
    VerificationReport rep("floor");
    struct Task {
        FamilyId f;
        std::uint64_t q;
    };
    std::vector<Task> tasks;
    for (FamilyId f : families)
        for (std::uint64_t q : admissible_q(f, q_max))
            tasks.push_back({f, q});
    const auto primes = primes_up_to(r_max);
    const Rational global = global_constant();

    auto parts = parallel_map(tasks.size(), [&](std::size_t k) {
        Partial part;
        const FamilyId f = tasks[k].f;
        const GroupParams params = make_params(f, Integer(tasks[k].q));
        const Rational floor = constant_infimum(f).c;
        for (std::uint64_t rv : primes) {
            if (rv == params.p)
                continue;
            ++part.cases;
            const Prime r(rv);
            const ProportionReport pr = proportion_formula(params, r);
            const std::string inputs = describe(f, tasks[k].q, rv);
            const Rational& v = pr.value_simple;
            if (v < floor)
                part.failures.push_back({inputs, ">= " + floor.str(), v.str(), pr.row_id});
            if (v.sign() <= 0 || v > Rational(1))
                part.failures.push_back({inputs, "in (0, 1]", v.str(), pr.row_id});
            if (rv == 2 && v < global)
                part.failures.push_back({inputs, ">= " + global.str() + " (odd order)", v.str(), pr.row_id});
            if (pr.row_id != "no-row") {
                const RowMatch m = row_lookup(params, r);
                const Integer z = r_part(center_order(f, params.q), r);
                const Integer forced = center_r_part_for_guard(f, m.row->guard());
                if (z != forced)
                    part.failures.push_back({inputs, "|Z|_r = " + forced.str() + " from guard",
                                             "|Z|_r = " + z.str(), pr.row_id});
            }
        }
        return part;
    });
    merge_into(rep, std::move(parts));
    rep.wall_seconds = clock.seconds();
    return rep;
}

VerificationReport floor_sweep(std::uint64_t q_max, std::uint64_t r_max) {
    return floor_sweep(kAllFamilies, q_max, r_max);
}

// ---------------------------------------------------------------------------
// Duality

namespace {

void check_pairing(VerificationReport& rep, FamilyId from, FamilyId to) {
    const auto& source = formula_rows(from);
    for (const auto& row : source) {
        ++rep.cases;
        const RowGuard image = ennola_image(row.guard());
        const std::string inputs = std::string(family_name(from)) + " " + row.guard().label() + " -> " +
                                   std::string(family_name(to)) + " " + image.label();
        const FormulaRow* partner = find_row(to, image);
        if (!partner) {
            rep.failures.push_back({inputs, join(row.coeffs()), "no such row", row.guard().label()});
            continue;
        }
        if (!std::equal(row.coeffs().begin(), row.coeffs().end(), partner->coeffs().begin(),
                        partner->coeffs().end()))
            rep.failures.push_back({inputs, join(row.coeffs()), join(partner->coeffs()), row.guard().label()});
    }
    ++rep.cases;
    if (source.size() != formula_rows(to).size())
        rep.failures.push_back({std::string(family_name(from)) + " vs " + std::string(family_name(to)) + " row count",
                                std::to_string(source.size()), std::to_string(formula_rows(to).size()), ""});
}

} // namespace

VerificationReport duality_check() {
    Stopwatch clock;
    VerificationReport rep("duality");
    check_pairing(rep, FamilyId::E6, FamilyId::TwE6);
    check_pairing(rep, FamilyId::TwE6, FamilyId::E6);
    for (FamilyId f : {FamilyId::G2, FamilyId::F4, FamilyId::E7, FamilyId::E8, FamilyId::TriD4})
        check_pairing(rep, f, f);
    rep.wall_seconds = clock.seconds();
    return rep;
}

// ---------------------------------------------------------------------------
// Structure

VerificationReport structural_check(std::uint64_t q_max) {
    Stopwatch clock;
    VerificationReport rep("structure");
    for (FamilyId f : kCatalogFamilies) {
        ++rep.cases;
        for (const auto& v : validate_catalog(*builtin_catalog(f)))
            rep.failures.push_back({std::string(family_name(f)) + " catalog", "valid", v, ""});
    }
    struct Pair {
        TwistedKind plus, minus;
        unsigned index;
        FamilyId family;
    };
    const std::array<Pair, 3> pairs = {{
        {TwistedKind::B2Plus, TwistedKind::B2Minus, 4, FamilyId::TwB2},
        {TwistedKind::G2Plus, TwistedKind::G2Minus, 6, FamilyId::TwG2},
        {TwistedKind::F4Plus12, TwistedKind::F4Minus12, 12, FamilyId::TwF4},
    }};
    for (const auto& p : pairs) {
        for (std::uint64_t qv : admissible_q(p.family, q_max)) {
            ++rep.cases;
            const Integer q = qv;
            Integer product = twisted_factor_value(p.plus, q) * twisted_factor_value(p.minus, q);
            Integer phi = cyclotomic_eval(p.index, q);
            if (product != phi)
                rep.failures.push_back({"tw:" + std::string(twisted_token(p.plus)) + " * tw:" +
                                            std::string(twisted_token(p.minus)) + " at q=" + q.str(),
                                        "Phi_" + std::to_string(p.index) + " = " + phi.str(), product.str(), ""});
        }
    }
    rep.wall_seconds = clock.seconds();
    return rep;
}

// ---------------------------------------------------------------------------
// Dispatch

std::span<const std::string_view> suite_names() {
    static constexpr std::array<std::string_view, 7> names = {"lemma", "cross", "interp", "constants",
                                                              "floor", "duality", "structure"};
    return names;
}

std::vector<VerificationReport> run_suite(std::string_view name, const GridOptions& grid) {
    if (name == "all") {
        std::vector<VerificationReport> out;
        for (auto n : suite_names()) {
            auto part = run_suite(n, grid);
            out.insert(out.end(), part.begin(), part.end());
        }
        return out;
    }
    if (name == "lemma")
        return {lemma_sweep(grid.q_max.value_or(512), grid.r_max.value_or(200), grid.i_max.value_or(36))};
    if (name == "cross")
        return {cross_check_all(grid.r_max.value_or(10000))};
    if (name == "interp")
        return {interpolation_suite()};
    if (name == "constants")
        return {constants_check()};
    if (name == "floor")
        return {floor_sweep(grid.q_max.value_or(2048), grid.r_max.value_or(10000))};
    if (name == "duality")
        return {duality_check()};
    if (name == "structure")
        return {structural_check(grid.q_max.value_or(8192))};
    throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
}

} // namespace rreg
