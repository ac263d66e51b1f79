// Result tables, one function per family. Rows written as a quotient
// (a_0 phi^d + a_1 phi^(d-1) + ... + a_d) / (D phi^d) are entered as the
// numerator list {a_0, ..., a_d} and D; rows written as a sum of fractions
// are entered term by term.

#include "table_data.hpp"

#include <initializer_list>
#include <utility>

namespace rreg::detail {

namespace {

using R = RClass;

unsigned default_phi(unsigned e, const RClass& rc) {
    // r = 2 forces e = 1; rows for q = 3 mod 4 are written in (q + 1)_2.
    if (rc.kind == RClass::Kind::Equal && rc.bound == 2 && rc.q_mod4 == 3)
        return 2;
    return e;
}

FormulaRow quotient(unsigned e, RClass rc, std::initializer_list<long long> numer, long long denom) {
    std::vector<Rational> coeffs;
    for (long long a : numer)
        coeffs.emplace_back(Integer(a), Integer(denom));
    return FormulaRow(RowGuard{e, rc, default_phi(e, rc)}, std::move(coeffs));
}

FormulaRow terms(unsigned e, RClass rc, std::initializer_list<std::pair<long long, long long>> fractions) {
    std::vector<Rational> coeffs;
    for (auto [n, d] : fractions)
        coeffs.emplace_back(Integer(n), Integer(d));
    return FormulaRow(RowGuard{e, rc, default_phi(e, rc)}, std::move(coeffs));
}

std::vector<FormulaRow> twisted_f4() {
    return {
        terms(1, R::any(), {{7, 16}, {1, 2}, {1, 16}}),
        terms(2, R::equal(3), {{89, 144}, {1, 4}, {1, 48}}),
        terms(2, R::greater(3), {{35, 48}, {1, 4}, {1, 48}}),
        terms(4, R::any(), {{77, 96}, {3, 16}, {1, 96}}),
        terms(6, R::any(), {{5, 6}, {1, 6}}),
        terms(12, R::any(), {{11, 12}, {1, 12}}),
    };
}

std::vector<FormulaRow> twisted_b2() {
    return {
        terms(1, R::any(), {{1, 2}, {1, 2}}),
        terms(4, R::any(), {{3, 4}, {1, 4}}),
    };
}

std::vector<FormulaRow> triality_d4() {
    return {
        quotient(1, R::two(1), {17, 12, 4}, 48),
        quotient(1, R::two(3), {17, 12, 4}, 48),
        quotient(1, R::equal(3), {82, 72, 6}, 216),
        quotient(1, R::greater(3), {10, 12, 2}, 24),
        quotient(2, R::equal(3), {82, 72, 6}, 216),
        quotient(2, R::greater(3), {10, 12, 2}, 24),
        quotient(3, R::any(), {15, 8, 1}, 24),
        quotient(6, R::any(), {15, 8, 1}, 24),
        quotient(12, R::any(), {3, 1}, 4),
    };
}

std::vector<FormulaRow> f4() {
    return {
        quotient(1, R::two(1), {3577, 3696, 1672, 192, 16}, 18432),
        quotient(1, R::two(3), {3577, 3696, 1672, 192, 16}, 18432),
        quotient(1, R::equal(3), {3337, 3816, 1326, 216, 9}, 10368),
        quotient(1, R::greater(3), {385, 552, 190, 24, 1}, 1152),
        quotient(2, R::equal(3), {3337, 3816, 1326, 216, 9}, 10368),
        quotient(2, R::greater(3), {385, 552, 190, 24, 1}, 1152),
        quotient(3, R::any(), {55, 16, 1}, 72),
        quotient(4, R::any(), {77, 18, 1}, 96),
        quotient(6, R::any(), {55, 16, 1}, 72),
        quotient(8, R::any(), {7, 1}, 8),
        quotient(12, R::any(), {11, 1}, 12),
    };
}

std::vector<FormulaRow> g2() {
    // The printed r = 3 and r > 3 numerators repeat the phi^2 power
    // (9 phi^2 + 2 phi^2, 3 phi^2 + 2 phi^2); the like terms are combined.
    return {
        quotient(1, R::two(1), {17, 12, 4}, 48),
        quotient(1, R::two(3), {17, 12, 4}, 48),
        quotient(1, R::equal(3), {9 + 2, 18, 3}, 36),
        quotient(1, R::greater(3), {3 + 2, 6, 1}, 12),
        quotient(2, R::equal(3), {9 + 2, 18, 3}, 36),
        quotient(2, R::greater(3), {3 + 2, 6, 1}, 12),
        quotient(3, R::any(), {5, 1}, 6),
        quotient(6, R::any(), {5, 1}, 6),
    };
}

std::vector<FormulaRow> e6() {
    return {
        quotient(1, R::two(1), {179840, 131292, 113709, 19080, 4920, 288, 16}, 829440),
        quotient(1, R::two(3), {17557, 12024, 3928, 288, 16}, 73728),
        quotient(1, R::equal(3), {110240, 489348, 303003, 71280, 9450, 972, 27}, 1399680),
        quotient(1, R::equal(5), {61600, 90684, 44709, 18000, 2550, 180, 5}, 259200),
        quotient(1, R::greater(5), {12320, 22284, 13089, 3600, 510, 36, 1}, 51840),
        quotient(2, R::equal(3), {3337, 3816, 1326, 216, 9}, 10368),
        quotient(2, R::greater(3), {385, 552, 190, 24, 1}, 1152),
        quotient(3, R::any(), {440, 183, 24, 1}, 648),
        quotient(4, R::any(), {77, 18, 1}, 96),
        quotient(5, R::any(), {4, 1}, 5),
        quotient(6, R::any(), {55, 16, 1}, 72),
        quotient(8, R::any(), {7, 1}, 8),
        quotient(9, R::any(), {8, 1}, 9),
        quotient(12, R::any(), {11, 1}, 12),
    };
}

std::vector<FormulaRow> twisted_e6() {
    return {
        quotient(1, R::two(1), {17557, 12024, 3928, 288, 16}, 73728),
        quotient(1, R::two(3), {179840, 131292, 113709, 19080, 4920, 288, 16}, 829440),
        quotient(1, R::equal(3), {3337, 3816, 1326, 216, 9}, 10368),
        quotient(1, R::greater(3), {385, 552, 190, 24, 1}, 1152),
        quotient(2, R::equal(3), {110240, 489348, 303003, 71280, 9450, 972, 27}, 1399680),
        quotient(2, R::equal(5), {61600, 90684, 44709, 18000, 2550, 180, 5}, 259200),
        quotient(2, R::greater(5), {12320, 22284, 13089, 3600, 510, 36, 1}, 51840),
        quotient(3, R::any(), {55, 16, 1}, 72),
        quotient(4, R::any(), {77, 18, 1}, 96),
        quotient(6, R::any(), {440, 183, 24, 1}, 648),
        quotient(8, R::any(), {7, 1}, 8),
        quotient(10, R::any(), {4, 1}, 5),
        quotient(12, R::any(), {11, 1}, 12),
        quotient(18, R::any(), {8, 1}, 9),
    };
}

std::vector<FormulaRow> e7() {
    std::vector<FormulaRow> rows = {
        quotient(1, R::two(1), {41419665, 95510014, 30219588, 10204152, 952560, 116256, 4032, 128}, 371589120),
        quotient(1, R::two(3), {41419665, 95510014, 30219588, 10204152, 952560, 116256, 4032, 128}, 371589120),
    };
    for (unsigned e : {1u, 2u}) {
        rows.push_back(quotient(e, R::equal(3), {20191815, 23513057, 12786039, 3532473, 405405, 31563, 1701, 27},
                                78382080));
        rows.push_back(quotient(e, R::equal(5), {3828825, 6047743, 2739177, 621159, 108675, 8085, 315, 5},
                                14515200));
        rows.push_back(quotient(e, R::equal(7), {5360355, 7764581, 4647699, 1140573, 152145, 11319, 441, 7},
                                20321280));
        rows.push_back(quotient(e, R::greater(7), {765765, 1286963, 663957, 162939, 21735, 1617, 63, 1}, 2903040));
    }
    rows.push_back(quotient(3, R::any(), {935, 327, 33, 1}, 1296));
    rows.push_back(quotient(4, R::any(), {77, 18, 1}, 96));
    rows.push_back(quotient(5, R::any(), {9, 1}, 10));
    rows.push_back(quotient(6, R::any(), {935, 327, 33, 1}, 1296));
    rows.push_back(quotient(7, R::any(), {13, 1}, 14));
    rows.push_back(quotient(8, R::any(), {7, 1}, 8));
    rows.push_back(quotient(9, R::any(), {17, 1}, 18));
    rows.push_back(quotient(10, R::any(), {9, 1}, 10));
    rows.push_back(quotient(12, R::any(), {11, 1}, 12));
    rows.push_back(quotient(14, R::any(), {13, 1}, 14));
    rows.push_back(quotient(18, R::any(), {17, 1}, 18));
    return rows;
}

// The e = 4 row carries the symbol s = (5, r):
//   (31345 phi^4 s + 2304 phi^4 + 11100 phi^3 s + 1270 phi^2 s + 60 phi s + s) / (46080 phi^4 s)
FormulaRow e8_order_four(RClass rc, long long s) {
    const Integer d = 46080;
    std::vector<Rational> coeffs = {
        Rational(Integer(31345 * s + 2304), d * s),
        Rational(Integer(11100), d),
        Rational(Integer(1270), d),
        Rational(Integer(60), d),
        Rational(Integer(1), d),
    };
    return FormulaRow(RowGuard{4, rc, 4}, std::move(coeffs));
}

std::vector<FormulaRow> e8() {
    std::vector<FormulaRow> rows = {
        quotient(1, R::two(1),
                 {41492380321, 27525566640, 16480551440, 2132907840, 295921248, 14434560, 815360, 15360, 256},
                 178362777600),
        quotient(1, R::two(3),
                 {41492380321, 27525566640, 16480551440, 2132907840, 295921248, 14434560, 815360, 15360, 256},
                 178362777600),
    };
    for (unsigned e : {1u, 2u}) {
        rows.push_back(quotient(
            e, R::equal(3),
            {16277566921, 21789381960, 7567769940, 1361503080, 159928398, 8913240, 366660, 9720, 81}, 56435097600));
        rows.push_back(quotient(
            e, R::equal(5), {5363541841, 7507077000, 2845718900, 501215400, 53801790, 4095000, 150500, 3000, 25},
            17418240000));
        rows.push_back(quotient(
            e, R::equal(7), {1509595087, 2115252600, 761301260, 172854360, 18315906, 1146600, 42140, 840, 7},
            4877107200));
        rows.push_back(quotient(
            e, R::greater(7), {215656441, 323507400, 130085780, 24693480, 2616558, 163800, 6020, 120, 1},
            696729600));
    }
    rows.push_back(quotient(3, R::any(), {124729, 28400, 2310, 80, 1}, 155520));
    // ord_r(q) = 4 forces r = 1 mod 4, so r = 5 or r > 5.
    rows.push_back(e8_order_four(R::equal(5), 5));
    rows.push_back(e8_order_four(R::greater(5), 1));
    rows.push_back(quotient(5, R::any(), {551, 48, 1}, 600));
    rows.push_back(quotient(6, R::any(), {124729, 28400, 2310, 80, 1}, 155520));
    rows.push_back(quotient(7, R::any(), {13, 1}, 14));
    rows.push_back(quotient(8, R::any(), {161, 30, 1}, 192));
    rows.push_back(quotient(9, R::any(), {17, 1}, 18));
    rows.push_back(quotient(10, R::any(), {551, 48, 1}, 600));
    rows.push_back(quotient(12, R::any(), {253, 34, 1}, 288));
    rows.push_back(quotient(14, R::any(), {13, 1}, 14));
    rows.push_back(quotient(15, R::any(), {29, 1}, 30));
    rows.push_back(quotient(18, R::any(), {17, 1}, 18));
    rows.push_back(quotient(20, R::any(), {19, 1}, 20));
    rows.push_back(quotient(24, R::any(), {23, 1}, 24));
    rows.push_back(quotient(30, R::any(), {29, 1}, 30));
    return rows;
}

std::vector<FormulaRow> twisted_g2() {
    return {
        // 7/12 + 1/(6 (q + 1)_2); q = 3^odd is always 3 mod 4.
        terms(1, R::two(3), {{7, 12}, {1, 6}}),
        terms(1, R::greater(3), {{1, 2}, {1, 2}}),
        terms(2, R::any(), {{5, 6}, {1, 6}}),
        terms(6, R::any(), {{5, 6}, {1, 6}}),
    };
}

} // namespace

std::vector<FormulaRow> transcribed_rows(FamilyId f) {
    switch (f) {
    case FamilyId::TwF4: return twisted_f4();
    case FamilyId::TwB2: return twisted_b2();
    case FamilyId::TriD4: return triality_d4();
    case FamilyId::F4: return f4();
    case FamilyId::G2: return g2();
    case FamilyId::E6: return e6();
    case FamilyId::TwE6: return twisted_e6();
    case FamilyId::E7: return e7();
    case FamilyId::E8: return e8();
    case FamilyId::TwG2: return twisted_g2();
    }
    return {};
}

} // namespace rreg::detail
