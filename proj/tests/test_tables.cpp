#include "rreg/errors.hpp"
#include "rreg/tables.hpp"

#include <doctest.h>

#include <fstream>
#include <map>
#include <set>
#include <sstream>

using rreg::FamilyId;
using rreg::Integer;
using rreg::Prime;
using rreg::RClass;
using rreg::Rational;
using rreg::RowGuard;

namespace {

std::vector<Rational> coeffs_of(const rreg::FormulaRow& row) {
    return {row.coeffs().begin(), row.coeffs().end()};
}

std::vector<Rational> R(std::initializer_list<std::pair<int, int>> xs) {
    std::vector<Rational> out;
    for (auto [n, d] : xs)
        out.emplace_back(Integer(n), Integer(d));
    return out;
}

} // namespace

TEST_CASE("row counts per family") {
    const std::map<FamilyId, std::size_t> want{
        {FamilyId::G2, 8},  {FamilyId::F4, 11},   {FamilyId::E6, 14},  {FamilyId::TwE6, 14}, {FamilyId::E7, 21},
        {FamilyId::E8, 26}, {FamilyId::TriD4, 9}, {FamilyId::TwF4, 6}, {FamilyId::TwB2, 2},  {FamilyId::TwG2, 4},
    };
    for (auto [f, n] : want)
        CHECK_MESSAGE(rreg::formula_rows(f).size() == n, rreg::family_name(f));
}

TEST_CASE("every row has the shape of a proportion") {
    for (FamilyId f : rreg::kAllFamilies) {
        for (const auto& row : rreg::formula_rows(f)) {
            INFO(rreg::family_name(f), " ", row.guard().label());
            const auto c = row.coeffs();
            CHECK(c[0].sign() > 0);
            CHECK(c[0] < Rational(1));
            CHECK(row.degree() <= 8);
            Rational sum;
            for (const auto& x : c) {
                CHECK(x.sign() >= 0);
                sum += x;
            }
            // A row that leaves r free must give 1 when every r-part is 1.
            if (row.guard().r_class.kind != RClass::Kind::Equal) {
                CHECK(sum == Rational(1));
                CHECK(row.evaluate(1) == Rational(1));
            }
            Rational previous = row.evaluate(2);
            CHECK(previous > c[0]);
            CHECK(previous <= Rational(1));
            for (int phi = 3; phi <= 40; ++phi) {
                const Rational v = row.evaluate(phi);
                CHECK(v < previous);
                CHECK(v > c[0]);
                previous = v;
            }
        }
    }
}

TEST_CASE("row guards are mutually exclusive") {
    const auto primes = rreg::primes_up_to(60);
    for (FamilyId f : rreg::kAllFamilies) {
        for (unsigned e = 1; e <= 40; ++e)
            for (std::uint64_t r : primes)
                for (std::uint64_t q4 : {1u, 3u}) {
                    int hits = 0;
                    for (const auto& row : rreg::formula_rows(f))
                        hits += row.guard().e == e && row.guard().r_class.matches(r, q4);
                    CHECK_MESSAGE(hits <= 1, rreg::family_name(f), " e=", e, " r=", r);
                }
    }
}

TEST_CASE("row lookup") {
    auto m = rreg::row_lookup(FamilyId::TwF4, 8, Prime(7));
    REQUIRE(m.row);
    CHECK(m.e == 1);
    CHECK(coeffs_of(*m.row) == R({{7, 16}, {1, 2}, {1, 16}}));

    auto e8 = rreg::row_lookup(FamilyId::E8, 2, Prime(13));
    REQUIRE(e8.row);
    CHECK(e8.e == 12);
    CHECK(coeffs_of(*e8.row) == R({{253, 288}, {34, 288}, {1, 288}}));

    auto none = rreg::row_lookup(FamilyId::F4, 4, Prime(11));
    CHECK(none.e == 5);
    CHECK(none.row == nullptr);

    CHECK_THROWS_WITH_AS(rreg::row_lookup(FamilyId::F4, 9, Prime(3)), doctest::Contains("defining characteristic"),
                         rreg::DomainError);
    CHECK_THROWS_AS(rreg::row_lookup(FamilyId::TwB2, 4, Prime(5)), rreg::DomainError);
    CHECK_THROWS_AS(rreg::row_lookup(FamilyId::F4, 6, Prime(5)), rreg::DomainError);
}

TEST_CASE("r = 2 rows select on q mod 4 and read (q+1)_2 where written so") {
    auto a = rreg::row_lookup(FamilyId::TriD4, 5, Prime(2));
    auto b = rreg::row_lookup(FamilyId::TriD4, 7, Prime(2));
    REQUIRE(a.row);
    REQUIRE(b.row);
    CHECK(a.row->guard().r_class == RClass::two(1));
    CHECK(a.row->guard().phi_index == 1);
    CHECK(b.row->guard().r_class == RClass::two(3));
    CHECK(b.row->guard().phi_index == 2);
    // q = 7: (q+1)_2 = 8.
    CHECK(rreg::proportion_formula(FamilyId::TriD4, 7, Prime(2)).phi == 8);
}

TEST_CASE("formula proportions") {
    CHECK(rreg::proportion_formula(FamilyId::TwF4, 8, Prime(7)).value_sc == Rational(25, 49));
    CHECK(rreg::proportion_formula(FamilyId::TwB2, 8, Prime(5)).value_sc == Rational(4, 5));
    CHECK(rreg::proportion_formula(FamilyId::TwG2, 3, Prime(2)).value_sc == Rational(5, 8));
    auto none = rreg::proportion_formula(FamilyId::F4, 4, Prime(11));
    CHECK(none.row_id == "no-row");
    CHECK(none.value_sc == Rational(1));
    CHECK(none.value_simple == Rational(1));
    auto rep = rreg::proportion_formula(FamilyId::TwF4, 8, Prime(7));
    CHECK(rep.e == 1);
    CHECK(rep.phi == 7);
    CHECK(rep.row_id == "e=1");
    CHECK(rep.engine == rreg::Engine::Formula);
}

TEST_CASE("torus engine report carries the same row metadata") {
    auto t = rreg::proportion_torus(FamilyId::TwF4, 32, Prime(31));
    auto f = rreg::proportion_formula(FamilyId::TwF4, 32, Prime(31));
    CHECK(t.engine == rreg::Engine::TorusSum);
    CHECK(t.row_id == f.row_id);
    CHECK(t.phi == f.phi);
    CHECK(t.value_sc == f.value_sc);
}

TEST_CASE("center adjustment") {
    const Rational v(1, 3);
    CHECK(rreg::center_adjust(FamilyId::E7, 3, Prime(2), v) == Rational(2, 3));
    CHECK(rreg::center_adjust(FamilyId::E7, 4, Prime(3), v) == v);
    CHECK(rreg::center_adjust(FamilyId::E6, 4, Prime(3), v) == Rational(1));
    CHECK(rreg::center_adjust(FamilyId::E6, 5, Prime(3), v) == v);
    CHECK(rreg::center_adjust(FamilyId::TwE6, 5, Prime(3), v) == Rational(1));
    CHECK(rreg::center_adjust(FamilyId::F4, 5, Prime(2), v) == v);
    auto e7 = rreg::proportion_formula(FamilyId::E7, 3, Prime(2));
    CHECK(e7.value_simple == e7.value_sc * Rational(2));
}

TEST_CASE("2F4 worked example rows") {
    auto e1 = rreg::find_row(FamilyId::TwF4, RowGuard{1, RClass::any(), 1});
    auto e2r3 = rreg::find_row(FamilyId::TwF4, RowGuard{2, RClass::equal(3), 2});
    auto e2big = rreg::find_row(FamilyId::TwF4, RowGuard{2, RClass::greater(3), 2});
    REQUIRE(e1);
    REQUIRE(e2r3);
    REQUIRE(e2big);
    CHECK(coeffs_of(*e1) == R({{7, 16}, {1, 2}, {1, 16}}));
    CHECK(coeffs_of(*e2r3) == R({{89, 144}, {1, 4}, {1, 48}}));
    CHECK(coeffs_of(*e2big) == R({{35, 48}, {1, 4}, {1, 48}}));
    // 9/16 + 1/(6 (3, r)) at r = 3 and r > 3.
    CHECK(Rational(9, 16) + Rational(1, 18) == Rational(89, 144));
    CHECK(Rational(9, 16) + Rational(1, 6) == Rational(35, 48));
}

TEST_CASE("E8 order-four rows split on (5, r)") {
    auto r5 = rreg::find_row(FamilyId::E8, RowGuard{4, RClass::equal(5), 4});
    auto big = rreg::find_row(FamilyId::E8, RowGuard{4, RClass::greater(5), 4});
    REQUIRE(r5);
    REQUIRE(big);
    CHECK(r5->coeffs()[0] == Rational(159029, 230400));
    CHECK(big->coeffs()[0] == Rational(33649, 46080));
    CHECK(r5->coeffs()[1] == big->coeffs()[1]);
}

TEST_CASE("constants") {
    CHECK(rreg::constant_infimum(FamilyId::F4).c == Rational(3577, 18432));
    CHECK(rreg::constant_infimum(FamilyId::E6).c == Rational(281, 1296));
    CHECK(Rational(179840, 829440) == Rational(281, 1296));
    CHECK(rreg::constant_infimum(FamilyId::E7).c == Rational(131491, 589824));
    CHECK(Rational(2) * Rational(41419665, 371589120) == Rational(131491, 589824));
    CHECK(rreg::constant_infimum(FamilyId::TriD4).c == Rational(17, 48));
    const auto e8 = rreg::constant_infimum(FamilyId::E8);
    CHECK(e8.c == Rational(Integer(5927482903LL), Integer(25480396800LL)));
    CHECK(Rational(Integer(41492380321LL), Integer(178362777600LL)) == e8.c);
    CHECK(e8.witness.r_class == RClass::two(1));
    CHECK(rreg::center_r_part_for_guard(FamilyId::E6, RowGuard{1, RClass::equal(3), 1}) == 3);
    CHECK(rreg::center_r_part_for_guard(FamilyId::E6, RowGuard{2, RClass::equal(3), 2}) == 1);
    CHECK(rreg::center_r_part_for_guard(FamilyId::TwE6, RowGuard{2, RClass::equal(3), 2}) == 3);
    CHECK(rreg::center_r_part_for_guard(FamilyId::E7, RowGuard{1, RClass::two(3), 2}) == 2);
    CHECK(rreg::center_r_part_for_guard(FamilyId::E7, RowGuard{1, RClass::greater(7), 1}) == 1);
}

TEST_CASE("q -> -q index map") {
    const RowGuard e3{3, RClass::any(), 3};
    CHECK(rreg::ennola_image(e3) == RowGuard{6, RClass::any(), 6});
    CHECK(rreg::ennola_image(RowGuard{4, RClass::any(), 4}) == RowGuard{4, RClass::any(), 4});
    CHECK(rreg::ennola_image(RowGuard{10, RClass::any(), 10}) == RowGuard{5, RClass::any(), 5});
    CHECK(rreg::ennola_image(RowGuard{1, RClass::two(1), 1}) == RowGuard{1, RClass::two(3), 2});
    for (FamilyId f : rreg::kAllFamilies)
        for (const auto& row : rreg::formula_rows(f))
            CHECK(rreg::ennola_image(rreg::ennola_image(row.guard())) == row.guard());

    auto e6 = rreg::find_row(FamilyId::E6, e3);
    auto tw = rreg::find_row(FamilyId::TwE6, RowGuard{6, RClass::any(), 6});
    REQUIRE(e6);
    REQUIRE(tw);
    CHECK(coeffs_of(*e6) == R({{440, 648}, {183, 648}, {24, 648}, {1, 648}}));
    CHECK(coeffs_of(*e6) == coeffs_of(*tw));
    auto e9 = rreg::find_row(FamilyId::E6, RowGuard{9, RClass::any(), 9});
    auto e18 = rreg::find_row(FamilyId::TwE6, RowGuard{18, RClass::any(), 18});
    REQUIRE(e9);
    REQUIRE(e18);
    CHECK(coeffs_of(*e9) == R({{8, 9}, {1, 9}}));
    CHECK(coeffs_of(*e18) == coeffs_of(*e9));
    auto f4a = rreg::find_row(FamilyId::F4, RowGuard{1, RClass::equal(3), 1});
    auto f4b = rreg::find_row(FamilyId::F4, RowGuard{2, RClass::equal(3), 2});
    REQUIRE(f4a);
    REQUIRE(f4b);
    CHECK(coeffs_of(*f4a) == coeffs_of(*f4b));
}

TEST_CASE("G2 rows use combined phi^2 coefficients") {
    auto r3 = rreg::find_row(FamilyId::G2, RowGuard{1, RClass::equal(3), 1});
    REQUIRE(r3);
    CHECK(r3->coeffs()[0] == Rational(11, 36));
    CHECK(rreg::constant_infimum(FamilyId::G2).c == Rational(11, 36));
}

TEST_CASE("table rendering matches the golden file") {
    std::ostringstream got;
    for (FamilyId f : rreg::kAllFamilies) {
        got << "[" << rreg::family_name(f) << "]\n";
        for (const auto& line : rreg::table_emit(f))
            got << line << "\n";
    }
    std::ifstream in(std::string(RREG_TEST_GOLDEN) + "/tables.txt");
    REQUIRE(in);
    std::stringstream want;
    want << in.rdbuf();
    CHECK(got.str() == want.str());
    CHECK(rreg::table_emit(FamilyId::TwB2) ==
          std::vector<std::string>{"e=1: 1/2 + 1/2·φ⁻¹", "e=4: 3/4 + 1/4·φ⁻¹"});
}
