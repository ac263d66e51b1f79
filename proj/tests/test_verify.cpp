#include "rreg/catalog.hpp"
#include "rreg/cyclotomic.hpp"
#include "rreg/linsolve.hpp"
#include "rreg/parallel.hpp"
#include "rreg/verify.hpp"

#include <doctest.h>

#include <atomic>
#include <cstdlib>
#include <set>

using rreg::FamilyId;
using rreg::Integer;
using rreg::Prime;
using rreg::QR;
using rreg::RClass;
using rreg::Rational;
using rreg::RowGuard;

namespace {

std::vector<Integer> phis(const RowGuard& g, const std::vector<QR>& samples) {
    std::vector<Integer> out;
    for (const auto& s : samples)
        out.push_back(rreg::phi_r_part(g.phi_index, s.q, Prime(s.r)));
    return out;
}

std::vector<Rational> R(std::initializer_list<std::pair<int, int>> xs) {
    std::vector<Rational> out;
    for (auto [n, d] : xs)
        out.emplace_back(Integer(n), Integer(d));
    return out;
}

struct ThreadsEnv {
    explicit ThreadsEnv(const char* value) { setenv("RREG_THREADS", value, 1); }
    ~ThreadsEnv() { unsetenv("RREG_THREADS"); }
};

} // namespace

TEST_CASE("exact linear solve") {
    rreg::Matrix<Rational> a{{2, 1}, {1, 3}};
    auto x = rreg::solve_exact(a, std::vector<Rational>{3, 5});
    CHECK(x == R({{4, 5}, {7, 5}}));
    rreg::Matrix<Rational> singular{{1, 2}, {2, 4}};
    CHECK_THROWS_AS(rreg::solve_exact(singular, std::vector<Rational>{1, 2}), rreg::SingularSystem);
    auto c = rreg::interpolate_exact<Rational>({Rational(1, 2), Rational(1, 3), Rational(1, 5)},
                                               {Rational(1) + Rational(1, 2) + Rational(1, 4),
                                                Rational(1) + Rational(1, 3) + Rational(1, 9),
                                                Rational(1) + Rational(1, 5) + Rational(1, 25)});
    CHECK(c == R({{1, 1}, {1, 1}, {1, 1}}));
}

TEST_CASE("sample finder") {
    const RowGuard f4e1{1, RClass::any(), 1};
    auto s = rreg::sample_finder(FamilyId::TwF4, f4e1, 3);
    CHECK(s == std::vector<QR>{{8, 7}, {32, 31}, {128, 127}});
    CHECK(phis(f4e1, s) == std::vector<Integer>{7, 31, 127});

    const RowGuard f4e2{2, RClass::greater(3), 2};
    auto t = rreg::sample_finder(FamilyId::TwF4, f4e2, 3);
    auto tp = phis(f4e2, t);
    CHECK(std::set<Integer>(tp.begin(), tp.end()) == std::set<Integer>{11, 19, 43});

    const RowGuard b2e4{4, RClass::any(), 4};
    // Phi_4(2) = 5 comes first; q = 8 then contributes only 13.
    auto u = rreg::sample_finder(FamilyId::TwB2, b2e4, 2);
    CHECK(u == std::vector<QR>{{2, 5}, {8, 13}});
    CHECK(phis(b2e4, u) == std::vector<Integer>{5, 13});

    // (q+1)_2 = 4 for every odd power of 3.
    const RowGuard g2two{1, RClass::two(3), 2};
    try {
        rreg::sample_finder(FamilyId::TwG2, g2two, 2);
        FAIL("expected the search to run dry");
    } catch (const rreg::SearchExhausted& e) {
        CHECK(e.found() == std::vector<QR>{{3, 2}});
        CHECK(std::string(e.what()).find("phi seen: 4") != std::string::npos);
    }
}

TEST_CASE("coefficient recovery by interpolation") {
    const RowGuard f4e1{1, RClass::any(), 1};
    const std::vector<QR> s1{{8, 7}, {32, 31}, {128, 127}};
    CHECK(rreg::interpolation_recover(FamilyId::TwF4, f4e1, s1) == R({{7, 16}, {1, 2}, {1, 16}}));

    const std::vector<QR> s2{{8, 5}, {8, 13}};
    CHECK(rreg::interpolation_recover(FamilyId::TwB2, RowGuard{4, RClass::any(), 4}, s2) == R({{3, 4}, {1, 4}}));

    const std::vector<QR> s3{{8, 37}, {8, 109}};
    CHECK(rreg::interpolation_recover(FamilyId::TwF4, RowGuard{12, RClass::any(), 12}, s3) ==
          R({{11, 12}, {1, 12}}));

    // Extra samples must sit on the same curve.
    const std::vector<QR> s4{{8, 7}, {32, 31}, {128, 127}, {8192, 8191}};
    CHECK(rreg::interpolation_recover(FamilyId::TwF4, f4e1, s4) == R({{7, 16}, {1, 2}, {1, 16}}));
}

TEST_CASE("interpolation errors") {
    const RowGuard f4e1{1, RClass::any(), 1};
    const std::vector<QR> dup{{8, 7}, {8, 7}, {32, 31}};
    CHECK_THROWS_AS(rreg::interpolation_recover(FamilyId::TwF4, f4e1, dup), rreg::SingularSystem);
    const std::vector<QR> few{{8, 7}, {32, 31}};
    CHECK_THROWS_WITH_AS(rreg::interpolation_recover(FamilyId::TwF4, f4e1, few),
                         doctest::Contains("insufficient samples"), rreg::DomainError);
    const std::vector<QR> outside{{8, 5}, {32, 31}, {128, 127}};
    CHECK_THROWS_AS(rreg::interpolation_recover(FamilyId::TwF4, f4e1, outside), rreg::DomainError);
    CHECK_THROWS_AS(rreg::interpolation_recover(FamilyId::E8, RowGuard{12, RClass::any(), 12}, few),
                    rreg::DomainError);
}

TEST_CASE("interpolation suite: every row but the pinned 2G2 row is recovered") {
    const auto rep = rreg::interpolation_suite();
    CHECK(rep.cases == 12);
    REQUIRE(rep.failures.size() == 1);
    CHECK(rep.failures[0].inputs == "2G2 e=1 (r=2, q≡3 mod 4)");
    CHECK(rep.failures[0].actual.find("found 1 of 2") != std::string::npos);
}

TEST_CASE("small-grid suites pass") {
    CHECK(rreg::lemma_sweep(64, 40, 24).passed());
    for (FamilyId f : {FamilyId::TwF4, FamilyId::TwB2, FamilyId::TwG2}) {
        auto rep = rreg::cross_check(f, rreg::SweepGrid::up_to(f, 512, 300));
        CHECK_MESSAGE(rep.passed(), rreg::family_name(f));
        CHECK(rep.cases > 0);
    }
    CHECK(rreg::constants_check().passed());
    CHECK(rreg::duality_check().passed());
    CHECK(rreg::structural_check(8192).passed());
    auto floor = rreg::floor_sweep(64, 300);
    CHECK(floor.passed());
    CHECK(floor.cases > 1000);
}

TEST_CASE("published constants") {
    CHECK(rreg::published_constant(FamilyId::TwG2) == Rational(1, 2));
    CHECK(rreg::published_constant(FamilyId::G2) == Rational(11, 36));
    CHECK(rreg::global_constant() == Rational(3577, 18432));
}

TEST_CASE("sweep grid") {
    auto g = rreg::SweepGrid::up_to(FamilyId::TwG2, 2187, 5);
    CHECK(g.qs == std::vector<std::uint64_t>{3, 27, 243, 2187});
    for (const auto& p : g.pairs())
        CHECK(p.r != 3);
    CHECK(g.pairs().size() == 8);
    CHECK(rreg::SweepGrid::up_to(FamilyId::TwF4, 512, 2).qs == std::vector<std::uint64_t>{2, 8, 32, 128, 512});
}

TEST_CASE("parallel map keeps index order and propagates errors") {
    ThreadsEnv env("4");
    CHECK(rreg::worker_threads() == 4);
    auto out = rreg::parallel_map(1000, [](std::size_t i) { return i * i; });
    for (std::size_t i = 0; i < out.size(); ++i)
        REQUIRE(out[i] == i * i);
    CHECK_THROWS_AS(rreg::parallel_map(100,
                                       [](std::size_t i) -> int {
                                           if (i == 37)
                                               throw std::runtime_error("boom");
                                           return 0;
                                       }),
                    std::runtime_error);
    CHECK(rreg::parallel_map(0, [](std::size_t) { return 1; }).empty());
}

TEST_CASE("sweep results do not depend on the worker count") {
    std::vector<std::string> runs;
    for (const char* n : {"1", "3", "8"}) {
        ThreadsEnv env(n);
        auto rep = rreg::lemma_sweep(64, 30, 12);
        std::string key = std::to_string(rep.cases);
        auto cross = rreg::cross_check(FamilyId::TwB2, rreg::SweepGrid::up_to(FamilyId::TwB2, 512, 200));
        key += "/" + std::to_string(cross.cases) + "/" + std::to_string(cross.failures.size());
        runs.push_back(key);
    }
    CHECK(runs[0] == runs[1]);
    CHECK(runs[1] == runs[2]);
}

TEST_CASE("suite dispatch") {
    CHECK(rreg::suite_names().size() == 7);
    auto reps = rreg::run_suite("constants");
    REQUIRE(reps.size() == 1);
    CHECK(reps[0].suite == "constants");
    rreg::GridOptions grid;
    grid.q_max = 32;
    grid.r_max = 20;
    grid.i_max = 8;
    CHECK(rreg::run_suite("lemma", grid)[0].passed());
    CHECK_THROWS_AS(rreg::run_suite("nope"), std::invalid_argument);
}
