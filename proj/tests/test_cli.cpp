#include "cli.hpp"

#include "rreg/catalog.hpp"

#include <doctest.h>
#include <json.hpp>

#include <sstream>

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = rreg::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    for (std::string line; std::getline(in, line);)
        out.push_back(line);
    return out;
}

const std::string kData = RREG_TEST_DATA;

} // namespace

TEST_CASE("prop") {
    auto r = run({"prop", "--family", "2F4", "--q", "8", "--r", "7"});
    CHECK(r.code == 0);
    CHECK(r.out == "25/49 (≈0.5102)\n");

    auto both = run({"prop", "--family", "2B2", "--q", "8", "--r", "5", "--engine", "both"});
    CHECK(both.code == 0);
    CHECK(both.out == "formula: 4/5 (≈0.8)\ntorus-sum: 4/5 (≈0.8)\nagree=true\n");

    auto torus = run({"prop", "--family", "TwG2", "--q", "3", "--r", "2", "--engine", "torus"});
    CHECK(torus.out == "5/8 (≈0.625)\n");
}

TEST_CASE("prop json and the simple-group value") {
    auto sc = run({"prop", "--family", "E7", "--q", "3", "--r", "2", "--format", "json"});
    auto simple = run({"prop", "--family", "E7", "--q", "3", "--r", "2", "--simple", "--format", "json"});
    REQUIRE(sc.code == 0);
    REQUIRE(simple.code == 0);
    auto a = nlohmann::json::parse(sc.out);
    auto b = nlohmann::json::parse(simple.out);
    for (const char* key : {"family", "q", "r", "e", "phi", "row", "value_num", "value_den", "value_approx", "simple",
                            "engine"})
        CHECK_MESSAGE(a.contains(key), key);
    CHECK(a["simple"] == false);
    CHECK(b["simple"] == true);
    CHECK(a["phi"] == 4);
    const rreg::Rational va(rreg::Integer(a["value_num"].get<std::string>()),
                            rreg::Integer(a["value_den"].get<std::string>()));
    const rreg::Rational vb(rreg::Integer(b["value_num"].get<std::string>()),
                            rreg::Integer(b["value_den"].get<std::string>()));
    CHECK(vb == va * rreg::Rational(2));

    auto none = run({"prop", "--family", "F4", "--q", "4", "--r", "11", "--format", "json"});
    auto j = nlohmann::json::parse(none.out);
    CHECK(j["row"] == "no-row");
    CHECK(j["phi"].is_null());
    CHECK(j["value_num"] == "1");
}

TEST_CASE("prop csv quotes row labels") {
    auto r = run({"prop", "--family", "3D4", "--q", "7", "--r", "2", "--format", "csv"});
    auto ls = lines(r.out);
    REQUIRE(ls.size() == 2);
    CHECK(ls[0] == "family,q,r,e,phi,row,value_num,value_den,value_approx,simple,engine");
    CHECK(ls[1].find("\"e=1 (r=2, q≡3 mod 4)\"") != std::string::npos);
}

TEST_CASE("exit codes") {
    auto dc = run({"prop", "--family", "2B2", "--q", "8", "--r", "2"});
    CHECK(dc.code == 3);
    CHECK(dc.err.find("defining characteristic") != std::string::npos);

    auto badq = run({"prop", "--family", "2B2", "--q", "4", "--r", "5"});
    CHECK(badq.code == 3);
    CHECK(badq.err.find("q = 2^f with f odd") != std::string::npos);

    CHECK(run({"prop", "--family", "E9", "--q", "4", "--r", "5"}).code == 2);
    CHECK(run({"prop", "--family", "E8", "--q", "4", "--r", "6"}).code == 2);
    CHECK(run({"prop", "--family", "E8", "--q", "x", "--r", "5"}).code == 2);
    CHECK(run({"prop", "--family", "E8", "--q", "4"}).code == 2);
    CHECK(run({"prop", "--family", "E8", "--q", "4", "--r", "5", "--engine", "magic"}).code == 2);
    CHECK(run({"prop", "--family", "E8", "--q", "6", "--r", "5"}).code == 3);
    CHECK(run({"prop", "--family", "E8", "--q", "4", "--r", "5", "--engine", "torus"}).code == 3);
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("table") {
    auto r = run({"table", "--family", "2B2"});
    CHECK(r.code == 0);
    CHECK(r.out == "e=1: 1/2 + 1/2·φ⁻¹\ne=4: 3/4 + 1/4·φ⁻¹\n");
    auto j = run({"table", "--family", "2G2", "--format", "json"});
    auto ls = lines(j.out);
    CHECK(ls.size() == 4);
    auto first = nlohmann::json::parse(ls[0]);
    CHECK(first["coeffs"][0]["num"] == "7");
    CHECK(first["coeffs"][0]["den"] == "12");
}

TEST_CASE("constants") {
    auto r = run({"constants"});
    CHECK(r.code == 0);
    auto ls = lines(r.out);
    REQUIRE(ls.size() == 11);
    CHECK(ls[10] == "global minimum: 3577/18432 (≈0.1941)");
    CHECK(ls[9].find("5927482903/25480396800") != std::string::npos);
    auto one = run({"constants", "--family", "3D4", "--format", "csv"});
    CHECK(lines(one.out).size() == 2);
    CHECK(lines(one.out)[1].rfind("3D4,17,48,", 0) == 0);
}

TEST_CASE("catalog") {
    auto r = run({"catalog", "--family", "2B2"});
    CHECK(r.code == 0);
    CHECK(rreg::parse_catalog(r.out) == *rreg::builtin_catalog(rreg::FamilyId::TwB2));

    auto f4 = run({"catalog", "--family", "2F4"});
    int classes = 0;
    for (const auto& l : lines(f4.out))
        classes += l.rfind("class ", 0) == 0;
    CHECK(classes == 11);

    auto e8 = run({"catalog", "--family", "E8"});
    CHECK(e8.code == 3);
    CHECK(e8.err.find("catalog unavailable") != std::string::npos);
    CHECK(e8.err.find("G2, F4, E6, 2E6, E7, E8, 3D4") != std::string::npos);

    auto bad = run({"catalog", "--path", kData + "/bad_weights.cat", "--validate"});
    CHECK(bad.code == 1);
    CHECK(bad.out.find("weights sum to 3/4") != std::string::npos);

    auto good = run({"catalog", "--path", kData + "/g2.cat", "--validate"});
    CHECK(good.code == 0);
    CHECK(good.out == "G2: 6 classes, valid\n");

    auto parse = run({"catalog", "--path", kData + "/bad_token.cat"});
    CHECK(parse.code == 3);
    CHECK(parse.err.find("line 3") != std::string::npos);

    CHECK(run({"catalog", "--path", kData + "/g2.cat", "--family", "E6"}).code == 3);
    CHECK(run({"catalog"}).code == 2);
}

TEST_CASE("verify") {
    auto ok = run({"verify", "--suite", "constants"});
    CHECK(ok.code == 0);
    CHECK(ok.out.find("PASS") != std::string::npos);
    CHECK(ok.err.find("constants:") != std::string::npos);

    auto small = run({"verify", "--suite", "lemma", "--grid", "qmax=32,rmax=20,imax=6", "--format", "json"});
    CHECK(small.code == 0);
    auto j = nlohmann::json::parse(small.out);
    CHECK(j["suite"] == "lemma");
    CHECK(j["passed"] == true);

    auto interp = run({"verify", "--suite", "interp"});
    CHECK(interp.code == 1);
    CHECK(interp.out.find("2G2 e=1 (r=2, q≡3 mod 4)") != std::string::npos);

    CHECK(run({"verify", "--suite", "bogus"}).code == 2);
    CHECK(run({"verify", "--grid", "qmax"}).code == 2);
    CHECK(run({"verify", "--grid", "qmax=abc"}).code == 2);
    CHECK(run({"verify", "--grid", "zmax=3"}).code == 2);
}

TEST_CASE("scan") {
    std::vector<std::string> args{"scan", "--family", "2B2", "--q-max", "512", "--r-max", "50", "--check-floor",
                                  "--format", "json"};
    auto a = run(args);
    auto b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    std::vector<std::pair<std::uint64_t, std::uint64_t>> keys;
    for (const auto& l : lines(a.out)) {
        auto j = nlohmann::json::parse(l);
        CHECK(j["floor_ok"] == true);
        keys.emplace_back(j["q"].get<std::uint64_t>(), j["r"].get<std::uint64_t>());
    }
    CHECK(std::is_sorted(keys.begin(), keys.end()));
    CHECK(keys.size() == 5 * 14);

    auto plain = run({"scan", "--family", "2F4", "--q-max", "8", "--r-max", "7"});
    CHECK(lines(plain.out).back() == "q=8 r=7 e=1 phi=7 [e=1] 25/49 (≈0.5102)");
}
