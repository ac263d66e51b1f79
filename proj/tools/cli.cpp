#include "cli.hpp"

#include "rreg/catalog.hpp"
#include "rreg/cyclotomic.hpp"
#include "rreg/errors.hpp"
#include "rreg/parallel.hpp"
#include "rreg/tables.hpp"
#include "rreg/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <limits>
#include <optional>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace rreg::cli {

namespace {

using json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Format { Plain, Json, Csv };

Format format_arg(const std::string& s) {
    if (s == "json")
        return Format::Json;
    if (s == "csv")
        return Format::Csv;
    return Format::Plain;
}

std::string approx(const Rational& v) {
    std::ostringstream s;
    s << std::setprecision(4) << v.approx();
    return s.str();
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + "\"";
}

json integer_json(const Integer& n) {
    if (n >= 0 && n <= std::numeric_limits<std::uint64_t>::max())
        return static_cast<std::uint64_t>(n);
    return n.str();
}

json rational_json(const Rational& v) {
    return json{{"num", v.num().str()}, {"den", v.den().str()}};
}

FamilyId family_arg(const std::string& s) {
    if (auto f = parse_family(s))
        return *f;
    throw UsageError("unknown family '" + s + "'; expected one of G2 F4 E6 2E6 E7 E8 2B2 2G2 2F4 3D4");
}

Integer q_arg(const std::string& s) {
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }))
        throw UsageError("--q expects a positive integer, got '" + s + "'");
    return Integer(s);
}

Prime r_arg(std::uint64_t r) {
    if (!is_prime(r))
        throw UsageError("--r expects a prime, got " + std::to_string(r));
    return Prime(r);
}

void require_coprime(const GroupParams& g, Prime r) {
    if (g.p == r)
        throw DomainError("r equals the defining characteristic; r must not divide q = " + g.q.str());
}

// ---------------------------------------------------------------------------
// Proportion records (prop, scan)

constexpr const char* kRecordHeader = "family,q,r,e,phi,row,value_num,value_den,value_approx,simple,engine";

const Rational& shown_value(const ProportionReport& rep, bool simple) {
    return simple ? rep.value_simple : rep.value_sc;
}

json record_json(const ProportionReport& rep, bool simple) {
    const Rational& v = shown_value(rep, simple);
    json j;
    j["family"] = family_name(rep.family);
    j["q"] = integer_json(rep.q);
    j["r"] = rep.r.value();
    j["e"] = rep.e;
    j["phi"] = rep.row_id == "no-row" ? json(nullptr) : integer_json(rep.phi);
    j["row"] = rep.row_id;
    j["value_num"] = v.num().str();
    j["value_den"] = v.den().str();
    j["value_approx"] = v.approx();
    j["simple"] = simple;
    j["engine"] = engine_name(rep.engine);
    return j;
}

std::string record_csv(const ProportionReport& rep, bool simple) {
    const Rational& v = shown_value(rep, simple);
    std::ostringstream s;
    s << family_name(rep.family) << ',' << rep.q << ',' << rep.r.value() << ',' << rep.e << ','
      << (rep.row_id == "no-row" ? std::string() : rep.phi.str()) << ',' << csv_field(rep.row_id) << ','
      << v.num() << ',' << v.den() << ',' << v.approx() << ',' << (simple ? "true" : "false") << ','
      << engine_name(rep.engine);
    return s.str();
}

// ---------------------------------------------------------------------------
// prop

struct PropOptions {
    std::string family;
    std::string q;
    std::uint64_t r = 0;
    bool simple = false;
    std::string engine = "formula";
    std::string format = "plain";
};

int cmd_prop(const PropOptions& o, std::ostream& out) {
    const FamilyId f = family_arg(o.family);
    const Prime r = r_arg(o.r);
    const GroupParams g = make_params(f, q_arg(o.q));
    require_coprime(g, r);

    std::vector<ProportionReport> reps;
    if (o.engine == "formula" || o.engine == "both")
        reps.push_back(proportion_formula(g, r));
    if (o.engine == "torus" || o.engine == "both")
        reps.push_back(proportion_torus(f, g.q, r));
    const bool both = reps.size() == 2;
    const bool agree = !both || shown_value(reps[0], o.simple) == shown_value(reps[1], o.simple);

    switch (format_arg(o.format)) {
    case Format::Plain:
        for (const auto& rep : reps) {
            const Rational& v = shown_value(rep, o.simple);
            if (both)
                out << engine_name(rep.engine) << ": ";
            out << v << " (≈" << approx(v) << ")\n";
        }
        if (both)
            out << "agree=" << (agree ? "true" : "false") << "\n";
        break;
    case Format::Json:
        for (const auto& rep : reps) {
            json j = record_json(rep, o.simple);
            if (both)
                j["agree"] = agree;
            out << j.dump() << "\n";
        }
        break;
    case Format::Csv:
        out << kRecordHeader << "\n";
        for (const auto& rep : reps)
            out << record_csv(rep, o.simple) << "\n";
        break;
    }
    return agree ? kOk : kVerificationFailed;
}

// ---------------------------------------------------------------------------
// table

int cmd_table(const std::string& family, const std::string& format, std::ostream& out) {
    const FamilyId f = family_arg(family);
    switch (format_arg(format)) {
    case Format::Plain:
        for (const auto& line : table_emit(f))
            out << line << "\n";
        break;
    case Format::Json:
        for (const auto& row : formula_rows(f)) {
            json coeffs = json::array();
            for (const auto& c : row.coeffs())
                coeffs.push_back(rational_json(c));
            out << json{{"family", family_name(f)},
                        {"row", row.guard().label()},
                        {"e", row.guard().e},
                        {"phi_index", row.guard().phi_index},
                        {"coeffs", coeffs}}
                       .dump()
                << "\n";
        }
        break;
    case Format::Csv:
        out << "family,row,e,phi_index,coeffs\n";
        for (const auto& row : formula_rows(f)) {
            std::string coeffs;
            for (const auto& c : row.coeffs())
                coeffs += (coeffs.empty() ? "" : ";") + c.str();
            out << family_name(f) << ',' << csv_field(row.guard().label()) << ',' << row.guard().e << ','
                << row.guard().phi_index << ',' << coeffs << "\n";
        }
        break;
    }
    return kOk;
}

// ---------------------------------------------------------------------------
// constants

int cmd_constants(const std::string& family, const std::string& format, std::ostream& out) {
    std::vector<FamilyId> families;
    if (family.empty())
        families.assign(kAllFamilies.begin(), kAllFamilies.end());
    else
        families.push_back(family_arg(family));
    const Format fmt = format_arg(format);
    if (fmt == Format::Csv)
        out << "family,c_num,c_den,c_approx,witness\n";
    for (FamilyId f : families) {
        const FamilyConstant c = constant_infimum(f);
        switch (fmt) {
        case Format::Plain:
            out << std::left << std::setw(5) << family_name(f) << std::setw(24) << c.c.str() << std::setw(12)
                << "≈" + approx(c.c) << "witness " << c.witness.label() << "\n";
            break;
        case Format::Json:
            out << json{{"family", family_name(f)},
                        {"c_num", c.c.num().str()},
                        {"c_den", c.c.den().str()},
                        {"c_approx", c.c.approx()},
                        {"witness", c.witness.label()}}
                       .dump()
                << "\n";
            break;
        case Format::Csv:
            out << family_name(f) << ',' << c.c.num() << ',' << c.c.den() << ',' << c.c.approx() << ','
                << csv_field(c.witness.label()) << "\n";
            break;
        }
    }
    if (family.empty()) {
        Rational global = constant_infimum(kAllFamilies.front()).c;
        for (FamilyId f : kAllFamilies)
            global = std::min(global, constant_infimum(f).c);
        switch (fmt) {
        case Format::Plain: out << "global minimum: " << global << " (≈" << approx(global) << ")\n"; break;
        case Format::Json:
            out << json{{"global_minimum_num", global.num().str()},
                        {"global_minimum_den", global.den().str()},
                        {"global_minimum_approx", global.approx()}}
                       .dump()
                << "\n";
            break;
        case Format::Csv: out << "global," << global.num() << ',' << global.den() << ',' << global.approx() << ",\n"; break;
        }
    }
    return kOk;
}

// ---------------------------------------------------------------------------
// verify

GridOptions grid_arg(const std::string& text) {
    GridOptions grid;
    if (text.empty())
        return grid;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos)
            throw UsageError("malformed --grid entry '" + item + "'; expected key=value");
        const std::string key = item.substr(0, eq);
        const std::string value = item.substr(eq + 1);
        std::uint64_t n = 0;
        try {
            std::size_t used = 0;
            n = std::stoull(value, &used);
            if (used != value.size() || n == 0)
                throw std::invalid_argument(value);
        } catch (const std::exception&) {
            throw UsageError("malformed --grid value '" + value + "' for " + key);
        }
        if (key == "qmax")
            grid.q_max = n;
        else if (key == "rmax")
            grid.r_max = n;
        else if (key == "imax")
            grid.i_max = static_cast<unsigned>(n);
        else
            throw UsageError("unknown --grid key '" + key + "'; expected qmax, rmax or imax");
    }
    return grid;
}

int cmd_verify(const std::string& suite, const std::string& grid_text, const std::string& format, std::size_t show,
               std::ostream& out, std::ostream& err) {
    const GridOptions grid = grid_arg(grid_text);
    const auto names = suite_names();
    if (suite != "all" && std::find(names.begin(), names.end(), suite) == names.end())
        throw UsageError("unknown suite '" + suite + "'; expected all, lemma, cross, interp, constants, floor, duality or structure");

    const Format fmt = format_arg(format);
    if (fmt == Format::Csv)
        out << "suite,cases,failures,passed\n";
    std::size_t failed_suites = 0;
    for (auto name : (suite == "all" ? std::vector<std::string_view>(names.begin(), names.end())
                                     : std::vector<std::string_view>{suite})) {
        for (const auto& rep : run_suite(name, grid)) {
            err << rep.suite << ": " << std::fixed << std::setprecision(2) << rep.wall_seconds << " s\n"
                << std::defaultfloat;
            if (!rep.passed())
                ++failed_suites;
            switch (fmt) {
            case Format::Plain:
                out << std::left << std::setw(10) << rep.suite << " " << std::right << std::setw(9) << rep.cases
                    << " cases  " << std::setw(5) << rep.failures.size() << " failures  "
                    << (rep.passed() ? "PASS" : "FAIL") << "\n";
                for (std::size_t i = 0; i < rep.failures.size() && i < show; ++i) {
                    const auto& f = rep.failures[i];
                    out << "  " << f.inputs << ": expected " << f.expected << ", got " << f.actual;
                    if (!f.row.empty())
                        out << " [" << f.row << "]";
                    out << "\n";
                }
                if (rep.failures.size() > show)
                    out << "  ... " << rep.failures.size() - show << " more\n";
                break;
            case Format::Json: {
                json failures = json::array();
                for (const auto& f : rep.failures)
                    failures.push_back(
                        {{"inputs", f.inputs}, {"expected", f.expected}, {"actual", f.actual}, {"row", f.row}});
                out << json{{"suite", rep.suite},
                            {"cases", rep.cases},
                            {"passed", rep.passed()},
                            {"failures", failures}}
                           .dump()
                    << "\n";
                break;
            }
            case Format::Csv:
                out << rep.suite << ',' << rep.cases << ',' << rep.failures.size() << ','
                    << (rep.passed() ? "true" : "false") << "\n";
                break;
            }
        }
    }
    return failed_suites == 0 ? kOk : kVerificationFailed;
}

// ---------------------------------------------------------------------------
// scan

struct ScanOptions {
    std::string family;
    std::uint64_t q_max = 0;
    std::uint64_t r_max = 0;
    bool check_floor = false;
    bool simple = false;
    std::string format = "plain";
};

int cmd_scan(const ScanOptions& o, std::ostream& out) {
    const FamilyId f = family_arg(o.family);
    const auto qs = admissible_q(f, o.q_max);
    const auto primes = primes_up_to(o.r_max);
    const Rational floor = constant_infimum(f).c;
    const Rational global = global_constant();

    struct Row {
        ProportionReport rep;
        bool floor_ok;
    };
    auto per_q = parallel_map(qs.size(), [&](std::size_t k) {
        std::vector<Row> rows;
        const GroupParams g = make_params(f, Integer(qs[k]));
        for (std::uint64_t r : primes) {
            if (r == g.p)
                continue;
            ProportionReport rep = proportion_formula(g, Prime(r));
            bool ok = rep.value_simple >= floor && rep.value_simple <= Rational(1);
            if (r == 2)
                ok = ok && rep.value_simple >= global;
            rows.push_back({std::move(rep), ok});
        }
        return rows;
    });

    const Format fmt = format_arg(o.format);
    if (fmt == Format::Csv)
        out << kRecordHeader << (o.check_floor ? ",floor_ok" : "") << "\n";
    std::size_t violations = 0;
    for (const auto& rows : per_q) {
        for (const auto& row : rows) {
            const ProportionReport& rep = row.rep;
            if (o.check_floor && !row.floor_ok)
                ++violations;
            switch (fmt) {
            case Format::Plain: {
                const Rational& v = shown_value(rep, o.simple);
                out << "q=" << rep.q << " r=" << rep.r.value() << " e=" << rep.e;
                if (rep.row_id != "no-row")
                    out << " phi=" << rep.phi;
                out << " [" << rep.row_id << "] " << v << " (≈" << approx(v) << ")";
                if (o.check_floor)
                    out << (row.floor_ok ? " floor=ok" : " floor=VIOLATED");
                out << "\n";
                break;
            }
            case Format::Json: {
                json j = record_json(rep, o.simple);
                if (o.check_floor)
                    j["floor_ok"] = row.floor_ok;
                out << j.dump() << "\n";
                break;
            }
            case Format::Csv:
                out << record_csv(rep, o.simple);
                if (o.check_floor)
                    out << ',' << (row.floor_ok ? "true" : "false");
                out << "\n";
                break;
            }
        }
    }
    return violations == 0 ? kOk : kVerificationFailed;
}

// ---------------------------------------------------------------------------
// catalog

int cmd_catalog(const std::string& family, const std::string& path, bool validate, std::ostream& out) {
    if (family.empty() && path.empty())
        throw UsageError("catalog needs --family or --path");
    std::optional<Catalog> loaded;
    if (!path.empty()) {
        if (validate) {
            std::ifstream in(path);
            if (!in)
                throw DomainError("cannot open catalog file '" + path + "'");
            loaded = parse_catalog(in);
        } else {
            loaded = load_catalog(path);
        }
        if (!family.empty() && family_arg(family) != loaded->family)
            throw DomainError("catalog file is for " + std::string(family_name(loaded->family)) + ", not " + family);
    } else {
        const FamilyId f = family_arg(family);
        auto builtin = builtin_catalog(f);
        if (!builtin)
            throw DomainError("catalog unavailable for " + std::string(family_name(f)) +
                              ": no builtin catalog for G2, F4, E6, 2E6, E7, E8, 3D4; supply one with --path");
        loaded = std::move(builtin);
    }
    const Catalog& c = *loaded;

    if (!validate) {
        out << format_catalog(c);
        return kOk;
    }
    const auto violations = validate_catalog(c);
    out << family_name(c.family) << ": " << c.classes.size() << " classes, ";
    if (violations.empty()) {
        out << "valid\n";
        return kOk;
    }
    out << violations.size() << " violation" << (violations.size() == 1 ? "" : "s") << "\n";
    for (const auto& v : violations)
        out << "  " << v << "\n";
    return kVerificationFailed;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact proportions of r-regular elements in finite exceptional groups", "rreg"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Expand help for every subcommand");
    const auto formats = CLI::IsMember({"plain", "json", "csv"});

    PropOptions prop;
    auto* prop_cmd = app.add_subcommand("prop", "Proportion of r-regular elements for one (family, q, r)");
    prop_cmd->add_option("--family", prop.family, "Family, e.g. 2F4, E8, 3D4")->required();
    prop_cmd->add_option("--q", prop.q, "Field size (a prime power)")->required();
    prop_cmd->add_option("--r", prop.r, "Prime r not dividing q")->required();
    prop_cmd->add_flag("--simple", prop.simple, "Value for the simple group G/Z(G)");
    prop_cmd->add_option("--engine", prop.engine, "formula, torus or both")
        ->check(CLI::IsMember({"formula", "torus", "both"}));
    prop_cmd->add_option("--format", prop.format, "plain, json or csv")->check(formats);

    std::string table_family;
    std::string table_format = "plain";
    auto* table_cmd = app.add_subcommand("table", "Print a family's encoded table rows");
    table_cmd->add_option("--family", table_family, "Family")->required();
    table_cmd->add_option("--format", table_format, "plain, json or csv")->check(formats);

    std::string const_family;
    std::string const_format = "plain";
    auto* const_cmd = app.add_subcommand("constants", "Lower bounds c(X) with witness rows");
    const_cmd->add_option("--family", const_family, "Restrict to one family");
    const_cmd->add_option("--format", const_format, "plain, json or csv")->check(formats);

    std::string suite = "all";
    std::string grid;
    std::string verify_format = "plain";
    std::size_t show = 20;
    auto* verify_cmd = app.add_subcommand("verify", "Run verification suites");
    verify_cmd->add_option("--suite", suite, "all, lemma, cross, interp, constants, floor, duality, structure");
    verify_cmd->add_option("--grid", grid, "Grid overrides, e.g. qmax=512,rmax=200,imax=36");
    verify_cmd->add_option("--show", show, "Failures listed per suite (plain format)");
    verify_cmd->add_option("--format", verify_format, "plain, json or csv")->check(formats);

    ScanOptions scan;
    auto* scan_cmd = app.add_subcommand("scan", "One record per admissible (q, r) in a grid");
    scan_cmd->add_option("--family", scan.family, "Family")->required();
    scan_cmd->add_option("--q-max", scan.q_max, "Largest q")->required();
    scan_cmd->add_option("--r-max", scan.r_max, "Largest prime r")->required();
    scan_cmd->add_flag("--check-floor", scan.check_floor, "Compare each simple-group value with c(X)");
    scan_cmd->add_flag("--simple", scan.simple, "Report simple-group values");
    scan_cmd->add_option("--format", scan.format, "plain, json or csv")->check(formats);

    std::string cat_family;
    std::string cat_path;
    bool cat_validate = false;
    auto* cat_cmd = app.add_subcommand("catalog", "Print or validate a maximal-torus catalog");
    cat_cmd->add_option("--family", cat_family, "Family with a builtin catalog (2F4, 2B2, 2G2)");
    cat_cmd->add_option("--path", cat_path, "Catalog file");
    cat_cmd->add_flag("--validate", cat_validate, "Report invariant violations instead of printing");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (prop_cmd->parsed())
            return cmd_prop(prop, out);
        if (table_cmd->parsed())
            return cmd_table(table_family, table_format, out);
        if (const_cmd->parsed())
            return cmd_constants(const_family, const_format, out);
        if (verify_cmd->parsed())
            return cmd_verify(suite, grid, verify_format, show, out, err);
        if (scan_cmd->parsed())
            return cmd_scan(scan, out);
        if (cat_cmd->parsed())
            return cmd_catalog(cat_family, cat_path, cat_validate, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return kDomain;
    } catch (const ParseError& e) {
        err << "error: catalog " << e.what() << "\n";
        return kDomain;
    } catch (const InternalError& e) {
        err << "internal error: " << e.what() << "\n";
        return kInternal;
    }
    return kUsage;
}

} // namespace rreg::cli
