#pragma once

// Cross-verification suites. Every comparison is exact; a suite passes when
// it records zero failures. Sweeps fan out over worker_threads() and report
// failures sorted by input.

#include "rreg/arith.hpp"
#include "rreg/errors.hpp"
#include "rreg/family.hpp"
#include "rreg/tables.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace rreg {

struct QR {
    std::uint64_t q;
    std::uint64_t r;
    friend bool operator==(const QR&, const QR&) = default;
};

struct SweepGrid {
    FamilyId family;
    std::vector<std::uint64_t> qs; ///< admissible for the family
    std::uint64_t r_max;

    /// Admissible q <= q_max.
    static SweepGrid up_to(FamilyId f, std::uint64_t q_max, std::uint64_t r_max);

    /// Every (q, r) with r prime, r <= r_max and r not dividing q; sorted.
    std::vector<QR> pairs() const;
};

struct Failure {
    std::string inputs;
    std::string expected;
    std::string actual;
    std::string row;
};

struct VerificationReport {
    explicit VerificationReport(std::string name) : suite(std::move(name)) {}

    std::string suite;
    std::size_t cases = 0;
    std::vector<Failure> failures;
    double wall_seconds = 0.0;

    bool passed() const { return failures.empty(); }
};

/// Table values of c(X), as published.
Rational published_constant(FamilyId f);

/// The global lower bound over all ten families.
Rational global_constant();

/// Torus-sum engine against the formula engine (simply connected values).
VerificationReport cross_check(FamilyId f, const SweepGrid& grid);

/// The three families with builtin catalogs on their default grids.
VerificationReport cross_check_all(std::uint64_t r_max = 10000);

struct SampleBounds {
    std::uint64_t q_max;
    std::uint64_t r_max = 100000;
};

/// q <= 2^13 for Suzuki/Ree families, 10^4 otherwise.
SampleBounds default_sample_bounds(FamilyId f);

class SearchExhausted : public DomainError {
public:
    SearchExhausted(const std::string& what, std::vector<QR> found)
        : DomainError(what), found_(std::move(found)) {}
    const std::vector<QR>& found() const noexcept { return found_; }

private:
    std::vector<QR> found_;
};

/// First `needed` (q, r), q ascending then r ascending, that select the
/// given row and have pairwise distinct phi.
std::vector<QR> sample_finder(FamilyId f, const RowGuard& g, std::size_t needed,
                              std::optional<SampleBounds> bounds = std::nullopt);

/// Recovers c_0..c_d of the row from torus-sum values at the samples by
/// exact interpolation in 1/phi. Needs at least degree + 1 samples; extra
/// samples must agree with the interpolant. Throws DomainError (insufficient
/// samples, sample outside the guard, no catalog) or SingularSystem
/// (repeated phi).
std::vector<Rational> interpolation_recover(FamilyId f, const RowGuard& g, std::span<const QR> samples);

/// Recovers every row of the given families and compares with the encoding.
VerificationReport interpolation_suite(std::span<const FamilyId> families);
VerificationReport interpolation_suite();

/// Case-analysis r-part against brute force over all prime powers q <= q_max,
/// primes r <= r_max not dividing q, and i <= i_max; also checks e | r - 1.
VerificationReport lemma_sweep(std::uint64_t q_max = 512, std::uint64_t r_max = 200, unsigned i_max = 36);

/// constant_infimum against the published constants, plus the global minimum.
VerificationReport constants_check();

/// c(X) <= simple-group value <= 1 over the grid (and the global bound for
/// r = 2, q odd).
VerificationReport floor_sweep(std::uint64_t q_max = 2048, std::uint64_t r_max = 10000);
VerificationReport floor_sweep(std::span<const FamilyId> families, std::uint64_t q_max, std::uint64_t r_max);

/// E6 rows against 2E6 rows under the q -> -q index map, and each self-dual
/// family (G2, F4, E7, E8, 3D4) against itself.
VerificationReport duality_check();

/// Catalog weight sums and the twisted-pair products against Phi_4, Phi_6,
/// Phi_12 for admissible q <= q_max.
VerificationReport structural_check(std::uint64_t q_max = 8192);

struct GridOptions {
    std::optional<std::uint64_t> q_max;
    std::optional<std::uint64_t> r_max;
    std::optional<unsigned> i_max;
};

/// Suite names accepted by run_suite, in run order for "all".
std::span<const std::string_view> suite_names();

/// Runs one named suite ("lemma", "cross", ...) or every suite ("all").
/// Throws std::invalid_argument for an unknown name.
std::vector<VerificationReport> run_suite(std::string_view name, const GridOptions& grid = {});

} // namespace rreg
