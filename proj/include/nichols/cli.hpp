#pragma once

// Command-line front end: analyze, reflect, oracle and compare.

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "nichols/braiding.hpp"
#include "nichols/cartan.hpp"
#include "nichols/groupoid.hpp"
#include "nichols/oracle.hpp"

namespace nichols::cli {

enum ExitCode : int {
    kOk = 0,
    kMismatch = 1,  // comparison mismatch or --require-finite unmet
    kBadInput = 2,
    kNotReflectable = 3,
    kCutoffTooSmall = 4,
};

struct AnalysisReport {
    BraidingMatrix input;
    std::optional<CartanMatrix> cartan;
    std::optional<FiniteTypeReport> finite_type;
    size_t states = 0;
    size_t arrows = 0;
    std::vector<Obstruction> obstructions;
    bool cap_exceeded = false;
    /// Graded-lex sorted; nullopt unless the groupoid was shown finite.
    std::optional<std::vector<IntVector>> positive_roots;
    std::optional<size_t> weyl_groupoid_size;
    std::optional<BrandtReport> brandt;

    bool shown_finite() const { return positive_roots.has_value(); }
};

/// Above this many elements the Brandt axioms are not checked.
inline constexpr size_t kBrandtCheckLimit = 2000;

AnalysisReport analyze(const BraidingMatrix& q, const Caps& caps);

struct OracleReport {
    int max_degree = 0;
    HilbertTable hilbert;
    std::vector<PbwDatum> pbw;
    std::optional<std::string> cutoff_error;  // set when the PBW data could not be inferred
};

OracleReport run_oracle(const BraidingMatrix& q, int max_degree, int threads);

struct Comparison {
    bool match = false;
    std::vector<IntVector> groupoid_roots;  // restricted to total degree <= D
    std::vector<IntVector> oracle_roots;
    std::vector<IntVector> only_groupoid;
    std::vector<IntVector> only_oracle;
    std::vector<IntVector> non_unit_multiplicity;
    std::optional<std::string> note;
};

/// Requires oracle.cutoff_error to be empty.
Comparison compare_roots(const AnalysisReport& analysis, const OracleReport& oracle);

std::string render_analysis(const AnalysisReport& r, bool json);
std::string render_oracle(const OracleReport& r, bool json);
std::string render_comparison(const AnalysisReport& a, const OracleReport& o, const Comparison& c, bool json);

/// Entry point shared by the executable and the tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace nichols::cli
