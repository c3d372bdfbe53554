#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qlfun/grid.hpp"
#include "qlfun/zeta_l.hpp"

namespace qlfun {

enum class SuiteId {
  I1_recurrence,
  I2_poly_at_zero,
  I3_splice,
  I4_eq15,
  I5_eq4_closed,
  I6_eq14_corrected,
  I7_eq11,
  I8_eq13,
  I9_eq8,
  I10_eq12,
  I11_expansions,
  I12_qlimits,
  I13_char_sanity,
};

const char* suite_name(SuiteId id);
std::optional<SuiteId> suite_from_name(const std::string& name);
std::vector<SuiteId> all_suites();

// One grid point of a verification suite: both sides, their certified
// bounds, and the pass decision
//   pass  <=>  rel_err <= tol + (lhs_bound + rhs_bound) / max(|lhs|, floor)
// with floor = 10^-digits; exact-mode points demand a zero rational
// residual instead.
struct IdentityReport {
  SuiteId suite = SuiteId::I1_recurrence;
  std::string params;
  Complex lhs, rhs;
  Real abs_err, rel_err;
  Real lhs_bound, rhs_bound;
  Real tol;
  bool pass = false;
  Mode mode = Mode::Certified;
  bool asserted = true;  // asserted points gate the suite; the rest annotate
  std::string note;
};

struct SuiteResult {
  SuiteId id = SuiteId::I1_recurrence;
  std::vector<IdentityReport> reports;
  bool passed = true;  // conjunction over asserted reports
};

// Default grids are data; the CLI can override the common axes.
struct GridOverride {
  std::optional<std::vector<mpq_class>> q_list;
  std::optional<unsigned> n_max;
  std::optional<std::vector<unsigned>> r_list;
  std::optional<std::vector<std::string>> chi_list;
};

SuiteResult run_suite(SuiteId id, const PrecisionCtx& ctx, const GridOverride& grid = {},
                      const RunOptions& opts = {});

std::vector<SuiteResult> run_all_suites(const PrecisionCtx& ctx, const GridOverride& grid = {},
                                        const RunOptions& opts = {});

// Compares the two closed-form exponent variants of the order-r character
// numbers against the direct series: the degree-shifted variant must match,
// and the full-degree variant's deviation ratio must equal [F]_q^r.
SuiteResult adjudicate_eq14(const PrecisionCtx& ctx, const GridOverride& grid = {},
                            const RunOptions& opts = {});

bool all_passed(const std::vector<SuiteResult>& results);

}  // namespace qlfun
