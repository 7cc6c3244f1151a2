#pragma once

#include "cohomog/presentations.hpp"

namespace cohomog {

// One degree of the series comparison: dimensions re-derived by the
// degreewise oracle against the coefficients of the presentation series.
struct VerificationRow {
  int degree = 0;
  int mv_even = 0, mv_odd = 0;
  int pres_even = 0, pres_odd = 0;
  bool match = false;
  int exactness_defect = 0;  // even degrees of interval specs only
};

struct SpotcheckRow {
  std::string name;
  std::string detail;
  bool pass = false;
};

struct FreenessRow {
  std::string leg;
  bool checked = false;  // false: skipped (non-orientable)
  bool pass = false;
  std::string detail;
};

struct VerificationReport {
  std::string spec_name;
  int truncation = 0;
  std::vector<VerificationRow> rows;
  std::vector<SpotcheckRow> spotchecks;
  std::vector<FreenessRow> freeness;

  bool verdict() const;
  // First degree whose row fails to match, or -1.
  int first_mismatch_degree() const;
};

// Degreewise dimension oracle vs the presentation series. Interval
// specs go through the Mayer-Vietoris computation; circle specs through
// a direct invariant count for <W(K), aut>, one extra exterior degree.
VerificationReport compare_series(const ActionSpec& spec,
                                  const RingPresentation& pres, int N);

// Random homogeneous product identities: unit law, odd*odd = 0, even
// closure under both restrictions, associativity. Interval specs only;
// deterministic given the seed. Appends to the report.
void product_spotchecks(const ActionSpec& spec, int trials, unsigned seed,
                        VerificationReport& report);

// Per-leg Poincare series identity P_H = P_K (1 - t^{n+1}) (odd leg) or
// P_H = P_K (1 + t^n) (even leg); skipped for non-orientable legs.
void freeness_checks(const ActionSpec& spec, int N,
                     VerificationReport& report);

// compare_series + product_spotchecks + freeness_checks.
VerificationReport full_verification(const ActionSpec& spec,
                                     const RingPresentation& pres, int N,
                                     int trials, unsigned seed);

}  // namespace cohomog
