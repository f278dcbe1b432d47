#pragma once

#include <string>
#include <vector>

#include "singquad/polynomial.hpp"

namespace singquad {

/// Comparison of one published closed-form correction entry against the
/// generator's output. Jump-order polynomials are in the entry's own alpha
/// convention, normalized as P_k(alpha/h) * h^(k+1).
struct ErratumEntry {
  int n = 0;
  int j = 0;
  bool match = true;
  std::vector<int> mismatched_jump_orders;
  std::vector<RationalPoly> published;
  std::vector<RationalPoly> generated;
};

/// The published closed-form table entry for (n, j), hard-coded as printed.
std::vector<RationalPoly> published_correction(int n, int j);

std::vector<ErratumEntry> erratum_entries();

/// Plain-text erratum artifact: each table entry, the generator's form, and
/// match/mismatch status.
std::string erratum_report();

}  // namespace singquad
