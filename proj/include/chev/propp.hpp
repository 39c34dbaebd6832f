#pragma once

#include <string>
#include <vector>

namespace chev {

// One composition factor of a module restriction, together with the
// first-cohomology dimensions of the factor and its dual.  The
// cohomology numbers are caller-supplied inputs; `trivial` marks the
// trivial module itself, never just any one-dimensional factor.
struct FactorSummary {
  long dim = 0;
  long multiplicity = 1;
  long h1 = 0;
  long h1_dual = 0;
  bool trivial = false;
  bool self_dual = false;
};

enum class PropertyP { holds, fails_a, fails_b };

std::string property_p_name(PropertyP v);

// The cohomological fixed-point criterion over a factor list: with
// m the count of trivial factors (with multiplicity) and S the sum of
// multiplicity * dim H^1 over all factors, clause (a) requires S >= m,
// and in the boundary case S = m clause (b) additionally requires some
// factor with exactly one of H^1(W), H^1(W*) zero.  Throws
// std::invalid_argument on an empty list or malformed factor.
PropertyP has_property_p(const std::vector<FactorSummary>& factors);

struct PropertyPReport {
  PropertyP verdict = PropertyP::holds;
  long m = 0;
  long s = 0;
};

PropertyPReport property_p_report(const std::vector<FactorSummary>& factors);

}  // namespace chev
