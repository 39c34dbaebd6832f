#include "chev/propp.hpp"

#include <stdexcept>

namespace chev {

std::string property_p_name(PropertyP v) {
  switch (v) {
    case PropertyP::holds:
      return "holds";
    case PropertyP::fails_a:
      return "fails(a)";
    default:
      return "fails(b)";
  }
}

PropertyP has_property_p(const std::vector<FactorSummary>& factors) {
  return property_p_report(factors).verdict;
}

PropertyPReport property_p_report(const std::vector<FactorSummary>& factors) {
  if (factors.empty()) throw std::invalid_argument("property check needs at least one factor");
  PropertyPReport rep;
  for (const auto& f : factors) {
    if (f.dim <= 0 || f.multiplicity <= 0 || f.h1 < 0 || f.h1_dual < 0)
      throw std::invalid_argument("malformed composition factor");
    if (f.trivial && f.dim != 1)
      throw std::invalid_argument("a trivial factor is one-dimensional");
    if (f.self_dual && f.h1 != f.h1_dual)
      throw std::invalid_argument("a self-dual factor has matching cohomology on both sides");
    if (f.trivial) rep.m += f.multiplicity;
    rep.s += f.multiplicity * f.h1;
  }
  if (rep.s < rep.m) {
    rep.verdict = PropertyP::fails_a;
    return rep;
  }
  if (rep.s > rep.m) {
    rep.verdict = PropertyP::holds;
    return rep;
  }
  rep.verdict = PropertyP::fails_b;
  for (const auto& f : factors)
    if ((f.h1 == 0) != (f.h1_dual == 0)) {
      rep.verdict = PropertyP::holds;
      break;
    }
  return rep;
}

}  // namespace chev
