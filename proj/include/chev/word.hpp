#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace chev {

// One generator token: x(i, c) a root element, h(i, c) a torus element,
// n(i) the Weyl representative w_{alpha_i}(1).  i is a signed root index
// in the canonical ordering; c is rational.
struct GenTerm {
  char kind = 'x';  // 'x', 'h', or 'n'
  int index = 0;
  mpq_class coeff = 1;
};

struct GeneratorWord {
  std::vector<GenTerm> terms;
  bool empty() const { return terms.empty(); }
};

// Grammar:  word := term ("*" term)*
//           term := "x(" int "," coeff ")" | "h(" int "," coeff ")" | "n(" int ")"
//           coeff := signed integer | "a/b"
// Whitespace is permitted between tokens.  The empty string is the
// identity.  Throws std::invalid_argument with a position message.
GeneratorWord parse_word(const std::string& text);
std::string format_word(const GeneratorWord& w);

// index-range validation against a root count; h-coefficients nonzero
void validate_word(const GeneratorWord& w, int npos);

}  // namespace chev
