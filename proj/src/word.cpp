#include "chev/word.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace chev {

namespace {

struct Cursor {
  const std::string& s;
  size_t i = 0;

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool done() {
    skip_ws();
    return i >= s.size();
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("word parse error at position " + std::to_string(i) + ": " + what);
  }
  void expect(char c) {
    skip_ws();
    if (i >= s.size() || s[i] != c) fail(std::string("expected '") + c + "'");
    ++i;
  }
  long integer() {
    skip_ws();
    size_t start = i;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start || (i == start + 1 && !std::isdigit(static_cast<unsigned char>(s[start]))))
      fail("expected integer");
    return std::stol(s.substr(start, i - start));
  }
  mpq_class coeff() {
    long num = integer();
    skip_ws();
    if (i < s.size() && s[i] == '/') {
      ++i;
      long den = integer();
      if (den == 0) fail("zero denominator");
      mpq_class q(num, den);
      q.canonicalize();
      return q;
    }
    return mpq_class(num);
  }
};

}  // namespace

GeneratorWord parse_word(const std::string& text) {
  GeneratorWord w;
  Cursor c{text};
  if (c.done()) return w;
  for (;;) {
    c.skip_ws();
    if (c.i >= c.s.size()) c.fail("expected term");
    char kind = c.s[c.i];
    if (kind != 'x' && kind != 'h' && kind != 'n') c.fail("expected x, h, or n");
    ++c.i;
    c.expect('(');
    GenTerm t;
    t.kind = kind;
    t.index = static_cast<int>(c.integer());
    if (kind == 'n') {
      t.coeff = 1;
    } else {
      c.expect(',');
      t.coeff = c.coeff();
    }
    c.expect(')');
    w.terms.push_back(std::move(t));
    if (c.done()) break;
    c.expect('*');
  }
  return w;
}

std::string format_word(const GeneratorWord& w) {
  std::ostringstream out;
  for (size_t k = 0; k < w.terms.size(); ++k) {
    const auto& t = w.terms[k];
    if (k) out << '*';
    out << t.kind << '(' << t.index;
    if (t.kind != 'n') out << ',' << t.coeff.get_str();
    out << ')';
  }
  return out.str();
}

void validate_word(const GeneratorWord& w, int npos) {
  for (const auto& t : w.terms) {
    if (t.index == 0 || std::abs(t.index) > npos)
      throw std::invalid_argument("root index out of range: " + std::to_string(t.index));
    if (t.kind == 'n' && t.index < 0)
      throw std::invalid_argument("n() takes a positive root index");
    if (t.kind == 'h' && t.coeff == 0) throw std::invalid_argument("h-coefficient must be nonzero");
  }
}

}  // namespace chev
