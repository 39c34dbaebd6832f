#pragma once

#include "chev/propp.hpp"
#include "chev/repmod.hpp"

#include <string>
#include <vector>

namespace chev {

inline constexpr int kCorpusSchema = 1;

// One frozen regression value: a generator word, the module it acts on and
// the invariant it must reproduce.  `check` selects the invariant:
//   fixed-dim       dimension of the fixed space equals expect_dim
//   jordan2         Jordan shape at p = 2 formats to expect_text
//   class           involution class label equals expect_text
//   scalar          the word acts as the scalar expect_text
//   commutes-weyl   the word commutes with n(i) for every positive root i
//   commutes-torus  the word commutes with h(i,-1) for every positive root i
struct CorpusEntry {
  std::string id;
  std::string group;
  long p = 0;
  std::string module;
  std::string word;
  std::string check;
  int expect_dim = -1;
  std::string expect_text;
  std::string note;
};

const std::vector<CorpusEntry>& corpus_entries();

// Empty string when the entry reproduces, otherwise "id: expected ... got ...".
std::string run_corpus_entry(const CorpusEntry& entry);

// Same check evaluated in characteristic p_override instead of entry.p.
std::string run_corpus_entry(const CorpusEntry& entry, long p_override);

// One row of the 2-elusiveness tables for almost simple groups whose socle
// is an exceptional group of Lie type: the possible point stabilizers H
// containing a Sylow 2-subgroup, with the conditions under which they occur.
// Table 'A' rows never yield 2-elusive actions, table 'B' rows always do,
// table 'C' rows do for some of the listed congruences only.
struct ElusiveRow {
  std::string socle;
  std::string h0;
  std::string conditions;
  char table = 'A';
};

const std::vector<ElusiveRow>& elusive_rows();

bool valid_socle(const std::string& socle);

// Rows for one socle family; a nonempty filter keeps rows whose stabilizer
// description contains it as a substring.  "E6" and "2E6" share one
// eps-parameterised family of rows.
std::vector<ElusiveRow> elusive_lookup(const std::string& socle,
                                       const std::string& filter = "");

std::string elusive_verdict(char table);

// Composition factors of the restriction of the 248-dimensional module in
// characteristic 3 to a subgroup of type PGL2(7), with cohomology data:
// the worked fixed-point-free example for the trivial-factor criterion.
std::vector<FactorSummary> example_factor_list();

}  // namespace chev
