#include <unistd.h>

#include <cstdint>
#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "chev/corpus.hpp"
#include "chev/involutions.hpp"
#include "chev/propp.hpp"
#include "chev/weyl.hpp"
#include "chev/weylmod.hpp"
#include "json.hpp"

namespace {

using json = nlohmann::ordered_json;

constexpr int kExitCorpus = 1;
constexpr int kExitInput = 2;
constexpr int kExitPrecondition = 3;

bool err_is_tty() { return isatty(fileno(stderr)) != 0; }

void emit(const json& rec) { std::cout << rec.dump() << "\n"; }

bool small_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::string faithful_probe(const std::string& group) {
  std::string m = chev::minimal_module_name(group);
  return m.empty() ? "adjoint" : m;
}

int run_classify(const std::string& group, long p, const std::string& module,
                 const std::string& word_text) {
  auto w = chev::parse_word(word_text);
  const auto& m = chev::cached_module(group, module);
  auto g = chev::evaluate_word_at(m, w, p);

  json rec;
  rec["group"] = group;
  rec["char"] = p;
  rec["module"] = module;
  rec["dim"] = chev::exact_rows(g);
  rec["word"] = word_text;

  const auto& adj = chev::cached_module(group, "adjoint");
  bool central = chev::is_identity(chev::evaluate_word_at(adj, w, p));
  std::string status;
  std::string label;
  if (central) {
    const auto& probe = chev::cached_module(group, faithful_probe(group));
    bool ident = chev::is_identity(chev::evaluate_word_at(probe, w, p));
    status = ident ? "identity" : "central";
    label = "1";
  } else {
    switch (chev::involution_kind(group, w, p)) {
      case chev::InvolutionKind::involution: status = "involution"; break;
      case chev::InvolutionKind::order4_central_square:
        status = "order4-central-square";
        break;
      case chev::InvolutionKind::neither: status = "not-involution"; break;
    }
  }
  rec["order_status"] = status;
  rec["fixed_dim"] = chev::fixed_dim(g);
  if (status == "not-involution") {
    emit(rec);
    if (err_is_tty())
      fprintf(stderr, "%s over char %ld: not an involution mod centre\n", group.c_str(), p);
    return kExitPrecondition;
  }
  if (p == 2) rec["jordan"] = chev::format_jordan(chev::jordan_partition(g, 2));
  if (label.empty()) label = chev::classify_involution(group, p, w);
  rec["class_label"] = label;
  emit(rec);
  if (err_is_tty())
    fprintf(stderr, "%-3s char %ld %-8s dim %d  fixed %d  class %s (%s)\n", group.c_str(), p,
            module.c_str(), chev::exact_rows(g), chev::fixed_dim(g), label.c_str(),
            status.c_str());
  return 0;
}

int run_verify_corpus() {
  int failed = 0;
  for (const auto& e : chev::corpus_entries()) {
    std::string r = chev::run_corpus_entry(e);
    json rec;
    rec["id"] = e.id;
    rec["status"] = r.empty() ? "ok" : "fail";
    if (!r.empty()) {
      rec["detail"] = r;
      ++failed;
    }
    emit(rec);
  }
  json summary;
  summary["schema"] = chev::kCorpusSchema;
  summary["entries"] = chev::corpus_entries().size();
  summary["failed"] = failed;
  emit(summary);
  if (err_is_tty())
    fprintf(stderr, "corpus: %zu entries, %d failed\n", chev::corpus_entries().size(), failed);
  return failed == 0 ? 0 : kExitCorpus;
}

std::string reflection_word(const std::vector<int>& word) {
  if (word.empty()) return "e";
  std::string s;
  for (size_t i = 0; i < word.size(); ++i) {
    if (i) s += "*";
    s += std::to_string(word[i]);
  }
  return s;
}

json torus_record(const chev::RootSystem& rs, const chev::WeylElem& w,
                  const chev::TwistSpec& twist) {
  json rec;
  rec["rep"] = reflection_word(w.word);
  rec["order"] = chev::element_order(w);
  auto poly = chev::torus_order_poly(rs, w, twist);
  rec["torus_order"] = chev::pretty(poly);
  rec["torus_order_expanded"] = chev::expanded(poly);
  return rec;
}

int run_torus(const std::string& group, const std::string& twist_name, bool rank_full,
              const std::string& word_text) {
  const auto& rs = chev::cached_root_system(group);
  char kind = twist_name == "graph" ? 't' : twist_name == "isogeny" ? 'p' : 'n';
  auto twist = chev::make_twist(rs, kind);
  if (rank_full) {
    if (rs.rank > 4) {
      fprintf(stderr, "full class listing is limited to rank <= 4 (%s has rank %d)\n",
              group.c_str(), rs.rank);
      return kExitPrecondition;
    }
    auto classes = chev::sigma_classes(rs, twist);
    std::uint64_t total = 0;
    for (const auto& c : classes.classes) {
      json rec = torus_record(rs, c.rep, twist);
      rec["size"] = c.size;
      rec["centralizer"] = chev::sigma_centralizer(rs, c.rep, twist).order;
      emit(rec);
      total += c.size;
    }
    json summary;
    summary["classes"] = classes.classes.size();
    summary["group_order"] = total;
    emit(summary);
    if (err_is_tty())
      fprintf(stderr, "%s twist %s: %zu classes, |W| = %llu\n", group.c_str(),
              twist_name.c_str(), classes.classes.size(), (unsigned long long)total);
    return 0;
  }
  chev::WeylElem w = chev::weyl_identity(rs);
  std::string token;
  std::istringstream in(word_text);
  while (std::getline(in, token, '*')) {
    if (token.empty()) continue;
    int idx = std::stoi(token);
    if (idx < 1 || idx > rs.npos) throw std::invalid_argument("reflection index out of range");
    w = chev::compose(rs, w, chev::reflection(rs, idx));
  }
  json rec = torus_record(rs, w, twist);
  try {
    auto cent = chev::sigma_centralizer(rs, w, twist);
    rec["centralizer"] = cent.order;
    rec["size"] = chev::stabilizer_chain(rs).order() / cent.order;
  } catch (const std::exception&) {
    // centralizer enumeration is rank-limited; the torus data stands alone
  }
  emit(rec);
  return 0;
}

int run_elusive(const std::string& socle, const std::string& filter, bool dump) {
  auto row_record = [](const chev::ElusiveRow& r) {
    json rec;
    rec["socle"] = r.socle;
    rec["h0"] = r.h0;
    rec["conditions"] = r.conditions;
    rec["table"] = std::string(1, r.table);
    rec["verdict"] = chev::elusive_verdict(r.table);
    return rec;
  };
  if (dump) {
    json header;
    header["schema"] = chev::kCorpusSchema;
    header["rows"] = chev::elusive_rows().size();
    emit(header);
    for (const auto& r : chev::elusive_rows()) emit(row_record(r));
    return 0;
  }
  if (socle.empty()) {
    fprintf(stderr, "--socle is required unless --dump-data is given\n");
    return kExitInput;
  }
  auto rows = chev::elusive_lookup(socle, filter);
  for (const auto& r : rows) emit(row_record(r));
  if (err_is_tty()) fprintf(stderr, "%zu row(s) for socle %s\n", rows.size(), socle.c_str());
  return 0;
}

int run_propp(const std::string& path) {
  std::ifstream file;
  std::istream* in = &std::cin;
  if (path != "-") {
    file.open(path);
    if (!file) {
      fprintf(stderr, "cannot open %s\n", path.c_str());
      return kExitInput;
    }
    in = &file;
  }
  std::vector<chev::FactorSummary> factors;
  std::string line;
  int lineno = 0;
  while (std::getline(*in, line)) {
    ++lineno;
    size_t first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    json j;
    try {
      j = json::parse(line);
      chev::FactorSummary f;
      f.dim = j.at("dim").get<long>();
      f.multiplicity = j.value("mult", 1L);
      f.h1 = j.value("h1", 0L);
      f.h1_dual = j.value("h1_dual", 0L);
      f.trivial = j.value("trivial", false);
      f.self_dual = j.value("self_dual", false);
      factors.push_back(f);
    } catch (const std::exception& e) {
      fprintf(stderr, "line %d: %s\n", lineno, e.what());
      return kExitInput;
    }
  }
  auto rep = chev::property_p_report(factors);
  json rec;
  rec["factors"] = factors.size();
  rec["m"] = rep.m;
  rec["s"] = rep.s;
  rec["verdict"] = chev::property_p_name(rep.verdict);
  emit(rec);
  if (err_is_tty())
    fprintf(stderr, "m = %ld, S = %ld: %s\n", rep.m, rep.s,
            chev::property_p_name(rep.verdict).c_str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations in exceptional Chevalley groups"};
  app.require_subcommand(1);

  std::string group, module = "adjoint", word, twist = "none", socle, filter, input;
  long characteristic = 0;
  bool rank_full = false, dump = false;

  auto* classify = app.add_subcommand("classify", "involution class of a generator word");
  classify->add_option("--group", group, "G2, F4, E6, E7, E8 or D4")->required();
  classify->add_option("--char", characteristic, "0 for the rationals, else a prime");
  classify->add_option("--module", module, "adjoint, vmin or natural");
  classify->add_option("--word", word, "generator word, empty for the identity")->required();

  auto* verify = app.add_subcommand("verify-corpus", "re-run every embedded regression value");

  auto* torus = app.add_subcommand("torus", "maximal torus orders and twisted classes");
  torus->add_option("--group", group, "G2, F4, E6, E7, E8 or D4")->required();
  torus->add_option("--twist", twist, "none, graph or isogeny")
      ->check(CLI::IsMember({"none", "graph", "isogeny"}));
  auto* full_opt = torus->add_flag("--rank-full", rank_full, "list every twisted class");
  torus->add_option("--word", word, "product of reflections, e.g. 1*2*1")->excludes(full_opt);

  auto* elusive = app.add_subcommand("elusive", "stabilizers meeting every involution class");
  elusive->add_option("--socle", socle, "2B2, 2G2, G2, 3D4, 2F4, F4, E6, 2E6, E7 or E8");
  elusive->add_option("--filter", filter, "keep rows whose stabilizer matches");
  elusive->add_flag("--dump-data", dump, "emit the embedded tables verbatim");

  auto* propp = app.add_subcommand("propp", "cohomological fixed-point criterion");
  propp->add_option("--input", input, "factor records, one JSON object per line; - for stdin")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (classify->parsed()) {
      if (characteristic != 0 && !small_prime(characteristic)) {
        fprintf(stderr, "--char must be 0 or a prime\n");
        return kExitInput;
      }
      return run_classify(group, characteristic, module, word);
    }
    if (verify->parsed()) return run_verify_corpus();
    if (torus->parsed()) {
      if (!rank_full && torus->count("--word") == 0) {
        fprintf(stderr, "torus needs --rank-full or --word\n");
        return kExitInput;
      }
      return run_torus(group, twist, rank_full, word);
    }
    if (elusive->parsed()) return run_elusive(socle, filter, dump);
    if (propp->parsed()) return run_propp(input);
  } catch (const std::exception& e) {
    fprintf(stderr, "%s\n", e.what());
    return kExitInput;
  }
  return 0;
}
