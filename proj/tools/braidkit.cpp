// braidkit command-line interface.
//
// Exit codes: 0 success or true, 1 false or negative result, 2 usage or
// input error, 3 internal consistency failure.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "braidkit/garside.hpp"
#include "braidkit/invariants.hpp"
#include "braidkit/json_io.hpp"
#include "braidkit/moves.hpp"
#include "braidkit/search.hpp"
#include "braidkit/soundness.hpp"
#include "braidkit/transverse.hpp"
#include "braidkit/verify.hpp"

using namespace braidkit;

namespace {

constexpr int kOk = 0;
constexpr int kFalse = 1;
constexpr int kUsage = 2;
constexpr int kConsistency = 3;

struct Globals {
  std::optional<int> n;
  bool json = false;
  std::optional<std::uint64_t> seed;
  unsigned threads = 1;
};

/// Parses with -n if given, otherwise with one more strand than the largest
/// generator that appears.
BraidWord read_word(const std::string& text, std::optional<int> n) {
  if (n) return parse_braid_word(text, *n);
  const BraidWord loose = parse_braid_word(text, 1 << 20);
  int top = 0;
  for (int l : loose.letters()) top = std::max(top, generator_of(l));
  return BraidWord(top + 1, loose.letters());
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError("'" + path + "' is not valid JSON: " + e.what());
  }
}

void print(const Globals& g, const json& j, const std::string& text) {
  if (g.json) {
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << text;
  }
}

std::string word_text(const BraidWord& w) {
  const auto s = to_string(w);
  return s.empty() ? "(identity in B" + std::to_string(w.strands()) + ")" : s;
}

int cmd_normalize(const Globals& g, const std::string& w_text) {
  const BraidWord w = read_word(w_text, g.n);
  const NormalForm nf = left_normal_form(w);
  json j = normal_form_to_json(nf);
  j["text"] = to_string(nf);
  print(g, j, to_string(nf) + "\n");
  return kOk;
}

int cmd_conjugate(const Globals& g, const std::string& a_text, const std::string& b_text) {
  const BraidWord a = read_word(a_text, g.n), b = read_word(b_text, g.n);
  if (a.strands() != b.strands()) throw StrandMismatch(a.strands(), b.strands());
  const auto r = are_conjugate(a, b);
  json j{{"conjugate", r.conjugate}};
  std::string text = r.conjugate ? "conjugate\n" : "not conjugate\n";
  if (r.witness) {
    j["witness"] = word_to_json(*r.witness);
    text += "witness " + word_text(*r.witness) + "\n";
  }
  print(g, j, text);
  return r.conjugate ? kOk : kFalse;
}

int cmd_invariants(const Globals& g, const std::string& w_text) {
  const BraidWord w = read_word(w_text, g.n);
  const auto ti = component_invariants(w);
  BracketOptions bo;
  bo.threads = g.threads;
  const auto jones = jones_polynomial(w, bo);
  const auto alex = alexander_polynomial(w);
  json per = json::object(), lk = json::array();
  std::ostringstream out;
  out << "strands " << w.strands() << "\n"
      << "exponent sum " << exponent_sum(w) << "\n"
      << "components " << ti.per_component.size() << "\n"
      << "beta " << ti.beta_total << "\n";
  for (auto [c, b] : ti.per_component) {
    per[std::to_string(c)] = b;
    out << "beta L" << c << " " << b << "\n";
  }
  for (auto [pr, l] : ti.pairwise_linking) {
    lk.push_back({pr.first, pr.second, l});
    out << "lk L" << pr.first << " L" << pr.second << " " << l << "\n";
  }
  out << "jones " << jones.to_string("q") << "\n"
      << "alexander " << alex.poly.to_string("t") << (alex.symmetric ? "" : " (link, shifted to t^0)") << "\n";
  json j{{"strands", w.strands()},
         {"exponent_sum", exponent_sum(w)},
         {"components", ti.per_component.size()},
         {"beta", ti.beta_total},
         {"beta_components", per},
         {"linking", lk},
         {"jones", polynomial_to_json(jones)},
         {"alexander", polynomial_to_json(alex.poly)},
         {"alexander_symmetric", alex.symmetric}};
  print(g, j, out.str());
  return kOk;
}

int cmd_move(const Globals& g, const std::string& kind_name, const std::string& w_text,
             const std::optional<std::string>& conj_text, std::optional<std::size_t> rotation) {
  auto kind = move_from_name(kind_name);
  if (!kind) throw ParseError("unknown move '" + kind_name + "'");
  const BraidWord w = read_word(w_text, g.n);
  MoveParams params;
  if (conj_text) params.conjugator = read_word(*conj_text, w.strands());
  params.rotation = rotation;
  // fill in whatever the caller left out with the first match
  if ((*kind == MoveKind::destab_pos || *kind == MoveKind::destab_neg) && !params.conjugator) {
    DestabilizeOptions o;
    o.sign = *kind == MoveKind::destab_pos ? 1 : -1;
    auto d = try_destabilize(w, o);
    if (!d) throw InvalidMove(std::string("no ") + kind_name + " found");
    params.conjugator = d->conjugator;
  }
  if (*kind == MoveKind::exchange && !params.rotation) {
    auto ds = find_exchange_decompositions(w);
    if (ds.empty()) throw InvalidMove("no exchange decomposition");
    params.rotation = ds.front().rotation;
  }
  if ((*kind == MoveKind::flype_pos || *kind == MoveKind::flype_neg) && !params.rotation) {
    const int sign = *kind == MoveKind::flype_pos ? 1 : -1;
    for (const auto& f : all_flype_matches(w)) {
      if (f.sign == sign) {
        params.rotation = f.rotation;
        break;
      }
    }
    if (!params.rotation) throw InvalidMove(std::string("no ") + kind_name + " match");
  }
  MoveStep step{*kind, params, apply_move(*kind, params, w)};
  print(g, move_step_to_json(step), word_text(step.result) + "\n");
  return kOk;
}

int cmd_replay(const Globals& g, const std::string& path) {
  const json j = read_json_file(path);
  BraidWord source;
  MoveSequence seq;
  try {
    source = word_from_json(j.at("source"));
    seq = move_sequence_from_json(j.at("steps"));
  } catch (const json::exception& e) {
    throw ParseError("replay file needs \"source\" and \"steps\": " + std::string(e.what()));
  }
  try {
    const BraidWord end = replay(source, seq);
    print(g, json{{"valid", true}, {"steps", seq.size()}, {"result_word", word_to_json(end)}},
          "valid, " + std::to_string(seq.size()) + " steps\n" + word_text(end) + "\n");
    return kOk;
  } catch (const InvalidMove& e) {
    print(g, json{{"valid", false}, {"error", e.what()}}, std::string("invalid: ") + e.what() + "\n");
    return kFalse;
  }
}

struct SearchArgs {
  bool transverse = false;
  int max_strands = 5;
  std::size_t max_length = 24;
  std::size_t max_nodes = 10000;
  std::optional<int> target_n;
};

int cmd_search(const Globals& g, const std::string& a_text, const std::string& b_text, const SearchArgs& a) {
  const BraidWord source = read_word(a_text, g.n);
  const BraidWord target = read_word(b_text, a.target_n ? a.target_n : g.n);
  SearchBounds b;
  b.move_set = a.transverse ? MoveSet::transverse : MoveSet::topological;
  b.max_strands = a.max_strands;
  b.max_word_length = a.max_length;
  b.max_nodes = a.max_nodes;
  const auto r = connect(source, target, b);
  const std::string status = r.found ? "found" : r.stats.node_cap_hit ? "node cap hit" : "exhausted";
  const auto& s = r.stats;
  json stats{{"nodes_discovered", s.nodes_discovered}, {"nodes_expanded", s.nodes_expanded},
             {"frontier_peak", s.frontier_peak},       {"dedup_hits", s.dedup_hits},
             {"weak_keys", s.weak_keys},               {"node_cap_hit", s.node_cap_hit}};
  json j{{"found", r.found},
         {"status", status},
         {"source", word_to_json(source)},
         {"target", word_to_json(target)},
         {"steps", move_sequence_to_json(r.path)},
         {"stats", stats}};
  if (r.witness) j["witness"] = word_to_json(*r.witness);
  std::ostringstream out;
  out << status << " (" << s.nodes_discovered << " nodes, " << s.nodes_expanded << " expanded)\n";
  if (r.found) {
    for (const auto& st : r.path.steps) out << "  " << move_name(st.kind) << " -> " << word_text(st.result) << "\n";
    if (r.witness) out << "final conjugator " << word_text(*r.witness) << "\n";
  } else if (!s.node_cap_hit) {
    out << "no path within the bounds; this is evidence, not a proof, that none exists\n";
  }
  print(g, j, out.str());
  return r.found ? kOk : kFalse;
}

int cmd_template_check(const Globals& g, const std::string& which, int trials, std::size_t max_len,
                       std::optional<std::uint64_t> seed) {
  if (!seed) seed = g.seed;
  if (!seed) throw CLI::ValidationError("template check", "--seed is required");
  Template t;
  if (auto b = find_builtin_template(which)) {
    t = *b;
  } else {
    t = template_from_json(read_json_file(which));
  }
  BracketOptions bo;
  bo.threads = g.threads;
  const auto r = template_soundness_check(t, trials, max_len, *seed, bo);
  json fails = json::array();
  std::ostringstream out;
  out << "template " << r.template_name << ": " << r.trials << " trials, " << r.failures.size() << " failures\n";
  for (const auto& f : r.failures) {
    json a = json::object();
    for (const auto& [id, w] : f.assignment) a[id] = word_to_json(w);
    fails.push_back({{"assignment", a}, {"left", word_to_json(f.left)}, {"right", word_to_json(f.right)},
                     {"reason", f.reason}});
  }
  if (!r.failures.empty()) {
    const auto& f = r.failures.front();
    out << "first counterexample: " << f.reason << "\n  left  " << word_text(f.left) << "\n  right "
        << word_text(f.right) << "\n";
  }
  print(g, json{{"template", r.template_name}, {"trials", r.trials}, {"passed", r.passed()}, {"failures", fails}},
        out.str());
  return r.passed() ? kOk : kFalse;
}

int cmd_winding(const Globals& g, const std::string& p_text, const std::string& q_text, int k, int depth) {
  BraidWord p = read_word(p_text, g.n), q = read_word(q_text, g.n);
  const int n = std::max(p.strands(), q.strands());
  p = widen(p, n);
  q = widen(q, n);
  WindingOptions o;
  o.depth = depth;
  const auto words = winding_iterates(p, q, k, o);
  BracketOptions bo;
  bo.threads = g.threads;
  std::vector<ConjugacyKey> keys;
  json items = json::array();
  std::ostringstream out;
  for (std::size_t i = 0; i < words.size(); ++i) {
    auto key = conjugacy_key(words[i]);
    auto it = std::find(keys.begin(), keys.end(), key);
    const std::size_t cls = static_cast<std::size_t>(it - keys.begin());
    if (it == keys.end()) keys.push_back(std::move(key));
    const auto jones = jones_polynomial(words[i], bo);
    items.push_back({{"word", word_to_json(words[i])}, {"class", cls}, {"jones", polynomial_to_json(jones)}});
    out << "w" << i << " class " << cls << "  " << word_text(words[i]) << "\n     jones " << jones.to_string("q") << "\n";
  }
  out << keys.size() << " distinct conjugacy classes\n";
  print(g, json{{"iterates", items}, {"distinct_classes", keys.size()}}, out.str());
  return kOk;
}

int cmd_verify(const Globals& g) {
  VerifyOptions o;
  if (g.seed) o.seed = *g.seed;
  o.threads = g.threads;
  const auto r = verify_paper(o);
  json items = json::array();
  std::ostringstream out;
  for (const auto& it : r.items) {
    items.push_back({{"item", std::string(1, it.id)},
                     {"label", it.label},
                     {"passed", it.passed},
                     {"detail", it.detail},
                     {"seconds", it.seconds}});
    out << "(" << it.id << ") " << (it.passed ? "PASS" : "FAIL") << "  " << it.label << ": " << it.detail << "\n";
  }
  print(g, json{{"passed", r.passed()}, {"items", items}}, out.str());
  if (const auto* f = r.first_failure()) {
    std::cerr << "verify-paper: item (" << f->id << ") " << f->label << " failed\n";
    return kConsistency;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Braid words, Markov and transverse moves, and link invariants"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("-n,--strands", g.n, "Strand count for braid words")->check(CLI::PositiveNumber);
  app.add_flag("--json", g.json, "Print JSON");
  app.add_option("--seed", g.seed, "Seed for randomized commands");
  app.add_option("--threads", g.threads, "Worker threads for state sums")->check(CLI::PositiveNumber);

  std::string w1, w2;
  std::function<int()> action;

  auto* normalize = app.add_subcommand("normalize", "Garside left normal form");
  normalize->add_option("word", w1, "Braid word, e.g. \"s1 s2^-1\"")->required();
  normalize->callback([&] { action = [&] { return cmd_normalize(g, w1); }; });

  auto* conj = app.add_subcommand("conjugate", "Decide conjugacy; exit 1 if not conjugate");
  conj->add_option("word1", w1)->required();
  conj->add_option("word2", w2)->required();
  conj->callback([&] { action = [&] { return cmd_conjugate(g, w1, w2); }; });

  auto* inv = app.add_subcommand("invariants", "Self-linking, linking numbers, Jones and Alexander");
  inv->add_option("word", w1)->required();
  inv->callback([&] { action = [&] { return cmd_invariants(g, w1); }; });

  std::string kind, replay_file;
  std::optional<std::string> conj_text;
  std::optional<std::size_t> rotation;
  auto* move = app.add_subcommand("move", "Apply one move, or replay a move file");
  move->add_option("kind", kind, "conjugation, stab+, stab-, destab+, destab-, exchange, flype+, flype-");
  move->add_option("word", w1);
  move->add_option("--conjugator", conj_text, "Conjugator for conjugation or destabilization");
  move->add_option("--rotation", rotation, "Cyclic rotation for exchange or flype");
  auto* replay_opt = move->add_option("--replay", replay_file, "JSON file with \"source\" and \"steps\"");
  move->callback([&] {
    if (replay_opt->count()) {
      if (!kind.empty()) throw CLI::ValidationError("move", "--replay takes no move kind");
      action = [&] { return cmd_replay(g, replay_file); };
    } else {
      if (kind.empty()) throw CLI::RequiredError("move kind");
      action = [&] { return cmd_move(g, kind, w1, conj_text, rotation); };
    }
  });

  SearchArgs sa;
  auto* search = app.add_subcommand("search", "Bounded search for a move sequence; exit 1 if none found");
  search->add_option("source", w1)->required();
  search->add_option("target", w2)->required();
  search->add_flag("--transverse", sa.transverse, "Only transverse moves");
  search->add_option("--max-strands", sa.max_strands)->check(CLI::PositiveNumber);
  search->add_option("--max-length", sa.max_length);
  search->add_option("--max-nodes", sa.max_nodes);
  search->add_option("--target-n", sa.target_n, "Strand count of the target (default -n)")->check(CLI::PositiveNumber);
  search->callback([&] { action = [&] { return cmd_search(g, w1, w2, sa); }; });

  int trials = 100;
  std::size_t max_len = 6;
  std::optional<std::uint64_t> tseed;
  auto* tmpl = app.add_subcommand("template", "Template tools");
  tmpl->require_subcommand(1);
  auto* check = tmpl->add_subcommand("check", "Fuzz a template for soundness; exit 1 on a counterexample");
  check->add_option("template", w1, "Built-in name or JSON file")->required();
  check->add_option("--trials", trials)->check(CLI::PositiveNumber);
  check->add_option("--max-len", max_len);
  check->add_option("--seed", tseed);
  check->callback([&] { action = [&] { return cmd_template_check(g, w1, trials, max_len, tseed); }; });

  int k = 4, depth = 1;
  auto* wind = app.add_subcommand("winding", "Iterate exchange moves on P s Q s^-1");
  wind->add_option("P", w1)->required();
  wind->add_option("Q", w2)->required();
  wind->add_option("k", k)->required()->check(CLI::NonNegativeNumber);
  wind->add_option("--depth", depth, "Conjugator search depth per step")->check(CLI::NonNegativeNumber);
  wind->callback([&] { action = [&] { return cmd_winding(g, w1, w2, k, depth); }; });

  auto* verify = app.add_subcommand("verify-paper", "Reproduce the transverse non-simplicity computations");
  verify->callback([&] { action = [&] { return cmd_verify(g); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    return action();
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ConsistencyError& e) {
    std::cerr << "consistency failure: " << e.what() << "\n";
    return kConsistency;
  } catch (const ResourceCapExceeded& e) {
    std::cerr << "undecided: " << e.what() << "\n";
    return kFalse;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kConsistency;
  }
}
