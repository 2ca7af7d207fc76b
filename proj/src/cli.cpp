#include "strongsub/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "strongsub/digraph.hpp"
#include "strongsub/extremal.hpp"
#include "strongsub/gadgets.hpp"
#include "strongsub/graph_io.hpp"
#include "strongsub/linkage.hpp"
#include "strongsub/oracle.hpp"
#include "strongsub/packing.hpp"
#include "strongsub/semicomplete.hpp"
#include "strongsub/symmetric.hpp"

namespace strongsub::cli {

namespace {

using nlohmann::json;

enum class Engine { kAuto, kOracle, kFormula, kSymmetric, kSemicomplete };

Engine engine_from_name(const std::string& name) {
  if (name == "auto") return Engine::kAuto;
  if (name == "oracle") return Engine::kOracle;
  if (name == "formula") return Engine::kFormula;
  if (name == "symmetric") return Engine::kSymmetric;
  if (name == "semicomplete") return Engine::kSemicomplete;
  throw Error("bad-args", "unknown engine '" + name + "'");
}

const char* engine_name(Engine e) {
  switch (e) {
    case Engine::kOracle: return "oracle";
    case Engine::kFormula: return "formula";
    case Engine::kSymmetric: return "symmetric";
    case Engine::kSemicomplete: return "semicomplete";
    default: return "auto";
  }
}

// Most specific applicable engine first: the closed form beats the two
// polynomial deciders, which beat the exhaustive search.
Engine resolve_engine(Engine requested, const Digraph& d) {
  if (requested != Engine::kAuto) return requested;
  if (is_complete_biorientation(d)) return Engine::kFormula;
  if (is_symmetric(d)) return Engine::kSymmetric;
  if (is_semicomplete(d)) return Engine::kSemicomplete;
  return Engine::kOracle;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> values;
  std::string token;
  std::istringstream stream(text);
  while (std::getline(stream, token, ',')) {
    try {
      size_t used = 0;
      values.push_back(std::stoi(token, &used));
      if (used != token.size()) throw std::invalid_argument(token);
    } catch (const std::exception&) {
      throw Error("bad-args", "expected a comma-separated integer list, got '" + text + "'");
    }
  }
  if (values.empty()) throw Error("bad-args", "empty integer list");
  return values;
}

int effective_max_n(int flag_value) {
  if (flag_value > 0) return flag_value;
  if (const char* env = std::getenv("STRONGSUB_MAX_N")) {
    try {
      size_t used = 0;
      const int value = std::stoi(env, &used);
      if (used != std::string(env).size() || value < 1) throw std::invalid_argument(env);
      return value;
    } catch (const std::exception&) {
      throw Error("bad-args", "STRONGSUB_MAX_N must be a positive integer");
    }
  }
  return OracleLimits{}.max_n;
}

template <typename Range>
std::string join(const Range& values, const char* sep = " ") {
  std::string text;
  bool first = true;
  for (const auto& v : values) {
    if (!first) text += sep;
    text += std::to_string(v);
    first = false;
  }
  return text;
}

json packing_to_json(const Packing& p) {
  json parts = json::array();
  for (const Subdigraph& part : p.parts) {
    json arcs = json::array();
    for (const Arc& a : part.arcs) arcs.push_back({a.from, a.to});
    parts.push_back({{"vertices", part.vertices.members()}, {"arcs", arcs}});
  }
  return json{{"anchor", p.anchor.members()}, {"parts", parts}};
}

// Decision for one anchor set under a fixed engine; the packing certifies a
// positive answer. ell = 0 always holds via the empty packing.
std::optional<Packing> decide_at_least(const Digraph& d, const VertexSet& s, int ell,
                                       Engine engine, const OracleLimits& limits) {
  switch (engine) {
    case Engine::kFormula: {
      if (!is_complete_biorientation(d))
        throw Error("engine-mismatch", "the formula engine needs a complete biorientation");
      require_anchor(d, s);
      if (ell < 0) throw Error("invalid-ell", "part count must be nonnegative");
      if (ell == 0) return Packing{d, s, {}};
      if (ell > kappa_complete_biorientation(d.order(), s.size())) return std::nullopt;
      Packing p = construct_kn_packing(d.order(), s);
      p.parts.resize(ell);  // a prefix of a packing is a packing
      return p;
    }
    case Engine::kSymmetric:
      return decide_kappa_s_symmetric(d, s, ell);
    case Engine::kSemicomplete:
      return decide_kappa_s_semicomplete(d, s, ell);
    default:
      return decide_kappa_s_at_least(d, s, ell, limits);
  }
}

// Every part spends a private out-arc and in-arc at each anchor vertex, so
// the anchor degrees cap the packing size; that makes the upward scan finite.
int anchor_degree_cap(const Digraph& d, const VertexSet& s) {
  int cap = d.order() - 1;
  for (Vertex v : s) cap = std::min({cap, d.out_degree(v), d.in_degree(v)});
  return cap;
}

KappaResult kappa_s_value(const Digraph& d, const VertexSet& s, Engine engine,
                          const OracleLimits& limits) {
  if (engine == Engine::kFormula) {
    if (!is_complete_biorientation(d))
      throw Error("engine-mismatch", "the formula engine needs a complete biorientation");
    require_anchor(d, s);
    KappaResult r;
    r.value = kappa_complete_biorientation(d.order(), s.size());
    r.certificate = construct_kn_packing(d.order(), s);
    return r;
  }
  if (engine == Engine::kOracle) return kappa_s(d, s, limits);
  require_anchor(d, s);
  KappaResult r;
  r.certificate = Packing{d, s, {}};
  const int cap = anchor_degree_cap(d, s);
  for (int ell = 1; ell <= cap; ++ell) {
    auto packing = decide_at_least(d, s, ell, engine, limits);
    if (!packing) break;
    r.value = ell;
    r.certificate = std::move(*packing);
  }
  return r;
}

// Calls visit on every k-subset of 0..n-1 in lexicographic order until it
// returns false.
void for_each_k_subset(int n, int k, const std::function<bool(const std::vector<Vertex>&)>& visit) {
  std::vector<Vertex> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    if (!visit(idx)) return;
    int pos = k - 1;
    while (pos >= 0 && idx[pos] == n - k + pos) --pos;
    if (pos < 0) return;
    ++idx[pos];
    for (int i = pos + 1; i < k; ++i) idx[i] = idx[i - 1] + 1;
  }
}

KappaResult kappa_k_value(const Digraph& d, int k, Engine engine, const OracleLimits& limits) {
  const int n = d.order();
  if (k < 2 || k > n) throw Error("invalid-k", "need 2 <= k <= n");
  if (engine == Engine::kFormula) {
    if (!is_complete_biorientation(d))
      throw Error("engine-mismatch", "the formula engine needs a complete biorientation");
    KappaResult r;
    r.value = kappa_complete_biorientation(n, k);
    std::vector<Vertex> first(k);
    for (int i = 0; i < k; ++i) first[i] = i;
    r.witness_set = VertexSet(first);
    r.certificate = construct_kn_packing(n, *r.witness_set);
    return r;
  }
  if (engine == Engine::kOracle) return kappa_k(d, k, limits);
  if (engine == Engine::kSymmetric && !is_symmetric(d))
    throw Error("not-symmetric", "the symmetric engine needs a symmetric digraph");
  if (engine == Engine::kSymmetric && k == 2)
    return kappa2_symmetric(underlying_graph(d), /*relaxed=*/true);

  KappaResult r;
  if (!is_strong(d)) return r;  // no strong sub-digraph spans a split pair
  const auto [min_out, min_in] = min_degrees(d);
  const int cap = std::min({n - 1, min_out, min_in});
  int value = cap;
  std::optional<VertexSet> witness;
  for (int ell = 1; ell <= cap && !witness; ++ell) {
    for_each_k_subset(n, k, [&](const std::vector<Vertex>& members) {
      const VertexSet s(members);
      if (!decide_at_least(d, s, ell, engine, limits)) {
        value = ell - 1;
        witness = s;
        return false;
      }
      return true;
    });
  }
  if (!witness) {
    // Everything passed up to the degree cap, so the minimum equals the cap;
    // any subset through a minimum-degree vertex attains it.
    Vertex tight = 0;
    for (Vertex v = 0; v < n; ++v) {
      if (std::min(d.out_degree(v), d.in_degree(v)) == cap) {
        tight = v;
        break;
      }
    }
    std::vector<Vertex> members = {tight};
    for (Vertex v = 0; v < n && static_cast<int>(members.size()) < k; ++v) {
      if (v != tight) members.push_back(v);
    }
    witness = VertexSet(members);
  }
  r.value = value;
  r.witness_set = witness;
  if (value > 0) r.certificate = decide_at_least(d, *witness, value, engine, limits);
  return r;
}

struct Options {
  std::string input;
  std::string packing_path;
  std::string engine = "auto";
  std::string s_list;
  std::string terminals;
  std::string pairs;
  std::string classes;
  int k = 0;
  int ell = -1;
  int n = 0;
  int max_n = 0;
  bool json_out = false;
  bool dot = false;
  bool certificate = false;
};

int run_kappa_s(const Options& opt, std::ostream& out) {
  const Digraph d = read_digraph_file(opt.input);
  const VertexSet s{parse_int_list(opt.s_list)};
  const Engine engine = resolve_engine(engine_from_name(opt.engine), d);
  OracleLimits limits;
  limits.max_n = effective_max_n(opt.max_n);
  const KappaResult r = kappa_s_value(d, s, engine, limits);
  if (opt.json_out) {
    json j{{"verb", "kappa-s"},
           {"engine", engine_name(engine)},
           {"anchor", s.members()},
           {"value", r.value}};
    if (opt.certificate && r.certificate) j["certificate"] = packing_to_json(*r.certificate);
    out << j.dump(2) << '\n';
  } else {
    out << "engine: " << engine_name(engine) << '\n';
    out << "anchor: " << join(s.members()) << '\n';
    out << "value: " << r.value << '\n';
    if (opt.certificate && r.certificate) write_packing(out, *r.certificate);
  }
  out << "RESULT: " << r.value << '\n';
  return 0;
}

int run_kappa_k(const Options& opt, std::ostream& out) {
  const Digraph d = read_digraph_file(opt.input);
  const Engine engine = resolve_engine(engine_from_name(opt.engine), d);
  OracleLimits limits;
  limits.max_n = effective_max_n(opt.max_n);
  const KappaResult r = kappa_k_value(d, opt.k, engine, limits);
  if (opt.json_out) {
    json j{{"verb", "kappa-k"},
           {"engine", engine_name(engine)},
           {"k", opt.k},
           {"value", r.value}};
    j["witness"] = r.witness_set ? json(r.witness_set->members()) : json(nullptr);
    if (opt.certificate && r.certificate) j["certificate"] = packing_to_json(*r.certificate);
    out << j.dump(2) << '\n';
  } else {
    out << "engine: " << engine_name(engine) << '\n';
    out << "k: " << opt.k << '\n';
    out << "value: " << r.value << '\n';
    if (r.witness_set) out << "witness: " << join(r.witness_set->members()) << '\n';
    if (opt.certificate && r.certificate) write_packing(out, *r.certificate);
  }
  out << "RESULT: " << r.value << '\n';
  return 0;
}

int run_bounds(const Options& opt, std::ostream& out) {
  const Digraph d = read_digraph_file(opt.input);
  const bool strong = is_strong(d);
  int lower = 0, upper = 0;
  if (strong) {
    const auto b = bounds(d, opt.k);
    lower = b.first;
    upper = b.second;
  }
  if (opt.json_out) {
    json j{{"verb", "bounds"}, {"k", opt.k}, {"strong", strong}, {"lower", lower}, {"upper", upper}};
    out << j.dump(2) << '\n';
  } else {
    out << "k: " << opt.k << '\n';
    out << "strong: " << (strong ? "yes" : "no") << '\n';
    out << "lower: " << lower << '\n';
    out << "upper: " << upper << '\n';
  }
  out << "RESULT: " << lower << ' ' << upper << '\n';
  return 0;
}

int run_decide(const Options& opt, std::ostream& out) {
  const Digraph d = read_digraph_file(opt.input);
  const Engine engine = resolve_engine(engine_from_name(opt.engine), d);
  OracleLimits limits;
  limits.max_n = effective_max_n(opt.max_n);
  if (opt.ell < 0) throw Error("bad-args", "--ell is required");
  if (opt.s_list.empty() == (opt.k == 0))
    throw Error("bad-args", "give exactly one of --s and --k");

  bool holds = true;
  std::optional<VertexSet> witness;
  std::optional<Packing> certificate;
  VertexSet anchor;
  if (!opt.s_list.empty()) {
    anchor = VertexSet{parse_int_list(opt.s_list)};
    certificate = decide_at_least(d, anchor, opt.ell, engine, limits);
    holds = certificate.has_value();
  } else {
    if (opt.k < 2 || opt.k > d.order()) throw Error("invalid-k", "need 2 <= k <= n");
    if (opt.ell >= 1 && !is_strong(d)) {
      holds = false;
    } else if (engine == Engine::kSemicomplete) {
      const SubsetDecision decision = decide_kappa_k_semicomplete(d, opt.k, opt.ell);
      holds = decision.holds;
      witness = decision.witness;
    } else {
      for_each_k_subset(d.order(), opt.k, [&](const std::vector<Vertex>& members) {
        const VertexSet s(members);
        if (!decide_at_least(d, s, opt.ell, engine, limits)) {
          holds = false;
          witness = s;
          return false;
        }
        return true;
      });
    }
  }

  if (opt.json_out) {
    json j{{"verb", "decide"}, {"engine", engine_name(engine)}, {"ell", opt.ell}, {"holds", holds}};
    if (!opt.s_list.empty()) j["anchor"] = anchor.members();
    if (opt.k != 0) j["k"] = opt.k;
    j["witness"] = witness ? json(witness->members()) : json(nullptr);
    if (opt.certificate && certificate) j["certificate"] = packing_to_json(*certificate);
    out << j.dump(2) << '\n';
  } else {
    out << "engine: " << engine_name(engine) << '\n';
    if (!opt.s_list.empty()) out << "anchor: " << join(anchor.members()) << '\n';
    if (opt.k != 0) out << "k: " << opt.k << '\n';
    out << "ell: " << opt.ell << '\n';
    out << "holds: " << (holds ? "yes" : "no") << '\n';
    if (witness) out << "witness: " << join(witness->members()) << '\n';
    if (opt.certificate && certificate) write_packing(out, *certificate);
  }
  out << "RESULT: " << (holds ? "yes" : "no") << '\n';
  return holds ? 0 : 1;
}

int run_decompose(const Options& opt, std::ostream& out) {
  const auto dec = hamiltonian_decomposition(opt.n);
  if (opt.json_out) {
    json j{{"verb", "decompose"}, {"n", opt.n}};
    if (dec) {
      json cycles = json::array();
      for (const auto& c : dec->cycles) cycles.push_back(c);
      j["cycles"] = cycles;
    } else {
      j["cycles"] = nullptr;
    }
    out << j.dump(2) << '\n';
  } else {
    out << "n: " << opt.n << '\n';
    if (dec) {
      out << "cycles: " << dec->cycles.size() << '\n';
      for (const auto& c : dec->cycles) out << join(c) << '\n';
    } else {
      out << "cycles: none\n";
    }
  }
  if (!dec) {
    out << "RESULT: none\n";
    return 1;
  }
  out << "RESULT: " << dec->cycles.size() << '\n';
  return 0;
}

int emit_gadget(const Options& opt, const Gadget& gadget, const char* kind, std::ostream& out) {
  if (opt.json_out) {
    json arcs = json::array();
    for (const Arc& a : gadget.graph.arcs()) arcs.push_back({a.from, a.to});
    json j{{"verb", "gadget"},
           {"kind", kind},
           {"order", gadget.graph.order()},
           {"arcs", arcs},
           {"labels", gadget.graph.labels()},
           {"anchor", gadget.anchor.members()},
           {"ell", gadget.ell}};
    out << j.dump(2) << '\n';
  } else if (opt.dot) {
    out << to_dot(gadget.graph);
    out << "# anchor: " << join(gadget.anchor.members()) << '\n';
    out << "# ell: " << gadget.ell << '\n';
  } else {
    out << "# gadget: " << kind << '\n';
    out << "# anchor: " << join(gadget.anchor.members()) << '\n';
    out << "# ell: " << gadget.ell << '\n';
    std::string labels;
    for (int v = 0; v < gadget.graph.order(); ++v) {
      if (v) labels += ' ';
      labels += gadget.graph.label(v);
    }
    out << "# labels: " << labels << '\n';
    write_digraph(out, gadget.graph);
  }
  out << "RESULT: " << gadget.graph.order() << ' ' << gadget.graph.arc_count() << '\n';
  return 0;
}

int run_gadget_linkage2(const Options& opt, std::ostream& out) {
  Linkage2Instance instance;
  instance.host = read_digraph_file(opt.input);
  const std::vector<int> terminals = parse_int_list(opt.terminals);
  if (terminals.size() != 4)
    throw Error("bad-args", "--terminals takes s1,t1,s2,t2");
  instance.s1 = terminals[0];
  instance.t1 = terminals[1];
  instance.s2 = terminals[2];
  instance.t2 = terminals[3];
  const int ell = opt.ell < 0 ? 2 : opt.ell;
  return emit_gadget(opt, linkage_gadget(instance, opt.k, ell), "linkage2", out);
}

int run_gadget_cllm(const Options& opt, std::ostream& out) {
  CLLMInstance instance;
  instance.graph = read_undirected_file(opt.input);
  std::istringstream stream(opt.classes);
  std::vector<std::vector<int>> groups;
  std::string group;
  while (std::getline(stream, group, '/')) groups.push_back(parse_int_list(group));
  if (groups.size() != 3) throw Error("bad-args", "--classes takes three '/'-separated lists");
  instance.u_class = groups[0];
  instance.v_class = groups[1];
  instance.w_class = groups[2];
  return emit_gadget(opt, cllm_gadget(instance, opt.k), "cllm", out);
}

int run_verify(const Options& opt, std::ostream& out) {
  const Digraph d = read_digraph_file(opt.input);
  std::ifstream file(opt.packing_path);
  if (!file) throw Error("file-open", "cannot read '" + opt.packing_path + "'");
  const Packing p = read_packing(file, d);

  std::optional<std::string> violation = packing_violation(p);
  if (!violation && !opt.s_list.empty() && VertexSet{parse_int_list(opt.s_list)} != p.anchor)
    violation = "anchor-mismatch";
  if (!violation && opt.ell >= 0 && p.size() < opt.ell) violation = "too-few-parts";

  if (opt.json_out) {
    json j{{"verb", "verify"}, {"parts", p.size()}, {"valid", !violation}};
    j["violation"] = violation ? json(*violation) : json(nullptr);
    out << j.dump(2) << '\n';
  } else {
    out << "parts: " << p.size() << '\n';
    out << "valid: " << (violation ? "no" : "yes") << '\n';
    if (violation) out << "violation: " << *violation << '\n';
  }
  out << "RESULT: " << (violation ? *violation : "valid") << '\n';
  return violation ? 1 : 0;
}

int run_biorient(const Options& opt, std::ostream& out) {
  const UndirectedGraph g = read_undirected_file(opt.input);
  const Digraph d = biorient(g);
  if (opt.json_out) {
    json arcs = json::array();
    for (const Arc& a : d.arcs()) arcs.push_back({a.from, a.to});
    json j{{"verb", "biorient"}, {"order", d.order()}, {"arcs", arcs}};
    out << j.dump(2) << '\n';
  } else if (opt.dot) {
    out << to_dot(d);
  } else {
    write_digraph(out, d);
  }
  out << "RESULT: " << d.order() << ' ' << d.arc_count() << '\n';
  return 0;
}

int run_linkage(const Options& opt, std::ostream& out) {
  const Digraph d = read_digraph_file(opt.input);
  const std::vector<int> flat = parse_int_list(opt.pairs);
  if (flat.size() < 2 || flat.size() % 2 != 0)
    throw Error("bad-args", "--pairs takes s1,t1,s2,t2,...");
  TerminalSequence terminals;
  for (size_t i = 0; i < flat.size(); i += 2) terminals.pairs.emplace_back(flat[i], flat[i + 1]);
  const auto linkage = directed_linkage(d, terminals);

  if (opt.json_out) {
    json j{{"verb", "linkage"}, {"pairs", terminals.pairs.size()}, {"holds", linkage.has_value()}};
    if (linkage) {
      json paths = json::array();
      for (const auto& path : linkage->paths) paths.push_back(path);
      j["paths"] = paths;
    } else {
      j["paths"] = nullptr;
    }
    out << j.dump(2) << '\n';
  } else {
    out << "pairs: " << terminals.pairs.size() << '\n';
    if (linkage) {
      for (size_t i = 0; i < linkage->paths.size(); ++i)
        out << "path " << i << ": " << join(linkage->paths[i]) << '\n';
    }
  }
  out << "RESULT: " << (linkage ? "yes" : "no") << '\n';
  return linkage ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"strong subgraph connectivity toolkit"};
  app.require_subcommand(1);
  Options opt;

  const auto add_engine = [&](CLI::App* cmd) {
    cmd->add_option("--engine", opt.engine, "auto, oracle, formula, symmetric, semicomplete")
        ->check(CLI::IsMember({"auto", "oracle", "formula", "symmetric", "semicomplete"}));
    cmd->add_option("--max-n", opt.max_n,
                    "order cap for the exhaustive engine (default 12, env STRONGSUB_MAX_N)");
  };

  CLI::App* kappa_s_cmd = app.add_subcommand("kappa-s", "largest packing around a fixed anchor");
  kappa_s_cmd->add_option("--input", opt.input, "digraph edge-list file")->required();
  kappa_s_cmd->add_option("--s", opt.s_list, "anchor vertices, comma-separated")->required();
  kappa_s_cmd->add_flag("--certificate", opt.certificate, "print an optimal packing");
  kappa_s_cmd->add_flag("--json", opt.json_out, "JSON report");
  add_engine(kappa_s_cmd);

  CLI::App* kappa_k_cmd = app.add_subcommand("kappa-k", "minimum over all k-subsets");
  kappa_k_cmd->add_option("--input", opt.input, "digraph edge-list file")->required();
  kappa_k_cmd->add_option("--k", opt.k, "anchor size")->required();
  kappa_k_cmd->add_flag("--certificate", opt.certificate, "print a packing for the witness");
  kappa_k_cmd->add_flag("--json", opt.json_out, "JSON report");
  add_engine(kappa_k_cmd);

  CLI::App* bounds_cmd = app.add_subcommand("bounds", "generic lower/upper bounds");
  bounds_cmd->add_option("--input", opt.input, "digraph edge-list file")->required();
  bounds_cmd->add_option("--k", opt.k, "anchor size")->required();
  bounds_cmd->add_flag("--json", opt.json_out, "JSON report");

  CLI::App* decide_cmd = app.add_subcommand("decide", "is the connectivity at least ell?");
  decide_cmd->add_option("--input", opt.input, "digraph edge-list file")->required();
  decide_cmd->add_option("--s", opt.s_list, "anchor vertices, comma-separated");
  decide_cmd->add_option("--k", opt.k, "anchor size (checks every k-subset)");
  decide_cmd->add_option("--ell", opt.ell, "part count to test")->required();
  decide_cmd->add_flag("--certificate", opt.certificate, "print a packing when one exists");
  decide_cmd->add_flag("--json", opt.json_out, "JSON report");
  add_engine(decide_cmd);

  CLI::App* decompose_cmd =
      app.add_subcommand("decompose", "Hamiltonian cycle decomposition of a complete biorientation");
  decompose_cmd->add_option("--n", opt.n, "number of vertices")->required();
  decompose_cmd->add_flag("--json", opt.json_out, "JSON report");

  CLI::App* gadget_cmd = app.add_subcommand("gadget", "hardness-reduction constructions");
  gadget_cmd->require_subcommand(1);
  CLI::App* linkage2_cmd =
      gadget_cmd->add_subcommand("linkage2", "from a two-pair disjoint-path instance");
  linkage2_cmd->add_option("--input", opt.input, "digraph edge-list file")->required();
  linkage2_cmd->add_option("--terminals", opt.terminals, "s1,t1,s2,t2")->required();
  linkage2_cmd->add_option("--k", opt.k, "anchor size")->required();
  linkage2_cmd->add_option("--ell", opt.ell, "part count (default 2)");
  linkage2_cmd->add_flag("--dot", opt.dot, "DOT output");
  linkage2_cmd->add_flag("--json", opt.json_out, "JSON report");
  CLI::App* cllm_cmd = gadget_cmd->add_subcommand("cllm", "from a tripartite matching instance");
  cllm_cmd->add_option("--input", opt.input, "undirected edge-list file")->required();
  cllm_cmd->add_option("--classes", opt.classes, "three '/'-separated vertex lists")->required();
  cllm_cmd->add_option("--k", opt.k, "anchor size (at least 3)")->required();
  cllm_cmd->add_flag("--dot", opt.dot, "DOT output");
  cllm_cmd->add_flag("--json", opt.json_out, "JSON report");

  CLI::App* verify_cmd = app.add_subcommand("verify", "audit a packing file against its host");
  verify_cmd->add_option("--input", opt.input, "digraph edge-list file")->required();
  verify_cmd->add_option("--packing", opt.packing_path, "packing file")->required();
  verify_cmd->add_option("--s", opt.s_list, "expected anchor");
  verify_cmd->add_option("--ell", opt.ell, "minimum part count");
  verify_cmd->add_flag("--json", opt.json_out, "JSON report");

  CLI::App* biorient_cmd = app.add_subcommand("biorient", "complete biorientation of a graph");
  biorient_cmd->add_option("--input", opt.input, "undirected edge-list file")->required();
  biorient_cmd->add_flag("--dot", opt.dot, "DOT output");
  biorient_cmd->add_flag("--json", opt.json_out, "JSON report");

  CLI::App* linkage_cmd = app.add_subcommand("linkage", "vertex-disjoint directed paths");
  linkage_cmd->add_option("--input", opt.input, "digraph edge-list file")->required();
  linkage_cmd->add_option("--pairs", opt.pairs, "s1,t1,s2,t2,...")->required();
  linkage_cmd->add_flag("--json", opt.json_out, "JSON report");

  std::vector<const char*> argv = {"strongsub"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    if (app.got_subcommand(kappa_s_cmd)) return run_kappa_s(opt, out);
    if (app.got_subcommand(kappa_k_cmd)) return run_kappa_k(opt, out);
    if (app.got_subcommand(bounds_cmd)) return run_bounds(opt, out);
    if (app.got_subcommand(decide_cmd)) return run_decide(opt, out);
    if (app.got_subcommand(decompose_cmd)) return run_decompose(opt, out);
    if (app.got_subcommand(gadget_cmd)) {
      if (gadget_cmd->got_subcommand(linkage2_cmd)) return run_gadget_linkage2(opt, out);
      return run_gadget_cllm(opt, out);
    }
    if (app.got_subcommand(verify_cmd)) return run_verify(opt, out);
    if (app.got_subcommand(biorient_cmd)) return run_biorient(opt, out);
    if (app.got_subcommand(linkage_cmd)) return run_linkage(opt, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  err << "error: no subcommand\n";
  return 2;
}

}  // namespace strongsub::cli
