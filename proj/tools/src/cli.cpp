#include "glmn/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "glmn/analysis.hpp"
#include "glmn/characters.hpp"
#include "glmn/error.hpp"

namespace glmn::cli {

namespace {

struct RankArgs {
  int m = 0;
  int n = 0;

  Rank rank() const {
    if (m <= 0 || n <= 0) throw UsageError("-m and -n must be given and positive");
    return Rank{m, n};
  }
};

struct WeightArgs {
  std::string weight, eps, tuple;
  std::string encoding = "tuple";
};

struct Resolved {
  Weight nu;
  std::string banner;
};

// Every weight on the command line is the rho-shifted parameter nu. In the
// tuple encoding the entries are the pairings (nu, eps_i), i.e. the tuple of
// lambda = nu - rho.
std::optional<Resolved> resolve(const WeightArgs& w, Rank rank, const std::string& flag = "--weight") {
  const int given = !w.weight.empty() + !w.eps.empty() + !w.tuple.empty();
  if (given == 0) return std::nullopt;
  if (given > 1) throw UsageError("give " + flag + " in one encoding only");
  std::string enc = w.encoding, text = w.weight;
  if (!w.eps.empty()) enc = "eps", text = w.eps;
  if (!w.tuple.empty()) enc = "tuple", text = w.tuple;
  if (enc == "eps") {
    Weight nu = parse_weight(rank, text);
    return Resolved{nu, "encoding: eps coefficients, nu = " + to_string(nu)};
  }
  if (enc != "tuple") throw UsageError("unknown encoding '" + enc + "'");
  Weight nu = shifted_parameter(parse_tuple(rank, text));
  return Resolved{nu, "encoding: tuple (nu, e_i), nu = " + to_string(nu)};
}

void add_rank(CLI::App* cmd, RankArgs& r) {
  cmd->add_option("-m", r.m, "even dimension");
  cmd->add_option("-n", r.n, "odd dimension");
}

void add_weight(CLI::App* cmd, WeightArgs& w, const std::string& suffix = "") {
  cmd->add_option("--weight" + suffix, w.weight, "weight in the --encoding, e.g. \"1,0,0|0,-1\"");
  cmd->add_option("--weight" + suffix + "-eps", w.eps, "weight as eps/delta coefficients");
  cmd->add_option("--weight" + suffix + "-tuple", w.tuple, "weight as the tuple ((nu, e_i))");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<Box> parse_boxes(Rank rank, const std::string& text) {
  std::vector<Box> out;
  std::string cleaned;
  for (char c : text)
    if (c != '(' && c != ')' && c != ' ') cleaned += c;
  std::istringstream ss(cleaned);
  std::string item;
  while (std::getline(ss, item, ';')) {
    if (item.empty()) continue;
    auto comma = item.find(',');
    if (comma == std::string::npos) throw UsageError("box '" + item + "' is not of the form i,j");
    Box b;
    try {
      b = Box{std::stoi(item.substr(0, comma)), std::stoi(item.substr(comma + 1))};
    } catch (const std::exception&) {
      throw UsageError("box '" + item + "' is not of the form i,j");
    }
    validate(b, rank);
    out.push_back(b);
  }
  return out;
}

std::string graph_text(const ColoredGraph& g) {
  std::ostringstream os;
  os << to_string(g.rank()) << ": " << g.vertex_count() << " vertices, " << g.edge_count() << " edges\n";
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    os << "v" << v << " {";
    const auto& cls = g.vertex_class(v);
    for (std::size_t k = 0; k < cls.size(); ++k)
      os << (k ? " " : "") << to_string(cls[k]);
    os << "}\n";
  }
  for (const auto& e : g.edges())
    os << "v" << e.u << " -- v" << e.v << " " << to_string(e.color) << "\n";
  return os.str();
}

std::string emit_graph(const ColoredGraph& g, const std::string& format, const std::string& banner, std::ostream& err) {
  if (format == "json") {
    if (!banner.empty()) err << "# " << banner << "\n";
    return to_json(g);
  }
  if (format == "dot") return (banner.empty() ? "" : "// " + banner + "\n") + to_dot(g);
  if (format == "text") return (banner.empty() ? "" : "# " + banner + "\n") + graph_text(g);
  throw UsageError("unknown format '" + format + "'");
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Odd reflection graphs and Borel subalgebras of gl(m|n)", "glmn"};
  app.require_subcommand(1);

  RankArgs rank_args;
  WeightArgs weight_args, weight2_args;
  std::string format, output, partition_text = "", partition2_text = "", from_text = "()", walk_text, colors_text,
                              json_path, suite = "all";
  int bound = 3;
  bool timing = false, show_numerators = false;

  auto add_output = [&](CLI::App* cmd) { cmd->add_option("-o,--output", output, "write to a file"); };

  auto* lattice = app.add_subcommand("lattice", "emit L(m,n)");
  add_rank(lattice, rank_args);
  lattice->add_option("--format", format, "dot, json or text")->default_str("dot");
  add_output(lattice);

  auto* contract = app.add_subcommand("contract", "emit L(m,n)_nu or a colour contraction");
  add_rank(contract, rank_args);
  add_weight(contract, weight_args);
  contract->add_option("--encoding", weight_args.encoding, "tuple or eps")->default_str("tuple");
  contract->add_option("--colors", colors_text, "boxes to contract, e.g. \"1,1;1,2\"");
  contract->add_option("--from-json", json_path, "start from a graph written by --format json");
  contract->add_option("--format", format, "dot, json or text")->default_str("dot");
  add_output(contract);

  auto* rho_cmd = app.add_subcommand("rho", "print rho^b for a partition");
  add_rank(rho_cmd, rank_args);
  rho_cmd->add_option("--partition", partition_text, "e.g. \"2,1\" or \"()\"");
  add_output(rho_cmd);

  auto* transport = app.add_subcommand("transport", "move a simple highest weight to another Borel");
  add_rank(transport, rank_args);
  add_weight(transport, weight_args);
  transport->add_option("--encoding", weight_args.encoding, "tuple or eps")->default_str("tuple");
  transport->add_option("--partition", partition_text, "target Borel");
  transport->add_option("--from", from_text, "start Borel (with --walk)")->default_str("()");
  transport->add_option("--walk", walk_text, "boxes to toggle, e.g. \"1,1;2,1\"");
  add_output(transport);

  auto* diagram = app.add_subcommand("diagram", "ASCII weight diagram of a regular dominant weight");
  add_rank(diagram, rank_args);
  add_weight(diagram, weight_args);
  diagram->add_option("--encoding", weight_args.encoding, "tuple or eps")->default_str("tuple");
  add_output(diagram);

  auto* atyp = app.add_subcommand("atypicality", "atypicality and typicality of a weight");
  add_rank(atyp, rank_args);
  add_weight(atyp, weight_args);
  atyp->add_option("--encoding", weight_args.encoding, "tuple or eps")->default_str("tuple");
  add_output(atyp);

  auto* chars = app.add_subcommand("characters", "compare ch M^P(nu - rho^P) and ch M^P2(nu2 - rho^P2)");
  add_rank(chars, rank_args);
  add_weight(chars, weight_args);
  add_weight(chars, weight2_args, "2");
  chars->add_option("--encoding", weight_args.encoding, "tuple or eps (both weights)")->default_str("tuple");
  chars->add_option("--partition", partition_text, "first Borel");
  chars->add_option("--partition2", partition2_text, "second Borel");
  chars->add_flag("--show-numerators", show_numerators, "print both numerators");
  add_output(chars);

  auto* verify = app.add_subcommand("verify", "run a verification suite or all of them");
  add_rank(verify, rank_args);
  verify->add_option("suite", suite, "suite name or all")->default_str("all");
  verify->add_option("--bound", bound, "sweep entries in [-bound, bound]")->default_str("3");
  verify->add_option("--format", format, "text or json")->default_str("text");
  verify->add_flag("--timing", timing, "include timings (not byte-stable)");
  add_output(verify);

  std::vector<const char*> argv{"glmn"};
  for (const auto& a : args)
    argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  }

  try {
    std::string text;
    int status = kOk;
    if (lattice->parsed()) {
      text = emit_graph(build_lattice(rank_args.rank()), format.empty() ? "dot" : format, "", err);
    } else if (contract->parsed()) {
      std::optional<ColoredGraph> g;
      if (!json_path.empty()) {
        g.emplace(graph_from_json(read_file(json_path)));
        if ((rank_args.m || rank_args.n) && rank_args.rank() != g->rank())
          throw UsageError("-m/-n disagree with the rank in " + json_path);
      } else {
        g.emplace(build_lattice(rank_args.rank()));
      }
      const Rank rank = g->rank();
      auto w = resolve(weight_args, rank);
      if (w && !colors_text.empty()) throw UsageError("give either a weight or --colors");
      std::string banner;
      if (w) {
        g.emplace(contract_at_weight(*g, w->nu));
        banner = w->banner;
      } else if (!colors_text.empty()) {
        auto boxes = parse_boxes(rank, colors_text);
        g.emplace(contract_colors(*g, ColorSet(boxes.begin(), boxes.end())));
      } else if (json_path.empty()) {
        throw UsageError("contract needs a weight, --colors or --from-json");
      }
      text = emit_graph(*g, format.empty() ? "dot" : format, banner, err);
    } else if (rho_cmd->parsed()) {
      const Rank rank = rank_args.rank();
      const auto p = parse_partition(rank, partition_text);
      text = "rho^" + to_string(p) + " = " + to_string(rho_b(p)) + "\n";
    } else if (transport->parsed()) {
      const Rank rank = rank_args.rank();
      auto w = resolve(weight_args, rank);
      if (!w) throw UsageError("transport needs a weight");
      const auto start = parse_partition(rank, from_text);
      std::vector<Box> walk;
      Partition target = start;
      if (walk_text.empty()) {
        if (start != Partition::empty(rank)) throw UsageError("--from needs --walk");
        target = parse_partition(rank, partition_text);
        walk = monotone_walk(target);
      } else {
        walk = parse_boxes(rank, walk_text);
        target = walk_partitions(start, walk).back();
        if (!partition_text.empty() && parse_partition(rank, partition_text) != target)
          throw UsageError("the walk ends at " + to_string(target) + ", not at --partition");
      }
      const Weight moved = transport_simple(w->nu, start, walk);
      text = "# " + w->banner + "\nfrom " + to_string(start) + " nu = " + to_string(w->nu) + "\nto " +
             to_string(target) + " nu = " + to_string(moved) + "\ntuple " + format_blocks(rank, pairings(moved)) + "\n";
    } else if (diagram->parsed()) {
      const Rank rank = rank_args.rank();
      auto w = resolve(weight_args, rank);
      if (!w) throw UsageError("diagram needs a weight");
      const TupleWeight t{rank, pairings(w->nu)};
      const auto d = weight_diagram(t);
      Integer lo = 0, hi = 0;
      if (!d.marks().empty()) lo = d.marks().begin()->first - 1, hi = d.marks().rbegin()->first + 1;
      text = "# " + w->banner + "\n" + render(d, lo, hi) +
             "at least one ^ between consecutive v: " + yes_no(diagram_condition(w->nu - rho(rank))) + "\n";
    } else if (atyp->parsed()) {
      const Rank rank = rank_args.rank();
      auto w = resolve(weight_args, rank);
      if (!w) throw UsageError("atypicality needs a weight");
      const auto g = contract_at_weight(build_lattice(rank), w->nu);
      text = "# " + w->banner + "\natypicality " + std::to_string(atypicality(w->nu)) + "\ntypical " +
             yes_no(is_typical(w->nu)) + "\ncontracted vertices " + std::to_string(g.vertex_count()) + "\n";
    } else if (chars->parsed()) {
      const Rank rank = rank_args.rank();
      weight2_args.encoding = weight_args.encoding;
      auto w1 = resolve(weight_args, rank);
      auto w2 = resolve(weight2_args, rank, "--weight2");
      if (!w1 || !w2) throw UsageError("characters needs --weight and --weight2");
      const auto p1 = parse_partition(rank, partition_text);
      const auto p2 = parse_partition(rank, partition2_text);
      const Weight l1 = w1->nu - rho_b(p1), l2 = w2->nu - rho_b(p2);
      const bool equal = characters_equal_iff(p1, l1, p2, l2);
      text = "# " + w1->banner + "\n# " + w2->banner + "\nM^" + to_string(p1) + "(" + to_string(l1) + ")\nM^" +
             to_string(p2) + "(" + to_string(l2) + ")\nequal characters " + yes_no(equal) + "\n";
      if (show_numerators)
        text += "numerator 1\n" + to_string(verma_numerator(p1, w1->nu)) + "numerator 2\n" +
                to_string(verma_numerator(p2, w2->nu));
    } else if (verify->parsed()) {
      const auto reports = run_suite(suite, rank_args.rank(), bound);
      const std::string fmt = format.empty() ? "text" : format;
      if (fmt == "json")
        text = to_json(reports, timing);
      else if (fmt == "text")
        text = to_table(reports, timing);
      else
        throw UsageError("unknown format '" + fmt + "'");
      for (const auto& r : reports)
        if (!r.passed()) status = kViolation;
    }

    if (output.empty()) {
      out << text;
    } else {
      std::ofstream file(output);
      if (!file) throw UsageError("cannot write " + output);
      file << text;
    }
    return status;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const InvariantViolation& e) {
    err << "invariant violated: " << e.what() << "\n";
    return kInternal;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
}

} // namespace glmn::cli
