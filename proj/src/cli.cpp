#include "tensorposet/cli.hpp"

#include <CLI11.hpp>

#include <ostream>
#include <set>

#include "tensorposet/acceptance.hpp"
#include "tensorposet/error.hpp"
#include "tensorposet/lspath.hpp"
#include "tensorposet/oracle.hpp"
#include "tensorposet/poset.hpp"
#include "tensorposet/repdim.hpp"
#include "tensorposet/rootsys.hpp"
#include "tensorposet/serialize.hpp"
#include "tensorposet/tableaux_a2.hpp"

namespace tensorposet::cli {

namespace {

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

Json header(const std::string& command) { return Json{{"schema", kJsonSchemaVersion}, {"command", command}}; }

Weight weight_for(const RootSystem& rs, const std::string& text) {
  Weight w = parse_weight(text);
  rs.check_rank(w);
  return w;
}

Weight dominant_for(const RootSystem& rs, const std::string& text, const char* what) {
  Weight w = weight_for(rs, text);
  if (!w.is_dominant()) throw PreconditionError(std::string(what) + " must be dominant, got " + w.str());
  return w;
}

Partition partition_for(const std::string& text) {
  if (text.empty()) return {};
  const Weight w = parse_weight(text);
  return Partition(w.vec().begin(), w.vec().end());
}

std::size_t node_for(const RootSystem& rs, int node) {
  if (node < 1 || static_cast<std::size_t>(node) > rs.rank())
    throw PreconditionError("node must be between 1 and " + std::to_string(rs.rank()));
  return static_cast<std::size_t>(node - 1);
}

struct Options {
  std::string type;
  std::string lambda;
  std::string mu;
  std::string nu;
  std::string xi;
  std::string composition;
  std::string chi;
  std::string xi_partition;
  std::string output = "json";
  std::string pairs = "covers";
  std::string method = "klimyk";
  std::size_t k = 2;
  std::int64_t max_coord = 2;
  std::uint64_t limit = kDefaultCompositionLimit;
  int node = 1;
  std::int64_t r = 1;
  std::int64_t s = -1;
  bool full = false;
  std::vector<int> only;
};

int cmd_poset(const Options& o, std::ostream& out) {
  RootSystem rs(LieType::parse(o.type));
  const Weight lambda = dominant_for(rs, o.lambda, "lambda");
  const auto p = build_poset(rs, lambda, o.k, o.limit);
  if (o.output == "dot") {
    out << poset_to_dot(p);
  } else if (o.output == "text") {
    for (std::size_t i = 0; i < p.nodes.size(); ++i)
      out << i << ' ' << p.nodes[i].canonical.str() << " members=" << p.nodes[i].members.size() << '\n';
    for (const auto& [lo, hi] : p.cover_edges) out << lo << " < " << hi << '\n';
  } else {
    emit(out, poset_to_json(rs, p));
  }
  return kExitOk;
}

int cmd_dims(const Options& o, std::ostream& out) {
  RootSystem rs(LieType::parse(o.type));
  if (o.lambda.empty() == o.composition.empty())
    throw PreconditionError("dims needs exactly one of --lambda and --composition");
  if (!o.lambda.empty()) {
    out << weyl_dim(rs, dominant_for(rs, o.lambda, "lambda")) << '\n';
  } else {
    const auto c = parse_composition(o.composition);
    for (const auto& p : c.parts) rs.check_rank(p);
    out << dim_product(rs, c) << '\n';
  }
  return kExitOk;
}

int cmd_schur(const Options& o, std::ostream& out) {
  RootSystem rs(LieType::parse(o.type));
  if (o.k != 2) throw PreconditionError("schur-check compares tensor squares, so --k must be 2");
  if (o.pairs != "covers" && o.pairs != "all") throw PreconditionError("--pairs must be covers or all");
  if (o.max_coord < 0) throw PreconditionError("--max-coord must be nonnegative");
  std::vector<Weight> lambdas;
  if (!o.lambda.empty())
    lambdas.push_back(dominant_for(rs, o.lambda, "lambda"));
  else
    lambdas = weights_in_box(rs.rank(), o.max_coord);

  TensorOracle oracle(rs);
  std::size_t pairs = 0;
  std::size_t violations = 0;
  Json entries = Json::array();
  for (const auto& lambda : lambdas) {
    const auto p = build_poset(rs, lambda, 2, o.limit);
    std::vector<std::pair<std::size_t, std::size_t>> todo;
    if (o.pairs == "covers") {
      todo = p.cover_edges;
    } else {
      for (std::size_t i = 0; i < p.nodes.size(); ++i)
        for (std::size_t j = 0; j < p.nodes.size(); ++j)
          if (p.less(i, j)) todo.emplace_back(i, j);
    }
    for (const auto& [lo, hi] : todo) {
      const auto report = schur_compare(oracle, p.nodes[lo].canonical, p.nodes[hi].canonical);
      ++pairs;
      violations += report.violations;
      for (const auto& e : report.entries) {
        if (!o.full && !e.violation) continue;
        entries.push_back(Json{{"pair", Json::array({to_json(report.lower), to_json(report.upper)})},
                               {"nu", to_json(e.nu)},
                               {"c_lo", e.lower},
                               {"c_hi", e.upper},
                               {"violation", e.violation}});
      }
    }
  }
  Json j = header("schur-check");
  j["type"] = rs.lie_type().str();
  j["pairs_mode"] = o.pairs;
  j["lambdas"] = lambdas.size();
  j["pairs"] = pairs;
  j["violations"] = violations;
  j["entries"] = entries;
  emit(out, j);
  return violations ? kExitViolation : kExitOk;
}

int cmd_lspaths(const Options& o, std::ostream& out) {
  RootSystem rs(LieType::parse(o.type));
  const Weight lambda = dominant_for(rs, o.lambda, "lambda");
  auto paths = enumerate_ls_paths(rs, lambda);
  Json j = header("lspaths");
  j["type"] = rs.lie_type().str();
  j["shape"] = to_json(lambda);
  j["total"] = paths.size();
  if (!o.mu.empty() && o.xi.empty()) throw PreconditionError("--mu needs --xi");
  if (!o.xi.empty()) {
    const Weight xi = dominant_for(rs, o.xi, "xi");
    std::vector<LSPath> kept;
    std::optional<Weight> mu;
    if (!o.mu.empty()) mu = dominant_for(rs, o.mu, "mu");
    for (auto& p : paths)
      if (is_xi_dominant(p, xi) && (!mu || xi + path_endpoint(p) == *mu)) kept.push_back(std::move(p));
    paths = std::move(kept);
    j["xi"] = to_json(xi);
    if (mu) j["mu"] = to_json(*mu);
  }
  j["count"] = paths.size();
  Json list = Json::array();
  for (const auto& p : paths) list.push_back(to_json(p));
  j["paths"] = list;
  emit(out, j);
  return kExitOk;
}

int cmd_inject(const Options& o, std::ostream& out) {
  RootSystem rs(LieType::parse(o.type));
  const std::size_t node = node_for(rs, o.node);
  Json j = header("inject");
  j["type"] = rs.lie_type().str();
  j["node"] = o.node;
  j["r"] = o.r;
  bool ok = true;
  if (o.s >= 0) {
    const auto report = verify_prop_min(rs, o.r, o.s, node);
    j["s"] = o.s;
    Json entries = Json::array();
    for (const auto& e : report.entries)
      entries.push_back(Json{{"mu", to_json(e.mu)},
                             {"source", e.source},
                             {"target", e.target},
                             {"images_valid", e.images_valid},
                             {"injective", e.injective}});
    j["entries"] = entries;
    ok = report.ok();
  } else {
    if (o.r < 0) throw PreconditionError("r must be nonnegative");
    const auto paths = enumerate_ls_paths(rs, o.r * rs.fundamental(node));
    OrbitPoset target(rs, (o.r + 1) * rs.fundamental(node));
    Json maps = Json::array();
    std::set<LSPath> images;
    for (const auto& p : paths) {
      const LSPath img = iota_r(rs, p, o.r, node);
      const bool valid = is_ls_path(target, img);
      ok = ok && valid && images.insert(img).second;
      maps.push_back(Json{{"source", to_json(p)}, {"image", to_json(img)}, {"valid", valid}});
    }
    j["maps"] = maps;
  }
  j["ok"] = ok;
  emit(out, j);
  return ok ? kExitOk : kExitFailure;
}

int cmd_tableaux(const Options& o, std::ostream& out) {
  const LieType t = LieType::parse(o.type.empty() ? "A2" : o.type);
  if (t != LieType{'A', 2}) throw PreconditionError("tableaux are implemented for type A2 only");
  RootSystem rs(t);
  const Weight lambda = dominant_for(rs, o.lambda, "lambda");
  auto ts = a2::enumerate_bt(lambda);
  Json j = header("tableaux");
  j["lambda"] = to_json(lambda);
  if (!o.mu.empty()) {
    if (o.nu.empty()) throw PreconditionError("--mu needs --nu");
    const Weight mu = dominant_for(rs, o.mu, "mu");
    const Weight nu = dominant_for(rs, o.nu, "nu");
    ts = a2::filter_lr(ts, mu, nu);
    j["mu"] = to_json(mu);
    j["nu"] = to_json(nu);
  } else if (!o.nu.empty()) {
    const Weight nu = weight_for(rs, o.nu);
    ts = a2::filter_weight(ts, nu);
    j["nu"] = to_json(nu);
  }
  j["count"] = ts.size();
  Json list = Json::array();
  for (const auto& x : ts) list.push_back(to_json(x));
  j["tableaux"] = list;
  emit(out, j);
  return kExitOk;
}

int cmd_rowshuffle(const Options& o, std::ostream& out) {
  Json j = header("rowshuffle");
  if (!o.lambda.empty()) {
    RootSystem rs(LieType::parse(o.type.empty() ? "A1" : o.type));
    const Weight lambda = dominant_for(rs, o.lambda, "lambda");
    const auto c = lambda_max_typeA(rs, lambda);
    j["type"] = rs.lie_type().str();
    j["lambda"] = to_json(lambda);
    j["lambda_max"] = to_json(c);
  } else {
    const auto [rho1, rho2] = row_shuffle_partitions(partition_for(o.chi), partition_for(o.xi_partition));
    j["rho1"] = rho1;
    j["rho2"] = rho2;
  }
  emit(out, j);
  return kExitOk;
}

int cmd_oracle(const Options& o, std::ostream& out) {
  RootSystem rs(LieType::parse(o.type));
  const Weight lambda = dominant_for(rs, o.lambda, "lambda");
  if (o.method != "klimyk" && o.method != "subtraction") throw PreconditionError("--method must be klimyk or subtraction");
  TensorOracle oracle(rs);
  Json j = header("oracle");
  j["type"] = rs.lie_type().str();
  j["lambda"] = to_json(lambda);
  if (o.mu.empty()) {
    const auto& table = oracle.character(lambda);
    Json ws = Json::array();
    for (const auto& [w, m] : table.dominant) ws.push_back(Json{{"weight", to_json(w)}, {"mult", m}});
    j["dominant_weights"] = ws;
    j["dim"] = table.total(rs).str();
    emit(out, j);
    return kExitOk;
  }
  const Weight mu = dominant_for(rs, o.mu, "mu");
  const auto table =
      o.method == "klimyk" ? oracle.full_decomposition(lambda, mu) : oracle.decomposition_by_subtraction(lambda, mu);
  j["mu"] = to_json(mu);
  j["method"] = o.method;
  if (!o.nu.empty()) {
    const Weight nu = dominant_for(rs, o.nu, "nu");
    auto it = table.find(nu);
    j["nu"] = to_json(nu);
    j["mult"] = it == table.end() ? 0 : it->second;
  } else {
    j["decomposition"] = to_json(table);
    j["dim"] = decomposition_dimension(rs, table).str();
  }
  emit(out, j);
  return kExitOk;
}

int cmd_verify_all(const Options& o, std::ostream& out) {
  const auto results = acceptance::run_all(o.only, out);
  return acceptance::all_passed(results) ? kExitOk : kExitFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Dominance posets of weight compositions and tensor product multiplicities", "tensorposet"};
  app.require_subcommand(1);
  Options o;

  auto add_type = [&o](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--type", o.type, "Cartan type, e.g. A2, B3, G2");
    if (required) opt->required();
  };

  auto* poset = app.add_subcommand("poset", "Build the poset P+(lambda,k)/~");
  add_type(poset, true);
  poset->add_option("--lambda", o.lambda, "Weight, comma-separated fundamental coordinates")->required();
  poset->add_option("--k", o.k, "Number of parts")->check(CLI::PositiveNumber);
  poset->add_option("--output", o.output, "json, dot or text")->check(CLI::IsMember({"json", "dot", "text"}));
  poset->add_option("--limit", o.limit, "Refuse to enumerate more compositions than this");

  auto* dims = app.add_subcommand("dims", "Weyl dimensions");
  add_type(dims, true);
  dims->add_option("--lambda", o.lambda, "Weight");
  dims->add_option("--composition", o.composition, "Parts separated by ';'");

  auto* schur = app.add_subcommand("schur-check", "Compare tensor multiplicities along the poset");
  add_type(schur, true);
  schur->add_option("--lambda", o.lambda, "Single weight; sweep all weights up to --max-coord when omitted");
  schur->add_option("--k", o.k, "Number of parts (must be 2)");
  schur->add_option("--pairs", o.pairs, "covers or all")->check(CLI::IsMember({"covers", "all"}));
  schur->add_option("--max-coord", o.max_coord, "Largest coordinate in the sweep");
  schur->add_option("--limit", o.limit, "Composition enumeration limit");
  schur->add_flag("--full", o.full, "List every multiplicity, not only violations");

  auto* lspaths = app.add_subcommand("lspaths", "Enumerate LS paths");
  add_type(lspaths, true);
  lspaths->add_option("--lambda", o.lambda, "Shape")->required();
  lspaths->add_option("--xi", o.xi, "Keep only xi-dominant paths");
  lspaths->add_option("--mu", o.mu, "With --xi, keep only paths with xi + pi(1) = mu");

  auto* inject = app.add_subcommand("inject", "Apply the path injection from r omega_i to (r+1) omega_i");
  add_type(inject, true);
  inject->add_option("--node", o.node, "Minuscule node, 1-based")->required();
  inject->add_option("--r", o.r, "Source multiple r")->required();
  inject->add_option("--s", o.s, "Verify the injection on s omega_i-dominant paths (s >= r+1)");

  auto* tableaux = app.add_subcommand("tableaux", "A2 tableaux counts");
  add_type(tableaux, false);
  tableaux->add_option("--lambda", o.lambda, "Shape")->required();
  tableaux->add_option("--mu", o.mu, "Left tensor factor (needs --nu)");
  tableaux->add_option("--nu", o.nu, "Weight, or target highest weight with --mu");

  auto* rowshuffle = app.add_subcommand("rowshuffle", "Row shuffle of two partitions, or the type A maximum");
  add_type(rowshuffle, false);
  rowshuffle->add_option("--chi", o.chi, "First partition, comma-separated");
  rowshuffle->add_option("--xi", o.xi_partition, "Second partition, comma-separated");
  rowshuffle->add_option("--lambda", o.lambda, "Type A weight; prints the maximal composition instead");

  auto* orc = app.add_subcommand("oracle", "Weight and tensor product multiplicities");
  add_type(orc, true);
  orc->add_option("--lambda", o.lambda, "Highest weight")->required();
  orc->add_option("--mu", o.mu, "Second tensor factor");
  orc->add_option("--nu", o.nu, "Single component to report");
  orc->add_option("--method", o.method, "klimyk or subtraction")->check(CLI::IsMember({"klimyk", "subtraction"}));

  auto* verify = app.add_subcommand("verify-all", "Run the acceptance suite");
  verify->add_option("--only", o.only, "Criterion numbers to run");

  std::vector<std::string> storage{"tensorposet"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (poset->parsed()) return cmd_poset(o, out);
    if (dims->parsed()) return cmd_dims(o, out);
    if (schur->parsed()) return cmd_schur(o, out);
    if (lspaths->parsed()) return cmd_lspaths(o, out);
    if (inject->parsed()) return cmd_inject(o, out);
    if (tableaux->parsed()) return cmd_tableaux(o, out);
    if (rowshuffle->parsed()) return cmd_rowshuffle(o, out);
    if (orc->parsed()) return cmd_oracle(o, out);
    if (verify->parsed()) return cmd_verify_all(o, out);
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const SizeGuardError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UnsupportedError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitFailure;
  }
  err << app.help();
  return kExitUsage;
}

}  // namespace tensorposet::cli
