#include "tensorposet/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include "tensorposet/cli.hpp"
#include "tensorposet/serialize.hpp"
#include "tensorposet/error.hpp"
#include "tensorposet/lspath.hpp"
#include "tensorposet/oracle.hpp"
#include "tensorposet/poset.hpp"
#include "tensorposet/repdim.hpp"
#include "tensorposet/rootsys.hpp"
#include "tensorposet/tableaux_a2.hpp"

namespace tensorposet::acceptance {

namespace {

// Counts checks and keeps the first few failure descriptions.
class Tally {
 public:
  void check(bool ok, const std::function<std::string()>& describe) {
    ++checks_;
    if (ok) return;
    ++failures_;
    if (examples_.size() < 3) examples_.push_back(describe());
  }
  void note(std::string s) { notes_.push_back(std::move(s)); }

  bool passed() const { return failures_ == 0 && checks_ > 0; }
  std::string detail() const {
    std::ostringstream os;
    os << checks_ << " checks, " << failures_ << " failures";
    for (const auto& n : notes_) os << "; " << n;
    for (const auto& e : examples_) os << "; e.g. " << e;
    return os.str();
  }

 private:
  std::size_t checks_ = 0;
  std::size_t failures_ = 0;
  std::vector<std::string> examples_;
  std::vector<std::string> notes_;
};

struct Outcome {
  bool passed = false;
  std::string detail;
};

Outcome finish(const Tally& t) { return {t.passed(), t.detail()}; }

std::set<Composition> permutations_of(Composition c) {
  std::set<Composition> out;
  std::sort(c.parts.begin(), c.parts.end());
  do out.insert(c);
  while (std::next_permutation(c.parts.begin(), c.parts.end()));
  return out;
}

std::string str(const DecompositionTable& t) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& [nu, c] : t) {
    os << (first ? "" : ", ") << nu << ':' << c;
    first = false;
  }
  os << '}';
  return os.str();
}

Partition strip_zeros(Partition p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

Outcome clebsch_gordan() {
  Tally t;
  RootSystem rs(LieType{'A', 1});
  TensorOracle oracle(rs);
  for (std::int64_t r = 0; r <= 10; ++r) {
    for (std::int64_t s = 0; s <= 10; ++s) {
      DecompositionTable expected;
      for (std::int64_t j = 0; j <= std::min(r, s); ++j) expected[Weight{r + s - 2 * j}] = 1;
      const auto got = oracle.full_decomposition(Weight{r}, Weight{s});
      t.check(got == expected, [&] { return "V(" + std::to_string(r) + ")xV(" + std::to_string(s) + ") = " + str(got); });
    }
  }
  return finish(t);
}

Outcome dimension_monotonicity() {
  Tally t;
  for (const auto* name : {"A1", "A2", "B2", "G2"}) {
    RootSystem rs(LieType::parse(name));
    for (const auto& lambda : weights_in_box(rs.rank(), 3)) {
      for (std::size_t k = 1; k <= 3; ++k) {
        const auto p = build_poset(rs, lambda, k);
        std::vector<BigCount> dims;
        for (const auto& node : p.nodes) {
          dims.push_back(dim_product(rs, node.canonical));
          for (const auto& m : node.members)
            t.check(dim_product(rs, m) == dims.back(), [&] { return "class of " + node.canonical.str() + " has unequal dims"; });
        }
        for (std::size_t i = 0; i < p.nodes.size(); ++i)
          for (std::size_t j = 0; j < p.nodes.size(); ++j)
            if (p.less(i, j))
              t.check(dims[i] < dims[j], [&] {
                return std::string(name) + " " + p.nodes[i].canonical.str() + " < " + p.nodes[j].canonical.str() +
                       " but dims " + dims[i].str() + " vs " + dims[j].str();
              });
      }
    }
  }
  return finish(t);
}

Outcome sl2_covers() {
  Tally t;
  RootSystem rs(LieType{'A', 1});
  for (std::int64_t n = 0; n <= 12; ++n) {
    for (std::size_t k = 1; k <= 5; ++k) {
      const auto p = build_poset(rs, Weight{n}, k);
      const auto maxes = maximal_classes(p);
      const auto top = lambda_max_fundamental(1, n, 0, k);
      t.check(maxes.size() == 1 && p.find(rs, top) == maxes.front(),
              [&] { return "N=" + std::to_string(n) + " k=" + std::to_string(k) + " maximum is not " + top.str(); });
      for (const auto& [lo, hi] : p.cover_edges) {
        const auto& b = p.nodes[lo].canonical;
        bool found = false;
        for (std::size_t j1 = 1; j1 <= k && !found; ++j1) {
          for (std::size_t j2 = j1 + 1; j2 <= k && !found; ++j2) {
            try {
              found = p.find(rs, cover_move(b, j1, j2)) == hi;
            } catch (const PreconditionError&) {
            }
          }
        }
        t.check(found, [&] { return "cover " + b.str() + " < " + p.nodes[hi].canonical.str() + " is not a move"; });
      }
    }
  }
  return finish(t);
}

Outcome classes_are_orbits() {
  Tally t;
  auto check_poset = [&t](const RootSystem& rs, const PosetGraph& p) {
    for (const auto& node : p.nodes) {
      const auto orbit = permutations_of(node.canonical);
      const std::set<Composition> members(node.members.begin(), node.members.end());
      t.check(orbit == members, [&] { return rs.lie_type().str() + " class of " + node.canonical.str() + " is not an orbit"; });
    }
  };
  for (const auto* name : {"A1", "A2", "A3", "B2", "C3", "G2"}) {
    RootSystem rs(LieType::parse(name));
    for (std::size_t i = 0; i < rs.rank(); ++i)
      for (std::int64_t n = 0; n <= 8; ++n)
        for (std::size_t k = 1; k <= 4; ++k) check_poset(rs, build_poset(rs, n * rs.fundamental(i), k));
  }
  for (const auto* name : {"A1", "A2", "A3", "B2", "B3", "C3", "G2"}) {
    RootSystem rs(LieType::parse(name));
    for (const auto& lambda : weights_in_box(rs.rank(), 3)) check_poset(rs, build_poset(rs, lambda, 2));
  }
  RootSystem a2(LieType{'A', 2});
  const auto b = parse_composition("0,1;1,2;2,0");
  const auto m = parse_composition("0,2;1,0;2,1");
  t.check(equivalent(a2, b, m), [] { return "k = 3 example is not equivalent"; });
  t.check(!permutations_of(b).count(m), [] { return "k = 3 example lies in one S3 orbit"; });
  return finish(t);
}

Outcome k2_criterion_agrees() {
  Tally t;
  for (const auto* name : {"A2", "B2"}) {
    RootSystem rs(LieType::parse(name));
    for (const auto& lambda : weights_in_box(rs.rank(), 3)) {
      const auto comps = enumerate_compositions(rs, lambda, 2);
      for (const auto& b : comps)
        for (const auto& m : comps)
          t.check(k2_criterion(rs, b, m) == preceq(rs, b, m),
                  [&] { return std::string(name) + " " + b.str() + " vs " + m.str(); });
    }
  }
  return finish(t);
}

Outcome type_a_maximum() {
  Tally t;
  for (const auto* name : {"A2", "A3"}) {
    RootSystem rs(LieType::parse(name));
    for (const auto& lambda : weights_in_box(rs.rank(), 3)) {
      const auto p = build_poset(rs, lambda, 2);
      const auto top = lambda_max_typeA(rs, lambda);
      const auto maxes = maximal_classes(p);
      t.check(maxes.size() == 1 && p.find(rs, top) == maxes.front(),
              [&] { return std::string(name) + " lambda=" + lambda.str() + " maximum differs from " + top.str(); });
      const std::set<Partition> expected{strip_zeros(partition_from_weight(top.parts[0])),
                                         strip_zeros(partition_from_weight(top.parts[1]))};
      for (const auto& c : enumerate_compositions(rs, lambda, 2)) {
        const auto [rho1, rho2] =
            row_shuffle_partitions(conjugate(partition_from_weight(c.parts[0])), conjugate(partition_from_weight(c.parts[1])));
        const std::set<Partition> got{strip_zeros(conjugate(rho1)), strip_zeros(conjugate(rho2))};
        t.check(got == expected, [&] { return std::string(name) + " row shuffle of " + c.str() + " misses the maximum"; });
      }
    }
  }
  return finish(t);
}

Outcome ls_path_counts() {
  Tally t;
  const std::vector<std::pair<const char*, std::vector<std::size_t>>> cases{
      {"A2", {0, 1}}, {"A3", {0, 1, 2}}, {"C3", {0}}, {"D4", {0, 2, 3}}};
  for (const auto& [name, nodes] : cases) {
    RootSystem rs(LieType::parse(name));
    TensorOracle oracle(rs);
    const auto xis = weights_in_box(rs.rank(), 3);
    for (std::size_t node : nodes) {
      for (std::int64_t n = 1; n <= 4; ++n) {
        const Weight shape = n * rs.fundamental(node);
        const auto paths = enumerate_ls_paths(rs, shape);
        t.check(BigCount(paths.size()) == weyl_dim(rs, shape),
                [&] { return std::string(name) + " #B(" + shape.str() + ") = " + std::to_string(paths.size()); });
        for (const auto& xi : xis) {
          const auto counts = dominant_path_counts(paths, xi);
          const auto table = oracle.full_decomposition(shape, xi);
          std::map<Weight, BigCount> expected;
          for (const auto& [mu, c] : table) expected[mu] = c;
          t.check(counts == expected,
                  [&] { return std::string(name) + " shape " + shape.str() + " xi " + xi.str() + " path counts differ"; });
        }
      }
    }
  }
  return finish(t);
}

Outcome path_injection() {
  Tally t;
  for (const auto* name : {"A2", "A3"}) {
    RootSystem rs(LieType::parse(name));
    TensorOracle oracle(rs);
    const Weight w1 = rs.fundamental(0);
    for (std::int64_t s = 1; s <= 6; ++s) {
      for (std::int64_t r = 0; r < s; ++r) {
        const auto report = verify_prop_min(rs, r, s, 0);
        t.check(report.ok(), [&] { return std::string(name) + " r=" + std::to_string(r) + " s=" + std::to_string(s); });
        const auto lo = oracle.full_decomposition(r * w1, s * w1);
        const auto hi = oracle.full_decomposition((r + 1) * w1, (s - 1) * w1);
        for (const auto& e : report.entries) {
          const auto a = lo.count(e.mu) ? lo.at(e.mu) : 0;
          const auto b = hi.count(e.mu) ? hi.at(e.mu) : 0;
          t.check(static_cast<Multiplicity>(e.source) == a && static_cast<Multiplicity>(e.target) == b && a <= b, [&] {
            return std::string(name) + " mu=" + e.mu.str() + " counts " + std::to_string(e.source) + "/" +
                   std::to_string(e.target) + " oracle " + std::to_string(a) + "/" + std::to_string(b);
          });
        }
      }
    }
  }
  return finish(t);
}

Outcome tableaux_counts() {
  Tally t;
  RootSystem rs(LieType{'A', 2});
  TensorOracle oracle(rs);
  for (const auto& lambda : weights_in_box(2, 6)) {
    const auto ts = a2::enumerate_bt(lambda);
    t.check(BigCount(ts.size()) == weyl_dim(rs, lambda), [&] { return "#T(" + lambda.str() + ")"; });
    std::map<Weight, Multiplicity> by_weight;
    for (const auto& x : ts) ++by_weight[x.weight()];
    std::map<Weight, Multiplicity> expected;
    for (const auto& [w, m] : oracle.weights(lambda)) expected[w] = m;
    t.check(by_weight == expected, [&] { return "weight multiplicities of " + lambda.str(); });
  }
  for (const auto& lambda : weights_in_box(2, 4)) {
    const auto ts = a2::enumerate_bt(lambda);
    for (const auto& mu : weights_in_box(2, 4)) {
      std::map<Weight, Multiplicity> counts;
      for (const auto& x : ts) {
        const Weight nu = mu + x.weight();
        if (nu.is_dominant() && a2::satisfies_lr(x, mu, nu)) ++counts[nu];
      }
      const auto expected = oracle.full_decomposition(lambda, mu);
      t.check(counts == expected, [&] { return "LR tableaux for " + mu.str() + " x " + lambda.str(); });
    }
  }
  return finish(t);
}

Outcome a2_injections() {
  Tally t;
  RootSystem rs(LieType{'A', 2});
  TensorOracle oracle(rs);
  std::size_t covers = 0;
  for (const auto& lambda : weights_in_box(2, 4)) {
    const auto p = build_poset(rs, lambda, 2);
    for (const auto& [lo, hi] : p.cover_edges) {
      ++covers;
      const auto& b = p.nodes[lo].canonical;
      const auto& m = p.nodes[hi].canonical;
      std::optional<a2::CoverNormalForm> nf;
      try {
        nf = a2::cover_normal_form(rs, b, m);
      } catch (const StructuralError&) {
      }
      t.check(nf.has_value(), [&] { return "no normal form for " + b.str() + " < " + m.str(); });
      if (nf) {
        for (const auto& [nu, depth] : dominant_weights_below(rs, nf->lower.total())) {
          const auto r = a2::check_injection(*nf, nu);
          t.check(r.ok(), [&] { return "injection fails for " + b.str() + " < " + m.str() + " at nu=" + nu.str(); });
        }
      }
      const auto report = schur_compare(oracle, b, m);
      t.check(report.ok(), [&] { return "multiplicity drops from " + b.str() + " to " + m.str(); });
    }
  }
  std::ostringstream sink;
  const int code = cli::run({"schur-check", "--type", "A2", "--max-coord", "4", "--pairs", "covers"}, sink, sink);
  t.check(code == cli::kExitOk, [&] { return "schur-check exited " + std::to_string(code); });
  t.note(std::to_string(covers) + " cover pairs");
  return finish(t);
}

Outcome partial_sum_products() {
  Tally t;
  std::size_t zero_part_counterexamples = 0;
  // Weakly increasing sequences of length k with entries >= lo summing to n.
  std::function<void(std::int64_t, std::size_t, std::int64_t, std::vector<std::int64_t>&, std::vector<std::vector<std::int64_t>>&)>
      gen = [&](std::int64_t n, std::size_t k, std::int64_t lo, std::vector<std::int64_t>& cur,
                std::vector<std::vector<std::int64_t>>& out) {
        if (cur.size() == k) {
          if (n == 0) out.push_back(cur);
          return;
        }
        const auto left = static_cast<std::int64_t>(k - cur.size());
        for (std::int64_t v = lo; v * left <= n; ++v) {
          cur.push_back(v);
          gen(n - v, k, v, cur, out);
          cur.pop_back();
        }
      };
  auto dominated = [](const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
    std::int64_t sa = 0, sb = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      sa += a[i];
      sb += b[i];
      if (sa > sb) return false;
    }
    return true;
  };
  auto product = [](const std::vector<std::int64_t>& a) {
    std::int64_t p = 1;
    for (auto v : a) p *= v;
    return p;
  };
  for (std::int64_t n = 1; n <= 20; ++n) {
    for (std::size_t k = 1; k <= 6; ++k) {
      for (std::int64_t lo : {1, 0}) {
        std::vector<std::vector<std::int64_t>> parts;
        std::vector<std::int64_t> cur;
        gen(n, k, lo, cur, parts);
        for (const auto& a : parts) {
          for (const auto& b : parts) {
            if (!dominated(a, b)) continue;
            const auto pa = product(a);
            const auto pb = product(b);
            t.check(pa <= pb, [&] { return "product inequality fails"; });
            if (lo == 1)
              t.check((pa == pb) == (a == b), [&] { return "equality clause fails for positive parts"; });
            else if ((pa == pb) != (a == b))
              ++zero_part_counterexamples;
          }
        }
      }
    }
  }
  t.note("equality clause asserted for positive parts; " + std::to_string(zero_part_counterexamples) +
         " pairs with zero parts have equal products without being equal");
  return finish(t);
}

Outcome oracle_consistency() {
  Tally t;
  for (const auto* name : {"A1", "A2", "B2", "G2"}) {
    RootSystem rs(LieType::parse(name));
    TensorOracle oracle(rs);
    const auto box = weights_in_box(rs.rank(), 3);
    for (const auto& lambda : box) {
      for (const auto& mu : box) {
        const auto klimyk = oracle.full_decomposition(lambda, mu);
        const Weight& small = weyl_dim(rs, lambda) <= weyl_dim(rs, mu) ? lambda : mu;
        const Weight& large = small == lambda ? mu : lambda;
        const auto subtraction = oracle.decomposition_by_subtraction(small, large);
        t.check(klimyk == subtraction, [&] { return std::string(name) + " methods differ for " + lambda.str() + " x " + mu.str(); });
        t.check(klimyk == oracle.full_decomposition(mu, lambda),
                [&] { return std::string(name) + " not commutative for " + lambda.str() + " x " + mu.str(); });
        DecompositionTable dual_expected;
        for (const auto& [nu, c] : klimyk) dual_expected[rs.minus_w0(nu)] = c;
        t.check(oracle.full_decomposition(rs.minus_w0(lambda), rs.minus_w0(mu)) == dual_expected,
                [&] { return std::string(name) + " duality fails for " + lambda.str() + " x " + mu.str(); });
        t.check(decomposition_dimension(rs, klimyk) == weyl_dim(rs, lambda) * weyl_dim(rs, mu),
                [&] { return std::string(name) + " dimension not conserved"; });
      }
    }
  }
  return finish(t);
}

Outcome monotonicity_sweep() {
  std::ostringstream detail;
  bool ran = true;
  for (const auto* name : {"B2", "G2"}) {
    for (const auto* pairs : {"covers", "all"}) {
      std::ostringstream out, err;
      const int code = cli::run({"schur-check", "--type", name, "--max-coord", "2", "--pairs", pairs}, out, err);
      if (code != cli::kExitOk && code != cli::kExitViolation) ran = false;
      const auto j = Json::parse(out.str(), nullptr, false);
      detail << name << '/' << pairs << ": exit " << code;
      if (!j.is_discarded() && j.contains("violations"))
        detail << ", " << j["pairs"].get<std::size_t>() << " pairs, " << j["violations"].get<std::size_t>() << " violations";
      detail << "; ";
    }
  }
  return {ran, detail.str()};
}

struct Criterion {
  int id;
  const char* title;
  double budget;
  bool asserted;
  Outcome (*run)();
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all{
      {1, "Clebsch-Gordan decomposition for sl2, r,s <= 10", 1, true, clebsch_gordan},
      {2, "dimension strictly increases along the poset (A1,A2,B2,G2)", 60, true, dimension_monotonicity},
      {3, "sl2 multiples: unique maximum and covers are moves", 60, true, sl2_covers},
      {4, "equivalence classes are S_k orbits; k=3 counterexample", 60, true, classes_are_orbits},
      {5, "k=2 product criterion equals the preorder (A2,B2)", 30, true, k2_criterion_agrees},
      {6, "type A maximum and row shuffle correspondence (A2,A3)", 60, true, type_a_maximum},
      {7, "LS path counts match dimensions and tensor multiplicities", 300, true, ls_path_counts},
      {8, "path injection r omega_1 -> (r+1) omega_1 (A2,A3)", 120, true, path_injection},
      {9, "A2 tableaux counts match dimensions and multiplicities", 120, true, tableaux_counts},
      {10, "A2 cover pairs: normal form, tableau injection, multiplicities", 300, true, a2_injections},
      {11, "partial-sum dominance implies product inequality", 30, true, partial_sum_products},
      {12, "oracle self-consistency (two methods, symmetry, duality)", 60, true, oracle_consistency},
      {13, "multiplicity monotonicity sweep for B2 and G2 (report only)", 300, false, monotonicity_sweep},
  };
  return all;
}

}  // namespace

std::vector<int> criterion_ids() {
  std::vector<int> ids;
  for (const auto& c : criteria()) ids.push_back(c.id);
  return ids;
}

CriterionResult run_criterion(int id) {
  const auto& all = criteria();
  auto it = std::find_if(all.begin(), all.end(), [id](const Criterion& c) { return c.id == id; });
  if (it == all.end()) throw PreconditionError("no acceptance criterion " + std::to_string(id));
  CriterionResult r;
  r.id = it->id;
  r.title = it->title;
  r.asserted = it->asserted;
  r.budget_seconds = it->budget;
  const auto start = std::chrono::steady_clock::now();
  try {
    const Outcome o = it->run();
    r.passed = o.passed;
    r.detail = o.detail;
  } catch (const std::exception& e) {
    r.passed = false;
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (r.seconds > r.budget_seconds) {
    r.passed = false;
    r.detail += "; over time budget";
  }
  return r;
}

std::vector<CriterionResult> run_all(const std::vector<int>& ids, std::ostream& out) {
  std::vector<CriterionResult> results;
  for (int id : ids.empty() ? criterion_ids() : ids) {
    results.push_back(run_criterion(id));
    out << format(results.back()) << std::endl;
  }
  return results;
}

std::string format(const CriterionResult& r) {
  std::ostringstream os;
  const char* tag = !r.asserted ? "REPORT" : r.passed ? "PASS" : "FAIL";
  os << std::left << std::setw(7) << tag << std::right << std::setw(2) << r.id << "  " << r.title << "  ("
     << std::fixed << std::setprecision(2) << r.seconds << " s / " << std::setprecision(0) << r.budget_seconds
     << " s)  " << r.detail;
  return os.str();
}

bool all_passed(const std::vector<CriterionResult>& results) {
  return std::all_of(results.begin(), results.end(), [](const CriterionResult& r) { return !r.asserted || r.passed; });
}

}  // namespace tensorposet::acceptance
