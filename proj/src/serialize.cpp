#include "tensorposet/serialize.hpp"

#include <sstream>

namespace tensorposet {

Json to_json(const Weight& w) { return Json(w.vec()); }

Json to_json(const Composition& c) {
  Json out = Json::array();
  for (const auto& p : c.parts) out.push_back(to_json(p));
  return out;
}

Json to_json(const Rational& q) {
  if (q.denominator() == 1) return std::to_string(q.numerator());
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

Json to_json(const LSPath& p) {
  Json nus = Json::array();
  for (const auto& nu : p.nus) nus.push_back(to_json(nu));
  Json breaks = Json::array();
  for (const auto& a : p.breaks) breaks.push_back(to_json(a));
  return Json{{"nus", nus}, {"breaks", breaks}};
}

Json to_json(const a2::Tab5& t) { return Json::array({t.s11, t.s12, t.s13, t.s22, t.s23}); }

Json to_json(const DecompositionTable& t) {
  Json out = Json::array();
  for (const auto& [nu, c] : t) out.push_back(Json{{"nu", to_json(nu)}, {"mult", c}});
  return out;
}

Json to_json(const SchurReport& r) {
  Json entries = Json::array();
  for (const auto& e : r.entries)
    entries.push_back(Json{{"nu", to_json(e.nu)}, {"c_lo", e.lower}, {"c_hi", e.upper}, {"violation", e.violation}});
  return Json{{"pair", Json::array({to_json(r.lower), to_json(r.upper)})},
              {"violations", r.violations},
              {"entries", entries}};
}

Json poset_to_json(const RootSystem& rs, const PosetGraph& p) {
  Json nodes = Json::array();
  for (std::size_t i = 0; i < p.nodes.size(); ++i) {
    const auto& n = p.nodes[i];
    Json members = Json::array();
    for (const auto& m : n.members) members.push_back(to_json(m));
    nodes.push_back(Json{{"index", i},
                         {"canonical", to_json(n.canonical)},
                         {"members", members},
                         {"signature", n.signature.digest()}});
  }
  Json edges = Json::array();
  for (const auto& [lo, hi] : p.cover_edges) edges.push_back(Json::array({lo, hi}));
  return Json{{"schema", kJsonSchemaVersion}, {"type", rs.lie_type().str()}, {"lambda", to_json(p.lambda)},
              {"k", p.k},          {"nodes", nodes},                       {"edges", edges}};
}

std::string poset_to_dot(const PosetGraph& p) {
  std::ostringstream os;
  os << "digraph poset {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < p.nodes.size(); ++i) {
    os << "  n" << i << " [label=\"";
    const auto& parts = p.nodes[i].canonical.parts;
    for (std::size_t j = 0; j < parts.size(); ++j) os << (j ? " " : "") << parts[j];
    os << "\"];\n";
  }
  for (const auto& [lo, hi] : p.cover_edges) os << "  n" << lo << " -> n" << hi << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace tensorposet
