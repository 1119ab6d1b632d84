#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "tensorposet/lspath.hpp"
#include "tensorposet/oracle.hpp"
#include "tensorposet/poset.hpp"
#include "tensorposet/rootsys.hpp"
#include "tensorposet/tableaux_a2.hpp"

namespace tensorposet {

using Json = nlohmann::ordered_json;

inline constexpr int kJsonSchemaVersion = 1;

Json to_json(const Weight& w);
Json to_json(const Composition& c);
Json to_json(const Rational& q);
Json to_json(const LSPath& p);
Json to_json(const a2::Tab5& t);
Json to_json(const DecompositionTable& t);
Json to_json(const SchurReport& r);

/// {"schema", "type", "lambda", "k", "nodes": [...], "edges": [[lo, hi], ...]}.
Json poset_to_json(const RootSystem& rs, const PosetGraph& p);
/// Graphviz digraph with one node per class labelled by its canonical parts.
std::string poset_to_dot(const PosetGraph& p);

}  // namespace tensorposet
