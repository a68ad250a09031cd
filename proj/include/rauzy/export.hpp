#pragma once

#include <json.hpp>

#include <string>

#include "rauzy/topology.hpp"

namespace rauzy {

/// {"edges":[{"from":1,"prefix":0,"to":1},...]}
nlohmann::json to_json(const PrefixSuffixGraph& g);
std::string to_dot(const PrefixSuffixGraph& g);

/// Vertices {"i","x","j"} plus "name" when named; edges {"from","p","pp","to"}.
nlohmann::json to_json(const BoundaryGraph& g);
std::string to_dot(const BoundaryGraph& g, const std::string& title = "G");

/// States with name, number and omax; edges {"from","to","p1","p2","order"}.
nlohmann::json to_json(const OrderedGraph& g);
std::string to_dot(const OrderedGraph& g);

nlohmann::json to_json(const OrderedGraph& g, const ProductAutomaton& a);
std::string to_dot(const OrderedGraph& g, const ProductAutomaton& a);

/// {"lambda","r","u"}
nlohmann::json to_json(const PerronData& d);

/// beta, alphas, discriminant, conjugate kind, bound, precision.
nlohmann::json info_json(const Embedding& emb);

nlohmann::json to_json(const DigitSeq& d);
nlohmann::json walk_json(const OrderedGraph& g, const Walk& w);
nlohmann::json to_json(const OrderedGraph& g, const Witness& w);
nlohmann::json to_json(const OrderedGraph& g, const DiskEvidence& e);

} // namespace rauzy
