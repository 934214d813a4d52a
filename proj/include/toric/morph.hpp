#pragma once

#include <map>
#include <optional>
#include <string>

#include "toric/toric.hpp"

namespace toric {

// Flip class of the quotient of an acyclic-quotient member, over
// contract_graph(G, pi). All members with acyclic quotients must yield
// torically equivalent quotients (Errc::IllDefinedQuotient otherwise);
// Errc::NotAQuotientPartition when no member quotient is acyclic.
ToricPoset toric_quotient(const ToricPoset& p, const SetPartition& pi,
                          int cap = kDefaultVertexCap);

// L_tor(ext) is contained in L_tor(p); both over the same vertex set.
bool is_toric_extension(const ToricPoset& p, const ToricPoset& ext,
                        int cap = kDefaultVertexCap); // Errc::VertexSetMismatch

// Same arcs over the vertex set enlarged by isolated vertices.
ToricPoset include(const ToricPoset& p, const std::vector<std::string>& extra,
                   int cap = kDefaultVertexCap); // Errc::LabelCollision

// A vertex bijection carrying the toric closure graph of a onto that of b
// and the closure flip class onto the closure flip class; lexicographically
// least such bijection, or nullopt. Errc::CapExceeded above 8 vertices.
std::optional<std::map<std::string, std::string>>
toric_isomorphic(const ToricPoset& a, const ToricPoset& b, int cap = 8);

} // namespace toric
