#pragma once

#include "pisys/gcm.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pisys {

// Named diagrams.
//
//   <L><n>      finite type, L in A..G, vertices in Bourbaki order 0..n-1
//   <L><n>~     untwisted affine X_n^(1); vertex n is the affine vertex alpha_0
//   <L><n>+     same as <L><n>~
//   <L><n>++    overextension (L in A, D, E); vertex n is alpha_0, vertex n+1 the
//               overextended vertex attached to it
//   E9, E10, E11  aliases for E8~, E8++ and E8++ with one more vertex on the
//               overextended end (vertex 10, attached to vertex 9)
//   hyp:fig2:<k>  the k-th (1..8) simply-laced hyperbolic diagram without an
//               overextended subdiagram
//
// Throws Error{UnknownName} or Error{RankOutOfRange}.
Gcm named_diagram(std::string_view name, int rank_cap = kDefaultRankCap);

// [[2,-a],[-a,2]], hyperbolic for a >= 3.
Gcm hyperbolic_rank2(int a);

inline constexpr int kFig2Count = 8;

struct NamedMatch {
  std::string name;
  // bijection[i] = catalog vertex matched to vertex i of the input
  std::vector<int> bijection;
};

// Catalog names of the given rank in preference order: finite, affine,
// overextended, E11, then the hyp:fig2 entries.
std::vector<std::string> catalog_names(int rank);

// First catalog name whose matrix is isomorphic to `m`.
std::optional<NamedMatch> identify_diagram(const Gcm& m);

}  // namespace pisys
