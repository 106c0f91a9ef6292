#pragma once

#include "pisys/gcm.hpp"
#include "pisys/options.hpp"
#include "pisys/pisystem.hpp"

#include <optional>
#include <string>
#include <vector>

namespace pisys {

// Z = Y u {p} with Y affine, (delta_Y, alpha_p) = -1, q the unique vertex of Y
// joined to p, and K = Y \ {q} the finite part. Vertex numbers and vectors are
// in the coordinates of whichever diagram the decomposition was taken in.
struct ExtDecomposition {
  int p = -1;
  VertexSet affine_part;  // Y
  int q = -1;
  VertexSet finite_part;  // K
  Coeffs delta;           // delta_Y, zero outside Y
  Coeffs theta;           // highest root of K, zero outside K

  friend bool operator==(const ExtDecomposition&, const ExtDecomposition&) = default;
};

// Throws Error{NotSimplyLaced | Decomposable | AmbiguousExt}.
std::optional<ExtDecomposition> ext_decompose(const Gcm& z);

// Decomposition of the subdiagram on `vertices`, reported in the coordinates
// of `x`.
std::optional<ExtDecomposition> ext_decompose_in(const Gcm& x, const VertexSet& vertices);

struct ExtSubdiagram {
  VertexSet vertices;
  ExtDecomposition decomposition;  // ambient coordinates
  std::string type;                // catalog name of the subdiagram
};

// Every vertex subset of x that is of Ext type, sorted by vertex set.
// Throws Error{NotSimplyLaced | RankCapExceeded}.
std::vector<ExtSubdiagram> ext_subdiagrams(const Gcm& x, const Options& opts = {});

// {theta, delta_Y - theta, alpha_p} for the Ext subdiagram on `z`.
// Throws Error{NotExt}.
PiSystem canonical_pi(const RootSystemPtr& x, const VertexSet& z);

// Sigma, delta_Y - theta_Sigma, alpha_p, where theta_Sigma is the image of
// the highest root of M(Sigma). Throws Error{NotExt | NotInFinitePart}.
PiSystem canonical_pi_general(const RootSystemPtr& x, const VertexSet& z, const std::vector<Coeffs>& finite_sigma);

struct CatalogEntry {
  std::string name;
  Gcm gcm;
  bool is_ext = false;
};

// The hyperbolic Ext diagrams A1++..A7++, D4++..D8++, E6++..E8++ and the
// eight hyp:fig2 entries. The rank-2 family is hyperbolic_rank2(a), a >= 3.
std::vector<CatalogEntry> hyperbolic_sl_catalog();

}  // namespace pisys
