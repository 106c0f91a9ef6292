#pragma once

#include "pisys/integer.hpp"

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pisys {

// Subdiagram enumeration is exponential in the rank; this is the default
// ceiling for anything that enumerates vertex subsets or builds named diagrams.
inline constexpr int kDefaultRankCap = 26;

// A generalized Cartan matrix. Always valid once constructed: 2 on the
// diagonal, nonpositive off the diagonal, and a_ij == 0 iff a_ji == 0.
// Vertex order is part of the identity of the matrix.
class Gcm {
 public:
  Gcm() = default;

  // Throws Error{NonSquare | DiagonalNotTwo | PositiveOffDiagonal | AsymmetricZero}.
  static Gcm from_rows(const std::vector<std::vector<long long>>& rows, std::vector<std::string> labels = {});

  int rank() const noexcept { return n_; }
  int operator()(int i, int j) const { return a_[static_cast<std::size_t>(i * n_ + j)]; }
  std::vector<std::vector<long long>> rows() const;

  const std::vector<std::string>& labels() const noexcept { return labels_; }

  bool symmetric() const;
  bool adjacent(int i, int j) const { return i != j && (*this)(i, j) != 0; }
  std::vector<int> neighbors(int i) const;

  // Entry-wise equality; labels are cosmetic.
  friend bool operator==(const Gcm& x, const Gcm& y) { return x.n_ == y.n_ && x.a_ == y.a_; }

 private:
  int n_ = 0;
  std::vector<int> a_;
  std::vector<std::string> labels_;
};

Gcm validate_gcm(const std::vector<std::vector<long long>>& matrix);

// Coprime positive integers d with d_i a_ij = d_j a_ji (each connected
// component is scaled to be coprime on its own).
struct Symmetrizer {
  std::vector<Int> d;
};

// Throws Error{NotSymmetrizable} when a cycle constraint fails.
Symmetrizer symmetrize(const Gcm& a);

// (alpha_i, alpha_j) = d_i a_ij.
class BilinearForm {
 public:
  explicit BilinearForm(const Gcm& a);
  BilinearForm(const Gcm& a, const Symmetrizer& d);

  int rank() const noexcept { return n_; }
  const Int& gram(int i, int j) const { return gram_[static_cast<std::size_t>(i * n_ + j)]; }
  Int operator()(const Coeffs& x, const Coeffs& y) const;

 private:
  int n_ = 0;
  std::vector<Int> gram_;
};

enum class TypeKind { Finite, Affine, Indefinite };

std::string_view kind_name(TypeKind k);

struct ComponentClass {
  VertexSet vertices;
  TypeKind kind = TypeKind::Finite;
  Coeffs delta;  // null root in ambient coordinates when affine, else empty
  bool hyperbolic = false;
};

struct GcmClass {
  // For a decomposable matrix: Finite if every component is, Indefinite if
  // any component is, otherwise Affine (with `delta` left empty).
  TypeKind kind = TypeKind::Finite;
  bool hyperbolic = false;
  Coeffs delta;
  std::vector<ComponentClass> components;

  bool indecomposable() const { return components.size() == 1; }
};

// Throws Error{NotSymmetrizable}.
GcmClass classify(const Gcm& a);

std::vector<VertexSet> components(const Gcm& a);
// Principal submatrix on `s` (in the order given). Throws Error{IndexOutOfRange}.
Gcm subdiagram(const Gcm& a, const VertexSet& s);
// Vertices outside y with no edge into y.
VertexSet perp(const Gcm& a, const VertexSet& y);

// Vertices component by component, each in breadth-first order from its
// smallest vertex.
std::vector<int> bfs_order(const Gcm& a);

// Calls visit(s) for every connected vertex set s whose smallest vertex is
// `root` (ESU enumeration); s is unsorted. Stops early when visit returns
// false. Needs rank <= 64.
void for_each_connected_subset(const Gcm& a, int root, const std::function<bool(const VertexSet&)>& visit);

// A bijection sigma with b[sigma i][sigma j] == a[i][j], if one exists.
std::optional<std::vector<int>> diagram_isomorphic(const Gcm& a, const Gcm& b);
std::vector<std::vector<int>> diagram_automorphisms(const Gcm& a);

// Coprime positive kernel vector. Throws Error{WrongClass} unless affine.
Coeffs null_root(const Gcm& y);
// Throws Error{WrongClass} unless finite and indecomposable.
Coeffs highest_root(const Gcm& f);
// All positive roots of a finite-type matrix, sorted by height then coefficients.
std::vector<Coeffs> finite_positive_roots(const Gcm& f);

}  // namespace pisys
