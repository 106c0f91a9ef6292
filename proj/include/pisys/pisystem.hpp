#pragma once

#include "pisys/catalog.hpp"
#include "pisys/gcm.hpp"
#include "pisys/roots.hpp"

#include <optional>
#include <string_view>
#include <vector>

namespace pisys {

enum class Sign { Positive, Negative, Both };

std::string_view sign_name(Sign s);

// An ordered list of distinct real roots whose pairwise differences are not
// roots, together with its type matrix M[i][j] = <beta_i^vee, beta_j>.
// Only check_pi_system creates one from raw vectors; the derived
// constructors (Weyl action, negation, subsets) preserve the invariants.
class PiSystem {
 public:
  const RootSystem& ambient() const noexcept { return *ambient_; }
  const RootSystemPtr& ambient_ptr() const noexcept { return ambient_; }
  const std::vector<Root>& roots() const noexcept { return roots_; }
  std::size_t size() const noexcept { return roots_.size(); }
  const Coeffs& operator[](std::size_t i) const { return roots_[i].coeffs; }
  std::vector<Coeffs> coeffs() const;

  const Gcm& type_matrix() const noexcept { return type_; }
  bool linearly_independent() const noexcept { return independent_; }

  PiSystem transformed(const WeylWord& w) const;
  PiSystem negated() const;
  // Elements at `indices`, in that order.
  PiSystem subset(const std::vector<int>& indices) const;
  // Elements sorted by height then coefficients; used as a set key.
  std::vector<Coeffs> sorted_coeffs() const;

 private:
  friend PiSystem check_pi_system(RootSystemPtr ambient, std::vector<Coeffs> roots);
  PiSystem(RootSystemPtr ambient, std::vector<Coeffs> roots);

  RootSystemPtr ambient_;
  std::vector<Root> roots_;
  Gcm type_;
  bool independent_ = false;
};

// Throws Error{NotRealRoot(i) | DuplicateRoot(i,j) | DifferenceIsRoot(i,j)}
// (first violation in index order) or Error{PreconditionMismatch} for an
// empty list or a wrong vector length.
PiSystem check_pi_system(RootSystemPtr ambient, std::vector<Coeffs> roots);

// Name of M(Sigma) in the catalog, with the matching vertex bijection.
std::optional<NamedMatch> pi_type(const PiSystem& sigma);

// Linear extension alpha_i(B) -> beta_i. Throws Error{PreconditionMismatch}
// when x has the wrong length.
Coeffs q_sigma(const PiSystem& sigma, const Coeffs& x);

// A positive imaginary root of an indecomposable GCM that is not of finite
// type: the null root when affine, otherwise an element of the fundamental set.
Coeffs imaginary_witness(const Gcm& b);

struct Normalization {
  WeylWord word;
  Sign sign = Sign::Positive;
  PiSystem system;  // word applied to the input; every element has one sign
};

// Reflects in wrong-sign elements (first index first) until the system is
// homogeneous. Finite type is oriented positive and reports Sign::Both.
// Throws Error{NotLinearlyIndependent | DecomposableType}.
Normalization sign_normalize(const PiSystem& sigma);

// Sign of q_sigma(delta') for one positive imaginary root delta' of M(Sigma);
// Sign::Both for finite type. Same errors as sign_normalize.
Sign positivity(const PiSystem& sigma);

struct AffineSupport {
  VertexSet subdiagram;  // Y
  WeylWord word;         // w with w(delta_Sigma) = k delta_Y
  Int k;
};

// Throws Error{NotAffineType | NotLinearlyIndependent}.
AffineSupport locate_affine_support(const PiSystem& sigma);

// {alpha + 6 p delta_Y}. Throws Error{NotSupportedInY} or Error{WrongClass}
// when y is not an affine subdiagram.
PiSystem shift_family(const PiSystem& sigma, const VertexSet& y, long long p);

struct SimpleReduction {
  WeylWord word;  // letters from Y and its perp
  int vertex = -1;
};

// Descent of beta within W(Y u Y^perp) to a simple root alpha_p with
// (delta_Y, alpha_p) = -1. Ambient must be simply-laced.
// Throws Error{WrongPairing | NotSimplyLaced | NotRealRoot | WrongClass}.
SimpleReduction reduce_to_simple(const RootSystem& x, const Coeffs& beta, const VertexSet& y);

// Word in W_J carrying beta to zeta, where zeta lists the coefficients of
// beta outside J (in increasing vertex order).
// Throws Error{EmptyOrbitClass} when zeta is not a root of the complement of
// J, Error{PreconditionMismatch} when beta does not have the required shape.
WeylWord parabolic_orbit_reduce(const RootSystem& x, const Coeffs& beta, const VertexSet& j, const Coeffs& zeta);

// q_{sigma1}(sigma2). `bijection[i]` names the element of sigma1 standing for
// vertex i of sigma2's ambient; without it the ambient of sigma2 must equal
// M(sigma1) exactly. The result is re-validated from scratch.
// Throws Error{TypeMismatch} plus anything check_pi_system throws.
PiSystem compose(const PiSystem& sigma1, const PiSystem& sigma2,
                 const std::optional<std::vector<int>>& bijection = std::nullopt);

}  // namespace pisys
