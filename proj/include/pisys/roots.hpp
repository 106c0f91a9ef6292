#pragma once

#include "pisys/gcm.hpp"
#include "pisys/integer.hpp"

#include <cstddef>
#include <memory>
#include <string_view>
#include <utility>
#include <vector>

namespace pisys {

enum class RootClass { Real, Imaginary, NotRoot, Zero };

std::string_view root_class_name(RootClass c);

// A word in the simple reflections. Letters act left to right:
// apply_word([i, j], g) = s_j(s_i(g)), so concatenation is composition in
// order of application and reversing a word inverts it.
struct WeylWord {
  std::vector<int> letters;

  std::size_t size() const noexcept { return letters.size(); }
  bool empty() const noexcept { return letters.empty(); }
  WeylWord then(const WeylWord& next) const;
  WeylWord inverse() const;
  friend bool operator==(const WeylWord&, const WeylWord&) = default;
};

struct Root {
  Coeffs coeffs;
  Int norm;  // (beta, beta) under the canonical symmetrizer

  friend bool operator==(const Root& a, const Root& b) { return a.coeffs == b.coeffs; }
};

// Outcome of the height descent used for membership.
struct Descent {
  int sign = 0;       // sign of the input (0 for zero or mixed)
  WeylWord word;      // reflections applied to |gamma|
  Coeffs terminal;    // where the descent stopped
  RootClass result = RootClass::NotRoot;
};

inline constexpr std::size_t kDefaultRootBudget = 2'000'000;

// Root system engine over a fixed symmetrizable GCM. Immutable after
// construction and safe to share between threads.
//
// Membership uses height descent on |gamma|: while |gamma| is not a simple
// root, reflect in the smallest i with <alpha_i^vee, gamma> > 0. That strictly
// lowers the height of a positive vector, so the loop ends after at most
// height(gamma) steps. A positive root other than alpha_i stays positive under
// s_i, so a reflection producing a negative coordinate proves gamma is not a
// root. The descent stops either at a simple root (real), in the fundamental
// set {<alpha_i^vee, gamma> <= 0 for all i, connected support} (imaginary), or
// at a point with disconnected support (not a root).
class RootSystem {
 public:
  // Throws Error{NotSymmetrizable}.
  explicit RootSystem(Gcm a);

  const Gcm& cartan() const noexcept { return a_; }
  int rank() const noexcept { return a_.rank(); }
  const Symmetrizer& symmetrizer() const noexcept { return d_; }
  const BilinearForm& form() const noexcept { return form_; }

  Int inner(const Coeffs& x, const Coeffs& y) const { return form_(x, y); }
  Int norm(const Coeffs& x) const { return form_(x, x); }
  // <alpha_i^vee, g> = sum_j a_ij g_j
  Int coroot_pairing(int i, const Coeffs& g) const;
  // <beta^vee, gamma> = 2 (beta, gamma) / (beta, beta).
  // Throws Error{IsotropicCoroot} for norm 0 and Error{NotRealRoot} for negative norm.
  Int pairing(const Coeffs& beta, const Coeffs& gamma) const;

  void reflect_in_place(int i, Coeffs& g) const;
  Coeffs reflect(int i, Coeffs g) const;
  Coeffs apply_word(const WeylWord& w, Coeffs g) const;
  // Word for the reflection s_beta of a real root beta.
  WeylWord reflection_word(const Coeffs& beta) const;

  Descent descend(const Coeffs& g) const;
  RootClass classify_element(const Coeffs& g) const { return descend(g).result; }
  bool is_root(const Coeffs& g) const;
  bool is_real_root(const Coeffs& g) const { return classify_element(g) == RootClass::Real; }

  Root make_root(Coeffs c) const;

  // All positive real roots of height 1..max_height, ordered by height then
  // coefficients. Throws Error{BudgetExceeded} when more than `budget` roots
  // (real and imaginary) are generated along the way.
  std::vector<Root> enumerate_real_roots(int max_height, std::size_t budget = kDefaultRootBudget) const;

  // Largest (p, q) with gamma - p beta, ..., gamma + q beta all roots or zero.
  // Throws Error{NotARoot} when gamma is not a root.
  std::pair<int, int> root_string(const Coeffs& beta, const Coeffs& gamma) const;

  Coeffs simple_root(int i) const { return unit_vector(static_cast<std::size_t>(rank()), static_cast<std::size_t>(i)); }
  Coeffs zero() const { return Coeffs(static_cast<std::size_t>(rank()), Int(0)); }

 private:
  Gcm a_;
  Symmetrizer d_;
  BilinearForm form_;
  std::vector<std::vector<int>> adjacency_;
};

using RootSystemPtr = std::shared_ptr<const RootSystem>;

inline RootSystemPtr make_root_system(Gcm a) { return std::make_shared<const RootSystem>(std::move(a)); }

// True if the support of g is connected in the Dynkin diagram of `a`.
bool connected_support(const Gcm& a, const Coeffs& g);

}  // namespace pisys
