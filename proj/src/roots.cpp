#include "pisys/roots.hpp"

#include "pisys/error.hpp"

#include <algorithm>
#include <unordered_set>

namespace pisys {

std::string_view root_class_name(RootClass c) {
  switch (c) {
    case RootClass::Real: return "real";
    case RootClass::Imaginary: return "imaginary";
    case RootClass::NotRoot: return "not-a-root";
    case RootClass::Zero: return "zero";
  }
  return "?";
}

WeylWord WeylWord::then(const WeylWord& next) const {
  WeylWord w{letters};
  w.letters.insert(w.letters.end(), next.letters.begin(), next.letters.end());
  return w;
}

WeylWord WeylWord::inverse() const { return WeylWord{std::vector<int>(letters.rbegin(), letters.rend())}; }

bool connected_support(const Gcm& a, const Coeffs& g) {
  VertexSet s = support(g);
  if (s.empty()) return false;
  std::vector<int> stack{s.front()};
  std::vector<bool> seen(static_cast<std::size_t>(a.rank()), false);
  seen[s.front()] = true;
  std::size_t reached = 0;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    ++reached;
    for (int w : s)
      if (!seen[w] && a.adjacent(v, w)) {
        seen[w] = true;
        stack.push_back(w);
      }
  }
  return reached == s.size();
}

RootSystem::RootSystem(Gcm a) : a_(std::move(a)), d_(symmetrize(a_)), form_(a_, d_) {
  adjacency_.resize(static_cast<std::size_t>(a_.rank()));
  for (int i = 0; i < a_.rank(); ++i) adjacency_[i] = a_.neighbors(i);
}

Int RootSystem::coroot_pairing(int i, const Coeffs& g) const {
  Int c = 2 * g[i];
  for (int j : adjacency_[i])
    if (g[j] != 0) c += a_(i, j) * g[j];
  return c;
}

Int RootSystem::pairing(const Coeffs& beta, const Coeffs& gamma) const {
  Int nb = norm(beta);
  if (nb == 0) throw Error(Errc::IsotropicCoroot, "coroot of an isotropic element is undefined");
  if (nb < 0) throw Error(Errc::NotRealRoot, "pairing needs a real root (positive norm)");
  Int num = 2 * inner(beta, gamma);
  if (num % nb != 0) throw Error(Errc::NotRealRoot, "pairing is not integral: first argument is not a real root");
  return num / nb;
}

void RootSystem::reflect_in_place(int i, Coeffs& g) const { g[i] -= coroot_pairing(i, g); }

Coeffs RootSystem::reflect(int i, Coeffs g) const {
  reflect_in_place(i, g);
  return g;
}

Coeffs RootSystem::apply_word(const WeylWord& w, Coeffs g) const {
  for (int i : w.letters) {
    if (i < 0 || i >= rank()) throw Error(Errc::IndexOutOfRange, "reflection index out of range", {i});
    reflect_in_place(i, g);
  }
  return g;
}

Descent RootSystem::descend(const Coeffs& g) const {
  Descent d;
  if (is_zero(g)) {
    d.result = RootClass::Zero;
    d.terminal = g;
    return d;
  }
  d.sign = sign_of(g);
  if (d.sign == 0) {
    d.result = RootClass::NotRoot;
    d.terminal = g;
    return d;
  }
  Coeffs cur = d.sign > 0 ? g : negated(g);
  const int n = rank();
  for (;;) {
    // simple root?
    int nonzero = -1;
    bool single = true;
    for (int i = 0; i < n && single; ++i) {
      if (cur[i] == 0) continue;
      if (nonzero >= 0 || cur[i] != 1) single = false;
      nonzero = i;
    }
    if (single) {
      d.result = RootClass::Real;
      break;
    }
    int step = -1;
    Int c;
    for (int i = 0; i < n; ++i) {
      c = coroot_pairing(i, cur);
      if (c > 0) {
        step = i;
        break;
      }
    }
    if (step < 0) {
      d.result = connected_support(a_, cur) ? RootClass::Imaginary : RootClass::NotRoot;
      break;
    }
    cur[step] -= c;
    d.word.letters.push_back(step);
    if (cur[step] < 0) {
      d.result = RootClass::NotRoot;
      break;
    }
  }
  d.terminal = std::move(cur);
  return d;
}

bool RootSystem::is_root(const Coeffs& g) const {
  auto c = classify_element(g);
  return c == RootClass::Real || c == RootClass::Imaginary;
}

Root RootSystem::make_root(Coeffs c) const {
  Int nrm = norm(c);
  return Root{std::move(c), std::move(nrm)};
}

WeylWord RootSystem::reflection_word(const Coeffs& beta) const {
  Descent d = descend(beta);
  if (d.result != RootClass::Real) throw Error(Errc::NotRealRoot, "reflection needs a real root " + to_string(beta));
  int j = static_cast<int>(support(d.terminal).front());
  return d.word.then(WeylWord{{j}}).then(d.word.inverse());
}

std::vector<Root> RootSystem::enumerate_real_roots(int max_height, std::size_t budget) const {
  std::vector<Root> out;
  if (max_height < 1) return out;
  const int n = rank();
  std::vector<Coeffs> level;
  for (int i = 0; i < n; ++i) level.push_back(simple_root(i));
  std::size_t generated = level.size();
  for (int h = 1;; ++h) {
    for (const auto& r : level)
      if (norm(r) > 0) out.push_back(make_root(r));
    if (h == max_height) break;
    std::unordered_set<Coeffs, CoeffsHash> next;
    for (const auto& r : level) {
      for (int i = 0; i < n; ++i) {
        Coeffs c = r;
        c[i] += 1;
        if (next.count(c)) continue;
        if (is_root(c)) {
          next.insert(std::move(c));
          if (++generated > budget) throw Error(Errc::BudgetExceeded, "root enumeration budget exceeded");
        }
      }
    }
    level.assign(next.begin(), next.end());
    std::sort(level.begin(), level.end());
    if (level.empty()) break;
  }
  std::sort(out.begin(), out.end(), [](const Root& a, const Root& b) { return height_lex_less(a.coeffs, b.coeffs); });
  return out;
}

std::pair<int, int> RootSystem::root_string(const Coeffs& beta, const Coeffs& gamma) const {
  if (!is_root(gamma)) throw Error(Errc::NotARoot, "string base " + to_string(gamma) + " is not a root");
  if (norm(beta) <= 0 || !is_real_root(beta)) throw Error(Errc::NotRealRoot, "string direction must be a real root");
  auto in_string = [&](const Coeffs& c) {
    auto k = classify_element(c);
    return k != RootClass::NotRoot;
  };
  constexpr int kLimit = 10'000;
  int p = 0, q = 0;
  Coeffs c = gamma;
  while (p < kLimit && in_string(c = sub(c, beta))) ++p;
  c = gamma;
  while (q < kLimit && in_string(c = add(c, beta))) ++q;
  if (p == kLimit || q == kLimit) throw Error(Errc::Internal, "root string does not terminate");
  return {p, q};
}

}  // namespace pisys
