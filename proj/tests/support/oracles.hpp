#pragma once

// Independent reference computations used by the unit and acceptance tests.
// Nothing here calls the descent-based membership code of the library.

#include "pisys/gcm.hpp"
#include "pisys/integer.hpp"

#include <functional>
#include <map>
#include <set>
#include <vector>

namespace pisys::oracle {

inline Coeffs vec(std::initializer_list<long long> xs) {
  Coeffs c;
  for (long long x : xs) c.emplace_back(x);
  return c;
}

inline Int apply_coroot(const Gcm& a, int i, const Coeffs& g) {
  Int c = 0;
  for (int j = 0; j < a.rank(); ++j) c += a(i, j) * g[j];
  return c;
}

inline Coeffs simple_reflection(const Gcm& a, int i, Coeffs g) {
  g[i] -= apply_coroot(a, i, g);
  return g;
}

inline bool support_connected(const Gcm& a, const Coeffs& g) {
  std::vector<int> s;
  for (int i = 0; i < a.rank(); ++i)
    if (g[i] != 0) s.push_back(i);
  if (s.empty()) return false;
  std::set<int> seen{s[0]};
  std::vector<int> stack{s[0]};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : s)
      if (!seen.count(w) && a(v, w) != 0) {
        seen.insert(w);
        stack.push_back(w);
      }
  }
  return seen.size() == s.size();
}

// Nonnegative vectors of height 1..h.
inline std::vector<Coeffs> positive_vectors(int n, int h) {
  std::vector<Coeffs> out;
  Coeffs cur(static_cast<std::size_t>(n), Int(0));
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == n) {
      if (left < h) out.push_back(cur);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      cur[i] = v;
      rec(i + 1, left - v);
    }
    cur[i] = 0;
  };
  rec(0, h);
  return out;
}

struct RootTable {
  std::set<Coeffs> real;       // positive real roots of height <= h
  std::set<Coeffs> imaginary;  // positive imaginary roots of height <= h
};

// Real roots: closure of the simple roots under simple reflections inside the
// height window. Imaginary roots: closure of the fundamental set.
inline RootTable brute_force_roots(const Gcm& a, int h) {
  const int n = a.rank();
  auto height_of = [](const Coeffs& c) {
    Int s = 0;
    for (const auto& x : c) s += x;
    return s;
  };
  auto close = [&](std::set<Coeffs> seeds) {
    std::vector<Coeffs> queue(seeds.begin(), seeds.end());
    while (!queue.empty()) {
      Coeffs g = queue.back();
      queue.pop_back();
      for (int i = 0; i < n; ++i) {
        Coeffs r = simple_reflection(a, i, g);
        bool nonneg = true;
        for (const auto& x : r) nonneg = nonneg && x >= 0;
        if (!nonneg || height_of(r) > h || height_of(r) < 1) continue;
        if (seeds.insert(r).second) queue.push_back(r);
      }
    }
    return seeds;
  };
  RootTable t;
  std::set<Coeffs> simple;
  for (int i = 0; i < n; ++i) {
    Coeffs e(static_cast<std::size_t>(n), Int(0));
    e[i] = 1;
    simple.insert(e);
  }
  t.real = close(simple);
  std::set<Coeffs> fundamental;
  for (const auto& g : positive_vectors(n, h)) {
    bool anti = true;
    for (int i = 0; i < n && anti; ++i) anti = apply_coroot(a, i, g) <= 0;
    if (anti && support_connected(a, g)) fundamental.insert(g);
  }
  t.imaginary = close(fundamental);
  return t;
}

// All roots of a finite-type matrix, positive and negative, by closure.
inline std::vector<Coeffs> finite_roots_closure(const Gcm& a) {
  std::set<Coeffs> all;
  std::vector<Coeffs> queue;
  for (int i = 0; i < a.rank(); ++i) {
    Coeffs e(static_cast<std::size_t>(a.rank()), Int(0));
    e[i] = 1;
    all.insert(e);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    Coeffs g = queue.back();
    queue.pop_back();
    for (int i = 0; i < a.rank(); ++i) {
      Coeffs r = simple_reflection(a, i, g);
      if (all.insert(r).second) queue.push_back(r);
    }
  }
  return {all.begin(), all.end()};
}

}  // namespace pisys::oracle
