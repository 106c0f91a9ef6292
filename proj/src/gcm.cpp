#include "pisys/gcm.hpp"

#include "pisys/error.hpp"
#include "pisys/linalg.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <numeric>
#include <set>
#include <unordered_set>

namespace pisys {

using Rational = boost::multiprecision::cpp_rational;

Gcm Gcm::from_rows(const std::vector<std::vector<long long>>& rows, std::vector<std::string> labels) {
  const std::size_t n = rows.size();
  if (n == 0) throw Error(Errc::NonSquare, "matrix is empty");
  for (const auto& r : rows)
    if (r.size() != n) throw Error(Errc::NonSquare, "matrix is not square");
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i][i] != 2)
      throw Error(Errc::DiagonalNotTwo, "diagonal entry " + std::to_string(i) + " is not 2", {int(i)});
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (rows[i][j] > 0)
        throw Error(Errc::PositiveOffDiagonal,
                    "off-diagonal entry (" + std::to_string(i) + "," + std::to_string(j) + ") is positive",
                    {int(i), int(j)});
      if ((rows[i][j] == 0) != (rows[j][i] == 0))
        throw Error(Errc::AsymmetricZero,
                    "a_ij = 0 but a_ji != 0 at (" + std::to_string(i) + "," + std::to_string(j) + ")",
                    {int(i), int(j)});
      if (rows[i][j] < -1'000'000)
        throw Error(Errc::PositiveOffDiagonal, "off-diagonal entry out of supported range", {int(i), int(j)});
    }
  }
  if (!labels.empty() && labels.size() != n) throw Error(Errc::NonSquare, "label count does not match rank");

  Gcm g;
  g.n_ = static_cast<int>(n);
  g.a_.reserve(n * n);
  for (const auto& r : rows)
    for (auto x : r) g.a_.push_back(static_cast<int>(x));
  g.labels_ = std::move(labels);
  return g;
}

Gcm validate_gcm(const std::vector<std::vector<long long>>& matrix) { return Gcm::from_rows(matrix); }

std::vector<std::vector<long long>> Gcm::rows() const {
  std::vector<std::vector<long long>> r(static_cast<std::size_t>(n_), std::vector<long long>(static_cast<std::size_t>(n_)));
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) r[i][j] = (*this)(i, j);
  return r;
}

bool Gcm::symmetric() const {
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

std::vector<int> Gcm::neighbors(int i) const {
  std::vector<int> r;
  for (int j = 0; j < n_; ++j)
    if (adjacent(i, j)) r.push_back(j);
  return r;
}

std::vector<VertexSet> components(const Gcm& a) {
  const int n = a.rank();
  std::vector<int> comp(static_cast<std::size_t>(n), -1);
  std::vector<VertexSet> out;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    VertexSet verts;
    std::deque<int> queue{s};
    comp[s] = static_cast<int>(out.size());
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      verts.push_back(v);
      for (int w : a.neighbors(v)) {
        if (comp[w] < 0) {
          comp[w] = comp[s];
          queue.push_back(w);
        }
      }
    }
    std::sort(verts.begin(), verts.end());
    out.push_back(std::move(verts));
  }
  return out;
}

Gcm subdiagram(const Gcm& a, const VertexSet& s) {
  std::vector<std::vector<long long>> rows;
  std::vector<std::string> labels;
  for (int v : s) {
    if (v < 0 || v >= a.rank()) throw Error(Errc::IndexOutOfRange, "vertex " + std::to_string(v) + " out of range", {v});
  }
  for (int i : s) {
    std::vector<long long> row;
    for (int j : s) row.push_back(a(i, j));
    rows.push_back(std::move(row));
    if (!a.labels().empty()) labels.push_back(a.labels()[static_cast<std::size_t>(i)]);
  }
  return Gcm::from_rows(rows, std::move(labels));
}

VertexSet perp(const Gcm& a, const VertexSet& y) {
  for (int v : y)
    if (v < 0 || v >= a.rank()) throw Error(Errc::IndexOutOfRange, "vertex " + std::to_string(v) + " out of range", {v});
  VertexSet out;
  for (int v = 0; v < a.rank(); ++v) {
    if (contains(y, v)) continue;
    bool touches = false;
    for (int u : y) touches = touches || a.adjacent(u, v);
    if (!touches) out.push_back(v);
  }
  return out;
}

Symmetrizer symmetrize(const Gcm& a) {
  const int n = a.rank();
  std::vector<Rational> d(static_cast<std::size_t>(n), Rational(0));
  Symmetrizer out;
  out.d.assign(static_cast<std::size_t>(n), Int(0));
  for (const auto& comp : components(a)) {
    // Spanning-tree propagation from the smallest vertex.
    d[comp.front()] = 1;
    std::deque<int> queue{comp.front()};
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    seen[comp.front()] = true;
    while (!queue.empty()) {
      int i = queue.front();
      queue.pop_front();
      for (int j : a.neighbors(i)) {
        if (seen[j]) continue;
        seen[j] = true;
        d[j] = d[i] * a(i, j) / a(j, i);
        queue.push_back(j);
      }
    }
    for (int i : comp)
      for (int j : comp)
        if (d[i] * a(i, j) != d[j] * a(j, i))
          throw Error(Errc::NotSymmetrizable, "matrix is not symmetrizable", {i, j});

    Int l = 1;
    for (int i : comp) {
      Int den = boost::multiprecision::denominator(d[i]);
      l = l / boost::multiprecision::gcd(l, den) * den;
    }
    Int g = 0;
    for (int i : comp) {
      out.d[i] = boost::multiprecision::numerator(boost::multiprecision::cpp_rational(d[i] * l));
      g = boost::multiprecision::gcd(g, out.d[i]);
    }
    for (int i : comp) out.d[i] /= g;
  }
  return out;
}

BilinearForm::BilinearForm(const Gcm& a) : BilinearForm(a, symmetrize(a)) {}

BilinearForm::BilinearForm(const Gcm& a, const Symmetrizer& d) : n_(a.rank()) {
  gram_.reserve(static_cast<std::size_t>(n_ * n_));
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) gram_.push_back(d.d[i] * a(i, j));
}

Int BilinearForm::operator()(const Coeffs& x, const Coeffs& y) const {
  Int s = 0;
  for (int i = 0; i < n_; ++i) {
    if (x[i] == 0) continue;
    Int row = 0;
    for (int j = 0; j < n_; ++j)
      if (y[j] != 0) row += gram(i, j) * y[j];
    s += x[i] * row;
  }
  return s;
}

std::string_view kind_name(TypeKind k) {
  switch (k) {
    case TypeKind::Finite: return "finite";
    case TypeKind::Affine: return "affine";
    case TypeKind::Indefinite: return "indefinite";
  }
  return "?";
}

namespace {

linalg::Matrix int_matrix(const Gcm& a) {
  linalg::Matrix m(static_cast<std::size_t>(a.rank()), std::vector<Int>(static_cast<std::size_t>(a.rank())));
  for (int i = 0; i < a.rank(); ++i)
    for (int j = 0; j < a.rank(); ++j) m[i][j] = a(i, j);
  return m;
}

// Kind of an indecomposable matrix. `delta` receives the null root when affine.
TypeKind indecomposable_kind(const Gcm& c, Coeffs* delta) {
  Symmetrizer d = symmetrize(c);
  linalg::Matrix s(static_cast<std::size_t>(c.rank()), std::vector<Int>(static_cast<std::size_t>(c.rank())));
  for (int i = 0; i < c.rank(); ++i)
    for (int j = 0; j < c.rank(); ++j) s[i][j] = d.d[i] * c(i, j);
  if (linalg::positive_definite(s)) return TypeKind::Finite;

  auto kernel = linalg::integer_kernel(int_matrix(c));
  if (kernel.size() == 1 && std::all_of(kernel[0].begin(), kernel[0].end(), [](const Int& x) { return x > 0; })) {
    if (delta) *delta = kernel[0];
    return TypeKind::Affine;
  }
  return TypeKind::Indefinite;
}

// Every component of every one-vertex deletion is finite or affine.
bool all_proper_subdiagrams_tame(const Gcm& c) {
  for (int v = 0; v < c.rank(); ++v) {
    VertexSet rest;
    for (int u = 0; u < c.rank(); ++u)
      if (u != v) rest.push_back(u);
    if (rest.empty()) continue;
    Gcm sub = subdiagram(c, rest);
    for (const auto& comp : components(sub)) {
      if (indecomposable_kind(subdiagram(sub, comp), nullptr) == TypeKind::Indefinite) return false;
    }
  }
  return true;
}

}  // namespace

GcmClass classify(const Gcm& a) {
  symmetrize(a);  // surfaces NotSymmetrizable for the whole matrix up front
  GcmClass out;
  bool any_indef = false, any_affine = false;
  for (const auto& comp : components(a)) {
    Gcm c = subdiagram(a, comp);
    ComponentClass cc;
    cc.vertices = comp;
    Coeffs local;
    cc.kind = indecomposable_kind(c, &local);
    if (cc.kind == TypeKind::Affine) cc.delta = embed(local, comp, static_cast<std::size_t>(a.rank()));
    if (cc.kind == TypeKind::Indefinite) cc.hyperbolic = all_proper_subdiagrams_tame(c);
    any_indef = any_indef || cc.kind == TypeKind::Indefinite;
    any_affine = any_affine || cc.kind == TypeKind::Affine;
    out.components.push_back(std::move(cc));
  }
  if (any_indef)
    out.kind = TypeKind::Indefinite;
  else if (any_affine)
    out.kind = TypeKind::Affine;
  else
    out.kind = TypeKind::Finite;
  if (out.indecomposable()) {
    out.hyperbolic = out.components[0].hyperbolic;
    out.delta = out.components[0].delta;
  }
  return out;
}

namespace {

struct VertexSignature {
  std::vector<int> row, col;
  friend bool operator==(const VertexSignature&, const VertexSignature&) = default;
};

std::vector<VertexSignature> signatures(const Gcm& a) {
  std::vector<VertexSignature> s(static_cast<std::size_t>(a.rank()));
  for (int i = 0; i < a.rank(); ++i) {
    for (int j = 0; j < a.rank(); ++j) {
      s[i].row.push_back(a(i, j));
      s[i].col.push_back(a(j, i));
    }
    std::sort(s[i].row.begin(), s[i].row.end());
    std::sort(s[i].col.begin(), s[i].col.end());
  }
  return s;
}

// BFS order so that each vertex after the first in a component has a mapped neighbour.
std::vector<int> search_order(const Gcm& a) {
  std::vector<int> order;
  for (const auto& comp : components(a)) {
    std::vector<bool> seen(static_cast<std::size_t>(a.rank()), false);
    std::deque<int> queue{comp.front()};
    seen[comp.front()] = true;
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      order.push_back(v);
      for (int w : a.neighbors(v))
        if (!seen[w]) {
          seen[w] = true;
          queue.push_back(w);
        }
    }
  }
  return order;
}

class IsoSearch {
 public:
  IsoSearch(const Gcm& a, const Gcm& b, bool all)
      : a_(a), b_(b), all_(all), sa_(signatures(a)), sb_(signatures(b)), order_(search_order(a)),
        map_(static_cast<std::size_t>(a.rank()), -1), used_(static_cast<std::size_t>(a.rank()), false) {}

  std::vector<std::vector<int>> run() {
    if (a_.rank() == b_.rank()) extend(0);
    return found_;
  }

 private:
  bool extend(std::size_t depth) {
    if (depth == order_.size()) {
      found_.push_back(map_);
      return !all_;
    }
    const int i = order_[depth];
    for (int j = 0; j < b_.rank(); ++j) {
      if (used_[j] || !(sa_[i] == sb_[j])) continue;
      bool ok = true;
      for (std::size_t k = 0; k < depth && ok; ++k) {
        int u = order_[k];
        ok = b_(map_[u], j) == a_(u, i) && b_(j, map_[u]) == a_(i, u);
      }
      if (!ok) continue;
      map_[i] = j;
      used_[j] = true;
      if (extend(depth + 1)) return true;
      used_[j] = false;
      map_[i] = -1;
    }
    return false;
  }

  const Gcm& a_;
  const Gcm& b_;
  bool all_;
  std::vector<VertexSignature> sa_, sb_;
  std::vector<int> order_;
  std::vector<int> map_;
  std::vector<bool> used_;
  std::vector<std::vector<int>> found_;
};

}  // namespace

std::optional<std::vector<int>> diagram_isomorphic(const Gcm& a, const Gcm& b) {
  auto found = IsoSearch(a, b, false).run();
  if (found.empty()) return std::nullopt;
  return found.front();
}

std::vector<std::vector<int>> diagram_automorphisms(const Gcm& a) { return IsoSearch(a, a, true).run(); }

Coeffs null_root(const Gcm& y) {
  auto cls = classify(y);
  if (!cls.indecomposable() || cls.kind != TypeKind::Affine)
    throw Error(Errc::WrongClass, "null root requires an indecomposable affine matrix");
  return cls.delta;
}

std::vector<Coeffs> finite_positive_roots(const Gcm& f) {
  const int n = f.rank();
  std::unordered_set<Coeffs, CoeffsHash> seen;
  std::deque<Coeffs> queue;
  for (int i = 0; i < n; ++i) {
    Coeffs e = unit_vector(static_cast<std::size_t>(n), static_cast<std::size_t>(i));
    seen.insert(e);
    queue.push_back(std::move(e));
  }
  while (!queue.empty()) {
    Coeffs g = std::move(queue.front());
    queue.pop_front();
    for (int i = 0; i < n; ++i) {
      Int c = 0;
      for (int j = 0; j < n; ++j) c += f(i, j) * g[j];
      if (c == 0) continue;
      Coeffs r = g;
      r[i] -= c;
      if (sign_of(r) <= 0) continue;
      if (seen.insert(r).second) {
        queue.push_back(std::move(r));
        if (seen.size() > 100'000) throw Error(Errc::WrongClass, "root closure does not terminate: not of finite type");
      }
    }
  }
  std::vector<Coeffs> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), height_lex_less);
  return out;
}

Coeffs highest_root(const Gcm& f) {
  auto cls = classify(f);
  if (!cls.indecomposable() || cls.kind != TypeKind::Finite)
    throw Error(Errc::WrongClass, "highest root requires an indecomposable finite matrix");
  auto roots = finite_positive_roots(f);
  Coeffs theta = roots.back();
  for (int i = 0; i < f.rank(); ++i) {
    Int c = 0;
    for (int j = 0; j < f.rank(); ++j) c += f(i, j) * theta[j];
    if (c < 0) throw Error(Errc::Internal, "highest root is not dominant");
  }
  return theta;
}

std::vector<int> bfs_order(const Gcm& a) { return search_order(a); }

namespace {

struct Esu {
  const Gcm& a;
  int root;
  const std::function<bool(const VertexSet&)>& visit;
  std::vector<std::uint64_t> nbr;
  VertexSet sub;
  std::uint64_t above;
  bool stop = false;

  void extend(std::uint64_t closed_nbhd, std::uint64_t ext) {
    if (!visit(sub)) {
      stop = true;
      return;
    }
    while (ext && !stop) {
      int w = std::countr_zero(ext);
      ext &= ext - 1;
      // exclusive neighbours of w: not in the current set or next to it, above root
      std::uint64_t excl = nbr[w] & ~closed_nbhd & above;
      sub.push_back(w);
      extend(closed_nbhd | nbr[w], ext | excl);
      sub.pop_back();
    }
  }
};

}  // namespace

void for_each_connected_subset(const Gcm& a, int root, const std::function<bool(const VertexSet&)>& visit) {
  const int n = a.rank();
  if (n > 64) throw Error(Errc::RankCapExceeded, "subset enumeration supports rank <= 64");
  if (root < 0 || root >= n) throw Error(Errc::IndexOutOfRange, "root vertex out of range", {root});
  std::uint64_t self = std::uint64_t{1} << root;
  Esu e{a, root, visit, std::vector<std::uint64_t>(static_cast<std::size_t>(n), 0), {root}, ~(self | (self - 1))};
  for (int i = 0; i < n; ++i)
    for (int j : a.neighbors(i)) e.nbr[i] |= std::uint64_t{1} << j;
  e.extend(self | e.nbr[root], e.nbr[root] & e.above);
}

}  // namespace pisys
