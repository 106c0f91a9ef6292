#include "pisys/overext.hpp"

#include "pisys/catalog.hpp"
#include "pisys/error.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>

namespace pisys {

namespace {

VertexSet all_but(int n, int v) {
  VertexSet s;
  for (int u = 0; u < n; ++u)
    if (u != v) s.push_back(u);
  return s;
}

// Relabels a decomposition of the subdiagram on `verts` into coordinates of
// a rank-n ambient.
ExtDecomposition lift(const ExtDecomposition& d, const VertexSet& verts, std::size_t n) {
  ExtDecomposition out;
  out.p = verts[d.p];
  out.q = verts[d.q];
  for (int v : d.affine_part) out.affine_part.push_back(verts[v]);
  for (int v : d.finite_part) out.finite_part.push_back(verts[v]);
  std::sort(out.affine_part.begin(), out.affine_part.end());
  std::sort(out.finite_part.begin(), out.finite_part.end());
  out.delta = embed(d.delta, verts, n);
  out.theta = embed(d.theta, verts, n);
  return out;
}

}  // namespace

std::optional<ExtDecomposition> ext_decompose(const Gcm& z) {
  if (!z.symmetric()) throw Error(Errc::NotSimplyLaced, "diagram is not simply-laced");
  if (components(z).size() != 1) throw Error(Errc::Decomposable, "diagram is not connected");
  const int n = z.rank();
  if (n < 3) return std::nullopt;

  // (delta_Y, alpha_p) = sum over neighbours q of p of -delta_q, which is -1
  // only if p is a leaf on a single bond whose neighbour has delta_q = 1.
  std::optional<ExtDecomposition> found;
  for (int p = 0; p < n; ++p) {
    auto nb = z.neighbors(p);
    if (nb.size() != 1 || z(p, nb[0]) != -1) continue;
    const int q = nb[0];
    VertexSet y = all_but(n, p);
    GcmClass yc = classify(subdiagram(z, y));
    if (!yc.indecomposable() || yc.kind != TypeKind::Affine) continue;
    Coeffs delta = embed(yc.delta, y, static_cast<std::size_t>(n));
    if (delta[q] != 1) continue;
    if (found) throw Error(Errc::AmbiguousExt, "two vertices qualify as overextended vertex", {found->p, p});
    ExtDecomposition d;
    d.p = p;
    d.q = q;
    d.affine_part = y;
    d.finite_part = all_but(n, p);
    d.finite_part.erase(std::find(d.finite_part.begin(), d.finite_part.end(), q));
    d.delta = delta;
    d.theta = embed(highest_root(subdiagram(z, d.finite_part)), d.finite_part, static_cast<std::size_t>(n));
    Coeffs check = delta;
    check[q] -= 1;
    if (check != d.theta) throw Error(Errc::Internal, "delta_Y - alpha_q differs from the highest root");
    found = std::move(d);
  }
  return found;
}

std::optional<ExtDecomposition> ext_decompose_in(const Gcm& x, const VertexSet& vertices) {
  auto d = ext_decompose(subdiagram(x, vertices));
  if (!d) return std::nullopt;
  return lift(*d, vertices, static_cast<std::size_t>(x.rank()));
}

std::vector<ExtSubdiagram> ext_subdiagrams(const Gcm& x, const Options& opts) {
  if (!x.symmetric()) throw Error(Errc::NotSimplyLaced, "ambient diagram is not simply-laced");
  if (x.rank() > opts.rank_cap || x.rank() > 64)
    throw Error(Errc::RankCapExceeded, "rank " + std::to_string(x.rank()) + " exceeds the rank cap " + std::to_string(opts.rank_cap));
  const int n = x.rank();
  std::vector<ExtSubdiagram> out;
  std::mutex mu;
  std::atomic<int> next{0};
  std::exception_ptr failure;

  auto worker = [&] {
    std::vector<ExtSubdiagram> local;
    try {
      for (int root = next++; root < n; root = next++) {
        for_each_connected_subset(x, root, [&](const VertexSet& s) {
          if (s.size() < 3) return true;
          VertexSet sorted = s;
          std::sort(sorted.begin(), sorted.end());
          Gcm sub = subdiagram(x, sorted);
          // cheap necessary condition: a leaf on a single bond
          bool leaf = false;
          for (int v = 0; v < sub.rank() && !leaf; ++v) leaf = sub.neighbors(v).size() == 1;
          if (!leaf) return true;
          if (auto d = ext_decompose(sub)) {
            auto name = identify_diagram(sub);
            local.push_back({sorted, lift(*d, sorted, static_cast<std::size_t>(n)), name ? name->name : std::string()});
          }
          return true;
        });
      }
    } catch (...) {
      std::lock_guard lock(mu);
      if (!failure) failure = std::current_exception();
    }
    std::lock_guard lock(mu);
    for (auto& e : local) out.push_back(std::move(e));
  };

  const unsigned threads = std::max(1u, std::min<unsigned>(opts.threads, static_cast<unsigned>(n)));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);
  std::sort(out.begin(), out.end(), [](const ExtSubdiagram& a, const ExtSubdiagram& b) { return a.vertices < b.vertices; });
  return out;
}

namespace {

ExtDecomposition require_ext(const Gcm& x, const VertexSet& z) {
  VertexSet sorted = z;
  std::sort(sorted.begin(), sorted.end());
  if (sorted.empty() || std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw Error(Errc::NotExt, "vertex set is empty or repeats a vertex");
  std::optional<ExtDecomposition> d;
  try {
    d = ext_decompose_in(x, sorted);
  } catch (const Error& e) {
    if (e.code() == Errc::IndexOutOfRange) throw;
    throw Error(Errc::NotExt, std::string("subdiagram is not of Ext type: ") + e.what());
  }
  if (!d) throw Error(Errc::NotExt, "subdiagram is not of Ext type");
  return *d;
}

}  // namespace

PiSystem canonical_pi(const RootSystemPtr& x, const VertexSet& z) {
  ExtDecomposition d = require_ext(x->cartan(), z);
  return check_pi_system(x, {d.theta, sub(d.delta, d.theta), x->simple_root(d.p)});
}

PiSystem canonical_pi_general(const RootSystemPtr& x, const VertexSet& z, const std::vector<Coeffs>& finite_sigma) {
  ExtDecomposition d = require_ext(x->cartan(), z);
  for (std::size_t i = 0; i < finite_sigma.size(); ++i)
    if (finite_sigma[i].size() != static_cast<std::size_t>(x->rank()) || !supported_in(finite_sigma[i], d.finite_part))
      throw Error(Errc::NotInFinitePart, "element " + std::to_string(i) + " is not supported in the finite part",
                  {static_cast<int>(i)});
  PiSystem inner = check_pi_system(x, finite_sigma);
  Coeffs theta = q_sigma(inner, highest_root(inner.type_matrix()));
  std::vector<Coeffs> roots = finite_sigma;
  roots.push_back(sub(d.delta, theta));
  roots.push_back(x->simple_root(d.p));
  return check_pi_system(x, std::move(roots));
}

std::vector<CatalogEntry> hyperbolic_sl_catalog() {
  std::vector<CatalogEntry> out;
  auto add = [&](const std::string& name, bool ext) { out.push_back({name, named_diagram(name), ext}); };
  for (int n = 1; n <= 7; ++n) add("A" + std::to_string(n) + "++", true);
  for (int n = 4; n <= 8; ++n) add("D" + std::to_string(n) + "++", true);
  for (int n = 6; n <= 8; ++n) add("E" + std::to_string(n) + "++", true);
  for (int k = 1; k <= kFig2Count; ++k) add("hyp:fig2:" + std::to_string(k), false);
  return out;
}

}  // namespace pisys
