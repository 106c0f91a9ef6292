#include "pisys/counting.hpp"

#include "pisys/catalog.hpp"
#include "pisys/error.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <deque>
#include <fstream>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>
#include <unordered_map>

namespace pisys {

// ---------------------------------------------------------------------------
// table

FiniteMultTable FiniteMultTable::parse(std::string_view jsonl) {
  FiniteMultTable t;
  std::istringstream in{std::string(jsonl)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      auto j = nlohmann::json::parse(line);
      Entry e;
      e.k = j.at("k").get<std::string>();
      e.z = j.at("z").get<std::string>();
      e.value = j.at("value").get<std::uint64_t>();
      e.oracle = j.value("oracle", std::string());
      t.add(std::move(e));
    } catch (const nlohmann::json::exception& ex) {
      throw Error(Errc::ParseError, "finite-mult table line " + std::to_string(lineno) + ": " + ex.what());
    }
  }
  return t;
}

FiniteMultTable FiniteMultTable::load(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error(Errc::ParseError, "cannot open finite-mult table " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse(ss.str());
}

FiniteMultTable FiniteMultTable::from_env() {
  const char* p = std::getenv("PISYS_TABLE");
  if (!p || !*p) return {};
  return load(p);
}

void FiniteMultTable::add(Entry e) {
  for (auto& x : entries_)
    if (x.k == e.k && x.z == e.z) {
      if (x.value != e.value) throw Error(Errc::TableConflict, "table lists two values for (" + e.k + ", " + e.z + ")");
      return;
    }
  entries_.push_back(std::move(e));
}

std::optional<std::uint64_t> FiniteMultTable::lookup(std::string_view k, std::string_view z) const {
  for (const auto& e : entries_)
    if (e.k == k && e.z == z) return e.value;
  return std::nullopt;
}

std::string FiniteMultTable::to_jsonl() const {
  std::string out;
  for (const auto& e : entries_) {
    nlohmann::ordered_json j;
    j["k"] = e.k;
    j["z"] = e.z;
    j["value"] = e.value;
    j["oracle"] = e.oracle;
    out += j.dump() + "\n";
  }
  return out;
}

// ---------------------------------------------------------------------------
// finite root tables

namespace {

// All roots of a finite-type matrix with the integer tables the searches need.
struct FiniteRoots {
  int rank = 0;
  std::vector<Coeffs> roots;
  std::vector<std::vector<int>> pairing;  // <beta_a^vee, beta_b>
  std::vector<std::vector<int>> coroot;   // <alpha_j^vee, beta_a>
  std::vector<std::vector<int>> reflect;  // index of s_j(beta_a)
  std::vector<std::vector<char>> differ;  // beta_a - beta_b is a root or zero
  std::map<Coeffs, int> index;

  explicit FiniteRoots(const Gcm& z) : rank(z.rank()) {
    RootSystem rs(z);
    for (const auto& r : finite_positive_roots(z)) roots.push_back(r);
    const std::size_t npos = roots.size();
    for (std::size_t i = 0; i < npos; ++i) roots.push_back(negated(roots[i]));
    const std::size_t m = roots.size();
    for (std::size_t a = 0; a < m; ++a) index.emplace(roots[a], static_cast<int>(a));
    pairing.assign(m, std::vector<int>(m));
    differ.assign(m, std::vector<char>(m));
    coroot.assign(m, std::vector<int>(static_cast<std::size_t>(rank)));
    reflect.assign(m, std::vector<int>(static_cast<std::size_t>(rank)));
    for (std::size_t a = 0; a < m; ++a) {
      for (std::size_t b = 0; b < m; ++b) {
        pairing[a][b] = static_cast<int>(rs.pairing(roots[a], roots[b]));
        differ[a][b] = a == b || index.count(sub(roots[a], roots[b])) ? 1 : 0;
      }
      for (int j = 0; j < rank; ++j) {
        coroot[a][j] = static_cast<int>(rs.coroot_pairing(j, roots[a]));
        reflect[a][j] = index.at(rs.reflect(j, roots[a]));
      }
    }
  }

  std::size_t size() const { return roots.size(); }
};

// Root tables are immutable once built; keep them for repeated queries.
std::shared_ptr<const FiniteRoots> finite_roots(const Gcm& z) {
  static std::mutex mu;
  static std::map<std::vector<std::vector<long long>>, std::shared_ptr<const FiniteRoots>> cache;
  auto key = z.rows();
  {
    std::lock_guard lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  auto t = std::make_shared<const FiniteRoots>(z);
  std::lock_guard lock(mu);
  return cache.emplace(std::move(key), std::move(t)).first->second;
}

// Labeled assignment search over the roots of z for type k, in vertex order
// `order`. With `dominant` set, each new element must be dominant for the
// simple reflections fixing the earlier ones.
class TupleSearch {
 public:
  TupleSearch(const FiniteRoots& t, const Gcm& k, std::vector<int> order, bool dominant, std::size_t budget)
      : t_(t), k_(k), order_(std::move(order)), dominant_(dominant), budget_(budget),
        tuple_(static_cast<std::size_t>(k.rank()), -1) {}

  template <class F>
  void run(F&& leaf) {
    std::vector<char> j(static_cast<std::size_t>(t_.rank), 1);
    step(0, j, leaf);
  }

 private:
  template <class F>
  void step(std::size_t depth, const std::vector<char>& j, F& leaf) {
    if (depth == order_.size()) {
      leaf(tuple_);
      return;
    }
    if (++nodes_ > budget_) throw Error(Errc::BudgetExceeded, "finite pi-system search exceeded the node budget");
    const int v = order_[depth];
    for (std::size_t a = 0; a < t_.size(); ++a) {
      bool ok = true;
      if (dominant_)
        for (int s = 0; s < t_.rank && ok; ++s) ok = !j[s] || t_.coroot[a][s] >= 0;
      for (std::size_t d = 0; d < depth && ok; ++d) {
        const int u = order_[d];
        const int b = tuple_[u];
        ok = !t_.differ[b][a] && t_.pairing[b][a] == k_(u, v) && t_.pairing[a][b] == k_(v, u);
      }
      if (!ok) continue;
      tuple_[v] = static_cast<int>(a);
      if (dominant_) {
        std::vector<char> next = j;
        for (int s = 0; s < t_.rank; ++s) next[s] = j[s] && t_.coroot[a][s] == 0;
        step(depth + 1, next, leaf);
      } else {
        step(depth + 1, j, leaf);
      }
    }
    tuple_[v] = -1;
  }

  const FiniteRoots& t_;
  const Gcm& k_;
  std::vector<int> order_;
  bool dominant_;
  std::size_t budget_;
  std::size_t nodes_ = 0;
  std::vector<int> tuple_;
};

// Stabilizer-chain normal form of a labeled tuple: make the element at
// order[0] dominant, then the next one dominant for the parabolic subgroup
// fixing the first, and so on. Records the reflections applied.
std::vector<int> normal_form(const FiniteRoots& t, std::vector<int> tuple, const std::vector<int>& order, WeylWord* word) {
  std::vector<char> j(static_cast<std::size_t>(t.rank), 1);
  for (int v : order) {
    for (;;) {
      int step = -1;
      for (int s = 0; s < t.rank; ++s)
        if (j[s] && t.coroot[tuple[v]][s] < 0) {
          step = s;
          break;
        }
      if (step < 0) break;
      for (auto& a : tuple) a = t.reflect[a][step];
      if (word) word->letters.push_back(step);
    }
    for (int s = 0; s < t.rank; ++s) j[s] = j[s] && t.coroot[tuple[v]][s] == 0;
  }
  return tuple;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

void require_finite(const Gcm& g, const char* what) {
  if (classify(g).kind != TypeKind::Finite) throw Error(Errc::WrongClass, std::string(what) + " is not of finite type");
}

std::string name_or_empty(const Gcm& g) {
  auto m = identify_diagram(g);
  return m ? m->name : std::string();
}

}  // namespace

std::uint64_t finite_mult_live(const Gcm& k, const Gcm& z, const Options& opts) {
  require_finite(k, "K");
  require_finite(z, "Z");
  // finite-type pi-systems are linearly independent
  if (k.rank() > z.rank()) return 0;
  auto table = finite_roots(z);
  const FiniteRoots& t = *table;
  std::vector<int> order = bfs_order(k);
  std::vector<std::vector<int>> leaves;
  TupleSearch(t, k, order, true, opts.node_budget).run([&](const std::vector<int>& tup) { leaves.push_back(tup); });
  if (leaves.empty()) return 0;
  std::map<std::vector<int>, int> where;
  for (std::size_t i = 0; i < leaves.size(); ++i) where.emplace(leaves[i], static_cast<int>(i));
  UnionFind uf(leaves.size());
  for (const auto& g : diagram_automorphisms(k)) {
    for (std::size_t i = 0; i < leaves.size(); ++i) {
      std::vector<int> relabeled(leaves[i].size());
      for (std::size_t v = 0; v < relabeled.size(); ++v) relabeled[v] = leaves[i][g[v]];
      auto it = where.find(normal_form(t, relabeled, order, nullptr));
      if (it == where.end()) throw Error(Errc::Internal, "normal form of a relabeled tuple was not enumerated");
      uf.unite(static_cast<int>(i), it->second);
    }
  }
  std::set<int> roots;
  for (std::size_t i = 0; i < leaves.size(); ++i) roots.insert(uf.find(static_cast<int>(i)));
  return roots.size();
}

std::uint64_t finite_mult_bruteforce(const Gcm& k, const Gcm& z, const Options& opts) {
  require_finite(k, "K");
  require_finite(z, "Z");
  if (k.rank() > z.rank()) return 0;
  auto table = finite_roots(z);
  const FiniteRoots& t = *table;
  std::set<std::vector<int>> sets;
  TupleSearch(t, k, bfs_order(k), false, opts.node_budget).run([&](const std::vector<int>& tup) {
    std::vector<int> s = tup;
    std::sort(s.begin(), s.end());
    sets.insert(std::move(s));
    if (sets.size() > opts.node_budget) throw Error(Errc::BudgetExceeded, "too many pi-systems for the brute-force oracle");
  });
  std::set<std::vector<int>> seen;
  std::uint64_t orbits = 0;
  for (const auto& s : sets) {
    if (seen.count(s)) continue;
    ++orbits;
    std::deque<std::vector<int>> queue{s};
    seen.insert(s);
    while (!queue.empty()) {
      auto cur = std::move(queue.front());
      queue.pop_front();
      for (int j = 0; j < t.rank; ++j) {
        std::vector<int> img(cur.size());
        for (std::size_t i = 0; i < cur.size(); ++i) img[i] = t.reflect[cur[i]][j];
        std::sort(img.begin(), img.end());
        if (seen.insert(img).second) queue.push_back(std::move(img));
      }
    }
  }
  return orbits;
}

std::uint64_t finite_mult(const Gcm& k, const Gcm& z, const Options& opts) {
  require_finite(k, "K");
  require_finite(z, "Z");
  std::optional<std::uint64_t> tabled;
  std::string kn, zn;
  if (opts.table) {
    kn = name_or_empty(k);
    zn = name_or_empty(z);
    if (!kn.empty() && !zn.empty()) tabled = opts.table->lookup(kn, zn);
  }
  if (z.rank() <= opts.finite_live_cap) {
    std::uint64_t live = finite_mult_live(k, z, opts);
    if (tabled && *tabled != live)
      throw Error(Errc::TableConflict, "table value " + std::to_string(*tabled) + " for (" + kn + ", " + zn +
                                           ") disagrees with the live value " + std::to_string(live));
    return live;
  }
  if (tabled) return *tabled;
  if (k.rank() > z.rank()) return 0;
  throw Error(Errc::RankCapExceeded, "finite part of rank " + std::to_string(z.rank()) +
                                         " is above the live cap and has no table entry");
}

// ---------------------------------------------------------------------------
// multiplicities

namespace {

void require_simply_laced(const Gcm& x) {
  if (!x.symmetric()) throw Error(Errc::NotSimplyLaced, "ambient diagram is not simply-laced");
}

std::optional<ExtDecomposition> ext_type(const Gcm& k) {
  if (!k.symmetric()) return std::nullopt;
  try {
    return ext_decompose(k);
  } catch (const Error&) {
    return std::nullopt;
  }
}

}  // namespace

MultReport mult_a1pp(const Gcm& x, const Options& opts) {
  require_simply_laced(x);
  MultReport r;
  r.k = named_diagram("A1++");
  r.x = x;
  r.method = "a1pp";
  auto subs = ext_subdiagrams(x, opts);
  for (const auto& s : subs) {
    // every real root of a simply-laced irreducible finite type is W-conjugate
    // to every other, so each finite part contributes exactly one orbit
    r.certificate.push_back({s.vertices, s.type, name_or_empty(subdiagram(x, s.decomposition.finite_part)), 1});
  }
  r.value = 2 * subs.size();
  return r;
}

MultReport mult_ext(const Gcm& k, const Gcm& x, const Options& opts) {
  auto dk = ext_type(k);
  if (!dk) throw Error(Errc::NotExtType, "K is not of Ext type");
  require_simply_laced(x);
  Gcm kf = subdiagram(k, dk->finite_part);
  MultReport r;
  r.k = k;
  r.x = x;
  r.method = "ext";
  std::uint64_t sum = 0;
  for (const auto& s : ext_subdiagrams(x, opts)) {
    Gcm zf = subdiagram(x, s.decomposition.finite_part);
    std::uint64_t m = finite_mult(kf, zf, opts);
    r.certificate.push_back({s.vertices, s.type, name_or_empty(zf), m});
    sum += m;
  }
  r.value = 2 * sum;
  return r;
}

MultReport mult(const Gcm& k, const Gcm& x, int height, const Options& opts) {
  if (auto dk = ext_type(k)) {
    if (diagram_isomorphic(k, named_diagram("A1++"))) {
      MultReport r = mult_a1pp(x, opts);
      r.k = k;
      return r;
    }
    return mult_ext(k, x, opts);
  }
  GcmClass kc = classify(k);
  if (kc.indecomposable() && kc.kind == TypeKind::Affine) {
    auto xs = make_root_system(x);
    for (int h = 1; h <= height; ++h) {
      for (const auto& s : enumerate_pi_systems(xs, k, h, opts)) {
        if (!s.linearly_independent()) continue;
        MultReport r;
        r.k = k;
        r.x = x;
        r.method = "affine";
        AffineSupport a = locate_affine_support(s);
        PiSystem moved = s.transformed(a.word);
        r.witness = s;
        r.witness_support = a.subdiagram;
        for (int p = 0; p <= 3; ++p) r.family_k.push_back(locate_affine_support(shift_family(moved, a.subdiagram, p)).k);
        return r;
      }
    }
    throw Error(Errc::Undetermined, "no linearly independent pi-system of affine type K found up to height " +
                                        std::to_string(height));
  }
  if (kc.kind == TypeKind::Finite && classify(x).kind == TypeKind::Finite) {
    MultReport r;
    r.k = k;
    r.x = x;
    r.method = "finite";
    r.value = finite_mult(k, x, opts);
    return r;
  }
  throw Error(Errc::NotExtType, "mult handles Ext-type K, affine K, or finite K in finite X");
}

// ---------------------------------------------------------------------------
// enumeration

namespace {

using Vec64 = std::vector<long long>;

struct Candidates {
  std::vector<Coeffs> roots;
  std::vector<Vec64> coeffs;
  std::vector<Vec64> gram_times;  // G beta
  std::vector<long long> norm;
};

}  // namespace

std::vector<PiSystem> enumerate_pi_systems(const RootSystemPtr& x, const Gcm& k, int h, const Options& opts) {
  if (h < 1) return {};
  const int n = x->rank();
  Candidates c;
  auto positive = x->enumerate_real_roots(h, opts.root_budget);
  for (const auto& r : positive) c.roots.push_back(r.coeffs);
  for (const auto& r : positive) c.roots.push_back(negated(r.coeffs));
  const std::size_t m = c.roots.size();
  for (const auto& r : c.roots) {
    Vec64 v(static_cast<std::size_t>(n)), g(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) v[i] = static_cast<long long>(r[i]);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) g[i] += static_cast<long long>(x->form().gram(i, j)) * v[j];
    c.norm.push_back(std::inner_product(v.begin(), v.end(), g.begin(), 0LL));
    c.coeffs.push_back(std::move(v));
    c.gram_times.push_back(std::move(g));
  }
  auto pairing = [&](std::size_t a, std::size_t b, long long* out) {
    long long ip = std::inner_product(c.gram_times[a].begin(), c.gram_times[a].end(), c.coeffs[b].begin(), 0LL);
    if ((2 * ip) % c.norm[a] != 0) return false;
    *out = 2 * ip / c.norm[a];
    return true;
  };

  const std::vector<int> order = bfs_order(k);
  const std::size_t r = order.size();
  std::atomic<std::size_t> nodes{0};
  std::atomic<std::size_t> next_root{0};
  std::mutex mu;
  std::map<std::vector<int>, std::vector<int>> found;  // sorted indices -> smallest labeled tuple
  std::exception_ptr failure;

  auto worker = [&] {
    std::map<std::vector<int>, std::vector<int>> local;
    std::unordered_map<std::uint64_t, bool> diff_cache;
    auto difference_ok = [&](std::size_t a, std::size_t b) {
      std::uint64_t key = static_cast<std::uint64_t>(std::min(a, b)) * m + std::max(a, b);
      auto it = diff_cache.find(key);
      if (it != diff_cache.end()) return it->second;
      bool ok = !x->is_root(sub(c.roots[a], c.roots[b]));
      diff_cache.emplace(key, ok);
      return ok;
    };
    std::vector<int> tuple(r, -1);
    std::function<void(std::size_t)> step = [&](std::size_t depth) {
      if (depth == r) {
        std::vector<int> s = tuple;
        std::sort(s.begin(), s.end());
        auto it = local.find(s);
        if (it == local.end())
          local.emplace(std::move(s), tuple);
        else if (tuple < it->second)
          it->second = tuple;
        return;
      }
      if (++nodes > opts.node_budget) throw Error(Errc::BudgetExceeded, "pi-system enumeration exceeded the node budget");
      const int v = order[depth];
      for (std::size_t a = 0; a < m; ++a) {
        bool ok = true;
        for (std::size_t d = 0; d < depth && ok; ++d) {
          const int u = order[d];
          const auto b = static_cast<std::size_t>(tuple[u]);
          long long puv = 0, pvu = 0;
          ok = b != a && pairing(b, a, &puv) && puv == k(u, v) && pairing(a, b, &pvu) && pvu == k(v, u);
        }
        for (std::size_t d = 0; d < depth && ok; ++d) ok = difference_ok(static_cast<std::size_t>(tuple[order[d]]), a);
        if (!ok) continue;
        tuple[v] = static_cast<int>(a);
        step(depth + 1);
      }
      tuple[v] = -1;
    };
    try {
      for (std::size_t a = next_root++; a < m; a = next_root++) {
        tuple.assign(r, -1);
        tuple[order[0]] = static_cast<int>(a);
        step(1);
      }
    } catch (...) {
      std::lock_guard lock(mu);
      if (!failure) failure = std::current_exception();
      next_root = m;
    }
    std::lock_guard lock(mu);
    for (auto& [key, tup] : local) {
      auto it = found.find(key);
      if (it == found.end())
        found.emplace(key, std::move(tup));
      else if (tup < it->second)
        it->second = std::move(tup);
    }
  };

  const unsigned threads = std::max(1u, opts.threads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  std::vector<PiSystem> out;
  for (const auto& [key, tup] : found) {
    std::vector<Coeffs> roots;
    for (int a : tup) roots.push_back(c.roots[a]);
    out.push_back(check_pi_system(x, std::move(roots)));
  }
  return out;
}

// ---------------------------------------------------------------------------
// canonicalization

bool operator<(const OrbitClass& a, const OrbitClass& b) {
  if (a.sign != b.sign) return a.sign < b.sign;
  if (a.ext_subdiagram != b.ext_subdiagram) return a.ext_subdiagram < b.ext_subdiagram;
  return std::lexicographical_compare(a.finite_rep.begin(), a.finite_rep.end(), b.finite_rep.begin(), b.finite_rep.end(),
                                      height_lex_less);
}

namespace {

bool tuple_less(const std::vector<Coeffs>& a, const std::vector<Coeffs>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), height_lex_less);
}

}  // namespace

Canonicalization canonicalize(const PiSystem& pi) {
  const RootSystem& x = pi.ambient();
  require_simply_laced(x.cartan());
  auto dk = ext_type(pi.type_matrix());
  if (!dk) throw Error(Errc::NotExtType, "type of the pi-system is not of Ext type");

  // (1) homogeneous sign, then work with the positive representative
  Normalization norm = sign_normalize(pi);
  if (norm.sign == Sign::Both) throw Error(Errc::Internal, "Ext-type system reported finite orientation");
  PiSystem cur = norm.sign == Sign::Negative ? norm.system.negated() : norm.system;
  WeylWord word = norm.word;

  // (2) move the affine part into an affine subdiagram Y
  AffineSupport a = locate_affine_support(cur.subset(dk->affine_part));
  if (a.k != 1) throw Error(Errc::Internal, "affine part of an Ext-type system has k = " + a.k.str());
  cur = cur.transformed(a.word);
  word = word.then(a.word);

  // (3) carry the overextended element to a simple root
  SimpleReduction red = reduce_to_simple(x, cur[static_cast<std::size_t>(dk->p)], a.subdiagram);
  cur = cur.transformed(red.word);
  word = word.then(red.word);
  VertexSet z = a.subdiagram;
  z.push_back(red.vertex);
  std::sort(z.begin(), z.end());
  auto dz = ext_decompose_in(x.cartan(), z);
  if (!dz || dz->p != red.vertex) throw Error(Errc::Internal, "reduction did not produce an Ext subdiagram");

  // (4) finite part: normal form within W of the finite part of Z, minimized
  // over all labelings by the catalog diagram
  std::vector<Coeffs> fin;
  for (int i : dk->finite_part) {
    if (!supported_in(cur[static_cast<std::size_t>(i)], dz->finite_part))
      throw Error(Errc::Internal, "finite part did not land in the finite part of Z");
    fin.push_back(restrict_to(cur[static_cast<std::size_t>(i)], dz->finite_part));
  }
  Gcm mf = subdiagram(pi.type_matrix(), dk->finite_part);
  auto named = identify_diagram(mf);
  if (!named) throw Error(Errc::Internal, "finite part of K is not in the catalog");
  Gcm ref = named_diagram(named->name);
  std::vector<int> order = bfs_order(ref);
  auto table = finite_roots(subdiagram(x.cartan(), dz->finite_part));
  const FiniteRoots& t = *table;
  std::vector<int> base(fin.size());
  for (std::size_t i = 0; i < fin.size(); ++i) base[named->bijection[i]] = t.index.at(fin[i]);

  std::optional<std::vector<Coeffs>> best;
  WeylWord best_word;
  for (const auto& g : diagram_automorphisms(ref)) {
    std::vector<int> relabeled(base.size());
    for (std::size_t v = 0; v < base.size(); ++v) relabeled[v] = base[g[v]];
    WeylWord w;
    auto nf = normal_form(t, relabeled, order, &w);
    std::vector<Coeffs> rep;
    for (int idx : nf) rep.push_back(embed(t.roots[idx], dz->finite_part, static_cast<std::size_t>(x.rank())));
    if (!best || tuple_less(rep, *best)) {
      best = std::move(rep);
      best_word = std::move(w);
    }
  }
  for (auto& l : best_word.letters) l = dz->finite_part[l];
  word = word.then(best_word);

  Canonicalization out{OrbitClass{norm.sign, z, *best}, word,
                       canonical_pi_general(pi.ambient_ptr(), z, *best)};
  return out;
}

CrossCheck cross_check_mult(const Gcm& k, const RootSystemPtr& x, int h, const Options& opts) {
  CrossCheck cc;
  cc.expected = *mult_ext(k, x->cartan(), opts).value;
  std::set<OrbitClass> classes;
  auto systems = enumerate_pi_systems(x, k, h, opts);
  cc.enumerated = systems.size();
  for (const auto& s : systems) classes.insert(canonicalize(s).cls);
  cc.classes = classes.size();
  return cc;
}

}  // namespace pisys
