#include "pisys/pisystem.hpp"

#include "pisys/error.hpp"
#include "pisys/linalg.hpp"

#include <algorithm>

namespace pisys {

std::string_view sign_name(Sign s) {
  switch (s) {
    case Sign::Positive: return "positive";
    case Sign::Negative: return "negative";
    case Sign::Both: return "both";
  }
  return "?";
}

namespace {

Gcm type_matrix_of(const RootSystem& x, const std::vector<Root>& roots) {
  const std::size_t m = roots.size();
  std::vector<std::vector<long long>> rows(m, std::vector<long long>(m, 0));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      Int v = 2 * x.inner(roots[i].coeffs, roots[j].coeffs);
      if (v % roots[i].norm != 0) throw Error(Errc::Internal, "non-integral pairing inside a pi-system");
      v /= roots[i].norm;
      rows[i][j] = static_cast<long long>(v);
    }
  try {
    return Gcm::from_rows(rows);
  } catch (const Error& e) {
    throw Error(Errc::Internal, std::string("type matrix of a pi-system is not a GCM: ") + e.what());
  }
}

bool independent(const std::vector<Root>& roots) {
  linalg::Matrix m;
  for (const auto& r : roots) m.push_back(r.coeffs);
  return linalg::rank(m) == roots.size();
}

void require_independent_indecomposable(const PiSystem& s, const GcmClass& cls) {
  if (!s.linearly_independent()) throw Error(Errc::NotLinearlyIndependent, "pi-system is linearly dependent");
  if (!cls.indecomposable()) throw Error(Errc::DecomposableType, "type matrix is decomposable");
}

Coeffs all_ones(int n, int k) { return Coeffs(static_cast<std::size_t>(n), Int(k)); }

bool in_fundamental_set(const Gcm& b, const Coeffs& x) {
  if (sign_of(x) <= 0 || !connected_support(b, x)) return false;
  for (int i = 0; i < b.rank(); ++i) {
    Int c = 0;
    for (int j = 0; j < b.rank(); ++j) c += b(i, j) * x[j];
    if (c > 0) return false;
  }
  return true;
}

}  // namespace

PiSystem::PiSystem(RootSystemPtr ambient, std::vector<Coeffs> roots) : ambient_(std::move(ambient)) {
  roots_.reserve(roots.size());
  for (auto& c : roots) roots_.push_back(ambient_->make_root(std::move(c)));
  type_ = type_matrix_of(*ambient_, roots_);
  independent_ = independent(roots_);
}

std::vector<Coeffs> PiSystem::coeffs() const {
  std::vector<Coeffs> out;
  out.reserve(roots_.size());
  for (const auto& r : roots_) out.push_back(r.coeffs);
  return out;
}

PiSystem PiSystem::transformed(const WeylWord& w) const {
  PiSystem s = *this;
  for (auto& r : s.roots_) r.coeffs = ambient_->apply_word(w, std::move(r.coeffs));
  return s;
}

PiSystem PiSystem::negated() const {
  PiSystem s = *this;
  for (auto& r : s.roots_) r.coeffs = pisys::negated(std::move(r.coeffs));
  return s;
}

PiSystem PiSystem::subset(const std::vector<int>& indices) const {
  std::vector<Coeffs> c;
  for (int i : indices) {
    if (i < 0 || i >= static_cast<int>(size())) throw Error(Errc::IndexOutOfRange, "pi-system index out of range", {i});
    c.push_back(roots_[i].coeffs);
  }
  if (c.empty()) throw Error(Errc::PreconditionMismatch, "empty subset");
  return PiSystem(ambient_, std::move(c));
}

std::vector<Coeffs> PiSystem::sorted_coeffs() const {
  auto c = coeffs();
  std::sort(c.begin(), c.end(), height_lex_less);
  return c;
}

PiSystem check_pi_system(RootSystemPtr ambient, std::vector<Coeffs> roots) {
  if (!ambient) throw Error(Errc::PreconditionMismatch, "missing ambient root system");
  if (roots.empty()) throw Error(Errc::PreconditionMismatch, "a pi-system needs at least one root");
  const auto n = static_cast<std::size_t>(ambient->rank());
  for (std::size_t i = 0; i < roots.size(); ++i)
    if (roots[i].size() != n)
      throw Error(Errc::PreconditionMismatch, "root " + std::to_string(i) + " has the wrong length",
                  {static_cast<int>(i)});
  const int m = static_cast<int>(roots.size());
  for (int i = 0; i < m; ++i)
    if (!ambient->is_real_root(roots[i])) throw Error(Errc::NotRealRoot, to_string(roots[i]) + " is not a real root", {i});
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (roots[i] == roots[j]) throw Error(Errc::DuplicateRoot, "repeated root " + to_string(roots[i]), {i, j});
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (ambient->is_root(sub(roots[i], roots[j])))
        throw Error(Errc::DifferenceIsRoot, "difference of elements " + std::to_string(i) + " and " + std::to_string(j) + " is a root", {i, j});
  return PiSystem(std::move(ambient), std::move(roots));
}

std::optional<NamedMatch> pi_type(const PiSystem& sigma) { return identify_diagram(sigma.type_matrix()); }

Coeffs q_sigma(const PiSystem& sigma, const Coeffs& x) {
  if (x.size() != sigma.size()) throw Error(Errc::PreconditionMismatch, "vector length differs from the pi-system size");
  Coeffs out = sigma.ambient().zero();
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] != 0) out = add(out, scaled(sigma[i], x[i]));
  return out;
}

Coeffs imaginary_witness(const Gcm& b) {
  GcmClass cls = classify(b);
  if (!cls.indecomposable() || cls.kind == TypeKind::Finite)
    throw Error(Errc::WrongClass, "imaginary roots need an indecomposable matrix of non-finite type");
  if (cls.kind == TypeKind::Affine) return cls.delta;

  const int n = b.rank();
  if (in_fundamental_set(b, all_ones(n, 1))) return all_ones(n, 1);
  RootSystem rs(b);
  for (int k = 1; k <= 3; ++k) {
    Descent d = rs.descend(all_ones(n, k));
    if (d.result == RootClass::Imaginary) return d.terminal;
  }
  // an affine subdiagram's null root lies in the fundamental set
  std::optional<Coeffs> found;
  std::size_t visited = 0;
  for (int root = 0; root < n && !found; ++root) {
    for_each_connected_subset(b, root, [&](const VertexSet& s) {
      if (++visited > 200'000) return false;
      VertexSet sorted = s;
      std::sort(sorted.begin(), sorted.end());
      GcmClass c = classify(subdiagram(b, sorted));
      if (c.kind == TypeKind::Affine) {
        found = embed(c.delta, sorted, static_cast<std::size_t>(n));
        return false;
      }
      return true;
    });
  }
  if (found) return *found;
  // small exhaustive search
  if (n <= 8) {
    for (int bound = 2; bound <= 4; ++bound) {
      Coeffs x(static_cast<std::size_t>(n), Int(1));
      for (;;) {
        if (in_fundamental_set(b, x)) return x;
        int i = 0;
        while (i < n && x[i] == bound) x[i++] = 1;
        if (i == n) break;
        ++x[i];
      }
    }
  }
  throw Error(Errc::Internal, "no imaginary root found for the type matrix");
}

Sign positivity(const PiSystem& sigma) {
  GcmClass cls = classify(sigma.type_matrix());
  require_independent_indecomposable(sigma, cls);
  if (cls.kind == TypeKind::Finite) return Sign::Both;
  Coeffs image = q_sigma(sigma, imaginary_witness(sigma.type_matrix()));
  int s = sign_of(image);
  if (s == 0) throw Error(Errc::Internal, "image of an imaginary root has mixed sign");
  return s > 0 ? Sign::Positive : Sign::Negative;
}

Normalization sign_normalize(const PiSystem& sigma) {
  Sign sign = positivity(sigma);
  const int want = sign == Sign::Negative ? -1 : 1;
  Normalization out{WeylWord{}, sign, sigma};
  // Each reflection in a wrong-sign element removes exactly one positive root
  // of M(Sigma) from the finite set of those sent to the wrong side.
  constexpr int kStepLimit = 1'000'000;
  for (int step = 0;; ++step) {
    if (step == kStepLimit) throw Error(Errc::Internal, "sign normalization did not terminate");
    int bad = -1;
    for (std::size_t i = 0; i < out.system.size(); ++i)
      if (sign_of(out.system[i]) != want) {
        bad = static_cast<int>(i);
        break;
      }
    if (bad < 0) break;
    WeylWord w = sigma.ambient().reflection_word(out.system[bad]);
    out.system = out.system.transformed(w);
    out.word = out.word.then(w);
  }
  return out;
}

AffineSupport locate_affine_support(const PiSystem& sigma) {
  GcmClass cls = classify(sigma.type_matrix());
  if (!cls.indecomposable() || cls.kind != TypeKind::Affine)
    throw Error(Errc::NotAffineType, "type matrix is not of affine type");
  if (!sigma.linearly_independent()) throw Error(Errc::NotLinearlyIndependent, "pi-system is linearly dependent");
  const RootSystem& x = sigma.ambient();
  Coeffs delta = q_sigma(sigma, cls.delta);
  Descent d = x.descend(delta);
  if (d.result != RootClass::Imaginary) throw Error(Errc::Internal, "image of the null root is not imaginary");

  AffineSupport out;
  out.subdiagram = support(d.terminal);
  out.word = d.word;
  GcmClass ycls = classify(subdiagram(x.cartan(), out.subdiagram));
  if (!ycls.indecomposable() || ycls.kind != TypeKind::Affine)
    throw Error(Errc::Internal, "support of the reduced null root is not affine");
  Coeffs dy = ycls.delta;
  Coeffs t = restrict_to(d.terminal, out.subdiagram);
  Int k = t[0] / dy[0];
  if (scaled(dy, k) != t) throw Error(Errc::Internal, "reduced null root is not a multiple of delta_Y");
  out.k = d.sign * k;
  return out;
}

PiSystem shift_family(const PiSystem& sigma, const VertexSet& y, long long p) {
  const RootSystem& x = sigma.ambient();
  GcmClass ycls = classify(subdiagram(x.cartan(), y));
  if (!ycls.indecomposable() || ycls.kind != TypeKind::Affine) throw Error(Errc::WrongClass, "Y is not an affine subdiagram");
  Coeffs shift = embed(scaled(ycls.delta, Int(6) * p), y, static_cast<std::size_t>(x.rank()));
  std::vector<Coeffs> out;
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    if (!supported_in(sigma[i], y))
      throw Error(Errc::NotSupportedInY, "element " + std::to_string(i) + " is not supported in Y", {static_cast<int>(i)});
    out.push_back(add(sigma[i], shift));
  }
  return check_pi_system(sigma.ambient_ptr(), std::move(out));
}

SimpleReduction reduce_to_simple(const RootSystem& x, const Coeffs& beta, const VertexSet& y) {
  if (!x.cartan().symmetric()) throw Error(Errc::NotSimplyLaced, "ambient diagram is not simply-laced");
  GcmClass ycls = classify(subdiagram(x.cartan(), y));
  if (!ycls.indecomposable() || ycls.kind != TypeKind::Affine) throw Error(Errc::WrongClass, "Y is not an affine subdiagram");
  if (beta.size() != static_cast<std::size_t>(x.rank())) throw Error(Errc::PreconditionMismatch, "beta has the wrong length");
  Coeffs dy = embed(ycls.delta, y, static_cast<std::size_t>(x.rank()));
  if (x.inner(dy, beta) != -1) throw Error(Errc::WrongPairing, "(delta_Y, beta) must be -1");
  if (!x.is_real_root(beta)) throw Error(Errc::NotRealRoot, to_string(beta) + " is not a real root");

  VertexSet j = y;
  for (int v : perp(x.cartan(), y)) j.push_back(v);
  std::sort(j.begin(), j.end());

  SimpleReduction out;
  Coeffs cur = beta;
  for (;;) {
    int step = -1;
    for (int v : j)
      if (x.coroot_pairing(v, cur) > 0) {
        step = v;
        break;
      }
    if (step < 0) break;
    x.reflect_in_place(step, cur);
    out.word.letters.push_back(step);
  }
  VertexSet s = support(cur);
  if (s.size() != 1 || cur[s[0]] != 1) throw Error(Errc::Internal, "reduction did not reach a simple root");
  out.vertex = s[0];
  return out;
}

WeylWord parabolic_orbit_reduce(const RootSystem& x, const Coeffs& beta, const VertexSet& j, const Coeffs& zeta) {
  const auto n = static_cast<std::size_t>(x.rank());
  if (beta.size() != n) throw Error(Errc::PreconditionMismatch, "beta has the wrong length");
  for (int v : j)
    if (v < 0 || v >= x.rank()) throw Error(Errc::IndexOutOfRange, "vertex out of range", {v});
  VertexSet rest;
  for (int v = 0; v < x.rank(); ++v)
    if (!contains(j, v)) rest.push_back(v);
  if (zeta.size() != rest.size()) throw Error(Errc::PreconditionMismatch, "zeta must list the coefficients outside J");
  if (rest.empty() || is_zero(zeta)) throw Error(Errc::PreconditionMismatch, "zeta must be nonzero");
  if (!RootSystem(subdiagram(x.cartan(), rest)).is_root(zeta))
    throw Error(Errc::EmptyOrbitClass, to_string(zeta) + " is not a root of the complement of J");
  if (!x.is_real_root(beta)) throw Error(Errc::PreconditionMismatch, "beta is not a real root");
  if (restrict_to(beta, rest) != zeta) throw Error(Errc::PreconditionMismatch, "beta does not restrict to zeta");
  Coeffs target = embed(zeta, rest, n);
  if (x.norm(target) != x.norm(beta)) throw Error(Errc::PreconditionMismatch, "zeta and beta have different norms");

  const int s = sign_of(zeta);
  Coeffs cur = s > 0 ? beta : negated(beta);
  WeylWord w;
  for (;;) {
    int step = -1;
    for (int v : j)
      if (x.coroot_pairing(v, cur) > 0) {
        step = v;
        break;
      }
    if (step < 0) break;
    x.reflect_in_place(step, cur);
    w.letters.push_back(step);
  }
  if (s < 0) cur = negated(cur);
  if (cur != target) throw Error(Errc::Internal, "parabolic descent did not reach zeta");
  return w;
}

PiSystem compose(const PiSystem& sigma1, const PiSystem& sigma2, const std::optional<std::vector<int>>& bijection) {
  const Gcm& m1 = sigma1.type_matrix();
  const Gcm& b2 = sigma2.ambient().cartan();
  std::vector<int> bij(static_cast<std::size_t>(b2.rank()));
  if (bijection) {
    bij = *bijection;
    if (static_cast<int>(bij.size()) != b2.rank() || b2.rank() != m1.rank())
      throw Error(Errc::TypeMismatch, "bijection size does not match the ranks");
    std::vector<int> sorted = bij;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < b2.rank(); ++i)
      if (sorted[i] != i) throw Error(Errc::TypeMismatch, "not a bijection");
    for (int i = 0; i < b2.rank(); ++i)
      for (int k = 0; k < b2.rank(); ++k)
        if (m1(bij[i], bij[k]) != b2(i, k)) throw Error(Errc::TypeMismatch, "bijection does not match the matrices", {i, k});
  } else {
    if (!(m1 == b2)) throw Error(Errc::TypeMismatch, "ambient of the inner system differs from M(Sigma1)");
    for (int i = 0; i < b2.rank(); ++i) bij[i] = i;
  }
  std::vector<Coeffs> images;
  for (std::size_t r = 0; r < sigma2.size(); ++r) {
    Coeffs img = sigma1.ambient().zero();
    for (int i = 0; i < b2.rank(); ++i)
      if (sigma2[r][i] != 0) img = add(img, scaled(sigma1[bij[i]], sigma2[r][i]));
    images.push_back(std::move(img));
  }
  return check_pi_system(sigma1.ambient_ptr(), std::move(images));
}

}  // namespace pisys
