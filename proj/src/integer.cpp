#include "pisys/integer.hpp"

#include "pisys/error.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace pisys {

namespace {

constexpr std::string_view kErrcNames[] = {
    "NonSquare",        "DiagonalNotTwo",
    "PositiveOffDiagonal", "AsymmetricZero",
    "NotSymmetrizable", "UnknownName",
    "RankOutOfRange",   "IndexOutOfRange",
    "WrongClass",       "IsotropicCoroot",
    "NotARoot",         "BudgetExceeded",
    "NotRealRoot",      "DuplicateRoot",
    "DifferenceIsRoot", "NotLinearlyIndependent",
    "DecomposableType", "NotAffineType",
    "NotSupportedInY",  "WrongPairing",
    "EmptyOrbitClass",  "PreconditionMismatch",
    "TypeMismatch",     "NotSimplyLaced",
    "Decomposable",     "AmbiguousExt",
    "RankCapExceeded",  "NotExt",
    "NotInFinitePart",  "NotExtType",
    "TableConflict",    "Undetermined",
    "ParseError",       "Internal",
};

static_assert(std::size(kErrcNames) == static_cast<std::size_t>(Errc::Internal) + 1);

}  // namespace

std::string_view errc_name(Errc code) { return kErrcNames[static_cast<std::size_t>(code)]; }

std::string Error::diagnostic() const {
  std::string out(errc_name(code_));
  if (!indices_.empty()) {
    out += '(';
    for (std::size_t i = 0; i < indices_.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(indices_[i]);
    }
    out += ')';
  }
  return out;
}

Int height(const Coeffs& c) {
  Int h = 0;
  for (const auto& x : c) h += x;
  return h;
}

bool is_zero(const Coeffs& c) {
  return std::all_of(c.begin(), c.end(), [](const Int& x) { return x == 0; });
}

int sign_of(const Coeffs& c) {
  bool pos = false, neg = false;
  for (const auto& x : c) {
    if (x > 0) pos = true;
    if (x < 0) neg = true;
  }
  if (pos && !neg) return 1;
  if (neg && !pos) return -1;
  return 0;
}

Coeffs negated(Coeffs c) {
  for (auto& x : c) x = -x;
  return c;
}

Coeffs add(const Coeffs& a, const Coeffs& b) {
  Coeffs r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Coeffs sub(const Coeffs& a, const Coeffs& b) {
  Coeffs r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Coeffs scaled(const Coeffs& a, const Int& k) {
  Coeffs r(a);
  for (auto& x : r) x *= k;
  return r;
}

Coeffs unit_vector(std::size_t n, std::size_t i) {
  Coeffs r(n, Int(0));
  r.at(i) = 1;
  return r;
}

VertexSet support(const Coeffs& c) {
  VertexSet s;
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i] != 0) s.push_back(static_cast<int>(i));
  return s;
}

bool supported_in(const Coeffs& c, const VertexSet& s) {
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i] != 0 && !contains(s, static_cast<int>(i))) return false;
  return true;
}

bool height_lex_less(const Coeffs& a, const Coeffs& b) {
  Int ha = height(a), hb = height(b);
  if (ha != hb) return ha < hb;
  return a < b;
}

Coeffs embed(const Coeffs& sub, const VertexSet& verts, std::size_t n) {
  Coeffs r(n, Int(0));
  for (std::size_t k = 0; k < verts.size(); ++k) r.at(static_cast<std::size_t>(verts[k])) = sub.at(k);
  return r;
}

Coeffs restrict_to(const Coeffs& full, const VertexSet& verts) {
  Coeffs r;
  r.reserve(verts.size());
  for (int v : verts) r.push_back(full.at(static_cast<std::size_t>(v)));
  return r;
}

std::string to_string(const Coeffs& c) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) os << ',';
    os << c[i];
  }
  os << ']';
  return os.str();
}

std::size_t CoeffsHash::operator()(const Coeffs& c) const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (const auto& x : c) {
    std::size_t v;
    if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
      v = std::hash<std::int64_t>{}(x.convert_to<std::int64_t>());
    else
      v = std::hash<std::string>{}(x.str());
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace pisys
