#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace pisys {

// cpp_int keeps values that fit in a machine word inline and only allocates
// once a coefficient outgrows it; reflection words in indefinite type make
// coefficients grow geometrically.
using Int = boost::multiprecision::cpp_int;

// Coefficients of a root-lattice element over the simple roots.
using Coeffs = std::vector<Int>;

// Sorted list of Dynkin-diagram vertices.
using VertexSet = std::vector<int>;

Int height(const Coeffs& c);
bool is_zero(const Coeffs& c);
// +1 if all coefficients are >= 0 (and some > 0), -1 if all <= 0, 0 if mixed or zero.
int sign_of(const Coeffs& c);
Coeffs negated(Coeffs c);
Coeffs add(const Coeffs& a, const Coeffs& b);
Coeffs sub(const Coeffs& a, const Coeffs& b);
Coeffs scaled(const Coeffs& a, const Int& k);
Coeffs unit_vector(std::size_t n, std::size_t i);
VertexSet support(const Coeffs& c);
bool supported_in(const Coeffs& c, const VertexSet& s);

// Height first, then lexicographic coefficients.
bool height_lex_less(const Coeffs& a, const Coeffs& b);

// Zero-extension of a vector over `verts` to ambient rank n, and the inverse restriction.
Coeffs embed(const Coeffs& sub, const VertexSet& verts, std::size_t n);
Coeffs restrict_to(const Coeffs& full, const VertexSet& verts);

std::string to_string(const Coeffs& c);

struct CoeffsHash {
  std::size_t operator()(const Coeffs& c) const noexcept;
};

inline bool contains(const VertexSet& s, int v) {
  for (int x : s)
    if (x == v) return true;
  return false;
}

}  // namespace pisys
