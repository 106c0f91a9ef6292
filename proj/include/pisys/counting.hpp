#pragma once

#include "pisys/gcm.hpp"
#include "pisys/options.hpp"
#include "pisys/overext.hpp"
#include "pisys/pisystem.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pisys {

// Frozen finite_mult values, one JSON object per line:
//   {"k": "D8", "z": "E8", "value": 1, "oracle": "..."}
class FiniteMultTable {
 public:
  struct Entry {
    std::string k, z;
    std::uint64_t value = 0;
    std::string oracle;
  };

  // Throws Error{ParseError}.
  static FiniteMultTable load(const std::string& path);
  static FiniteMultTable parse(std::string_view jsonl);
  // Table named by $PISYS_TABLE, or an empty table when unset.
  static FiniteMultTable from_env();

  void add(Entry e);
  std::optional<std::uint64_t> lookup(std::string_view k, std::string_view z) const;
  const std::vector<Entry>& entries() const noexcept { return entries_; }
  std::string to_jsonl() const;

 private:
  std::vector<Entry> entries_;
};

inline constexpr std::string_view kOracleVersion = "pisys-finite-oracle/1";

// Number of W(z)-orbits of pi-systems of type k among the roots of z (both
// of finite type), pi-systems taken as sets. Computed live up to
// opts.finite_live_cap, otherwise from opts.table.
// Throws Error{WrongClass | RankCapExceeded | TableConflict | BudgetExceeded}.
std::uint64_t finite_mult(const Gcm& k, const Gcm& z, const Options& opts = {});

// Live count. Enumerates one labeled tuple per W-orbit (each element dominant
// for the stabilizer of the previous ones), then merges labelings related by
// diagram automorphisms of k.
std::uint64_t finite_mult_live(const Gcm& k, const Gcm& z, const Options& opts = {});

// Reference count: every pi-system of type k as a set, grouped by
// breadth-first closure under simple reflections.
std::uint64_t finite_mult_bruteforce(const Gcm& k, const Gcm& z, const Options& opts = {});

struct CertificateEntry {
  VertexSet vertices;       // Ext subdiagram Z of the ambient
  std::string type;         // catalog name of Z
  std::string finite_type;  // catalog name of its finite part
  std::uint64_t finite_mult = 0;
};

struct MultReport {
  Gcm k, x;
  std::optional<std::uint64_t> value;  // empty means infinite
  std::string method;                  // "a1pp", "ext", "finite" or "affine"
  std::vector<CertificateEntry> certificate;
  // affine K: a witness system, its support and the k-invariants of the
  // shifted family p = 0..3
  std::optional<PiSystem> witness;
  VertexSet witness_support;
  std::vector<Int> family_k;

  bool infinite() const { return !value.has_value(); }
};

// Throws Error{NotSimplyLaced | RankCapExceeded}.
MultReport mult_a1pp(const Gcm& x, const Options& opts = {});
// Throws Error{NotExtType | NotSimplyLaced | RankCapExceeded}.
MultReport mult_ext(const Gcm& k, const Gcm& x, const Options& opts = {});
// Dispatch on the class of k: Ext, affine (witness search up to `height`)
// or finite-in-finite. Throws Error{Undetermined} when an affine search
// finds no witness, Error{NotExtType} for other types.
MultReport mult(const Gcm& k, const Gcm& x, int height, const Options& opts = {});

// All pi-systems of type k whose roots have height at most h in absolute
// value, one per set, ordered by their sorted candidate indices. Each is
// labeled so that M(Sigma) equals k exactly.
// Throws Error{BudgetExceeded}.
std::vector<PiSystem> enumerate_pi_systems(const RootSystemPtr& x, const Gcm& k, int h, const Options& opts = {});

struct OrbitClass {
  Sign sign = Sign::Positive;
  VertexSet ext_subdiagram;
  std::vector<Coeffs> finite_rep;  // ambient coordinates

  friend bool operator==(const OrbitClass&, const OrbitClass&) = default;
  friend bool operator<(const OrbitClass& a, const OrbitClass& b);
};

struct Canonicalization {
  OrbitClass cls;
  // word carrying sign * pi onto the representative (as a set)
  WeylWord word;
  PiSystem representative;
};

// Throws Error{NotExtType | NotSimplyLaced}.
Canonicalization canonicalize(const PiSystem& pi);

struct CrossCheck {
  std::size_t enumerated = 0;
  std::size_t classes = 0;
  std::uint64_t expected = 0;
  bool agrees() const { return classes == expected; }
};

// Enumerates type-k systems up to height h, canonicalizes each, and counts
// the distinct classes against mult_ext.
CrossCheck cross_check_mult(const Gcm& k, const RootSystemPtr& x, int h, const Options& opts = {});

}  // namespace pisys
