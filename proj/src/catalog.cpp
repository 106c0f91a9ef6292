#include "pisys/catalog.hpp"

#include "pisys/error.hpp"

#include <charconv>
#include <string>

namespace pisys {

namespace {

class Builder {
 public:
  explicit Builder(int n) : rows_(static_cast<std::size_t>(n), std::vector<long long>(static_cast<std::size_t>(n), 0)) {
    for (int i = 0; i < n; ++i) rows_[i][i] = 2;
  }

  int size() const { return static_cast<int>(rows_.size()); }

  // Appends a vertex and returns its index.
  int add_vertex() {
    for (auto& r : rows_) r.push_back(0);
    rows_.emplace_back(rows_.size() + 1, 0);
    rows_.back().back() = 2;
    return size() - 1;
  }

  void bond(int i, int j, long long aij = -1, long long aji = -1) {
    rows_[i][j] = aij;
    rows_[j][i] = aji;
  }

  Gcm build(std::vector<std::string> labels) const { return Gcm::from_rows(rows_, std::move(labels)); }

 private:
  std::vector<std::vector<long long>> rows_;
};

[[noreturn]] void unknown(std::string_view name) {
  throw Error(Errc::UnknownName, "unknown diagram name '" + std::string(name) + "'");
}

[[noreturn]] void out_of_range(std::string_view name) {
  throw Error(Errc::RankOutOfRange, "rank out of range for '" + std::string(name) + "'");
}

bool finite_in_range(char letter, int n) {
  switch (letter) {
    case 'A': return n >= 1;
    case 'B': return n >= 2;
    case 'C': return n >= 2;
    case 'D': return n >= 4;
    case 'E': return n >= 6 && n <= 8;
    case 'F': return n == 4;
    case 'G': return n == 2;
    default: return false;
  }
}

bool affine_in_range(char letter, int n) {
  if (letter == 'B') return n >= 3;
  return finite_in_range(letter, n);
}

// Finite type in Bourbaki numbering, with a_ij = <alpha_i^vee, alpha_j>.
Builder finite_type(char letter, int n) {
  Builder b(n);
  switch (letter) {
    case 'A':
      for (int i = 0; i + 1 < n; ++i) b.bond(i, i + 1);
      break;
    case 'B':  // alpha_n short
      for (int i = 0; i + 2 < n; ++i) b.bond(i, i + 1);
      b.bond(n - 2, n - 1, -1, -2);
      break;
    case 'C':  // alpha_n long
      for (int i = 0; i + 2 < n; ++i) b.bond(i, i + 1);
      b.bond(n - 2, n - 1, -2, -1);
      break;
    case 'D':
      for (int i = 0; i + 2 < n; ++i) b.bond(i, i + 1);
      b.bond(n - 3, n - 1);
      break;
    case 'E':  // 1-3-4-...-n with 2 attached to 4
      b.bond(0, 2);
      for (int i = 2; i + 1 < n; ++i) b.bond(i, i + 1);
      b.bond(1, 3);
      break;
    case 'F':  // alpha_1, alpha_2 long
      b.bond(0, 1);
      b.bond(1, 2, -1, -2);
      b.bond(2, 3);
      break;
    case 'G':  // alpha_1 short
      b.bond(0, 1, -3, -1);
      break;
  }
  return b;
}

// Appends alpha_0 = -theta as vertex n.
void add_affine_vertex(Builder& b, char letter, int n) {
  const int q = b.add_vertex();
  switch (letter) {
    case 'A':
      if (n == 1) {
        b.bond(0, q, -2, -2);
      } else {
        b.bond(0, q);
        b.bond(n - 1, q);
      }
      break;
    case 'B': b.bond(1, q); break;
    case 'C': b.bond(0, q, -2, -1); break;  // alpha_0 long, alpha_1 short
    case 'D': b.bond(1, q); break;
    case 'E':
      if (n == 6) b.bond(1, q);
      if (n == 7) b.bond(0, q);
      if (n == 8) b.bond(7, q);
      break;
    case 'F': b.bond(0, q); break;
    case 'G': b.bond(1, q); break;
  }
}

std::vector<std::string> bourbaki_labels(int n) {
  std::vector<std::string> l;
  for (int i = 1; i <= n; ++i) l.push_back(std::to_string(i));
  return l;
}

Gcm fig2(int k) {
  Builder b(k <= 4 ? 3 : (k <= 6 ? 4 : (k == 7 ? 5 : 6)));
  switch (k) {
    case 1:  // path with two double bonds
      b.bond(0, 1, -2, -2);
      b.bond(1, 2, -2, -2);
      break;
    case 2:  // triangle, two double bonds
      b.bond(0, 1, -2, -2);
      b.bond(0, 2, -2, -2);
      b.bond(1, 2);
      break;
    case 3:  // triangle, three double bonds
      b.bond(0, 1, -2, -2);
      b.bond(0, 2, -2, -2);
      b.bond(1, 2, -2, -2);
      break;
    case 4:  // triangle, one double bond
      b.bond(0, 1);
      b.bond(0, 2, -2, -2);
      b.bond(1, 2);
      break;
    case 5:  // complete graph on four vertices
      for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) b.bond(i, j);
      break;
    case 6:  // complete graph on four vertices minus one edge
      b.bond(0, 1);
      b.bond(0, 2);
      b.bond(0, 3);
      b.bond(1, 2);
      b.bond(2, 3);
      break;
    case 7:  // square 0-1-2-3 plus vertex 4 joined to 1 and 3
      b.bond(0, 1);
      b.bond(1, 2);
      b.bond(2, 3);
      b.bond(3, 0);
      b.bond(1, 4);
      b.bond(3, 4);
      break;
    case 8:  // star with five leaves
      for (int i = 1; i <= 5; ++i) b.bond(0, i);
      break;
    default: unknown("hyp:fig2:" + std::to_string(k));
  }
  return b.build({});
}

int parse_int(std::string_view s, std::string_view whole) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size() || s.front() == '0') unknown(whole);
  return v;
}

}  // namespace

Gcm hyperbolic_rank2(int a) {
  if (a < 1) throw Error(Errc::RankOutOfRange, "rank 2 symmetric family needs a >= 1");
  return Gcm::from_rows({{2, -a}, {-a, 2}});
}

Gcm named_diagram(std::string_view name, int rank_cap) {
  if (name.rfind("hyp:fig2:", 0) == 0) {
    int k = parse_int(name.substr(9), name);
    if (k < 1 || k > kFig2Count) unknown(name);
    return fig2(k);
  }
  if (name == "E9") return named_diagram("E8~", rank_cap);
  if (name == "E10") return named_diagram("E8++", rank_cap);
  if (name == "E11") {
    Gcm e10 = named_diagram("E8++", rank_cap);
    auto rows = e10.rows();
    for (auto& r : rows) r.push_back(0);
    rows.emplace_back(11, 0);
    rows[10][10] = 2;
    rows[9][10] = rows[10][9] = -1;
    auto labels = e10.labels();
    labels.push_back("p'");
    return Gcm::from_rows(rows, std::move(labels));
  }

  if (name.size() < 2) unknown(name);
  const char letter = name.front();
  if (letter < 'A' || letter > 'G') unknown(name);
  std::string_view rest = name.substr(1);
  int level = 0;  // 0 finite, 1 affine, 2 overextended
  if (rest.size() >= 2 && rest.substr(rest.size() - 2) == "++") {
    level = 2;
    rest.remove_suffix(2);
  } else if (!rest.empty() && (rest.back() == '~' || rest.back() == '+')) {
    level = 1;
    rest.remove_suffix(1);
  }
  const int n = parse_int(rest, name);

  if (level == 2 && letter != 'A' && letter != 'D' && letter != 'E') unknown(name);
  const bool in_range = level == 0 ? finite_in_range(letter, n) : affine_in_range(letter, n);
  if (!in_range) out_of_range(name);
  if (n + level > rank_cap) out_of_range(name);

  Builder b = finite_type(letter, n);
  auto labels = bourbaki_labels(n);
  if (level >= 1) {
    add_affine_vertex(b, letter, n);
    labels.push_back("0");
  }
  if (level == 2) {
    const int p = b.add_vertex();
    b.bond(n, p);
    labels.push_back("p");
  }
  return b.build(std::move(labels));
}

std::vector<std::string> catalog_names(int rank) {
  std::vector<std::string> names;
  const std::string r = std::to_string(rank);
  for (char letter : std::string("ABCDEFG"))
    if (finite_in_range(letter, rank)) names.push_back(letter + r);
  if (rank >= 2) {
    const std::string r1 = std::to_string(rank - 1);
    for (char letter : std::string("ABCDEFG"))
      if (affine_in_range(letter, rank - 1)) names.push_back(letter + r1 + "~");
  }
  if (rank >= 3) {
    const std::string r2 = std::to_string(rank - 2);
    for (char letter : std::string("ADE"))
      if (affine_in_range(letter, rank - 2)) names.push_back(letter + r2 + "++");
  }
  if (rank == 11) names.emplace_back("E11");
  for (int k = 1; k <= kFig2Count; ++k)
    if (fig2(k).rank() == rank) names.push_back("hyp:fig2:" + std::to_string(k));
  return names;
}

std::optional<NamedMatch> identify_diagram(const Gcm& m) {
  for (const auto& name : catalog_names(m.rank())) {
    Gcm candidate = named_diagram(name, std::max(m.rank(), kDefaultRankCap));
    if (auto bij = diagram_isomorphic(m, candidate)) return NamedMatch{name, *bij};
  }
  return std::nullopt;
}

}  // namespace pisys
