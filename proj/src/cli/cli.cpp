#include "pisys/cli.hpp"

#include "pisys/catalog.hpp"
#include "pisys/counting.hpp"
#include "pisys/error.hpp"
#include "pisys/overext.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <limits>
#include <numeric>
#include <sstream>
#include <thread>

namespace pisys::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr int kSchema = 1;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// JSON encoding

Json int_json(const Int& v) {
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
    return static_cast<long long>(v);
  return v.str();
}

Json coeffs_json(const Coeffs& c) {
  Json a = Json::array();
  for (const auto& v : c) a.push_back(int_json(v));
  return a;
}

Json coeffs_list_json(const std::vector<Coeffs>& cs) {
  Json a = Json::array();
  for (const auto& c : cs) a.push_back(coeffs_json(c));
  return a;
}

Json word_json(const WeylWord& w) { return w.letters; }

Json gcm_json(const Gcm& g) {
  Json j;
  j["rank"] = g.rank();
  j["matrix"] = g.rows();
  j["labels"] = g.labels();
  if (auto m = identify_diagram(g)) j["name"] = m->name;
  return j;
}

std::string set_text(const VertexSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "}";
}

std::string word_text(const WeylWord& w) {
  if (w.empty()) return "(empty)";
  std::string out;
  for (std::size_t i = 0; i < w.letters.size(); ++i) out += (i ? " " : "") + std::string("s") + std::to_string(w.letters[i]);
  return out;
}

// ---------------------------------------------------------------------------
// argument decoding

Json read_json(const std::string& text, const std::string& what) {
  std::string body = text;
  if (!text.empty() && text[0] == '@') {
    std::ifstream f(text.substr(1));
    if (!f) throw UsageError("cannot read " + what + " file " + text.substr(1));
    std::stringstream ss;
    ss << f.rdbuf();
    body = ss.str();
  }
  try {
    return Json::parse(body);
  } catch (const nlohmann::json::exception& e) {
    throw UsageError("malformed JSON in " + what + ": " + e.what());
  }
}

Int json_int(const Json& j, const std::string& what) {
  if (j.is_number_integer()) return Int(j.get<long long>());
  if (j.is_string()) {
    try {
      return Int(j.get<std::string>());
    } catch (const std::exception&) {
    }
  }
  throw UsageError(what + " must be an integer");
}

std::vector<std::vector<long long>> json_matrix(const Json& j) {
  if (!j.is_array()) throw UsageError("matrix must be an array of rows");
  std::vector<std::vector<long long>> rows;
  for (const auto& r : j) {
    if (!r.is_array()) throw UsageError("matrix rows must be arrays");
    std::vector<long long> row;
    for (const auto& v : r) {
      if (!v.is_number_integer()) throw UsageError("matrix entries must be integers");
      row.push_back(v.get<long long>());
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

Gcm gcm_from_json(const Json& j) {
  if (j.is_string()) return named_diagram(j.get<std::string>());
  if (j.is_array()) return Gcm::from_rows(json_matrix(j));
  if (!j.is_object() || !j.contains("matrix")) throw UsageError("diagram must be a name, a matrix, or {\"rank\",\"matrix\",\"labels\"}");
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    if (!j["labels"].is_array()) throw UsageError("labels must be an array of strings");
    for (const auto& l : j["labels"]) {
      if (!l.is_string()) throw UsageError("labels must be an array of strings");
      labels.push_back(l.get<std::string>());
    }
  }
  auto rows = json_matrix(j["matrix"]);
  if (j.contains("rank") && (!j["rank"].is_number_integer() || j["rank"].get<long long>() != static_cast<long long>(rows.size())))
    throw UsageError("rank does not match the matrix");
  if (!labels.empty() && labels.size() != rows.size()) throw UsageError("labels do not match the rank");
  return Gcm::from_rows(rows, std::move(labels));
}

// A diagram argument: catalog name, @file.json, or inline JSON.
Gcm parse_diagram(const std::string& arg) {
  if (arg.empty()) throw UsageError("empty diagram argument");
  if (arg[0] == '@' || arg[0] == '{' || arg[0] == '[') return gcm_from_json(read_json(arg, "diagram"));
  return named_diagram(arg);
}

std::string display_name(const std::string& arg, const Gcm& g) {
  if (!arg.empty() && arg[0] != '@' && arg[0] != '{' && arg[0] != '[') return arg;
  auto m = identify_diagram(g);
  return m ? m->name : "rank-" + std::to_string(g.rank()) + " diagram";
}

struct RootsInput {
  RootSystemPtr ambient;
  std::vector<Coeffs> roots;
};

// A roots argument: a JSON array of coefficient vectors, or an object with
// "roots" and optionally "ambient" (as printed by check and canonicalize).
RootsInput parse_roots(const std::string& arg, const std::string& ambient_arg) {
  Json j = read_json(arg, "roots");
  std::optional<Gcm> from_input;
  Json list = j;
  if (j.is_object()) {
    if (!j.contains("roots")) throw UsageError("roots object needs a \"roots\" field");
    list = j["roots"];
    if (j.contains("ambient")) from_input = gcm_from_json(j["ambient"]);
  }
  std::optional<Gcm> ambient;
  if (!ambient_arg.empty()) ambient = parse_diagram(ambient_arg);
  if (ambient && from_input && !(*ambient == *from_input)) throw UsageError("--ambient disagrees with the ambient in the input");
  if (!ambient) ambient = from_input;
  if (!ambient) throw UsageError("no ambient diagram: pass --ambient or an object with \"ambient\"");
  if (!list.is_array()) throw UsageError("roots must be an array of coefficient vectors");
  RootsInput in;
  in.ambient = make_root_system(*ambient);
  for (const auto& r : list) {
    if (!r.is_array()) throw UsageError("each root must be an array of integers");
    Coeffs c;
    for (const auto& v : r) c.push_back(json_int(v, "root coefficient"));
    in.roots.push_back(std::move(c));
  }
  return in;
}

std::string type_name(const PiSystem& s) {
  auto m = pi_type(s);
  return m ? m->name : std::string();
}

Json type_name_json(const PiSystem& s) {
  auto n = type_name(s);
  return n.empty() ? Json(nullptr) : Json(n);
}

std::string matrix_text(const Gcm& g) {
  std::string out;
  for (const auto& r : g.rows()) {
    out += "  [";
    for (std::size_t i = 0; i < r.size(); ++i) out += (i ? ", " : "") + std::to_string(r[i]);
    out += "]\n";
  }
  return out;
}

std::string roots_text(const std::vector<Coeffs>& roots) {
  std::string out;
  for (std::size_t i = 0; i < roots.size(); ++i) out += "  " + std::to_string(i) + ": " + to_string(roots[i]) + "\n";
  return out;
}

// ---------------------------------------------------------------------------
// commands

struct Context {
  bool json = false;
  Options opts;
  FiniteMultTable table;
  std::ostream& out;
};

void emit(Context& c, Json j) {
  Json full;
  if (j.contains("value")) full["value"] = j["value"];
  full["schema"] = kSchema;
  for (auto& [k, v] : j.items())
    if (k != "value") full[k] = v;
  c.out << full.dump(2) << "\n";
}

void cmd_classify(Context& c, const std::string& arg) {
  Gcm g = parse_diagram(arg);
  GcmClass cls = classify(g);
  std::optional<ExtDecomposition> d;
  if (g.symmetric() && cls.indecomposable()) d = ext_decompose(g);
  auto named = identify_diagram(g);
  if (c.json) {
    Json j;
    j["diagram"] = gcm_json(g);
    j["kind"] = kind_name(cls.kind);
    j["hyperbolic"] = cls.hyperbolic;
    j["indecomposable"] = cls.indecomposable();
    j["symmetric"] = g.symmetric();
    j["ext"] = d.has_value();
    if (d) {
      j["decomposition"] = {{"p", d->p},
                            {"q", d->q},
                            {"affine_part", d->affine_part},
                            {"finite_part", d->finite_part},
                            {"delta", coeffs_json(d->delta)},
                            {"theta", coeffs_json(d->theta)}};
    } else {
      j["decomposition"] = nullptr;
    }
    Json comps = Json::array();
    for (const auto& comp : cls.components) {
      Json cj;
      cj["vertices"] = comp.vertices;
      cj["kind"] = kind_name(comp.kind);
      cj["hyperbolic"] = comp.hyperbolic;
      cj["delta"] = comp.delta.empty() ? Json(nullptr) : coeffs_json(comp.delta);
      comps.push_back(cj);
    }
    j["components"] = comps;
    j["symmetrizer"] = Json::array();
    for (const auto& v : symmetrize(g).d) j["symmetrizer"].push_back(int_json(v));
    emit(c, j);
    return;
  }
  c.out << kind_name(cls.kind) << ", " << (cls.hyperbolic ? "hyperbolic" : "not hyperbolic") << ", "
        << (d ? "Ext" : "not Ext") << "\n";
  if (named) c.out << "catalog name: " << named->name << "\n";
  if (cls.indecomposable() && cls.kind == TypeKind::Affine) c.out << "delta: " << to_string(cls.delta) << "\n";
  if (d)
    c.out << "overextended vertex p = " << d->p << ", q = " << d->q << ", affine part " << set_text(d->affine_part)
          << ", finite part " << set_text(d->finite_part) << "\n";
}

void cmd_subdiagrams(Context& c, const std::string& arg) {
  Gcm x = parse_diagram(arg);
  auto subs = ext_subdiagrams(x, c.opts);
  if (c.json) {
    Json list = Json::array();
    for (const auto& s : subs) {
      Json e;
      e["vertices"] = s.vertices;
      e["type"] = s.type;
      e["p"] = s.decomposition.p;
      e["q"] = s.decomposition.q;
      e["finite_part"] = s.decomposition.finite_part;
      list.push_back(e);
    }
    emit(c, {{"ambient", gcm_json(x)}, {"count", subs.size()}, {"subdiagrams", list}});
    return;
  }
  c.out << subs.size() << " Ext subdiagram" << (subs.size() == 1 ? "" : "s") << " in " << display_name(arg, x) << "\n";
  for (const auto& s : subs)
    c.out << "  " << s.type << " on " << set_text(s.vertices) << " (p = " << s.decomposition.p << ")\n";
}

void cmd_check(Context& c, const std::string& roots, const std::string& ambient) {
  RootsInput in = parse_roots(roots, ambient);
  PiSystem s = check_pi_system(in.ambient, in.roots);
  if (c.json) {
    emit(c, {{"ambient", gcm_json(s.ambient().cartan())},
             {"roots", coeffs_list_json(s.coeffs())},
             {"type_matrix", s.type_matrix().rows()},
             {"type", type_name_json(s)},
             {"linearly_independent", s.linearly_independent()}});
    return;
  }
  std::string t = type_name(s);
  c.out << "valid pi-system of " << s.size() << " roots, type " << (t.empty() ? "(unnamed)" : t) << ", "
        << (s.linearly_independent() ? "linearly independent" : "linearly dependent") << "\n";
  c.out << roots_text(s.coeffs()) << "type matrix:\n" << matrix_text(s.type_matrix());
}

void cmd_type(Context& c, const std::string& roots, const std::string& ambient) {
  RootsInput in = parse_roots(roots, ambient);
  PiSystem s = check_pi_system(in.ambient, in.roots);
  GcmClass cls = classify(s.type_matrix());
  std::optional<ExtDecomposition> d;
  if (s.type_matrix().symmetric() && cls.indecomposable()) d = ext_decompose(s.type_matrix());
  if (c.json) {
    emit(c, {{"type", type_name_json(s)},
             {"type_matrix", s.type_matrix().rows()},
             {"kind", kind_name(cls.kind)},
             {"hyperbolic", cls.hyperbolic},
             {"ext", d.has_value()}});
    return;
  }
  std::string t = type_name(s);
  c.out << (t.empty() ? "(unnamed)" : t) << ": " << kind_name(cls.kind) << (cls.hyperbolic ? ", hyperbolic" : "")
        << (d ? ", Ext" : "") << "\n"
        << matrix_text(s.type_matrix());
}

void cmd_normalize(Context& c, const std::string& roots, const std::string& ambient) {
  RootsInput in = parse_roots(roots, ambient);
  PiSystem s = check_pi_system(in.ambient, in.roots);
  Normalization n = sign_normalize(s);
  if (c.json) {
    emit(c, {{"ambient", gcm_json(s.ambient().cartan())},
             {"sign", sign_name(n.sign)},
             {"word", word_json(n.word)},
             {"roots", coeffs_list_json(n.system.coeffs())}});
    return;
  }
  c.out << "sign: " << sign_name(n.sign) << "\nword: " << word_text(n.word) << "\n" << roots_text(n.system.coeffs());
}

void cmd_support(Context& c, const std::string& roots, const std::string& ambient) {
  RootsInput in = parse_roots(roots, ambient);
  PiSystem s = check_pi_system(in.ambient, in.roots);
  AffineSupport a = locate_affine_support(s);
  if (c.json) {
    emit(c, {{"ambient", gcm_json(s.ambient().cartan())},
             {"support", a.subdiagram},
             {"word", word_json(a.word)},
             {"k", int_json(a.k)}});
    return;
  }
  c.out << "affine support Y = " << set_text(a.subdiagram) << ", k = " << a.k.str() << "\nword: " << word_text(a.word) << "\n";
}

void cmd_mult(Context& c, const std::string& karg, const std::string& xarg, int height, bool cross) {
  Gcm k = parse_diagram(karg);
  Gcm x = parse_diagram(xarg);
  MultReport r = mult(k, x, height, c.opts);
  std::optional<CrossCheck> cc;
  std::string skipped;
  if (cross) {
    if (r.method != "a1pp" && r.method != "ext")
      skipped = "cross-check applies to Ext-type K only";
    else if (x.rank() > 5)
      skipped = "cross-check runs for ambient rank at most 5";
    else
      cc = cross_check_mult(k, make_root_system(x), height, c.opts);
  }
  if (c.json) {
    Json j;
    j["value"] = r.value ? Json(*r.value) : Json("infinite");
    j["k"] = gcm_json(k);
    j["x"] = gcm_json(x);
    j["method"] = r.method;
    Json cert = Json::array();
    for (const auto& e : r.certificate)
      cert.push_back({{"vertices", e.vertices}, {"type", e.type}, {"finite_type", e.finite_type}, {"finite_mult", e.finite_mult}});
    j["certificate"] = cert;
    if (r.witness) {
      j["witness"] = {{"roots", coeffs_list_json(r.witness->coeffs())}, {"support", r.witness_support}};
      Json ks = Json::array();
      for (const auto& v : r.family_k) ks.push_back(int_json(v));
      j["witness"]["family_k"] = ks;
    }
    if (cross) {
      if (cc)
        j["cross_check"] = {{"height", height},
                            {"enumerated", cc->enumerated},
                            {"classes", cc->classes},
                            {"expected", cc->expected},
                            {"agrees", cc->agrees()}};
      else
        j["cross_check"] = {{"skipped", skipped}};
    }
    emit(c, j);
  } else {
    c.out << "mult(" << display_name(karg, k) << ", " << display_name(xarg, x)
          << ") = " << (r.value ? std::to_string(*r.value) : std::string("infinite")) << "  [" << r.method << "]\n";
    for (const auto& e : r.certificate)
      c.out << "  " << e.type << " on " << set_text(e.vertices) << ": finite part " << e.finite_type
            << ", finite_mult = " << e.finite_mult << "\n";
    if (r.witness) {
      c.out << "  witness on support " << set_text(r.witness_support) << ":\n" << roots_text(r.witness->coeffs());
      c.out << "  shifted family k =";
      for (const auto& v : r.family_k) c.out << " " << v.str();
      c.out << "\n";
    }
    if (cc)
      c.out << "cross-check at height " << height << ": " << cc->enumerated << " systems, " << cc->classes
            << " classes, expected " << cc->expected << (cc->agrees() ? " (agrees)" : " (DISAGREES)") << "\n";
    else if (cross)
      c.out << "cross-check skipped: " << skipped << "\n";
  }
  if (cc && !cc->agrees())
    throw Error(Errc::Internal, "enumerated class count " + std::to_string(cc->classes) + " differs from mult " +
                                    std::to_string(cc->expected));
}

void cmd_enumerate(Context& c, const std::string& karg, const std::string& xarg, int height) {
  Gcm k = parse_diagram(karg);
  Gcm x = parse_diagram(xarg);
  auto systems = enumerate_pi_systems(make_root_system(x), k, height, c.opts);
  if (c.json) {
    Json list = Json::array();
    for (const auto& s : systems) list.push_back(coeffs_list_json(s.coeffs()));
    emit(c, {{"ambient", gcm_json(x)}, {"k", gcm_json(k)}, {"height", height}, {"count", systems.size()}, {"systems", list}});
    return;
  }
  c.out << systems.size() << " pi-system" << (systems.size() == 1 ? "" : "s") << " of type " << display_name(karg, k)
        << " in " << display_name(xarg, x) << " up to height " << height << "\n";
  for (const auto& s : systems) {
    c.out << " ";
    for (const auto& r : s.coeffs()) c.out << " " << to_string(r);
    c.out << "\n";
  }
}

void cmd_canonicalize(Context& c, const std::string& roots, const std::string& ambient) {
  RootsInput in = parse_roots(roots, ambient);
  PiSystem s = check_pi_system(in.ambient, in.roots);
  Canonicalization can = canonicalize(s);
  PiSystem signed_rep = can.cls.sign == Sign::Negative ? can.representative.negated() : can.representative;
  if (c.json) {
    emit(c, {{"ambient", gcm_json(s.ambient().cartan())},
             {"sign", sign_name(can.cls.sign)},
             {"ext_subdiagram", can.cls.ext_subdiagram},
             {"finite_rep", coeffs_list_json(can.cls.finite_rep)},
             {"word", word_json(can.word)},
             {"roots", coeffs_list_json(signed_rep.coeffs())}});
    return;
  }
  auto z = ext_decompose_in(s.ambient().cartan(), can.cls.ext_subdiagram);
  auto zname = identify_diagram(subdiagram(s.ambient().cartan(), can.cls.ext_subdiagram));
  c.out << "sign: " << sign_name(can.cls.sign) << "\nZ = " << set_text(can.cls.ext_subdiagram)
        << (zname ? " (" + zname->name + ")" : std::string()) << "\nfinite representative:\n"
        << roots_text(can.cls.finite_rep) << "word: " << word_text(can.word) << "\nrepresentative:\n"
        << roots_text(signed_rep.coeffs());
}

void cmd_catalog(Context& c, const std::string& name) {
  if (!name.empty()) {
    Gcm g = parse_diagram(name);
    if (c.json) {
      emit(c, {{"diagram", gcm_json(g)}});
      return;
    }
    c.out << display_name(name, g) << " (rank " << g.rank() << ")\n" << matrix_text(g);
    return;
  }
  auto entries = hyperbolic_sl_catalog();
  if (c.json) {
    Json list = Json::array();
    for (const auto& e : entries)
      list.push_back({{"name", e.name}, {"rank", e.gcm.rank()}, {"ext", e.is_ext}, {"matrix", e.gcm.rows()}});
    emit(c, {{"entries", list}});
    return;
  }
  c.out << "simply-laced hyperbolic diagrams of rank >= 3:\n";
  for (const auto& e : entries)
    c.out << "  " << e.name << "  rank " << e.gcm.rank() << (e.is_ext ? "  Ext" : "") << "\n";
  c.out << "rank 2: [[2,-a],[-a,2]] for a >= 3\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Pi-systems in Kac-Moody root systems", "pisys"};
  app.require_subcommand(1);
  app.fallthrough();

  bool json = false;
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  app.add_flag("--json", json, "Machine-readable output");
  app.add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);

  std::string diagram, roots, ambient, kname, xname, cname;
  int height = 6;
  bool ext_only = false, cross = false;

  auto* classify_cmd = app.add_subcommand("classify", "Classify a diagram");
  classify_cmd->add_option("diagram", diagram, "Catalog name or @file.json")->required();

  auto* subs_cmd = app.add_subcommand("subdiagrams", "List Ext subdiagrams");
  subs_cmd->add_option("diagram", diagram, "Ambient diagram")->required();
  subs_cmd->add_flag("--ext", ext_only, "Ext subdiagrams (the only kind listed)");

  auto add_roots_cmd = [&](const std::string& name, const std::string& help) {
    auto* s = app.add_subcommand(name, help);
    s->add_option("roots", roots, "JSON list of coefficient vectors, or @file.json")->required();
    s->add_option("--ambient", ambient, "Ambient diagram");
    return s;
  };
  auto* check_cmd = add_roots_cmd("check", "Validate a pi-system");
  auto* type_cmd = add_roots_cmd("type", "Type matrix of a pi-system");
  auto* norm_cmd = add_roots_cmd("normalize", "Move a pi-system to one sign");
  auto* support_cmd = add_roots_cmd("support", "Locate the affine support of an affine-type pi-system");
  auto* canon_cmd = add_roots_cmd("canonicalize", "Orbit class of an Ext-type pi-system");

  auto* mult_cmd = app.add_subcommand("mult", "Number of W-orbits of pi-systems of type K in X");
  mult_cmd->add_option("K", kname, "Type diagram")->required();
  mult_cmd->add_option("X", xname, "Ambient diagram")->required();
  mult_cmd->add_option("--height", height, "Height bound for witness searches and the cross-check")->check(CLI::PositiveNumber);
  mult_cmd->add_flag("--cross-check", cross, "Compare with enumeration and canonicalization");

  auto* enum_cmd = app.add_subcommand("enumerate", "All pi-systems of type K in X up to a height");
  enum_cmd->add_option("K", kname, "Type diagram")->required();
  enum_cmd->add_option("X", xname, "Ambient diagram")->required();
  enum_cmd->add_option("--height", height, "Height bound")->required()->check(CLI::PositiveNumber);

  auto* catalog_cmd = app.add_subcommand("catalog", "Simply-laced hyperbolic catalog, or one named diagram");
  catalog_cmd->add_option("name", cname, "Diagram name");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << "run 'pisys --help' for the command list\n";
    return kExitUsage;
  }

  Context ctx{json, Options{}, FiniteMultTable{}, out};
  ctx.opts.threads = threads;
  try {
    ctx.table = FiniteMultTable::from_env();
    if (!ctx.table.entries().empty()) ctx.opts.table = &ctx.table;

    if (*classify_cmd) cmd_classify(ctx, diagram);
    else if (*subs_cmd) cmd_subdiagrams(ctx, diagram);
    else if (*check_cmd) cmd_check(ctx, roots, ambient);
    else if (*type_cmd) cmd_type(ctx, roots, ambient);
    else if (*norm_cmd) cmd_normalize(ctx, roots, ambient);
    else if (*support_cmd) cmd_support(ctx, roots, ambient);
    else if (*canon_cmd) cmd_canonicalize(ctx, roots, ambient);
    else if (*mult_cmd) cmd_mult(ctx, kname, xname, height, cross);
    else if (*enum_cmd) cmd_enumerate(ctx, kname, xname, height);
    else if (*catalog_cmd) cmd_catalog(ctx, cname);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    if (json) {
      Json j;
      j["schema"] = kSchema;
      j["error"] = errc_name(e.code());
      j["indices"] = e.indices();
      j["diagnostic"] = e.diagnostic();
      j["message"] = e.what();
      err << j.dump() << "\n";
    } else {
      err << "error: " << e.diagnostic() << ": " << e.what() << "\n";
    }
    return kExitDomain;
  }
  return kExitOk;
}

}  // namespace pisys::cli
