#include <betti/cli.hpp>

#include <betti/certificates.hpp>
#include <betti/errors.hpp>
#include <betti/graph_io.hpp>
#include <betti/hochster.hpp>
#include <betti/weak_chordality.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

namespace betti::cli {

namespace {

using json = nlohmann::ordered_json;

enum class Format { kTable, kJson };

struct RunConfig {
  std::string edges_path;
  std::string graph6;
  std::string builtin;
  std::vector<std::string> field_names;
  std::string format = "table";
  std::optional<int> max_n;
  std::string sigma;
  int r = 0;

  [[nodiscard]] Limits limits() const { return max_n ? Limits{}.with_max_vertices(*max_n) : Limits{}; }
  [[nodiscard]] Format output_format() const { return format == "json" ? Format::kJson : Format::kTable; }
};

Graph load_graph(const RunConfig& cfg) {
  const int max_vertices = cfg.limits().max_graph_vertices;
  const int sources = !cfg.edges_path.empty() + !cfg.graph6.empty() + !cfg.builtin.empty();
  if (sources != 1) throw InvalidArgument("give exactly one of --edges, --g6, --builtin");
  if (!cfg.edges_path.empty()) return read_edge_list_file(cfg.edges_path, max_vertices);
  if (!cfg.graph6.empty()) return parse_graph6(cfg.graph6, max_vertices);
  return builtin_graph(cfg.builtin);
}

std::vector<Field> load_fields(const RunConfig& cfg) {
  std::vector<Field> fields;
  for (const auto& name : cfg.field_names) fields.push_back(Field::parse(name));
  if (fields.empty()) fields.push_back(Field::rationals());
  return fields;
}

VertexSubset parse_sigma(const std::string& text, const Graph& g) {
  if (text.empty()) return g.vertex_set();
  std::vector<Vertex> vertices;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    token.erase(std::remove(token.begin(), token.end(), ' '), token.end());
    if (token.empty()) continue;
    try {
      std::size_t used = 0;
      const int v = std::stoi(token, &used);
      if (used != token.size()) throw std::invalid_argument(token);
      vertices.push_back(v);
    } catch (const std::logic_error&) {
      throw InvalidArgument("bad vertex '" + token + "' in --sigma");
    }
  }
  const auto sigma = VertexSubset::from_vertices(vertices);
  if (sigma.empty()) throw InvalidArgument("--sigma is empty");
  if (!sigma.is_subset_of(g.vertex_set())) throw InvalidArgument("--sigma uses vertices outside 1.." + std::to_string(g.order()));
  return sigma;
}

json family_json(const StronglyDisjointFamily& fam) {
  json blocks = json::array();
  for (int k = 0; k < fam.size(); ++k) {
    blocks.push_back({{"x", fam.blocks[k].x.vertices()},
                      {"y", fam.blocks[k].y.vertices()},
                      {"rep", {fam.reps[k].u, fam.reps[k].v}}});
  }
  return blocks;
}

json table_json(const BettiTable& t) {
  json betti = json::array();
  for (const auto& e : t.entries()) betti.push_back({{"i", e.i}, {"sigma", e.sigma.vertices()}, {"dim", e.dim}});
  json graded = json::array();
  for (const auto& e : t.graded()) graded.push_back({{"i", e.i}, {"j", e.j}, {"dim", e.dim}});
  return {{"n", t.vertex_count()}, {"field", t.field().name()}, {"betti", betti},
          {"graded", graded},      {"pdim", t.pdim()},           {"reg", t.reg()}};
}

void print_table(const BettiTable& t, std::ostream& out) {
  out << "field " << t.field().name() << ": pdim " << t.pdim() << ", reg " << t.reg() << '\n';
  out << "  multigraded (" << t.entries().size() << " nonzero)\n";
  for (const auto& e : t.entries()) {
    out << "    beta_" << e.i << "," << to_string(e.sigma) << " = " << e.dim << '\n';
  }
  out << "  graded\n";
  for (const auto& e : t.graded()) {
    out << "    beta_" << e.i << "," << e.j << " = " << e.dim << '\n';
  }
}

int cmd_betti(const RunConfig& cfg, std::ostream& out) {
  const Graph g = load_graph(cfg);
  const auto fields = load_fields(cfg);
  const auto cmp = char_compare(g, fields, cfg.limits());
  for (const auto& report : cmp.per_field) {
    if (cfg.output_format() == Format::kJson) {
      out << table_json(report.table).dump() << '\n';
    } else {
      print_table(report.table, out);
    }
  }
  if (cfg.output_format() == Format::kTable && fields.size() > 1) {
    out << "characteristic dependent: " << (cmp.characteristic_dependent ? "yes" : "no") << '\n';
  }
  return kOk;
}

int cmd_invariants(const RunConfig& cfg, std::ostream& out) {
  const Graph g = load_graph(cfg);
  const auto fields = load_fields(cfg);
  const auto limits = cfg.limits();
  const bool wc = is_weakly_chordal(g, limits);
  json rec;
  rec["n"] = g.order();
  rec["edges"] = g.edge_count();
  rec["weakly_chordal"] = wc;
  std::optional<int> imn;
  std::optional<int> d;
  if (g.edge_count() > 0) {
    imn = induced_matching_number(g, limits);
    d = d_invariant(g, limits).value;
    rec["imn"] = *imn;
    rec["d"] = *d;
    rec["big_height"] = big_height(g);
  } else {
    rec["imn"] = nullptr;
    rec["d"] = nullptr;
    rec["big_height"] = nullptr;
  }
  bool identities = true;
  json per_field = json::array();
  for (const Field& f : fields) {
    const auto inv = pdim_reg(g, f, limits);
    per_field.push_back({{"field", f.name()}, {"pdim", inv.pdim}, {"reg", inv.reg}});
    if (imn && (inv.reg != *imn || inv.pdim != *d)) identities = false;
  }
  rec["fields"] = per_field;
  std::string status = "not asserted";
  if (wc && g.edge_count() > 0) status = identities ? "hold" : "violated";
  rec["identities"] = status;

  if (cfg.output_format() == Format::kJson) {
    out << rec.dump() << '\n';
  } else {
    auto show = [](const json& v) { return v.is_null() ? std::string("undefined") : v.dump(); };
    out << "vertices        " << g.order() << '\n'
        << "edges           " << g.edge_count() << '\n'
        << "weakly chordal  " << (wc ? "true" : "false") << '\n'
        << "imn             " << show(rec["imn"]) << '\n'
        << "d               " << show(rec["d"]) << '\n'
        << "big-height      " << show(rec["big_height"]) << '\n';
    for (const auto& pf : per_field) {
      out << "field " << pf["field"].get<std::string>() << "         pdim " << pf["pdim"] << ", reg " << pf["reg"]
          << '\n';
    }
    out << "reg = imn, pdim = d: " << status << '\n';
  }
  return status == "violated" ? kViolation : kOk;
}

int cmd_certificate(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const Graph g = load_graph(cfg);
  const auto limits = cfg.limits();
  const Field field = load_fields(cfg).front();
  const VertexSubset sigma = parse_sigma(cfg.sigma, g);
  const int r = cfg.r;
  if (r < 1) throw InvalidArgument("--r must be at least 1");
  const std::size_t beta = r <= sigma.size() ? betti_entry(g, sigma, sigma.size() - r, field, limits) : 0;
  const auto fam = family_exists(g, sigma, r, limits);
  const bool wc = is_weakly_chordal(g, limits);
  std::optional<StronglyDisjointFamily> extracted;
  if (wc && beta != 0) extracted = extract_certificate(g, sigma, r, field, {BranchPreference::kEdgeDeletion, limits});

  std::string note;
  const bool mismatch = (beta != 0) != fam.has_value();
  if (mismatch && !wc) note = "hypothesis not met: graph not weakly chordal";
  if (mismatch && wc) note = "theorem violation: weakly chordal graph with mismatched certificate";

  if (cfg.output_format() == Format::kJson) {
    json rec{{"field", field.name()}, {"sigma", sigma.vertices()}, {"r", r},
             {"i", sigma.size() - r},  {"beta", beta},              {"weakly_chordal", wc}};
    rec["family"] = fam ? family_json(*fam) : json(nullptr);
    rec["extracted"] = extracted ? family_json(*extracted) : json(nullptr);
    if (!note.empty()) rec["note"] = note;
    out << rec.dump() << '\n';
  } else {
    out << "beta_" << sigma.size() - r << "," << to_string(sigma) << " over " << field.name() << " = " << beta << '\n';
    out << "family (search):     " << (fam ? to_string(*fam) : std::string("none")) << '\n';
    if (extracted) out << "family (extraction): " << to_string(*extracted) << '\n';
    if (!note.empty()) out << note << '\n';
  }
  if (mismatch && wc) {
    err << "error: beta " << (beta != 0 ? "!= 0" : "= 0") << " but family " << (fam ? "exists" : "missing")
        << " for sigma " << to_string(sigma) << ", r " << r << '\n';
    return kViolation;
  }
  return kOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  const Graph g = load_graph(cfg);
  const auto fields = load_fields(cfg);
  const auto limits = cfg.limits();
  std::size_t violations = 0;
  json records = json::array();
  std::vector<BettiTable> tables;
  for (const Field& f : fields) {
    const auto rep = verify_equivalence(g, f, limits);
    violations += rep.violations();
    tables.push_back(betti_table(g, f, limits));
    auto list = [](const std::vector<EquivalenceMismatch>& ms) {
      json arr = json::array();
      for (const auto& m : ms) arr.push_back({{"sigma", m.sigma.vertices()}, {"r", m.r}, {"beta", m.betti}});
      return arr;
    };
    if (cfg.output_format() == Format::kJson) {
      records.push_back({{"field", f.name()},
                         {"weakly_chordal", rep.weakly_chordal},
                         {"cells", rep.cells_checked},
                         {"sufficiency", list(rep.sufficiency)},
                         {"necessity", list(rep.necessity)},
                         {"violations", rep.violations()}});
      continue;
    }
    out << "field " << f.name() << ": " << rep.cells_checked << " cells, weakly chordal "
        << (rep.weakly_chordal ? "yes" : "no") << '\n';
    out << "  sufficiency mismatches (family but beta = 0): " << rep.sufficiency.size() << '\n';
    for (const auto& m : rep.sufficiency) out << "    sigma " << to_string(m.sigma) << " r " << m.r << '\n';
    out << "  necessity mismatches (beta != 0 but no family): " << rep.necessity.size()
        << (rep.weakly_chordal || rep.necessity.empty() ? "" : " (allowed: graph not weakly chordal)") << '\n';
    for (const auto& m : rep.necessity) {
      out << "    sigma " << to_string(m.sigma) << " r " << m.r << " beta " << m.betti << '\n';
    }
    out << "  violations: " << rep.violations() << '\n';
  }
  bool identical = true;
  for (const auto& t : tables) identical = identical && t.same_entries(tables.front());
  if (cfg.output_format() == Format::kJson) {
    out << json{{"n", g.order()}, {"fields", records}, {"tables_identical", identical}, {"violations", violations}}.dump()
        << '\n';
  } else {
    if (fields.size() > 1) out << "tables identical across fields: " << (identical ? "yes" : "no") << '\n';
    out << (violations == 0 ? "OK" : "VIOLATIONS") << '\n';
  }
  return violations == 0 ? kOk : kViolation;
}

void add_common_options(CLI::App& sub, RunConfig& cfg) {
  auto* edges = sub.add_option("--edges", cfg.edges_path, "edge-list file");
  auto* g6 = sub.add_option("--g6", cfg.graph6, "graph6 string");
  auto* builtin = sub.add_option("--builtin", cfg.builtin, "builtin graph")
                      ->check(CLI::IsMember(builtin_names()));
  edges->excludes(g6)->excludes(builtin);
  g6->excludes(builtin);
  sub.add_option("--field", cfg.field_names, "coefficient field: q or fp:P (repeatable, default q)");
  sub.add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"table", "json"}));
  sub.add_option("--max-n", cfg.max_n, "raise the vertex-count guards to N")->check(CLI::Range(1, kMaxRepresentableVertices));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Betti numbers of edge ideals and strongly disjoint families"};
  app.name("betti");
  app.require_subcommand(1);
  RunConfig cfg;
  auto* betti = app.add_subcommand("betti", "multigraded Betti table via Hochster's formula");
  auto* invariants = app.add_subcommand("invariants", "weak chordality, imn, d, big-height, pdim, reg");
  auto* certificate = app.add_subcommand("certificate", "strongly disjoint family for (sigma, r)");
  auto* verify = app.add_subcommand("verify", "compare nonvanishing Betti numbers with families");
  for (auto* sub : {betti, invariants, certificate, verify}) add_common_options(*sub, cfg);
  certificate->add_option("--sigma", cfg.sigma, "comma-separated vertex list (default: all vertices)");
  certificate->add_option("--r", cfg.r, "number of blocks")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (cfg.max_n) err << "note: vertex guards raised to " << *cfg.max_n << " (--max-n)\n";
    if (betti->parsed()) return cmd_betti(cfg, out);
    if (invariants->parsed()) return cmd_invariants(cfg, out);
    if (certificate->parsed()) return cmd_certificate(cfg, out, err);
    return cmd_verify(cfg, out);
  } catch (const GuardExceeded& e) {
    err << "guard exceeded: " << e.what() << '\n';
    return kGuardExceeded;
  } catch (const InvalidArgument& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const PreconditionFailed& e) {
    err << "precondition failed: " << e.what() << '\n';
    return kInputError;
  } catch (const ProofObligationFailed& e) {
    err << "internal check failed: " << e.what() << '\n';
    return kViolation;
  }
}

}  // namespace betti::cli
