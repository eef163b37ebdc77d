#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "cmspets/checks.hpp"
#include "cmspets/cmgeom.hpp"

using nlohmann::json;
using namespace cmspets;

namespace {

bool g_json = false;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Partition parse_partition(const std::string& text) {
  try {
    return Partition::parse(text);
  } catch (const std::exception& e) {
    throw UsageError("cannot parse partition '" + text + "': " + e.what());
  }
}

std::vector<Rational> parse_list(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      out.push_back(parse_rational(tok));
    } catch (const std::exception&) {
      throw UsageError("bad number '" + tok + "' in '" + text + "'");
    }
  }
  if (out.empty()) throw UsageError("empty list '" + text + "'");
  return out;
}

GroupDescriptor parse_group(const std::string& text) {
  if (auto k = parse_group_kind(text); k && *k != GroupKind::Symmetric && *k != GroupKind::Wreath &&
                                        *k != GroupKind::TypeD) {
    return GroupDescriptor::hardcoded(*k);
  }
  try {
    if (text.size() > 1 && text[0] == 'S') {
      size_t used = 0;
      const int n = std::stoi(text.substr(1), &used);
      if (used == text.size() - 1) return GroupDescriptor::symmetric(n);
    }
    if (text.rfind("G(", 0) == 0 && text.back() == ')') {
      const auto inner = parse_list(text.substr(2, text.size() - 3));
      if (inner.size() == 3 && inner[1] == 1) {
        return GroupDescriptor::wreath(static_cast<int>(inner[0].get_d()), static_cast<int>(inner[2].get_d()));
      }
    }
  } catch (const std::exception&) {
  }
  throw UsageError("unknown group '" + text + "' (expected Sn, G(d,1,r), B2, G2 or G4)");
}

json to_json(const Partition& p) { return p.parts(); }

json to_json(const MultiPartition& m) {
  json a = json::array();
  for (const auto& c : m.components()) a.push_back(c.parts());
  return a;
}

json to_json(const Parameter& k) {
  json a = json::array();
  for (const auto& orbit : k.values) {
    json o = json::array();
    for (const auto& v : orbit) o.push_back(to_string(v));
    a.push_back(o);
  }
  return a;
}

json to_json(const RootMultiset& roots) {
  json a = json::array();
  for (const auto& [z, m] : roots) a.push_back({{"root", to_string(z)}, {"multiplicity", m}});
  return a;
}

json to_json(const std::vector<CheckLine>& lines) {
  json a = json::array();
  for (const auto& l : lines) a.push_back({{"id", l.id}, {"status", l.pass ? "pass" : "fail"}, {"detail", l.detail}});
  return a;
}

std::string join_ints(const std::vector<int>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

std::string rstrip_lines(const std::string& text) {
  std::string out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    line.erase(line.find_last_not_of(' ') + 1);
    out += line + "\n";
  }
  return out;
}

void emit(const json& j, const std::string& raw) {
  const std::string text = rstrip_lines(raw);
  if (g_json) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << "\n";
  }
}

void print_lines(std::ostringstream& out, const std::vector<CheckLine>& lines) {
  for (const auto& l : lines) {
    out << (l.pass ? "ok   " : "FAIL ") << std::left << std::setw(34) << l.id << " " << l.detail << "\n";
  }
}

bool all_pass(const std::vector<CheckLine>& lines) {
  for (const auto& l : lines) {
    if (!l.pass) return false;
  }
  return true;
}

// ---- part

void part_core(int d, const std::string& text) {
  const Partition p = parse_partition(text);
  const Partition core = d_core(p, d);
  emit({{"partition", to_json(p)}, {"d", d}, {"core", to_json(core)}, {"is_core", core == p}}, core.str());
}

void part_quotient(int d, const std::string& text) {
  const Partition p = parse_partition(text);
  const CoreQuotient cq = core_quotient(p, d);
  emit({{"partition", to_json(p)}, {"d", d}, {"core", to_json(cq.core)}, {"quotient", to_json(cq.quotient)}},
       "core " + cq.core.str() + "\nquotient " + cq.quotient.str());
}

void part_abacus(int d, const std::string& text, int beads) {
  const Partition p = parse_partition(text);
  const Abacus a = abacus(p, d, beads);
  std::ostringstream out;
  out << "beads " << a.length << ": " << join_ints(a.beads) << "\n";
  const int rows = a.beads.empty() ? 0 : a.beads.back() / d + 1;
  for (int r = 0; r < rows; ++r) {
    for (int j = 0; j < d; ++j) {
      const bool bead = std::binary_search(a.beads.begin(), a.beads.end(), r * d + j);
      out << (j ? " " : "") << (bead ? "o" : ".");
    }
    out << "\n";
  }
  out << "b " << join_ints(a.b);
  emit({{"partition", to_json(p)},
        {"d", d},
        {"length", a.length},
        {"beads", a.beads},
        {"runner_counts", a.runner_counts},
        {"b", a.b}},
       out.str());
}

void part_kseq(int d, const std::string& text) {
  const Partition core = parse_partition(text);
  const CoreData c = k_l_sequences(core, d);
  const bool ok = check_k_equals_l(c);
  std::ostringstream out;
  out << "b   " << join_ints(c.b) << "\nRes " << join_ints(c.rho) << "\nk   " << join_ints(c.k) << "\nl   "
      << join_ints(c.l) << "\nk = l shifted: " << (ok ? "yes" : "no");
  emit({{"core", to_json(core)}, {"d", d}, {"b", c.b}, {"residues", c.rho}, {"k", c.k}, {"l", c.l}, {"k_equals_l", ok}},
       out.str());
}

// ---- unip

void unip_degree(const std::string& text) {
  const Partition p = parse_partition(text);
  const RatPoly deg = generic_degree_A(p);
  auto [a, A] = a_A_of(deg);
  emit({{"partition", to_json(p)}, {"degree", deg.str()}, {"a", a}, {"A", A}}, deg.str());
}

void unip_series(int n, int d) {
  const auto blocks = d_series_A(n, d);
  json arr = json::array();
  std::ostringstream out;
  for (const auto& b : blocks) {
    json members = json::array();
    for (size_t i = 0; i < b.members.size(); ++i) {
      members.push_back({{"partition", to_json(b.members[i])}, {"label", to_json(b.labels[i])}});
    }
    arr.push_back({{"core", to_json(b.core)},
                   {"r", b.r},
                   {"relative", b.pair.relative.name()},
                   {"parameter", to_json(b.pair.parameter)},
                   {"members", members}});
    out << "core (" << b.core.str() << ")  " << b.pair.relative.name() << "  k = " << b.pair.parameter.str() << "  "
        << b.members.size() << " members\n";
    for (size_t i = 0; i < b.members.size(); ++i) {
      out << "  " << std::left << std::setw(20) << b.members[i].str() << " " << b.labels[i].str() << "\n";
    }
  }
  emit({{"n", n}, {"d", d}, {"blocks", arr}}, out.str());
}

void unip_g4_table() {
  const SpetsDatum& g = g4_datum();
  json us = json::array();
  std::ostringstream out;
  out << std::left << std::setw(10) << "rho" << std::setw(9) << "family" << std::setw(11) << "d=1" << std::setw(10)
      << "d=4" << std::setw(10) << "d=6"
      << "degree\n";
  for (const auto& u : g.unipotents) {
    json series = json::object();
    for (const auto& [d, s] : u.series) series[std::to_string(d)] = s;
    us.push_back({{"label", u.label}, {"degree", u.degree.str()}, {"family", u.family}, {"series", series}});
    out << std::setw(10) << u.label << std::setw(9) << u.family << std::setw(11) << u.series.at(1) << std::setw(10)
        << u.series.at(4) << std::setw(10) << u.series.at(6) << u.degree.str() << "\n";
  }
  json fams = json::array();
  for (size_t i = 0; i < g.families.names.size(); ++i) {
    fams.push_back({{"name", g.families.names[i]}, {"members", g.families.blocks[i]}});
  }
  json ser = json::array();
  for (const auto& s : g.series) {
    ser.push_back({{"d", s.d},
                   {"name", s.name},
                   {"parabolic", s.pair.parabolic},
                   {"cuspidal", s.pair.cuspidal},
                   {"relative", s.pair.relative.name()},
                   {"parameter", to_json(s.pair.parameter)},
                   {"members", s.members}});
    out << "series " << s.name << " (d=" << s.d << "): " << s.pair.relative.name() << ", k = " << s.pair.parameter.str()
        << ", " << s.members.size() << " members\n";
  }
  emit({{"name", g.name}, {"unipotents", us}, {"families", fams}, {"series", ser}}, out.str());
}

ClassicalType parse_classical(const std::string& t) {
  if (t == "B") return ClassicalType::B;
  if (t == "D" || t == "Dplus" || t == "D+") return ClassicalType::Dplus;
  if (t == "Dminus" || t == "D-" || t == "2D") return ClassicalType::Dminus;
  throw UsageError("unknown classical type '" + t + "' (expected B, Dplus or Dminus)");
}

int unip_classical(const std::string& type, int n) {
  const ClassicalComparison c = classical_hc(parse_classical(type), n);
  auto rows = [](const std::vector<ClassicalRow>& side) {
    json a = json::array();
    for (const auto& r : side) {
      a.push_back({{"r", r.r},
                   {"relative", r.relative_name},
                   {"group", r.relative.name()},
                   {"parameter_name", r.parameter_name},
                   {"parameter", to_json(r.parameter)}});
    }
    return a;
  };
  std::ostringstream out;
  out << to_string(c.type) << " n = " << n << "\n";
  for (const auto& r : c.hc_side) {
    out << "  r = " << std::setw(3) << r.r << " " << std::left << std::setw(8) << r.relative_name << std::setw(8)
        << r.parameter_name << r.parameter.str() << "\n";
  }
  out << (c.diff.empty() ? "Harish-Chandra and Calogero-Moser tables agree" : "tables differ");
  for (const auto& d : c.diff) out << "\n  " << d;
  emit({{"type", to_string(c.type)}, {"n", n}, {"hc_side", rows(c.hc_side)}, {"cm_side", rows(c.cm_side)}, {"diff", c.diff}},
       out.str());
  return c.diff.empty() ? 0 : 1;
}

// ---- cm

void cm_cyclic(int m, const std::string& ks, const std::string& view) {
  const CyclicCMSpace s = cyclic_cm(m, parse_list(ks));
  const SingularityReport r = singularity_report(s);
  json fixed = json::array();
  for (const auto& z : r.fixed_points) fixed.push_back({{"x", "0"}, {"y", "0"}, {"z", to_string(z)}});
  json sing = json::array();
  for (const auto& p : r.singular) {
    sing.push_back({{"z", to_string(p.z)}, {"multiplicity", p.multiplicity}, {"type", p.type}});
  }
  std::ostringstream out;
  if (view.empty() || view == "fixed") {
    out << "xy = " << s.f().str("z") << "\nroots " << to_string(s.roots) << "\n";
    for (const auto& z : r.fixed_points) out << "fixed point (0, 0, " << to_string(z) << ")\n";
  }
  if (view.empty() || view == "singular") {
    if (r.singular.empty()) out << "smooth\n";
    for (const auto& p : r.singular) out << p.type << " at z = " << to_string(p.z) << "\n";
  }
  json j = {{"m", m}, {"polynomial", s.f().str("z")}, {"roots", to_json(s.roots)}};
  if (view.empty() || view == "fixed") j["fixed_points"] = fixed;
  if (view.empty() || view == "singular") j["singular"] = sing;
  emit(j, out.str());
}

int cm_g4_points() {
  const auto& p = g4_presentation();
  json arr = json::array();
  std::ostringstream out;
  bool ok = true;
  for (const auto& pt : g4_fixed_points()) {
    json eqs = json::array();
    int zeros = 0;
    for (size_t i = 0; i < p.equations.size(); ++i) {
      const bool z = is_zero(p.equations[i].evaluate(pt.coords));
      zeros += z;
      eqs.push_back({{"equation", i + 1}, {"status", z ? "pass" : "fail"}});
    }
    ok = ok && zeros == static_cast<int>(p.equations.size());
    json coords = json::object();
    for (const auto& [k, v] : pt.coords) coords[k] = to_string(v);
    arr.push_back({{"name", pt.name},
                   {"family", pt.family},
                   {"c", to_string(pt.c())},
                   {"e", to_string(pt.e())},
                   {"coordinates", coords},
                   {"equations", eqs}});
    out << std::left << std::setw(10) << pt.name << " (c, e) = (" << to_string(pt.c()) << ", " << to_string(pt.e())
        << ")  " << zeros << "/" << p.equations.size() << " equations vanish\n";
  }
  emit({{"points", arr}}, out.str());
  return ok ? 0 : 1;
}

int cm_g4_mu_locus(int d) {
  const MuLocus m = mu_d_locus(d);
  json eqs = json::array();
  std::ostringstream out;
  out << "surviving variables:";
  for (const auto& v : m.survivors) out << " " << v;
  out << "\n";
  for (size_t i = 0; i < m.equations.size(); ++i) {
    eqs.push_back({{"equation", m.indices[i]}, {"polynomial", m.equations[i].str()}});
    out << "eq" << m.indices[i] << ": " << m.equations[i].str() << "\n";
  }
  emit({{"d", d}, {"survivors", m.survivors}, {"equations", eqs}}, out.str());
  return 0;
}

int cm_g4_surfaces(int d) {
  const Surface s = g4_surface(d);
  const auto lines = g4_surface_checks(d);
  std::ostringstream out;
  out << to_string(s.xy_scale == 1 ? Rational(1) : s.xy_scale) << "*" << s.x << "*" << s.y << " = "
      << s.rhs().str("e") << "\n";
  if (!s.c_of_e.is_zero()) out << "c = " << s.c_of_e.str("e") << "\n";
  print_lines(out, lines);
  json j = {{"d", d},
            {"x", s.x},
            {"y", s.y},
            {"xy_scale", to_string(s.xy_scale)},
            {"rhs", s.rhs().str("e")},
            {"rhs_roots", to_json(s.rhs_roots)},
            {"cyclic_parameter", to_json(s.cyclic_parameter)},
            {"checks", to_json(lines)}};
  if (!s.c_of_e.is_zero()) j["c"] = s.c_of_e.str("e");
  emit(j, out.str());
  return all_pass(lines) ? 0 : 1;
}

// ---- chartab

void chartab_show(const std::string& group) {
  const GroupDescriptor g = parse_group(group);
  std::shared_ptr<const CharacterTable> t;
  switch (g.kind) {
    case GroupKind::Symmetric: t = cached_symmetric(g.n); break;
    case GroupKind::Wreath: t = cached_wreath(g.d, g.r); break;
    default: t = cached_hardcoded(g.kind); break;
  }
  json sizes = json::array();
  for (const auto& s : t->class_sizes) sizes.push_back(to_string(s));
  json values = json::array();
  for (const auto& row : t->values) {
    json r = json::array();
    for (const auto& v : row) r.push_back(v.normalized().str());
    values.push_back(r);
  }
  json orbits = json::array();
  for (const auto& o : t->orbits) orbits.push_back({{"name", o.name}, {"e", o.e}, {"hyperplanes", o.size}});
  std::vector<size_t> width(t->num_classes());
  for (int c = 0; c < t->num_classes(); ++c) {
    width[c] = t->class_labels[c].size();
    for (const auto& row : t->values) width[c] = std::max(width[c], row[c].normalized().str().size());
  }
  size_t lw = 5;
  for (const auto& l : t->irr_labels) lw = std::max(lw, l.size());
  std::ostringstream out;
  out << t->group.name() << "\n" << std::left << std::setw(lw) << "class";
  for (int c = 0; c < t->num_classes(); ++c) out << "  " << std::setw(width[c]) << t->class_labels[c];
  out << "\n" << std::setw(lw) << "size";
  for (int c = 0; c < t->num_classes(); ++c) out << "  " << std::setw(width[c]) << to_string(t->class_sizes[c]);
  out << "\n" << std::setw(lw) << "cod";
  for (int c = 0; c < t->num_classes(); ++c) out << "  " << std::setw(width[c]) << t->cod[c];
  out << "\n";
  for (int i = 0; i < t->num_irr(); ++i) {
    out << std::setw(lw) << t->irr_labels[i];
    for (int c = 0; c < t->num_classes(); ++c) out << "  " << std::setw(width[c]) << t->values[i][c].normalized().str();
    out << "\n";
  }
  emit({{"group", t->group.name()},
        {"order", to_string(Integer(t->group.order))},
        {"class_labels", t->class_labels},
        {"class_sizes", sizes},
        {"cod", t->cod},
        {"irr_labels", t->irr_labels},
        {"orbits", orbits},
        {"values", values}},
       out.str());
}

// ---- verify

int emit_reports(const std::vector<CheckReport>& reports, bool single) {
  bool ok = true;
  for (const auto& r : reports) ok = ok && r.pass();
  if (g_json) {
    std::cout << (single ? cmspets::to_json(reports.front()) : suites_json(reports)).dump(2) << "\n";
  } else {
    for (const auto& r : reports) std::cout << render_table(r);
    if (!single) std::cout << (ok ? "PASS" : "FAIL") << " all\n";
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with unipotent degrees, Calogero-Moser families and fixed-point varieties"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", g_json, "Emit JSON instead of a table");
  std::string config;
  app.add_option("--config", config, "key = value file overriding the verify caps")->check(CLI::ExistingFile);

  int result = 0;
  std::function<int()> action;

  // part
  auto* part = app.add_subcommand("part", "Partitions, cores, quotients and abaci")->require_subcommand(1);
  int pd = 2;
  std::string ptext;
  int beads = -1;
  auto add_part = [&](const std::string& name, const std::string& help, std::function<void()> run) {
    auto* c = part->add_subcommand(name, help);
    c->add_option("-d,--d", pd, "Integer d >= 1")->required()->check(CLI::PositiveNumber);
    c->add_option("partition", ptext, "Comma separated parts, e.g. 5,2,1")->required();
    c->callback([&, run] { action = [run] { run(); return 0; }; });
    return c;
  };
  add_part("core", "d-core of a partition", [&] { part_core(pd, ptext); });
  add_part("quotient", "d-core and d-quotient", [&] { part_quotient(pd, ptext); });
  add_part("abacus", "d-abacus", [&] { part_abacus(pd, ptext, beads); })
      ->add_option("--beads", beads, "Bead count, length(p) plus a multiple of d");
  add_part("kseq", "b, residues and the k and l sequences of a d-core", [&] { part_kseq(pd, ptext); });

  // unip
  auto* unip = app.add_subcommand("unip", "Unipotent degrees and series")->require_subcommand(1);
  auto* ua = unip->add_subcommand("a", "Type A")->require_subcommand(1);
  std::string utext;
  auto* udeg = ua->add_subcommand("degree", "Generic degree of a partition");
  udeg->add_option("partition", utext)->required();
  udeg->callback([&] { action = [&] { unip_degree(utext); return 0; }; });
  int un = 1;
  int ud = 1;
  auto* user = ua->add_subcommand("series", "d-Harish-Chandra series");
  user->add_option("--n", un)->required()->check(CLI::Range(1, 20));
  user->add_option("--d", ud)->required()->check(CLI::Range(1, 20));
  user->callback([&] { action = [&] { unip_series(un, ud); return 0; }; });
  auto* ug = unip->add_subcommand("g4", "The G4 datum")->require_subcommand(1);
  ug->add_subcommand("table", "Unipotent degrees, families and series")->callback([&] {
    action = [] { unip_g4_table(); return 0; };
  });
  std::string ctype = "B";
  int cn = 2;
  auto* ucl = unip->add_subcommand("classical", "Cuspidal data of types B and D on both sides");
  ucl->add_option("--type", ctype, "B, Dplus or Dminus")->required();
  ucl->add_option("--n", cn)->required()->check(CLI::Range(2, 40));
  ucl->callback([&] { action = [&] { return unip_classical(ctype, cn); }; });

  // cm
  auto* cm = app.add_subcommand("cm", "Calogero-Moser spaces")->require_subcommand(1);
  int cm_m = 1;
  std::string cm_k;
  std::string cm_view;
  auto* cyc = cm->add_subcommand("cyclic", "The surface xy = prod (z - m k_j)");
  cyc->add_option("--m", cm_m)->required()->check(CLI::PositiveNumber);
  cyc->add_option("--k", cm_k, "Comma separated rationals")->required();
  cyc->add_option("view", cm_view, "fixed or singular")->check(CLI::IsMember({"fixed", "singular"}));
  cyc->callback([&] { action = [&] { cm_cyclic(cm_m, cm_k, cm_view); return 0; }; });
  auto* cg = cm->add_subcommand("g4", "The G4 presentation")->require_subcommand(1);
  cg->add_subcommand("points", "The four fixed points")->callback([&] { action = [] { return cm_g4_points(); }; });
  int gd = 4;
  auto* mu = cg->add_subcommand("mu-locus", "Fixed locus of mu_d");
  mu->add_option("--d", gd)->required()->check(CLI::IsMember({4, 6}));
  mu->callback([&] { action = [&] { return cm_g4_mu_locus(gd); }; });
  int sd = 4;
  auto* surf = cg->add_subcommand("surfaces", "Surface identifications");
  surf->add_option("--d", sd)->required()->check(CLI::IsMember({1, 4, 6}));
  surf->callback([&] { action = [&] { return cm_g4_surfaces(sd); }; });

  // chartab
  auto* ct = app.add_subcommand("chartab", "Character tables")->require_subcommand(1);
  std::string group;
  auto* show = ct->add_subcommand("show", "Print a character table");
  show->add_option("group", group, "Sn, G(d,1,r), B2, G2 or G4")->required();
  show->callback([&] { action = [&] { chartab_show(group); return 0; }; });

  // verify
  auto* verify = app.add_subcommand("verify", "Run verification suites")->require_subcommand(1);
  CheckOptions opts;
  int max_size = -1;
  int max_d = -1;
  int vn = -1;
  int vd = -1;
  auto add_suite = [&](const std::string& name, const std::string& help) {
    auto* c = verify->add_subcommand(name, help);
    c->callback([&, name] {
      action = [&, name] {
        if (!config.empty()) opts = read_config(config, opts);
        if (max_size >= 0) opts.max_core_size = max_size;
        if (max_d >= 0) opts.max_d = max_d;
        if (name == "all") return emit_reports(run_all(opts), false);
        if (name == "michel" && vn > 0) return emit_reports({michel_report(vn, vd)}, true);
        if (name == "filtration" && vn > 0) return emit_reports({filtration_report(vn, vd)}, true);
        return emit_reports({run_check(name, opts)}, true);
      };
    });
    return c;
  };
  auto* kl = add_suite("k-eq-l", "k and l sequences of d-cores");
  kl->add_option("--max-size", max_size, "Largest core size")->check(CLI::Range(0, 60));
  kl->add_option("--max-d", max_d, "Largest d")->check(CLI::Range(2, 12));
  add_suite("type-a-cuspidal", "Cuspidality against d-cores");
  add_suite("type-a-series", "Series blocks, parameters and the core/quotient bijection");
  add_suite("rank2", "B2 and G2 fixed varieties");
  add_suite("g4", "The G4 example");
  add_suite("classical", "Types B and D");
  for (const auto& [name, help] : std::vector<std::pair<std::string, std::string>>{
           {"filtration", "Filtration conjecture for symmetric groups"}, {"michel", "Michel identity in type A"}}) {
    auto* c = add_suite(name, help);
    auto* on = c->add_option("--n", vn, "Single instance n")->check(CLI::PositiveNumber);
    auto* od = c->add_option("--d", vd, "Single instance d")->check(CLI::PositiveNumber);
    on->needs(od);
    od->needs(on);
  }
  add_suite("chartab", "Character table properties");
  add_suite("all", "Every suite");
  add_suite("canary", "A single failing case, not part of all; exercises the failure exit code");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  try {
    result = action ? action() : 2;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return result;
}
