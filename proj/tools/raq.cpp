#include <cctype>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "raq/commutator.hpp"
#include "raq/congruence.hpp"
#include "raq/constructions.hpp"
#include "raq/enumeration.hpp"
#include "raq/knots.hpp"
#include "raq/table_io.hpp"
#include "raq/terms.hpp"

using raq::LeftQuasigroup;
using json = nlohmann::ordered_json;

namespace {

constexpr const char* kVersion = "0.1.0";

struct Options {
  bool json = false;
  int threads = 0; // 0 = default; accepted for compatibility, runs sequential
};

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::invalid_argument("cannot open file: " + path);
  std::ostringstream buf;
  buf << f.rdbuf();
  return buf.str();
}

std::string fnv1a64(const std::string& data) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char out[17];
  std::snprintf(out, sizeof out, "%016llx", static_cast<unsigned long long>(h));
  return out;
}

json blocks_json(const raq::Partition& p) {
  json out = json::array();
  for (const auto& block : p.blocks()) {
    json b = json::array();
    for (int x : block) b.push_back(x + 1);
    out.push_back(b);
  }
  return out;
}

std::string yesno(bool b) { return b ? "yes" : "no"; }

// 1-based disjoint cycle notation, e.g. "(1 2)(3 4 5)"; "()" is the identity.
raq::Perm parse_perm(const std::string& text, int degree) {
  std::vector<int> img(degree);
  for (int i = 0; i < degree; ++i) img[i] = i;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  bool any = false;
  while (i < text.size()) {
    if (text[i] != '(') throw std::invalid_argument("bad permutation syntax: " + text);
    ++i;
    std::vector<int> cycle;
    for (;;) {
      skip_ws();
      if (i < text.size() && text[i] == ')') {
        ++i;
        break;
      }
      std::size_t used = 0;
      int v;
      try {
        v = std::stoi(text.substr(i), &used);
      } catch (const std::exception&) {
        throw std::invalid_argument("bad permutation syntax: " + text);
      }
      if (v < 1 || v > degree)
        throw std::invalid_argument("permutation point " + std::to_string(v) +
                                    " outside 1.." + std::to_string(degree));
      cycle.push_back(v - 1);
      i += used;
    }
    for (std::size_t k = 0; k < cycle.size(); ++k)
      img[cycle[k]] = cycle[(k + 1) % cycle.size()];
    any = true;
    skip_ws();
  }
  if (!any) throw std::invalid_argument("bad permutation syntax: " + text);
  return raq::Perm(img);
}

std::vector<raq::Perm> parse_perm_list(const std::string& text, int degree) {
  std::vector<raq::Perm> out;
  std::string piece;
  std::istringstream in(text);
  while (std::getline(in, piece, ';')) {
    if (piece.find_first_not_of(" \t") == std::string::npos) continue;
    out.push_back(parse_perm(piece, degree));
  }
  return out;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::string piece;
  std::istringstream in(text);
  while (std::getline(in, piece, ',')) {
    std::size_t used = 0;
    int v = std::stoi(piece, &used);
    if (used != piece.size()) throw std::invalid_argument("bad integer list: " + text);
    out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument("bad integer list: " + text);
  return out;
}

// ---------------------------------------------------------------- analyze

int run_analyze(const Options& opt, const std::string& path) {
  std::string raw = read_file(path);
  LeftQuasigroup q = raq::parse_table(raw);
  auto sr = raq::structure_report(q);
  auto lattice = raq::congruence_lattice(q);

  bool have_rack = sr.is_rack;
  raq::Partition zeta;
  raq::SolvabilityReport solv;
  raq::CdsgReport cdsg;
  if (have_rack) {
    zeta = raq::center_congruence(q);
    solv = raq::solvability_report(q);
    cdsg = raq::cdsg_check(q);
  }

  if (opt.json) {
    json out;
    out["order"] = sr.order;
    out["is_rack"] = sr.is_rack;
    out["is_quandle"] = sr.is_quandle;
    out["is_involutory"] = sr.is_involutory;
    out["is_latin"] = sr.is_latin;
    out["is_medial"] = sr.is_medial;
    out["is_faithful"] = sr.is_faithful;
    out["is_connected"] = sr.is_connected;
    out["is_class_c"] = sr.is_class_c;
    out["lmlt_order"] = sr.lmlt_order;
    out["dis_order"] = sr.dis_order;
    out["congruence_count"] = lattice.size();
    out["zeta_blocks"] = have_rack ? blocks_json(zeta) : json();
    out["solvable"] = have_rack ? json(solv.quandle_solvable) : json();
    out["nilpotent"] = have_rack ? json(solv.quandle_nilpotent) : json();
    out["solv_len"] = have_rack ? json(solv.quandle_solv_len) : json();
    out["nilp_len"] = have_rack ? json(solv.quandle_nilp_len) : json();
    out["cdsg"] = have_rack ? json(cdsg.cdsg) : json();
    out["provenance"] = {{"tool_version", kVersion}, {"input_hash", fnv1a64(raw)}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "order: " << sr.order << "\n";
    std::cout << "rack: " << yesno(sr.is_rack) << "\n";
    std::cout << "quandle: " << yesno(sr.is_quandle) << "\n";
    std::cout << "involutory: " << yesno(sr.is_involutory) << "\n";
    std::cout << "latin: " << yesno(sr.is_latin) << "\n";
    std::cout << "medial: " << yesno(sr.is_medial) << "\n";
    std::cout << "faithful: " << yesno(sr.is_faithful) << "\n";
    std::cout << "connected: " << yesno(sr.is_connected) << "\n";
    std::cout << "class C: " << yesno(sr.is_class_c) << "\n";
    std::cout << "|LMlt|: " << sr.lmlt_order << "\n";
    std::cout << "|Dis|: " << sr.dis_order << "\n";
    std::cout << "congruences: " << lattice.size() << "\n";
    if (have_rack) {
      std::cout << "zeta: " << zeta.to_string() << "\n";
      std::cout << "solvable: " << yesno(solv.quandle_solvable);
      if (solv.quandle_solvable) std::cout << " (length " << solv.quandle_solv_len << ")";
      std::cout << "\n";
      std::cout << "nilpotent: " << yesno(solv.quandle_nilpotent);
      if (solv.quandle_nilpotent) std::cout << " (length " << solv.quandle_nilp_len << ")";
      std::cout << "\n";
      std::cout << "cdsg: " << yesno(cdsg.cdsg) << "\n";
    } else {
      std::cout << "not a rack; congruence, center and solvability analysis limited\n";
    }
  }
  return 0;
}

// ------------------------------------------------------------- congruences

int run_congruences(const Options& opt, const std::string& path) {
  LeftQuasigroup q = raq::parse_table(read_file(path));
  auto lattice = raq::congruence_lattice(q);
  if (opt.json) {
    json out;
    out["order"] = q.order();
    out["count"] = lattice.size();
    json arr = json::array();
    for (const auto& p : lattice) arr.push_back(blocks_json(p));
    out["congruences"] = arr;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << lattice.size() << " congruences\n";
    for (const auto& p : lattice) std::cout << p.to_string() << "\n";
  }
  return 0;
}

// ------------------------------------------------------------ galois-audit

int run_galois_audit(const Options& opt, const std::string& path) {
  LeftQuasigroup q = raq::parse_table(read_file(path));
  if (!q.is_rack()) throw std::invalid_argument("galois-audit requires a rack");
  auto audit = raq::galois_audit(q);
  if (opt.json) {
    json out;
    out["order"] = q.order();
    out["congruence_count"] = audit.congruences.size();
    out["norm_subgroup_count"] = audit.norm.size();
    json laws = json::array();
    for (const auto& law : audit.laws) {
      json l;
      l["name"] = law.name;
      l["holds"] = law.holds;
      l["violations"] = law.violations;
      laws.push_back(l);
    }
    out["laws"] = laws;
    out["all_hold"] = audit.all_hold;
    out["cdsg"] = audit.cdsg;
    std::cout << out.dump(2) << "\n";
  } else {
    for (const auto& law : audit.laws) {
      std::cout << (law.holds ? "ok:   " : "FAIL: ") << law.name << "\n";
      for (const auto& v : law.violations) std::cout << "      " << v << "\n";
    }
    std::cout << "congruences: " << audit.congruences.size()
              << ", normal subgroups of Dis in LMlt: " << audit.norm.size() << "\n";
    std::cout << "cdsg: " << yesno(audit.cdsg) << "\n";
  }
  if (!audit.all_hold) {
    std::cerr << "raq: internal: a congruence-subgroup law failed on a rack\n";
    return 3;
  }
  return 0;
}

// --------------------------------------------------------------- normalize

int run_normalize(const Options& opt, const std::string& rules, const std::string& text) {
  raq::RuleSet rs;
  if (rules == "rack")
    rs = raq::RuleSet::rack;
  else if (rules == "classC" || rules == "classc")
    rs = raq::RuleSet::class_c;
  else
    throw std::invalid_argument("unknown rule set: " + rules);
  auto t = raq::parse_term(text);
  auto nf = raq::lt_normalize(t, rs);
  if (opt.json) {
    json out;
    out["input"] = raq::render_term(t);
    out["rules"] = rules == "classc" ? "classC" : rules;
    out["normal_form"] = raq::render_term(nf);
    out["nodes"] = raq::term_nodes(nf);
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << raq::render_term(nf) << "\n";
  }
  return 0;
}

// ------------------------------------------------------- enumerate / census

raq::EnumFilters filters_from(const std::vector<std::string>& names) {
  raq::EnumFilters f;
  for (const auto& name : names) {
    if (name == "latin")
      f.latin = true;
    else if (name == "connected")
      f.connected = true;
    else if (name == "involutory")
      f.involutory = true;
    else if (name == "medial")
      f.medial = true;
    else if (name == "faithful")
      f.faithful = true;
    else if (name == "not_rack")
      f.not_rack = true;
    else
      throw std::invalid_argument("unknown filter: " + name);
  }
  return f;
}

json filters_json(const std::vector<std::string>& names) {
  json out = json::array();
  for (const auto& n : names) out.push_back(n);
  return out;
}

int run_enumerate(const Options& opt, int order, const std::string& kind,
                  const std::vector<std::string>& filter_names, bool count_only,
                  const std::string& emit_dir) {
  raq::EnumSpec spec;
  spec.order = order;
  spec.kind = raq::enum_kind_from_string(kind);
  spec.filters = filters_from(filter_names);
  spec.count_only = emit_dir.empty() && (count_only || opt.json);

  std::uint64_t count = 0;
  if (!emit_dir.empty()) {
    std::filesystem::create_directories(emit_dir);
    int index = 0;
    count = raq::enumerate(spec, [&](const LeftQuasigroup& q) {
      char name[16];
      std::snprintf(name, sizeof name, "%06d.tbl", ++index);
      std::ofstream f(std::filesystem::path(emit_dir) / name);
      f << raq::format_table(q);
    });
  } else if (spec.count_only) {
    count = raq::enumerate(spec);
  } else {
    count = raq::enumerate(spec, [&](const LeftQuasigroup& q) {
      std::cout << raq::format_table(q) << "\n";
    });
  }

  if (opt.json) {
    json out;
    out["order"] = order;
    out["kind"] = raq::to_string(spec.kind);
    out["filters"] = filters_json(filter_names);
    out["count"] = count;
    std::cout << out.dump(2) << "\n";
  } else if (count_only || !emit_dir.empty()) {
    std::cout << count << "\n";
  }
  return 0;
}

std::vector<int> parse_orders(const std::string& text) {
  auto dash = text.find('-');
  int lo, hi;
  try {
    if (dash == std::string::npos) {
      lo = hi = std::stoi(text);
    } else {
      lo = std::stoi(text.substr(0, dash));
      hi = std::stoi(text.substr(dash + 1));
    }
  } catch (const std::exception&) {
    throw std::invalid_argument("bad order range: " + text);
  }
  if (lo < 1 || hi < lo) throw std::invalid_argument("bad order range: " + text);
  std::vector<int> out;
  for (int n = lo; n <= hi; ++n) out.push_back(n);
  return out;
}

int run_census(const Options& opt, const std::string& kind,
               const std::vector<std::string>& filter_names, const std::string& orders_text) {
  auto orders = parse_orders(orders_text);
  auto kind_e = raq::enum_kind_from_string(kind);
  auto filters = filters_from(filter_names);
  auto counts = raq::census(orders, kind_e, filters);
  if (opt.json) {
    json out;
    out["kind"] = raq::to_string(kind_e);
    out["filters"] = filters_json(filter_names);
    out["orders"] = orders;
    out["counts"] = counts;
    std::cout << out.dump(2) << "\n";
  } else {
    for (std::size_t i = 0; i < counts.size(); ++i)
      std::cout << counts[i] << (i + 1 < counts.size() ? " " : "\n");
  }
  return 0;
}

// --------------------------------------------------------------- construct

std::vector<std::vector<int>> square_matrix(const std::vector<int>& flat, int k,
                                            const std::string& what) {
  if (static_cast<int>(flat.size()) != k * k)
    throw std::invalid_argument(what + " needs " + std::to_string(k * k) + " entries");
  std::vector<std::vector<int>> m(k, std::vector<int>(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) m[i][j] = flat[i * k + j];
  return m;
}

int run_construct_affine(const std::string& moduli_text, const std::string& mult_text) {
  auto moduli = parse_int_list(moduli_text);
  int k = static_cast<int>(moduli.size());
  auto mult = square_matrix(parse_int_list(mult_text), k, "--mult");
  std::cout << raq::format_table(raq::affine_quandle(moduli, mult));
  return 0;
}

int run_construct_galkin(int m, int u) {
  std::cout << raq::format_table(raq::galkin_quandle(m, u));
  return 0;
}

int run_construct_coset(int degree, const std::string& group_text, const std::string& conj_text,
                        const std::string& stab_text) {
  if (degree < 1) throw std::invalid_argument("--degree must be positive");
  auto gens = parse_perm_list(group_text, degree);
  if (gens.empty()) throw std::invalid_argument("--group needs at least one generator");
  raq::PermGroup g(degree, gens);
  raq::Perm c = parse_perm(conj_text, degree);
  auto stab_gens = parse_perm_list(stab_text, degree);
  raq::PermGroup h =
      stab_gens.empty() ? raq::PermGroup::trivial(degree) : raq::PermGroup(degree, stab_gens);
  auto f = [&c](const raq::Perm& x) { return c * x * c.inverse(); };
  auto cq = raq::coset_quandle(g, f, h);
  std::cout << raq::format_table(cq.algebra);
  return 0;
}

std::vector<std::vector<std::vector<int>>> cocycle_from_json(const json& j, int n, int k,
                                                             const std::string& what) {
  std::vector<std::vector<std::vector<int>>> out(
      static_cast<std::size_t>(n) * n, std::vector<std::vector<int>>(k, std::vector<int>(k)));
  auto matrix_at = [&](const json& m) {
    std::vector<std::vector<int>> r(k, std::vector<int>(k));
    for (int i = 0; i < k; ++i)
      for (int j2 = 0; j2 < k; ++j2) r[i][j2] = m.at(i).at(j2).get<int>();
    return r;
  };
  if (j.is_array() && !j.empty() && j.at(0).is_array() && !j.at(0).empty() &&
      j.at(0).at(0).is_number()) {
    auto constant = matrix_at(j);
    for (auto& cell : out) cell = constant;
    return out;
  }
  if (!j.is_array() || static_cast<int>(j.size()) != n)
    throw std::invalid_argument(what + " must be a k x k matrix or an n x n array of them");
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(j.at(a).size()) != n)
      throw std::invalid_argument(what + " row " + std::to_string(a + 1) + " has wrong length");
    for (int b = 0; b < n; ++b) out[a * n + b] = matrix_at(j.at(a).at(b));
  }
  return out;
}

int run_construct_extension(const std::string& spec_path) {
  json spec;
  try {
    spec = json::parse(read_file(spec_path));
  } catch (const json::parse_error& e) {
    throw std::invalid_argument("extension spec " + spec_path + ": " + e.what());
  }
  std::string base_path = spec.at("base").get<std::string>();
  if (!base_path.empty() && base_path[0] != '/')
    base_path = (std::filesystem::path(spec_path).parent_path() / base_path).string();
  LeftQuasigroup base = raq::load_table_file(base_path);
  auto moduli = spec.at("moduli").get<std::vector<int>>();
  int n = base.order();
  int k = static_cast<int>(moduli.size());
  auto phi = cocycle_from_json(spec.at("phi"), n, k, "phi");
  auto psi = cocycle_from_json(spec.at("psi"), n, k, "psi");
  std::vector<std::vector<int>> theta(static_cast<std::size_t>(n) * n, std::vector<int>(k, 0));
  if (spec.contains("theta")) {
    const json& th = spec.at("theta");
    if (!th.is_array() || static_cast<int>(th.size()) != n)
      throw std::invalid_argument("theta must be an n x n array of k-vectors");
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        const json& cell = th.at(a).at(b);
        for (int i = 0; i < k; ++i) theta[a * n + b][i] = cell.at(i).get<int>();
      }
  }
  raq::ExtensionData data{base, moduli, phi, psi, theta, spec.value("claim_quandle", true)};
  auto ext = raq::abelian_extension(data);
  std::cout << raq::format_table(ext.algebra);
  return 0;
}

// --------------------------------------------------------------- decompose

int run_decompose(const Options& opt, const std::string& path) {
  LeftQuasigroup q = raq::parse_table(read_file(path));
  auto dec = raq::prime_decomposition(q);
  if (opt.json) {
    json out;
    out["order"] = q.order();
    out["primes"] = dec.primes;
    json orders = json::array();
    json factors = json::array();
    for (const auto& f : dec.factors) {
      orders.push_back(f.order());
      factors.push_back(raq::format_table(f));
    }
    out["factor_orders"] = orders;
    out["factors"] = factors;
    out["verified"] = true;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "order: " << q.order() << "\n";
    std::cout << "primes:";
    for (int p : dec.primes) std::cout << " " << p;
    std::cout << "\n";
    for (std::size_t i = 0; i < dec.factors.size(); ++i) {
      std::cout << "factor " << i + 1 << " (order " << dec.factors[i].order() << "):\n";
      std::cout << raq::format_table(dec.factors[i]);
    }
    std::cout << "isomorphism: verified\n";
  }
  return 0;
}

// ------------------------------------------------------------------- color

int run_color(const Options& opt, const std::string& pd_path, const std::string& table_path,
              int scan_order) {
  auto diagram = raq::parse_pd(read_file(pd_path));
  if (!table_path.empty()) {
    LeftQuasigroup q = raq::load_table_file(table_path);
    auto cc = raq::count_colorings(diagram, q);
    if (opt.json) {
      json out;
      out["colorings"] = cc.colorings;
      out["nontrivial"] = cc.nontrivial;
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << "colorings: " << cc.colorings << "\n";
      std::cout << "nontrivial: " << yesno(cc.nontrivial) << "\n";
    }
    return 0;
  }
  auto report = raq::solvable_colorability_check(diagram, scan_order);
  if (opt.json) {
    json out;
    out["max_order"] = scan_order;
    out["checked"] = report.checked;
    json hits = json::array();
    for (const auto& h : report.hits) {
      json hj;
      hj["order"] = h.quandle.order();
      hj["latin"] = h.latin;
      hj["connected_solvable"] = h.connected_solvable;
      hj["colorings"] = h.colorings;
      hj["table"] = raq::format_table(h.quandle);
      hits.push_back(hj);
    }
    out["hits"] = hits;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "checked " << report.checked << " quandles up to order " << scan_order << "\n";
    if (report.hits.empty()) {
      std::cout << "no nontrivial colorings\n";
    } else {
      for (const auto& h : report.hits) {
        std::cout << "order " << h.quandle.order() << (h.latin ? " latin" : "")
                  << (h.connected_solvable ? " connected-solvable" : "") << ": "
                  << h.colorings << " colorings\n";
      }
    }
  }
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"computations with finite racks, quandles and left quasigroups"};
  app.set_version_flag("--version", std::string("raq ") + kVersion);
  app.require_subcommand(1);

  Options opt;
  app.add_flag("--json", opt.json, "machine-readable JSON output");
  app.add_option("--threads", opt.threads, "worker cap (accepted; execution is sequential)")
      ->check(CLI::PositiveNumber);

  std::string an_path;
  auto* an = app.add_subcommand("analyze", "structure report for a table file");
  an->add_option("table", an_path, "multiplication table file")->required();

  std::string co_path;
  auto* co = app.add_subcommand("congruences", "list all congruences of a table");
  co->add_option("table", co_path, "multiplication table file")->required();

  std::string ga_path;
  auto* ga = app.add_subcommand("galois-audit", "congruence-subgroup law audit for a rack");
  ga->add_option("table", ga_path, "multiplication table file")->required();

  std::string nm_rules = "rack", nm_term;
  auto* nm = app.add_subcommand("normalize", "rewrite a term into left translation form");
  nm->add_option("--rules", nm_rules, "rack or classC");
  nm->add_option("term", nm_term, "term text, e.g. \"(x1*x2)\\x3\"")->required();

  int en_order = 1;
  std::string en_kind = "rack", en_emit;
  std::vector<std::string> en_filters;
  bool en_count_only = false;
  auto* en = app.add_subcommand("enumerate", "isomorph-free enumeration at one order");
  en->add_option("--order", en_order, "order to enumerate")->required();
  en->add_option("--kind", en_kind, "leftquasigroup, rack, quandle or classC");
  en->add_option("--filter", en_filters,
                 "latin, connected, involutory, medial, faithful, not_rack (repeatable)");
  en->add_flag("--count-only", en_count_only, "print only the class count");
  en->add_option("--emit", en_emit, "write one table file per class into this directory");

  std::string ce_kind = "rack", ce_orders;
  std::vector<std::string> ce_filters;
  auto* ce = app.add_subcommand("census", "class counts over a range of orders");
  ce->add_option("--kind", ce_kind, "leftquasigroup, rack, quandle or classC");
  ce->add_option("--filter", ce_filters, "same filters as enumerate (repeatable)");
  ce->add_option("--orders", ce_orders, "range, e.g. 4-8 or a single order")->required();

  auto* cn = app.add_subcommand("construct", "build standard algebras as table files");
  cn->require_subcommand(1);
  std::string aff_moduli, aff_mult;
  auto* cn_aff = cn->add_subcommand("affine", "affine quandle over Z_m1 x ... x Z_mk");
  cn_aff->add_option("--moduli,--modulus", aff_moduli, "comma-separated moduli")->required();
  cn_aff->add_option("--mult", aff_mult, "k x k multiplier matrix, row-major")->required();
  int gk_m = 1, gk_u = 0;
  auto* cn_gk = cn->add_subcommand("galkin", "Galkin quandle over dihedral(3)");
  cn_gk->add_option("--m", gk_m, "fiber modulus")->required();
  cn_gk->add_option("--u", gk_u, "theta value")->required();
  int cs_degree = 1;
  std::string cs_group, cs_conj, cs_stab;
  auto* cn_cs = cn->add_subcommand("coset", "coset quandle from a permutation group");
  cn_cs->add_option("--degree", cs_degree, "permutation degree")->required();
  cn_cs->add_option("--group", cs_group, "generators, cycles separated by ';'")->required();
  cn_cs->add_option("--conj", cs_conj, "the automorphism is conjugation by this permutation")
      ->required();
  cn_cs->add_option("--stab", cs_stab, "subgroup generators fixed by the automorphism");
  std::string ex_spec;
  auto* cn_ex = cn->add_subcommand("extension", "abelian extension from a JSON spec file");
  cn_ex->add_option("--spec", ex_spec, "spec file: base, moduli, phi, psi, theta")->required();

  std::string de_path;
  auto* de = app.add_subcommand("decompose", "prime decomposition of a connected nilpotent quandle");
  de->add_option("table", de_path, "multiplication table file")->required();

  std::string cl_pd, cl_table;
  int cl_scan = 0;
  auto* cl = app.add_subcommand("color", "quandle colorings of a link diagram");
  cl->add_option("--pd", cl_pd, "PD file")->required();
  cl->add_option("--quandle", cl_table, "quandle table file");
  cl->add_option("--scan", cl_scan,
                 "instead: check all connected solvable and latin quandles up to this order");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*an) return run_analyze(opt, an_path);
    if (*co) return run_congruences(opt, co_path);
    if (*ga) return run_galois_audit(opt, ga_path);
    if (*nm) return run_normalize(opt, nm_rules, nm_term);
    if (*en) return run_enumerate(opt, en_order, en_kind, en_filters, en_count_only, en_emit);
    if (*ce) return run_census(opt, ce_kind, ce_filters, ce_orders);
    if (*cn) {
      if (*cn_aff) return run_construct_affine(aff_moduli, aff_mult);
      if (*cn_gk) return run_construct_galkin(gk_m, gk_u);
      if (*cn_cs) return run_construct_coset(cs_degree, cs_group, cs_conj, cs_stab);
      if (*cn_ex) return run_construct_extension(ex_spec);
    }
    if (*de) return run_decompose(opt, de_path);
    if (*cl) {
      if (cl_table.empty() && cl_scan == 0)
        throw std::invalid_argument("color needs --quandle or --scan");
      if (!cl_table.empty() && cl_scan != 0)
        throw std::invalid_argument("--quandle and --scan are mutually exclusive");
      return run_color(opt, cl_pd, cl_table, cl_scan);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "raq: error: " << e.what() << "\n";
    return 1;
  } catch (const std::logic_error& e) {
    std::cerr << "raq: internal: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "raq: error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
