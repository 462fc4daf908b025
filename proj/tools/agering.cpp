// agering: ages, obstruction bundles and stringy rings of linear quotients.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "agering/age.hpp"
#include "agering/catalog.hpp"
#include "agering/character_table.hpp"
#include "agering/crring.hpp"
#include "agering/io.hpp"
#include "agering/obstruction.hpp"
#include "agering/verify.hpp"

using namespace agering;

namespace {

constexpr const char* kSchema = "agering/1";

enum Exit { kOk = 0, kVerificationFailed = 1, kInputError = 2, kCapExceeded = 3 };

struct Options {
  std::string catalog;
  std::string rep;
  std::string input;
  std::string format = "table";
  std::uint64_t seed = 1;
  std::optional<std::uint64_t> cap;
  std::string pair;
  bool check = false;
  std::size_t k = 2;
  std::string with;
  std::string with_input;
  std::string checks;
  bool do_export = false;
  unsigned threads = 1;
};

struct Target {
  std::string name;
  GroupPtr group;
  std::optional<Representation> rep;
  NamedCharacters irreps;

  const Representation& representation() const {
    if (!rep) throw Error(ErrorKind::InvalidInput, "this command needs a representation");
    return *rep;
  }
};

struct Output {
  Json data = Json::object();
  std::string table;
  int code = kOk;
};

std::size_t closure_cap(const Options& o) { return o.cap ? *o.cap : kDefaultClosureCap; }

Target load(const std::string& catalog, const std::string& rep, const std::string& input,
            const Options& o) {
  Target t;
  if (!catalog.empty() && !input.empty()) {
    throw Error(ErrorKind::InvalidInput, "give either a catalog entry or an input file, not both");
  }
  if (!catalog.empty()) {
    const CatalogEntry& e = catalog_entry(catalog);
    t.name = e.name;
    t.group = e.group;
    t.rep = e.representation(rep);
    t.irreps = e.irreps;
    return t;
  }
  if (!input.empty()) {
    InputDocument doc = read_input(input, closure_cap(o));
    t.name = doc.name;
    t.group = doc.group;
    t.rep = doc.representation;
    if (!rep.empty() && t.rep) t.rep = t.rep->relabeled(rep);
    return t;
  }
  throw Error(ErrorKind::InvalidInput, "no input: use --catalog NAME or --input FILE");
}

/// "Q8:Q" or "Q8".
Target load_pair_operand(const std::string& operand, const Options& o) {
  const auto colon = operand.find(':');
  if (colon == std::string::npos) return load(operand, "", "", o);
  return load(operand.substr(0, colon), operand.substr(colon + 1), "", o);
}

std::pair<ElementId, ElementId> parse_pair(const FiniteGroup& g, const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw Error(ErrorKind::InvalidInput, "--pair expects 'a,b'");
  return {element_from_word(g, text.substr(0, comma)), element_from_word(g, text.substr(comma + 1))};
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep))
    if (!item.empty()) out.push_back(item);
  return out;
}

class TextTable {
 public:
  explicit TextTable(std::vector<std::string> headers) { rows_.push_back(std::move(headers)); }
  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }
  std::string render() const {
    std::vector<std::size_t> width;
    for (const auto& r : rows_) {
      width.resize(std::max(width.size(), r.size()), 0);
      for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], display_width(r[i]));
    }
    std::ostringstream os;
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      std::string line;
      for (std::size_t i = 0; i < rows_[k].size(); ++i) {
        line += rows_[k][i];
        if (i + 1 < rows_[k].size()) line += std::string(width[i] - display_width(rows_[k][i]) + 2, ' ');
      }
      os << line << "\n";
      if (k == 0) {
        std::size_t total = 0;
        for (std::size_t i = 0; i < width.size(); ++i) total += width[i] + (i + 1 < width.size() ? 2 : 0);
        os << std::string(total, '-') << "\n";
      }
    }
    return os.str();
  }

 private:
  static std::size_t display_width(const std::string& s) {
    std::size_t n = 0;
    for (unsigned char c : s) n += (c & 0xC0) != 0x80;
    return n;
  }
  std::vector<std::vector<std::string>> rows_;
};

std::string irrep_label(const CharacterTable& t, std::size_t i, const NamedCharacters& names) {
  const FiniteGroup& g = *t.group;
  for (const auto& [name, chi] : names) {
    bool same = chi.group->order() == g.order();
    for (std::size_t c = 0; c < g.classes().size() && same; ++c)
      same = chi.at(g.classes()[c].representative) == t.rows[i].values[c];
    if (same) return name;
  }
  return "chi" + std::to_string(i + 1);
}

Json words(const FiniteGroup& g, const std::vector<ElementId>& xs) {
  Json out = Json::array();
  for (auto x : xs) out.push_back(g.word(x));
  return out;
}

// ---------------------------------------------------------------- commands

Output cmd_info(const Target& t) {
  const FiniteGroup& g = *t.group;
  Output out;
  auto& d = out.data;
  d["name"] = t.name;
  d["order"] = g.order();
  d["exponent"] = g.exponent();
  d["provenance"] = std::string(to_string(g.provenance()));
  d["abelian"] = g.is_abelian();
  d["classes"] = g.classes().size();
  Json gens = Json::array();
  for (std::size_t s = 0; s < g.generators().size(); ++s) {
    gens.push_back({{"name", g.generator_names()[s]}, {"order", g.element_order(g.generators()[s])}});
  }
  d["generators"] = gens;
  std::ostringstream os;
  os << "group        " << t.name << "\n"
     << "order        " << g.order() << "\n"
     << "exponent     " << g.exponent() << "\n"
     << "abelian      " << (g.is_abelian() ? "yes" : "no") << "\n"
     << "classes      " << g.classes().size() << "\n"
     << "built from   " << to_string(g.provenance()) << "\n";
  for (const auto& s : gens) os << "generator    " << s["name"].get<std::string>() << " (order " << s["order"] << ")\n";
  if (t.rep) {
    const bool sl = is_special_linear(*t.rep);
    d["representation"] = {{"label", t.rep->label()}, {"dim", t.rep->dim()}, {"special_linear", sl}};
    os << "representation " << t.rep->label() << " of dimension " << t.rep->dim()
       << (sl ? ", special linear" : "") << "\n";
  }
  out.table = os.str();
  return out;
}

Output cmd_classes(const Target& t) {
  const FiniteGroup& g = *t.group;
  const CharacterTable table = character_table(t.group);
  Output out;
  Json classes = Json::array();
  std::vector<std::string> header = {"class", "representative", "size", "order"};
  if (t.rep) header.push_back("age");
  TextTable tt(header);
  for (std::size_t c = 0; c < g.classes().size(); ++c) {
    const auto& cls = g.classes()[c];
    Json j = {{"index", c},
              {"representative", g.word(cls.representative)},
              {"size", cls.members.size()},
              {"order", g.element_order(cls.representative)}};
    std::vector<std::string> row = {std::to_string(c), g.word(cls.representative),
                                    std::to_string(cls.members.size()),
                                    std::to_string(g.element_order(cls.representative))};
    if (t.rep) {
      const std::string a = age(*t.rep, cls.representative).to_string();
      j["age"] = a;
      row.push_back(a);
    }
    classes.push_back(j);
    tt.add(row);
  }
  out.data["classes"] = classes;
  Json irreps = Json::array();
  std::vector<std::string> cheader = {"irrep", "degree"};
  for (std::size_t c = 0; c < g.classes().size(); ++c) cheader.push_back(g.word(g.classes()[c].representative));
  TextTable ct(cheader);
  for (std::size_t i = 0; i < table.size(); ++i) {
    const std::string label = irrep_label(table, i, t.irreps);
    Json values = Json::array();
    std::vector<std::string> row = {label, std::to_string(table.dims[i])};
    for (const auto& v : table.rows[i].values) {
      values.push_back(v.to_string());
      row.push_back(v.to_string());
    }
    irreps.push_back({{"label", label}, {"degree", table.dims[i]}, {"values", values}});
    ct.add(row);
  }
  out.data["character_table"] = irreps;
  out.table = tt.render() + "\n" + ct.render();
  return out;
}

Output cmd_sectors(const Target& t, const Options& o) {
  const FiniteGroup& g = *t.group;
  const auto tcs = tuple_classes(g, o.k, o.cap ? *o.cap : kTupleCap);
  Output out;
  out.data["k"] = o.k;
  Json list = Json::array();
  std::vector<std::string> header = {"representative", "size", "centralizer", "twisting"};
  if (t.rep) header.push_back("age sum");
  TextTable tt(header);
  for (const auto& tc : tcs) {
    const SubgroupRef sub = subgroup_generated(t.group, tc.representative);
    std::vector<std::string> ws;
    for (auto x : tc.representative) ws.push_back(g.word(x));
    Json j = {{"representative", ws},
              {"size", tc.members.size()},
              {"centralizer_order", tc.centralizer.size()},
              {"twisting_order", sub.order()}};
    std::vector<std::string> row = {"(" + join(ws, ", ") + ")", std::to_string(tc.members.size()),
                                    std::to_string(tc.centralizer.size()), std::to_string(sub.order())};
    if (t.rep) {
      Rational sum(0);
      for (auto x : tc.representative) sum += age(*t.rep, x);
      j["age_sum"] = sum.to_string();
      row.push_back(sum.to_string());
    }
    list.push_back(j);
    tt.add(row);
  }
  out.data["sectors"] = list;
  out.table = tt.render() + std::to_string(tcs.size()) + " classes of " + std::to_string(o.k) + "-tuples\n";
  return out;
}

Output cmd_ages(const Target& t) {
  const FiniteGroup& g = *t.group;
  const Representation& v = t.representation();
  Output out;
  Json list = Json::array();
  TextTable tt({"element", "order", "age", "dim fixed", "eigenvalue multiplicities"});
  for (ElementId x = 0; x < g.order(); ++x) {
    const AgeRecord rec = eigen_multiplicities(v, x);
    std::vector<std::string> ms;
    for (auto m : rec.multiplicities) ms.push_back(std::to_string(m));
    list.push_back({{"element", g.word(x)},
                    {"order", rec.order},
                    {"age", rec.age.to_string()},
                    {"fixed_dim", rec.fixed_dim()},
                    {"multiplicities", rec.multiplicities}});
    tt.add({g.word(x), std::to_string(rec.order), rec.age.to_string(),
            std::to_string(rec.fixed_dim()), join(ms, " ")});
  }
  out.data["representation"] = v.label();
  out.data["ages"] = list;
  out.table = tt.render();
  return out;
}

std::string bundle_line(const SectorData& sd) {
  std::vector<std::string> terms;
  for (const auto& ir : sd.per_irrep)
    if (ir.h > 0) terms.push_back(std::to_string(ir.h) + " · Hom(" + ir.label + ", V)");
  return "E = " + (terms.empty() ? std::string("0") : join(terms, " + "));
}

Output cmd_obstruction(const Target& t, const Options& o) {
  const FiniteGroup& g = *t.group;
  const SectorCalculator calc(t.representation(), t.irreps);
  Output out;
  out.data["representation"] = t.rep->label();
  if (!o.pair.empty()) {
    const auto [g1, g2] = parse_pair(g, o.pair);
    const SectorData sd = calc.decompose(g1, g2);
    Json irreps = Json::array();
    TextTable tt({"irrep", "degree", "t", "h"});
    std::vector<std::string> hs;
    for (const auto& ir : sd.per_irrep) {
      irreps.push_back({{"label", ir.label}, {"degree", ir.degree}, {"t", ir.t}, {"h", ir.h}});
      tt.add({ir.label, std::to_string(ir.degree), std::to_string(ir.t), std::to_string(ir.h)});
      hs.push_back(std::to_string(ir.h));
    }
    const std::string line = bundle_line(sd);
    out.data["pair"] = {g.word(g1), g.word(g2)};
    out.data["twisting_order"] = sd.twisting_group.order();
    out.data["irreps"] = irreps;
    out.data["h"] = hs;
    out.data["rank"] = sd.rank;
    out.data["age_defect"] = sd.age_defect.to_string();
    out.data["codim_excess"] = sd.codim_excess;
    out.data["bundle"] = line;
    std::ostringstream os;
    os << "sector (" << g.word(g1) << ", " << g.word(g2) << "), twisting group of order "
       << sd.twisting_group.order() << "\n\n"
       << tt.render() << "\n"
       << "h = (" << join(hs, ",") << ")\n"
       << "rank " << sd.rank << " = age defect " << sd.age_defect << " - codimension excess "
       << sd.codim_excess << "\n"
       << line << "\n";
    out.table = os.str();
    return out;
  }
  const auto tcs = tuple_classes(g, 2, o.cap ? *o.cap : kTupleCap);
  Json list = Json::array();
  TextTable tt({"pair", "twisting", "rank", "defect", "excess", "bundle"});
  for (const auto& tc : tcs) {
    const SectorData sd = calc.decompose(tc.representative[0], tc.representative[1]);
    const std::string pair = g.word(tc.representative[0]) + ", " + g.word(tc.representative[1]);
    const std::string line = bundle_line(sd);
    list.push_back({{"pair", {g.word(tc.representative[0]), g.word(tc.representative[1])}},
                    {"twisting_order", sd.twisting_group.order()},
                    {"rank", sd.rank},
                    {"age_defect", sd.age_defect.to_string()},
                    {"codim_excess", sd.codim_excess},
                    {"bundle", line}});
    tt.add({"(" + pair + ")", std::to_string(sd.twisting_group.order()), std::to_string(sd.rank),
            sd.age_defect.to_string(), std::to_string(sd.codim_excess), line});
  }
  out.data["sectors"] = list;
  out.table = tt.render();
  return out;
}

Output cmd_ring(const Target& t, const Options& o) {
  const FiniteGroup& g = *t.group;
  const CRRing ring = build_cr_ring(t.representation());
  Output out;
  Json classes = Json::array();
  std::vector<std::string> degrees;
  TextTable tt({"class", "representative", "size", "degree"});
  for (std::size_t c = 0; c < ring.rank(); ++c) {
    const auto& cls = g.classes()[c];
    classes.push_back({{"index", c},
                       {"representative", g.word(cls.representative)},
                       {"size", cls.members.size()},
                       {"degree", ring.class_degrees[c].to_string()}});
    degrees.push_back(ring.class_degrees[c].to_string());
    tt.add({"E" + std::to_string(c), g.word(cls.representative), std::to_string(cls.members.size()),
            ring.class_degrees[c].to_string()});
  }
  Json products = Json::array();
  std::ostringstream prod;
  for (std::size_t a = 0; a < ring.rank(); ++a) {
    for (std::size_t b = 0; b < ring.rank(); ++b) {
      Json terms = Json::array();
      std::vector<std::string> text;
      for (std::size_t c = 0; c < ring.rank(); ++c) {
        const Rational& k = ring.constant(a, b, c);
        if (k.is_zero()) continue;
        terms.push_back({{"class", c}, {"coefficient", k.to_string()}});
        text.push_back((k == Rational(1) ? "" : k.to_string() + " ") + "E" + std::to_string(c));
      }
      products.push_back({{"left", a}, {"right", b}, {"terms", terms}});
      prod << "E" << a << " * E" << b << " = " << (text.empty() ? "0" : join(text, " + ")) << "\n";
    }
  }
  Json counts = Json::object();
  for (const auto& [deg, n] : ring.degree_counts()) counts[deg.to_string()] = n;
  out.data["representation"] = ring.label;
  out.data["classes"] = classes;
  out.data["degrees"] = degrees;
  out.data["ranks_by_degree"] = counts;
  out.data["products"] = products;
  std::ostringstream os;
  os << tt.render() << "\ndegrees (" << join(degrees, ",") << ")\n\n" << prod.str();
  if (o.check) {
    const RingReport rr = check_ring(ring, 1000000, 10000, o.seed);
    const bool sl = is_special_linear(t.representation());
    bool integral = true;
    for (const auto& d : ring.degrees) integral = integral && (d * Rational(1, 2)).is_integer();
    out.data["check"] = {{"associative", rr.associative},
                         {"unital", rr.unital},
                         {"graded", rr.graded},
                         {"commutative", rr.commutative},
                         {"closed", rr.closed},
                         {"triples", rr.triples_checked},
                         {"sampled", rr.sampled},
                         {"special_linear", sl},
                         {"witnesses", rr.witnesses}};
    const auto verdict = [](bool b) { return b ? "pass" : "FAIL"; };
    os << "\nassociativity " << verdict(rr.associative) << " (" << rr.triples_checked
       << (rr.sampled ? " sampled" : "") << " triples)\n"
       << "unit          " << verdict(rr.unital) << "\n"
       << "grading       " << verdict(rr.graded) << "\n"
       << "commutative   " << verdict(rr.commutative) << "\n"
       << "class sums    " << verdict(rr.closed) << "\n";
    if (sl) os << "even degrees  " << verdict(integral) << "\n";
    for (const auto& w : rr.witnesses) os << "  " << w << "\n";
    if (!rr.passed() || (sl && !integral)) out.code = kVerificationFailed;
  }
  out.table = os.str();
  return out;
}

Output cmd_kunneth(const Target& left, const Target& right, const Options& o) {
  const Representation& v = left.representation();
  const Representation& w = right.representation();
  const FiniteGroup& g = *left.group;
  const FiniteGroup& h = *right.group;
  const KunnethChecker checker(v, w);
  const std::uint64_t total = static_cast<std::uint64_t>(g.order()) * g.order() * h.order() * h.order();
  const std::uint64_t cap = o.cap ? *o.cap : 100000;
  std::uint64_t instances = 0;
  std::vector<std::string> failures;
  const auto one = [&](ElementId g1, ElementId h1, ElementId g2, ElementId h2) {
    ++instances;
    const RankCheck rc = checker.check(g1, h1, g2, h2);
    if (!rc.holds() && failures.size() < 20) {
      failures.push_back("((" + g.word(g1) + ", " + h.word(h1) + "), (" + g.word(g2) + ", " +
                         h.word(h2) + ")): " + std::to_string(rc.lhs) + " != " + std::to_string(rc.rhs));
    }
  };
  const bool sampled = total > cap;
  if (!sampled) {
    for (ElementId g1 = 0; g1 < g.order(); ++g1)
      for (ElementId h1 = 0; h1 < h.order(); ++h1)
        for (ElementId g2 = 0; g2 < g.order(); ++g2)
          for (ElementId h2 = 0; h2 < h.order(); ++h2) one(g1, h1, g2, h2);
  } else {
    std::mt19937_64 rng(o.seed);
    std::uniform_int_distribution<ElementId> pg(0, static_cast<ElementId>(g.order() - 1));
    std::uniform_int_distribution<ElementId> ph(0, static_cast<ElementId>(h.order() - 1));
    for (int s = 0; s < 10000; ++s) {
      const ElementId g1 = pg(rng), h1 = ph(rng), g2 = pg(rng), h2 = ph(rng);
      one(g1, h1, g2, h2);
    }
  }
  Output out;
  out.data["left"] = left.name + ":" + v.label();
  out.data["right"] = right.name + ":" + w.label();
  out.data["rank_additivity"] = {{"instances", instances}, {"sampled", sampled}, {"failures", failures}};
  std::ostringstream os;
  os << "rank additivity over " << left.name << " x " << right.name << ": " << instances
     << (sampled ? " sampled" : "") << " sector pairs, " << failures.size() << " failures\n";
  for (const auto& f : failures) os << "  " << f << "\n";
  if (!failures.empty()) out.code = kVerificationFailed;
  if (is_special_linear(v) && is_special_linear(w)) {
    const KunnethRingReport kr = kunneth_ring_compare(v, w);
    std::vector<std::string> degrees;
    for (const auto& d : kr.degrees) degrees.push_back(d.to_string());
    out.data["ring"] = {{"passed", kr.passed},
                        {"classes", kr.product_classes},
                        {"degrees", degrees},
                        {"witnesses", kr.witnesses}};
    os << "ring comparison " << (kr.passed ? "pass" : "FAIL") << ": " << kr.product_classes
       << " classes, degrees {" << join(degrees, ",") << "}\n";
    for (const auto& wn : kr.witnesses) os << "  " << wn << "\n";
    if (!kr.passed) out.code = kVerificationFailed;
  } else {
    out.data["ring"] = nullptr;
    os << "ring comparison skipped: both factors must be special linear\n";
  }
  out.table = os.str();
  return out;
}

Output cmd_verify(const Target& t, const Options& o) {
  SuiteOptions so;
  so.seed = o.seed;
  if (o.cap) so.pair_cap = *o.cap;
  so.names = t.irreps;
  so.threads = o.threads;
  for (const auto& name : split(o.checks, ',')) {
    const auto& all = all_check_names();
    if (std::find(all.begin(), all.end(), name) == all.end()) {
      throw Error(ErrorKind::InvalidInput, "unknown check '" + name + "'");
    }
    so.checks.insert(name);
  }
  const VerificationReport rep = run_suite(t.representation(), so);
  const FiniteGroup& g = *t.group;
  Output out;
  out.data["input"] = t.name + ":" + rep.input;
  out.data["seed"] = rep.seed;
  Json checks = Json::array();
  TextTable tt({"check", "instances", "failures", "result"});
  for (const auto& c : rep.checks) {
    checks.push_back({{"name", c.name},
                      {"instances", c.instances},
                      {"sampled", c.sampled},
                      {"failures", c.failures}});
    tt.add({c.name, std::to_string(c.instances) + (c.sampled ? " (sampled)" : ""),
            std::to_string(c.failures.size()), c.failures.empty() ? "pass" : "FAIL"});
  }
  out.data["checks"] = checks;
  Json tight = Json::array();
  for (const auto& w : rep.tight) {
    tight.push_back({{"pair", {g.word(w.g1), g.word(w.g2)}},
                     {"irrep", w.irrep},
                     {"degree", w.degree},
                     {"t", w.t}});
  }
  out.data["tight"] = tight;
  out.data["passed"] = rep.passed();
  std::ostringstream os;
  os << "input " << t.name << ":" << rep.input << ", seed " << rep.seed << "\n\n" << tt.render();
  for (const auto& c : rep.checks)
    for (const auto& f : c.failures) os << "  " << c.name << ": " << f << "\n";
  os << "\n" << rep.tight.size() << " tight instances (h = 0 with t > 0)\n"
     << (rep.passed() ? "all checks passed" : "verification FAILED") << "\n";
  out.table = os.str();
  if (!rep.passed()) out.code = kVerificationFailed;
  return out;
}

Output cmd_catalog(const Options& o) {
  Output out;
  if (!o.catalog.empty() && o.do_export) {
    const CatalogEntry& e = catalog_entry(o.catalog);
    out.data = input_to_json(e.representation(o.rep), e.name);
    out.table = out.data.dump(2) + "\n";
    return out;
  }
  Json list = Json::array();
  TextTable tt({"name", "order", "representations", "description"});
  for (const auto& e : catalog()) {
    if (!o.catalog.empty() && e.name != o.catalog) continue;
    Json reps = Json::array();
    std::vector<std::string> rs;
    for (const auto& v : e.representations) {
      reps.push_back({{"label", v.label()}, {"dim", v.dim()}});
      rs.push_back(v.label() + "(" + std::to_string(v.dim()) + ")");
    }
    list.push_back({{"name", e.name},
                    {"order", e.group->order()},
                    {"description", e.description},
                    {"representations", reps}});
    tt.add({e.name, std::to_string(e.group->order()), join(rs, " "), e.description});
  }
  out.data["entries"] = list;
  out.table = tt.render();
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ages, obstruction bundles and stringy rings of finite linear quotients"};
  app.require_subcommand(1);
  Options o;
  std::uint64_t cap = 0;

  const auto common = [&](CLI::App* sub, bool needs_input) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "table"}));
    sub->add_option("--seed", o.seed, "Seed for sampled checks");
    sub->add_option("--cap", cap, "Resource cap (closure size, tuples, pairs)");
    if (needs_input) {
      sub->add_option("--catalog", o.catalog, "Built-in catalog entry");
      sub->add_option("--rep", o.rep, "Representation of the catalog entry");
      sub->add_option("--input", o.input, "JSON input document");
    }
  };

  auto* info = app.add_subcommand("info", "Group and representation summary");
  common(info, true);
  auto* classes = app.add_subcommand("classes", "Conjugacy classes and character table");
  common(classes, true);
  auto* sectors = app.add_subcommand("sectors", "Classes of k-tuples under simultaneous conjugation");
  common(sectors, true);
  sectors->add_option("-k", o.k, "Tuple length")->check(CLI::PositiveNumber);
  auto* ages = app.add_subcommand("ages", "Age and eigenvalue data of every element");
  common(ages, true);
  auto* obstruction = app.add_subcommand("obstruction", "Obstruction bundle of a pair sector");
  common(obstruction, true);
  obstruction->add_option("--pair", o.pair, "Pair of generator words, e.g. g,h");
  auto* ring = app.add_subcommand("ring", "Graded stringy ring on class sums");
  common(ring, true);
  ring->add_flag("--check", o.check, "Verify associativity, unit and grading");
  auto* kunneth = app.add_subcommand("kunneth", "Product checks for V over G and W over H");
  common(kunneth, true);
  kunneth->add_option("--with", o.with, "Second factor as NAME or NAME:REP");
  kunneth->add_option("--with-input", o.with_input, "Second factor as a JSON input document");
  auto* verify = app.add_subcommand("verify", "Run the identity checks");
  common(verify, true);
  verify->add_option("--checks", o.checks, "Comma-separated subset of checks");
  verify->add_option("--threads", o.threads, "Worker threads for the pair scan");
  auto* cat = app.add_subcommand("catalog", "List built-in entries");
  common(cat, false);
  cat->add_option("--catalog", o.catalog, "Restrict to one entry");
  cat->add_option("--rep", o.rep, "Representation to export");
  cat->add_flag("--export", o.do_export, "Print the entry as an input document");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }
  if (cap > 0) o.cap = cap;

  const auto start = std::chrono::steady_clock::now();
  Output out;
  std::string command;
  try {
    CLI::App* sub = app.get_subcommands().front();
    command = sub->get_name();
    if (command == "catalog") {
      out = cmd_catalog(o);
    } else {
      const Target t = load(o.catalog, o.rep, o.input, o);
      if (command == "info") out = cmd_info(t);
      else if (command == "classes") out = cmd_classes(t);
      else if (command == "sectors") out = cmd_sectors(t, o);
      else if (command == "ages") out = cmd_ages(t);
      else if (command == "obstruction") out = cmd_obstruction(t, o);
      else if (command == "ring") out = cmd_ring(t, o);
      else if (command == "verify") out = cmd_verify(t, o);
      else if (command == "kunneth") {
        if (o.with.empty() == o.with_input.empty()) {
          throw Error(ErrorKind::InvalidInput, "kunneth needs exactly one of --with or --with-input");
        }
        const Target second = o.with.empty() ? load("", "", o.with_input, o) : load_pair_operand(o.with, o);
        out = cmd_kunneth(t, second, o);
      }
    }
  } catch (const Error& e) {
    std::cerr << "error: " << to_string(e.kind()) << ": " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  if (o.format == "json") {
    if (command == "catalog" && o.do_export) {
      std::cout << out.data.dump(2) << "\n";
    } else {
      Json doc;
      doc["schema"] = kSchema;
      doc["command"] = command;
      doc["exit_code"] = out.code;
      doc["data"] = out.data;
      doc["timing"] = {{"seconds", seconds}};
      std::cout << doc.dump(2) << "\n";
    }
  } else {
    std::cout << out.table;
  }
  return out.code;
}
