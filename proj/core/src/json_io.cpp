#include "amc/json_io.hpp"

#include <fstream>
#include <sstream>

namespace amc::io {

namespace {

std::vector<std::string> labels_of(const json& j) {
  if (!j.contains("labels")) return {};
  if (!j["labels"].is_array()) throw ParseError("\"labels\" must be an array of strings");
  std::vector<std::string> out;
  for (const auto& l : j["labels"]) {
    if (!l.is_string()) throw ParseError("\"labels\" must be an array of strings");
    out.push_back(l.get<std::string>());
  }
  return out;
}

std::int64_t integer(const json& j, const char* what) {
  if (!j.is_number_integer()) throw ParseError(std::string(what) + " must be an integer");
  return j.get<std::int64_t>();
}

std::vector<std::uint32_t> residues(const json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be an array of integers");
  std::vector<std::uint32_t> out;
  for (const auto& v : j) {
    const auto x = integer(v, what);
    if (x < 0 || x > 0xffffffffLL) throw ParseError(std::string(what) + " entries must be non-negative");
    out.push_back(static_cast<std::uint32_t>(x));
  }
  return out;
}

}  // namespace

json load(const std::string& path_or_inline) {
  const auto first = path_or_inline.find_first_not_of(" \t\r\n");
  std::string text;
  if (first != std::string::npos && (path_or_inline[first] == '{' || path_or_inline[first] == '[')) {
    text = path_or_inline;
  } else {
    std::ifstream in(path_or_inline);
    if (!in) throw IoError("cannot read " + path_or_inline);
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

Validated<Semilattice> semilattice_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("semilattice must be a JSON object");
  auto labels = labels_of(j);
  if (j.contains("table")) {
    const json& t = j["table"];
    if (!t.is_array()) throw ParseError("\"table\" must be an array of rows");
    std::vector<std::vector<std::int64_t>> rows;
    for (const auto& row : t) {
      if (!row.is_array()) throw ParseError("\"table\" must be an array of rows");
      std::vector<std::int64_t> r;
      for (const auto& v : row) r.push_back(integer(v, "table entry"));
      rows.push_back(std::move(r));
    }
    if (j.contains("n") && integer(j["n"], "\"n\"") != static_cast<std::int64_t>(rows.size())) {
      ValidationReport report;
      report.add("square", {integer(j["n"], "\"n\""), static_cast<std::int64_t>(rows.size())});
      return report;
    }
    return validate_meet_table(rows, std::move(labels));
  }
  if (j.contains("hasse")) {
    if (!j.contains("n")) throw ParseError("\"hasse\" input needs \"n\"");
    const auto n = integer(j["n"], "\"n\"");
    if (n < 0) throw ParseError("\"n\" must be non-negative");
    if (!j["hasse"].is_array()) throw ParseError("\"hasse\" must be an array of [s, t] pairs");
    std::vector<std::pair<std::int64_t, std::int64_t>> edges;
    for (const auto& e : j["hasse"]) {
      if (!e.is_array() || e.size() != 2) throw ParseError("\"hasse\" must be an array of [s, t] pairs");
      edges.emplace_back(integer(e[0], "hasse entry"), integer(e[1], "hasse entry"));
    }
    return from_hasse(static_cast<std::size_t>(n), edges, std::move(labels));
  }
  throw ParseError("semilattice needs \"table\" or \"hasse\"");
}

Validated<CliffordSemigroup> clifford_from_json(const json& j) {
  if (!j.is_object() || !j.contains("skeleton")) throw ParseError("Clifford input needs \"skeleton\"");
  auto skeleton = semilattice_from_json(j["skeleton"]);
  if (!skeleton) return skeleton.report();
  const Semilattice& s = *skeleton;

  std::vector<FiniteAbelianGroup> groups(s.size());
  if (j.contains("groups")) {
    const json& g = j["groups"];
    if (!g.is_array()) throw ParseError("\"groups\" must be an array");
    if (g.size() != s.size()) {
      ValidationReport report;
      report.add("group_count", {static_cast<std::int64_t>(g.size()), static_cast<std::int64_t>(s.size())});
      return report;
    }
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (!g[i].is_object() || !g[i].contains("cyclic")) throw ParseError("each group needs \"cyclic\"");
      try {
        groups[i] = FiniteAbelianGroup(residues(g[i]["cyclic"], "\"cyclic\""));
      } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
      }
    }
  }

  std::vector<ConnectingHom> homs;
  if (j.contains("homs")) {
    if (!j["homs"].is_array()) throw ParseError("\"homs\" must be an array");
    for (const auto& h : j["homs"]) {
      if (!h.is_object() || !h.contains("from") || !h.contains("to") || !h.contains("gen_images"))
        throw ParseError("each hom needs \"from\", \"to\" and \"gen_images\"");
      const auto from = integer(h["from"], "\"from\"");
      const auto to = integer(h["to"], "\"to\"");
      if (from < 0 || to < 0) throw ParseError("hom endpoints must be non-negative");
      ConnectingHom c{static_cast<Element>(from), static_cast<Element>(to), {}};
      if (!h["gen_images"].is_array()) throw ParseError("\"gen_images\" must be an array of residue tuples");
      for (const auto& img : h["gen_images"]) c.gen_images.push_back(residues(img, "\"gen_images\""));
      homs.push_back(std::move(c));
    }
  }
  // Fill in trivial maps for pairs the input leaves out.
  for (const auto& t : trivial_homs(s, groups)) {
    bool listed = false;
    for (const auto& h : homs) listed = listed || (h.from == t.from && h.to == t.to);
    if (!listed) homs.push_back(t);
  }
  return build_clifford(s, std::move(groups), std::move(homs));
}

json to_json(const Rational& r) { return r.str(); }

json to_json(const Matrix& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(m(i, k).str());
    out.push_back(std::move(row));
  }
  return out;
}

json to_json(const std::vector<Rational>& v) {
  json out = json::array();
  for (const auto& r : v) out.push_back(r.str());
  return out;
}

json to_json(const ValidationReport& r) {
  json v = json::array();
  for (const auto& x : r.violations) v.push_back({{"axiom", x.axiom}, {"witness", x.witness}});
  return {{"ok", r.ok()}, {"violations", v}};
}

json to_json(const Semilattice& s) {
  json labels = json::array();
  for (Element e = 0; e < s.size(); ++e) labels.push_back(s.label(e));
  return {{"n", s.size()}, {"table", s.rows()}, {"labels", labels}};
}

json to_json(const DiagonalCheck& c) {
  json out{{"ok", c.ok}};
  if (!c.ok) {
    out["equation"] = c.equation;
    out["witness"] = c.witness;
    out["expected"] = c.expected.str();
    out["actual"] = c.actual.str();
  }
  return out;
}

json to_json(const std::vector<SpectrumReport>& reports) {
  json sizes = json::array();
  bool mod4 = true, bound = true, conjecture = true;
  for (const auto& r : reports) {
    json classes = json::array();
    for (const auto& c : r.records) {
      mod4 = mod4 && c.mod4 == 1;
      bound = bound && c.meets_2s_minus_1;
      conjecture = conjecture && c.meets_4s_minus_3;
      classes.push_back({{"class_id", c.class_id},
                         {"table", c.semilattice.rows()},
                         {"am", c.am.str()},
                         {"mod4", c.mod4},
                         {"slack_2s_minus_1", c.slack_2s_minus_1.str()},
                         {"meets_2s_minus_1", c.meets_2s_minus_1},
                         {"meets_4s_minus_3", c.meets_4s_minus_3},
                         {"unital", c.unital}});
    }
    sizes.push_back({{"size", r.size}, {"count", r.count}, {"classes", classes}});
  }
  const std::size_t n_max = reports.empty() ? 0 : reports.back().size;
  return {{"sizes", sizes},
          {"all_am_1_mod_4", mod4},
          {"all_meet_2s_minus_1", bound},
          {"conjecture_4s_minus_3", conjecture ? "no counterexample up to size " + std::to_string(n_max)
                                               : std::string("counterexample found")}};
}

json to_json(const GapSearchReport& r) {
  json counts = json::array();
  for (const auto& [am, k] : r.am_counts) counts.push_back({{"am", am.str()}, {"count", k}});
  json gap = json::array();
  for (const auto& [inst, am] : r.in_gap) gap.push_back({{"instance", inst.describe()}, {"am", am.str()}});
  return {{"family",
           {{"skeleton_max_size", r.config.skeleton_max_size},
            {"max_cyclic_order", r.config.max_cyclic_order},
            {"homs", r.config.nontrivial_homs ? "all homomorphisms along covering pairs, composites by path"
                                              : "trivial"}}},
          {"skeletons", r.skeletons},
          {"candidates", r.candidates},
          {"rejected", r.rejected},
          {"instances", r.instances},
          {"am_counts", counts},
          {"in_gap", gap},
          {"min_above_five", r.min_above_five ? json(r.min_above_five->str()) : json(nullptr)},
          {"ok", r.ok()}};
}

json ordered(const L1Vector& x, const std::vector<Element>& order) {
  json out = json::array();
  for (Element e : order) out.push_back(x[e].str());
  return out;
}

json mobius_entries(const Semilattice& s, const MobiusTable& mu) {
  json out = json::array();
  for (Element t = 0; t < s.size(); ++t)
    for (Element u = 0; u < s.size(); ++u)
      if (mu.defined(t, u) && mu.extended(t, u) != 0) out.push_back({t, u, mu.extended(t, u)});
  return out;
}

}  // namespace amc::io
