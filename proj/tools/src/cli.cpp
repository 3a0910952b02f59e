#include "amc/cli.hpp"

#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "amc/clifford.hpp"
#include "amc/diagonal.hpp"
#include "amc/enumeration.hpp"
#include "amc/json_io.hpp"
#include "amc/moebius.hpp"
#include "amc/semilattice.hpp"

namespace amc::cli {

namespace {

using io::json;

constexpr const char* kSchemas = R"(Input schemas (a file path, or inline JSON starting with '{'):
  semilattice  {"n": 3, "table": [[0,0,0],[0,1,0],[0,0,2]], "labels": ["o","a","b"]}
               {"n": 3, "hasse": [[1,0],[2,0]]}     pairs [s,t] mean s > t
  clifford     {"skeleton": <semilattice>,
                "groups": [{"cyclic": [2]}, {"cyclic": []}, ...],   one per skeleton element
                "homs": [{"from": s, "to": t, "gen_images": [[1], ...]}]}
               omitted homs are trivial; gen_images lists the image of each
               cyclic generator of G_from as a residue tuple of G_to
  matrix       [["2","-1"],["-1","1"]]   entries as integers or "p/q" strings,
               rows and columns in the order of "perm"

Outputs list element data in the canonical order given by "perm" (minimum
first, then by level). Rationals are exact "p/q" strings; decimals are
truncated.

Exit codes: 0 ok, 2 validation failure, 3 internal oracle mismatch,
4 I/O or parse error.
Environment: AMC_WORKERS sets the thread count for spectrum and gap-search.)";

struct Mismatch {
  std::string message;
};

struct Options {
  std::string format;
  std::string method = "recursive";
  int digits = 6;
};

unsigned workers_from_env() {
  if (const char* w = std::getenv("AMC_WORKERS")) {
    try {
      const long v = std::stol(w);
      if (v > 0) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
  }
  return 1;
}

json perm_json(const std::vector<Element>& perm) { return json(perm); }

json labels_in(const Semilattice& s, const std::vector<Element>& order) {
  json out = json::array();
  for (Element e : order) out.push_back(s.label(e));
  return out;
}

Matrix ordered_matrix(const DiagonalTensor& d, const std::vector<Element>& order) {
  Matrix m(order.size(), order.size());
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t j = 0; j < order.size(); ++j) m(i, j) = d.at(order[i], order[j]);
  return m;
}

void print_table(std::ostream& out, const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
  for (const auto& r : rows)
    for (std::size_t c = 0; c < r.size(); ++c) width[c] = std::max(width[c], r[c].size());
  auto line = [&](const std::vector<std::string>& r) {
    for (std::size_t c = 0; c < r.size(); ++c) {
      if (c) out << "  ";
      out << std::setw(static_cast<int>(width[c])) << r[c];
    }
    out << "\n";
  };
  line(header);
  for (const auto& r : rows) line(r);
}

void print_csv(std::ostream& out, const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
  auto line = [&](const std::vector<std::string>& r) {
    for (std::size_t c = 0; c < r.size(); ++c) out << (c ? "," : "") << r[c];
    out << "\n";
  };
  line(header);
  for (const auto& r : rows) line(r);
}

void print_matrix(std::ostream& out, const std::string& format, const std::vector<std::string>& labels, const Matrix& m) {
  std::vector<std::string> header{""};
  header.insert(header.end(), labels.begin(), labels.end());
  std::vector<std::vector<std::string>> rows;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::vector<std::string> r{labels[i]};
    for (std::size_t j = 0; j < m.cols(); ++j) r.push_back(m(i, j).str());
    rows.push_back(std::move(r));
  }
  if (format == "csv") print_csv(out, header, rows);
  else print_table(out, header, rows);
}

Semilattice load_semilattice(const std::string& input) {
  return io::semilattice_from_json(io::load(input)).value();
}

std::vector<std::string> label_strings(const Semilattice& s, const std::vector<Element>& order) {
  std::vector<std::string> out;
  for (Element e : order) out.push_back(s.label(e));
  return out;
}

// The diagonal by each requested method; "all" compares them entrywise.
std::map<std::string, DiagonalTensor> diagonals(const Semilattice& s, const std::string& method) {
  std::map<std::string, DiagonalTensor> out;
  if (method == "recursive" || method == "all") out.emplace("recursive", diagonal_recursive(s));
  if (method == "moebius" || method == "all") out.emplace("moebius", diagonal_via_mobius(s));
  if (method == "solver" || method == "all") {
    const CliffordSemigroup g = trivial_clifford(s);
    out.emplace("solver", collapse(diagonal_solve(g), g));
  }
  const auto& perm = s.canonical_perm();
  const auto& first = out.begin()->second;
  for (const auto& [name, d] : out) {
    for (std::size_t i = 0; i < perm.size(); ++i)
      for (std::size_t j = 0; j < perm.size(); ++j) {
        const Rational& a = first.at(perm[i], perm[j]);
        const Rational& b = d.at(perm[i], perm[j]);
        if (a != b) {
          throw Mismatch{out.begin()->first + " and " + name + " differ at (" + s.label(perm[i]) + ", " +
                         s.label(perm[j]) + "): " + a.str() + " vs " + b.str()};
        }
      }
  }
  return out;
}

std::map<std::string, L1Vector> units(const Semilattice& s, const std::string& method) {
  std::map<std::string, L1Vector> out;
  if (method == "recursive" || method == "all") out.emplace("recursive", unit(s));
  if (method == "moebius" || method == "all") out.emplace("moebius", unit_via_schutzenberger(s));
  if (method == "solver" || method == "all") out.emplace("solver", solve_unit(s.table_ptr()));
  const auto& first = out.begin()->second;
  for (const auto& [name, u] : out)
    for (Element e = 0; e < s.size(); ++e)
      if (u[e] != first[e]) {
        throw Mismatch{out.begin()->first + " and " + name + " differ at " + s.label(e) + ": " + first[e].str() +
                       " vs " + u[e].str()};
      }
  return out;
}

int cmd_validate(const std::string& input, const Options& opt, std::ostream& out) {
  const json j = io::load(input);
  if (j.is_object() && j.contains("skeleton")) {
    const auto g = io::clifford_from_json(j);
    if (!g) {
      out << io::to_json(g.report()).dump() << "\n";
      return kInvalid;
    }
    out << json{{"ok", true}, {"kind", "clifford"}, {"size", g->size()}}.dump() << "\n";
    return kOk;
  }
  const auto v = io::semilattice_from_json(j);
  if (!v) {
    out << io::to_json(v.report()).dump() << "\n";
    return kInvalid;
  }
  const Semilattice& s = *v;
  if (opt.format == "table") {
    out << "ok: semilattice with " << s.size() << " elements, height " << s.height()
        << (s.is_unital() ? ", unital" : "") << "\n";
    return kOk;
  }
  json hasse = json::array();
  for (auto [a, b] : s.hasse_edges()) hasse.push_back({a, b});
  out << json{{"ok", true},
              {"kind", "semilattice"},
              {"n", s.size()},
              {"perm", perm_json(s.canonical_perm())},
              {"levels", s.levels()},
              {"height", s.height()},
              {"unital", s.is_unital()},
              {"hasse", hasse}}
             .dump()
      << "\n";
  return kOk;
}

int cmd_diagonal(const std::string& input, const Options& opt, std::ostream& out) {
  const Semilattice s = load_semilattice(input);
  const auto ds = diagonals(s, opt.method);
  const auto us = units(s, opt.method == "all" ? "all" : opt.method);
  const auto& perm = s.canonical_perm();
  const DiagonalTensor& d = ds.begin()->second;
  const Matrix m = ordered_matrix(d, perm);
  const Rational am = amenability_constant(d);
  if (opt.format == "table" || opt.format == "csv") {
    print_matrix(out, opt.format, label_strings(s, perm), m);
    if (opt.format == "table") out << "AM = " << am.str() << "\n";
    return kOk;
  }
  json j{{"perm", perm_json(perm)},
         {"labels", labels_in(s, perm)},
         {"unit", io::ordered(us.begin()->second, perm)},
         {"diagonal", io::to_json(m)},
         {"am", am.str()},
         {"am_decimal", am.decimal(opt.digits)},
         {"am_mod4", am.mod(4)}};
  if (opt.method == "all") {
    json by = json::object();
    for (const auto& [name, t] : ds) by[name] = io::to_json(ordered_matrix(t, perm));
    j["by_method"] = by;
  }
  out << j.dump() << "\n";
  return kOk;
}

int cmd_am(const std::string& input, const Options& opt, std::ostream& out) {
  const json j = io::load(input);
  Rational am;
  if (j.is_object() && j.contains("skeleton")) {
    am = am_constant(io::clifford_from_json(j).value());
  } else {
    const Semilattice s = io::semilattice_from_json(j).value();
    am = amenability_constant(diagonals(s, opt.method).begin()->second);
  }
  if (opt.format == "json") out << json{{"am", am.str()}, {"am_decimal", am.decimal(opt.digits)}}.dump() << "\n";
  else out << am.str() << "\n";
  return kOk;
}

int cmd_unit(const std::string& input, const Options& opt, std::ostream& out) {
  const Semilattice s = load_semilattice(input);
  const auto us = units(s, opt.method);
  const auto& perm = s.canonical_perm();
  const L1Vector& u = us.begin()->second;
  if (opt.format == "table" || opt.format == "csv") {
    std::vector<std::vector<std::string>> rows;
    for (Element e : perm) rows.push_back({s.label(e), u[e].str()});
    if (opt.format == "csv") print_csv(out, {"element", "u"}, rows);
    else print_table(out, {"element", "u"}, rows);
    return kOk;
  }
  out << json{{"perm", perm_json(perm)}, {"labels", labels_in(s, perm)}, {"unit", io::ordered(u, perm)}}.dump() << "\n";
  return kOk;
}

int cmd_moebius(const std::string& input, const Options& opt, std::ostream& out) {
  const Semilattice s = load_semilattice(input);
  const MobiusTable mu = mobius_table(s);
  const auto& perm = s.canonical_perm();
  if (opt.format == "table" || opt.format == "csv") {
    Matrix m(perm.size(), perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i)
      for (std::size_t k = 0; k < perm.size(); ++k) m(i, k) = static_cast<long>(mu.extended(perm[i], perm[k]));
    print_matrix(out, opt.format, label_strings(s, perm), m);
    return kOk;
  }
  out << json{{"perm", perm_json(perm)}, {"labels", labels_in(s, perm)}, {"mu", io::mobius_entries(s, mu)}}.dump()
      << "\n";
  return kOk;
}

int cmd_clifford(const std::string& input, const Options& opt, std::ostream& out) {
  const auto v = io::clifford_from_json(io::load(input));
  if (!v) {
    out << io::to_json(v.report()).dump() << "\n";
    return kInvalid;
  }
  const CliffordSemigroup& g = *v;
  const L1Vector u = unit_solve(g);
  const DiagonalTensor d = solve_diagonal(g.table_ptr(), u);
  const Rational am = amenability_constant(d);
  const DiagonalTensor collapsed = collapse(d, g);
  const DiagonalTensor skeleton = diagonal_recursive(g.skeleton());
  const bool collapse_ok = same_coefficients(collapsed, skeleton);
  if (!collapse_ok) throw Mismatch{"collapsed Clifford diagonal differs from the skeleton diagonal"};
  const Rational skeleton_am = amenability_constant(skeleton);

  std::vector<std::string> labels;
  for (Element x = 0; x < g.size(); ++x) labels.push_back(g.label(x));
  if (opt.format == "table" || opt.format == "csv") {
    print_matrix(out, opt.format, labels, d.matrix());
    if (opt.format == "table") out << "AM = " << am.str() << "  (skeleton " << skeleton_am.str() << ")\n";
    return kOk;
  }
  std::vector<Element> order(g.size());
  std::iota(order.begin(), order.end(), Element{0});
  const auto& sperm = g.skeleton().canonical_perm();
  out << json{{"elements", labels},
              {"unit", io::ordered(u, order)},
              {"diagonal", io::to_json(d.matrix())},
              {"am", am.str()},
              {"am_decimal", am.decimal(opt.digits)},
              {"skeleton_perm", perm_json(sperm)},
              {"collapse", io::to_json(ordered_matrix(collapsed, sperm))},
              {"collapse_matches_skeleton", collapse_ok},
              {"skeleton_am", skeleton_am.str()}}
             .dump()
      << "\n";
  return kOk;
}

int cmd_product(const std::string& left, const std::string& right, const Options& opt, std::ostream& out) {
  const Semilattice a = load_semilattice(left);
  const Semilattice b = load_semilattice(right);
  const Semilattice p = product(a, b);
  const DiagonalTensor dp = diagonal_recursive(p);
  const DiagonalTensor dt = tensor_diagonal(diagonal_recursive(a), diagonal_recursive(b));
  if (!same_coefficients(dp, dt)) throw Mismatch{"product diagonal differs from the tensor of the factor diagonals"};
  const Rational am = amenability_constant(dp);
  if (opt.format == "table" || opt.format == "csv") {
    print_matrix(out, opt.format, label_strings(p, p.canonical_perm()), ordered_matrix(dp, p.canonical_perm()));
    if (opt.format == "table") out << "AM = " << am.str() << "\n";
    return kOk;
  }
  out << json{{"semilattice", io::to_json(p)},
              {"perm", perm_json(p.canonical_perm())},
              {"diagonal", io::to_json(ordered_matrix(dp, p.canonical_perm()))},
              {"am", am.str()},
              {"factor_am", {amenability_constant(diagonal_recursive(a)).str(),
                             amenability_constant(diagonal_recursive(b)).str()}}}
             .dump()
      << "\n";
  return kOk;
}

int cmd_verify(const std::string& input, const std::string& matrix, const Options& opt, std::ostream& out) {
  const Semilattice s = load_semilattice(input);
  const json mj = io::load(matrix);
  const auto& perm = s.canonical_perm();
  if (!mj.is_array() || mj.size() != perm.size()) throw io::ParseError("matrix must have one row per element");
  Matrix m(perm.size(), perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (!mj[i].is_array() || mj[i].size() != perm.size()) throw io::ParseError("matrix must be square");
    for (std::size_t k = 0; k < perm.size(); ++k) {
      const json& e = mj[i][k];
      try {
        if (e.is_number_integer()) m(i, k) = Rational(e.get<long>());
        else if (e.is_string()) m(i, k) = Rational::parse(e.get<std::string>());
        else throw io::ParseError("matrix entries must be integers or \"p/q\" strings");
      } catch (const std::invalid_argument& ex) {
        throw io::ParseError(ex.what());
      }
    }
  }
  const DiagonalCheck check = verify_diagonal(DiagonalTensor(s.table_ptr(), perm, m), unit(s));
  if (opt.format == "table") {
    out << (check.ok ? "ok" : "fails " + check.equation + " equation") << "\n";
  } else {
    json j = io::to_json(check);
    if (!check.ok) {
      json w = json::array();
      for (Element e : check.witness) w.push_back(s.label(e));
      j["witness_labels"] = w;
    }
    out << j.dump() << "\n";
  }
  return check.ok ? kOk : kInvalid;
}

int cmd_spectrum(std::size_t max_size, bool solver, const Options& opt, std::ostream& out) {
  const auto reports = spectrum(max_size, {solver, workers_from_env()});
  if (opt.format == "json") {
    out << io::to_json(reports).dump() << "\n";
    return kOk;
  }
  std::vector<std::vector<std::string>> rows;
  for (const auto& r : reports)
    for (const auto& c : r.records)
      rows.push_back({std::to_string(r.size), std::to_string(c.class_id), c.am.str(), std::to_string(c.mod4),
                      c.unital ? "true" : "false", c.meets_2s_minus_1 ? "true" : "false",
                      c.meets_4s_minus_3 ? "true" : "false"});
  const std::vector<std::string> header{"size", "class_id", "am", "mod4", "unital", "meets_2s_minus_1",
                                        "meets_4s_minus_3"};
  if (opt.format == "csv") {
    print_csv(out, header, rows);
  } else {
    print_table(out, header, rows);
    for (const auto& r : reports) out << "size " << r.size << ": " << r.count << " classes\n";
  }
  return kOk;
}

int cmd_gap(GapSearchConfig config, const Options& opt, std::ostream& out) {
  config.workers = workers_from_env();
  const GapSearchReport r = gap_search(config);
  if (opt.format == "json") {
    out << io::to_json(r).dump() << "\n";
  } else {
    out << "skeletons up to size " << config.skeleton_max_size << ", cyclic orders up to " << config.max_cyclic_order
        << (config.nontrivial_homs ? ", all cover homomorphisms" : ", trivial homomorphisms") << "\n";
    out << "instances " << r.instances << " (rejected " << r.rejected << " of " << r.candidates << ")\n";
    std::vector<std::vector<std::string>> rows;
    for (const auto& [am, k] : r.am_counts) rows.push_back({am.str(), std::to_string(k)});
    print_table(out, {"am", "count"}, rows);
    out << "inside (5,9): " << r.in_gap.size() << "\n";
    out << "min above 5: " << (r.min_above_five ? r.min_above_five->str() : "none") << "\n";
  }
  return r.ok() ? kOk : kMismatch;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact diagonals and amenability constants of semilattice and Clifford semigroup algebras", "amc"};
  app.require_subcommand(1);
  app.footer(kSchemas);

  Options opt;
  std::string input, second, matrix;
  std::size_t max_size = 6;
  bool with_solver = false;
  GapSearchConfig gap;
  bool trivial_only = false;

  auto add_format = [&](CLI::App* c, const std::string& fallback) {
    c->add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"json", "table", "csv"}))->default_str(fallback);
  };
  auto add_input = [&](CLI::App* c) { c->add_option("input", input, "Input file or inline JSON")->required(); };
  auto add_method = [&](CLI::App* c) {
    c->add_option("--method", opt.method, "Computation route")
        ->check(CLI::IsMember({"recursive", "moebius", "solver", "all"}))
        ->capture_default_str();
  };
  auto add_digits = [&](CLI::App* c) { c->add_option("--digits", opt.digits, "Decimal digits")->capture_default_str(); };

  std::map<std::string, std::string> default_format;
  auto sub = [&](const std::string& name, const std::string& help, const std::string& fmt) {
    CLI::App* c = app.add_subcommand(name, help);
    add_format(c, fmt);
    default_format[name] = fmt;
    return c;
  };

  CLI::App* validate = sub("validate", "Check a semilattice or Clifford input against the axioms", "json");
  add_input(validate);
  CLI::App* diagonal = sub("diagonal", "Unit, diagonal and AM of l1(S)", "json");
  add_input(diagonal);
  add_method(diagonal);
  add_digits(diagonal);
  CLI::App* am = sub("am", "Amenability constant only", "table");
  add_input(am);
  add_method(am);
  add_digits(am);
  CLI::App* moebius = sub("moebius", "Moebius function of the order", "json");
  add_input(moebius);
  CLI::App* unit_cmd = sub("unit", "Unit of l1(S)", "json");
  add_input(unit_cmd);
  add_method(unit_cmd);
  CLI::App* clifford = sub("clifford", "Diagonal and AM of a Clifford semigroup algebra by exact solve", "json");
  add_input(clifford);
  add_digits(clifford);
  CLI::App* prod = sub("product", "Direct product of two semilattices and its diagonal", "json");
  prod->add_option("left", input, "First factor")->required();
  prod->add_option("right", second, "Second factor")->required();
  CLI::App* spectrum_cmd = sub("spectrum", "AM over every semilattice class up to a size", "table");
  spectrum_cmd->add_option("--max-size", max_size, "Largest size")->check(CLI::Range(1, 7))->capture_default_str();
  spectrum_cmd->add_flag("--with-solver", with_solver, "Also solve each class as a linear system");
  CLI::App* gap_cmd = sub("gap-search", "AM over a family of Clifford semigroups", "table");
  gap_cmd->add_option("--skeleton-max", gap.skeleton_max_size, "Largest skeleton")->check(CLI::Range(1, 7))->capture_default_str();
  gap_cmd->add_option("--max-order", gap.max_cyclic_order, "Largest cyclic order")->check(CLI::Range(1, 64))->capture_default_str();
  gap_cmd->add_option("--limit", gap.max_instances, "Refuse families with more candidates")->capture_default_str();
  gap_cmd->add_flag("--trivial-only", trivial_only, "Only trivial connecting homomorphisms");
  CLI::App* verify = sub("verify", "Check a supplied matrix against the diagonal equations", "json");
  add_input(verify);
  verify->add_option("--matrix", matrix, "Matrix file or inline JSON, rows in perm order")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "amc: " << e.what() << "\n";
    return kIoError;
  }

  CLI::App* chosen = app.get_subcommands().front();
  if (opt.format.empty()) opt.format = default_format[chosen->get_name()];
  const std::string name = chosen->get_name();

  try {
    if (name == "validate") return cmd_validate(input, opt, out);
    if (name == "diagonal") return cmd_diagonal(input, opt, out);
    if (name == "am") return cmd_am(input, opt, out);
    if (name == "moebius") return cmd_moebius(input, opt, out);
    if (name == "unit") return cmd_unit(input, opt, out);
    if (name == "clifford") return cmd_clifford(input, opt, out);
    if (name == "product") return cmd_product(input, second, opt, out);
    if (name == "verify") return cmd_verify(input, matrix, opt, out);
    if (name == "spectrum") return cmd_spectrum(max_size, with_solver, opt, out);
    gap.nontrivial_homs = !trivial_only;
    return cmd_gap(gap, opt, out);
  } catch (const InvalidInput& e) {
    out << io::to_json(e.report()).dump() << "\n";
    return kInvalid;
  } catch (const Mismatch& m) {
    err << "amc: oracle mismatch: " << m.message << "\n";
    return kMismatch;
  } catch (const OracleMismatch& m) {
    err << "amc: oracle mismatch: " << m.what() << "\n";
    return kMismatch;
  } catch (const io::IoError& e) {
    err << "amc: " << e.what() << "\n";
    return kIoError;
  } catch (const io::ParseError& e) {
    err << "amc: " << e.what() << "\n";
    return kIoError;
  } catch (const NotContractible& e) {
    err << "amc: " << e.what() << "\n";
    return kInvalid;
  } catch (const SearchTooLarge& e) {
    err << "amc: " << e.what() << "\n";
    return kInvalid;
  }
}

}  // namespace amc::cli
