// Copyright 2026 The cyclomat Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <set>
#include <sstream>
#include <utility>

#include "CLI11.hpp"
#include "json.hpp"

#include "cyclomat/classify.hpp"
#include "cyclomat/equivalence.hpp"
#include "cyclomat/families.hpp"
#include "cyclomat/spectra.hpp"
#include "cyclomat/symmetrize.hpp"

namespace cyclomat::cli {

using nlohmann::json;

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

DigraphDocument DigraphDocument::FromDigraph(const Digraph& g) {
  DigraphDocument d;
  d.n = g.order();
  for (std::size_t i = 0; i < d.n; ++i)
    if (g.charge(i) != 0) d.charges[i + 1] = g.charge(i);
  for (std::size_t i = 0; i < d.n; ++i)
    for (std::size_t j = i + 1; j < d.n; ++j)
      if (g(i, j) != 0 || g(j, i) != 0) d.edges.push_back({i + 1, j + 1, g(i, j), g(j, i)});
  return d;
}

Digraph DigraphDocument::to_digraph() const {
  Digraph g(n);
  for (const auto& [v, c] : charges) g.set(v - 1, v - 1, c);
  for (const EdgeRecord& e : edges) g.set_pair(e.i - 1, e.j - 1, e.aij, e.aji);
  return g;
}

namespace {

struct Token {
  std::string_view text;
  std::size_t column;
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t k = 0;
  while (k < line.size()) {
    if (line[k] == '#') break;
    if (line[k] == ' ' || line[k] == '\t' || line[k] == '\r') {
      ++k;
      continue;
    }
    const std::size_t start = k;
    while (k < line.size() && line[k] != ' ' && line[k] != '\t' && line[k] != '\r' && line[k] != '#')
      ++k;
    out.push_back({line.substr(start, k - start), start + 1});
  }
  return out;
}

Entry integer(const Token& t, std::size_t line) {
  Entry v = 0;
  const char* end = t.text.data() + t.text.size();
  auto [p, ec] = std::from_chars(t.text.data(), end, v);
  if (ec != std::errc() || p != end)
    throw ParseError(line, t.column, "expected an integer, got '" + std::string(t.text) + "'");
  return v;
}

std::size_t vertex(const Token& t, std::size_t line, std::size_t n) {
  const Entry v = integer(t, line);
  if (v < 1 || static_cast<std::size_t>(v) > n)
    throw ParseError(line, t.column, "vertex " + std::to_string(v) + " out of range 1.." + std::to_string(n));
  return static_cast<std::size_t>(v);
}

}  // namespace

DigraphDocument parse(std::string_view text) {
  DigraphDocument doc;
  bool have_n = false;
  std::set<std::pair<std::size_t, std::size_t>> pairs;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    const std::vector<Token> tok = tokenize(line);
    if (tok.empty()) continue;
    const std::string_view kind = tok[0].text;
    const auto arity = [&](std::size_t k) {
      if (tok.size() < k + 1)
        throw ParseError(line_no, line.size() + 1, "'" + std::string(kind) + "' needs " + std::to_string(k) + " values");
      if (tok.size() > k + 1) throw ParseError(line_no, tok[k + 1].column, "unexpected trailing value");
    };
    if (kind == "n") {
      if (have_n) throw ParseError(line_no, tok[0].column, "duplicate 'n' record");
      arity(1);
      const Entry n = integer(tok[1], line_no);
      if (n < 1) throw ParseError(line_no, tok[1].column, "order must be at least 1");
      doc.n = static_cast<std::size_t>(n);
      have_n = true;
    } else if (!have_n) {
      throw ParseError(line_no, tok[0].column, "'n' must come first");
    } else if (kind == "c") {
      arity(2);
      const std::size_t v = vertex(tok[1], line_no, doc.n);
      if (!doc.charges.emplace(v, integer(tok[2], line_no)).second)
        throw ParseError(line_no, tok[0].column, "duplicate charge for vertex " + std::to_string(v));
    } else if (kind == "e") {
      arity(4);
      const std::size_t i = vertex(tok[1], line_no, doc.n);
      const std::size_t j = vertex(tok[2], line_no, doc.n);
      if (i == j) throw ParseError(line_no, tok[2].column, "edge endpoints must differ");
      if (!pairs.emplace(std::min(i, j), std::max(i, j)).second)
        throw ParseError(line_no, tok[0].column,
                         "duplicate edge " + std::to_string(i) + " " + std::to_string(j));
      doc.edges.push_back({i, j, integer(tok[3], line_no), integer(tok[4], line_no)});
    } else {
      throw ParseError(line_no, tok[0].column, "unknown record '" + std::string(kind) + "'");
    }
  }
  if (!have_n) throw ParseError(line_no ? line_no : 1, 1, "missing 'n' record");
  return doc;
}

std::string emit(const DigraphDocument& doc) {
  std::ostringstream out;
  out << "n " << doc.n << '\n';
  for (const auto& [v, c] : doc.charges) out << "c " << v << ' ' << c << '\n';
  for (const EdgeRecord& e : doc.edges)
    out << "e " << e.i << ' ' << e.j << ' ' << e.aij << ' ' << e.aji << '\n';
  return out.str();
}

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), {}};
}

Digraph load(const std::string& path) {
  try {
    return parse(read_input(path)).to_digraph();
  } catch (const ParseError& e) {
    throw UsageError(path + ":" + e.what());
  }
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

json big(const mpz_class& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

json matrix_json(const Digraph& g) {
  json rows = json::array();
  for (std::size_t i = 0; i < g.order(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < g.order(); ++j) row.push_back(g(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

void matrix_text(std::ostream& out, const Digraph& g) {
  for (std::size_t i = 0; i < g.order(); ++i) {
    for (std::size_t j = 0; j < g.order(); ++j) out << (j ? " " : "") << g(i, j);
    out << '\n';
  }
}

std::size_t search_cap() {
  if (const char* env = std::getenv("CYCLOMAT_MAX_ORDER")) {
    std::size_t v = 0;
    const std::string_view s(env);
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size() || v < 1)
      throw UsageError("CYCLOMAT_MAX_ORDER must be a positive integer");
    return v;
  }
  return EnumerateOptions{}.cap;
}

int cmd_check(const std::string& path, bool as_json, std::ostream& out) {
  const Digraph g = load(path);
  const bool sign_sym = is_sign_symmetric(g);
  const bool sym = sign_sym && is_symmetrizable(g);
  const bool cyc = sym && is_cyclotomic(g);
  const bool open = cyc && all_eigs_in_open(g);
  const bool four = is_plus_minus_two_only(g);
  const bool conn = is_connected(g);
  if (as_json) {
    out << json{{"sign_symmetric", sign_sym}, {"symmetrizable", sym}, {"connected", conn},
                {"cyclotomic", cyc}, {"open_interval", open}, {"square_is_4I", four}}
                   .dump(2)
        << '\n';
  } else {
    out << "sign_symmetric " << yes_no(sign_sym) << '\n'
        << "symmetrizable " << yes_no(sym) << '\n'
        << "connected " << yes_no(conn) << '\n'
        << "cyclotomic " << yes_no(cyc) << '\n'
        << "open_interval " << yes_no(open) << '\n'
        << "square_is_4I " << yes_no(four) << '\n';
  }
  return 0;
}

int cmd_symmetrize(const std::string& path, bool as_json, std::ostream& out) {
  const Digraph g = load(path);
  Symmetrizer d;
  try {
    d = compute_symmetrizer(g);
  } catch (const NotSymmetrizableError& e) {
    json cycle = json::array();
    if (e.violation())
      for (std::size_t v : e.violation()->cycle) cycle.push_back(v + 1);
    if (as_json) {
      out << json{{"symmetrizable", false}, {"reason", e.what()}, {"cycle", cycle}}.dump(2) << '\n';
    } else {
      out << "symmetrizable no\nreason " << e.what() << '\n';
      if (!cycle.empty()) {
        out << "cycle";
        for (const auto& v : cycle) out << ' ' << v.get<std::size_t>();
        out << '\n';
      }
    }
    return 1;
  }
  const SurdMatrix s = symmetrization(g);
  if (as_json) {
    json dsq = json::array();
    for (const mpz_class& v : d.dsq) dsq.push_back(big(v));
    out << json{{"symmetrizable", true}, {"dsq", dsq}, {"t", matrix_json(s.squares())}}.dump(2)
        << '\n';
  } else {
    out << "symmetrizable yes\ndsq";
    for (const mpz_class& v : d.dsq) out << ' ' << v.get_str();
    out << "\nt\n";
    matrix_text(out, s.squares());
  }
  return 0;
}

int cmd_spectrum(const std::string& path, bool approx, bool as_json, std::ostream& out) {
  const Digraph g = load(path);
  const IntPolynomial p = char_poly(g);
  const mpq_class two(2), minus_two(-2);
  const std::size_t below = count_roots(p, std::nullopt, minus_two, false, true).count;
  const std::size_t at_m2 = count_roots(p, minus_two, minus_two, false, false).count;
  const std::size_t inside = count_roots(p, minus_two, two, true, true).count;
  const std::size_t at_2 = count_roots(p, two, two, false, false).count;
  const std::size_t above = count_roots(p, two, std::nullopt, true, false).count;
  std::optional<std::vector<double>> eigs;
  std::string approx_note;
  if (approx) {
    try {
      eigs = eigenvalues_float(g);
    } catch (const NotSymmetrizableError&) {
      approx_note = "not symmetrizable; eigenvalues may be complex";
    }
  }
  if (as_json) {
    json coeffs = json::array();
    for (const mpz_class& c : p.coeffs()) coeffs.push_back(big(c));
    json doc{{"char_poly", p.to_string()},
             {"coefficients", coeffs},
             {"counts", {{"below_minus_two", below}, {"at_minus_two", at_m2},
                         {"inside", inside}, {"at_two", at_2}, {"above_two", above}}},
             {"real_roots", below + at_m2 + inside + at_2 + above}};
    if (eigs) doc["eigenvalues"] = *eigs;
    if (!approx_note.empty()) doc["eigenvalues_note"] = approx_note;
    out << doc.dump(2) << '\n';
  } else {
    out << "char_poly " << p.to_string() << "\ncoefficients";
    for (const mpz_class& c : p.coeffs()) out << ' ' << c.get_str();
    out << "\n(-inf,-2) " << below << "\n{-2} " << at_m2 << "\n(-2,2) " << inside << "\n{2} "
        << at_2 << "\n(2,inf) " << above << '\n';
    if (eigs) {
      std::ostringstream line;
      line.precision(12);
      for (double e : *eigs) line << ' ' << e;
      out << "eigenvalues" << line.str() << '\n';
    }
    if (!approx_note.empty()) out << "eigenvalues " << approx_note << '\n';
  }
  return 0;
}

int cmd_equiv(const std::string& a_path, const std::string& b_path, bool as_json, std::ostream& out) {
  const Digraph a = load(a_path);
  const Digraph b = load(b_path);
  const std::optional<SignedPermutation> w =
      a.order() == b.order() ? find_equivalence(a, b) : std::nullopt;
  if (as_json) {
    json doc{{"equivalent", w.has_value()}};
    if (w) {
      json perm = json::array();
      for (std::size_t v : w->perm) perm.push_back(v + 1);
      doc["witness"] = {{"perm", perm}, {"signs", w->signs}, {"negate", w->negate}};
    }
    out << doc.dump(2) << '\n';
  } else if (w) {
    out << "equivalent\nperm";
    for (std::size_t v : w->perm) out << ' ' << v + 1;
    out << "\nsigns";
    for (int s : w->signs) out << ' ' << s;
    out << "\nnegate " << w->negate << '\n';
  } else {
    out << "not equivalent\n";
  }
  return 0;
}

int cmd_family(const std::string& name, std::optional<std::size_t> n, bool as_json, std::ostream& out) {
  FamilyId id;
  Digraph g(1);
  try {
    id = parse_family(name, n);
    if (is_surd_family(id.family)) {
      const SurdMatrix s = generate_surd(id);
      if (as_json) {
        out << json{{"family", display_name(id)}, {"surd", true}, {"t", matrix_json(s.squares())}}
                   .dump(2)
            << '\n';
      } else {
        out << "# " << display_name(id) << " (surd; entries are sgn(s)*s^2)\n";
        out << emit(DigraphDocument::FromDigraph(s.squares()));
      }
      return 0;
    }
    g = generate(id);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (as_json) {
    out << json{{"family", display_name(id)}, {"surd", false}, {"matrix", matrix_json(g)}}.dump(2)
        << '\n';
  } else {
    out << "# " << display_name(id) << '\n' << emit(DigraphDocument::FromDigraph(g));
  }
  return 0;
}

int report_out(const ClassificationReport& r, bool as_json, std::ostream& out) {
  out << (as_json ? to_json(r) : to_text(r));
  return r.passed ? 0 : 1;
}

}  // namespace

Outcome run(const std::vector<std::string>& args) {
  Outcome result;
  std::ostringstream out, err;

  CLI::App app{"Cyclotomic integer matrix toolkit"};
  app.name("cyclomat");
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "Emit JSON");

  std::string file_a, file_b, family_name, verify_what;
  std::optional<std::size_t> family_n;
  bool approx = false;
  SearchConstraints constraints;
  bool no_charges = false;
  std::size_t threads = 1;

  auto* check = app.add_subcommand("check", "Report the basic predicates of a digraph");
  check->add_option("file", file_a, "Digraph document ('-' for stdin)")->required();
  auto* symm = app.add_subcommand("symmetrize", "Symmetrizer and surd matrix");
  symm->add_option("file", file_a)->required();
  auto* spec = app.add_subcommand("spectrum", "Characteristic polynomial and root counts");
  spec->add_option("file", file_a)->required();
  spec->add_flag("--approx", approx, "Also print floating eigenvalues");
  auto* equiv = app.add_subcommand("equiv", "Decide equivalence and print a witness");
  equiv->add_option("file1", file_a)->required();
  equiv->add_option("file2", file_b)->required();
  auto* fam = app.add_subcommand("family", "Emit a named family member");
  fam->add_option("name", family_name)->required();
  fam->add_option("n", family_n, "Subscript for parametric families");
  auto* cls = app.add_subcommand("classify", "Enumerate equivalence classes");
  cls->add_option("--max-order", constraints.max_order)->required()->check(CLI::PositiveNumber);
  cls->add_flag("--nonnegative", constraints.require_nonnegative);
  cls->add_flag("--open", constraints.open_interval);
  cls->add_flag("--nonsymmetric", constraints.require_nonsymmetric);
  cls->add_flag("--no-charges", no_charges);
  cls->add_option("--threads", threads, "Worker threads (0: one per core)");
  auto* ver = app.add_subcommand("verify", "Check a classification statement");
  ver->add_option("statement", verify_what)
      ->required()
      ->check(CLI::IsMember({"theorem1", "theorem2", "corollary1", "corollary3", "corollary5"}));
  std::size_t verify_order = 0;
  ver->add_option("--max-order", verify_order)->required()->check(CLI::PositiveNumber);
  ver->add_option("--threads", threads);
  for (CLI::App* sub : {check, symm, spec, equiv, fam, cls, ver})
    sub->add_flag("--json", as_json, "Emit JSON");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    result.status = code == 0 ? 0 : 2;
    result.out = out.str();
    result.err = err.str();
    return result;
  }

  try {
    const EnumerateOptions options{search_cap(), threads};
    if (*check) {
      result.status = cmd_check(file_a, as_json, out);
    } else if (*symm) {
      result.status = cmd_symmetrize(file_a, as_json, out);
    } else if (*spec) {
      result.status = cmd_spectrum(file_a, approx, as_json, out);
    } else if (*equiv) {
      result.status = cmd_equiv(file_a, file_b, as_json, out);
    } else if (*fam) {
      result.status = cmd_family(family_name, family_n, as_json, out);
    } else if (*cls) {
      constraints.allow_charges = !no_charges;
      result.status = report_out(enumerate(constraints, options), as_json, out);
    } else if (*ver) {
      ClassificationReport r;
      if (verify_what == "theorem1") r = verify_theorem_1(verify_order, options);
      if (verify_what == "theorem2") r = verify_theorem_2(verify_order, options);
      if (verify_what == "corollary1") r = verify_corollary_1(verify_order, options);
      if (verify_what == "corollary3") r = verify_corollary_3(verify_order, options);
      if (verify_what == "corollary5") r = verify_corollary_5(verify_order, options);
      result.status = report_out(r, as_json, out);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    result.status = 2;
  } catch (const SearchCapError& e) {
    err << "error: " << e.what() << " (set CYCLOMAT_MAX_ORDER to raise it)\n";
    result.status = 2;
  }
  result.out = out.str();
  result.err = err.str();
  return result;
}

}  // namespace cyclomat::cli
