// Command-line front end: enumerate Lyndon words, build bases, decompose
// polynomials, generate and reduce polyzeta relations, emit the relation and
// irreducible tables, and run the verification suites.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "mzv/json_io.hpp"
#include "mzv/numeric_oracle.hpp"
#include "mzv/zeta_algebra.hpp"

using namespace mzv;

namespace {

constexpr int kExitVerifyFailure = 1;
constexpr int kExitConfigError = 2;
constexpr int kHeavyWeight = 9;  // weights from here on need --heavy

struct Output {
  std::optional<std::string> path;

  int write(const std::string& body) const {
    if (!path) {
      std::cout << body;
      return 0;
    }
    std::ofstream out(*path, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot open " << *path << " for writing\n";
      return kExitConfigError;
    }
    out << body;
    return 0;
  }
};

std::string csv_cell(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    out += c;
  }
  return out + "\"";
}

std::optional<std::string> cache_dir_from_env() {
  const char* dir = std::getenv("MZV_CACHE_DIR");
  if (dir && *dir) return std::string(dir);
  return std::nullopt;
}

int check_weight_range(int max_weight, bool heavy) {
  if (max_weight < 2) {
    std::cerr << "error: --max-weight must be >= 2\n";
    return kExitConfigError;
  }
  if (max_weight >= kHeavyWeight && !heavy) {
    std::cerr << "error: --max-weight " << max_weight
              << " is resource-intensive (exact arithmetic on 2^" << (max_weight - 1)
              << "-word blocks); pass --heavy to confirm\n";
    return kExitConfigError;
  }
  if (max_weight >= kHeavyWeight)
    std::cerr << "note: weight " << max_weight
              << " requested; expect minutes of exact-arithmetic work\n";
  return 0;
}

Alphabet parse_alphabet_flag(const std::string& a) {
  if (a == "x" || a == "X") return Alphabet::X;
  if (a == "y" || a == "Y") return Alphabet::Y;
  throw CLI::ValidationError("--alphabet must be x or y");
}

std::string render_table(const RewriteSystem& rs, int max_weight, const std::string& format) {
  auto rhs_cell = [&](Side side, const Word& head) -> std::string {
    const RewriteRule* rule = nullptr;
    for (auto& r : rs.rules(side, head.weight()))
      if (r.head.word == head) rule = &r;
    return rule ? rule->rhs.str() : "irreducible";
  };
  if (format == "csv") {
    std::ostringstream out;
    out << "weight,lyndon_word_Y,sigma_expression,lyndon_word_X,s_expression\n";
    for (int n = 2; n <= max_weight; ++n) {
      for (const Word& l : lyndon_words_of_weight(Alphabet::Y, n)) {
        if (l.length() == 1 && l.letters()[0] == 1) continue;  // divergent generator
        Word lx = *project_word(l);
        out << n << "," << csv_cell(l.str()) << "," << csv_cell(rhs_cell(Side::Sigma, l)) << ","
            << csv_cell(lx.str()) << "," << csv_cell(rhs_cell(Side::S, lx)) << "\n";
      }
    }
    return out.str();
  }
  if (format == "json") {
    Json rules = Json::array();
    for (int n = 2; n <= max_weight; ++n) {
      for (Side s : {Side::Sigma, Side::S})
        for (auto& r : rs.rules(s, n)) rules.push_back(rule_to_json(r, n));
    }
    Json irr = Json::array();
    for (int n = 2; n <= max_weight; ++n)
      for (Side s : {Side::Sigma, Side::S})
        for (auto& v : rs.irreducibles(s, n))
          irr.push_back({{"weight", n}, {"side", side_name(v.side)}, {"word", v.word.str()}});
    Json dims = Json::array();
    for (auto& row : dimensions(rs, max_weight))
      dims.push_back({{"weight", row.weight},
                      {"d", row.d},
                      {"new_irreducibles_sigma", row.new_irreducibles_sigma},
                      {"new_irreducibles_s", row.new_irreducibles_s}});
    return Json{{"rules", rules}, {"irreducibles", irr}, {"dimensions", dims}}.dump(1) + "\n";
  }
  // text
  std::ostringstream out;
  for (int n = 2; n <= max_weight; ++n) {
    out << "-- weight " << n << " (d_" << n << " = " << rs.dimension(Side::Sigma, n) << ")\n";
    for (const Word& l : lyndon_words_of_weight(Alphabet::Y, n)) {
      if (l.length() == 1 && l.letters()[0] == 1) continue;
      Word lx = *project_word(l);
      out << "  zeta(Sigma[" << l.str() << "]) = " << rhs_cell(Side::Sigma, l) << "\n";
      out << "  zeta(S[" << lx.str() << "]) = " << rhs_cell(Side::S, lx) << "\n";
    }
  }
  return out.str();
}

std::string render_irreducibles(const RewriteSystem& rs, int max_weight,
                                const std::string& format) {
  if (format == "json") {
    Json rows = Json::array();
    for (int n = 2; n <= max_weight; ++n) {
      Json sig = Json::array(), ess = Json::array();
      for (auto& v : rs.irreducibles(Side::Sigma, n)) sig.push_back(v.word.str());
      for (auto& v : rs.irreducibles(Side::S, n)) ess.push_back(v.word.str());
      rows.push_back({{"weight", n},
                      {"d", rs.dimension(Side::Sigma, n)},
                      {"sigma", sig},
                      {"s", ess}});
    }
    return rows.dump(1) + "\n";
  }
  if (format == "csv") {
    std::ostringstream out;
    out << "weight,d,side,word\n";
    for (int n = 2; n <= max_weight; ++n) {
      for (auto& v : rs.irreducibles(Side::Sigma, n))
        out << n << "," << rs.dimension(Side::Sigma, n) << ",Sigma," << csv_cell(v.word.str())
            << "\n";
      for (auto& v : rs.irreducibles(Side::S, n))
        out << n << "," << rs.dimension(Side::Sigma, n) << ",S," << csv_cell(v.word.str()) << "\n";
    }
    return out.str();
  }
  std::ostringstream out;
  for (int n = 2; n <= max_weight; ++n) {
    out << "weight " << n << ": d_" << n << " = " << rs.dimension(Side::Sigma, n)
        << "; irreducible:";
    bool any = false;
    for (auto& v : rs.irreducibles(Side::Sigma, n)) {
      out << " " << v.str();
      any = true;
    }
    for (auto& v : rs.irreducibles(Side::S, n)) {
      out << " " << v.str();
      any = true;
    }
    if (!any) out << " (none)";
    out << "\n";
  }
  return out.str();
}

struct CheckReport {
  std::string name;
  bool pass;
  std::string detail;
};

// the invariant suites behind `verify`
std::vector<CheckReport> run_verify_suites(ZetaAlgebra& za, int max_weight, bool numeric_check,
                                           long cutoff, double tol) {
  std::vector<CheckReport> reports;
  Bases& bases = za.bases();
  auto add = [&](const std::string& name, bool pass, const std::string& detail = "") {
    reports.push_back({name, pass, detail});
  };

  {  // duality of the pairing matrices
    bool ok = true;
    std::string detail;
    for (int n = 1; n <= max_weight && ok; ++n) {
      for (Alphabet a : {Alphabet::X, Alphabet::Y}) {
        auto words = words_of_weight(a, n);
        for (auto& u : words)
          for (auto& v : words) {
            Rational expect(u == v ? 1 : 0);
            if (pairing(bases.basis_P(u), bases.basis_S(v)) != expect) {
              ok = false;
              detail = "P/S block " + std::to_string(n);
            }
          }
      }
      auto words = words_of_weight(Alphabet::Y, n);
      for (auto& u : words)
        for (auto& v : words) {
          Rational expect(u == v ? 1 : 0);
          if (pairing(bases.basis_Pi(u), bases.basis_Sigma(v)) != expect) {
            ok = false;
            detail = "Pi/Sigma block " + std::to_string(n);
          }
        }
    }
    add("duality", ok, detail);
  }

  {  // triangularity
    bool ok = true;
    std::string detail;
    for (int n = 1; n <= max_weight && ok; ++n) {
      auto check = [&](BasisId id, const Word& w, bool lower) {
        const NcPoly& p = bases.element(id, w);
        if (p.coeff(w) != Rational(1)) return false;
        for (auto& [u, c] : p.terms()) {
          if (u.weight() != w.weight()) return false;
          if (u == w) continue;
          auto ord = compare(u, w);
          if (ord != (lower ? std::strong_ordering::less : std::strong_ordering::greater))
            return false;
        }
        return true;
      };
      for (const Word& w : words_of_weight(Alphabet::X, n))
        ok = ok && check({BasisKind::P, Alphabet::X}, w, false) &&
             check({BasisKind::S, Alphabet::X}, w, true);
      for (const Word& w : words_of_weight(Alphabet::Y, n))
        ok = ok && check({BasisKind::P, Alphabet::Y}, w, false) &&
             check({BasisKind::S, Alphabet::Y}, w, true) &&
             check({BasisKind::Pi, Alphabet::Y}, w, false) &&
             check({BasisKind::Sigma, Alphabet::Y}, w, true);
      if (!ok) detail = "weight " + std::to_string(n);
    }
    add("triangularity", ok, detail);
  }

  {  // primitivity of the Lie/primitive elements
    bool ok = true;
    for (int n = 1; n <= max_weight && ok; ++n) {
      for (Alphabet a : {Alphabet::X, Alphabet::Y}) {
        for (const Word& l : lyndon_words_of_weight(a, n)) {
          NcPoly p = bases.basis_P(l);
          TensorPoly d = coproduct(p, CoproductKind::Shuffle);
          d -= TensorPoly::outer(p, NcPoly::unit(a));
          d -= TensorPoly::outer(NcPoly::unit(a), p);
          ok = ok && d.is_zero();
        }
      }
      for (const Word& l : lyndon_words_of_weight(Alphabet::Y, n)) {
        NcPoly p = bases.basis_Pi(l);
        TensorPoly d = coproduct(p, CoproductKind::Stuffle);
        d -= TensorPoly::outer(p, NcPoly::unit(Alphabet::Y));
        d -= TensorPoly::outer(NcPoly::unit(Alphabet::Y), p);
        ok = ok && d.is_zero();
      }
    }
    add("primitivity", ok);
  }

  {  // truncated Schutzenberger factorizations
    int w = std::min(max_weight, 4);
    bool ok = bases.schutzenberger_residual(Alphabet::X, w).is_zero() &&
              bases.schutzenberger_residual(Alphabet::Y, w).is_zero();
    add("schutzenberger", ok, "through weight " + std::to_string(w));
  }

  RewriteSystem bridge = za.build_system(ZetaAlgebra::Generator::Bridge, max_weight);

  {  // rule-for-rule agreement of the two relation generators
    RewriteSystem dbl = za.build_system(ZetaAlgebra::Generator::DoubleExpression, max_weight);
    bool ok = true;
    std::string detail;
    for (int n = 2; n <= max_weight && ok; ++n) {
      for (Side s : {Side::S, Side::Sigma}) {
        auto& ra = bridge.rules(s, n);
        auto& rb = dbl.rules(s, n);
        if (ra.size() != rb.size()) {
          ok = false;
        } else {
          for (size_t i = 0; i < ra.size(); ++i)
            if (!(ra[i].head == rb[i].head) || ra[i].rhs != rb[i].rhs) ok = false;
        }
        if (bridge.irreducibles(s, n) != dbl.irreducibles(s, n)) ok = false;
        if (!ok) detail = "weight " + std::to_string(n) + " side " + side_name(s);
      }
    }
    add("algorithm_agreement", ok, detail);
  }

  {  // dimensions agree across sides
    bool ok = true;
    for (int n = 2; n <= max_weight; ++n)
      ok = ok && bridge.dimension(Side::S, n) == bridge.dimension(Side::Sigma, n);
    add("dimension_side_consistency", ok);
  }

  {  // side transports commute with reduction
    bool ok = true;
    for (int n = 2; n <= max_weight && ok; ++n) {
      for (const Word& l : lyndon_words_of_weight(Alphabet::X, n)) {
        ZetaPoly a = bridge.normal_form(
            za.zeta_character(project_poly(bases.basis_S(l), Alphabet::Y), Side::Sigma));
        ZetaPoly reduced = bridge.normal_form(ZetaPoly::variable(ZetaVar(Side::S, l)));
        ZetaPoly transported;
        for (auto& [m, c] : reduced.terms()) {
          ZetaPoly term = ZetaPoly::constant(c);
          for (auto& [v, k] : m.factors()) {
            NcPoly proj = project_poly(bases.basis_S(v.word), Alphabet::Y);
            term = term * za.zeta_character(proj, Side::Sigma).pow(k);
          }
          transported += term;
        }
        ok = ok && a == bridge.normal_form(transported);
      }
    }
    add("side_transport_consistency", ok);
  }

  if (numeric_check) {
    bool ok = true;
    std::string detail;
    int hi = std::min(max_weight, 5);
    for (int n = 3; n <= hi && ok; ++n) {
      for (const Relation& rel : za.relations(ZetaAlgebra::Generator::Bridge, n, n)) {
        if (rel.kind == RelationKind::Transport) continue;
        auto r = check_relation_numeric(rel, za.bases(), cutoff, tol);
        if (!r.pass) {
          ok = false;
          detail = rel.provenance;
        }
      }
    }
    add("numeric", ok, detail);
  }

  return reports;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact shuffle/stuffle Hopf-algebra kernel for polyzeta relations"};
  app.require_subcommand(1);

  int max_weight = 6;
  std::string alphabet = "y";
  std::string basis = "Sigma";
  std::string side;
  std::string format = "text";
  std::string out_path;
  std::string word_text;
  std::string poly_text;
  std::string generator = "bridge";
  bool heavy = false;
  bool numeric_flag = false;
  long cutoff = 100000;
  double tol = 1e-3;

  auto add_common = [&](CLI::App* cmd, bool with_weight = true) {
    if (with_weight) cmd->add_option("--max-weight", max_weight, "weight bound (default 6)");
    cmd->add_option("--format", format, "output format: json, csv or text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    cmd->add_option("--out", out_path, "write output to this path instead of stdout");
    cmd->add_flag("--heavy", heavy, "confirm resource-intensive weights (>= 9)");
  };

  auto* lyndon_cmd = app.add_subcommand("lyndon", "list Lyndon words up to a weight");
  lyndon_cmd->add_option("--alphabet", alphabet, "x or y")
      ->check(CLI::IsMember({"x", "y", "X", "Y"}));
  add_common(lyndon_cmd);

  auto* basis_cmd = app.add_subcommand("basis", "print one basis element");
  basis_cmd->add_option("--basis", basis, "P, S, Pi or Sigma")
      ->check(CLI::IsMember({"P", "S", "Pi", "Sigma"}));
  basis_cmd->add_option("--alphabet", alphabet, "x or y (P and S only)")
      ->check(CLI::IsMember({"x", "y", "X", "Y"}));
  basis_cmd->add_option("--word", word_text, "index word in text form")->required();
  add_common(basis_cmd, false);

  auto* decompose_cmd = app.add_subcommand("decompose", "coordinates of a polynomial in a basis");
  decompose_cmd->add_option("--basis", basis, "P, S, Pi or Sigma")
      ->check(CLI::IsMember({"P", "S", "Pi", "Sigma"}));
  decompose_cmd->add_option("--poly", poly_text, "polynomial as JSON (default: read stdin)");
  add_common(decompose_cmd, false);

  auto* relations_cmd = app.add_subcommand("relations", "emit generated relations");
  relations_cmd->add_option("--generator", generator, "bridge or double")
      ->check(CLI::IsMember({"bridge", "double"}));
  relations_cmd->add_option("--side", side, "restrict to one side (S or Sigma)")
      ->check(CLI::IsMember({"S", "Sigma"}));
  add_common(relations_cmd);

  auto* tables_cmd = app.add_subcommand("tables", "relation table and irreducible list");
  add_common(tables_cmd);

  auto* irr_cmd = app.add_subcommand("irreducibles", "irreducible polyzetas and dimensions");
  add_common(irr_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "run the verification suites");
  verify_cmd->add_flag("--numeric-check", numeric_flag, "also run the numeric oracle");
  verify_cmd->add_option("--cutoff", cutoff, "summation cutoff for the numeric oracle");
  verify_cmd->add_option("--tol", tol, "relative tolerance for the numeric oracle");
  add_common(verify_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitConfigError;
  }

  Output output{out_path.empty() ? std::nullopt : std::optional<std::string>(out_path)};

  try {
    if (lyndon_cmd->parsed()) {
      if (max_weight < 1) {
        std::cerr << "error: --max-weight must be >= 1\n";
        return kExitConfigError;
      }
      if (max_weight >= kHeavyWeight + 4 && !heavy) {
        std::cerr << "error: pass --heavy for very large enumerations\n";
        return kExitConfigError;
      }
      Alphabet a = parse_alphabet_flag(alphabet);
      auto words = lyndon_words(a, max_weight);
      if (format == "json") {
        Json arr = Json::array();
        for (auto& w : words) arr.push_back(w.str());
        return output.write(arr.dump(1) + "\n");
      }
      std::ostringstream os;
      if (format == "csv") {
        os << "weight,word\n";
        for (auto& w : words) os << w.weight() << "," << csv_cell(w.str()) << "\n";
      } else {
        for (auto& w : words) os << w.str() << "\n";
      }
      return output.write(os.str());
    }

    Bases bases(cache_dir_from_env());
    ZetaAlgebra za(&bases);

    if (basis_cmd->parsed()) {
      BasisKind kind = parse_basis_kind(basis);
      if ((kind == BasisKind::Pi || kind == BasisKind::Sigma) &&
          (alphabet == "x" || alphabet == "X")) {
        std::cerr << "error: Pi/Sigma bases live over the alphabet Y\n";
        return kExitConfigError;
      }
      Alphabet a = (kind == BasisKind::Pi || kind == BasisKind::Sigma)
                       ? Alphabet::Y
                       : parse_alphabet_flag(alphabet);
      Word w = Word::parse(a, word_text);
      const NcPoly& p = bases.element({kind, a}, w);
      if (format == "json") {
        Json j{{"basis", basis_kind_name(kind)}, {"word", w.str()}, {"poly", ncpoly_to_json(p)}};
        return output.write(j.dump(1) + "\n");
      }
      return output.write(basis_kind_name(kind) + "[" + w.str() + "] = " + p.pretty() + "\n");
    }

    if (decompose_cmd->parsed()) {
      BasisKind kind = parse_basis_kind(basis);
      std::string text = poly_text;
      if (text.empty()) {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        text = buf.str();
      }
      NcPoly p = ncpoly_from_json(Json::parse(text));
      auto coords = bases.decompose(p, {kind, p.alphabet()});
      if (format == "json") {
        Json arr = Json::array();
        for (auto& [w, c] : coords) arr.push_back({{"word", w.str()}, {"coeff", c.str()}});
        return output.write(arr.dump(1) + "\n");
      }
      std::ostringstream os;
      for (auto& [w, c] : coords)
        os << basis_kind_name(kind) << "[" << w.str() << "]: " << c.pretty() << "\n";
      return output.write(os.str());
    }

    if (relations_cmd->parsed()) {
      if (int rc = check_weight_range(max_weight, heavy)) return rc;
      auto gen = generator == "double" ? ZetaAlgebra::Generator::DoubleExpression
                                       : ZetaAlgebra::Generator::Bridge;
      auto rels = za.relations(gen, 2, max_weight);
      Json arr = Json::array();
      std::ostringstream os;
      for (auto& r : rels) {
        if (!side.empty()) {
          auto s = r.poly.terms().empty() ? std::nullopt : r.poly.terms().begin()->first.side();
          if (r.kind == RelationKind::Eliminable && (!s || side_name(*s) != side)) continue;
        }
        if (format == "json")
          arr.push_back(relation_to_json(r));
        else
          os << r.provenance << ": " << r.poly.str() << " = 0\n";
      }
      if (format == "json") return output.write(arr.dump(1) + "\n");
      return output.write(os.str());
    }

    if (tables_cmd->parsed()) {
      if (int rc = check_weight_range(max_weight, heavy)) return rc;
      RewriteSystem rs = za.build_system(ZetaAlgebra::Generator::Bridge, max_weight);
      return output.write(render_table(rs, max_weight, format));
    }

    if (irr_cmd->parsed()) {
      if (int rc = check_weight_range(max_weight, heavy)) return rc;
      RewriteSystem rs = za.build_system(ZetaAlgebra::Generator::Bridge, max_weight);
      return output.write(render_irreducibles(rs, max_weight, format));
    }

    if (verify_cmd->parsed()) {
      if (int rc = check_weight_range(max_weight, heavy)) return rc;
      auto reports = run_verify_suites(za, max_weight, numeric_flag, cutoff, tol);
      bool all = true;
      if (format == "json") {
        Json arr = Json::array();
        for (auto& r : reports) {
          arr.push_back({{"check", r.name}, {"pass", r.pass}, {"detail", r.detail}});
          all = all && r.pass;
        }
        output.write(arr.dump(1) + "\n");
      } else {
        std::ostringstream os;
        for (auto& r : reports) {
          os << (r.pass ? "[PASS] " : "[FAIL] ") << r.name;
          if (!r.detail.empty()) os << " (" << r.detail << ")";
          os << "\n";
          all = all && r.pass;
        }
        output.write(os.str());
      }
      return all ? 0 : kExitVerifyFailure;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfigError;
  }
  return 0;
}
