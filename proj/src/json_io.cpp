#include "mzv/json_io.hpp"

#include <fstream>
#include <stdexcept>

namespace mzv {

Json ncpoly_to_json(const NcPoly& p) {
  Json terms = Json::array();
  for (auto& [w, c] : p.terms()) {
    terms.push_back({{"word", w.str()}, {"coeff", c.str()}});
  }
  return Json{{"alphabet", alphabet_name(p.alphabet())}, {"terms", std::move(terms)}};
}

NcPoly ncpoly_from_json(const Json& j) {
  std::string a = j.at("alphabet").get<std::string>();
  if (a != "X" && a != "Y") throw std::invalid_argument("ncpoly_from_json: bad alphabet");
  Alphabet alph = a == "X" ? Alphabet::X : Alphabet::Y;
  NcPoly p(alph);
  for (const auto& t : j.at("terms")) {
    Word w = Word::parse(alph, t.at("word").get<std::string>());
    p.add_term(w, Rational::parse(t.at("coeff").get<std::string>()));
  }
  return p;
}

Json basis_block_to_json(const std::map<Word, NcPoly>& block) {
  Json arr = Json::array();
  for (auto& [w, poly] : block) {
    arr.push_back({{"word", w.str()}, {"poly", ncpoly_to_json(poly)}});
  }
  return arr;
}

std::map<Word, NcPoly> basis_block_from_json(const Json& j, Alphabet a) {
  std::map<Word, NcPoly> out;
  for (const auto& entry : j) {
    Word w = Word::parse(a, entry.at("word").get<std::string>());
    out.emplace(w, ncpoly_from_json(entry.at("poly")));
  }
  return out;
}

std::optional<Json> read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  Json j;
  in >> j;
  return j;
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump(1) << "\n";
}

}  // namespace mzv
