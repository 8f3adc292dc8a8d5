#ifndef MZV_JSON_IO_HPP
#define MZV_JSON_IO_HPP

#include <map>
#include <optional>
#include <string>

#include "json.hpp"
#include "mzv/ncpoly.hpp"

namespace mzv {

using Json = nlohmann::ordered_json;

// Bit-exact polynomial form:
//   {"alphabet":"X"|"Y","terms":[{"word":"<text>","coeff":"p/q"}]}
// with terms sorted by the word order and coefficients in canonical reduced
// form ("p/q", q >= 1).
Json ncpoly_to_json(const NcPoly& p);
NcPoly ncpoly_from_json(const Json& j);

// One basis weight block as a JSON array of {"word":...,"poly":{...}}.
Json basis_block_to_json(const std::map<Word, NcPoly>& block);
std::map<Word, NcPoly> basis_block_from_json(const Json& j, Alphabet a);

std::optional<Json> read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

}  // namespace mzv

#endif  // MZV_JSON_IO_HPP
