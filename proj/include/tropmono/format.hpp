// JSON interchange for matrices: an array of rows, each an array of scalar
// tokens, e.g. [["0","-inf"],["1/2","3"]]. Output is compact and always uses
// string tokens; input additionally accepts JSON integers as entries.

#ifndef TROPMONO_FORMAT_HPP_
#define TROPMONO_FORMAT_HPP_

#include <string>
#include <string_view>

#include "json.hpp"

#include "tropmono/matrix.hpp"

namespace tropmono {

  nlohmann::json to_json(TropMatrix const& a);
  nlohmann::json to_json(TropVector const& v);
  std::string    to_json_string(TropMatrix const& a);

  TropMatrix matrix_from_json(nlohmann::json const& j);
  TropMatrix parse_matrix(std::string_view text);
  TropVector parse_vector(std::string_view text);

}  // namespace tropmono

#endif  // TROPMONO_FORMAT_HPP_
