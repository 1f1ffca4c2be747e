#include "tropmono/format.hpp"

#include <vector>

#include "tropmono/errors.hpp"

namespace tropmono {

  namespace {
    TropScalar entry_from_json(nlohmann::json const& e, std::string const& where) {
      if (e.is_string()) {
        auto const token = e.get<std::string>();
        try {
          return parse_scalar(token);
        } catch (ParseError const& err) {
          throw ParseError("bad scalar \"" + token + "\" in " + where,
                           err.position());
        }
      }
      if (e.is_number_integer()) {
        return TropScalar(static_cast<long>(e.get<long long>()));
      }
      throw ParseError("expected a scalar token string in " + where, 0);
    }

    std::vector<TropScalar> row_from_json(nlohmann::json const& row,
                                          std::string const&    where) {
      if (!row.is_array()) {
        throw ParseError("expected an array for " + where, 0);
      }
      std::vector<TropScalar> out;
      for (std::size_t j = 0; j < row.size(); ++j) {
        out.push_back(entry_from_json(row[j],
                                      where + " entry " + std::to_string(j)));
      }
      return out;
    }

    nlohmann::json parse_json(std::string_view text) {
      try {
        return nlohmann::json::parse(text);
      } catch (nlohmann::json::parse_error const& e) {
        throw ParseError("malformed JSON: " + std::string(e.what()), e.byte);
      }
    }
  }  // namespace

  nlohmann::json to_json(TropMatrix const& a) {
    auto out = nlohmann::json::array();
    for (std::size_t i = 0; i < a.dim(); ++i) {
      auto row = nlohmann::json::array();
      for (std::size_t j = 0; j < a.dim(); ++j) {
        row.push_back(to_string(a(i, j)));
      }
      out.push_back(std::move(row));
    }
    return out;
  }

  nlohmann::json to_json(TropVector const& v) {
    auto out = nlohmann::json::array();
    for (std::size_t i = 0; i < v.dim(); ++i) {
      out.push_back(to_string(v[i]));
    }
    return out;
  }

  std::string to_json_string(TropMatrix const& a) {
    return to_json(a).dump();
  }

  TropMatrix matrix_from_json(nlohmann::json const& j) {
    if (!j.is_array() || j.empty()) {
      throw ParseError("expected a non-empty array of rows", 0);
    }
    std::vector<std::vector<TropScalar>> rows;
    for (std::size_t i = 0; i < j.size(); ++i) {
      rows.push_back(row_from_json(j[i], "row " + std::to_string(i)));
      if (rows.back().size() != j.size()) {
        throw ParseError("row " + std::to_string(i) + " has "
                             + std::to_string(rows.back().size())
                             + " entries, expected "
                             + std::to_string(j.size()),
                         0);
      }
    }
    return TropMatrix(rows);
  }

  TropMatrix parse_matrix(std::string_view text) {
    return matrix_from_json(parse_json(text));
  }

  TropVector parse_vector(std::string_view text) {
    auto row = row_from_json(parse_json(text), "vector");
    if (row.empty()) {
      throw ParseError("expected a non-empty vector", 0);
    }
    return TropVector(std::move(row));
  }

}  // namespace tropmono
