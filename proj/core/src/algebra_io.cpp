#include "homleib/algebra_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace homleib {

using nlohmann::ordered_json;

HomLeibnizAlgebra parse_algebra(const std::string& text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::parse, std::string("JSON syntax error: ") + e.what());
  }
  try {
    if (!doc.is_object()) throw Error(ErrorKind::parse, "algebra file: expected an object");
    if (doc.value("field", "Q") != "Q") throw Error(ErrorKind::parse, "algebra file: field must be \"Q\"");
    if (!doc.contains("dim") || !doc["dim"].is_number_integer())
      throw Error(ErrorKind::parse, "algebra file: missing integer \"dim\"");
    int dim = doc["dim"].get<int>();
    if (dim < 0) throw Error(ErrorKind::parse, "algebra file: dim must be >= 0");

    HomLeibnizAlgebra g = HomLeibnizAlgebra::make(doc.value("name", "algebra"), dim);
    if (doc.contains("basis")) {
      if (!doc["basis"].is_array() || int(doc["basis"].size()) != dim)
        throw Error(ErrorKind::parse, "algebra file: basis must list dim labels");
      for (int i = 0; i < dim; ++i) g.basis_labels[i] = doc["basis"][i].get<std::string>();
    }

    auto index = [&](const ordered_json& j, const char* what) {
      if (!j.is_number_integer()) throw Error(ErrorKind::parse, std::string("algebra file: ") + what + " index must be an integer");
      int v = j.get<int>();
      if (v < 0 || v >= dim) throw Error(ErrorKind::parse, std::string("algebra file: ") + what + " index out of range");
      return v;
    };
    auto coeff = [&](const ordered_json& j) {
      if (!j.is_string())
        throw Error(ErrorKind::parse, "algebra file: coefficients must be rational strings like \"p/q\"");
      return rat_parse(j.get<std::string>());
    };

    std::set<std::tuple<int, int, int>> seen_bracket;
    for (const auto& entry : doc.value("bracket", ordered_json::array())) {
      if (!entry.is_array() || entry.size() != 4)
        throw Error(ErrorKind::parse, "algebra file: bracket entries are [i,j,k,\"p/q\"]");
      int i = index(entry[0], "bracket"), j = index(entry[1], "bracket"), k = index(entry[2], "bracket");
      if (!seen_bracket.insert({i, j, k}).second)
        throw Error(ErrorKind::parse, "algebra file: duplicate bracket entry (" + std::to_string(i) + "," +
                                          std::to_string(j) + "," + std::to_string(k) + ")");
      g.sc[i][j][k] = coeff(entry[3]);
    }
    std::set<std::pair<int, int>> seen_alpha;
    for (const auto& entry : doc.value("alpha", ordered_json::array())) {
      if (!entry.is_array() || entry.size() != 3)
        throw Error(ErrorKind::parse, "algebra file: alpha entries are [i,j,\"p/q\"]");
      int i = index(entry[0], "alpha"), j = index(entry[1], "alpha");
      if (!seen_alpha.insert({i, j}).second)
        throw Error(ErrorKind::parse,
                    "algebra file: duplicate alpha entry (" + std::to_string(i) + "," + std::to_string(j) + ")");
      g.alpha.at(j, i) = coeff(entry[2]); // coefficient of e_j in alpha(e_i)
    }
    return g;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::parse, std::string("algebra file: ") + e.what());
  }
}

HomLeibnizAlgebra load_algebra_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::parse, "cannot open \"" + path + "\"");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_algebra(buf.str());
}

std::string serialize_algebra(const HomLeibnizAlgebra& g) {
  ordered_json doc;
  doc["name"] = g.name;
  doc["field"] = "Q";
  doc["dim"] = g.dim;
  doc["basis"] = g.basis_labels;
  ordered_json bracket = ordered_json::array();
  for (int i = 0; i < g.dim; ++i)
    for (int j = 0; j < g.dim; ++j)
      for (int k = 0; k < g.dim; ++k)
        if (g.sc[i][j][k] != 0) bracket.push_back({i, j, k, rat_str(g.sc[i][j][k])});
  doc["bracket"] = bracket;
  ordered_json alpha = ordered_json::array();
  for (int i = 0; i < g.dim; ++i)
    for (int j = 0; j < g.dim; ++j)
      if (g.alpha.at(j, i) != 0) alpha.push_back({i, j, rat_str(g.alpha.at(j, i))});
  doc["alpha"] = alpha;
  return doc.dump();
}

} // namespace homleib
