#include "starlab/json_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "starlab/errors.hpp"

namespace starlab {

Json ring_to_json(const RingSpec& ring) {
  if (ring.is_finite()) return Json{{"kind", "prime_field"}, {"p", ring.p}};
  return Json{{"kind", "gaussian_rational"}};
}

RingSpec ring_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
    throw ParseError("ring must be an object with a string \"kind\"");
  const std::string kind = j["kind"];
  if (kind == "gaussian_rational") return RingSpec::gaussian();
  if (kind == "prime_field") {
    if (!j.contains("p") || !j["p"].is_number_unsigned())
      throw ParseError("prime_field ring needs a positive integer \"p\"");
    const auto p = j["p"].get<std::uint64_t>();
    if (p > 1000) throw ParseError("prime out of range: " + std::to_string(p));
    return RingSpec::prime(static_cast<std::uint32_t>(p));
  }
  throw ParseError("unknown ring kind '" + kind + "'");
}

Json matrix_to_json(const Mat& a) {
  Json entries = Json::array();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < a.cols(); ++j) row.push_back(format_scalar(a(i, j)));
    entries.push_back(std::move(row));
  }
  return Json{{"ring", ring_to_json(a.ring())},
              {"rows", a.rows()},
              {"cols", a.cols()},
              {"entries", std::move(entries)}};
}

Mat matrix_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("matrix JSON must be an object");
  for (const char* key : {"ring", "rows", "cols", "entries"})
    if (!j.contains(key)) throw ParseError(std::string("matrix JSON lacks \"") + key + "\"");
  const RingSpec ring = ring_from_json(j["ring"]);
  if (!j["rows"].is_number_unsigned() || !j["cols"].is_number_unsigned())
    throw ParseError("\"rows\" and \"cols\" must be non-negative integers");
  const auto rows = j["rows"].get<std::size_t>();
  const auto cols = j["cols"].get<std::size_t>();
  const Json& e = j["entries"];
  if (!e.is_array()) throw ParseError("\"entries\" must be an array of rows");
  std::vector<std::vector<std::string>> text;
  for (const Json& row : e) {
    if (!row.is_array()) throw ParseError("each row of \"entries\" must be an array");
    auto& out = text.emplace_back();
    for (const Json& s : row) {
      if (s.is_string()) out.push_back(s.get<std::string>());
      else if (s.is_number_integer()) out.push_back(std::to_string(s.get<long long>()));
      else throw ParseError("matrix entries must be scalar strings");
    }
  }
  if (text.size() != rows || (rows > 0 && text.front().size() != cols))
    throw ShapeError("declared shape " + std::to_string(rows) + "x" + std::to_string(cols) +
                     " does not match the entries");
  if (rows == 0 || cols == 0) throw ShapeError("matrices must have at least one row and column");
  return Mat::parse(ring, text);
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write '" + path + "'");
  out << text;
}

Mat load_matrix(const std::string& path_or_json) {
  const auto first = path_or_json.find_first_not_of(" \t\r\n");
  const bool inline_json = first != std::string::npos && path_or_json[first] == '{';
  return matrix_from_json(parse_json(inline_json ? path_or_json : read_file(path_or_json)));
}

RingSpec parse_ring_name(const std::string& text) {
  std::string s;
  for (char c : text)
    if (c != ' ') s += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (s == "q(i)" || s == "qi" || s == "gaussian" || s == "gaussian_rational") return RingSpec::gaussian();
  std::string digits = s;
  if (digits.rfind("z_", 0) == 0) digits = digits.substr(2);
  else if (digits.rfind("z", 0) == 0) digits = digits.substr(1);
  if (digits.empty() || digits.size() > 3 ||
      digits.find_first_not_of("0123456789") != std::string::npos)
    throw ParseError("unknown ring '" + text + "'");
  return RingSpec::prime(static_cast<std::uint32_t>(std::stoul(digits)));
}

}  // namespace starlab
