#include "sublat/matrix_io.hpp"

#include <cctype>
#include <sstream>
#include <vector>

#include "json.hpp"

namespace sublat {

namespace {

std::string trimmed(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

Int parse_entry(const std::string& raw) {
  const std::string t = trimmed(raw);
  if (t.empty()) throw parse_error("matrix entry is empty");
  std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
  if (i == t.size()) throw parse_error("matrix entry '" + t + "' is not an integer");
  for (; i < t.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(t[i])))
      throw parse_error("matrix entry '" + t + "' is not an integer");
  return Int(t);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

IntMatrix from_rows(const std::vector<std::vector<Int>>& rows) {
  if (rows.empty() || rows[0].empty()) throw parse_error("matrix has no entries");
  const std::size_t cols = rows[0].size();
  for (const auto& r : rows)
    if (r.size() != cols) throw parse_error("matrix has ragged rows");
  IntMatrix m(static_cast<Eigen::Index>(rows.size()),
              static_cast<Eigen::Index>(cols));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j)
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i][j];
  return m;
}

IntMatrix parse_json_matrix(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(std::string("invalid JSON matrix: ") + e.what());
  }
  if (!j.is_array() || j.empty()) throw parse_error("JSON matrix must be an array of arrays");
  std::vector<std::vector<Int>> rows;
  for (const auto& row : j) {
    if (!row.is_array()) throw parse_error("JSON matrix must be an array of arrays");
    std::vector<Int> r;
    for (const auto& v : row) {
      if (v.is_number_integer() || v.is_number_unsigned())
        r.push_back(parse_entry(v.dump()));
      else if (v.is_string())
        r.push_back(parse_entry(v.get<std::string>()));
      else
        throw parse_error(
            "JSON matrix entries must be integers (quote values beyond 2^63 "
            "as decimal strings)");
    }
    rows.push_back(std::move(r));
  }
  return from_rows(rows);
}

}  // namespace

IntMatrix parse_matrix(const std::string& text) {
  const std::string t = trimmed(text);
  if (t.empty()) throw parse_error("matrix text is empty");
  if (t[0] == '[') return parse_json_matrix(t);
  std::vector<std::vector<Int>> rows;
  for (const std::string& row : split(t, ';')) {
    std::vector<Int> r;
    for (const std::string& cell : split(row, ',')) r.push_back(parse_entry(cell));
    rows.push_back(std::move(r));
  }
  return from_rows(rows);
}

std::string render_matrix(const IntMatrix& m) {
  std::ostringstream out;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    if (i > 0) out << ';';
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j > 0) out << ',';
      out << m(i, j);
    }
  }
  return out.str();
}

}  // namespace sublat
