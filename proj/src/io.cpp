#include "cox/io.hpp"

#include <cctype>
#include <sstream>

namespace cox {

FieldSpec FieldSpec::parse(const std::string& s) {
  if (s == "Q" || s == "q") return FieldSpec{0};
  std::string digits = s;
  if (!digits.empty() && (digits[0] == 'F' || digits[0] == 'f')) digits = digits.substr(1);
  if (digits.empty()) fail("syntax-error", "bad field spec '" + s + "'");
  for (char c : digits)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      fail("syntax-error", "bad field spec '" + s + "'");
  unsigned long p = std::stoul(digits);
  if (p == 0 || p > 0x7fffffffUL) fail("syntax-error", "field characteristic out of range");
  return FieldSpec{static_cast<uint32_t>(p)};
}

namespace {

std::string trim(const std::string& s) {
  size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(trim(cur));
  return out;
}

// split a name into (prefix, numeric suffix); suffix -1 when absent
std::pair<std::string, long> split_numeric(const std::string& name) {
  size_t i = name.size();
  while (i > 0 && std::isdigit(static_cast<unsigned char>(name[i - 1]))) --i;
  if (i == name.size() || i == 0) return {name, -1};
  return {name.substr(0, i), std::stol(name.substr(i))};
}

}  // namespace

std::vector<std::string> parse_var_list(const std::string& body) {
  std::vector<std::string> out;
  for (const auto& piece : split(body, ',')) {
    if (piece.empty()) fail("syntax-error", "empty variable entry");
    size_t dots = piece.find("..");
    if (dots == std::string::npos) {
      out.push_back(piece);
      continue;
    }
    std::string lo = trim(piece.substr(0, dots)), hi = trim(piece.substr(dots + 2));
    auto [plo, nlo] = split_numeric(lo);
    auto [phi, nhi] = split_numeric(hi);
    if (plo != phi || nlo < 0 || nhi < nlo)
      fail("syntax-error", "bad variable range '" + piece + "'");
    for (long i = nlo; i <= nhi; ++i) out.push_back(plo + std::to_string(i));
  }
  return out;
}

std::string render_var_list(const std::vector<std::string>& vars) {
  std::string out;
  size_t i = 0;
  while (i < vars.size()) {
    auto [p, n] = split_numeric(vars[i]);
    size_t j = i;
    if (n >= 0) {
      long expect = n;
      while (j + 1 < vars.size()) {
        auto [p2, n2] = split_numeric(vars[j + 1]);
        if (p2 == p && n2 == expect + 1) { ++j; ++expect; }
        else break;
      }
    }
    if (!out.empty()) out += ",";
    if (j - i >= 2) {
      out += vars[i] + ".." + vars[j];
      i = j + 1;
    } else {
      out += vars[i];
      ++i;
    }
  }
  return out;
}

GradingMatrix parse_grading_text(const std::string& body) {
  // row-major integer lists: [[1,1,0],[0,1,1]]
  std::vector<std::vector<long>> rows;
  std::vector<long> cur;
  std::string num;
  int depth = 0;
  auto flush_num = [&] {
    if (!num.empty()) {
      cur.push_back(std::stol(num));
      num.clear();
    }
  };
  for (char c : body) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == '[') {
      ++depth;
      if (depth > 2) fail("syntax-error", "grading nests too deep");
    } else if (c == ']') {
      flush_num();
      if (depth == 2 && !cur.empty()) {
        rows.push_back(cur);
        cur.clear();
      }
      --depth;
      if (depth < 0) fail("syntax-error", "unbalanced ']' in grading");
    } else if (c == ',') {
      flush_num();
    } else if (std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+') {
      num += c;
    } else {
      fail("syntax-error", std::string("unexpected '") + c + "' in grading");
    }
  }
  if (depth != 0) fail("syntax-error", "unbalanced '[' in grading");
  if (rows.empty()) fail("syntax-error", "empty grading");
  return GradingMatrix(rows);
}

std::string render_grading(const GradingMatrix& g) { return g.str(); }

InputDoc parse_document(const std::string& text) {
  InputDoc doc;
  bool saw_ring = false;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    size_t sp = t.find_first_of(" \t");
    std::string key = (sp == std::string::npos) ? t : t.substr(0, sp);
    std::string body = (sp == std::string::npos) ? "" : trim(t.substr(sp));
    auto where = [&] { return " (line " + std::to_string(lineno) + ")"; };
    if (key == "ring") {
      size_t lb = body.find('[');
      size_t rb = body.rfind(']');
      if (lb == std::string::npos || rb == std::string::npos || rb < lb)
        fail("syntax-error", "ring header needs field[vars]" + where());
      doc.field = FieldSpec::parse(trim(body.substr(0, lb)));
      doc.vars = parse_var_list(body.substr(lb + 1, rb - lb - 1));
      saw_ring = true;
    } else if (key == "grading") {
      doc.grading = parse_grading_text(body);
    } else if (key == "irrelevant") {
      for (auto& s : split(body, ',')) if (!s.empty()) doc.irrelevant.push_back(s);
    } else if (key == "relations") {
      for (auto& s : split(body, ';')) if (!s.empty()) doc.relations.push_back(s);
    } else if (key == "markers") {
      for (auto& s : split(body, ',')) if (!s.empty()) doc.markers.push_back(s);
    } else if (key == "status" || key == "certificate" || key.rfind("cert-", 0) == 0 ||
               key == "hypersurface") {
      doc.meta.push_back({key, body});
    } else {
      fail("syntax-error", "unknown section '" + key + "'" + where());
    }
  }
  if (!saw_ring) fail("syntax-error", "missing ring header");
  return doc;
}

}  // namespace cox
