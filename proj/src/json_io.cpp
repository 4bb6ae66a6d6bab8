#include "holosig/json_io.hpp"

#include <cctype>
#include <fstream>
#include <iostream>
#include <sstream>

namespace holosig {

namespace {

[[noreturn]] void bad(const std::string& what) { throw parse_error(what); }

double number_at(const json& j) {
  if (!j.is_number()) bad("expected a number");
  return j.get<double>();
}

} // namespace

void to_json(json& j, const TensorSeries& s) {
  json levels = json::array();
  for (int p = 0; p <= s.depth(); ++p) levels.push_back(s.level(p));
  j = json{{"n", s.alphabet()}, {"m", s.depth()}, {"levels", levels}};
}

TensorSeries tensor_series_from_json(const json& j, std::size_t cap) {
  if (!j.is_object() || !j.contains("n") || !j.contains("m") ||
      !j.contains("levels"))
    bad("tensor series needs n, m and levels");
  if (!j["n"].is_number_integer() || !j["m"].is_number_integer())
    bad("n and m must be integers");
  const int n = j["n"].get<int>();
  const int m = j["m"].get<int>();
  if (n < 1 || m < 0) bad("bad n or m");
  TensorSeries s(n, m, cap);
  const auto& levels = j["levels"];
  if (!levels.is_array() || static_cast<int>(levels.size()) != m + 1)
    bad("levels must hold m+1 arrays");
  for (int p = 0; p <= m; ++p) {
    const auto& lv = levels[static_cast<std::size_t>(p)];
    if (!lv.is_array() || lv.size() != s.level(p).size())
      bad("level " + std::to_string(p) + " has wrong size");
    for (std::size_t k = 0; k < lv.size(); ++k)
      s.level(p)[k] = number_at(lv[k]);
  }
  return s;
}

void to_json(json& j, const PlPath& p) {
  j = json{{"dimension", p.dimension}, {"points", p.points}};
}

void from_json(const json& j, PlPath& p) {
  if (!j.is_object() || !j.contains("dimension") || !j.contains("points"))
    bad("path needs dimension and points");
  if (!j["dimension"].is_number_integer()) bad("dimension must be an integer");
  p.dimension = j["dimension"].get<int>();
  p.points.clear();
  const auto& pts = j["points"];
  if (!pts.is_array()) bad("points must be an array");
  for (const auto& row : pts) {
    if (!row.is_array()) bad("each point must be an array");
    std::vector<double> point;
    point.reserve(row.size());
    for (const auto& x : row) point.push_back(number_at(x));
    p.points.push_back(std::move(point));
  }
  try {
    p.validate();
  } catch (const error& e) {
    bad(e.what());
  }
}

void to_json(json& j, const MonomialOneForm& f) {
  j = json{{"exponents", f.exponents},
           {"factor", f.factor},
           {"direction", f.direction}};
}

void from_json(const json& j, MonomialOneForm& f) {
  if (!j.is_object() || !j.contains("exponents") || !j.contains("factor") ||
      !j.contains("direction"))
    bad("one-form needs exponents, factor and direction");
  f.exponents.clear();
  for (const auto& e : j["exponents"]) {
    if (!e.is_number_integer()) bad("exponents must be integers");
    f.exponents.push_back(e.get<int>());
  }
  f.factor = number_at(j["factor"]);
  if (!j["direction"].is_number_integer()) bad("direction must be an integer");
  f.direction = j["direction"].get<int>();
}

void to_json(json& j, const MatrixConnection& c) {
  j = json{{"d", c.size}, {"dimension", c.dimension}, {"entries", c.entries}};
}

void from_json(const json& j, MatrixConnection& c) {
  if (!j.is_object() || !j.contains("d") || !j.contains("dimension") ||
      !j.contains("entries"))
    bad("connection needs d, dimension and entries");
  try {
    c.size = j["d"].get<int>();
    c.dimension = j["dimension"].get<int>();
    c.entries =
        j["entries"].get<std::vector<std::vector<std::vector<MonomialOneForm>>>>();
    c.validate();
  } catch (const json::exception& e) {
    bad(std::string("bad connection: ") + e.what());
  } catch (const error& e) {
    bad(e.what());
  }
}

void to_json(json& j, const LogSignature& s) {
  json coords = json::array();
  for (const auto& [w, v] : s.coordinates)
    coords.push_back(json{{"word", word_to_string(w)}, {"value", v}});
  j = json{{"n", s.alphabet},
           {"m", s.depth},
           {"coords", coords},
           {"residual", s.residual}};
}

void to_json(json& j, const TruncatedHolonomy& h) {
  j = json{{"value", h.value},
           {"steps", h.steps},
           {"error_estimate", h.error_estimate}};
  j["order_estimate"] = h.order_estimate ? json(*h.order_estimate) : json();
}

void to_json(json& j, const MatrixHolonomy& h) {
  json rows = json::array();
  const auto d = static_cast<std::size_t>(h.size);
  for (std::size_t i = 0; i < d; ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < d; ++k) row.push_back(h.value[i * d + k]);
    rows.push_back(row);
  }
  j = json{{"d", h.size},
           {"value", rows},
           {"steps", h.steps},
           {"error_estimate", h.error_estimate}};
  j["order_estimate"] = h.order_estimate ? json(*h.order_estimate) : json();
}

void to_json(json& j, const XiNormRow& r) {
  j = json{{"xi", r.xi}, {"total", r.total}, {"level_mass", r.level_mass}};
  if (!r.factorial_bound.empty()) j["factorial_bound"] = r.factorial_bound;
}

PlPath path_from_csv(std::istream& in) {
  PlPath p;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    // tolerate both comma and whitespace separators
    for (char& c : line)
      if (c == ',' || c == '\t' || c == '\r') c = ' ';
    std::istringstream row(line);
    std::vector<double> point;
    std::string tok;
    bool numeric = true;
    while (row >> tok) {
      try {
        std::size_t used = 0;
        const double x = std::stod(tok, &used);
        if (used != tok.size()) numeric = false;
        point.push_back(x);
      } catch (const std::exception&) {
        numeric = false;
      }
    }
    if (point.empty() && numeric) continue; // blank line
    if (!numeric) {
      if (first) {
        first = false; // header row
        continue;
      }
      bad("non-numeric row in path CSV");
    }
    if (p.points.empty())
      p.dimension = static_cast<int>(point.size());
    else if (static_cast<int>(point.size()) != p.dimension)
      bad("mismatched row widths in path CSV");
    p.points.push_back(std::move(point));
    first = false;
  }
  try {
    p.validate();
  } catch (const error& e) {
    bad(e.what());
  }
  return p;
}

std::string read_stream_or_file(const std::string& filename) {
  std::ostringstream buf;
  if (filename == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(filename);
    if (!in) bad("cannot open '" + filename + "'");
    buf << in.rdbuf();
  }
  return buf.str();
}

PlPath read_path_file(const std::string& filename) {
  const std::string text = read_stream_or_file(filename);
  std::size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
    ++i;
  if (i == text.size()) bad("empty path file");
  if (text[i] == '{') {
    json j;
    try {
      j = json::parse(text);
    } catch (const json::exception& e) {
      bad(std::string("bad JSON: ") + e.what());
    }
    return j.get<PlPath>();
  }
  std::istringstream in(text);
  return path_from_csv(in);
}

} // namespace holosig
