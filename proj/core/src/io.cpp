#include "contring/io.hpp"

#include <charconv>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "contring/error.hpp"

namespace contring {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::int64_t parse_int(std::string_view tok) {
  std::int64_t v = 0;
  if (!tok.empty() && tok.front() == '+') tok.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size() || tok.empty()) {
    fail(ErrorKind::ParseError, "not an integer: '" + std::string(tok) + "'");
  }
  return v;
}

std::vector<std::int64_t> parse_ints(std::string_view s) {
  std::vector<std::int64_t> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == ',' || s[i] == '\n' || s[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < s.size() && !(s[j] == ' ' || s[j] == '\t' || s[j] == ',' || s[j] == '\n' || s[j] == '\r')) ++j;
    if (j > i) out.push_back(parse_int(s.substr(i, j - i)));
    i = j;
  }
  return out;
}

Field make_field(std::int64_t p) {
  if (p < 2 || p >= 65536 || !is_prime(static_cast<std::uint64_t>(p))) {
    fail(ErrorKind::ParseError, "modulus must be a prime below 65536: " + std::to_string(p));
  }
  return Field(static_cast<std::uint32_t>(p));
}

Mat square_from_rows(const Field& k, const std::vector<std::vector<std::int64_t>>& rows) {
  if (rows.empty()) fail(ErrorKind::ParseError, "matrix has no rows");
  for (const auto& r : rows) {
    if (r.size() != rows.size()) fail(ErrorKind::ParseError, "matrix must be square");
  }
  return Mat::from_rows(k, rows);
}

Mat parse_matrix_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& ex) {
    fail(ErrorKind::ParseError, std::string("invalid JSON: ") + ex.what());
  }
  if (!j.is_object() || !j.contains("p") || !j.contains("rows") || !j["p"].is_number_integer() ||
      !j["rows"].is_array()) {
    fail(ErrorKind::ParseError, "JSON matrix needs integer \"p\" and array \"rows\"");
  }
  const Field k = make_field(j["p"].get<std::int64_t>());
  std::vector<std::vector<std::int64_t>> rows;
  for (const auto& row : j["rows"]) {
    if (!row.is_array()) fail(ErrorKind::ParseError, "each row must be an array");
    std::vector<std::int64_t> r;
    for (const auto& v : row) {
      if (!v.is_number_integer()) fail(ErrorKind::ParseError, "entries must be integers");
      r.push_back(v.get<std::int64_t>());
    }
    rows.push_back(std::move(r));
  }
  return square_from_rows(k, rows);
}

}  // namespace

Mat parse_matrix(std::string_view text) {
  text = trim(text);
  if (!text.empty() && text.front() == '{') return parse_matrix_json(text);
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == ';') {
      parts.push_back(trim(text.substr(start, i - start)));
      start = i + 1;
    }
  }
  while (!parts.empty() && parts.back().empty()) parts.pop_back();
  if (parts.empty() || parts[0].substr(0, 2) != "p=") {
    fail(ErrorKind::ParseError, "matrix text must start with p=<prime>");
  }
  const Field k = make_field(parse_int(trim(parts[0].substr(2))));
  std::vector<std::vector<std::int64_t>> rows;
  for (std::size_t i = 1; i < parts.size(); ++i) rows.push_back(parse_ints(parts[i]));
  return square_from_rows(k, rows);
}

Poly parse_poly(const Field& field, std::string_view text) {
  text = trim(text);
  std::vector<std::int64_t> coeffs;
  if (!text.empty() && text.front() == '[') {
    try {
      for (const auto& v : json::parse(text)) coeffs.push_back(v.get<std::int64_t>());
    } catch (const json::exception& ex) {
      fail(ErrorKind::ParseError, std::string("invalid polynomial: ") + ex.what());
    }
  } else {
    coeffs = parse_ints(text);
  }
  if (coeffs.empty()) fail(ErrorKind::ParseError, "polynomial has no coefficients");
  std::vector<Elem> reduced;
  for (auto c : coeffs) reduced.push_back(field.reduce(c));
  return Poly(field, std::move(reduced));
}

std::string read_input(const std::string& arg) {
  std::error_code ec;
  if (arg.size() < 4096 && std::filesystem::is_regular_file(arg, ec)) {
    std::ifstream in(arg);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  return arg;
}

json rows_json(const Mat& a) {
  json rows = json::array();
  for (std::size_t i = 0; i < a.rows(); ++i) rows.push_back(json(std::vector<Elem>(a.row(i).begin(), a.row(i).end())));
  return rows;
}

json to_json(const Mat& a) { return json{{"p", a.field().p()}, {"rows", rows_json(a)}}; }

json to_json(const RankValue& r) { return json{{"num", r.num}, {"den", r.den}}; }

json to_json(const Poly& f) { return json(f.coeffs()); }

json to_json(const GeodesicPath& path) {
  json points = json::array();
  for (const Mat& m : path.points) points.push_back(rows_json(m));
  json times = json::array();
  for (const RankValue& t : path.times) times.push_back(to_json(t));
  return json{{"points", points}, {"times", times}, {"verified", verify_geodesic(path)}};
}

json to_json(const Rcf& r) {
  json factors = json::array();
  for (const Poly& f : r.factors) factors.push_back(to_json(f));
  return json{{"factors", factors}, {"index", r.index}, {"transform", rows_json(r.transform)}};
}

json to_json(const Witness& w) {
  json out{{"kind", w.kind == WitnessKind::Gamma ? "gamma" : "parabolic"},
           {"f_rank", w.f.rank()},
           {"radius", to_json(w.radius())}};
  if (w.e) out["e_rank"] = w.e->rank();
  return out;
}

std::string to_text(const Mat& a) {
  std::ostringstream os;
  os << "p=" << a.field().p();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    os << ";";
    for (std::size_t j = 0; j < a.cols(); ++j) os << ' ' << a(i, j);
  }
  return os.str();
}

}  // namespace contring
