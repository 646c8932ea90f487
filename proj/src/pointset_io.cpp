#include "selection/pointset_io.hpp"

#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

namespace sel {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

i64 parse_int(const std::string& tok, int line_no) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(tok, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != tok.size())
    throw ParseError("line " + std::to_string(line_no) + ": bad integer '" + tok + "'");
  return v;
}

}  // namespace

PointSetFile read_point_set(std::istream& in) {
  PointSetFile out;
  std::string line;
  int line_no = 0;
  int dim = -1;
  std::vector<Point> pts;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string t = trim(line);
    if (t.empty()) continue;
    if (t[0] == '#') {
      std::string c = trim(t.substr(1));
      if (c.find("frame=sheared") != std::string::npos) out.sheared_frame = true;
      out.comments.push_back(std::move(c));
      continue;
    }
    std::istringstream ls(t);
    if (dim < 0) {
      std::string kw, value;
      ls >> kw >> value;
      if (kw != "dim" || value.empty())
        throw ParseError("line " + std::to_string(line_no) + ": expected 'dim <d>'");
      dim = static_cast<int>(parse_int(value, line_no));
      if (dim < 1) throw ParseError("dimension must be positive");
      continue;
    }
    std::vector<i64> coords;
    std::string tok;
    while (ls >> tok) coords.push_back(parse_int(tok, line_no));
    if (static_cast<int>(coords.size()) != dim)
      throw ParseError("line " + std::to_string(line_no) + ": expected " + std::to_string(dim) +
                       " coordinates");
    pts.emplace_back(std::move(coords));
  }
  if (dim < 0) throw ParseError("missing 'dim' header");
  out.points = PointSet(dim, std::move(pts));
  return out;
}

PointSetFile read_point_set_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return read_point_set(in);
}

void write_point_set(std::ostream& out, const PointSet& P, const std::vector<std::string>& comments) {
  out << "dim " << P.dim() << '\n';
  for (const auto& c : comments) out << "# " << c << '\n';
  for (const auto& p : P) {
    for (int k = 0; k < p.dim(); ++k) out << (k ? " " : "") << p[k];
    out << '\n';
  }
}

void write_point_set_file(const std::string& path, const PointSet& P,
                          const std::vector<std::string>& comments) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path);
  write_point_set(out, P, comments);
}

RationalPoint parse_rational_point(const std::string& text) {
  std::vector<std::pair<i64, i64>> parts;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    tok = trim(tok);
    const auto slash = tok.find('/');
    if (slash == std::string::npos) {
      parts.emplace_back(parse_int(tok, 0), 1);
    } else {
      const i64 d = parse_int(trim(tok.substr(slash + 1)), 0);
      if (d == 0) throw ParseError("zero denominator in '" + text + "'");
      parts.emplace_back(parse_int(trim(tok.substr(0, slash)), 0), d);
    }
  }
  if (parts.empty()) throw ParseError("empty point '" + text + "'");
  i64 den = 1;
  for (auto& [n, d] : parts) {
    if (d < 0) {
      n = -n;
      d = -d;
    }
    den = std::lcm(den, d);
  }
  std::vector<i128> num;
  for (auto& [n, d] : parts) num.push_back(static_cast<i128>(n) * (den / d));
  return make_rational_point(num, den);
}

}  // namespace sel
