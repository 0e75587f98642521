#include "otg/io.hpp"

#include <charconv>
#include <optional>

namespace otg {

namespace {

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;
  int line = 0;  // 1-based line of the most recently returned line

  /// Next significant line (skips blanks and '#' comments); nullopt at EOF.
  std::optional<std::string_view> next() {
    while (pos < text.size()) {
      std::size_t end = text.find('\n', pos);
      if (end == std::string_view::npos) end = text.size();
      std::string_view raw = text.substr(pos, end - pos);
      pos = end + (end < text.size() ? 1 : 0);
      ++line;
      std::size_t first = raw.find_first_not_of(" \t\r");
      if (first == std::string_view::npos) continue;
      if (raw[first] == '#') continue;
      std::size_t last = raw.find_last_not_of(" \t\r");
      return raw.substr(first, last - first + 1);
    }
    return std::nullopt;
  }
};

long long parse_int(std::string_view token, int line) {
  long long value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size())
    throw ParseError(line, "malformed integer '" + std::string(token) + "'");
  return value;
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

Terrain parse_terrain(std::string_view text) {
  Cursor cur{text};
  const auto count_line = cur.next();
  if (!count_line) throw ParseError(cur.line + 1, "missing vertex count");
  const long long n = parse_int(*count_line, cur.line);
  if (n < 0) throw ParseError(cur.line, "negative vertex count");

  std::vector<Point> pts;
  std::vector<int> lines;
  pts.reserve(static_cast<std::size_t>(n));
  for (long long i = 0; i < n; ++i) {
    const auto vline = cur.next();
    if (!vline) throw ParseError(cur.line + 1, "expected " + std::to_string(n) +
                                                   " vertices, found " + std::to_string(i));
    const auto tokens = split_ws(*vline);
    if (tokens.size() != 2) throw ParseError(cur.line, "expected 'x y'");
    const long long x = parse_int(tokens[0], cur.line);
    const long long y = parse_int(tokens[1], cur.line);
    pts.push_back(Point{Rational(x), Rational(y)});
    lines.push_back(cur.line);
  }
  if (cur.next()) throw ParseError(cur.line, "trailing content after the last vertex");

  try {
    return Terrain::validate(std::move(pts));
  } catch (const TerrainError& e) {
    const int line = e.index >= 0 && e.index < static_cast<VertexId>(lines.size())
                         ? lines[static_cast<std::size_t>(e.index)]
                         : cur.line;
    throw ParseError(line, e.what());
  }
}

std::string serialize_terrain(const Terrain& t) {
  std::string out = std::to_string(t.size());
  out += '\n';
  for (const Point& p : t.vertices()) {
    out += p.x.str();
    out += ' ';
    out += p.y.str();
    out += '\n';
  }
  return out;
}

SolutionData parse_solution(std::string_view text) {
  Cursor cur{text};
  const auto count_line = cur.next();
  if (!count_line) throw ParseError(cur.line + 1, "missing guard count");
  const long long g = parse_int(*count_line, cur.line);
  if (g < 0) throw ParseError(cur.line, "negative guard count");

  SolutionData sol;
  for (long long i = 0; i < g; ++i) {
    const auto gline = cur.next();
    if (!gline) throw ParseError(cur.line + 1, "expected " + std::to_string(g) +
                                                   " guard lines, found " + std::to_string(i));
    const std::size_t colon = gline->find(':');
    if (colon == std::string_view::npos) throw ParseError(cur.line, "expected 'guard: witnesses'");
    const auto head = split_ws(gline->substr(0, colon));
    if (head.size() != 1) throw ParseError(cur.line, "expected a single guard index");
    sol.guards.push_back(static_cast<VertexId>(parse_int(head[0], cur.line)));
    std::vector<VertexId> list;
    for (const auto tok : split_ws(gline->substr(colon + 1)))
      list.push_back(static_cast<VertexId>(parse_int(tok, cur.line)));
    if (list.empty()) throw ParseError(cur.line, "guard line without witnesses");
    sol.lists.push_back(std::move(list));
  }
  if (cur.next()) throw ParseError(cur.line, "trailing content after the last guard");
  return sol;
}

std::string serialize_solution(const SolutionData& s) {
  std::string out = std::to_string(s.guards.size());
  out += '\n';
  for (std::size_t i = 0; i < s.guards.size(); ++i) {
    out += std::to_string(s.guards[i]);
    out += ':';
    for (VertexId w : s.lists[i]) {
      out += ' ';
      out += std::to_string(w);
    }
    out += '\n';
  }
  for (std::size_t i = 0; i < s.provenance.size(); ++i) {
    if (s.provenance[i].empty()) continue;
    out += "# provenance ";
    out += std::to_string(s.guards[i]);
    out += ": ";
    out += s.provenance[i];
    out += '\n';
  }
  return out;
}

SolutionData to_solution_data(const GuardSolution& sol) {
  SolutionData data;
  data.guards = sol.guards;
  data.lists = sol.lists;
  data.provenance.reserve(sol.provenance.size());
  for (std::uint8_t bits : sol.provenance) data.provenance.push_back(provenance_label(bits));
  return data;
}

std::string render_svg(const Terrain& t, const SolutionData* solution) {
  const BigInt pad = 2;
  BigInt min_x = t.vertices().front().x.num(), max_x = min_x;
  BigInt min_y = t.vertices().front().y.num(), max_y = min_y;
  for (const Point& p : t.vertices()) {
    min_x = std::min(min_x, p.x.num());
    max_x = std::max(max_x, p.x.num());
    min_y = std::min(min_y, p.y.num());
    max_y = std::max(max_y, p.y.num());
  }
  const auto sx = [&](const Rational& x) { return BigInt(x.num() - min_x + pad).str(); };
  const auto sy = [&](const Rational& y) { return BigInt(max_y - y.num() + pad).str(); };
  const BigInt width = max_x - min_x + 2 * pad;
  const BigInt height = max_y - min_y + 2 * pad;

  std::string svg = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"0 0 " +
         width.str() + " " + height.str() + "\">\n";
  svg += "  <polyline fill=\"none\" stroke=\"black\" stroke-width=\"0.15\" points=\"";
  bool first = true;
  for (const Point& p : t.vertices()) {
    if (!first) svg += ' ';
    first = false;
    svg += sx(p.x) + "," + sy(p.y);
  }
  svg += "\"/>\n";

  if (solution) {
    for (std::size_t i = 0; i < solution->guards.size(); ++i) {
      const Point& g = t.vertex(solution->guards[i]);
      for (VertexId w : solution->lists[i]) {
        const Point& pw = t.vertex(w);
        svg += "  <line stroke=\"gray\" stroke-width=\"0.08\" stroke-dasharray=\"0.4,0.3\" x1=\"" +
               sx(g.x) + "\" y1=\"" + sy(g.y) + "\" x2=\"" + sx(pw.x) + "\" y2=\"" + sy(pw.y) +
               "\"/>\n";
      }
    }
    for (std::size_t i = 0; i < solution->guards.size(); ++i) {
      const Point& g = t.vertex(solution->guards[i]);
      svg += "  <circle fill=\"crimson\" r=\"0.35\" cx=\"" + sx(g.x) + "\" cy=\"" + sy(g.y) +
             "\"/>\n";
    }
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace otg
