#include "blockfunctor/group_file.hpp"

#include <charconv>
#include <set>
#include <sstream>

#include "blockfunctor/errors.hpp"
#include "blockfunctor/frobenius.hpp"
#include "blockfunctor/group_algorithms.hpp"

namespace blockfunctor {

namespace {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

std::vector<Token> split(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    if (i >= line.size()) break;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

unsigned long long parse_uint(const Token& t, std::size_t line) {
  unsigned long long value = 0;
  const auto* end = t.text.data() + t.text.size();
  const auto [ptr, ec] = std::from_chars(t.text.data(), end, value);
  if (ec != std::errc() || ptr != end)
    throw ParseError(line, t.column, "expected a nonnegative integer, got '" + std::string(t.text) + "'");
  return value;
}

struct PendingPoint {
  std::size_t line, column, point;
};

// Parses "(a,b,...)(c,...)" or "()" starting at `pos` of `line`. Returns the
// normalized text; records every point for the later range check.
std::string parse_cycles(std::string_view text, std::size_t pos, std::size_t line_no,
                         std::vector<PendingPoint>& points) {
  auto skip = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  };
  auto fail = [&](const std::string& what) { throw ParseError(line_no, pos + 1, what); };
  std::string out;
  std::set<std::size_t> seen;
  skip();
  if (pos >= text.size()) fail("expected cycle notation");
  std::size_t cycles = 0;
  while (pos < text.size()) {
    if (text[pos] != '(') fail("expected '('");
    ++pos;
    skip();
    if (pos < text.size() && text[pos] == ')') {
      if (cycles > 0) fail("empty cycle");
      ++pos;
      out += "()";
      ++cycles;
      skip();
      if (pos < text.size()) fail("the identity '()' must stand alone");
      break;
    }
    out += '(';
    bool first = true;
    while (true) {
      skip();
      const std::size_t start = pos;
      while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
      if (start == pos) fail("expected a point");
      const Token tok{text.substr(start, pos - start), start + 1};
      const auto point = parse_uint(tok, line_no);
      if (point == 0) throw ParseError(line_no, start + 1, "points are 1-based");
      if (!seen.insert(point).second)
        throw ParseError(line_no, start + 1, "repeated point " + std::to_string(point));
      points.push_back({line_no, start + 1, point});
      if (!first) out += ',';
      out += std::string(tok.text);
      first = false;
      skip();
      if (pos >= text.size()) fail("unterminated cycle");
      if (text[pos] == ',') {
        ++pos;
        continue;
      }
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      fail("expected ',' or ')'");
    }
    out += ')';
    ++cycles;
    skip();
  }
  return out;
}

}  // namespace

GroupSpec parse_group_file(std::string_view text) {
  GroupSpec spec;
  std::set<std::string> seen_keys;
  std::vector<PendingPoint> points;
  std::size_t degree_line = 0;
  std::size_t first_gen_line = 0;
  std::size_t matrix_line = 0, matrix_column = 0;
  bool frobenius = false;
  std::optional<unsigned long long> fp;
  std::optional<std::size_t> rank;
  std::vector<unsigned long long> matrix;
  bool have_matrix = false;

  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    ++line_no;
    start = end + 1;

    const auto tokens = split(line);
    if (tokens.empty() || tokens[0].text.front() == '#') {
      if (end == text.size()) break;
      continue;
    }
    const Token& key = tokens[0];
    const std::string k(key.text);
    auto once = [&] {
      if (k != "gen" && !seen_keys.insert(k).second) throw ParseError(line_no, key.column, "duplicate key '" + k + "'");
    };
    auto single_value = [&]() -> const Token& {
      if (tokens.size() != 2) throw ParseError(line_no, key.column, "'" + k + "' takes exactly one value");
      return tokens[1];
    };
    auto generator_form_only = [&] {
      if (frobenius) throw ParseError(line_no, key.column, "'" + k + "' cannot appear in a frobenius block");
    };
    auto frobenius_only = [&] {
      if (!frobenius) throw ParseError(line_no, key.column, "'" + k + "' is only allowed after 'frobenius'");
    };

    if (k == "name") {
      once();
      spec.name = std::string(single_value().text);
    } else if (k == "degree") {
      once();
      generator_form_only();
      spec.degree = parse_uint(single_value(), line_no);
      if (spec.degree == 0) throw ParseError(line_no, tokens[1].column, "degree must be positive");
      degree_line = line_no;
    } else if (k == "prime") {
      once();
      spec.prime = parse_uint(single_value(), line_no);
    } else if (k == "gen") {
      generator_form_only();
      if (first_gen_line == 0) first_gen_line = line_no;
      spec.generators.push_back(parse_cycles(line, key.column - 1 + 3, line_no, points));
    } else if (k == "frobenius") {
      once();
      if (tokens.size() != 1) throw ParseError(line_no, tokens[1].column, "'frobenius' takes no value");
      if (degree_line != 0 || first_gen_line != 0)
        throw ParseError(line_no, key.column, "'frobenius' cannot be combined with degree/gen");
      frobenius = true;
    } else if (k == "p") {
      once();
      frobenius_only();
      fp = parse_uint(single_value(), line_no);
    } else if (k == "rank") {
      once();
      frobenius_only();
      rank = parse_uint(single_value(), line_no);
      if (*rank == 0) throw ParseError(line_no, tokens[1].column, "rank must be positive");
    } else if (k == "matrix") {
      once();
      frobenius_only();
      if (tokens.size() < 2) throw ParseError(line_no, key.column, "'matrix' needs entries");
      for (std::size_t i = 1; i < tokens.size(); ++i) matrix.push_back(parse_uint(tokens[i], line_no));
      have_matrix = true;
      matrix_line = line_no;
      matrix_column = key.column;
    } else {
      throw ParseError(line_no, key.column, "unknown key '" + k + "'");
    }
    if (end == text.size()) break;
  }

  // A trailing newline ends the last line rather than opening a new one.
  const std::size_t eof_line = (!text.empty() && text.back() == '\n') ? line_no : line_no + 1;
  if (frobenius) {
    if (!fp) throw ParseError(eof_line, 1, "frobenius block is missing 'p'");
    if (!rank) throw ParseError(eof_line, 1, "frobenius block is missing 'rank'");
    if (!have_matrix) throw ParseError(eof_line, 1, "frobenius block is missing 'matrix'");
    if (matrix.size() != *rank * *rank)
      throw ParseError(matrix_line, matrix_column,
                       "matrix needs " + std::to_string(*rank * *rank) + " entries, got " + std::to_string(matrix.size()));
    spec.frobenius = GroupSpec::Frobenius{*fp, *rank, std::move(matrix)};
    if (spec.prime == 0) spec.prime = *fp;
    return spec;
  }
  if (degree_line == 0) throw ParseError(eof_line, 1, "missing 'degree'");
  if (spec.prime == 0) throw ParseError(eof_line, 1, "missing 'prime'");
  if (spec.generators.empty()) throw ParseError(eof_line, 1, "missing 'gen'");
  for (const auto& pt : points)
    if (pt.point > spec.degree)
      throw ParseError(pt.line, pt.column,
                       "point " + std::to_string(pt.point) + " exceeds degree " + std::to_string(spec.degree));
  return spec;
}

std::string emit_group_file(const GroupSpec& spec) {
  std::ostringstream out;
  if (!spec.name.empty()) out << "name " << spec.name << '\n';
  if (spec.frobenius) {
    const auto& f = *spec.frobenius;
    if (spec.prime != f.p) out << "prime " << spec.prime << '\n';
    out << "frobenius\n" << "p " << f.p << '\n' << "rank " << f.rank << '\n' << "matrix";
    for (auto x : f.matrix) out << ' ' << x;
    out << '\n';
    return out.str();
  }
  out << "degree " << spec.degree << '\n' << "prime " << spec.prime << '\n';
  for (const auto& g : spec.generators) out << "gen " << g << '\n';
  return out.str();
}

BuiltGroup build_group(const GroupSpec& spec) {
  require_prime(spec.prime);
  BuiltGroup out;
  out.name = spec.name;
  out.p = static_cast<unsigned>(spec.prime);
  if (spec.frobenius) {
    const auto& f = *spec.frobenius;
    const auto fg = frobenius_group(MatrixModP{f.p, f.rank, f.matrix});
    out.group = fg.group;
    out.kernel = indices_in(fg.group, fg.kernel);
    out.complement = indices_in(fg.group, fg.complement);
    return out;
  }
  std::vector<Permutation> gens;
  for (const auto& g : spec.generators) gens.push_back(Permutation::from_cycles(spec.degree, g));
  out.group = PermGroup::from_generators(spec.degree, std::move(gens));
  return out;
}

}  // namespace blockfunctor
