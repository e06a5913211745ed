#include "pcp/io.hpp"

#include <sstream>
#include <vector>

#include "pcp/errors.hpp"

namespace pcp {

namespace {

[[noreturn]] void fail(int line, const std::string& why) {
  throw InputError("line " + std::to_string(line) + ": " + why);
}

bool parse_int(const std::string& token, long long& out) {
  if (token.empty()) return false;
  std::size_t k = token[0] == '-' ? 1 : 0;
  if (k == token.size()) return false;
  for (; k < token.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(token[k]))) return false;
  }
  try {
    out = std::stoll(token);
  } catch (const std::exception&) {
    return false;
  }
  return true;
}

std::vector<std::string> tokens_of(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> tokens;
  std::string t;
  while (in >> t) tokens.push_back(t);
  return tokens;
}

bool content_line(std::string& line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
  std::size_t first = line.find_first_not_of(" \t");
  if (first == std::string::npos) return false;
  return line[first] != '#';
}

}  // namespace

ColoredMultiDigraph parse_instance(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  bool have_header = false;
  long long n = 0, c = 0;
  std::vector<ArcSpec> specs;

  while (std::getline(in, line)) {
    ++line_no;
    if (!content_line(line)) continue;
    std::vector<std::string> t = tokens_of(line);
    if (t[0] == "p") {
      if (have_header) fail(line_no, "duplicate header");
      if (t.size() != 4 || t[1] != "cpcd") fail(line_no, "expected header 'p cpcd <n> <c>'");
      if (!parse_int(t[2], n) || n < 1) fail(line_no, "vertex count must be a positive integer");
      if (!parse_int(t[3], c) || c < 2) fail(line_no, "color count must be an integer >= 2");
      have_header = true;
      continue;
    }
    if (t[0] == "a") {
      if (!have_header) fail(line_no, "arc line before header");
      if (t.size() != 5) fail(line_no, "expected 'a <tail> <head> <color> <weight>'");
      long long tail, head, color;
      if (!parse_int(t[1], tail) || tail < 1 || tail > n) fail(line_no, "tail out of range");
      if (!parse_int(t[2], head) || head < 1 || head > n) fail(line_no, "head out of range");
      if (tail == head) fail(line_no, "self-loops are not allowed");
      if (!parse_int(t[3], color) || color < 1 || color > c) fail(line_no, "color out of range");
      Rational weight;
      try {
        weight = parse_weight(t[4]);
      } catch (const InputError& e) {
        fail(line_no, e.what());
      }
      specs.push_back(ArcSpec{static_cast<int>(tail - 1), static_cast<int>(head - 1),
                              static_cast<int>(color), weight});
      continue;
    }
    fail(line_no, "unknown line type '" + t[0] + "'");
  }
  if (!have_header) fail(1, "missing header 'p cpcd <n> <c>'");
  return ColoredMultiDigraph::build(static_cast<int>(c), static_cast<int>(n), specs);
}

std::string emit_instance(const ColoredMultiDigraph& g) {
  std::ostringstream out;
  out << "p cpcd " << g.vertex_count() << " " << g.color_count() << "\n";
  for (const Arc& a : g.arcs()) {
    out << "a " << a.tail + 1 << " " << a.head + 1 << " " << a.color << " "
        << format_rational(a.weight) << "\n";
  }
  return out.str();
}

ClosedWalk parse_walk(const std::string& text, const ColoredMultiDigraph& g) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  bool have_head = false;
  long long count = 0;
  ClosedWalk walk;

  while (std::getline(in, line)) {
    ++line_no;
    if (!content_line(line)) continue;
    std::vector<std::string> t = tokens_of(line);
    if (!have_head) {
      if (t[0] != "w" || t.size() != 3) fail(line_no, "expected 'w <totalWeight> <k>'");
      try {
        walk.total_weight = parse_weight(t[1]);
      } catch (const InputError& e) {
        fail(line_no, e.what());
      }
      if (!parse_int(t[2], count) || count < 0) fail(line_no, "arc count must be a non-negative integer");
      have_head = true;
      continue;
    }
    for (const std::string& token : t) {
      long long id;
      if (!parse_int(token, id)) fail(line_no, "expected an arc id, got '" + token + "'");
      if (id < 1 || id > g.arc_count()) fail(line_no, "unknown arc id " + token);
      walk.arc_ids.push_back(static_cast<int>(id - 1));
    }
  }
  if (!have_head) fail(1, "missing walk header 'w <totalWeight> <k>'");
  if (static_cast<long long>(walk.arc_ids.size()) != count) {
    fail(line_no == 0 ? 1 : line_no, "expected " + std::to_string(count) + " arc ids, got " +
                                         std::to_string(walk.arc_ids.size()));
  }
  return walk;
}

std::string emit_walk(const ClosedWalk& walk) {
  std::ostringstream out;
  out << "w " << format_rational(walk.total_weight) << " " << walk.arc_ids.size() << "\n";
  for (std::size_t k = 0; k < walk.arc_ids.size(); ++k) {
    if (k) out << " ";
    out << walk.arc_ids[k] + 1;
  }
  out << "\n";
  return out.str();
}

std::string emit_solution(const Solution& s) {
  std::ostringstream out;
  out << "s weight " << format_rational(s.total_weight) << "\n";
  out << "s duplicated";
  for (const auto& [id, mult] : s.duplicated) {
    out << " " << id + 1 << "x" << mult;
  }
  out << "\n" << emit_walk(s.walk);
  return out.str();
}

}  // namespace pcp
