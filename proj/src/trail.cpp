#include "pcp/trail.hpp"

#include <algorithm>
#include <string>

#include "pcp/errors.hpp"

namespace pcp {

ColorSet ColorSet::of(std::initializer_list<int> colors) {
  return of(std::vector<int>(colors));
}

ColorSet ColorSet::of(const std::vector<int>& colors) {
  ColorSet s;
  for (int c : colors) {
    if (c < 1) throw InputError("colors are 1-based");
    std::size_t idx = static_cast<std::size_t>(c - 1) / 64;
    if (idx >= s.words.size()) s.words.resize(idx + 1, 0);
    s.words[idx] |= std::uint64_t(1) << ((c - 1) % 64);
  }
  return s;
}

Trail Trail::from_arcs(const ColoredMultiDigraph& g, std::vector<int> ids) {
  if (ids.empty()) throw InvariantViolation("trail must contain at least one arc");
  Trail t;
  t.total_weight = 0;
  std::vector<int> sorted = ids;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw InvariantViolation("trail repeats an arc");
  }
  for (std::size_t k = 0; k < ids.size(); ++k) {
    int id = ids[k];
    if (id < 0 || id >= g.arc_count()) throw InvariantViolation("trail uses an unknown arc id");
    const Arc& a = g.arc(id);
    if (k > 0) {
      const Arc& prev = g.arc(ids[k - 1]);
      if (prev.head != a.tail) {
        throw InvariantViolation("trail breaks incidence at position " + std::to_string(k));
      }
      if (prev.color == a.color) {
        throw InvariantViolation("trail repeats a color at position " + std::to_string(k));
      }
    }
    t.total_weight += a.weight;
  }
  t.start_vertex = g.arc(ids.front()).tail;
  t.end_vertex = g.arc(ids.back()).head;
  t.start_color = g.arc(ids.front()).color;
  t.end_color = g.arc(ids.back()).color;
  t.arc_ids = std::move(ids);
  return t;
}

}  // namespace pcp
