#include "pcp/generator.hpp"

#include <limits>
#include <random>
#include <vector>

#include "pcp/errors.hpp"

namespace pcp {

namespace {

// Unbiased bounded draws over a fixed-width engine; modulo with rejection so
// the stream is identical on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t overhang = (kMax % bound + 1) % bound;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x > kMax - overhang);
    return x % bound;
  }

 private:
  std::mt19937_64 engine_;
};

void check_common(const GeneratorConfig& cfg) {
  if (cfg.arc_target < 0) throw InputError("arc target must be non-negative");
  if (cfg.weight_min < 0 || cfg.weight_min > cfg.weight_max) {
    throw InputError("weight range must satisfy 0 <= min <= max");
  }
  if (cfg.petals < 0 || cfg.duplicates < 0) {
    throw InputError("petal and duplicate counts must be non-negative");
  }
}

Rational draw_weight(Rng& rng, const GeneratorConfig& cfg) {
  std::uint64_t span = static_cast<std::uint64_t>(cfg.weight_max - cfg.weight_min) + 1;
  return Rational(cfg.weight_min + static_cast<long long>(rng.below(span)));
}

ColoredMultiDigraph gen_uniform(const GeneratorConfig& cfg) {
  if (cfg.color_count < 2) throw InputError("uniform mode needs at least 2 colors");
  if (cfg.vertex_count < 1 || (cfg.arc_target > 0 && cfg.vertex_count < 2)) {
    throw InputError("uniform mode needs at least 2 vertices to place arcs");
  }
  Rng rng(cfg.seed);
  std::vector<ArcSpec> specs;
  specs.reserve(cfg.arc_target);
  for (int k = 0; k < cfg.arc_target; ++k) {
    int tail = static_cast<int>(rng.below(cfg.vertex_count));
    int head = static_cast<int>(rng.below(cfg.vertex_count - 1));
    if (head >= tail) ++head;
    int color = 1 + static_cast<int>(rng.below(cfg.color_count));
    specs.push_back(ArcSpec{tail, head, color, draw_weight(rng, cfg)});
  }
  return ColoredMultiDigraph::build(cfg.color_count, cfg.vertex_count, specs);
}

ColoredMultiDigraph gen_feasible(const GeneratorConfig& cfg) {
  if (cfg.color_count != 2) throw InputError("feasible mode requires exactly 2 colors");
  if (cfg.vertex_count < 2) throw InputError("feasible mode needs at least 2 vertices");
  Rng rng(cfg.seed);

  const int petals = cfg.petals > 0 ? cfg.petals : std::max(2, cfg.arc_target / 6);
  const int base_target = std::max(0, cfg.arc_target - cfg.duplicates);
  std::vector<ArcSpec> specs;

  int made = 0;
  while (made < petals || static_cast<int>(specs.size()) < base_target) {
    int len = cfg.vertex_count < 3 ? 2 : 2 + 2 * static_cast<int>(rng.below(3));
    int prev = 0;  // hub
    for (int t = 0; t < len; ++t) {
      int next;
      if (t == len - 1) {
        next = 0;
      } else {
        do {
          next = 1 + static_cast<int>(rng.below(cfg.vertex_count - 1));
        } while (next == prev);
      }
      specs.push_back(ArcSpec{prev, next, 1 + (t % 2), draw_weight(rng, cfg)});
      prev = next;
    }
    ++made;
  }
  for (int k = 0; k < cfg.duplicates; ++k) {
    specs.push_back(specs[rng.below(specs.size())]);
  }
  return ColoredMultiDigraph::build(2, cfg.vertex_count, specs);
}

ColoredMultiDigraph gen_figure_family(const GeneratorConfig& cfg) {
  if (cfg.color_count != 3) throw InputError("figure-family mode requires exactly 3 colors");
  Rng rng(cfg.seed);
  const int petals = cfg.petals > 0 ? cfg.petals : 3;
  static constexpr int kPatterns[3][3] = {{3, 2, 1}, {1, 2, 3}, {2, 3, 2}};

  std::vector<ArcSpec> specs;
  for (int p = 0; p < petals; ++p) {
    const int* pat = kPatterns[p % 3];
    int a = 2 * p + 1, b = 2 * p + 2;
    specs.push_back(ArcSpec{0, a, pat[0], draw_weight(rng, cfg)});
    specs.push_back(ArcSpec{a, b, pat[1], draw_weight(rng, cfg)});
    specs.push_back(ArcSpec{b, 0, pat[2], draw_weight(rng, cfg)});
  }
  return ColoredMultiDigraph::build(3, 2 * petals + 1, specs);
}

}  // namespace

ColoredMultiDigraph generate(const GeneratorConfig& cfg) {
  check_common(cfg);
  switch (cfg.mode) {
    case GenMode::uniform:
      return gen_uniform(cfg);
    case GenMode::feasible:
      return gen_feasible(cfg);
    case GenMode::figure_family:
      return gen_figure_family(cfg);
  }
  throw InputError("unknown generator mode");
}

}  // namespace pcp
