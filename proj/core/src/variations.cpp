#include "fssp/variations.hpp"

#include <algorithm>

namespace fssp {

std::string Variation::name() const {
  switch (kind) {
    case VariationKind::TWO_PATH: return "2path";
    case VariationKind::G_TWO_PATH: return "g2path";
    case VariationKind::LINE_AB: return "line-ab";
    case VariationKind::TWO_REG: return "2reg";
  }
  return "?";
}

std::optional<Variation> Variation::from_name(const std::string& name) {
  if (name == "2path") return two_path();
  if (name == "g2path") return g_two_path();
  if (name == "line-ab") return line_ab();
  if (name == "2reg") return two_reg();
  return std::nullopt;
}

bool member(const Variation& gamma, const PathConfig& c) {
  if (!validate(c).ok) return false;
  switch (gamma.kind) {
    case VariationKind::G_TWO_PATH:
    case VariationKind::TWO_REG:
      return true;
    case VariationKind::TWO_PATH:
      return c.r() == 0 || c.s() == 0;
    case VariationKind::LINE_AB: {
      // the cell set must be the horizontal segment (-a,0)..(b,0) with
      // 0 <= a <= b <= a+2, whichever way the path is read
      int a = 0, b = 0;
      for (const Position& p : c.cells()) {
        if (p.y != 0) return false;
        a = std::min(a, p.x);
        b = std::max(b, p.x);
      }
      a = -a;
      return 0 <= a && a <= b && b <= a + 2;
    }
  }
  return false;
}

bool member(const Variation& gamma, const Config& c) {
  if (const auto* p = std::get_if<PathConfig>(&c)) return member(gamma, *p);
  if (gamma.kind != VariationKind::TWO_REG) return false;
  return validate(c).ok;
}

long firing_upper_bound(const Variation& gamma, const Config& c) {
  if (gamma.kind == VariationKind::TWO_REG) return 3L * radius(c) + 1;
  const auto& p = std::get<PathConfig>(c);
  long r = p.r(), s = p.s();
  return -r + s + std::max(-r, s);
}

}  // namespace fssp
