#include "internal/arm_search.hpp"

#include <deque>

namespace fssp::internal {

OverApprox over_approx_region(const CellSet& fixed, Position anchor, Position link, int box) {
  OverApprox out;
  if (!anchor_ok(fixed, anchor, link) || !in_box(anchor, box)) return out;
  CellSet seen;
  std::deque<Position> queue{anchor};
  seen.insert(anchor);
  out.cells.push_back(anchor);
  out.rim = on_rim(anchor, box);
  while (!queue.empty()) {
    Position p = queue.front();
    queue.pop_front();
    for (Dir d : kAllDirs) {
      Position z = step(p, d);
      if (!in_box(z, box) || seen.contains(z)) continue;
      if (fixed.contains(z) || fixed.touches(z)) continue;
      seen.insert(z);
      out.cells.push_back(z);
      out.rim = out.rim || on_rim(z, box);
      queue.push_back(z);
    }
  }
  return out;
}

}  // namespace fssp::internal
