#ifndef FSSP_INTERNAL_ARM_SEARCH_HPP
#define FSSP_INTERNAL_ARM_SEARCH_HPP

#include <cstdlib>
#include <functional>
#include <unordered_set>
#include <vector>

#include "fssp/budget.hpp"
#include "fssp/grid.hpp"

// Depth-first enumeration of the arms that extend a fixed sub-path: the
// sequences that may precede p_i (ending at p_{i-1}) or follow p_j (starting
// at p_{j+1}) so that the combined sequence is again a valid configuration.
// An arm cell must not coincide with or be adjacent to any fixed cell (the
// anchor's link is the one exception) and must not touch the arm itself
// except consecutively.

namespace fssp::internal {

class CellSet {
 public:
  CellSet() = default;
  explicit CellSet(const std::vector<Position>& cells) {
    for (Position p : cells) insert(p);
  }

  void insert(Position p) { set_.insert(cell_key(p)); }
  void erase(Position p) { set_.erase(cell_key(p)); }
  bool contains(Position p) const { return set_.count(cell_key(p)) != 0; }
  bool touches(Position p) const {
    for (Dir d : kAllDirs)
      if (contains(step(p, d))) return true;
    return false;
  }

 private:
  std::unordered_set<std::uint64_t> set_;
};

struct ArmLimits {
  int box = -1;      // confine cells to |x|,|y| <= box when >= 0
  int max_len = -1;  // cap on arm length when >= 0
};

inline bool in_box(Position p, int m) { return std::abs(p.x) <= m && std::abs(p.y) <= m; }
inline bool on_rim(Position p, int m) { return std::abs(p.x) == m || std::abs(p.y) == m; }

// True iff `anchor` may start an arm attached at `link`: it must avoid the
// fixed cells and their halo except for the link itself.
inline bool anchor_ok(const CellSet& fixed, Position anchor, Position link) {
  if (fixed.contains(anchor)) return false;
  for (Dir d : kAllDirs) {
    Position q = step(anchor, d);
    if (q != link && fixed.contains(q)) return false;
  }
  return true;
}

// Emits every valid arm, shortest prefixes first, in direction order E,N,W,S.
// `arm` holds cells in growth order (anchor first). The visitor returns false
// to stop the whole enumeration. Does not emit the empty arm.
class ArmDfs {
 public:
  ArmDfs(const CellSet& fixed, Position anchor, Position link, ArmLimits limits,
         SearchBudget* budget)
      : fixed_(fixed), anchor_(anchor), link_(link), limits_(limits), budget_(budget) {}

  // prune(arm, candidate) may reject growth directions (variation viability).
  std::function<bool(const std::vector<Position>&, Position)> prune;

  bool run(const std::function<bool(const std::vector<Position>&)>& visit) {
    if (!anchor_ok(fixed_, anchor_, link_)) return true;  // no arms at all
    if (limits_.box >= 0 && !in_box(anchor_, limits_.box)) return true;
    arm_.clear();
    arm_.push_back(anchor_);
    arm_set_ = CellSet();
    arm_set_.insert(anchor_);
    if (budget_) budget_->charge();
    if (!visit(arm_)) return false;
    return grow(visit);
  }

 private:
  bool grow(const std::function<bool(const std::vector<Position>&)>& visit) {
    if (limits_.max_len >= 0 && static_cast<int>(arm_.size()) >= limits_.max_len) return true;
    Position last = arm_.back();
    for (Dir d : kAllDirs) {
      Position z = step(last, d);
      if (!cell_ok(z, last)) continue;
      if (prune && !prune(arm_, z)) continue;
      arm_.push_back(z);
      arm_set_.insert(z);
      if (budget_) budget_->charge();
      bool keep = visit(arm_) && grow(visit);
      arm_.pop_back();
      arm_set_.erase(z);
      if (!keep) return false;
    }
    return true;
  }

  bool cell_ok(Position z, Position last) const {
    if (limits_.box >= 0 && !in_box(z, limits_.box)) return false;
    if (fixed_.contains(z) || fixed_.touches(z)) return false;
    if (arm_set_.contains(z)) return false;
    for (Dir d : kAllDirs) {
      Position q = step(z, d);
      if (q != last && arm_set_.contains(q)) return false;
    }
    return true;
  }

  const CellSet& fixed_;
  Position anchor_, link_;
  ArmLimits limits_;
  SearchBudget* budget_;
  std::vector<Position> arm_;
  CellSet arm_set_;
};

// Cells reachable from the anchor when the self-avoidance of the arm is
// ignored; a superset of the cells any arm can visit. rim is set when the
// region touches the box boundary.
struct OverApprox {
  std::vector<Position> cells;
  bool rim = false;
};

OverApprox over_approx_region(const CellSet& fixed, Position anchor, Position link, int box);

}  // namespace fssp::internal

#endif  // FSSP_INTERNAL_ARM_SEARCH_HPP
