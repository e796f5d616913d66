#include "fssp/extensions.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <deque>
#include <unordered_map>
#include <thread>

#include "internal/arm_search.hpp"

namespace fssp {

using internal::ArmDfs;
using internal::ArmLimits;
using internal::CellSet;

namespace {

enum class Side { LEFT, RIGHT };

struct SideSetup {
  bool empty_forced = false;
  Position anchor, link;
  CellSet fixed;
};

void check_window(const PathConfig& c, Window w) {
  if (!(c.r() <= w.i && w.i <= 0 && 0 <= w.j && w.j <= c.s()))
    throw std::out_of_range("window out of range");
}

// The combined sequence an arm must complete is the window plus the forced
// first cell of the opposite side (p_{j+1} / p_{i-1}), per the definition of
// consistent extensions.
SideSetup side_setup(const PathConfig& c, Window w, Side side) {
  SideSetup st;
  std::vector<Position> fixed_cells;
  for (int k = w.i; k <= w.j; ++k) fixed_cells.push_back(c.at(k));
  if (side == Side::LEFT) {
    st.empty_forced = (w.i == c.r());
    if (!st.empty_forced) {
      st.anchor = c.at(w.i - 1);
      st.link = c.at(w.i);
    }
    if (w.j < c.s()) fixed_cells.push_back(c.at(w.j + 1));
  } else {
    st.empty_forced = (w.j == c.s());
    if (!st.empty_forced) {
      st.anchor = c.at(w.j + 1);
      st.link = c.at(w.j);
    }
    if (w.i > c.r()) fixed_cells.push_back(c.at(w.i - 1));
  }
  st.fixed = CellSet(fixed_cells);
  return st;
}

std::vector<Position> sorted_unique(std::vector<Position> cells) {
  std::sort(cells.begin(), cells.end());
  cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
  return cells;
}

// Exhaustive enumeration of one side. An arm reaching X' certifies an
// infinite extension set and, unless exhaustive_cells asks for the full
// covered-cell sweep, ends the search at once.
SideStats run_side(const PathConfig& c, Window w, Side side, SearchBudget* budget,
                   bool exhaustive_cells) {
  SideStats out;
  SideSetup st = side_setup(c, w, side);
  if (st.empty_forced) {
    out.len = 0;
    out.cells_exact = true;
    return out;
  }
  int m = extension_box(c);
  bool rim_hit = false;
  long best = 0;
  std::vector<Position> cells;
  std::vector<Position> witness;
  ArmDfs dfs(st.fixed, st.anchor, st.link, ArmLimits{m, -1}, budget);
  dfs.run([&](const std::vector<Position>& arm) {
    cells.insert(cells.end(), arm.end() - 1, arm.end());
    if (static_cast<long>(arm.size()) > best) {
      best = static_cast<long>(arm.size());
      if (side == Side::LEFT)
        witness.assign(arm.rbegin(), arm.rend());  // index order
      else
        witness.assign(arm.begin(), arm.end());
    }
    if (internal::on_rim(arm.back(), m)) {
      rim_hit = true;
      if (!exhaustive_cells) return false;  // infiniteness certified
    }
    return true;
  });

  if (rim_hit) {
    out.len = std::nullopt;
    out.cells = sorted_unique(std::move(cells));
    out.cells_exact = exhaustive_cells;
  } else {
    out.len = best;
    out.cells = sorted_unique(std::move(cells));
    out.cells_exact = true;
    out.witness = std::move(witness);
  }
  return out;
}

std::vector<std::vector<Position>> enumerate_side(const PathConfig& c, Window w, Side side,
                                                  std::size_t cap, SearchBudget* budget) {
  check_window(c, w);
  std::vector<std::vector<Position>> result;
  SideSetup st = side_setup(c, w, side);
  if (st.empty_forced) return result;
  int m = extension_box(c);
  ArmDfs dfs(st.fixed, st.anchor, st.link, ArmLimits{m, -1}, budget);
  dfs.run([&](const std::vector<Position>& arm) {
    if (side == Side::LEFT)
      result.emplace_back(arm.rbegin(), arm.rend());
    else
      result.emplace_back(arm.begin(), arm.end());
    return cap == 0 || result.size() < cap;
  });
  return result;
}

Count plus(Count a, long b) {
  if (!a) return std::nullopt;
  return *a + b;
}

Count max_count(Count a, Count b) {
  if (!a || !b) return std::nullopt;
  return std::max(*a, *b);
}

std::string count_str(Count v) { return v ? std::to_string(*v) : std::string("INF"); }

}  // namespace

int extension_box(const PathConfig& c) { return std::max(-c.r(), c.s()) + 3; }

std::vector<std::vector<Position>> enumerate_left_extensions(const PathConfig& c, Window w,
                                                             std::size_t cap,
                                                             SearchBudget* budget) {
  return enumerate_side(c, w, Side::LEFT, cap, budget);
}

std::vector<std::vector<Position>> enumerate_right_extensions(const PathConfig& c, Window w,
                                                              std::size_t cap,
                                                              SearchBudget* budget) {
  return enumerate_side(c, w, Side::RIGHT, cap, budget);
}

ExtensionStats extension_stats(const PathConfig& c, Window w, SearchBudget* budget,
                               bool exhaustive_cells) {
  check_window(c, w);
  ExtensionStats st;
  st.left = run_side(c, w, Side::LEFT, budget, exhaustive_cells);
  st.right = run_side(c, w, Side::RIGHT, budget, exhaustive_cells);
  return st;
}

const FgRow& FgTable::row(Window w) const {
  for (const FgRow& row : rows)
    if (row.w == w) return row;
  throw std::out_of_range("window not in table");
}

std::string FgTable::tsv() const {
  std::string out = "i\tj\tf\tg\tA\tB\th\n";
  for (const FgRow& row : rows) {
    out += std::to_string(row.w.i) + '\t' + std::to_string(row.w.j) + '\t' + count_str(row.f) +
           '\t' + count_str(row.g) + '\t' + count_str(row.a) + '\t' + count_str(row.b) + '\t' +
           count_str(row.h) + '\n';
  }
  return out;
}

FgTable fg_table(const PathConfig& c, int threads, SearchBudget* budget) {
  FgTable table;
  table.r = c.r();
  table.s = c.s();
  std::vector<Window> windows;
  for (int i = c.r(); i <= 0; ++i)
    for (int j = 0; j <= c.s(); ++j) windows.push_back({i, j});

  std::uint64_t per_window = budget ? budget->limit() : SearchBudget::kDefault;
  auto compute = [&](Window w) {
    SearchBudget local(per_window);
    ExtensionStats st = extension_stats(c, w, &local);
    FgRow row;
    row.w = w;
    row.f = st.f();
    row.g = st.g();
    row.a = plus(row.g, -2L * w.i + w.j);
    row.b = plus(row.f, 2L * w.j - w.i);
    row.h = max_count(row.a, row.b);
    return row;
  };

  table.rows.resize(windows.size());
  if (threads <= 1) {
    for (std::size_t k = 0; k < windows.size(); ++k) table.rows[k] = compute(windows[k]);
  } else {
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
      for (;;) {
        std::size_t k = next.fetch_add(1);
        if (k >= windows.size()) break;
        table.rows[k] = compute(windows[k]);
      }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  return table;
}

namespace {

bool cells_interfere(const std::vector<Position>& a, const std::vector<Position>& b) {
  CellSet set(b);
  for (Position p : a) {
    if (set.contains(p) || set.touches(p)) return true;
  }
  return false;
}

// Does some arm on `side` visit a cell of `halo`? The search is steered by
// the free-space distance to the halo and prunes branches that cannot reach
// it even ignoring the arm's self-avoidance; exhausting the search proves
// no arm interferes.
class HaloHunt {
 public:
  HaloHunt(const CellSet& fixed, const CellSet& halo, int box, SearchBudget* budget)
      : fixed_(fixed), halo_(halo), box_(box), budget_(budget) {}

  bool run(Position anchor, Position link) {
    if (!internal::anchor_ok(fixed_, anchor, link) || !internal::in_box(anchor, box_))
      return false;
    if (halo_.contains(anchor)) return true;
    seed_distances();
    // The anchor legitimately touches its link, so the field BFS skipped it.
    bool reachable = false;
    for (Dir d : kAllDirs) reachable = reachable || dist_.count(cell_key(step(anchor, d))) != 0;
    if (!reachable) return false;
    arm_.push_back(anchor);
    arm_set_.insert(anchor);
    return grow();
  }

 private:
  // BFS from the halo over cells an arm could in principle occupy.
  void seed_distances() {
    std::deque<Position> queue;
    for (int x = -box_; x <= box_; ++x) {
      for (int y = -box_; y <= box_; ++y) {
        Position p{x, y};
        if (halo_.contains(p) && !fixed_.contains(p) && !fixed_.touches(p)) {
          dist_[cell_key(p)] = 0;
          queue.push_back(p);
        }
      }
    }
    while (!queue.empty()) {
      Position p = queue.front();
      queue.pop_front();
      int dp = dist_[cell_key(p)];
      for (Dir d : kAllDirs) {
        Position q = step(p, d);
        if (!internal::in_box(q, box_) || fixed_.contains(q) || fixed_.touches(q)) continue;
        if (dist_.emplace(cell_key(q), dp + 1).second) queue.push_back(q);
      }
    }
  }

  bool grow() {
    Position last = arm_.back();
    std::array<Position, 4> next;
    std::array<int, 4> score;
    int n = 0;
    for (Dir d : kAllDirs) {
      Position z = step(last, d);
      if (!cell_ok(z, last)) continue;
      auto it = dist_.find(cell_key(z));
      if (it == dist_.end()) continue;  // cannot reach the halo from z at all
      next[n] = z;
      score[n] = it->second;
      ++n;
    }
    for (int a = 0; a < n; ++a) {  // nearest-to-halo first, stable
      int best = a;
      for (int b = a + 1; b < n; ++b)
        if (score[b] < score[best]) best = b;
      std::swap(next[a], next[best]);
      std::swap(score[a], score[best]);
      Position z = next[a];
      if (budget_) budget_->charge();
      if (halo_.contains(z)) return true;
      arm_.push_back(z);
      arm_set_.insert(z);
      bool hit = grow();
      arm_.pop_back();
      arm_set_.erase(z);
      if (hit) return true;
    }
    return false;
  }

  bool cell_ok(Position z, Position last) const {
    if (!internal::in_box(z, box_)) return false;
    if (fixed_.contains(z) || fixed_.touches(z)) return false;
    if (arm_set_.contains(z)) return false;
    for (Dir d : kAllDirs) {
      Position q = step(z, d);
      if (q != last && arm_set_.contains(q)) return false;
    }
    return true;
  }

  const CellSet& fixed_;
  const CellSet& halo_;
  int box_;
  SearchBudget* budget_;
  std::vector<Position> arm_;
  CellSet arm_set_;
  std::unordered_map<std::uint64_t, int> dist_;
};

bool some_arm_reaches(const PathConfig& c, Window w, Side side, const CellSet& halo,
                      SearchBudget* budget) {
  SideSetup st = side_setup(c, w, side);
  if (st.empty_forced) return false;
  HaloHunt hunt(st.fixed, halo, extension_box(c), budget);
  return hunt.run(st.anchor, st.link);
}

CellSet with_halo(const std::vector<Position>& cells) {
  CellSet set;
  for (Position p : cells) {
    set.insert(p);
    for (Dir d : kAllDirs) set.insert(step(p, d));
  }
  return set;
}

}  // namespace

bool ni_check(const PathConfig& c, Window w, SearchBudget* budget) {
  check_window(c, w);
  // One side is the empty extension only: nothing to interfere with.
  if (w.i == c.r() || w.j == c.s()) return true;

  SideStats left = run_side(c, w, Side::LEFT, budget, false);
  SideStats right = run_side(c, w, Side::RIGHT, budget, false);

  // Two infinite sides own the whole plane beyond the box and overlap there.
  if (left.infinite() && right.infinite()) return false;

  if (!left.infinite() && !right.infinite())
    return !cells_interfere(left.cells, right.cells);

  const SideStats& fin = left.infinite() ? right : left;
  Side inf_side = left.infinite() ? Side::LEFT : Side::RIGHT;

  // Over-approximation first: if even the relaxed reachable region misses
  // the finite side's halo, no extension can interfere.
  SideSetup st = side_setup(c, w, inf_side);
  auto oa = internal::over_approx_region(st.fixed, st.anchor, st.link, extension_box(c));
  CellSet halo = with_halo(fin.cells);
  bool possible = false;
  for (Position p : oa.cells) {
    if (halo.contains(p)) {
      possible = true;
      break;
    }
  }
  if (!possible) return true;
  return !some_arm_reaches(c, w, inf_side, halo, budget);
}

NiBruteResult ni_bruteforce(const PathConfig& c, Window w, std::size_t cap,
                            SearchBudget* budget) {
  check_window(c, w);
  NiBruteResult out;
  auto lefts = enumerate_left_extensions(c, w, cap, budget);
  auto rights = enumerate_right_extensions(c, w, cap, budget);
  bool lefts_complete = cap == 0 || lefts.size() < cap;
  bool rights_complete = cap == 0 || rights.size() < cap;
  if (lefts.empty()) lefts.push_back({});    // i == r: only the empty extension
  if (rights.empty()) rights.push_back({});  // j == s
  for (const auto& x0 : lefts) {
    for (const auto& x1 : rights) {
      if (budget) budget->charge();
      if (cells_interfere(x0, x1)) {
        out.verdict = false;
        out.left_witness = x0;
        out.right_witness = x1;
        return out;
      }
    }
  }
  if (lefts_complete && rights_complete) out.verdict = true;
  return out;
}

}  // namespace fssp
