#include "fssp/mft.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "fssp/cni.hpp"
#include "internal/arm_search.hpp"

namespace fssp {

using internal::ArmDfs;
using internal::ArmLimits;
using internal::CellSet;

namespace {

std::unordered_map<std::uint64_t, int> bfs_dists(const Config& c, Position src) {
  std::unordered_map<std::uint64_t, int> dist;
  dist[cell_key(src)] = 0;
  std::deque<Position> queue{src};
  while (!queue.empty()) {
    Position p = queue.front();
    queue.pop_front();
    int dp = dist[cell_key(p)];
    for (Dir d : kAllDirs) {
      Position q = step(p, d);
      if (!config_contains(c, q)) continue;
      if (dist.emplace(cell_key(q), dp + 1).second) queue.push_back(q);
    }
  }
  return dist;
}

int floor_div2(int x) { return x >= 0 ? x / 2 : -((-x + 1) / 2); }
int ceil_div2(int x) { return x >= 0 ? (x + 1) / 2 : -((-x) / 2); }

}  // namespace

AvailableInfo available_info(const Config& c, Position v, int t) {
  if (!config_contains(c, v)) throw std::out_of_range("node not in configuration");
  AvailableInfo ai;
  auto d0 = bfs_dists(c, {0, 0});
  auto it = d0.find(cell_key(v));
  if (it == d0.end() || it->second > t) return ai;  // Q
  ai.quiescent = false;
  ai.t = t;
  ai.v = v;
  auto dv = bfs_dists(c, v);
  for (const Position& p : cells_of(c)) {
    auto a = d0.find(cell_key(p));
    auto b = dv.find(cell_key(p));
    if (a == d0.end() || b == dv.end()) continue;
    if (a->second + b->second <= t) ai.x.emplace_back(p, boundary_condition(c, p));
  }
  std::sort(ai.x.begin(), ai.x.end(),
            [](const auto& lhs, const auto& rhs) { return lhs.first < rhs.first; });
  return ai;
}

Window window(const PathConfig& c, int u, int t) {
  if (std::abs(u) > t) throw std::out_of_range("node not yet reached: |u| > t");
  return {std::max(c.r(), ceil_div2(u - t)), std::min(c.s(), floor_div2(u + t))};
}

std::vector<Position> m_set(const Config& c, Position v, int t) {
  std::vector<Position> out;
  auto d0 = bfs_dists(c, {0, 0});
  auto dv = bfs_dists(c, v);
  for (const Position& p : cells_of(c)) {
    auto a = d0.find(cell_key(p));
    auto b = dv.find(cell_key(p));
    if (a != d0.end() && b != dv.end() && a->second + b->second <= t) out.push_back(p);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool equiv_related(const Config& c, const Config& c2, int t, Position v) {
  if (!config_contains(c, v) || !config_contains(c2, v)) return false;
  AvailableInfo a = available_info(c, v, t);
  if (a.quiescent) return false;
  return a == available_info(c2, v, t);
}

bool is_consistent_extension(const Config& base, const std::vector<Position>& m_cells,
                             const Config& ext) {
  for (const Position& p : m_cells) {
    if (!config_contains(ext, p)) return false;
    if (boundary_condition(base, p) != boundary_condition(ext, p)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Successor enumeration for path variations.
//
// By the window characterization, C ='_t C' iff C' is a consistent extension
// of some M(p_u, t, C) = p_a..p_b. Such a C' is w0 + p_a..p_b + w1 where the
// arms are forced empty at a pinned end (a = r resp. b = s) and otherwise
// start at p_{a-1} resp. p_{b+1}. Arm lengths are capped so rad(C') <= t+1.

namespace {

struct ArmPrune {
  // Growth restriction keeping the enumeration inside the variation.
  std::function<bool(const std::vector<Position>&, Position)> fn;
};

ArmPrune variation_prune(const Variation& gamma, bool left) {
  ArmPrune p;
  if (gamma.kind == VariationKind::LINE_AB) {
    (void)left;
    p.fn = [](const std::vector<Position>&, Position z) { return z.y == 0; };
  }
  return p;
}

PathConfig make_successor(const PathConfig& c, Window w, const std::vector<Position>& w0,
                          const std::vector<Position>& w1) {
  std::vector<Dir> left, right;
  Position prev{0, 0};
  for (int k = -1; k >= w.i; --k) {
    left.push_back(dir_to(prev, c.at(k)));
    prev = c.at(k);
  }
  for (Position q : w0) {
    left.push_back(dir_to(prev, q));
    prev = q;
  }
  prev = {0, 0};
  for (int k = 1; k <= w.j; ++k) {
    right.push_back(dir_to(prev, c.at(k)));
    prev = c.at(k);
  }
  for (Position q : w1) {
    right.push_back(dir_to(prev, q));
    prev = q;
  }
  return PathConfig(std::move(left), std::move(right));
}

// Enumerates every arm pair of every distinct window: the candidates that
// satisfy the window-consistency conditions (the configuration contains
// p_a..p_b, the ring around the window is as in C, rad <= t+1). gamma
// restricts arm growth when it can; the emitted configuration is not yet
// checked for membership.
bool for_each_window_extension(
    const PathConfig& c, int t, const Variation* gamma, SearchBudget* budget,
    const std::function<bool(const PathConfig&, Window, Position)>& visit) {
  int r = c.r(), s = c.s();
  std::set<std::pair<int, int>> seen_windows;

  for (int u = std::max(r, -t); u <= std::min(s, t); ++u) {
    Window w = window(c, u, t);
    if (!seen_windows.insert({w.i, w.j}).second) continue;
    Position via = c.at(u);

    std::vector<Position> window_cells;
    for (int k = w.i; k <= w.j; ++k) window_cells.push_back(c.at(k));
    CellSet fixed(window_cells);

    auto emit = [&](const std::vector<Position>& w0, const std::vector<Position>& w1) {
      return visit(make_successor(c, w, w0, w1), w, via);
    };

    bool keep = true;
    auto right_side = [&](const std::vector<Position>& w0, const CellSet& fixed_with_left) {
      if (w.j == s) return emit(w0, {});
      ArmDfs dfs(fixed_with_left, c.at(w.j + 1), c.at(w.j), ArmLimits{-1, t + 1 - w.j}, budget);
      if (gamma) dfs.prune = variation_prune(*gamma, false).fn;
      return dfs.run([&](const std::vector<Position>& w1) { return emit(w0, w1); });
    };

    if (w.i == r) {
      keep = right_side({}, fixed);
    } else {
      ArmDfs dfs(fixed, c.at(w.i - 1), c.at(w.i), ArmLimits{-1, t + 1 + w.i}, budget);
      if (gamma) dfs.prune = variation_prune(*gamma, true).fn;
      keep = dfs.run([&](const std::vector<Position>& w0) {
        CellSet fixed2 = fixed;
        for (Position p : w0) fixed2.insert(p);
        return right_side(w0, fixed2);
      });
    }
    if (!keep) return false;
  }
  return true;
}

// visit(C', via) -> false stops everything. Successors are deduplicated.
bool for_each_path_successor(const PathConfig& c, int t, const Variation& gamma,
                             SearchBudget* budget,
                             const std::function<bool(const PathConfig&, Position)>& visit) {
  std::unordered_set<std::string> emitted;
  return for_each_window_extension(
      c, t, &gamma, budget, [&](const PathConfig& succ, Window, Position via) {
        if (!member(gamma, succ)) return true;
        if (!emitted.insert(canonical(succ)).second) return true;
        return visit(succ, via);
      });
}

// ---------------------------------------------------------------------------
// Generic successor enumeration, two-condition route: candidates are built
// around M(v, t, C) and kept iff the available information at v matches.

void enumerate_connected_supersets(const std::vector<Position>& base, const CellSet& universe,
                                   SearchBudget* budget,
                                   const std::function<bool(const std::vector<Position>&)>& visit);

struct SupersetEnum {
  const CellSet& universe;
  SearchBudget* budget;
  const std::function<bool(const std::vector<Position>&)>& visit;
  std::vector<Position> current;
  CellSet current_set, forbidden;

  bool rec() {
    std::vector<Position> cands;
    for (Position p : current) {
      for (Dir d : kAllDirs) {
        Position q = step(p, d);
        if (universe.contains(q) && !current_set.contains(q) && !forbidden.contains(q))
          cands.push_back(q);
      }
    }
    std::sort(cands.begin(), cands.end());
    cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
    bool keep = true;
    std::size_t banned = 0;
    for (Position z : cands) {
      current.push_back(z);
      current_set.insert(z);
      if (budget) budget->charge();
      keep = visit(current) && rec();
      current.pop_back();
      current_set.erase(z);
      if (!keep) break;
      forbidden.insert(z);
      ++banned;
    }
    for (std::size_t k = 0; k < banned; ++k) forbidden.erase(cands[k]);
    return keep;
  }
};

void enumerate_connected_supersets(const std::vector<Position>& base, const CellSet& universe,
                                   SearchBudget* budget,
                                   const std::function<bool(const std::vector<Position>&)>& visit) {
  SupersetEnum e{universe, budget, visit};
  e.current = base;
  for (Position p : base) e.current_set.insert(p);
  if (budget) budget->charge();
  if (!visit(e.current)) return;
  e.rec();
}

bool for_each_generic_successor(const Config& c, int t, const Variation& gamma,
                                SearchBudget* budget,
                                const std::function<bool(const Config&, Position)>& visit) {
  std::unordered_set<std::string> emitted;
  auto d0 = bfs_dists(c, {0, 0});

  auto filter_and_emit = [&](const Config& cand, Position v) {
    if (radius(cand) > t + 1) return true;
    if (!member(gamma, cand)) return true;
    if (!equiv_related(c, cand, t, v)) return true;
    if (!emitted.insert(canonical(cand)).second) return true;
    return visit(cand, v);
  };

  if (gamma.path_shaped()) {
    // Window-consistent candidates, then the direct available-information
    // equality as the final test.
    const auto& pc = std::get<PathConfig>(c);
    return for_each_window_extension(
        pc, t, nullptr, budget,
        [&](const PathConfig& succ, Window, Position via) { return filter_and_emit(succ, via); });
  }

  for (const Position& v : cells_of(c)) {
    auto it = d0.find(cell_key(v));
    if (it == d0.end() || it->second > t) continue;
    std::vector<Position> m = m_set(c, v, t);
    CellSet m_cells(m);

    {
      // Region route: supersets of M plus its pinned ring, confined to the
      // L1 ball that any rad <= t+1 configuration must live in.
      std::vector<Position> base = m;
      CellSet universe;
      bool feasible = true;
      for (const Position& p : m) {
        for (Dir d : kAllDirs) {
          Position q = step(p, d);
          if (m_cells.contains(q)) continue;
          if (config_contains(c, q)) {
            base.push_back(q);  // circle: forced into every candidate
          }
        }
      }
      std::sort(base.begin(), base.end());
      base.erase(std::unique(base.begin(), base.end()), base.end());
      CellSet base_set(base);
      for (const Position& p : base)
        if (std::abs(p.x) + std::abs(p.y) > t + 1) feasible = false;
      if (!feasible) continue;
      for (int x = -(t + 1); x <= t + 1; ++x) {
        for (int y = -(t + 1); y <= t + 1; ++y) {
          Position q{x, y};
          if (std::abs(x) + std::abs(y) > t + 1) continue;
          if (base_set.contains(q)) {
            universe.insert(q);
            continue;
          }
          bool crossed = false;  // adjacent to M but absent from C
          for (Dir d : kAllDirs) {
            if (m_cells.contains(step(q, d)) && !config_contains(c, q)) crossed = true;
          }
          if (!crossed) universe.insert(q);
        }
      }
      bool keep = true;
      enumerate_connected_supersets(base, universe, budget, [&](const std::vector<Position>& s) {
        keep = filter_and_emit(RegionConfig(s), v);
        return keep;
      });
      if (!keep) return false;
    }
  }
  return true;
}

}  // namespace

std::vector<PathConfig> equiv_step_path(const PathConfig& c, int t, const Variation& gamma,
                                        SearchBudget* budget) {
  std::vector<PathConfig> out;
  for_each_path_successor(c, t, gamma, budget, [&](const PathConfig& succ, Position) {
    if (radius(succ) <= t + 1) out.push_back(succ);
    return true;
  });
  return out;
}

std::vector<Config> equiv_step_generic(const Config& c, int t, const Variation& gamma,
                                       SearchBudget* budget) {
  std::vector<Config> out;
  for_each_generic_successor(c, t, gamma, budget, [&](const Config& succ, Position) {
    out.push_back(succ);
    return true;
  });
  return out;
}

SafeResult is_safe(const Config& c, int t, const Variation& gamma, SearchBudget* budget,
                   bool force_generic) {
  SafeResult res;
  int rad0 = radius(c);
  if (rad0 >= t + 1) {
    res.safe = true;
    SafenessChain chain;
    chain.t = t;
    chain.links.push_back({c, std::nullopt});
    chain.terminal_radius = rad0;
    res.chain = std::move(chain);
    return res;
  }

  std::vector<Config> members{c};
  std::vector<int> parent{-1};
  std::vector<std::optional<Position>> via{std::nullopt};
  std::unordered_set<std::string> seen{canonical(c)};

  auto build_chain = [&](int head, const Config& terminal, Position link_via) {
    std::vector<ChainLink> rev;
    rev.push_back({terminal, link_via});
    for (int k = head; k >= 0; k = parent[k]) rev.push_back({members[k], via[k]});
    SafenessChain chain;
    chain.t = t;
    chain.links.assign(rev.rbegin(), rev.rend());
    chain.terminal_radius = radius(terminal);
    return chain;
  };

  bool use_path_route = gamma.path_shaped() && !force_generic;
  for (std::size_t head = 0; head < members.size(); ++head) {
    Config cur = members[head];  // members grows during expansion
    bool found_safe = false;
    auto on_succ = [&](const Config& succ, Position v) {
      int rad = radius(succ);
      if (rad > t + 1) return true;
      if (rad == t + 1) {
        res.safe = true;
        res.chain = build_chain(static_cast<int>(head), succ, v);
        found_safe = true;
        return false;
      }
      std::string key = canonical(succ);
      if (seen.insert(key).second) {
        members.push_back(succ);
        parent.push_back(static_cast<int>(head));
        via.push_back(v);
      }
      return true;
    };

    if (use_path_route) {
      for_each_path_successor(std::get<PathConfig>(cur), t, gamma, budget,
                              [&](const PathConfig& succ, Position v) { return on_succ(succ, v); });
    } else {
      for_each_generic_successor(cur, t, gamma, budget, on_succ);
    }
    if (found_safe) return res;
  }
  res.safe = false;
  res.class_members = std::move(members);
  return res;
}

bool ai_safe(const Config& c, Position v, int t, const Variation& gamma, SearchBudget* budget) {
  AvailableInfo ai = available_info(c, v, t);
  if (ai.quiescent) return true;
  return is_safe(c, t, gamma, budget, /*force_generic=*/true).safe;
}

MftResult mft_localmap(const Config& c, const Variation& gamma, SearchBudget* budget) {
  MftResult res;
  res.method = MftMethod::LOCALMAP;
  long ub = firing_upper_bound(gamma, c);
  std::optional<SafenessChain> last_chain;
  for (long t = 0; t <= ub; ++t) {
    SafeResult sr = is_safe(c, static_cast<int>(t), gamma, budget);
    if (sr.safe) {
      last_chain = std::move(sr.chain);
      continue;
    }
    res.value = t;
    res.lower = res.upper = t;
    res.chain = std::move(last_chain);
    res.unsafe_class_size = sr.class_members.size();
    return res;
  }
  throw std::logic_error("no unsafe time up to the firing upper bound");
}

TTilde t_tilde(const FgTable& table) {
  TTilde out;
  bool first = true;
  for (const FgRow& row : table.rows) {
    if (!row.h) continue;
    if (first || *row.h < out.value) {
      out.value = *row.h;
      out.argmin.clear();
      first = false;
    }
    if (*row.h == out.value) out.argmin.push_back(row.w);
  }
  if (first) throw std::logic_error("h(r,s) must be finite");
  return out;
}

TTilde t_tilde(const PathConfig& c, SearchBudget* budget) {
  return t_tilde(fg_table(c, 1, budget));
}

J0Result two_path_formula(int s, const std::function<Count(int)>& g_of_j) {
  for (int j = 0; j <= s; ++j) {
    Count g = g_of_j(j);
    if (g && *g <= j + 1) {
      J0Result res;
      res.j0 = j;
      res.value = (*g == j + 1) ? 2L * j + 1 : 2L * j;
      return res;
    }
  }
  throw std::logic_error("g(0,s) = 0 must satisfy the j0 condition");
}

J0Result g_two_path_formula(int r, int s, const std::function<Count(int)>& g_of_j) {
  if (-r > s) return {-2L * r + s, -1};
  for (int j = 0; j <= s; ++j) {
    Count g = g_of_j(j);
    if (g && -static_cast<long>(r) + *g <= j + 1) {
      J0Result res;
      res.j0 = j;
      res.value = -static_cast<long>(r) + ((-r + *g == j + 1) ? 2L * j + 1 : 2L * j);
      return res;
    }
  }
  throw std::logic_error("g(r,s) = 0 must satisfy the j0 condition");
}

std::pair<long, long> mft_bounds(const PathConfig& c, SearchBudget* budget) {
  long r = c.r(), s = c.s();
  HandStatus hs = hand_status(c, budget);
  long lower = 0;
  if (hs.left == Hand::FREE) lower = std::max(lower, -2 * r + s);
  if (hs.right == Hand::FREE) lower = std::max(lower, -r + 2 * s);
  long upper = std::min(-r + s + std::max(-r, s), t_tilde(c, budget).value);
  return {lower, upper};
}

std::string method_name(MftMethod m) {
  switch (m) {
    case MftMethod::LOCALMAP: return "localmap";
    case MftMethod::T_TILDE: return "ttilde";
    case MftMethod::TYPE_I: return "type1";
    case MftMethod::TYPE_II: return "type2";
    case MftMethod::J0_PATH: return "j0-path";
    case MftMethod::J0_GPATH: return "j0-gpath";
    case MftMethod::INCONCLUSIVE: return "inconclusive";
  }
  return "?";
}

MftResult mft_formula(const PathConfig& c, SearchBudget* budget) {
  MftResult res;
  long r = c.r(), s = c.s();
  HandStatus hs = hand_status(c, budget);

  if (hs.type == ConfigType::I) {
    res.value = -r + s + std::max(-r, s);
    res.method = MftMethod::TYPE_I;
    res.lower = res.upper = *res.value;
    return res;
  }
  if (hs.type == ConfigType::II && hs.left == Hand::FREE && -r >= s) {
    res.value = -2 * r + s;
    res.method = MftMethod::TYPE_II;
    res.lower = res.upper = *res.value;
    return res;
  }
  if (hs.type == ConfigType::II && hs.right == Hand::FREE && s >= -r) {
    res.value = -r + 2 * s;  // mirror image of the free-left case
    res.method = MftMethod::TYPE_II;
    res.lower = res.upper = *res.value;
    return res;
  }

  FgTable table = fg_table(c, 1, budget);
  TTilde tt = t_tilde(table);
  CniReport cni = cni_verdict(c, budget);
  if (cni.verdict) {
    res.value = tt.value;
    res.argmin = tt.argmin;
    res.lower = res.upper = tt.value;
    if (r == 0) {
      J0Result j0 = two_path_formula(static_cast<int>(s),
                                     [&](int j) { return table.row({0, j}).g; });
      if (j0.value != tt.value) throw std::logic_error("2PATH j0 formula disagrees with T~");
      res.method = MftMethod::J0_PATH;
      res.j0 = j0.j0;
    } else if (hs.left == Hand::FREE) {
      J0Result j0 = g_two_path_formula(static_cast<int>(r), static_cast<int>(s),
                                       [&](int j) { return table.row({static_cast<int>(r), j}).g; });
      if (j0.value != tt.value) throw std::logic_error("g-2PATH j0 formula disagrees with T~");
      res.method = MftMethod::J0_GPATH;
      res.j0 = j0.j0;
    } else if (hs.right == Hand::FREE) {
      PathConfig m = c.mirrored();
      FgTable mt = fg_table(m, 1, budget);
      J0Result j0 = g_two_path_formula(m.r(), m.s(),
                                       [&](int j) { return mt.row({m.r(), j}).g; });
      if (j0.value != tt.value) throw std::logic_error("mirrored j0 formula disagrees with T~");
      res.method = MftMethod::J0_GPATH;
      res.j0 = j0.j0;
    } else {
      res.method = MftMethod::T_TILDE;
    }
    return res;
  }

  res.method = MftMethod::INCONCLUSIVE;
  res.value = std::nullopt;
  long lower = 0;
  if (hs.left == Hand::FREE) lower = std::max(lower, -2 * r + s);
  if (hs.right == Hand::FREE) lower = std::max(lower, -r + 2 * s);
  res.lower = lower;
  res.upper = tt.value;
  res.argmin = tt.argmin;
  return res;
}

}  // namespace fssp
