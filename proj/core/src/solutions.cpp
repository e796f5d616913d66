#include "fssp/solutions.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cmath>
#include <cstdio>
#include <deque>
#include <map>
#include <unordered_map>

#include "internal/arm_search.hpp"

namespace fssp {

using BigFloat = boost::multiprecision::cpp_bin_float_100;
using internal::CellSet;

namespace {

void normalize(double& mantissa, long& exp10) {
  while (mantissa >= 10.0) {
    mantissa /= 10.0;
    ++exp10;
  }
  while (mantissa != 0.0 && mantissa < 1.0) {
    mantissa *= 10.0;
    --exp10;
  }
}

BigValue big_value_float(const BigFloat& v) {
  BigValue out;
  if (v == 0) return out;
  BigFloat l = boost::multiprecision::log10(v);
  long e = static_cast<long>(boost::multiprecision::floor(l).convert_to<double>());
  BigFloat mant = v / boost::multiprecision::pow(BigFloat(10), e);
  out.mantissa = mant.convert_to<double>();
  out.exp10 = e;
  normalize(out.mantissa, out.exp10);
  return out;
}

}  // namespace

BigValue big_value(const BigInt& v) {
  BigValue out;
  out.exact = v;
  std::string s = v.str();
  if (s == "0") return out;
  out.exp10 = static_cast<long>(s.size()) - 1;
  std::string head = s.substr(0, std::min<std::size_t>(15, s.size()));
  out.mantissa = std::stod(head) / std::pow(10.0, static_cast<double>(head.size() - 1));
  normalize(out.mantissa, out.exp10);
  return out;
}

std::string BigValue::str() const {
  static const BigInt kPlainLimit = BigInt(10) * BigInt("100000000000000000000000");  // 10^24
  if (exact && *exact <= kPlainLimit) return exact->str();
  // First five significant digits, truncated the way the closed forms are
  // usually quoted.
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.4f", std::floor(mantissa * 1e4) / 1e4);
  return std::string(buf) + "e" + std::to_string(exp10);
}

// ---------------------------------------------------------------------------
// Reflection partial solution.

ReflectionSpec build_reflection(const PathConfig& c, SearchBudget* budget) {
  ReflectionSpec spec;
  FgTable table = fg_table(c, 1, budget);
  TTilde tt = t_tilde(table);
  spec.w = tt.argmin.front();
  spec.t_tilde = tt.value;
  for (int k = spec.w.i; k <= spec.w.j; ++k) {
    spec.y.push_back(c.at(k));
    spec.y_bc.push_back(boundary_condition(c, c.at(k)));
  }
  spec.two_path_form = (c.r() == 0);
  spec.state_count_bound = spec.two_path_form ? spec.t_tilde + 2 : 4 * spec.t_tilde + 8;

  // The minimizing window has finite f and g, so its consistent extensions
  // form a finite set; enumerate the jointly valid arm pairs.
  auto lefts = enumerate_left_extensions(c, spec.w, 0, budget);
  auto rights = enumerate_right_extensions(c, spec.w, 0, budget);
  std::vector<std::vector<Position>> l_all{{}}, r_all{{}};
  if (spec.w.i > c.r()) l_all = std::move(lefts);          // arm forced nonempty
  if (spec.w.j < c.s()) r_all = std::move(rights);
  for (const auto& x0 : l_all) {
    CellSet left_cells(x0);
    for (const auto& x1 : r_all) {
      bool clash = false;
      for (Position p : x1) {
        if (left_cells.contains(p) || left_cells.touches(p)) {
          clash = true;
          break;
        }
      }
      if (clash) continue;
      std::vector<Dir> lmoves, rmoves;
      Position prev{0, 0};
      for (int k = -1; k >= spec.w.i; --k) {
        lmoves.push_back(dir_to(prev, c.at(k)));
        prev = c.at(k);
      }
      for (auto it = x0.rbegin(); it != x0.rend(); ++it) {
        lmoves.push_back(dir_to(prev, *it));
        prev = *it;
      }
      prev = {0, 0};
      for (int k = 1; k <= spec.w.j; ++k) {
        rmoves.push_back(dir_to(prev, c.at(k)));
        prev = c.at(k);
      }
      for (Position p : x1) {
        rmoves.push_back(dir_to(prev, p));
        prev = p;
      }
      spec.domain.emplace_back(std::move(lmoves), std::move(rmoves));
    }
  }
  return spec;
}

namespace {

std::unordered_map<std::uint64_t, long> flood(const PathConfig& c, Position src) {
  std::unordered_map<std::uint64_t, long> dist;
  dist[cell_key(src)] = 0;
  std::deque<Position> queue{src};
  while (!queue.empty()) {
    Position p = queue.front();
    queue.pop_front();
    long dp = dist[cell_key(p)];
    for (Dir d : kAllDirs) {
      Position q = step(p, d);
      if (!c.contains(q)) continue;
      if (dist.emplace(cell_key(q), dp + 1).second) queue.push_back(q);
    }
  }
  return dist;
}

// R starts at the general and walks the given cell sequence toward an end,
// checking each visited cell's boundary condition; on success S is spawned
// at the last cell. Returns the S arrival times, or nullopt when R vanishes.
std::optional<std::unordered_map<std::uint64_t, long>> run_check_signal(
    const PathConfig& on, const std::vector<Position>& walk,
    const std::vector<BoundaryCondition>& walk_bc) {
  for (std::size_t k = 0; k < walk.size(); ++k) {
    if (!on.contains(walk[k])) return std::nullopt;
    if (boundary_condition(on, walk[k]) != walk_bc[k]) return std::nullopt;
  }
  long born = static_cast<long>(walk.size()) - 1;
  auto dist = flood(on, walk.back());
  for (auto& [key, d] : dist) d += born;
  return dist;
}

}  // namespace

SimOutcome simulate_reflection(const ReflectionSpec& spec, const PathConfig& on) {
  SimOutcome out;
  out.total_nodes = static_cast<std::size_t>(on.size());
  if (!on.contains({0, 0})) return out;

  // y0 = p_{i0}..p_0 walked right to left; y1 = p_0..p_{j0}.
  std::vector<Position> walk0, walk1;
  std::vector<BoundaryCondition> bc0, bc1;
  int origin_idx = -1;
  for (std::size_t k = 0; k < spec.y.size(); ++k)
    if (spec.y[k] == Position{0, 0}) origin_idx = static_cast<int>(k);
  for (int k = origin_idx; k >= 0; --k) {
    walk0.push_back(spec.y[k]);
    bc0.push_back(spec.y_bc[k]);
  }
  for (std::size_t k = static_cast<std::size_t>(origin_idx); k < spec.y.size(); ++k) {
    walk1.push_back(spec.y[k]);
    bc1.push_back(spec.y_bc[k]);
  }

  auto s_times = run_check_signal(on, walk0, bc0);
  auto s2_times = run_check_signal(on, walk1, bc1);
  if (!s_times || !s2_times) return out;  // some R vanished: nothing fires

  for (const Position& p : on.cells()) {
    auto a = s_times->find(cell_key(p));
    auto b = s2_times->find(cell_key(p));
    if (a != s_times->end() && b != s2_times->end() && a->second <= spec.t_tilde &&
        b->second <= spec.t_tilde)
      ++out.fired_nodes;
  }
  out.fired = out.fired_nodes == out.total_nodes && out.total_nodes > 0;
  out.fire_time = out.fired ? spec.t_tilde : -1;
  return out;
}

// ---------------------------------------------------------------------------
// Consistency checking partial solution.

std::pair<long, long> firing_interval(long a, long b, long T, long r, long s) {
  return {std::max(r, -T + 2 * b), std::min(s, T + 2 * a)};
}

std::vector<std::size_t> greedy_cover(const std::vector<std::pair<long, long>>& intervals, long r,
                                      long s) {
  std::vector<std::size_t> picked;
  long covered_to = r - 1;
  while (covered_to < s) {
    long target = covered_to + 1;
    std::optional<std::size_t> best;
    for (std::size_t k = 0; k < intervals.size(); ++k) {
      if (intervals[k].first > target || intervals[k].second < target) continue;
      if (!best || intervals[k].second > intervals[*best].second) best = k;
    }
    if (!best) throw std::logic_error("intervals do not cover the configuration");
    picked.push_back(*best);
    covered_to = intervals[*best].second;
  }
  return picked;
}

namespace {

// Machines are equal when they check the same window geometry with the same
// end boundary conditions.
std::string machine_key(const PathConfig& ck, int a, int b) {
  std::string key = std::to_string(a) + "|" + std::to_string(b) + "|";
  for (int k = a; k <= b; ++k) {
    Position p = ck.at(k);
    key += "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
  }
  key += boundary_condition(ck, ck.at(a)).str();
  key += boundary_condition(ck, ck.at(b)).str();
  return key;
}

}  // namespace

CcSpec build_cc(const PathConfig& c, const Variation& gamma, SearchBudget* budget) {
  if (!gamma.path_shaped())
    throw std::invalid_argument("cc construction is unsupported for region variations");
  CcSpec spec;
  MftResult mft = mft_localmap(c, gamma, budget);
  spec.T = *mft.value;
  SafeResult unsafe = is_safe(c, static_cast<int>(spec.T), gamma, budget);
  if (unsafe.safe) throw std::logic_error("mft must be unsafe");
  for (const Config& m : unsafe.class_members)
    spec.class_members.push_back(std::get<PathConfig>(m));

  for (std::size_t k = 0; k < spec.class_members.size(); ++k) {
    const PathConfig& ck = spec.class_members[k];
    std::vector<CcAutomaton> autos;
    std::vector<std::pair<long, long>> intervals;
    for (int u = ck.r(); u <= ck.s(); ++u) {
      Window w = window(ck, u, static_cast<int>(spec.T));
      bool dup = false;
      for (const CcAutomaton& a : autos) dup = dup || (a.a == w.i && a.b == w.j);
      if (dup) continue;
      CcAutomaton a;
      a.a = w.i;
      a.b = w.j;
      a.k = k;
      a.interval = firing_interval(w.i, w.j, spec.T, ck.r(), ck.s());
      autos.push_back(a);
      intervals.push_back(a.interval);
    }
    for (std::size_t pick : greedy_cover(intervals, ck.r(), ck.s())) autos[pick].selected = true;
    for (CcAutomaton& a : autos) spec.automata.push_back(a);
  }

  std::map<std::string, std::size_t> machines;
  for (CcAutomaton& a : spec.automata) {
    if (!a.selected) continue;
    std::string key = machine_key(spec.class_members[a.k], a.a, a.b);
    auto [it, fresh] = machines.emplace(key, machines.size());
    a.machine = it->second;
  }
  spec.distinct_machines = machines.size();
  spec.state_count = boost::multiprecision::pow(BigInt(4), static_cast<unsigned>(machines.size())) *
                     BigInt(spec.T + 2);
  return spec;
}

SimOutcome simulate_cc(const CcSpec& spec, const PathConfig& on) {
  SimOutcome out;
  out.total_nodes = static_cast<std::size_t>(on.size());
  CellSet fired;
  std::size_t fired_count = 0;
  for (const CcAutomaton& a : spec.automata) {
    if (!a.selected) continue;
    const PathConfig& ck = spec.class_members[a.k];
    std::vector<Position> window_cells;
    for (int k = a.a; k <= a.b; ++k) window_cells.push_back(ck.at(k));
    Config base = ck;
    Config target = on;
    if (!is_consistent_extension(base, window_cells, target)) continue;
    auto da = flood(on, ck.at(a.a));
    auto db = flood(on, ck.at(a.b));
    for (const Position& p : on.cells()) {
      auto ia = da.find(cell_key(p));
      auto ib = db.find(cell_key(p));
      if (ia == da.end() || ib == db.end()) continue;
      if (-a.a + ia->second <= spec.T && a.b + ib->second <= spec.T) {
        if (!fired.contains(p)) {
          fired.insert(p);
          ++fired_count;
        }
      }
    }
  }
  out.fired_nodes = fired_count;
  out.fired = fired_count == out.total_nodes && out.total_nodes > 0;
  out.fire_time = out.fired ? spec.T : -1;
  return out;
}

SimOutcome simulate_lm(long T, const Config& on, const Variation& gamma, SearchBudget* budget) {
  SimOutcome out;
  out.total_nodes = cells_of(on).size();
  MftResult mft = mft_localmap(on, gamma, budget);
  if (*mft.value > T) return out;
  out.fired = true;
  out.fire_time = *mft.value;
  out.fired_nodes = out.total_nodes;
  return out;
}

// ---------------------------------------------------------------------------
// State-count bounds.

namespace {

BigInt pow2(long e) { return BigInt(1) << static_cast<unsigned>(e); }

BigInt geom4(long T) { return (boost::multiprecision::pow(BigInt(4), static_cast<unsigned>(T + 1)) - 1) / 3; }

BigInt binom(long n, long k) {
  if (k < 0 || k > n) return 0;
  BigInt num = 1;
  for (long i = 0; i < k; ++i) {
    num *= n - i;
    num /= i + 1;
  }
  return num;
}

BigInt square(const BigInt& v) { return v * v; }

}  // namespace

std::optional<StateBoundKind> state_bound_kind_from_name(const std::string& name) {
  if (name == "reg-lm") return StateBoundKind::REG_LM;
  if (name == "gpath-lm") return StateBoundKind::GPATH_LM;
  if (name == "path-lm") return StateBoundKind::PATH_LM;
  if (name == "ref-gpath") return StateBoundKind::REF_GPATH;
  if (name == "ref-path") return StateBoundKind::REF_PATH;
  if (name == "cc") return StateBoundKind::CC;
  return std::nullopt;
}

std::string state_bound_kind_name(StateBoundKind k) {
  switch (k) {
    case StateBoundKind::REG_LM: return "reg-lm";
    case StateBoundKind::GPATH_LM: return "gpath-lm";
    case StateBoundKind::PATH_LM: return "path-lm";
    case StateBoundKind::REF_GPATH: return "ref-gpath";
    case StateBoundKind::REF_PATH: return "ref-path";
    case StateBoundKind::CC: return "cc";
  }
  return "?";
}

long wrapper_constant(StateBoundKind kind) {
  return kind == StateBoundKind::REG_LM ? 296 : 6;
}

StateBounds state_bounds(long T, StateBoundKind kind, long n) {
  if (T < 0) throw std::invalid_argument("T must be nonnegative");
  StateBounds out;
  long T2 = 2 * T + 1;
  long Tp = T / 2;
  switch (kind) {
    case StateBoundKind::REG_LM: {
      out.upper = big_value(1 + BigInt(T + 1) * BigInt(T2) * BigInt(T2) * pow2(16 * T2 * T2));
      long e = (T - 3) * (T - 3);
      if (e % 3 == 0) {
        out.lower = big_value(pow2(e / 3));
      } else {
        BigValue lv = big_value_float(
            boost::multiprecision::pow(BigFloat(2), BigFloat(e) / 3));
        out.lower = lv;
      }
      break;
    }
    case StateBoundKind::GPATH_LM: {
      out.upper =
          big_value(1 + BigInt(T + 1) * BigInt(T2) * BigInt(T2) * square(geom4(T)) * BigInt(256));
      out.lower = big_value(Tp % 2 == 0 ? square(binom(Tp, Tp / 2)) : square(binom(Tp, (Tp - 1) / 2)));
      break;
    }
    case StateBoundKind::PATH_LM: {
      out.upper = big_value(1 + BigInt(T + 1) * BigInt(T2) * BigInt(T2) * geom4(T) * BigInt(16));
      out.lower = big_value(Tp % 2 == 0 ? binom(Tp, Tp / 2) : binom(Tp, (Tp - 1) / 2));
      break;
    }
    case StateBoundKind::REF_GPATH:
      out.upper = big_value(BigInt(4 * T + 8));
      break;
    case StateBoundKind::REF_PATH:
      out.upper = big_value(BigInt(T + 2));
      break;
    case StateBoundKind::CC: {
      if (n < 1) throw std::invalid_argument("cc bound needs n >= 1");
      out.upper =
          big_value(boost::multiprecision::pow(BigInt(4), static_cast<unsigned>(n)) * BigInt(T + 2));
      break;
    }
  }
  return out;
}

namespace {

BigValue scale(const BigValue& v, long factor) {
  if (v.exact) return big_value(*v.exact * factor);
  BigValue out = v;
  out.mantissa *= static_cast<double>(factor);
  normalize(out.mantissa, out.exp10);
  return out;
}

}  // namespace

StateBounds wrapped_state_bounds(long T, StateBoundKind kind, long n) {
  StateBounds raw = state_bounds(T, kind, n);
  long c = wrapper_constant(kind);
  StateBounds out;
  out.upper = scale(raw.upper, c);
  if (raw.lower) out.lower = scale(*raw.lower, c);
  return out;
}

MssBound mss_upper(const Config& c, const Variation& gamma, SearchBudget* budget) {
  MssBound out;
  if (!gamma.path_shaped()) {
    MftResult mft = mft_localmap(c, gamma, budget);
    StateBounds b = state_bounds(*mft.value, StateBoundKind::REG_LM);
    out.value = *b.upper.exact * 296;
    out.method = "localmap";
    return out;
  }
  const auto& pc = std::get<PathConfig>(c);
  TTilde tt = t_tilde(pc, budget);
  bool certified = cni_verdict(pc, budget).verdict;
  if (!certified) {
    MftResult mft = mft_localmap(c, gamma, budget);
    certified = (*mft.value == tt.value);
  }
  if (certified) {
    if (pc.r() == 0) {
      out.value = 6 * BigInt(tt.value + 2);
      out.method = "reflection-2path";
    } else {
      out.value = 6 * BigInt(4 * tt.value + 8);
      out.method = "reflection";
    }
    return out;
  }
  CcSpec cc = build_cc(pc, gamma, budget);
  out.value = 6 * cc.state_count;
  out.method = "cc";
  return out;
}

}  // namespace fssp
