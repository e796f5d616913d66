#ifndef FSSP_TESTS_HELPERS_HPP
#define FSSP_TESTS_HELPERS_HPP

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "fssp/extensions.hpp"
#include "fssp/grid.hpp"

// Shared enumerators and independent oracles. The oracles deliberately use
// whole-sequence checks (all index pairs) rather than the incremental rules
// of the library search code.

namespace fssp::test {

// All valid g-2PATH configurations with at most max_cells cells.
inline std::vector<PathConfig> all_g2path_configs(int max_cells) {
  std::vector<PathConfig> out;
  for (int total = 0; total <= max_cells - 1; ++total) {
    for (int lk = 0; lk <= total; ++lk) {
      int rk = total - lk;
      long combos = 1;
      for (int i = 0; i < total; ++i) combos *= 4;
      for (long code = 0; code < combos; ++code) {
        std::vector<Dir> left(lk), right(rk);
        long c = code;
        for (int i = 0; i < lk; ++i) {
          left[i] = static_cast<Dir>(c & 3);
          c >>= 2;
        }
        for (int i = 0; i < rk; ++i) {
          right[i] = static_cast<Dir>(c & 3);
          c >>= 2;
        }
        PathConfig cfg(std::move(left), std::move(right));
        if (validate(cfg).ok) out.push_back(std::move(cfg));
      }
    }
  }
  return out;
}

// The horizontal line C_{a,b} = p_{-a} .. p_b.
inline PathConfig line_config(int a, int b) {
  return PathConfig(std::vector<Dir>(a, Dir::W), std::vector<Dir>(b, Dir::E));
}

inline PathConfig parse_path(const std::string& text) {
  return std::get<PathConfig>(parse_config(text));
}

// Uniform random valid configuration with 1..max_cells cells.
inline PathConfig random_config(std::mt19937& rng, int max_cells) {
  for (;;) {
    int total = static_cast<int>(rng() % static_cast<unsigned>(max_cells));
    int lk = total == 0 ? 0 : static_cast<int>(rng() % static_cast<unsigned>(total + 1));
    std::vector<Dir> left(lk), right(total - lk);
    for (Dir& d : left) d = static_cast<Dir>(rng() & 3);
    for (Dir& d : right) d = static_cast<Dir>(rng() & 3);
    PathConfig cfg(std::move(left), std::move(right));
    if (validate(cfg).ok) return cfg;
  }
}

// Independent validity oracle: duplicates and the touching rule checked on
// all index pairs of the raw cell sequence.
inline bool oracle_valid_cells(const std::vector<Position>& cells) {
  int n = static_cast<int>(cells.size());
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (cells[a] == cells[b]) return false;
      if (b - a >= 2 && adjacent(cells[a], cells[b])) return false;
      if (b - a == 1 && !adjacent(cells[a], cells[b])) return false;
    }
  }
  return n > 0;
}

// Brute-force enumeration of the consistent left extensions of p_i..p_j:
// grows position sequences cell by cell inside the box and keeps exactly
// those whose combined sequence (extension, window, and p_{j+1} when j < s)
// passes the whole-sequence validity oracle. Sequences in index order.
inline std::vector<std::vector<Position>> oracle_left_extensions(const PathConfig& c, Window w,
                                                                 int box) {
  std::vector<std::vector<Position>> out;
  if (w.i == c.r()) return out;
  std::vector<Position> suffix;  // window plus forced right context
  for (int k = w.i; k <= w.j; ++k) suffix.push_back(c.at(k));
  if (w.j < c.s()) suffix.push_back(c.at(w.j + 1));

  std::vector<Position> ext{c.at(w.i - 1)};  // grows at the front
  auto combined_ok = [&]() {
    std::vector<Position> all(ext);
    all.insert(all.end(), suffix.begin(), suffix.end());
    return oracle_valid_cells(all);
  };
  // depth-first over front extensions, direction order E,N,W,S
  struct Rec {
    std::vector<Position>& ext;
    int box;
    const std::function<bool()>& ok;
    std::vector<std::vector<Position>>& out;
    void go() {
      out.push_back(ext);
      for (Dir d : kAllDirs) {
        Position q = step(ext.front(), d);
        if (std::abs(q.x) > box || std::abs(q.y) > box) continue;
        ext.insert(ext.begin(), q);
        if (ok()) go();
        ext.erase(ext.begin());
      }
    }
  };
  std::function<bool()> ok = combined_ok;
  Rec rec{ext, box, ok, out};
  if (combined_ok()) rec.go();
  return out;
}

inline std::string cells_key(const std::vector<Position>& cells) {
  std::string s;
  for (Position p : cells) s += "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
  return s;
}

inline std::set<std::string> sequence_set(const std::vector<std::vector<Position>>& seqs) {
  std::set<std::string> out;
  for (const auto& s : seqs) out.insert(cells_key(s));
  return out;
}

// Constructed instances used across the suites: a Type II pair, the sealed
// wall whose gate cell makes the difference, and the two Type III bottle
// configurations.
inline PathConfig type2_free_right() { return parse_path("PATH W|NNWWSWSSE"); }
inline PathConfig type2_free_left() { return parse_path("PATH NNWWSWSSE|W"); }
inline PathConfig sealed_wall_intact() { return parse_path("PATH NNWWSWSSSEE|W"); }
inline PathConfig sealed_wall_gate_removed() { return parse_path("PATH NNWWSWSSSE|W"); }
inline PathConfig shared_bottle() { return parse_path("PATH WWNNNEES|EEEEENNNWWSW"); }
inline constexpr Window shared_bottle_window{-7, 10};
inline PathConfig disjoint_bottles() { return parse_path("PATH EEEEENNNWWS|WWWWWNNNNEEEEEESSWW"); }
inline constexpr Window disjoint_bottles_window{-10, 17};
// The sealed wall read from its free end: a 2PATH whose far end is stuck.
inline PathConfig two_path_sealed_end() { return parse_path("PATH .|WNNENEESSW"); }
// One cell longer than disjoint_bottles; here mft is strictly below T~.
inline PathConfig uncertified_bottle() {
  return parse_path("PATH EEEEENNNWWS|WWWWWNNNNEEEEEESSWWW");
}

}  // namespace fssp::test

#endif  // FSSP_TESTS_HELPERS_HPP
