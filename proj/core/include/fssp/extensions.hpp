#ifndef FSSP_EXTENSIONS_HPP
#define FSSP_EXTENSIONS_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fssp/budget.hpp"
#include "fssp/grid.hpp"

// Consistent left/right extensions of sub-paths p_i..p_j, the quantities
// f/g (maximum extension lengths, possibly infinite), the covered-cell sets,
// and the interference tests behind CNI. All searches are confined to the
// box X = {(x,y) : |x|,|y| <= max{-r,s}+3}; an extension reaching the box
// boundary X' certifies that the extension set is infinite.

namespace fssp {

struct Window {
  int i = 0, j = 0;

  friend bool operator==(Window a, Window b) { return a.i == b.i && a.j == b.j; }
  friend bool operator<(Window a, Window b) { return a.i != b.i ? a.i < b.i : a.j < b.j; }
};

// nullopt encodes an infinite count/length.
using Count = std::optional<long>;

struct SideStats {
  Count len;                         // f or g; nullopt when infinite
  std::vector<Position> cells;       // union of cells of enumerated extensions
  bool cells_exact = false;          // cells cover the full side (always when finite)
  std::vector<Position> witness;     // a longest extension, index order, when finite
  bool infinite() const { return !len.has_value(); }
};

struct ExtensionStats {
  SideStats left;   // f side
  SideStats right;  // g side
  Count f() const { return left.len; }
  Count g() const { return right.len; }
};

// Box half-width for C: max{-r,s}+3.
int extension_box(const PathConfig& c);

// Proper consistent left extensions of p_i..p_j, each returned in index
// order q_u .. q_{i-2} p_{i-1}; empty for i == r (only the empty extension
// exists). cap = 0 enumerates everything inside X.
std::vector<std::vector<Position>> enumerate_left_extensions(const PathConfig& c, Window w,
                                                             std::size_t cap = 0,
                                                             SearchBudget* budget = nullptr);
std::vector<std::vector<Position>> enumerate_right_extensions(const PathConfig& c, Window w,
                                                              std::size_t cap = 0,
                                                              SearchBudget* budget = nullptr);

// Exact f/g with witnesses; cells are exhaustive for finite sides. For an
// infinite side the enumeration stops at the first extension that reaches
// X', so its cell set is partial unless exhaustive_cells is requested.
ExtensionStats extension_stats(const PathConfig& c, Window w, SearchBudget* budget = nullptr,
                               bool exhaustive_cells = false);

struct FgRow {
  Window w;
  Count f, g;
  Count a, b, h;  // A = -2i+j+g, B = 2j-i+f, h = max{A,B}
};

struct FgTable {
  int r = 0, s = 0;
  std::vector<FgRow> rows;  // i ascending, then j ascending

  const FgRow& row(Window w) const;
  // TSV with header "i j f g A B h"; INF for infinities.
  std::string tsv() const;
};

FgTable fg_table(const PathConfig& c, int threads = 1, SearchBudget* budget = nullptr);

// NI(i,j): every consistent left extension is compatible with every
// consistent right extension. Decided by the covered-cell test: the two cell
// sets must neither overlap nor be adjacent; two infinite sides always
// interfere beyond the box.
bool ni_check(const PathConfig& c, Window w, SearchBudget* budget = nullptr);

struct NiBruteResult {
  std::optional<bool> verdict;  // nullopt: cap exhausted, indeterminate
  // First interfering pair in DFS order, index order, when verdict is false.
  std::vector<Position> left_witness, right_witness;
};

// Oracle realization of W(i,j) = U(i,j) x V(i,j) by enumerating the pairs.
NiBruteResult ni_bruteforce(const PathConfig& c, Window w, std::size_t cap = 0,
                            SearchBudget* budget = nullptr);

}  // namespace fssp

#endif  // FSSP_EXTENSIONS_HPP
