#ifndef FSSP_MFT_HPP
#define FSSP_MFT_HPP

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fssp/budget.hpp"
#include "fssp/extensions.hpp"
#include "fssp/grid.hpp"
#include "fssp/variations.hpp"

// Available information (the local map), the equivalence steps over
// configurations, the safeness search, and the closed-form minimum firing
// time formulas. mft_Gamma(C) is the least t that is unsafe for C.

namespace fssp {

struct AvailableInfo {
  bool quiescent = true;
  int t = 0;
  Position v;
  // (position, boundary condition) pairs, sorted by position.
  std::vector<std::pair<Position, BoundaryCondition>> x;

  friend bool operator==(const AvailableInfo& a, const AvailableInfo& b) {
    if (a.quiescent != b.quiescent) return false;
    if (a.quiescent) return true;
    return a.t == b.t && a.v == b.v && a.x == b.x;
  }
};

AvailableInfo available_info(const Config& c, Position v, int t);

// M(p_u, t, C) for a path: the part p_a..p_b with a = max{r, ceil((u-t)/2)},
// b = min{s, floor((u+t)/2)}. Requires |u| <= t.
Window window(const PathConfig& c, int u, int t);

// M(v, t, C) for any configuration: nodes v' with d(gen,v') + d(v',v) <= t.
std::vector<Position> m_set(const Config& c, Position v, int t);

// C ='_{t,v} C': v in both, ai(v,t,C) = ai(v,t,C') != Q. Decided directly
// from the available information on both sides.
bool equiv_related(const Config& c, const Config& c2, int t, Position v);

// C' contains every cell of m_cells with its boundary condition preserved.
bool is_consistent_extension(const Config& base, const std::vector<Position>& m_cells,
                             const Config& ext);

// All C' in Gamma with C ='_t C' and rad(C') <= t+1, enumerated per distinct
// window as consistent extensions; for path-shaped variations the window
// test is exact. Deduplicated, deterministic order.
std::vector<PathConfig> equiv_step_path(const PathConfig& c, int t, const Variation& gamma,
                                        SearchBudget* budget = nullptr);

// Same set through the generic two-condition test: candidates are generated
// from the window (paths) or as connected supersets of the window plus its
// pinned ring (regions) and kept when the available information matches.
std::vector<Config> equiv_step_generic(const Config& c, int t, const Variation& gamma,
                                       SearchBudget* budget = nullptr);

struct ChainLink {
  Config cfg;
  std::optional<Position> via;  // shared node with the previous configuration
};

struct SafenessChain {
  int t = 0;
  std::vector<ChainLink> links;  // links[0].cfg = C
  int terminal_radius = 0;
};

struct SafeResult {
  bool safe = false;
  std::optional<SafenessChain> chain;      // when safe
  std::vector<Config> class_members;       // exhausted class when unsafe
};

// BFS over the ='_t class restricted to rad <= t+1; safe iff some member
// reaches rad = t+1 (successors with that radius certify safety
// immediately). force_generic routes path variations through the generic
// step for cross-checking.
SafeResult is_safe(const Config& c, int t, const Variation& gamma, SearchBudget* budget = nullptr,
                   bool force_generic = false);

// Safeness of available information by its chain definition; coincides with
// is_safe (all nodes of a configuration agree except that Q is always safe).
bool ai_safe(const Config& c, Position v, int t, const Variation& gamma,
             SearchBudget* budget = nullptr);

enum class MftMethod { LOCALMAP, T_TILDE, TYPE_I, TYPE_II, J0_PATH, J0_GPATH, INCONCLUSIVE };

std::string method_name(MftMethod m);

struct MftResult {
  std::optional<long> value;  // empty iff inconclusive
  MftMethod method = MftMethod::LOCALMAP;
  long lower = 0, upper = 0;
  std::vector<Window> argmin;            // minimizing windows (formula methods)
  std::optional<SafenessChain> chain;    // safeness chain for value-1 (localmap)
  std::size_t unsafe_class_size = 0;     // exhausted-class certificate (localmap)
  std::optional<int> j0;
};

// Scans t = 0,1,2,... up to the firing upper bound and returns the first
// unsafe time. Unsafe-time monotonicity is not assumed.
MftResult mft_localmap(const Config& c, const Variation& gamma, SearchBudget* budget = nullptr);

struct TTilde {
  long value = 0;
  std::vector<Window> argmin;  // scan order: i ascending, then j ascending
};

// T~ = min_{i,j} max{-2i+j+g(i,j), 2j-i+f(i,j)}; always finite.
TTilde t_tilde(const PathConfig& c, SearchBudget* budget = nullptr);
TTilde t_tilde(const FgTable& table);

struct J0Result {
  long value = 0;
  int j0 = -1;
};

// 2PATH closed form: j0 = min j with g(0,j) <= j+1, value 2*j0+1 or 2*j0.
J0Result two_path_formula(int s, const std::function<Count(int)>& g_of_j);
// g-2PATH free-left-hand closed form: -2r+s when -r > s, else j0 = min j
// with -r+g(r,j) <= j+1 and value -r+2*j0+1 or -r+2*j0.
J0Result g_two_path_formula(int r, int s, const std::function<Count(int)>& g_of_j);

// Closed-form dispatch: Type I; Type II with the free hand at least as long
// as the other; CNI-satisfying configurations via T~ (with the j0 forms
// cross-checked where they apply); otherwise an INCONCLUSIVE bracket
// [lower, T~].
MftResult mft_formula(const PathConfig& c, SearchBudget* budget = nullptr);

// lower = max of the applicable free-hand bounds, upper = min of the
// generalized-FSSP bound and T~.
std::pair<long, long> mft_bounds(const PathConfig& c, SearchBudget* budget = nullptr);

}  // namespace fssp

#endif  // FSSP_MFT_HPP
