#ifndef FSSP_SOLUTIONS_HPP
#define FSSP_SOLUTIONS_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fssp/budget.hpp"
#include "fssp/cni.hpp"
#include "fssp/grid.hpp"
#include "fssp/mft.hpp"
#include "fssp/variations.hpp"

// The three partial-solution families: reflection (A_ref), consistency
// checking (A_cc) and local map (A_lm). Automata are simulated semantically
// (signal positions and a clock); state counts are reported analytically.

namespace fssp {

using BigInt = boost::multiprecision::cpp_int;

// Arbitrary-precision value with a 5-significant-digit decimal rendering.
struct BigValue {
  std::optional<BigInt> exact;  // absent for non-integer closed forms
  double mantissa = 0.0;        // in [1, 10)
  long exp10 = 0;

  // "<mantissa>e<exponent>"; the exact integer instead when <= 10^24.
  std::string str() const;
};

BigValue big_value(const BigInt& v);

struct SimOutcome {
  bool fired = false;  // every node fired, simultaneously, for the first time
  long fire_time = -1;
  std::size_t fired_nodes = 0, total_nodes = 0;
};

struct ReflectionSpec {
  Window w;  // (i0, j0): first h-minimizing window in scan order
  long t_tilde = 0;
  std::vector<Position> y;                // p_{i0}..p_{j0}
  std::vector<BoundaryCondition> y_bc;    // boundary conditions along y in C
  std::vector<PathConfig> domain;         // all consistent extensions of y
  bool two_path_form = false;             // r = 0: the R/S signal pair is dropped
  long state_count_bound = 0;             // 4T~+8, or T~+2 in the 2PATH form
};

ReflectionSpec build_reflection(const PathConfig& c, SearchBudget* budget = nullptr);

// Synchronous simulation: R walks p_0 -> p_{i0} checking boundary
// conditions, spawns S at time -i0 which floods the configuration; R'/S'
// mirror on the right. A node fires iff it holds both S and S' at clock T~.
SimOutcome simulate_reflection(const ReflectionSpec& spec, const PathConfig& on);

// Nodes p_z of C_k fired by A_1(a,b,C_k): a' <= z <= b' with
// a' = max{r, -T+2b}, b' = min{s, T+2a}.
std::pair<long, long> firing_interval(long a, long b, long T, long r, long s);

// Greedy interval covering of [r, s]: repeatedly pick the interval that
// extends furthest right from the first uncovered point. Returns indices
// into `intervals`; throws std::logic_error when no cover exists.
std::vector<std::size_t> greedy_cover(const std::vector<std::pair<long, long>>& intervals, long r,
                                      long s);

struct CcAutomaton {
  int a = 0, b = 0;      // window indices in C_k
  std::size_t k = 0;     // class member
  std::pair<long, long> interval;
  bool selected = false;           // chosen by the greedy cover of C_k
  std::size_t machine = 0;         // distinct-machine id after deduplication
};

struct CcSpec {
  long T = 0;  // = mft(C)
  std::vector<PathConfig> class_members;  // C_0 = C, ..., C_{m-1}
  std::vector<CcAutomaton> automata;      // distinct as A_1(a,b,C_k), per k
  std::size_t distinct_machines = 0;      // after cross-member deduplication
  BigInt state_count;                     // 4^n (T+2)
};

// T = mft by the local map search, the =_T class enumerated, one automaton
// per distinct window, a greedy cover per class member, then machines that
// share window geometry and end boundary conditions are merged.
CcSpec build_cc(const PathConfig& c, const Variation& gamma, SearchBudget* budget = nullptr);

SimOutcome simulate_cc(const CcSpec& spec, const PathConfig& on);

// A_{lm,T}: fires C' at mft(C') when that is <= T and never otherwise.
SimOutcome simulate_lm(long T, const Config& on, const Variation& gamma,
                       SearchBudget* budget = nullptr);

enum class StateBoundKind { REG_LM, GPATH_LM, PATH_LM, REF_GPATH, REF_PATH, CC };

std::optional<StateBoundKind> state_bound_kind_from_name(const std::string& name);
std::string state_bound_kind_name(StateBoundKind k);

struct StateBounds {
  std::optional<BigValue> lower;
  BigValue upper;
};

// Exact evaluation of the closed-form state-count bounds for the partial
// solutions; n is the machine count for CC and ignored otherwise.
StateBounds state_bounds(long T, StateBoundKind kind, long n = 1);

// Same bounds times the solution-wrapper constant: 296 for regions, 6 for
// path variations.
StateBounds wrapped_state_bounds(long T, StateBoundKind kind, long n = 1);
long wrapper_constant(StateBoundKind kind);

struct MssBound {
  BigInt value;
  std::string method;  // "reflection", "reflection-2path", "cc", "localmap"
};

// Best applicable wrapper bound on the minimum solution size: the
// reflection bound when T~ = mft is certified (CNI or a direct local-map
// equality), the cc-based bound otherwise; regions use the local-map bound.
MssBound mss_upper(const Config& c, const Variation& gamma, SearchBudget* budget = nullptr);

}  // namespace fssp

#endif  // FSSP_SOLUTIONS_HPP
