#ifndef FSSP_VARIATIONS_HPP
#define FSSP_VARIATIONS_HPP

#include <optional>
#include <string>

#include "fssp/grid.hpp"

// The configuration universe a search quantifies over. Each variation is a
// membership predicate plus a termination-safe upper bound on the minimum
// firing time.

namespace fssp {

enum class VariationKind { TWO_PATH, G_TWO_PATH, LINE_AB, TWO_REG };

struct Variation {
  VariationKind kind = VariationKind::G_TWO_PATH;

  bool path_shaped() const { return kind != VariationKind::TWO_REG; }
  std::string name() const;

  static Variation two_path() { return {VariationKind::TWO_PATH}; }
  static Variation g_two_path() { return {VariationKind::G_TWO_PATH}; }
  // Example-1 variation: horizontal lines p_{-a}..p_b with 0 <= a <= b <= a+2.
  static Variation line_ab() { return {VariationKind::LINE_AB}; }
  static Variation two_reg() { return {VariationKind::TWO_REG}; }

  static std::optional<Variation> from_name(const std::string& name);
};

bool member(const Variation& gamma, const Config& c);
bool member(const Variation& gamma, const PathConfig& c);

// -r+s+max{-r,s} for path variations, 3*rad(C)+1 for regions; always an
// upper bound for mft_Gamma(C).
long firing_upper_bound(const Variation& gamma, const Config& c);

}  // namespace fssp

#endif  // FSSP_VARIATIONS_HPP
