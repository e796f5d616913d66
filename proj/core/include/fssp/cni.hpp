#ifndef FSSP_CNI_HPP
#define FSSP_CNI_HPP

#include <string>
#include <vector>

#include "fssp/extensions.hpp"
#include "fssp/grid.hpp"

// The index sets I/J/K over windows, the condition of noninterference of
// extensions, the Type-II decision shortcut, and hand/Type classification.

namespace fssp {

struct NiFailure {
  Window w;
  char clause = 'K';  // 'I', 'J' or 'K'
  // First interfering pair in DFS order when one was extracted.
  std::vector<Position> left_witness, right_witness;
};

struct CniReport {
  std::vector<Window> i_set, j_set, k_set;
  std::vector<NiFailure> failures;
  bool verdict = true;

  std::string str() const;
};

// I: W(i,j) infinite but W(i-1,j) finite; J: W(i,j) infinite but W(i,j+1)
// finite; K: W(i,j) finite. W(i,j) is finite iff both f(i,j) and g(i,j) are.
void ijk_sets(const PathConfig& c, std::vector<Window>& i_set, std::vector<Window>& j_set,
              std::vector<Window>& k_set, SearchBudget* budget = nullptr);

CniReport cni_verdict(const PathConfig& c, SearchBudget* budget = nullptr);

// Decision shortcut for Type II with free left hand and r < 0: CNI holds iff
// NI(r+1, j0) with j0 the smallest j >= 0 making W(r,j) finite. Throws
// std::invalid_argument when the preconditions fail.
bool cni_type2_shortcut(const PathConfig& c, SearchBudget* budget = nullptr);

enum class Hand { FREE, CLOSED };
enum class ConfigType { I, II, III };

struct HandStatus {
  Hand left = Hand::FREE;
  Hand right = Hand::FREE;
  ConfigType type = ConfigType::I;

  std::string str() const;
};

// A hand is free when it admits arbitrarily long extensions: left is free
// iff r = 0 or f(r+1, s) is infinite; the right hand uses the mirror image
// of the same definition.
HandStatus hand_status(const PathConfig& c, SearchBudget* budget = nullptr);

}  // namespace fssp

#endif  // FSSP_CNI_HPP
