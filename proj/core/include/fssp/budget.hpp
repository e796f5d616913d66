#ifndef FSSP_BUDGET_HPP
#define FSSP_BUDGET_HPP

#include <cstdint>
#include <stdexcept>

namespace fssp {

struct ResourceLimitError : std::runtime_error {
  ResourceLimitError() : std::runtime_error("search budget exceeded") {}
};

// Node budget shared by a search. Every enumerated candidate charges one
// node; exceeding the budget raises ResourceLimitError, never a wrong answer.
class SearchBudget {
 public:
  static constexpr std::uint64_t kDefault = 1'000'000;

  explicit SearchBudget(std::uint64_t limit = kDefault) : limit_(limit) {}

  void charge(std::uint64_t n = 1) {
    used_ += n;
    if (used_ > limit_) throw ResourceLimitError();
  }

  std::uint64_t used() const { return used_; }
  std::uint64_t limit() const { return limit_; }

 private:
  std::uint64_t limit_;
  std::uint64_t used_ = 0;
};

}  // namespace fssp

#endif  // FSSP_BUDGET_HPP
