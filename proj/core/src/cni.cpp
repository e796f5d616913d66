#include "fssp/cni.hpp"

#include <algorithm>

namespace fssp {

namespace {

// Finiteness of every W(i,j); w_fin[(i - r) * (s + 1) + j] = W(i,j) finite.
std::vector<bool> w_finite_table(const PathConfig& c, SearchBudget* budget) {
  int r = c.r(), s = c.s();
  std::vector<bool> fin(static_cast<std::size_t>((-r + 1) * (s + 1)));
  for (int i = r; i <= 0; ++i) {
    for (int j = 0; j <= s; ++j) {
      ExtensionStats st = extension_stats(c, {i, j}, budget);
      fin[static_cast<std::size_t>((i - r) * (s + 1) + j)] =
          !st.left.infinite() && !st.right.infinite();
    }
  }
  return fin;
}

}  // namespace

void ijk_sets(const PathConfig& c, std::vector<Window>& i_set, std::vector<Window>& j_set,
              std::vector<Window>& k_set, SearchBudget* budget) {
  i_set.clear();
  j_set.clear();
  k_set.clear();
  int r = c.r(), s = c.s();
  std::vector<bool> fin = w_finite_table(c, budget);
  auto finite = [&](int i, int j) { return fin[static_cast<std::size_t>((i - r) * (s + 1) + j)]; };
  for (int i = r; i <= 0; ++i) {
    for (int j = 0; j <= s; ++j) {
      if (finite(i, j)) {
        k_set.push_back({i, j});
        continue;
      }
      if (i - 1 >= r && finite(i - 1, j)) i_set.push_back({i, j});
      if (j + 1 <= s && finite(i, j + 1)) j_set.push_back({i, j});
    }
  }
}

CniReport cni_verdict(const PathConfig& c, SearchBudget* budget) {
  CniReport rep;
  ijk_sets(c, rep.i_set, rep.j_set, rep.k_set, budget);
  auto check = [&](const std::vector<Window>& set, char clause) {
    for (Window w : set) {
      if (ni_check(c, w, budget)) continue;
      NiFailure fail;
      fail.w = w;
      fail.clause = clause;
      // Pull the first interfering pair for the report; a capped search
      // suffices since the verdict is already known.
      NiBruteResult brute = ni_bruteforce(c, w, 4096, budget);
      if (brute.verdict.has_value() && !*brute.verdict) {
        fail.left_witness = std::move(brute.left_witness);
        fail.right_witness = std::move(brute.right_witness);
      }
      rep.failures.push_back(std::move(fail));
    }
  };
  check(rep.k_set, 'K');
  check(rep.i_set, 'I');
  check(rep.j_set, 'J');
  rep.verdict = rep.failures.empty();
  return rep;
}

std::string CniReport::str() const {
  std::string out = verdict ? "CNI SATISFIED" : "CNI VIOLATED";
  out += "\nK " + std::to_string(k_set.size()) + " I " + std::to_string(i_set.size()) + " J " +
         std::to_string(j_set.size()) + "\n";
  for (const NiFailure& f : failures) {
    out += "FAIL ";
    out += f.clause;
    out += " window (" + std::to_string(f.w.i) + "," + std::to_string(f.w.j) + ")";
    if (!f.left_witness.empty() || !f.right_witness.empty()) {
      auto cells = [](const std::vector<Position>& v) {
        std::string s;
        for (Position p : v) s += "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
        return s.empty() ? std::string("eps") : s;
      };
      out += " pair " + cells(f.left_witness) + " x " + cells(f.right_witness);
    }
    out += "\n";
  }
  return out;
}

HandStatus hand_status(const PathConfig& c, SearchBudget* budget) {
  HandStatus hs;
  if (c.r() == 0) {
    hs.left = Hand::FREE;
  } else {
    ExtensionStats st = extension_stats(c, {c.r() + 1, c.s()}, budget);
    hs.left = st.left.infinite() ? Hand::FREE : Hand::CLOSED;
  }
  if (c.s() == 0) {
    hs.right = Hand::FREE;
  } else {
    ExtensionStats st = extension_stats(c, {c.r(), c.s() - 1}, budget);
    hs.right = st.right.infinite() ? Hand::FREE : Hand::CLOSED;
  }
  int free_hands = (hs.left == Hand::FREE ? 1 : 0) + (hs.right == Hand::FREE ? 1 : 0);
  hs.type = free_hands == 2 ? ConfigType::I : free_hands == 1 ? ConfigType::II : ConfigType::III;
  return hs;
}

std::string HandStatus::str() const {
  std::string out = "TYPE ";
  out += type == ConfigType::I ? "I" : type == ConfigType::II ? "II" : "III";
  out += std::string(" left=") + (left == Hand::FREE ? "FREE" : "CLOSED");
  out += std::string(" right=") + (right == Hand::FREE ? "FREE" : "CLOSED");
  return out;
}

bool cni_type2_shortcut(const PathConfig& c, SearchBudget* budget) {
  if (c.r() == 0) throw std::invalid_argument("shortcut needs r < 0");
  HandStatus hs = hand_status(c, budget);
  if (hs.type != ConfigType::II || hs.left != Hand::FREE)
    throw std::invalid_argument("shortcut needs Type II with free left hand");
  for (int j = 0; j <= c.s(); ++j) {
    ExtensionStats st = extension_stats(c, {c.r(), j}, budget);
    if (!st.right.infinite()) return ni_check(c, {c.r() + 1, j}, budget);
  }
  throw std::logic_error("W(r,s) must be finite");
}

}  // namespace fssp
