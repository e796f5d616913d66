// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails. Each criterion pins its tolerances in code.

#include <chrono>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "fssp/cni.hpp"
#include "fssp/extensions.hpp"
#include "fssp/grid.hpp"
#include "fssp/mft.hpp"
#include "fssp/solutions.hpp"
#include "fssp/variations.hpp"
#include "helpers.hpp"

using namespace fssp;
using namespace fssp::test;

namespace {

struct Criterion {
  int id;
  std::string name;
  bool pass = true;
  long checks = 0;
  std::string detail;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

int failures = 0;

template <typename Fn>
void run(int id, const std::string& name, Fn fn) {
  Criterion c{id, name};
  auto t0 = std::chrono::steady_clock::now();
  try {
    fn(c);
  } catch (const std::exception& e) {
    c.pass = false;
    c.detail = std::string("exception: ") + e.what();
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::printf("%s criterion %2d: %s (%ld checks, %.1fs)%s%s\n", c.pass ? "PASS" : "FAIL", id,
              name.c_str(), c.checks, secs, c.pass ? "" : " -- ", c.pass ? "" : c.detail.c_str());
  std::fflush(stdout);
  if (!c.pass) ++failures;
}

std::string win_str(Window w) {
  return "(" + std::to_string(w.i) + "," + std::to_string(w.j) + ")";
}

}  // namespace

int main() {
  Variation line_ab = Variation::line_ab();
  Variation g2 = Variation::g_two_path();

  run(1, "line-variation mft values 3a / 3a+2 / 3a+2", [&](Criterion& c) {
    c.expect(*mft_localmap(line_config(3, 3), line_ab).value == 9, "C_{3,3} != 9");
    c.expect(*mft_localmap(line_config(3, 4), line_ab).value == 11, "C_{3,4} != 11");
    c.expect(*mft_localmap(line_config(3, 5), line_ab).value == 11, "C_{3,5} != 11");
    for (int a = 0; a <= 4; ++a) {
      c.expect(*mft_localmap(line_config(a, a), line_ab).value == 3 * a,
               "C_{a,a} != 3a at a=" + std::to_string(a));
      c.expect(*mft_localmap(line_config(a, a + 1), line_ab).value == 3 * a + 2,
               "C_{a,a+1} != 3a+2 at a=" + std::to_string(a));
      c.expect(*mft_localmap(line_config(a, a + 2), line_ab).value == 3 * a + 2,
               "C_{a,a+2} != 3a+2 at a=" + std::to_string(a));
    }
  });

  run(2, "safeness chain for C_{3,3} at t=8, unsafe at t=9", [&](Criterion& c) {
    SafeResult safe8 = is_safe(line_config(3, 3), 8, line_ab);
    c.expect(safe8.safe, "t=8 not safe");
    c.expect(safe8.chain.has_value() && safe8.chain->terminal_radius == 9,
             "chain does not reach radius 9");
    if (safe8.chain) {
      c.expect(radius(safe8.chain->links.back().cfg) == 9, "terminal radius mismatch");
      for (std::size_t k = 1; k < safe8.chain->links.size(); ++k)
        c.expect(equiv_related(safe8.chain->links[k - 1].cfg, safe8.chain->links[k].cfg, 8,
                               *safe8.chain->links[k].via),
                 "chain link " + std::to_string(k) + " not an equivalence");
    }
    c.expect(!is_safe(line_config(3, 3), 9, line_ab).safe, "t=9 not unsafe");
  });

  run(3, "window formula matches the worked t=30 example", [&](Criterion& c) {
    PathConfig cfg = line_config(11, 11);
    c.expect(window(cfg, 11, 30) == Window{-9, 11}, "u=11");
    c.expect(window(cfg, -11, 30) == Window{-11, 9}, "u=-11");
  });

  run(4, "the 19 firing intervals and the greedy cover of the first row", [&](Criterion& c) {
    struct Row {
      long a, b, r, s, lo, hi;
    };
    // A_1(a, b, C_k) rows with the class members' index ranges and their
    // expected firing intervals; T = 30 throughout.
    const std::vector<Row> rows = {
        {-11, 9, -11, 11, -11, 8},  {-11, 10, -11, 11, -10, 8}, {-11, 11, -11, 11, -8, 8},
        {-10, 11, -11, 11, -8, 10}, {-9, 11, -11, 11, -8, 11},  {-11, 9, -11, 10, -11, 8},
        {-11, 10, -11, 10, -10, 8}, {-10, 10, -11, 10, -10, 10}, {-10, 10, -10, 11, -10, 10},
        {-10, 11, -10, 11, -8, 10}, {-9, 11, -10, 11, -8, 11},  {-12, 9, -12, 10, -12, 6},
        {-12, 10, -12, 10, -10, 6}, {-11, 10, -12, 10, -10, 8}, {-10, 10, -12, 10, -10, 10},
        {-10, 10, -10, 12, -10, 10}, {-10, 11, -10, 12, -8, 10}, {-10, 12, -10, 12, -6, 10},
        {-9, 12, -10, 12, -6, 12}};
    for (const Row& row : rows) {
      auto got = firing_interval(row.a, row.b, 30, row.r, row.s);
      c.expect(got == std::pair<long, long>{row.lo, row.hi},
               "interval for A1(" + std::to_string(row.a) + "," + std::to_string(row.b) + ")");
    }
    std::vector<std::pair<long, long>> c0 = {{-11, 8}, {-10, 8}, {-8, 8}, {-8, 10}, {-8, 11}};
    c.expect(greedy_cover(c0, -11, 11) == std::vector<std::size_t>{0, 4},
             "greedy cover of the first row");
  });

  run(5, "state-count arithmetic and big-number bounds", [&](Criterion& c) {
    c.expect(*state_bounds(30, StateBoundKind::CC, 6).upper.exact == 131072, "4^6*32");
    c.expect(*wrapped_state_bounds(30, StateBoundKind::CC, 6).upper.exact == 786432, "x6");
    c.expect(*state_bounds(30, StateBoundKind::REF_GPATH).upper.exact == 128, "4T+8");
    c.expect(*wrapped_state_bounds(30, StateBoundKind::REF_GPATH).upper.exact == 768, "x6 ref");
    StateBounds reg = wrapped_state_bounds(20, StateBoundKind::REG_LM);
    c.expect(reg.lower.has_value() && reg.lower->str() == "2.9547e31",
             "lower " + (reg.lower ? reg.lower->str() : "none"));
    c.expect(reg.upper.str() == "3.3253e8103", "upper " + reg.upper.str());
  });

  run(6, "simplified j0 formula replay and the Type I straight line", [&](Criterion& c) {
    auto g_of = [](int j) -> Count {
      if (j >= 49 && j <= 53) return std::vector<long>{6, 5, 4, 3, 2}[j - 49];
      if (j < 49) return 59 - j;
      return 1;
    };
    J0Result replay = g_two_path_formula(-47, 55, g_of);
    c.expect(replay.value == 149, "value " + std::to_string(replay.value));
    c.expect(replay.j0 == 51, "j0 " + std::to_string(replay.j0));
    MftResult t1 = mft_formula(line_config(47, 55));
    c.expect(t1.value == 157, "Type I line value");
    c.expect(t1.method == MftMethod::TYPE_I, "Type I method");
  });

  run(7, "oracle equivalence over all g-2PATH configurations with <= 8 cells",
      [&](Criterion& c) {
        for (const PathConfig& cfg : all_g2path_configs(8)) {
          SearchBudget budget(50'000'000);
          long r = cfg.r(), s = cfg.s();
          long mft = *mft_localmap(cfg, g2, &budget).value;
          TTilde tt = t_tilde(cfg, &budget);
          HandStatus hs = hand_status(cfg, &budget);

          c.expect(mft <= tt.value, cfg.serialize() + ": mft > T~");
          long upper = -r + s + std::max(-r, s);
          c.expect(mft <= upper, cfg.serialize() + ": mft above the generalized bound");
          if (hs.left == Hand::FREE)
            c.expect(-2 * r + s <= mft, cfg.serialize() + ": left-free lower bound");
          if (hs.right == Hand::FREE)
            c.expect(-r + 2 * s <= mft, cfg.serialize() + ": right-free lower bound");

          if (hs.type == ConfigType::I)
            c.expect(mft == upper, cfg.serialize() + ": Type I formula");

          if (cni_verdict(cfg, &budget).verdict)
            c.expect(mft == tt.value, cfg.serialize() + ": CNI but mft != T~");

          if (r == 0) {
            FgTable table = fg_table(cfg, 1, &budget);
            J0Result j0 = two_path_formula(static_cast<int>(s),
                                           [&](int j) { return table.row({0, j}).g; });
            c.expect(j0.value == mft, cfg.serialize() + ": 2PATH j0 formula");
          }
        }
      });

  run(8, "interference oracle on every finite window of configs <= 9 cells", [&](Criterion& c) {
    for (const PathConfig& cfg : all_g2path_configs(9)) {
      SearchBudget budget(50'000'000);
      for (int i = cfg.r(); i <= 0; ++i) {
        for (int j = 0; j <= cfg.s(); ++j) {
          ExtensionStats st = extension_stats(cfg, {i, j}, &budget);
          if (st.left.infinite() || st.right.infinite()) continue;
          bool fast = ni_check(cfg, {i, j}, &budget);
          NiBruteResult brute = ni_bruteforce(cfg, {i, j}, 0, &budget);
          c.expect(brute.verdict.has_value() && *brute.verdict == fast,
                   cfg.serialize() + " window " + win_str({i, j}));
        }
      }
    }
    // the constructed bottles exercise the nontrivial finite windows
    c.expect(ni_check(disjoint_bottles(), disjoint_bottles_window) == true, "disjoint bottles");
    c.expect(ni_check(shared_bottle(), shared_bottle_window) == false, "shared bottle");
    NiBruteResult brute = ni_bruteforce(shared_bottle(), shared_bottle_window);
    c.expect(brute.verdict.has_value() && !*brute.verdict, "shared bottle brute force");
  });

  run(9, "safeness facts on all configs <= 7 cells, t <= 8", [&](Criterion& c) {
    for (const PathConfig& cfg : all_g2path_configs(7)) {
      Config conf = cfg;
      for (int t = 0; t <= 8; ++t) {
        SearchBudget budget(50'000'000);
        bool config_safe = is_safe(conf, t, g2, &budget).safe;
        // Fact 7: available-information safeness equals configuration safeness
        bool generic_safe = is_safe(conf, t, g2, &budget, /*force_generic=*/true).safe;
        c.expect(config_safe == generic_safe, cfg.serialize() + " t=" + std::to_string(t));
        // Fact 6: verdicts from every node agree
        for (const Position& v : cfg.cells()) {
          AvailableInfo ai = available_info(conf, v, t);
          bool node_safe = ai.quiescent ? true : generic_safe;
          c.expect(ai_safe(conf, v, t, g2, &budget) == node_safe,
                   cfg.serialize() + " node verdict at t=" + std::to_string(t));
        }
      }
    }
  });

  run(10, "partial-solution soundness on 100 random configs <= 10 cells", [&](Criterion& c) {
    std::mt19937 rng(987654321);
    for (int trial = 0; trial < 100; ++trial) {
      PathConfig cfg = random_config(rng, 10);
      SearchBudget budget(100'000'000);

      ReflectionSpec ref = build_reflection(cfg, &budget);
      for (const PathConfig& member : ref.domain) {
        SimOutcome sim = simulate_reflection(ref, member);
        c.expect(sim.fired && sim.fire_time == ref.t_tilde,
                 cfg.serialize() + ": reflection domain member");
      }

      CcSpec cc = build_cc(cfg, g2, &budget);
      c.expect(cc.state_count ==
                   boost::multiprecision::pow(BigInt(4),
                                              static_cast<unsigned>(cc.distinct_machines)) *
                       BigInt(cc.T + 2),
               "cc state count formula");
      for (const PathConfig& member : cc.class_members) {
        SimOutcome sim = simulate_cc(cc, member);
        c.expect(sim.fired && sim.fire_time == cc.T, cfg.serialize() + ": cc class member");
      }

      SimOutcome lm = simulate_lm(cc.T, Config(cfg), g2, &budget);
      c.expect(lm.fired && lm.fire_time == cc.T, cfg.serialize() + ": lm at its own mft");

      // probes: the reflection never fires outside its domain, cc never
      // fires outside its class, lm never fires when mft exceeds T
      for (int k = 0; k < 3; ++k) {
        PathConfig probe = random_config(rng, 10);
        std::string key = canonical(probe);
        bool in_domain = false;
        for (const PathConfig& member : ref.domain)
          in_domain = in_domain || canonical(member) == key;
        SimOutcome sim = simulate_reflection(ref, probe);
        c.expect(sim.fired == in_domain, cfg.serialize() + ": reflection probe " + key);
        if (sim.fired) c.expect(sim.fire_time == ref.t_tilde, "probe fire time");

        bool in_class = false;
        for (const PathConfig& member : cc.class_members)
          in_class = in_class || canonical(member) == key;
        SimOutcome csim = simulate_cc(cc, probe);
        c.expect(csim.fired == in_class, cfg.serialize() + ": cc probe " + key);

        long probe_mft = *mft_localmap(probe, g2, &budget).value;
        SimOutcome lsim = simulate_lm(cc.T, Config(probe), g2, &budget);
        c.expect(lsim.fired == (probe_mft <= cc.T), "lm probe domain");
        if (lsim.fired) c.expect(lsim.fire_time == probe_mft, "lm probe fire time");
      }
    }
  });

  std::printf("%s\n", failures == 0 ? "ACCEPTANCE: all criteria passed"
                                    : "ACCEPTANCE: FAILURES PRESENT");
  return failures == 0 ? 0 : 1;
}
