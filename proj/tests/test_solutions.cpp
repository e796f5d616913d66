#include <random>

#include "doctest.h"
#include "fssp/solutions.hpp"
#include "helpers.hpp"

using namespace fssp;
using namespace fssp::test;

TEST_CASE("reflection spec on straight lines") {
  ReflectionSpec spec = build_reflection(line_config(3, 3));
  CHECK(spec.w == Window{-3, 3});
  CHECK(spec.t_tilde == 9);
  CHECK(spec.domain.size() == 1);
  CHECK(spec.state_count_bound == 4 * 9 + 8);

  ReflectionSpec single = build_reflection(parse_path("PATH .|."));
  CHECK(single.t_tilde == 0);
  CHECK(single.domain.size() == 1);

  ReflectionSpec path2 = build_reflection(line_config(0, 3));
  CHECK(path2.two_path_form);
  CHECK(path2.state_count_bound == path2.t_tilde + 2);
}

TEST_CASE("reflection simulation") {
  PathConfig c = line_config(3, 3);
  ReflectionSpec spec = build_reflection(c);
  SimOutcome self = simulate_reflection(spec, c);
  CHECK(self.fired);
  CHECK(self.fire_time == 9);
  CHECK(self.fired_nodes == 7);

  // a configuration with one boundary condition changed inside y never fires
  SimOutcome other = simulate_reflection(spec, line_config(3, 4));
  CHECK_FALSE(other.fired);
  CHECK(other.fired_nodes == 0);

  // every domain member fires at exactly T~
  for (const PathConfig& member : spec.domain) {
    SimOutcome sim = simulate_reflection(spec, member);
    CHECK(sim.fired);
    CHECK(sim.fire_time == spec.t_tilde);
  }
}

TEST_CASE("firing interval formula") {
  CHECK(firing_interval(-11, 9, 30, -11, 11) == std::pair<long, long>{-11, 8});
  CHECK(firing_interval(-9, 11, 30, -11, 11) == std::pair<long, long>{-8, 11});
  CHECK(firing_interval(-12, 9, 30, -12, 10) == std::pair<long, long>{-12, 6});
}

TEST_CASE("greedy cover") {
  // the worked C0 row: two starred automata out of five
  std::vector<std::pair<long, long>> c0 = {{-11, 8}, {-10, 8}, {-8, 8}, {-8, 10}, {-8, 11}};
  CHECK(greedy_cover(c0, -11, 11) == std::vector<std::size_t>{0, 4});

  std::vector<std::pair<long, long>> whole = {{-3, 3}};
  CHECK(greedy_cover(whole, -3, 3) == std::vector<std::size_t>{0});

  std::vector<std::pair<long, long>> nested = {{-1, 1}, {-3, 3}};
  CHECK(greedy_cover(nested, -3, 3) == std::vector<std::size_t>{1});

  std::vector<std::pair<long, long>> gap = {{-3, -1}, {1, 3}};
  CHECK_THROWS_AS(greedy_cover(gap, -3, 3), std::logic_error);
}

TEST_CASE("cc construction") {
  CcSpec single = build_cc(parse_path("PATH .|."), Variation::g_two_path());
  CHECK(single.T == 0);
  CHECK(single.class_members.size() == 1);
  CHECK(single.distinct_machines == 1);
  CHECK(single.state_count == 8);  // 4^1 * (0+2)

  // the count formula at the worked scale: 4^6 * 32 and the x6 wrapper
  CHECK(boost::multiprecision::pow(BigInt(4), 6) * BigInt(32) == 131072);
  CHECK(6 * boost::multiprecision::pow(BigInt(4), 6) * BigInt(32) == 786432);

  CcSpec line = build_cc(line_config(2, 2), Variation::g_two_path());
  CHECK(line.T == 6);
  // enumerated class and machines are nonempty and consistent
  CHECK(line.class_members.size() >= 1);
  CHECK(line.distinct_machines >= 1);
  CHECK(line.state_count ==
        boost::multiprecision::pow(BigInt(4), static_cast<unsigned>(line.distinct_machines)) *
            BigInt(line.T + 2));
}

TEST_CASE("cc simulation fires exactly the enumerated class at T") {
  PathConfig c = line_config(2, 2);
  Variation g2 = Variation::g_two_path();
  CcSpec spec = build_cc(c, g2);
  for (const PathConfig& member : spec.class_members) {
    SimOutcome sim = simulate_cc(spec, member);
    CHECK(sim.fired);
    CHECK(sim.fire_time == spec.T);
  }
  // a config outside the class (longer line) never fires
  SimOutcome outside = simulate_cc(spec, line_config(2, 3));
  CHECK_FALSE(outside.fired);
}

TEST_CASE("lm simulation") {
  Variation line_ab = Variation::line_ab();
  Config c33 = line_config(3, 3);
  SimOutcome at9 = simulate_lm(9, c33, line_ab);
  CHECK(at9.fired);
  CHECK(at9.fire_time == 9);

  SimOutcome at8 = simulate_lm(8, c33, line_ab);
  CHECK_FALSE(at8.fired);

  Variation g2 = Variation::g_two_path();
  Config z = parse_config("PATH W|EEN");
  long bound = firing_upper_bound(g2, z);
  SimOutcome sim = simulate_lm(bound, z, g2);
  CHECK(sim.fired);
  CHECK(sim.fire_time == *mft_localmap(z, g2).value);
}

TEST_CASE("state bounds: worked values") {
  StateBounds reg = wrapped_state_bounds(20, StateBoundKind::REG_LM);
  REQUIRE(reg.lower.has_value());
  CHECK(reg.lower->str() == "2.9547e31");
  CHECK(reg.upper.str() == "3.3253e8103");

  StateBounds cc = state_bounds(30, StateBoundKind::CC, 6);
  CHECK(*cc.upper.exact == 131072);
  StateBounds cc6 = wrapped_state_bounds(30, StateBoundKind::CC, 6);
  CHECK(*cc6.upper.exact == 786432);

  StateBounds ref = state_bounds(30, StateBoundKind::REF_GPATH);
  CHECK(*ref.upper.exact == 128);
  CHECK(*wrapped_state_bounds(30, StateBoundKind::REF_GPATH).upper.exact == 768);

  StateBounds gp = wrapped_state_bounds(30, StateBoundKind::GPATH_LM);
  REQUIRE(gp.lower.has_value());
  CHECK(*gp.lower->exact == 248455350);  // 6 * C(15,7)^2 = 2.4845e8
  CHECK(gp.lower->str() == "248455350");

  CHECK(*state_bounds(30, StateBoundKind::REF_PATH).upper.exact == 32);
  CHECK(*wrapped_state_bounds(30, StateBoundKind::REF_PATH).upper.exact == 192);
}

TEST_CASE("state bounds: lower never exceeds upper") {
  for (long T = 0; T <= 64; ++T) {
    for (StateBoundKind k : {StateBoundKind::REG_LM, StateBoundKind::GPATH_LM,
                             StateBoundKind::PATH_LM}) {
      StateBounds b = state_bounds(T, k);
      REQUIRE(b.lower.has_value());
      if (b.lower->exact && b.upper.exact) {
        CHECK(*b.lower->exact <= *b.upper.exact);
      } else {
        CHECK((b.lower->exp10 < b.upper.exp10 ||
               (b.lower->exp10 == b.upper.exp10 && b.lower->mantissa <= b.upper.mantissa)));
      }
    }
  }
}

TEST_CASE("mss upper bounds") {
  // certified reflection bound: straight line satisfies CNI
  MssBound line = mss_upper(Config(line_config(2, 2)), Variation::g_two_path());
  CHECK(line.method == "reflection");
  CHECK(line.value == 6 * (4 * 6 + 8));

  MssBound path = mss_upper(Config(line_config(0, 4)), Variation::g_two_path());
  CHECK(path.method == "reflection-2path");
  CHECK(path.value == 6 * (8 + 2));

  // the shared bottle violates CNI, but its T~ still equals mft, so the
  // local-map certification keeps the reflection bound
  MssBound shared = mss_upper(Config(shared_bottle()), Variation::g_two_path());
  CHECK(shared.method == "reflection");

  // the longer bottle has mft strictly below T~: only the cc bound applies
  MssBound cc = mss_upper(Config(uncertified_bottle()), Variation::g_two_path());
  CHECK(cc.method == "cc");
  CHECK(cc.value % 6 == 0);
}

TEST_CASE("partial-solution soundness on small random configurations") {
  std::mt19937 rng(424242);
  Variation g2 = Variation::g_two_path();
  for (int trial = 0; trial < 12; ++trial) {
    PathConfig c = random_config(rng, 7);
    SearchBudget budget(10'000'000);

    ReflectionSpec ref = build_reflection(c, &budget);
    for (const PathConfig& member : ref.domain) {
      SimOutcome sim = simulate_reflection(ref, member);
      CHECK(sim.fired);
      CHECK(sim.fire_time == ref.t_tilde);
    }

    CcSpec cc = build_cc(c, g2, &budget);
    for (const PathConfig& member : cc.class_members) {
      SimOutcome sim = simulate_cc(cc, member);
      CHECK(sim.fired);
      CHECK(sim.fire_time == cc.T);
    }
    // mutated configurations outside the class/domain never fire
    for (int k = 0; k < 6; ++k) {
      PathConfig probe = random_config(rng, 7);
      bool in_class = false;
      for (const PathConfig& member : cc.class_members)
        in_class = in_class || canonical(member) == canonical(probe);
      SimOutcome sim = simulate_cc(cc, probe);
      if (in_class) {
        CHECK(sim.fired);
      } else {
        CHECK_FALSE(sim.fired);
        CHECK(sim.fired_nodes == 0);
      }
    }
  }
}
