// fssp - minimum firing times, CNI verdicts, and partial solutions for
// firing-squad configurations on the grid.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "fssp/cni.hpp"
#include "fssp/extensions.hpp"
#include "fssp/grid.hpp"
#include "fssp/mft.hpp"
#include "fssp/solutions.hpp"
#include "fssp/variations.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

fssp::Config load_config(const std::string& path) {
  std::istream* in = &std::cin;
  std::ifstream file;
  if (path != "-") {
    file.open(path);
    if (!file) throw fssp::ParseError("cannot open " + path, 0);
    in = &file;
  }
  std::string line;
  while (std::getline(*in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    return fssp::parse_config(line);
  }
  throw fssp::ParseError("no configuration record in " + path, 0);
}

fssp::Variation variation_option(const std::string& name) {
  auto v = fssp::Variation::from_name(name);
  if (!v) throw CLI::ValidationError("--variation", "unknown variation " + name);
  return *v;
}

std::string window_str(fssp::Window w) {
  return "(" + std::to_string(w.i) + "," + std::to_string(w.j) + ")";
}

int run(int argc, char** argv) {
  CLI::App app{"firing squad synchronization toolbox for grid paths and regions"};
  app.require_subcommand(1);

  std::string file = "-";
  std::string variation_name = "g2path";
  std::string method = "auto";
  std::string kind;
  std::string on_file;
  std::string emit = "spec";
  bool trace = false;
  bool wrap = false;
  int threads = 1;
  long t_value = -1;
  long n_value = 1;
  std::uint64_t max_nodes = fssp::SearchBudget::kDefault;

  auto add_common = [&](CLI::App* cmd, bool with_file = true) {
    if (with_file) cmd->add_option("file", file, "configuration file ('-' for stdin)");
    cmd->add_option("--max-nodes", max_nodes, "search node budget");
    cmd->add_option("--threads", threads, "worker threads where supported");
  };

  auto* c_validate = app.add_subcommand("validate", "check configuration invariants");
  add_common(c_validate);
  auto* c_render = app.add_subcommand("render", "ASCII rendering");
  add_common(c_render);
  auto* c_mft = app.add_subcommand("mft", "minimum firing time");
  add_common(c_mft);
  c_mft->add_option("--variation", variation_name, "2path|g2path|line-ab|2reg");
  c_mft->add_option("--method", method, "auto|localmap|formula");
  c_mft->add_flag("--trace", trace, "emit safeness chain / minimizing windows");
  auto* c_cni = app.add_subcommand("cni", "condition of noninterference of extensions");
  add_common(c_cni);
  auto* c_classify = app.add_subcommand("classify", "hand freeness and type");
  add_common(c_classify);
  auto* c_fgtable = app.add_subcommand("fgtable", "f/g/h table as TSV");
  add_common(c_fgtable);
  auto* c_equiv = app.add_subcommand("equivclass", "equivalence class at a time");
  add_common(c_equiv);
  c_equiv->add_option("--variation", variation_name, "2path|g2path|line-ab|2reg");
  c_equiv->add_option("--t", t_value, "time (default: mft)");
  auto* c_solution = app.add_subcommand("solution", "build/simulate a partial solution");
  add_common(c_solution);
  c_solution->add_option("--kind", kind, "ref|cc|lm")->required();
  c_solution->add_option("--variation", variation_name, "2path|g2path|line-ab|2reg");
  c_solution->add_option("--on", on_file, "configuration to simulate on");
  c_solution->add_option("--emit", emit, "spec|simulate|bounds");
  c_solution->add_option("--t", t_value, "time cutoff for the lm solution (default: mft)");
  auto* c_bounds = app.add_subcommand("bounds", "closed-form state-count bounds");
  add_common(c_bounds, false);
  c_bounds->add_option("--t", t_value, "time parameter")->required();
  c_bounds->add_option("--kind", kind, "reg-lm|gpath-lm|path-lm|ref-gpath|ref-path|cc")->required();
  c_bounds->add_option("--n", n_value, "machine count for the cc bound");
  c_bounds->add_flag("--wrap", wrap, "multiply by the solution wrapper constant");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  fssp::SearchBudget budget(max_nodes);

  if (c_bounds->parsed()) {
    auto k = fssp::state_bound_kind_from_name(kind);
    if (!k) {
      std::cerr << "unknown bound kind: " << kind << "\n";
      return kExitUsage;
    }
    fssp::StateBounds b =
        wrap ? fssp::wrapped_state_bounds(t_value, *k, n_value) : fssp::state_bounds(t_value, *k, n_value);
    std::cout << "KIND " << fssp::state_bound_kind_name(*k) << " T " << t_value;
    if (*k == fssp::StateBoundKind::CC) std::cout << " N " << n_value;
    std::cout << "\n";
    if (b.lower) std::cout << "LOWER " << b.lower->str() << "\n";
    std::cout << "UPPER " << b.upper.str() << "\n";
    return kExitOk;
  }

  fssp::Config cfg = load_config(file);
  fssp::Variation gamma = variation_option(variation_name);

  if (c_validate->parsed()) {
    fssp::ValidationReport rep = validate(cfg);
    std::cout << (rep.ok ? "OK" : "INVALID " + rep.str()) << "\n";
    return rep.ok ? kExitOk : kExitNegative;
  }
  if (c_render->parsed()) {
    std::cout << fssp::render_ascii(cfg) << "\n";
    return kExitOk;
  }
  if (c_mft->parsed()) {
    if (!member(gamma, cfg)) {
      std::cerr << "configuration is not a member of " << gamma.name() << "\n";
      return kExitUsage;
    }
    fssp::MftResult res;
    if (method == "localmap") {
      res = fssp::mft_localmap(cfg, gamma, &budget);
    } else if (method == "formula") {
      res = fssp::mft_formula(std::get<fssp::PathConfig>(cfg), &budget);
    } else if (method == "auto") {
      if (gamma.path_shaped() && gamma.kind == fssp::VariationKind::G_TWO_PATH) {
        res = fssp::mft_formula(std::get<fssp::PathConfig>(cfg), &budget);
        if (!res.value) res = fssp::mft_localmap(cfg, gamma, &budget);
      } else {
        res = fssp::mft_localmap(cfg, gamma, &budget);
      }
    } else {
      std::cerr << "unknown method: " << method << "\n";
      return kExitUsage;
    }
    if (res.value) {
      std::cout << "MFT " << *res.value << " METHOD " << method_name(res.method) << "\n";
    } else {
      std::cout << "MFT INCONCLUSIVE [" << res.lower << "," << res.upper << "] METHOD "
                << method_name(res.method) << "\n";
    }
    if (trace) {
      if (res.chain) {
        for (const auto& link : res.chain->links) std::cout << serialize(link.cfg) << "\n";
      }
      for (fssp::Window w : res.argmin) std::cout << "ARGMIN " << window_str(w) << "\n";
    }
    return kExitOk;
  }
  if (c_cni->parsed()) {
    fssp::CniReport rep = fssp::cni_verdict(std::get<fssp::PathConfig>(cfg), &budget);
    std::cout << rep.str();
    return rep.verdict ? kExitOk : kExitNegative;
  }
  if (c_classify->parsed()) {
    std::cout << fssp::hand_status(std::get<fssp::PathConfig>(cfg), &budget).str() << "\n";
    return kExitOk;
  }
  if (c_fgtable->parsed()) {
    std::cout << fssp::fg_table(std::get<fssp::PathConfig>(cfg), threads, &budget).tsv();
    return kExitOk;
  }
  if (c_equiv->parsed()) {
    long t = t_value >= 0 ? t_value : *fssp::mft_localmap(cfg, gamma, &budget).value;
    fssp::SafeResult sr = fssp::is_safe(cfg, static_cast<int>(t), gamma, &budget);
    std::cout << "T " << t << (sr.safe ? " SAFE" : " UNSAFE") << "\n";
    if (sr.safe) {
      for (const auto& link : sr.chain->links) std::cout << serialize(link.cfg) << "\n";
    } else {
      for (const auto& m : sr.class_members) std::cout << serialize(m) << "\n";
    }
    return kExitOk;
  }
  if (c_solution->parsed()) {
    fssp::Config on_cfg = on_file.empty() ? cfg : load_config(on_file);
    auto report = [&](const fssp::SimOutcome& sim) {
      if (sim.fired)
        std::cout << "FIRES " << sim.fire_time << " NODES " << sim.total_nodes << "\n";
      else
        std::cout << "NEVER_FIRES (" << sim.fired_nodes << "/" << sim.total_nodes << " nodes)\n";
    };
    if (kind == "ref") {
      fssp::ReflectionSpec spec = fssp::build_reflection(std::get<fssp::PathConfig>(cfg), &budget);
      if (emit == "spec") {
        std::cout << "REF window " << window_str(spec.w) << " T~ " << spec.t_tilde << " domain "
                  << spec.domain.size() << " states<= " << spec.state_count_bound << "\n";
      } else if (emit == "simulate") {
        report(fssp::simulate_reflection(spec, std::get<fssp::PathConfig>(on_cfg)));
      } else {
        std::cout << "STATES<= " << spec.state_count_bound << "\n";
      }
      return kExitOk;
    }
    if (kind == "cc") {
      if (!gamma.path_shaped()) {
        std::cout << "UNSUPPORTED\n";
        return kExitUsage;
      }
      fssp::CcSpec spec = fssp::build_cc(std::get<fssp::PathConfig>(cfg), gamma, &budget);
      if (emit == "spec") {
        std::cout << "CC T " << spec.T << " class " << spec.class_members.size() << " machines "
                  << spec.distinct_machines << " states " << spec.state_count.str() << "\n";
      } else if (emit == "simulate") {
        report(fssp::simulate_cc(spec, std::get<fssp::PathConfig>(on_cfg)));
      } else {
        std::cout << "STATES " << spec.state_count.str() << "\n";
      }
      return kExitOk;
    }
    if (kind == "lm") {
      long T = t_value >= 0 ? t_value : *fssp::mft_localmap(cfg, gamma, &budget).value;
      if (emit == "simulate") {
        report(fssp::simulate_lm(T, on_cfg, gamma, &budget));
      } else {
        fssp::MssBound mss = fssp::mss_upper(cfg, gamma, &budget);
        std::cout << "LM T " << T << " mss<= " << mss.value.str() << " via " << mss.method << "\n";
      }
      return kExitOk;
    }
    std::cerr << "unknown solution kind: " << kind << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const fssp::ResourceLimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const fssp::ParseError& e) {
    std::cerr << "parse error at " << e.pos << ": " << e.what() << "\n";
    return kExitUsage;
  } catch (const fssp::ValidityError& e) {
    std::cerr << "invalid configuration: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
