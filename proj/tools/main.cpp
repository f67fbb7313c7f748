// ncsym: batch front end for the noncommutative symmetric algebra workbench.
//
// Exit codes: 0 pass, 1 verification failure, 2 usage or configuration error.

#include "ncsym/report.hpp"
#include "ncsym/verify.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace ncsym;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string instance = "biquadratic";
  int nmax = 0;  // 0 means the instance default
  std::uint64_t seed = 1;
  std::string out;
  std::vector<std::string> suites;
  int samples = 100;
  int depth = 4;
  int level = 6;
  int center_level = 2;
  std::string probe = "auto";
  bool timing = false;
};

InstancePtr load_instance(const Options& o) {
  auto inst = FieldTowerInstance::by_key(o.instance);
  if (!inst) {
    std::string keys;
    for (const auto& k : FieldTowerInstance::builtin_keys()) keys += (keys.empty() ? "" : ", ") + k;
    throw UsageError("unknown instance '" + o.instance + "' (known: " + keys + ")");
  }
  return inst;
}

int resolved_nmax(const Options& o, const FieldTowerInstance& inst) {
  const int n = o.nmax == 0 ? default_nmax(inst) : o.nmax;
  if (n < 4) throw UsageError("--nmax must be at least 4");
  return n;
}

/// Prints to stdout and, with --out, writes the same bytes to out/name.
void emit(const Options& o, const std::string& name, const std::string& text) {
  std::cout << text;
  if (o.out.empty()) return;
  std::filesystem::create_directories(o.out);
  const auto path = std::filesystem::path(o.out) / name;
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path.string());
  f << text;
}

std::string dump(const nlohmann::ordered_json& j) { return j.dump(2) + "\n"; }

int cmd_classify(const Options& o) {
  const auto inst = load_instance(o);
  emit(o, "classify_" + inst->key() + ".json", dump(classify_report(*inst)));
  return kPass;
}

int cmd_hilbert(const Options& o) {
  const auto inst = load_instance(o);
  const SymAlgebra alg(inst);
  const auto rows = hilbert_table(alg, resolved_nmax(o, *inst));
  emit(o, "hilbert_" + inst->key() + ".csv", hilbert_csv(rows));
  for (const auto& r : rows)
    if (!r.ok) return kFail;
  return kPass;
}

int cmd_verify(const Options& o) {
  const auto inst = load_instance(o);
  VerifyConfig cfg;
  cfg.nmax = resolved_nmax(o, *inst);
  cfg.seed = o.seed;
  cfg.samples = o.samples;
  std::vector<std::string> names = o.suites.empty() ? suite_names() : o.suites;
  for (const auto& n : names)
    if (std::find(suite_names().begin(), suite_names().end(), n) == suite_names().end())
      throw UsageError("unknown suite '" + n + "'");
  const auto results = run_suites(inst, names, cfg);

  nlohmann::ordered_json j;
  j["instance"] = inst->key();
  j["nmax"] = cfg.nmax;
  j["seed"] = cfg.seed;
  j["samples"] = cfg.samples;
  auto arr = nlohmann::ordered_json::array();
  bool ok = true;
  for (const auto& r : results) {
    arr.push_back(r.to_json(o.timing));
    ok = ok && r.ok();
    std::cerr << r.name << ": " << r.passed << " passed, " << r.failed << " failed, " << r.seconds << " s\n";
  }
  j["suites"] = std::move(arr);
  j["status"] = ok ? "pass" : "fail";
  emit(o, "verify_" + inst->key() + ".json", dump(j));
  return ok ? kPass : kFail;
}

int cmd_probe(const Options& o) {
  const auto inst = load_instance(o);
  const bool number_field = inst->prime_field_degree().has_value();
  std::string which = o.probe;
  if (which == "auto") which = number_field ? "both" : "simplicity";
  if ((which == "center" || which == "both") && !number_field)
    throw UsageError("the center probe needs an instance of finite degree over Q; '" + inst->key() + "' is not");
  if (o.depth < 0 || o.level < 1 || o.center_level < 0) throw UsageError("probe parameters out of range");

  const SymAlgebra alg(inst);
  const Localization loc(alg);
  nlohmann::ordered_json j;
  j["instance"] = inst->key();
  j["seed"] = o.seed;
  bool ok = true;

  if (which == "simplicity" || which == "both") {
    nlohmann::ordered_json p;
    p["probe"] = "ideal_saturation";
    p["parameters"] = {{"depth", o.depth}, {"level_bound", o.level}};
    Sampler rng(o.seed);
    std::vector<SymElement> gens{alg.g_bar(0)};
    for (int k = 0; k < 3; ++k) {
      SymElement x(inst, 0, 2, {rng.subfield_element(*inst, 0), rng.nonzero_element(*inst)});
      gens.push_back(std::move(x));
    }
    auto runs = nlohmann::ordered_json::array();
    for (const auto& x : gens) runs.push_back(saturation_report(loc.ideal_saturation_probe(x, o.depth, o.level), x, o.depth, o.level));
    p["runs"] = std::move(runs);
    j["simplicity"] = std::move(p);
  }
  if (which == "center" || which == "both") {
    nlohmann::ordered_json p;
    p["probe"] = "center";
    p["parameters"] = {{"level", o.center_level}};
    const auto a = loc.center_probe(o.center_level);
    const auto b = loc.center_probe(o.center_level + 1);
    p["result"] = center_report(a);
    p["next_level_dimension"] = b.dimension;
    p["stable"] = a.dimension == b.dimension;
    ok = a.contains_common_subfield && b.contains_common_subfield;
    p["verdict"] = ok ? "contains K0 ∩ K1" : "missing K0 ∩ K1";
    j["center"] = std::move(p);
  }
  emit(o, "probe_" + inst->key() + ".json", dump(j));
  return ok ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact workbench for noncommutative symmetric algebras of two-sided vector spaces"};
  app.require_subcommand(1);
  app.set_config("--config", "", "key = value configuration file; flags override it");
  app.allow_config_extras(false);

  Options o;
  app.add_option("--instance", o.instance, "biquadratic | d4-quartic | rational-function");
  app.add_option("--nmax", o.nmax, "degree bound (default 10, or 6 on rational-function)");
  app.add_option("--seed", o.seed, "seed for every randomized check");
  app.add_option("--out", o.out, "directory for report files");
  app.add_option("--suite", o.suites, "suites to run (repeatable): field_tower indexed_tensor sym_algebra localization")
      ->delimiter(',');
  app.add_option("--samples", o.samples, "random samples per property")->check(CLI::PositiveNumber);
  app.add_option("--depth", o.depth, "saturation window depth");
  app.add_option("--level", o.level, "saturation level bound");
  app.add_option("--center-level,--center_level", o.center_level, "filtration level of the center probe");
  app.add_option("--probe", o.probe, "simplicity | center | both | auto")
      ->check(CLI::IsMember({"simplicity", "center", "both", "auto"}));
  app.add_flag("--timing", o.timing, "include runtimes in the verify report");

  auto* classify = app.add_subcommand("classify", "instance summary and sigma-order verdict")->fallthrough();
  auto* hilbert = app.add_subcommand("hilbert", "dimension table as CSV")->fallthrough();
  auto* verify = app.add_subcommand("verify", "run the property suites")->fallthrough();
  auto* probe = app.add_subcommand("probe", "simplicity and center probes")->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (classify->parsed()) return cmd_classify(o);
    if (hilbert->parsed()) return cmd_hilbert(o);
    if (verify->parsed()) return cmd_verify(o);
    if (probe->parsed()) return cmd_probe(o);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "failure: " << e.what() << "\n";
    return kFail;
  }
  return kUsage;
}
