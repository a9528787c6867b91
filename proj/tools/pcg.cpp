// pcg: generate instances, classify them, and run verification sweeps.

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "pcc/json_io.hpp"
#include "pcc/sweep.hpp"

namespace {

constexpr int kExitCaseA = 0;
constexpr int kExitCaseB = 10;
constexpr int kExitCaseC = 11;
constexpr int kExitPrecondition = 2;
constexpr int kExitInternal = 3;
constexpr int kExitFailure = 1;

struct CommonOptions {
  std::string family = "doublePentagon";
  int n = 5;
  int k = 0;
  std::uint64_t seed = 0;
  std::uint64_t count = 1;
  std::string oracle = "off";
  int workers = 1;
  std::string out;
  std::string dump_dir = "pcg-dumps";
};

std::uint64_t effective_seed(std::uint64_t flag) {
  if (const char* env = std::getenv("PCG_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw pcc::Error(pcc::ErrorKind::BadFormat, std::string("PCG_SEED is not an unsigned integer: ") + env);
    }
  }
  return flag;
}

class Output {
public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw pcc::Error(pcc::ErrorKind::BadFormat, "cannot write " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
  std::ofstream file_;
};

void dump_instance(const std::string& dir, const std::string& key, const pcc::Json& body) {
  std::filesystem::create_directories(dir);
  const std::string path = dir + "/" + (key.empty() ? std::string("unnamed") : key) + ".json";
  std::ofstream(path) << body.dump(2) << '\n';
  std::cerr << "dumped " << path << '\n';
}

int run_gen(const CommonOptions& o) {
  const auto family = pcc::parse_family(o.family);
  if (!family) throw pcc::Error(pcc::ErrorKind::BadFormat, "unknown family " + o.family);
  const std::uint64_t seed = effective_seed(o.seed);
  Output out(o.out);
  auto emit = [&out](const pcc::ColoredCompleteGraph& g) { out.stream() << pcc::instance_to_json(g).dump() << '\n'; };
  switch (*family) {
    case pcc::Family::DoublePentagon:
      emit(pcc::example_k5_double_pentagon());
      break;
    case pcc::Family::DirectedExample:
      emit(pcc::example_directed(o.n));
      break;
    case pcc::Family::Exhaustive:
      if (o.n <= 5) {
        pcc::ColoringStream stream(o.n);
        while (auto g = stream.next()) emit(*g);
      } else {
        for (std::uint64_t i = 0; i < o.count; ++i) emit(pcc::sample_coloring(o.n, pcc::derive_seed(seed, i)));
      }
      break;
    case pcc::Family::RandomNoMono:
      for (std::uint64_t i = 0; i < o.count; ++i) {
        const auto s = pcc::derive_seed(seed, i);
        emit(pcc::random_no_mono_triangle(o.n, o.k > 0 ? o.k : 3 + static_cast<int>(s % 3), s));
      }
      break;
    case pcc::Family::RandomDegenerate:
      for (std::uint64_t i = 0; i < o.count; ++i) {
        const auto s = pcc::derive_seed(seed, i);
        emit(pcc::random_degenerate(o.n, pcc::random_fibers(o.n, o.k, s), pcc::derive_seed(s, 0)).graph);
      }
      break;
    case pcc::Family::Gallai:
      for (std::uint64_t i = 0; i < o.count; ++i) emit(pcc::gallai_coloring(o.n, pcc::derive_seed(seed, i)).graph);
      break;
  }
  return 0;
}

int run_classify(const std::string& path, const CommonOptions& o) {
  const auto g = pcc::instance_from_json(pcc::read_json_file(path));
  Output out(o.out);
  try {
    const auto r = pcc::classify(g);
    out.stream() << pcc::result_to_json(g, r).dump() << '\n';
    switch (r.tag) {
      case pcc::TrichotomyTag::Pancyclic: return kExitCaseA;
      case pcc::TrichotomyTag::ProperDegenerate: return kExitCaseB;
      case pcc::TrichotomyTag::ExceptionK5: return kExitCaseC;
    }
  } catch (const pcc::Error& e) {
    out.stream() << pcc::Json{{"error", std::string(pcc::to_string(e.kind()))}, {"message", e.what()}}.dump() << '\n';
    if (e.kind() == pcc::ErrorKind::InternalError) {
      dump_instance(o.dump_dir, pcc::canonical_key_hex(g),
                    pcc::Json{{"reason", e.what()}, {"instance", pcc::instance_to_json(g)}});
      return kExitInternal;
    }
    return kExitPrecondition;
  }
  return kExitFailure;
}

int run_sweep(const CommonOptions& o) {
  pcc::SweepConfig config;
  const auto family = pcc::parse_family(o.family);
  if (!family) throw pcc::Error(pcc::ErrorKind::BadFormat, "unknown family " + o.family);
  const auto level = pcc::parse_oracle_level(o.oracle);
  if (!level) throw pcc::Error(pcc::ErrorKind::BadFormat, "unknown oracle level " + o.oracle);
  config.family = *family;
  config.n = o.n;
  config.k = o.k;
  config.seed = effective_seed(o.seed);
  config.count = o.count;
  config.oracle = *level;
  config.workers = o.workers;

  const auto report = pcc::run_sweep(config);
  Output out(o.out);
  out.stream() << pcc::report_to_json(report).dump(2) << '\n';
  for (const auto& f : report.flagged) {
    if (!f.instance.is_null()) {
      dump_instance(o.dump_dir, f.key,
                    pcc::Json{{"reason", f.reason}, {"index", f.index}, {"seed", f.seed}, {"instance", f.instance}});
    }
  }
  std::cerr << "sweep: " << report.instances << " instances in " << report.seconds << " s, "
            << (report.clean() ? "clean" : "FAILURES") << '\n';
  return report.clean() ? 0 : kExitFailure;
}

void add_generation_flags(CLI::App* cmd, CommonOptions& o) {
  cmd->add_option("--family", o.family,
                  "doublePentagon | directedExample | randomNoMono | randomDegenerate | gallai | exhaustive");
  cmd->add_option("--n", o.n, "number of vertices");
  cmd->add_option("--k", o.k, "randomNoMono: color budget; randomDegenerate: fiber count (0 = seed decides)");
  cmd->add_option("--seed", o.seed, "base seed; the PCG_SEED environment variable overrides it");
  cmd->add_option("--count", o.count, "instances for random and sampled families");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Properly colored cycles in edge-colored complete graphs without monochromatic triangles.\n"
               "Environment: PCG_SEED overrides --seed."};
  app.require_subcommand(1);
  CommonOptions o;

  auto* gen = app.add_subcommand("gen", "write instance JSON (one document per line)");
  add_generation_flags(gen, o);
  gen->add_option("--out", o.out, "output file (default: stdout)");

  std::string input;
  auto* cls = app.add_subcommand("classify", "classify an instance; exit 0 (a), 10 (b), 11 (c), 2 (bad input), 3 (internal error)");
  cls->add_option("input", input, "instance JSON file")->required();
  cls->add_option("--out", o.out, "result file (default: stdout)");
  cls->add_option("--dump-dir", o.dump_dir, "where internal-error instances are written");

  auto* sweep = app.add_subcommand("sweep", "classify a family of instances and cross-check them");
  add_generation_flags(sweep, o);
  sweep->add_option("--oracle", o.oracle, "off | partial | full");
  sweep->add_option("--workers", o.workers, "worker threads");
  sweep->add_option("--out", o.out, "report file (default: stdout)");
  sweep->add_option("--dump-dir", o.dump_dir, "where failing instances are written");

  CLI11_PARSE(app, argc, argv);
  try {
    if (*gen) return run_gen(o);
    if (*cls) return run_classify(input, o);
    if (*sweep) return run_sweep(o);
  } catch (const pcc::Error& e) {
    std::cerr << "pcg: " << e.what() << '\n';
    return e.kind() == pcc::ErrorKind::InternalError ? kExitInternal : kExitPrecondition;
  }
  return kExitFailure;
}
