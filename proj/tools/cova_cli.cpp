#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "cova/bench.hpp"
#include "cova/covers.hpp"
#include "cova/enumerate.hpp"
#include "cova/io.hpp"
#include "cova/sima.hpp"
#include "cova/transform.hpp"
#include "cova/validate.hpp"

namespace {

int run(int argc, char** argv) {
  CLI::App app{"string regularities: border arrays, cover arrays, SIMA inference"};
  app.require_subcommand(1);

  std::string file;
  bool use_oracle = false, use_max_oracle = false;

  auto* border = app.add_subcommand("border", "border array of a string file");
  border->add_option("file", file)->required();

  auto* cover = app.add_subcommand("cover", "minimal cover array of a string file");
  cover->add_option("file", file)->required();
  cover->add_flag("--oracle", use_oracle, "use the brute-force minimal oracle");
  cover->add_flag("--max-oracle", use_max_oracle, "use the brute-force maximal oracle");

  auto* maxtomin = app.add_subcommand("maxtomin", "maximal-to-minimal array transform");
  maxtomin->add_option("file", file)->required();

  auto* prune_cmd = app.add_subcommand("prune", "prune a minimal cover array");
  prune_cmd->add_option("file", file)->required();

  auto* infer_cmd = app.add_subcommand("infer", "infer a binary string from a cover array");
  infer_cmd->add_option("file", file)->required();

  auto* validate_cmd = app.add_subcommand("validate", "check whether an array is a valid minimal cover array");
  validate_cmd->add_option("file", file)->required();

  int enum_n = 0, enum_k = 2;
  bool count_only = false;
  auto* enum_cmd = app.add_subcommand("enumerate", "distinct minimal cover arrays of length n");
  enum_cmd->add_option("n", enum_n)->required()->check(CLI::Range(1, 14));
  enum_cmd->add_option("k", enum_k)->check(CLI::Range(1, 26));
  enum_cmd->add_flag("--count", count_only, "print only the cardinality");

  int fib_min = 4, fib_max = 25;
  std::string csv_path;
  std::size_t random_n = 0;
  auto* bench_cmd = app.add_subcommand("bench", "timing and operation counts of the inference pipeline");
  bench_cmd->add_option("--fib-min", fib_min)->check(CLI::Range(4, 34));
  bench_cmd->add_option("--fib-max", fib_max)->check(CLI::Range(4, 34));
  bench_cmd->add_option("--csv", csv_path, "write CSV to this path instead of stdout");
  bench_cmd->add_option("--random", random_n, "bench a uniform random binary string of this length instead");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (border->parsed()) {
      std::cout << cova::format_array(cova::border_array(cova::read_text_file(file)).values) << '\n';
    } else if (cover->parsed()) {
      const cova::Text x = cova::read_text_file(file);
      const cova::CoverArray c = use_max_oracle ? cova::maximal_cover_array_oracle(x)
                                : use_oracle    ? cova::minimal_cover_array_oracle(x)
                                                : cova::minimal_cover_array(x);
      std::cout << cova::format_array(c.values) << '\n';
    } else if (maxtomin->parsed()) {
      cova::CoverArray c{cova::read_array_file(file), cova::CoverKind::maximal};
      std::cout << cova::format_array(cova::max_to_min(c).values) << '\n';
    } else if (prune_cmd->parsed()) {
      cova::CoverArray c{cova::read_array_file(file), cova::CoverKind::minimal};
      std::cout << cova::format_array(cova::prune(c).values) << '\n';
    } else if (infer_cmd->parsed()) {
      cova::CoverArray c{cova::read_array_file(file), cova::CoverKind::unknown};
      std::cout << cova::infer(c).text << '\n';
    } else if (validate_cmd->parsed()) {
      const auto report = cova::validate(cova::read_array_file(file));
      if (report.valid) {
        std::cout << "VALID " << *report.witness << '\n';
      } else {
        std::cout << "INVALID " << report.violated << ' ' << report.pos_i;
        if (report.pos_j != 0) std::cout << ' ' << report.pos_j;
        std::cout << '\n';
        return 1;
      }
    } else if (enum_cmd->parsed()) {
      const auto arrays = cova::distinct_cover_arrays(enum_n, enum_k);
      if (count_only) {
        std::cout << arrays.size() << '\n';
      } else {
        for (const auto& a : arrays) std::cout << cova::format_array(a) << '\n';
      }
    } else if (bench_cmd->parsed()) {
      std::vector<cova::BenchRecord> records;
      if (random_n > 0) {
        const auto res = cova::bench_random(random_n);
        records.push_back(res.record);
        std::cerr << "alphabet size of inferred string: " << res.alphabet_size << '\n';
      } else {
        records = cova::bench_run(fib_min, fib_max);
      }
      if (csv_path.empty()) {
        cova::write_csv(std::cout, records);
      } else {
        std::ofstream out(csv_path);
        if (!out) throw std::runtime_error("cannot open file: " + csv_path);
        cova::write_csv(out, records);
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
