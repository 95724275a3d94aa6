#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace monent::cli {

enum ExitCode : int {
  kOk = 0,
  kInputError = 1,
  kNotConverged = 2,
  kCertificateViolation = 3,
};

struct RunConfig {
  std::string subcommand;
  std::string input;
  std::size_t horizon = 64;
  std::size_t twist_horizon = 64;
  double tol = 1e-10;
  double chain_tol = 2e-2;
  std::vector<std::string> order;  // arrow labels, smallest first
  std::string format = "json";
  bool trace = false;
  std::uint64_t seed = 20240607;
  std::size_t corpus_size = 200;
  std::size_t gb_instances = 50;
  std::size_t max_degree = 0;
  int jobs = 0;
  bool inject_fault = false;
  bool syzygies = false;
  std::vector<std::string> generators;
};

int cmd_report(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_graph(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_gb(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_series(const RunConfig& cfg, std::ostream& out, std::ostream& err);

// Parses argv and dispatches; never throws.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace monent::cli
