#pragma once

#include <chrono>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "pns/model.hpp"
#include "pns/solver.hpp"

namespace pns {

// Malformed input file; the message carries the line number for syntax
// errors and the offending entity for semantic ones.
class parse_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Instance text format (ASCII, one record per line, '#' starts a comment):
//   2WDP-SC <|T|> <|B|> <|C|>
//   q <t> <q_t_carrier0> ... <q_t_carrierN-1>        (|T| lines)
//   b <bid-id> <carrier-id> <price> <t1> <t2> ...    (|B| lines)
instance parse_instance(std::istream& in);
instance load_instance(const std::filesystem::path& path);

// Canonical serialization: records ordered by id, prices written as the
// shortest round-tripping decimal. Byte-stable for a given instance.
std::string write_instance(const instance& inst);
void save_instance(const instance& inst, const std::filesystem::path& path);

// Approximation-set file:
//   APPROXSET <instance-id> <n>
//   s <f1> <f2> <bid ids...>                         (n lines)
struct approx_set_file {
  std::string instance_id;
  std::vector<objective_vector> vectors;
  std::vector<std::vector<bid_id>> winning_sets;
};

// Lines ordered by (f1, f2); bid ids ascending. instance_id must be free of
// whitespace.
std::string write_approximation_set(const std::string& instance_id,
                                    std::span<const objective_vector> vectors,
                                    std::span<const std::vector<bid_id>> winning_sets);
std::string write_approximation_set(const std::string& instance_id, const archive& a);

approx_set_file parse_approximation_set(std::istream& in);
approx_set_file load_approximation_set(const std::filesystem::path& path);

struct run_metadata {
  std::string instance_id;
  std::string algorithm = "pns";
  std::uint64_t seed = 0;
  solve_params params;
  solve_stats stats;
};

// Writes <stem>.approx and <stem>.meta.json into `directory`. Refuses an
// empty archive; IO failures surface as std::runtime_error naming the path.
struct persisted_run {
  std::filesystem::path approx_path;
  std::filesystem::path metadata_path;
};
persisted_run persist_run(const std::filesystem::path& directory, const std::string& stem,
                          const archive& a, const run_metadata& metadata);

run_metadata load_run_metadata(const std::filesystem::path& path);

}  // namespace pns
