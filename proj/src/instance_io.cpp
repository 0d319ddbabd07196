#include "pns/instance_io.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <sstream>

#include "json.hpp"
#include "pns/numeric_text.hpp"

namespace pns {

namespace {

std::vector<std::string_view> tokenize(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
    std::size_t end = pos;
    while (end < line.size() && line[end] != ' ' && line[end] != '\t') ++end;
    if (end > pos) tokens.push_back(line.substr(pos, end - pos));
    pos = end;
  }
  return tokens;
}

// Reads the next record, skipping blank lines and '#' comments.
bool next_record(std::istream& in, std::size_t& line_no, std::vector<std::string_view>& tokens,
                 std::string& storage) {
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    storage = std::move(line);
    tokens = tokenize(storage);
    if (!tokens.empty()) return true;
  }
  return false;
}

[[noreturn]] void fail(std::size_t line_no, const std::string& what) {
  throw parse_error("line " + std::to_string(line_no) + ": " + what);
}

std::int64_t require_int(std::string_view token, std::size_t line_no, const char* what) {
  const auto v = parse_int(token);
  if (!v) fail(line_no, std::string("expected ") + what + ", got '" + std::string(token) + "'");
  return *v;
}

double require_double(std::string_view token, std::size_t line_no, const char* what) {
  const auto v = parse_double(token);
  if (!v) fail(line_no, std::string("expected ") + what + ", got '" + std::string(token) + "'");
  return *v;
}

}  // namespace

instance parse_instance(std::istream& in) {
  std::size_t line_no = 0;
  std::vector<std::string_view> tokens;
  std::string storage;

  if (!next_record(in, line_no, tokens, storage)) throw parse_error("empty instance file");
  if (tokens[0] != "2WDP-SC" || tokens.size() != 4)
    fail(line_no, "expected header '2WDP-SC <|T|> <|B|> <|C|>'");
  const auto num_contracts = require_int(tokens[1], line_no, "contract count");
  const auto num_bids = require_int(tokens[2], line_no, "bid count");
  const auto num_carriers = require_int(tokens[3], line_no, "carrier count");
  if (num_contracts < 1 || num_bids < 1 || num_carriers < 1)
    fail(line_no, "header counts must be positive");

  std::vector<std::vector<std::int32_t>> quality(
      static_cast<std::size_t>(num_contracts));
  for (std::int64_t row = 0; row < num_contracts; ++row) {
    if (!next_record(in, line_no, tokens, storage)) fail(line_no + 1, "missing quality row");
    if (tokens[0] != "q") fail(line_no, "expected a 'q' record");
    if (tokens.size() != static_cast<std::size_t>(num_carriers) + 2)
      fail(line_no, "quality row needs one value per carrier");
    const auto t = require_int(tokens[1], line_no, "contract id");
    if (t < 0 || t >= num_contracts)
      fail(line_no, "unknown contract " + std::to_string(t));
    auto& dest = quality[static_cast<std::size_t>(t)];
    if (!dest.empty()) fail(line_no, "duplicate quality row for contract " + std::to_string(t));
    dest.reserve(static_cast<std::size_t>(num_carriers));
    for (std::size_t i = 2; i < tokens.size(); ++i)
      dest.push_back(
          static_cast<std::int32_t>(require_int(tokens[i], line_no, "quality value")));
  }

  std::vector<bid> bids(static_cast<std::size_t>(num_bids));
  std::vector<std::uint8_t> seen(static_cast<std::size_t>(num_bids), 0);
  for (std::int64_t row = 0; row < num_bids; ++row) {
    if (!next_record(in, line_no, tokens, storage)) fail(line_no + 1, "missing bid record");
    if (tokens[0] != "b") fail(line_no, "expected a 'b' record");
    if (tokens.size() < 5) fail(line_no, "bid record needs id, carrier, price and contracts");
    const auto id = require_int(tokens[1], line_no, "bid id");
    if (id < 0 || id >= num_bids) fail(line_no, "bid id " + std::to_string(id) + " out of range");
    if (seen[static_cast<std::size_t>(id)])
      fail(line_no, "duplicate bid id " + std::to_string(id));
    seen[static_cast<std::size_t>(id)] = 1;
    bid& b = bids[static_cast<std::size_t>(id)];
    b.carrier = static_cast<carrier_id>(require_int(tokens[2], line_no, "carrier id"));
    b.price = require_double(tokens[3], line_no, "price");
    for (std::size_t i = 4; i < tokens.size(); ++i)
      b.bundle.push_back(
          static_cast<contract_id>(require_int(tokens[i], line_no, "contract id")));
  }

  if (next_record(in, line_no, tokens, storage)) fail(line_no, "unexpected trailing record");

  try {
    return instance(static_cast<std::int32_t>(num_contracts),
                    static_cast<std::int32_t>(num_carriers), std::move(quality),
                    std::move(bids));
  } catch (const std::invalid_argument& e) {
    throw parse_error(e.what());
  }
}

instance load_instance(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open instance file " + path.string());
  try {
    return parse_instance(in);
  } catch (const parse_error& e) {
    throw parse_error(path.string() + ": " + e.what());
  }
}

std::string write_instance(const instance& inst) {
  std::string out;
  out += "2WDP-SC " + std::to_string(inst.num_contracts()) + " " +
         std::to_string(inst.num_bids()) + " " + std::to_string(inst.num_carriers()) + "\n";
  for (contract_id t = 0; t < inst.num_contracts(); ++t) {
    out += "q " + std::to_string(t);
    for (carrier_id c = 0; c < inst.num_carriers(); ++c)
      out += " " + std::to_string(inst.quality(t, c));
    out += "\n";
  }
  for (bid_id b = 0; b < inst.num_bids(); ++b) {
    const bid& bd = inst.bid_at(b);
    out += "b " + std::to_string(b) + " " + std::to_string(bd.carrier) + " " +
           format_double(bd.price);
    for (contract_id t : bd.bundle) out += " " + std::to_string(t);
    out += "\n";
  }
  return out;
}

void save_instance(const instance& inst, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out << write_instance(inst);
  if (!out) throw std::runtime_error("failed writing " + path.string());
}

namespace {

bool vector_order(const objective_vector& a, const objective_vector& b) {
  return a.f1 != b.f1 ? a.f1 < b.f1 : a.f2 < b.f2;
}

}  // namespace

std::string write_approximation_set(const std::string& instance_id,
                                    std::span<const objective_vector> vectors,
                                    std::span<const std::vector<bid_id>> winning_sets) {
  if (vectors.size() != winning_sets.size())
    throw std::invalid_argument("approximation set needs one winning set per vector");
  if (instance_id.empty() ||
      instance_id.find_first_of(" \t\r\n") != std::string::npos)
    throw std::invalid_argument("instance id must be a non-empty whitespace-free token");

  std::vector<std::size_t> order(vectors.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (vectors[a] != vectors[b]) return vector_order(vectors[a], vectors[b]);
    return winning_sets[a] < winning_sets[b];
  });

  std::string out = "APPROXSET " + instance_id + " " + std::to_string(vectors.size()) + "\n";
  for (std::size_t i : order) {
    out += "s " + format_double(vectors[i].f1) + " " + format_double(vectors[i].f2);
    for (bid_id b : winning_sets[i]) out += " " + std::to_string(b);
    out += "\n";
  }
  return out;
}

std::string write_approximation_set(const std::string& instance_id, const archive& a) {
  std::vector<objective_vector> vectors;
  std::vector<std::vector<bid_id>> winning;
  vectors.reserve(a.size());
  winning.reserve(a.size());
  for (const auto& e : a.entries()) {
    vectors.push_back(e.vec);
    winning.push_back(e.sol.winning());
  }
  return write_approximation_set(instance_id, vectors, winning);
}

approx_set_file parse_approximation_set(std::istream& in) {
  std::size_t line_no = 0;
  std::vector<std::string_view> tokens;
  std::string storage;

  if (!next_record(in, line_no, tokens, storage))
    throw parse_error("empty approximation-set file");
  if (tokens[0] != "APPROXSET" || tokens.size() != 3)
    fail(line_no, "expected header 'APPROXSET <instance-id> <n>'");
  approx_set_file result;
  result.instance_id = std::string(tokens[1]);
  const auto n = require_int(tokens[2], line_no, "solution count");
  if (n < 0) fail(line_no, "solution count must be non-negative");

  for (std::int64_t i = 0; i < n; ++i) {
    if (!next_record(in, line_no, tokens, storage)) fail(line_no + 1, "missing solution record");
    if (tokens[0] != "s") fail(line_no, "expected an 's' record");
    if (tokens.size() < 4) fail(line_no, "solution record needs f1, f2 and at least one bid id");
    objective_vector vec;
    vec.f1 = require_double(tokens[1], line_no, "f1");
    vec.f2 = require_double(tokens[2], line_no, "f2");
    std::vector<bid_id> ids;
    for (std::size_t j = 3; j < tokens.size(); ++j)
      ids.push_back(static_cast<bid_id>(require_int(tokens[j], line_no, "bid id")));
    result.vectors.push_back(vec);
    result.winning_sets.push_back(std::move(ids));
  }
  if (next_record(in, line_no, tokens, storage)) fail(line_no, "unexpected trailing record");
  return result;
}

approx_set_file load_approximation_set(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open approximation-set file " + path.string());
  try {
    return parse_approximation_set(in);
  } catch (const parse_error& e) {
    throw parse_error(path.string() + ": " + e.what());
  }
}

persisted_run persist_run(const std::filesystem::path& directory, const std::string& stem,
                          const archive& a, const run_metadata& metadata) {
  if (a.empty()) throw std::invalid_argument("refusing to persist an empty archive");
  std::filesystem::create_directories(directory);

  persisted_run paths;
  paths.approx_path = directory / (stem + ".approx");
  paths.metadata_path = directory / (stem + ".meta.json");

  {
    std::ofstream out(paths.approx_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + paths.approx_path.string());
    out << write_approximation_set(metadata.instance_id, a);
    if (!out) throw std::runtime_error("failed writing " + paths.approx_path.string());
  }
  {
    nlohmann::json j;
    j["instance"] = metadata.instance_id;
    j["algorithm"] = metadata.algorithm;
    j["seed"] = metadata.seed;
    j["params"] = {
        {"sectors", metadata.params.drc.sectors},
        {"l_max", metadata.params.drc.l_max},
        {"destroy_strategy", metadata.params.plns.strategy.rates},
        {"time_limit_ms", metadata.params.plns.time_limit.count()},
    };
    j["wall_time_s"] = metadata.stats.wall_time_s;
    j["constructions"] = metadata.stats.constructions;
    j["plns_iterations"] = metadata.stats.plns_iterations;
    j["archive_size"] = a.size();
    std::ofstream out(paths.metadata_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + paths.metadata_path.string());
    out << j.dump(2) << "\n";
    if (!out) throw std::runtime_error("failed writing " + paths.metadata_path.string());
  }
  return paths;
}

run_metadata load_run_metadata(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open metadata file " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(path.string() + ": " + e.what());
  }
  run_metadata m;
  m.instance_id = j.value("instance", "");
  m.algorithm = j.value("algorithm", "");
  m.seed = j.value("seed", std::uint64_t{0});
  if (j.contains("params")) {
    const auto& p = j["params"];
    m.params.drc.sectors = p.value("sectors", m.params.drc.sectors);
    m.params.drc.l_max = p.value("l_max", m.params.drc.l_max);
    if (p.contains("destroy_strategy"))
      m.params.plns.strategy.rates = p["destroy_strategy"].get<std::vector<std::int32_t>>();
    m.params.plns.time_limit =
        std::chrono::milliseconds(p.value("time_limit_ms", std::int64_t{0}));
  }
  m.stats.wall_time_s = j.value("wall_time_s", 0.0);
  m.stats.constructions = j.value("constructions", std::uint64_t{0});
  m.stats.plns_iterations = j.value("plns_iterations", std::uint64_t{0});
  return m;
}

}  // namespace pns
