#include "pns/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <thread>

#include "pns/numeric_text.hpp"
#include "pns/oracle.hpp"

namespace pns::cli {

std::filesystem::path default_out_dir() {
  if (const char* dir = std::getenv("PNS_OUT_DIR"); dir && *dir)
    return std::filesystem::path(dir);
  return std::filesystem::current_path();
}

std::chrono::milliseconds parse_duration(const std::string& text) {
  std::string_view v(text);
  double scale = 1000.0;  // bare numbers are seconds
  if (v.ends_with("ms")) {
    scale = 1.0;
    v.remove_suffix(2);
  } else if (v.ends_with("s")) {
    v.remove_suffix(1);
  }
  const auto value = parse_double(v);
  if (!value || *value < 0.0)
    throw std::invalid_argument("invalid duration '" + text + "'; use e.g. 300s, 5.5s or 250ms");
  return std::chrono::milliseconds(static_cast<std::int64_t>(*value * scale + 0.5));
}

destroy_strategy parse_destroy_strategy(const std::string& text) {
  destroy_strategy strategy;
  strategy.rates.clear();
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto comma = std::min(text.find(',', pos), text.size());
    const auto rate = parse_int(std::string_view(text).substr(pos, comma - pos));
    if (!rate) throw std::invalid_argument("invalid destroy strategy '" + text + "'");
    strategy.rates.push_back(static_cast<std::int32_t>(*rate));
    pos = comma + 1;
  }
  validate(strategy);
  return strategy;
}

namespace {

std::string instance_id_of(const std::filesystem::path& path) {
  return path.stem().string();
}

}  // namespace

solve_outcome cmd_solve(const solve_config& config, std::ostream& log) {
  const instance inst = load_instance(config.instance_path);

  solve_params params;
  params.drc.sectors = config.sectors;
  params.drc.l_max = config.l_max;
  params.drc.rng_seed = config.seed;
  params.plns.strategy = config.strategy;
  params.plns.time_limit = config.time_limit;
  params.plns.rng_seed = config.seed;

  solve_result result = pns_solve(inst, params);

  run_metadata meta;
  meta.instance_id = instance_id_of(config.instance_path);
  meta.seed = config.seed;
  meta.params = params;
  meta.stats = result.stats;
  const std::string stem = meta.instance_id + "_seed" + std::to_string(config.seed);

  solve_outcome outcome;
  outcome.files = persist_run(config.out_dir, stem, result.front, meta);
  outcome.stats = result.stats;
  outcome.archive_size = result.front.size();
  const auto vectors = result.front.objective_vectors();
  outcome.f1_extreme = vectors.front();  // sorted by f1: first is cheapest
  outcome.f2_extreme = vectors.back();   // last has the best quality

  const auto bounds = normalization_bounds::from_instance(inst);
  log << "instance " << meta.instance_id << ": |A| = " << outcome.archive_size
      << ", f1 in [" << format_double(outcome.f1_extreme.f1) << ", "
      << format_double(outcome.f2_extreme.f1) << "], f2 in ["
      << format_double(outcome.f2_extreme.f2) << ", " << format_double(outcome.f1_extreme.f2)
      << "], I_HV = " << format_double(hypervolume(bounds, vectors)) << ", "
      << result.stats.constructions << " constructions, " << result.stats.plns_iterations
      << " improvement iterations, " << format_double(result.stats.wall_time_s) << " s\n"
      << "wrote " << outcome.files.approx_path.string() << "\n";
  return outcome;
}

std::vector<indicator_report> cmd_evaluate(const evaluate_config& config, std::ostream& out) {
  if (config.set_paths.empty())
    throw std::invalid_argument("evaluate needs at least one approximation-set file");
  const instance inst = load_instance(config.instance_path);
  const auto bounds = normalization_bounds::from_instance(inst);

  std::vector<approx_set_file> sets;
  sets.reserve(config.set_paths.size());
  for (const auto& p : config.set_paths) {
    sets.push_back(load_approximation_set(p));
    if (sets.back().instance_id != sets.front().instance_id)
      throw std::invalid_argument("approximation sets reference different instances: '" +
                                  sets.front().instance_id + "' vs '" +
                                  sets.back().instance_id + "' (" + p.string() + ")");
  }

  std::vector<objective_vector> reference;
  if (config.ref_front_path) {
    auto ref_file = load_approximation_set(*config.ref_front_path);
    if (ref_file.instance_id != sets.front().instance_id)
      throw std::invalid_argument("reference front references instance '" +
                                  ref_file.instance_id + "', sets reference '" +
                                  sets.front().instance_id + "'");
    reference = non_dominated_subset(std::move(ref_file.vectors));
  } else {
    std::vector<std::vector<objective_vector>> all;
    all.reserve(sets.size());
    for (const auto& s : sets) all.push_back(s.vectors);
    reference = reference_union(all);
  }
  const auto reference_shifted = normalize_shifted(bounds, reference);

  std::vector<indicator_report> reports;
  out << indicator_report::csv_header() << "\n";
  for (std::size_t i = 0; i < sets.size(); ++i) {
    indicator_report r;
    r.instance_id = sets[i].instance_id;
    r.algorithm = config.set_paths[i].stem().string();
    const auto meta_path =
        config.set_paths[i].parent_path() /
        (config.set_paths[i].stem().string() + ".meta.json");
    if (std::filesystem::exists(meta_path)) {
      const auto meta = load_run_metadata(meta_path);
      if (!meta.algorithm.empty()) r.algorithm = meta.algorithm;
      r.seed = meta.seed;
      r.wall_time_s = meta.stats.wall_time_s;
    }
    r.set_size = sets[i].vectors.size();
    r.i_hv = hypervolume(bounds, sets[i].vectors);
    r.i_eps = epsilon_binary(normalize_shifted(bounds, sets[i].vectors), reference_shifted);
    r.i_c = coverage(sets[i].vectors, reference);
    out << r.csv_row() << "\n";
    reports.push_back(std::move(r));
  }

  if (config.out_csv) {
    std::ofstream file(*config.out_csv, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open " + config.out_csv->string());
    file << indicator_report::csv_header() << "\n";
    for (const auto& r : reports) file << r.csv_row() << "\n";
    if (!file) throw std::runtime_error("failed writing " + config.out_csv->string());
  }
  return reports;
}

std::filesystem::path cmd_generate(const generate_config& config, std::ostream& log) {
  const instance inst = generate_instance(config.gen);
  std::filesystem::path out = config.out_path.value_or(
      default_out_dir() / (instance_class_name(config.gen.bids, config.gen.contracts) + "_s" +
                           std::to_string(config.gen.seed) + ".wdp"));
  save_instance(inst, out);
  log << "wrote " << out.string() << " (" << inst.num_contracts() << " contracts, "
      << inst.num_bids() << " bids, " << inst.num_carriers() << " carriers)\n";
  return out;
}

std::vector<ttt_row> cmd_ttt(const ttt_config& config, std::ostream& out) {
  if (config.runs < 1) throw std::invalid_argument("ttt needs at least one run");
  if (config.jobs < 1) throw std::invalid_argument("ttt needs at least one worker");
  const instance inst = load_instance(config.instance_path);
  const auto bounds = normalization_bounds::from_instance(inst);
  const double limit_s = std::chrono::duration<double>(config.run_limit).count();

  std::vector<ttt_row> rows(static_cast<std::size_t>(config.runs));
  std::atomic<std::int32_t> next{0};
  const auto worker = [&] {
    for (std::int32_t r; (r = next.fetch_add(1)) < config.runs;) {
      const std::uint64_t seed = config.base_seed + static_cast<std::uint64_t>(r);
      solve_params params;
      params.drc.sectors = config.sectors;
      params.drc.l_max = config.l_max;
      params.drc.rng_seed = seed;
      params.plns.strategy = config.strategy;
      params.plns.time_limit = config.run_limit;
      params.plns.rng_seed = seed;

      const auto start = std::chrono::steady_clock::now();
      const auto elapsed_s = [&] {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      };
      bool hit = false;
      double hit_time = 0.0;
      solve_callbacks callbacks;
      callbacks.on_insert = [&](const archive& a) {
        if (hit) return;
        if (hypervolume(bounds, a.objective_vectors()) >= config.target_hv) {
          hit = true;
          hit_time = elapsed_s();
        }
      };
      callbacks.should_stop = [&](const archive&) { return hit || elapsed_s() >= limit_s; };
      pns_solve(inst, params, callbacks);

      ttt_row& row = rows[static_cast<std::size_t>(r)];
      row.seed = seed;
      row.censored = !hit || hit_time >= limit_s;
      row.time_s = row.censored ? limit_s : hit_time;
    }
  };
  if (config.jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    for (std::int32_t j = 0; j < config.jobs; ++j) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
  }

  std::stable_sort(rows.begin(), rows.end(),
                   [](const ttt_row& a, const ttt_row& b) { return a.time_s < b.time_s; });
  for (std::size_t i = 0; i < rows.size(); ++i)
    rows[i].plot_position = static_cast<double>(i + 1) / static_cast<double>(rows.size() + 1);

  const auto emit = [&](std::ostream& os) {
    os << "time_s,plot_position,censored,seed\n";
    for (const auto& r : rows)
      os << format_double(r.time_s) << "," << format_double(r.plot_position) << ","
         << (r.censored ? 1 : 0) << "," << r.seed << "\n";
  };
  emit(out);
  if (config.out_csv) {
    std::ofstream file(*config.out_csv, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open " + config.out_csv->string());
    emit(file);
    if (!file) throw std::runtime_error("failed writing " + config.out_csv->string());
  }
  return rows;
}

std::filesystem::path cmd_front(const front_config& config, std::ostream& log) {
  const instance inst = load_instance(config.instance_path);
  const exact_front front = enumerate_front(inst, config.bid_limit);
  const std::filesystem::path out = config.out_path.value_or(
      default_out_dir() / (instance_id_of(config.instance_path) + "_front.approx"));
  std::ofstream file(out, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open " + out.string());
  file << write_approximation_set(instance_id_of(config.instance_path), front.vectors,
                                  front.witnesses);
  if (!file) throw std::runtime_error("failed writing " + out.string());
  log << "wrote " << out.string() << " (" << front.vectors.size() << " Pareto-optimal vectors)\n";
  return out;
}

}  // namespace pns::cli
