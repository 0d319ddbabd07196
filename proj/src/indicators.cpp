#include "pns/indicators.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "pns/numeric_text.hpp"

namespace pns {

normalization_bounds normalization_bounds::from_instance(const instance& inst) {
  normalization_bounds b;
  b.r1 = inst.total_price();
  b.r2 = 0.0;
  b.f1_min = 0.0;
  b.f2_min = inst.total_negated_quality() - 1.0;
  return b;
}

void validate(const normalization_bounds& bounds) {
  if (bounds.r1 == bounds.f1_min || bounds.r2 == bounds.f2_min)
    throw std::invalid_argument("degenerate normalization bounds: reference equals minimum");
}

objective_vector normalize(const normalization_bounds& bounds, const objective_vector& point) {
  validate(bounds);
  return {(point.f1 - bounds.f1_min) / (bounds.r1 - bounds.f1_min),
          (point.f2 - bounds.f2_min) / (bounds.r2 - bounds.f2_min)};
}

double hypervolume_normalized(std::span<const objective_vector> normalized_points,
                              bool strict) {
  std::vector<objective_vector> pts;
  pts.reserve(normalized_points.size());
  for (const auto& p : normalized_points) {
    if (strict && (p.f1 > 1.0 || p.f2 > 1.0 || p.f1 < 0.0 || p.f2 < 0.0))
      throw std::domain_error("hypervolume point outside the unit box");
    if (p.f1 >= 1.0 || p.f2 >= 1.0) continue;  // no dominated area inside the box
    pts.push_back({std::max(p.f1, 0.0), std::max(p.f2, 0.0)});
  }
  if (pts.empty()) return 0.0;
  std::sort(pts.begin(), pts.end(), [](const objective_vector& a, const objective_vector& b) {
    return a.f1 != b.f1 ? a.f1 < b.f1 : a.f2 < b.f2;
  });
  double area = 0.0;
  double staircase = 1.0;  // lowest f2 seen so far along the sweep
  for (std::size_t i = 0; i < pts.size(); ++i) {
    staircase = std::min(staircase, pts[i].f2);
    const double next_x = i + 1 < pts.size() ? std::min(pts[i + 1].f1, 1.0) : 1.0;
    if (next_x > pts[i].f1) area += (next_x - pts[i].f1) * (1.0 - staircase);
  }
  return area;
}

double hypervolume(const normalization_bounds& bounds, std::span<const objective_vector> set,
                   bool strict) {
  std::vector<objective_vector> normalized;
  normalized.reserve(set.size());
  for (const auto& p : set) normalized.push_back(normalize(bounds, p));
  return hypervolume_normalized(normalized, strict);
}

double epsilon_binary(std::span<const objective_vector> a, std::span<const objective_vector> b) {
  if (a.empty() || b.empty()) throw std::invalid_argument("epsilon indicator needs non-empty sets");
  for (const auto& p : a)
    if (!(p.f1 > 0.0) || !(p.f2 > 0.0))
      throw std::domain_error("epsilon indicator requires strictly positive coordinates");
  for (const auto& p : b)
    if (!(p.f1 > 0.0) || !(p.f2 > 0.0))
      throw std::domain_error("epsilon indicator requires strictly positive coordinates");
  double worst = 0.0;
  for (const auto& pb : b) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& pa : a)
      best = std::min(best, std::max(pa.f1 / pb.f1, pa.f2 / pb.f2));
    worst = std::max(worst, best);
  }
  return worst;
}

double epsilon_unary(std::span<const objective_vector> a,
                     std::span<const objective_vector> reference) {
  return epsilon_binary(a, reference);
}

double coverage(std::span<const objective_vector> a, std::span<const objective_vector> b) {
  if (b.empty()) throw std::invalid_argument("coverage needs a non-empty second set");
  std::size_t dominated = 0;
  for (const auto& pb : b) {
    for (const auto& pa : a) {
      if (weakly_dominates(pa, pb)) {
        ++dominated;
        break;
      }
    }
  }
  return static_cast<double>(dominated) / static_cast<double>(b.size());
}

std::vector<objective_vector> reference_union(
    std::span<const std::vector<objective_vector>> sets) {
  if (sets.empty()) throw std::invalid_argument("reference union needs at least one set");
  std::vector<objective_vector> all;
  for (const auto& s : sets) all.insert(all.end(), s.begin(), s.end());
  return non_dominated_subset(std::move(all));
}

std::vector<objective_vector> normalize_shifted(const normalization_bounds& bounds,
                                                std::span<const objective_vector> set,
                                                double delta) {
  std::vector<objective_vector> out;
  out.reserve(set.size());
  for (const auto& p : set) {
    const auto n = normalize(bounds, p);
    out.push_back({n.f1 + delta, n.f2 + delta});
  }
  return out;
}

std::string indicator_report::csv_header() {
  return "instance,algorithm,seed,i_hv,i_eps,i_c,set_size,wall_time_s";
}

std::string indicator_report::csv_row() const {
  return instance_id + "," + algorithm + "," + std::to_string(seed) + "," + format_double(i_hv) +
         "," + format_double(i_eps) + "," + format_double(i_c) + "," + std::to_string(set_size) +
         "," + format_double(wall_time_s);
}

}  // namespace pns
