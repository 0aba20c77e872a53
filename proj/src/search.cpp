#include "buffon/search.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <random>
#include <stdexcept>

namespace buffon {

namespace {

// Segment lengths never drop below this fraction of the mean length.
constexpr double kMinLengthFraction = 1e-3;

// The chord of the domain along the line through p0 and p1, with the
// parameters of p0 and p1 measured from chord.a toward chord.b.
struct ChordFrame {
  Vec2 origin;
  Vec2 dir;
  double extent = 0.0;
  double t0 = 0.0;
  double t1 = 0.0;
};

std::optional<ChordFrame> chord_frame(const ConvexDomain& domain, Vec2 p0, Vec2 p1) {
  const Vec2 d = p1 - p0;
  const double len = norm(d);
  if (!(len > 0.0)) return std::nullopt;
  const double theta = std::atan2(d.y, d.x) + kPi / 2.0;
  const LineCoords line = normalize_line(theta, dot(p0, unit(theta)));
  const auto chord = domain.chord(line);
  if (!chord || chord->length <= 0.0) return std::nullopt;
  ChordFrame f;
  f.origin = chord->a;
  f.dir = (1.0 / chord->length) * (chord->b - chord->a);
  f.extent = chord->length;
  f.t0 = dot(p0 - f.origin, f.dir);
  f.t1 = dot(p1 - f.origin, f.dir);
  if (f.t0 > f.t1) std::swap(f.t0, f.t1);
  return f;
}

// A sub-segment of the frame's chord with the requested length, centered as
// close as possible to the frame's current midpoint.
std::optional<Segment> fit_length(const ChordFrame& f, double target) {
  if (!(target > 0.0) || target > f.extent) return std::nullopt;
  const double half = 0.5 * target;
  const double mid = std::clamp(0.5 * (f.t0 + f.t1), half, f.extent - half);
  return Segment{f.origin + (mid - half) * f.dir, f.origin + (mid + half) * f.dir};
}

// Incrementally maintained Monte Carlo objective over a fixed line sample.
class McState {
 public:
  McState(const ConvexDomain& domain, double factor, std::size_t samples, std::uint64_t seed)
      : lines_(sample_lines(domain, samples, seed)),
        targets_(lines_.size()),
        counts_(lines_.size(), 0),
        degenerate_(lines_.size(), 0) {
    for (std::size_t j = 0; j < lines_.size(); ++j) targets_[j] = factor * domain.chord_length(lines_[j]);
  }

  void apply(const Segment& s, int sign) {
    const Primitive p = s;
    for (std::size_t j = 0; j < lines_.size(); ++j) {
      const IntersectionResult r = intersect_line_primitive(lines_[j], p);
      counts_[j] += sign * r.count;
      degenerate_[j] += sign * (r.degenerate ? 1 : 0);
    }
  }

  double objective() const {
    double best = 0.0;
    for (std::size_t j = 0; j < lines_.size(); ++j) {
      if (degenerate_[j] != 0) continue;
      best = std::max(best, std::abs(static_cast<double>(counts_[j]) - targets_[j]));
    }
    return best;
  }

 private:
  std::vector<LineCoords> lines_;
  std::vector<double> targets_;
  std::vector<int> counts_;
  std::vector<int> degenerate_;
};

RectifiableSet to_set(const std::vector<Segment>& segments) {
  std::vector<Primitive> prims(segments.begin(), segments.end());
  return RectifiableSet(std::move(prims));
}

}  // namespace

void validate(const SearchConfig& config) {
  if (config.segment_count < 1) throw std::invalid_argument("search: segment_count must be at least 1");
  if (!(config.length_budget > 0.0) || !std::isfinite(config.length_budget))
    throw std::invalid_argument("search: length budget must be positive");
  if (!(config.proposal_scale > 0.0)) throw std::invalid_argument("search: proposal_scale must be positive");
  if (const auto* mc = std::get_if<McObjective>(&config.evaluator); mc && mc->samples < 1)
    throw std::invalid_argument("search: Monte Carlo objective needs at least one sample");
  if (const auto* sc = std::get_if<ScanObjective>(&config.evaluator); sc && sc->theta_count < 4)
    throw std::invalid_argument("search: scan objective needs theta_count >= 4");
  if (const auto* sa = std::get_if<Annealing>(&config.schedule);
      sa && (!(sa->initial_temperature > 0.0) || !(sa->cooling > 0.0) || sa->cooling > 1.0))
    throw std::invalid_argument("search: annealing needs T0 > 0 and cooling in (0, 1]");
}

RectifiableSet random_segment_set(const ConvexDomain& domain, std::size_t count, double length, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const auto sx = domain.support(0.0);
  const auto sy = domain.support(kPi / 2.0);
  std::uniform_real_distribution<double> ux(sx.lo, sx.hi);
  std::uniform_real_distribution<double> uy(sy.lo, sy.hi);
  std::uniform_real_distribution<double> angle(0.0, kPi);
  const double each = length / static_cast<double>(count);

  std::vector<Segment> segments;
  segments.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    bool placed = false;
    for (int attempt = 0; attempt < 10000 && !placed; ++attempt) {
      const Vec2 c{ux(rng), uy(rng)};
      const double phi = angle(rng);
      if (!domain.contains(c, 0.0)) continue;
      const Vec2 u = unit(phi);
      const auto frame = chord_frame(domain, c - 0.5 * each * u, c + 0.5 * each * u);
      if (!frame) continue;
      if (const auto seg = fit_length(*frame, each)) {
        segments.push_back(*seg);
        placed = true;
      }
    }
    if (!placed) throw std::invalid_argument("random_segment_set: segments too long for the domain");
  }
  return to_set(segments);
}

SearchResult optimize(const ConvexDomain& domain, const SearchConfig& config, const SearchObserver& observer) {
  validate(config);
  const double budget = config.length_budget;
  const double factor = crofton_factor(budget, domain);
  const double min_length = kMinLengthFraction * budget / static_cast<double>(config.segment_count);

  std::vector<Segment> segments;
  {
    const RectifiableSet init = random_segment_set(domain, config.segment_count, budget, config.seed);
    for (const Primitive& p : init.primitives()) segments.push_back(std::get<Segment>(p));
  }

  std::optional<McState> mc;
  if (const auto* m = std::get_if<McObjective>(&config.evaluator)) {
    mc.emplace(domain, factor, m->samples, config.seed ^ 0x9e3779b97f4a7c15ULL);
    for (const Segment& s : segments) mc->apply(s, +1);
  }
  auto full_objective = [&]() {
    if (mc) return mc->objective();
    ScanConfig sc;
    sc.theta_count = std::get<ScanObjective>(config.evaluator).theta_count;
    sc.factor_override = factor;
    sc.certify = false;
    sc.threads = config.threads;
    return sup_discrepancy_scan(to_set(segments), domain, sc).sup_value;
  };

  SearchResult result;
  double current = full_objective();
  result.initial_objective = current;
  result.best_objective = current;
  std::vector<Segment> best = segments;

  std::mt19937_64 rng(config.seed + 1);
  std::normal_distribution<double> jitter(0.0, config.proposal_scale);
  std::uniform_real_distribution<double> unit01(0.0, 1.0);
  std::uniform_int_distribution<std::size_t> pick(0, segments.size() - 1);
  double temperature = 0.0;
  if (const auto* sa = std::get_if<Annealing>(&config.schedule)) temperature = sa->initial_temperature;

  for (std::size_t it = 1; it <= config.iterations; ++it) {
    const std::size_t i = pick(rng);
    const Segment old_i = segments[i];
    const Vec2 q0 = old_i.p0 + Vec2{jitter(rng), jitter(rng)};
    const Vec2 q1 = old_i.p1 + Vec2{jitter(rng), jitter(rng)};

    // Clip the jittered segment to the domain; a partner segment absorbs the
    // change in length so the total stays on budget.
    std::optional<Segment> new_i;
    std::optional<std::size_t> partner;
    std::optional<Segment> new_partner;
    if (const auto frame = chord_frame(domain, q0, q1)) {
      const double t0 = std::max(frame->t0, 0.0);
      const double t1 = std::min(frame->t1, frame->extent);
      const double old_len = norm(old_i.p1 - old_i.p0);
      if (segments.size() == 1) {
        new_i = fit_length(*frame, old_len);
      } else if (t1 - t0 >= min_length) {
        std::size_t j = pick(rng);
        while (j == i) j = pick(rng);
        const double clipped = t1 - t0;
        const double partner_len = norm(segments[j].p1 - segments[j].p0) - (clipped - old_len);
        if (partner_len >= min_length) {
          const auto pframe = chord_frame(domain, segments[j].p0, segments[j].p1);
          if (pframe) new_partner = fit_length(*pframe, partner_len);
          if (new_partner) {
            new_i = Segment{frame->origin + t0 * frame->dir, frame->origin + t1 * frame->dir};
            partner = j;
          }
        }
      }
    }

    bool accepted = false;
    if (new_i) {
      const std::optional<Segment> old_partner = partner ? std::optional(segments[*partner]) : std::nullopt;
      if (mc) {
        mc->apply(old_i, -1);
        mc->apply(*new_i, +1);
        if (partner) {
          mc->apply(*old_partner, -1);
          mc->apply(*new_partner, +1);
        }
      }
      segments[i] = *new_i;
      if (partner) segments[*partner] = *new_partner;
      const double candidate = full_objective();

      if (std::holds_alternative<Greedy>(config.schedule)) {
        accepted = candidate <= current;
      } else {
        accepted = candidate <= current || unit01(rng) < std::exp(-(candidate - current) / temperature);
      }
      if (accepted) {
        current = candidate;
        if (current < result.best_objective) {
          result.best_objective = current;
          best = segments;
        }
      } else {
        if (mc) {
          mc->apply(*new_i, -1);
          mc->apply(old_i, +1);
          if (partner) {
            mc->apply(*new_partner, -1);
            mc->apply(*old_partner, +1);
          }
        }
        segments[i] = old_i;
        if (partner) segments[*partner] = *old_partner;
      }
    }
    if (const auto* sa = std::get_if<Annealing>(&config.schedule)) temperature *= sa->cooling;
    result.history.push_back({it, current, accepted});
    if (observer) observer(it, segments);
  }

  result.set = to_set(best);
  result.set.metadata() = {{"construction", "search"},
                           {"segment_count", config.segment_count},
                           {"length_budget", budget},
                           {"iterations", config.iterations},
                           {"seed", config.seed},
                           {"initial_objective", result.initial_objective},
                           {"best_objective", result.best_objective}};
  ScanConfig final_scan;
  final_scan.theta_count = config.final_theta_count;
  final_scan.threads = config.threads;
  result.report = sup_discrepancy_scan(result.set, domain, final_scan);
  return result;
}

}  // namespace buffon
