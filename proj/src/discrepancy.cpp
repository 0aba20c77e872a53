#include "buffon/discrepancy.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "buffon/construct.hpp"
#include "buffon/parallel.hpp"

namespace buffon {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
// Evaluation points sit this far inside each breakpoint interval.
constexpr double kEvalInset = 2.0 * kDegeneracyTol;

struct NodeOutcome {
  double best = -1.0;
  double best_offset = 0.0;
  double upper = 0.0;
  std::size_t skipped = 0;
};

// Calls on_interval(a, b, count) for the maximal open intervals on which
// #{starts[i] + start_shift < p} - #{ends[j] + end_shift < p} is constant.
// Both arrays must be sorted.
template <class F>
void sweep(const std::vector<double>& starts, double start_shift, const std::vector<double>& ends,
           double end_shift, F&& on_interval) {
  std::size_t i = 0;
  std::size_t j = 0;
  long count = 0;
  double prev = -kInf;
  while (i < starts.size() || j < ends.size()) {
    const double next_start = i < starts.size() ? starts[i] + start_shift : kInf;
    const double next_end = j < ends.size() ? ends[j] + end_shift : kInf;
    const double next = std::min(next_start, next_end);
    on_interval(prev, next, count);
    while (i < starts.size() && starts[i] + start_shift == next) {
      ++count;
      ++i;
    }
    while (j < ends.size() && ends[j] + end_shift == next) {
      --count;
      ++j;
    }
    prev = next;
  }
  on_interval(prev, kInf, count);
}

class NodeScanner {
 public:
  NodeScanner(std::span<const Primitive> prims, const ConvexDomain& domain, std::span<const double> factors,
              bool certify, double window)
      : prims_(prims), domain_(domain), factors_(factors), certify_(certify), window_(window) {}

  // One outcome per factor.
  std::vector<NodeOutcome> run(double theta) {
    pieces_.clear();
    const Vec2 normal = unit(theta);
    for (const Primitive& p : prims_) append_projection_pieces(p, theta, normal, pieces_);
    starts_.resize(pieces_.size());
    ends_.resize(pieces_.size());
    for (std::size_t k = 0; k < pieces_.size(); ++k) {
      starts_[k] = pieces_[k].lo;
      ends_[k] = pieces_[k].hi;
    }
    std::sort(starts_.begin(), starts_.end());
    std::sort(ends_.begin(), ends_.end());

    const auto support = domain_.support(theta);
    const double peak = domain_.chord_argmax(theta);
    const ChordProfile chord(domain_, theta);
    const std::size_t nf = factors_.size();

    std::vector<NodeOutcome> out(nf);
    sweep(starts_, 0.0, ends_, 0.0, [&](double a, double b, long count) {
      if (std::isfinite(a) && std::isfinite(b) && b - a < 2.0 * kEvalInset) {
        ++out[0].skipped;
        return;
      }
      const double left = std::isfinite(a) ? a + kEvalInset : std::min(b - kEvalInset, support.lo) - 1.0;
      const double right = std::isfinite(b) ? b - kEvalInset : std::max(left, support.hi) + 1.0;
      const double c = static_cast<double>(count);
      std::array<double, 3> at{left, right, peak};
      std::array<double, 3> len{chord(left), chord(right), 0.0};
      const int points = peak > left && peak < right ? 3 : 2;
      if (points == 3) len[2] = chord(peak);
      for (std::size_t f = 0; f < nf; ++f) {
        for (int q = 0; q < points; ++q) {
          const double dev = std::abs(c - factors_[f] * len[q]);
          if (dev > out[f].best) {
            out[f].best = dev;
            out[f].best_offset = at[q];
          }
        }
      }
    });
    for (std::size_t f = 1; f < nf; ++f) out[f].skipped = out[0].skipped;

    if (!certify_) return out;

    // Upper bound for every line within half a grid step in angle: each
    // breakpoint moves by at most `window_`, so the count there is bracketed by
    // the widened and narrowed interval sweeps.
    const double w = window_;
    for (std::size_t f = 0; f < nf; ++f) out[f].upper = out[f].best;
    auto chord_at = [&](double p) { return std::isfinite(p) ? chord(p) : 0.0; };
    sweep(starts_, -w, ends_, w, [&](double a, double b, long count) {
      const double lowest = std::min(chord_at(a - w), chord_at(b + w));
      for (std::size_t f = 0; f < nf; ++f) {
        out[f].upper = std::max(out[f].upper, static_cast<double>(count) - factors_[f] * lowest);
      }
    });
    sweep(starts_, w, ends_, -w, [&](double a, double b, long count) {
      const double highest = chord(std::clamp(peak, a - w, b + w));
      for (std::size_t f = 0; f < nf; ++f) {
        out[f].upper = std::max(out[f].upper, factors_[f] * highest - static_cast<double>(count));
      }
    });
    return out;
  }

 private:
  std::span<const Primitive> prims_;
  const ConvexDomain& domain_;
  std::span<const double> factors_;
  bool certify_;
  double window_;
  std::vector<ProjectionPiece> pieces_;
  std::vector<double> starts_;
  std::vector<double> ends_;
};

std::size_t piece_count(std::span<const Primitive> prims) {
  std::size_t n = 0;
  for (const Primitive& p : prims) n += std::holds_alternative<Segment>(p) ? 1 : (std::holds_alternative<Circle>(p) ? 2 : 3);
  return n;
}

// Angles in [0, 2 pi) at which theta -> sum of piece extents fails to be smooth.
std::vector<double> extent_kinks(std::span<const Primitive> prims) {
  std::vector<double> kinks;
  for (const Primitive& p : prims) {
    if (const auto* s = std::get_if<Segment>(&p)) {
      const Vec2 d = s->p1 - s->p0;
      const double phi = std::atan2(d.y, d.x) + kPi / 2.0;
      kinks.push_back(wrap_angle(phi));
      kinks.push_back(wrap_angle(phi + kPi));
    } else if (const auto* a = std::get_if<Arc>(&p)) {
      for (const double e : {a->angle_start, a->angle_start + a->angle_span}) {
        kinks.push_back(wrap_angle(e));
        kinks.push_back(wrap_angle(e + kPi));
      }
    }
  }
  std::sort(kinks.begin(), kinks.end());
  kinks.erase(std::unique(kinks.begin(), kinks.end()), kinks.end());
  return kinks;
}

double clipped_extent(std::span<const Primitive> prims, double theta, double radius,
                      std::vector<ProjectionPiece>& buffer) {
  buffer.clear();
  for (const Primitive& p : prims) append_projection_pieces(p, theta, buffer);
  double sum = 0.0;
  for (const ProjectionPiece& piece : buffer) {
    const double lo = std::clamp(piece.lo, -radius, radius);
    const double hi = std::clamp(piece.hi, -radius, radius);
    sum += hi - lo;
  }
  return sum;
}

// Integral over p of the chord length at angle theta, split at the chord's
// kinks; each piece uses p = mid + half * sin(phi) to absorb square-root
// behaviour at tangencies.
double chord_offset_integral(const ConvexDomain& domain, double theta, double radius) {
  const auto support = domain.support(theta);
  const double lo = std::max(support.lo, -radius);
  const double hi = std::min(support.hi, radius);
  std::vector<double> cuts{lo};
  for (const double k : domain.chord_kinks(theta)) {
    if (k > lo && k < hi) cuts.push_back(k);
  }
  cuts.push_back(hi);
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double mid = 0.5 * (cuts[i] + cuts[i + 1]);
    const double half = 0.5 * (cuts[i + 1] - cuts[i]);
    if (half <= 0.0) continue;
    auto integrand = [&](double phi) {
      return domain.chord_length({theta, mid + half * std::sin(phi)}) * half * std::cos(phi);
    };
    total += boost::math::quadrature::gauss_kronrod<double, 31>::integrate(integrand, -kPi / 2.0, kPi / 2.0, 12,
                                                                            1e-14);
  }
  return total;
}

}  // namespace

double crofton_factor(double length, const ConvexDomain& domain) { return 2.0 / kPi * length / domain.area(); }

DeviationTarget make_target(const RectifiableSet& set, const ConvexDomain& domain) {
  return DeviationTarget{crofton_factor(set.total_length(), domain), set.total_length(), domain};
}

double deviation(const LineCoords& line, const RectifiableSet& set, const DeviationTarget& target) {
  const IntersectionResult hit = count_intersections(line, set);
  if (hit.degenerate) {
    throw DegenerateLineError("deviation: line is tangent to, collinear with or through an endpoint of the set");
  }
  return std::abs(static_cast<double>(hit.count) - target.factor * target.domain.chord_length(line));
}

const char* to_string(EvalMethod method) {
  return method == EvalMethod::breakpoint_scan ? "breakpoint_scan" : "monte_carlo";
}

DiscrepancyReport sup_discrepancy_scan(const RectifiableSet& set, const ConvexDomain& domain,
                                       const ScanConfig& config) {
  const double factor = config.factor_override.value_or(crofton_factor(set.total_length(), domain));
  return sup_discrepancy_scan(set, domain, std::span<const double>(&factor, 1), config).front();
}

std::vector<DiscrepancyReport> sup_discrepancy_scan(const RectifiableSet& set, const ConvexDomain& domain,
                                                    std::span<const double> factors, const ScanConfig& config) {
  if (config.theta_count < 4) throw std::invalid_argument("sup_discrepancy_scan: theta_count must be at least 4");
  if (factors.empty()) throw std::invalid_argument("sup_discrepancy_scan: no factors given");
  const auto prims = set.primitives();
  if (piece_count(prims) > config.piece_cap) {
    throw ResourceLimitError("sup_discrepancy_scan: projection piece count exceeds the configured cap");
  }

  const double step = kPi / config.theta_count;
  double anchor = 0.0;
  for (const Primitive& p : prims) anchor = std::max(anchor, breakpoint_anchor_radius(p));
  const double window = anchor * step / 2.0;

  std::vector<std::vector<NodeOutcome>> nodes(static_cast<std::size_t>(config.theta_count));
  parallel_chunks(nodes.size(), config.threads, [&](std::size_t begin, std::size_t end) {
    NodeScanner scanner(prims, domain, factors, config.certify, window);
    for (std::size_t j = begin; j < end; ++j) nodes[j] = scanner.run(step * static_cast<double>(j));
  });

  std::vector<DiscrepancyReport> reports(factors.size());
  for (std::size_t f = 0; f < factors.size(); ++f) {
    DiscrepancyReport& report = reports[f];
    report.method = EvalMethod::breakpoint_scan;
    report.theta_samples = config.theta_count;
    report.factor = factors[f];
    report.realized_length = set.total_length();
    report.primitive_count = set.size();
    double upper = 0.0;
    for (std::size_t j = 0; j < nodes.size(); ++j) {
      const NodeOutcome& node = nodes[j][f];
      report.degenerate_lines_skipped += node.skipped;
      upper = std::max(upper, node.upper);
      if (node.best > report.sup_value || j == 0) {
        report.sup_value = std::max(0.0, node.best);
        report.witness = {step * static_cast<double>(j), node.best_offset};
      }
    }

    const double smooth_term = factors[f] * domain.diameter() * step / 2.0;
    if (config.certify) {
      report.certified_gap = std::max(0.0, upper + smooth_term - report.sup_value);
      report.gap_model =
          "upper = max over theta nodes of sup_p max(C+(p) - min f, max f - C-(p)) + factor*diam*dtheta/2, where "
          "C+/C- are crossing counts with breakpoints widened/narrowed by R_anchor*dtheta/2 and f = factor*chord "
          "is taken over the same widened window; dtheta = pi/theta_count";
    } else {
      report.certified_gap = kInf;
      report.gap_model = "not certified";
    }
  }
  return reports;
}

std::vector<LineCoords> sample_lines(const ConvexDomain& domain, std::size_t samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(0.0, kPi);
  const double r = domain.circumradius();
  std::uniform_real_distribution<double> offset(-r, r);
  std::vector<LineCoords> lines(samples);
  for (auto& line : lines) {
    const double theta = angle(rng);
    line = {theta, offset(rng)};
  }
  return lines;
}

DiscrepancyReport sup_discrepancy_mc(const RectifiableSet& set, const ConvexDomain& domain, const McConfig& config) {
  if (config.samples < 1) throw std::invalid_argument("sup_discrepancy_mc: samples must be at least 1");
  const double factor = config.factor_override.value_or(crofton_factor(set.total_length(), domain));
  const std::vector<LineCoords> lines = sample_lines(domain, config.samples, config.seed);

  std::vector<double> values(lines.size(), -1.0);
  parallel_chunks(lines.size(), config.threads, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const IntersectionResult hit = count_intersections(lines[i], set);
      if (hit.degenerate) continue;
      values[i] = std::abs(static_cast<double>(hit.count) - factor * domain.chord_length(lines[i]));
    }
  });

  DiscrepancyReport report;
  report.method = EvalMethod::monte_carlo;
  report.mc_samples = config.samples;
  report.seed = config.seed;
  report.factor = factor;
  report.realized_length = set.total_length();
  report.primitive_count = set.size();
  report.certified_gap = kInf;
  report.gap_model = "lower bound only";
  double best = -1.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] < 0.0) {
      ++report.degenerate_lines_skipped;
    } else if (values[i] > best) {
      best = values[i];
      report.witness = lines[i];
    }
  }
  report.sup_value = std::max(0.0, best);
  return report;
}

CroftonIntegrals crofton_integrals(const RectifiableSet& set, const ConvexDomain& domain, double radius,
                                   int resolution) {
  if (resolution < 1) throw std::invalid_argument("crofton_integrals: resolution must be positive");
  if (!(radius > 0.0)) throw std::invalid_argument("crofton_integrals: radius must be positive");
  const auto prims = set.primitives();
  const std::vector<double> kinks = extent_kinks(prims);

  // Three-point Gauss-Legendre on each cell, cells split at kinks.
  const double gl_node = std::sqrt(3.0 / 5.0);
  const double gl_weight[3] = {5.0 / 9.0, 8.0 / 9.0, 5.0 / 9.0};
  const double cell = kTwoPi / resolution;
  std::vector<double> cell_counts(static_cast<std::size_t>(resolution), 0.0);
  std::vector<double> cell_chords(static_cast<std::size_t>(resolution), 0.0);

  parallel_chunks(cell_counts.size(), 0, [&](std::size_t begin, std::size_t end) {
    std::vector<ProjectionPiece> buffer;
    std::vector<double> cuts;
    for (std::size_t j = begin; j < end; ++j) {
      const double a = cell * static_cast<double>(j);
      const double b = cell * static_cast<double>(j + 1);
      cuts.assign({a});
      for (auto it = std::upper_bound(kinks.begin(), kinks.end(), a); it != kinks.end() && *it < b; ++it) {
        cuts.push_back(*it);
      }
      cuts.push_back(b);
      double sum = 0.0;
      for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
        const double mid = 0.5 * (cuts[k] + cuts[k + 1]);
        const double half = 0.5 * (cuts[k + 1] - cuts[k]);
        const double xs[3] = {mid - half * gl_node, mid, mid + half * gl_node};
        for (int q = 0; q < 3; ++q) sum += half * gl_weight[q] * clipped_extent(prims, xs[q], radius, buffer);
      }
      cell_counts[j] = sum;
      // The offset integral of the chord is smooth in theta; composite midpoint.
      cell_chords[j] = cell * chord_offset_integral(domain, 0.5 * (a + b), radius);
    }
  });

  CroftonIntegrals out;
  out.radius = radius;
  out.resolution = resolution;
  for (std::size_t j = 0; j < cell_counts.size(); ++j) {
    out.count_integral += cell_counts[j];
    out.chord_integral += cell_chords[j];
  }
  return out;
}

PropositionCheck proposition_bound_check(const RectifiableSet& set, const ConvexDomain& domain, double c, double x) {
  if (!std::isfinite(c)) throw std::invalid_argument("proposition_bound_check: c must be finite");
  if (!std::isfinite(x) || x < 0.0) {
    throw std::invalid_argument("proposition_bound_check: X must be a finite non-negative bound");
  }
  PropositionCheck out;
  out.lhs = std::abs(c - crofton_factor(set.total_length(), domain));
  out.rhs = 2.0 * domain.diameter() / domain.area() * x;
  out.margin = out.rhs - out.lhs;
  out.holds = out.lhs <= out.rhs + 1e-12 * (1.0 + out.rhs);
  return out;
}

PropositionCheck proposition_bound_check(const RectifiableSet& set, const ConvexDomain& domain,
                                         const DiscrepancyReport& certificate) {
  if (certificate.method != EvalMethod::breakpoint_scan) {
    throw std::invalid_argument("proposition_bound_check: certificate must come from a breakpoint scan");
  }
  if (certificate.realized_length != set.total_length() || certificate.primitive_count != set.size()) {
    throw std::invalid_argument("proposition_bound_check: certificate was measured on a different set");
  }
  return proposition_bound_check(set, domain, certificate.factor, certificate.sup_value);
}

ScalingFit fit_log_log(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) throw std::invalid_argument("fit_log_log: need two or more points");
  const double m = static_cast<double>(x.size());
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] > 0.0) || !(y[i] > 0.0)) throw std::invalid_argument("fit_log_log: values must be positive");
    const double lx = std::log(x[i]);
    const double ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double denom = m * sxx - sx * sx;
  if (denom == 0.0) throw std::invalid_argument("fit_log_log: x values must not all coincide");
  ScalingFit fit;
  fit.slope = (m * sxy - sx * sy) / denom;
  fit.intercept = (sy - fit.slope * sx) / m;
  for (std::size_t i = 0; i < x.size(); ++i) {
    fit.residuals.push_back(std::log(y[i]) - (fit.intercept + fit.slope * std::log(x[i])));
  }
  return fit;
}

ScalingStudy scaling_study(const ConvexDomain& domain, std::span<const double> lengths, const ScanConfig& config) {
  ScalingStudy study;
  for (const double length : lengths) {
    const SteinhausBuild build = steinhaus_for_length(length, domain);
    const DiscrepancyReport report = sup_discrepancy_scan(build.set, domain, config);
    study.rows.push_back({length, build.params.n, build.params.epsilon, build.set.total_length(), build.set.size(),
                          report.sup_value, report.certified_gap, report.witness});
  }
  if (study.rows.size() >= 3) {
    std::vector<double> xs;
    std::vector<double> ys;
    for (const ScalingRow& row : study.rows) {
      xs.push_back(row.length);
      ys.push_back(row.sup_value);
    }
    study.fit = fit_log_log(xs, ys);
  }
  return study;
}

}  // namespace buffon
