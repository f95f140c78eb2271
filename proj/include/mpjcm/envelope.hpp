#ifndef MPJCM_ENVELOPE_HPP
#define MPJCM_ENVELOPE_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace mpjcm {

struct Envelope {
  std::vector<double> t;
  std::vector<double> value;
};

struct Peak {
  double t = 0.0;
  double value = 0.0;
};

// Moving-window RMS of a uniformly sampled signal: the mechanical stand-in
// for reading a revival envelope off a plot. Window and stride are rounded
// to whole samples and the window width is held fixed, so sliding never
// changes the sample count (a varying count leaves a sawtooth on smooth
// envelopes whose spurious local maxima wreck peak counting). Centers whose
// full window does not fit are dropped.
inline Envelope moving_rms_envelope(double t0, double dt, std::span<const double> y,
                                    double window, double stride) {
  if (dt <= 0.0 || window <= 0.0 || stride <= 0.0)
    throw std::invalid_argument("moving_rms_envelope: dt, window, stride must be > 0");
  const std::size_t n = y.size();
  if (n == 0) return {};
  std::vector<double> prefix(n + 1, 0.0);
  for (std::size_t i = 0; i < n; ++i) prefix[i + 1] = prefix[i] + y[i] * y[i];

  const auto half = std::max<std::size_t>(1, static_cast<std::size_t>(
                                                 std::llround(0.5 * window / dt)));
  const auto step = std::max<std::size_t>(1, static_cast<std::size_t>(
                                                 std::llround(stride / dt)));
  Envelope env;
  if (n < 2 * half + 1) return env;
  for (std::size_t i = half; i + half < n; i += step) {
    const double mean_sq =
        (prefix[i + half + 1] - prefix[i - half]) / static_cast<double>(2 * half + 1);
    env.t.push_back(t0 + dt * static_cast<double>(i));
    env.value.push_back(std::sqrt(mean_sq));
  }
  return env;
}

// Strict interior local maxima of the envelope, keeping only peaks reaching
// min_ratio of the global maximum and merging peaks closer than
// min_separation (the larger one wins).
inline std::vector<Peak> significant_peaks(const Envelope& env, double min_ratio,
                                           double min_separation) {
  std::vector<Peak> peaks;
  const std::size_t n = env.value.size();
  if (n < 3) return peaks;
  const double top = *std::max_element(env.value.begin(), env.value.end());
  for (std::size_t i = 1; i + 1 < n; ++i) {
    if (env.value[i] > env.value[i - 1] && env.value[i] >= env.value[i + 1] &&
        env.value[i] >= min_ratio * top)
      peaks.push_back({env.t[i], env.value[i]});
  }
  std::vector<Peak> merged;
  for (const Peak& p : peaks) {
    if (!merged.empty() && p.t - merged.back().t < min_separation) {
      if (p.value > merged.back().value) merged.back() = p;
    } else {
      merged.push_back(p);
    }
  }
  return merged;
}

// Local maxima filtered by topographic prominence: height above the higher
// of the two deepest valleys separating the peak from higher terrain. This
// is what survives the residual Rabi-period ripple that plain neighbour
// comparison trips over.
inline std::vector<Peak> prominent_peaks(const Envelope& env, double min_prominence) {
  std::vector<Peak> peaks;
  const std::size_t n = env.value.size();
  if (n < 3) return peaks;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    if (!(env.value[i] > env.value[i - 1] && env.value[i] >= env.value[i + 1])) continue;
    const double h = env.value[i];
    double left_valley = h;
    bool left_higher = false;
    for (std::size_t j = i; j-- > 0;) {
      left_valley = std::min(left_valley, env.value[j]);
      if (env.value[j] > h) {
        left_higher = true;
        break;
      }
    }
    double right_valley = h;
    bool right_higher = false;
    for (std::size_t j = i + 1; j < n; ++j) {
      right_valley = std::min(right_valley, env.value[j]);
      if (env.value[j] > h) {
        right_higher = true;
        break;
      }
    }
    // edge-bounded sides count as full drops
    const double ref = std::max(left_higher ? left_valley : 0.0,
                                right_higher ? right_valley : 0.0);
    if (h - ref >= min_prominence) peaks.push_back({env.t[i], h});
  }
  return peaks;
}

// Contiguous stretches where the envelope stays at or above
// threshold_ratio x its global maximum: one burst per revival. The returned
// peak carries the interval midpoint and the burst maximum.
struct Burst {
  double t_begin = 0.0;
  double t_end = 0.0;
  double peak_value = 0.0;

  double center() const { return 0.5 * (t_begin + t_end); }
};

inline std::vector<Burst> envelope_bursts(const Envelope& env, double threshold_ratio) {
  std::vector<Burst> bursts;
  const std::size_t n = env.value.size();
  if (n == 0) return bursts;
  const double cut =
      threshold_ratio * *std::max_element(env.value.begin(), env.value.end());
  std::size_t i = 0;
  while (i < n) {
    if (env.value[i] < cut) {
      ++i;
      continue;
    }
    Burst burst{env.t[i], env.t[i], env.value[i]};
    while (i < n && env.value[i] >= cut) {
      burst.t_end = env.t[i];
      burst.peak_value = std::max(burst.peak_value, env.value[i]);
      ++i;
    }
    bursts.push_back(burst);
  }
  return bursts;
}

// Zero-lag normalized cross-correlation of two equally long samples.
inline double normalized_cross_correlation(std::span<const double> a,
                                           std::span<const double> b) {
  if (a.size() != b.size() || a.empty())
    throw std::invalid_argument("normalized_cross_correlation: size mismatch");
  const double n = static_cast<double>(a.size());
  double ma = 0.0, mb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    ma += a[i];
    mb += b[i];
  }
  ma /= n;
  mb /= n;
  double dot = 0.0, na = 0.0, nb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double da = a[i] - ma;
    const double db = b[i] - mb;
    dot += da * db;
    na += da * da;
    nb += db * db;
  }
  if (na == 0.0 || nb == 0.0) return 0.0;
  return dot / std::sqrt(na * nb);
}

// Linear interpolation of an envelope onto query times; queries outside the
// envelope support are clamped to the end values.
inline std::vector<double> resample_linear(const Envelope& env,
                                           std::span<const double> query) {
  if (env.t.size() < 2) throw std::invalid_argument("resample_linear: envelope too short");
  std::vector<double> out;
  out.reserve(query.size());
  for (double tq : query) {
    if (tq <= env.t.front()) {
      out.push_back(env.value.front());
      continue;
    }
    if (tq >= env.t.back()) {
      out.push_back(env.value.back());
      continue;
    }
    const auto it = std::upper_bound(env.t.begin(), env.t.end(), tq);
    const std::size_t hi = static_cast<std::size_t>(it - env.t.begin());
    const std::size_t lo = hi - 1;
    const double w = (tq - env.t[lo]) / (env.t[hi] - env.t[lo]);
    out.push_back((1.0 - w) * env.value[lo] + w * env.value[hi]);
  }
  return out;
}

}  // namespace mpjcm

#endif  // MPJCM_ENVELOPE_HPP
