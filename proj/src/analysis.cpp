#include "ledchan/analysis.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <sstream>
#include <thread>

#include "ledchan/rng.hpp"
#include "ledchan/series_io.hpp"

namespace ledchan {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

double quantize_level(double level) { return std::clamp(std::round(level), 0.0, 255.0); }

bool is_ook(const SchemeParams& scheme) {
  return std::holds_alternative<OokParams>(scheme);
}

/// One encode -> channel -> decode pass over a random message. An on-off
/// stream that no longer parses under noise carries no information, so a
/// failed or length-shifted decode scores 0.5.
double run_trial(const SchemeParams& scheme, Decoder decoder, const GeometryConfig& g,
                 const CameraConfig& base_cam, double dist, double ambient, double sigma,
                 int message_len, std::uint64_t trial_seed) {
  std::mt19937_64 bit_rng(derive_seed(trial_seed, 0));
  Bits sent(static_cast<std::size_t>(message_len));
  for (auto& b : sent) b = static_cast<std::uint8_t>(bit_rng() & 1u);

  CameraConfig cam = base_cam;
  cam.ambient = ambient;
  cam.noise_sigma = sigma;
  cam.seed = derive_seed(trial_seed, 1);

  const double brightness = received_brightness(g, dist);
  const double on_level = quantize_level(ambient + cam.gain * brightness);
  const double off_level = quantize_level(ambient);

  return std::visit(
      overloaded{
          [&](const BfskParams& p) {
            const BlockSequence seq = bfsk_encode(sent, p);
            const LuminanceSeries series = sample_channel(seq, g, cam, dist);
            const BfskCalibration cal = bfsk_calibrate(p, on_level, off_level);
            Bits received;
            switch (decoder) {
              case Decoder::Dips:
                received = bfsk_decode_dips(series, p, cal.dip_threshold);
                break;
              case Decoder::Mean:
                received = bfsk_decode_mean(series, p, cal.mean_split);
                break;
              case Decoder::Variance:
                received = bfsk_decode_variance(series, p, cal.variance_split);
                break;
            }
            return ber(sent, received);
          },
          [&](const OokParams& p) {
            const BlockSequence seq = ook_encode(sent, p);
            const LuminanceSeries series = sample_channel(seq, g, cam, dist);
            Bits received;
            try {
              received = ook_decode(series, p, (on_level + off_level) / 2.0);
            } catch (const Error&) {
              return 0.5;
            }
            if (received.size() != sent.size()) return 0.5;
            return ber(sent, received);
          },
      },
      scheme);
}

struct TrialStats {
  double mean = 0.0;
  double std_error = 0.0;
};

TrialStats run_trials(const SchemeParams& scheme, Decoder decoder, const GeometryConfig& g,
                      const CameraConfig& cam, double dist, double ambient, double sigma,
                      int message_len, int trials, std::uint64_t base_seed) {
  if (trials < 1) fail(Errc::InvalidParams, "trials must be >= 1");
  if (message_len < 1) fail(Errc::InvalidParams, "message_len must be >= 1");

  std::vector<double> bers(static_cast<std::size_t>(trials));
  for (int t = 0; t < trials; ++t)
    bers[static_cast<std::size_t>(t)] =
        run_trial(scheme, decoder, g, cam, dist, ambient, sigma, message_len,
                  derive_seed(base_seed, static_cast<std::uint64_t>(t)));

  TrialStats stats;
  for (double b : bers) stats.mean += b;
  stats.mean /= trials;
  if (trials > 1) {
    double acc = 0.0;
    for (double b : bers) acc += (b - stats.mean) * (b - stats.mean);
    stats.std_error = std::sqrt(acc / (trials - 1)) / std::sqrt(static_cast<double>(trials));
  }
  return stats;
}

}  // namespace

double ber(const Bits& sent, const Bits& received) {
  if (sent.empty() || received.empty()) fail(Errc::Empty, "messages must be non-empty");
  if (sent.size() != received.size())
    fail(Errc::LengthMismatch, "messages differ in length: " + std::to_string(sent.size()) +
                                   " vs " + std::to_string(received.size()));
  std::size_t flips = 0;
  for (std::size_t i = 0; i < sent.size(); ++i)
    if ((sent[i] != 0) != (received[i] != 0)) ++flips;
  return static_cast<double>(flips) / static_cast<double>(sent.size());
}

double binary_entropy(double p) {
  if (p < 0.0 || p > 1.0) fail(Errc::OutOfRange, "probability must be in [0, 1]");
  double h = 0.0;
  if (p > 0.0) h -= p * std::log2(p);
  if (p < 1.0) h -= (1.0 - p) * std::log2(1.0 - p);
  return h;
}

double capacity(double p) { return 1.0 - binary_entropy(p); }

double min_bits_per_info_bit(double p) {
  if (p < 0.0 || p > 0.5) fail(Errc::OutOfRange, "crossover probability must be in [0, 0.5]");
  const double c = capacity(p);
  if (c <= 0.0) fail(Errc::ZeroCapacity, "capacity vanishes at p = 0.5");
  return 1.0 / c;
}

Decoder parse_decoder(std::string_view name) {
  if (name == "dips") return Decoder::Dips;
  if (name == "mean") return Decoder::Mean;
  if (name == "variance" || name == "var") return Decoder::Variance;
  fail(Errc::ParseError, "unknown decoder '" + std::string(name) + "'");
}

const char* to_string(Decoder d) noexcept {
  switch (d) {
    case Decoder::Dips: return "dips";
    case Decoder::Mean: return "mean";
    case Decoder::Variance: return "variance";
  }
  return "?";
}

BerEstimate estimate_ber(const ProbeConfig& probe, double dist, double noise_sigma) {
  // Seeds hang off (seed, mm-quantized distance) so any search strategy that
  // probes the same distance sees the same trials.
  const auto dist_key = static_cast<std::uint64_t>(std::llround(dist * 1000.0));
  const std::uint64_t base = derive_seed(probe.seed, dist_key, 0xd15f);
  const TrialStats stats =
      run_trials(probe.scheme, probe.decoder, probe.geometry, probe.camera, dist, probe.camera.ambient,
                 noise_sigma, probe.message_len, probe.trials, base);

  BerEstimate est;
  est.mean_ber = stats.mean;
  est.std_error = stats.std_error;
  est.ber_norm = std::min(stats.mean, 1.0 - stats.mean);
  est.capacity = capacity(std::clamp(stats.mean, 0.0, 1.0));
  return est;
}

double largest_passing_distance(const std::function<bool(double)>& passes, double d_min,
                                double d_max, double resolution_m) {
  if (!(d_min <= d_max)) fail(Errc::InvalidParams, "d_min must not exceed d_max");
  if (resolution_m <= 0.0) fail(Errc::InvalidParams, "resolution must be > 0");

  if (!passes(d_min)) fail(Errc::NotReachable, "channel already fails at the nearest distance");
  if (passes(d_max)) return d_max;

  double lo = d_min;  // invariant: passes(lo) and !passes(hi)
  double hi = d_max;
  while (hi - lo > resolution_m) {
    const double mid = (lo + hi) / 2.0;
    (passes(mid) ? lo : hi) = mid;
  }
  return lo;
}

double effective_distance(const ProbeConfig& probe, double capacity_floor, double d_min,
                          double d_max) {
  if (capacity_floor <= 0.0 || capacity_floor > 1.0)
    fail(Errc::InvalidParams, "capacity floor must be in (0, 1]");
  const auto passes = [&](double d) {
    return estimate_ber(probe, d, probe.camera.noise_sigma).capacity >= capacity_floor;
  };
  return largest_passing_distance(passes, d_min, d_max, 0.01);
}

std::vector<FlickerTradeoffRow> flicker_tradeoff_table(double carrier, int l_min, int l_max) {
  if (carrier <= 0.0) fail(Errc::InvalidParams, "carrier must be > 0");
  if (l_min < 1 || l_max < l_min) fail(Errc::InvalidParams, "need 1 <= l_min <= l_max");
  std::vector<FlickerTradeoffRow> rows;
  rows.reserve(static_cast<std::size_t>(l_max - l_min + 1));
  for (int l = l_min; l <= l_max; ++l) {
    FlickerTradeoffRow row;
    row.enc1_len = l;
    row.rate = ook_rate(carrier, l);
    row.f_ook = ook_flicker(l);
    row.f_bfsk = bfsk_flicker(carrier, row.rate);  // rate-matched f1 = 2F/(L+1)
    rows.push_back(row);
  }
  return rows;
}

SweepResult run_sweep(const SweepConfig& config) {
  if (config.distances.empty() || config.ambients.empty() || config.sigmas.empty())
    fail(Errc::InvalidParams, "sweep grid must be non-empty");
  // The decoder axis only exists for the frequency-pair scheme; on-off
  // keying always decodes by threshold.
  const std::vector<Decoder> decoders =
      is_ook(config.scheme) ? std::vector<Decoder>{Decoder::Dips} : config.decoders;
  if (decoders.empty()) fail(Errc::InvalidParams, "no decoders selected");

  struct Cell {
    double dist, ambient, sigma;
    Decoder decoder;
  };
  std::vector<Cell> cells;
  for (double dist : config.distances)
    for (double ambient : config.ambients)
      for (double sigma : config.sigmas)
        for (Decoder dec : decoders) cells.push_back({dist, ambient, sigma, dec});

  SweepResult result;
  result.rows.resize(cells.size());

  std::atomic<std::size_t> next{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;

  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= cells.size()) return;
      try {
        const Cell& cell = cells[i];
        const std::uint64_t cell_seed = derive_seed(config.master_seed, i, 0x5eed);
        const TrialStats stats =
            run_trials(config.scheme, cell.decoder, config.geometry, config.camera, cell.dist,
                       cell.ambient, cell.sigma, config.message_len, config.trials, cell_seed);
        SweepRow& row = result.rows[i];
        row.distance = cell.dist;
        row.ambient = cell.ambient;
        row.noise_sigma = cell.sigma;
        row.decoder = cell.decoder;
        row.ber_raw = stats.mean;
        row.ber_norm = std::min(stats.mean, 1.0 - stats.mean);
        row.capacity = capacity(std::clamp(stats.mean, 0.0, 1.0));
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        return;
      }
    }
  };

  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const std::size_t n_workers = std::min<std::size_t>(hw, cells.size());
  std::vector<std::thread> pool;
  pool.reserve(n_workers);
  for (std::size_t w = 0; w < n_workers; ++w) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);

  return result;
}

std::string sweep_to_csv(const SweepConfig& config, const SweepResult& result) {
  std::ostringstream out;
  out << "# ledchan sweep\n";
  std::visit(overloaded{
                 [&](const BfskParams& p) {
                   out << "# scheme=bfsk block-rate=" << p.block_rate
                       << " bit-blocks=" << p.bit_blocks << " f0=" << fmt_num(p.f0)
                       << " f1=" << fmt_num(p.f1) << "\n";
                 },
                 [&](const OokParams& p) {
                   out << "# scheme=ook carrier=" << fmt_num(p.carrier)
                       << " enc1-len=" << p.enc1_len << "\n";
                 },
             },
             config.scheme);
  const GeometryConfig& g = config.geometry;
  out << "# geometry xa=" << fmt_num(g.xa) << " tilt=" << fmt_num(g.tilt_deg)
      << " on-len=" << fmt_num(g.on_len) << " ref-dist=" << fmt_num(g.ref_dist)
      << " beta=" << fmt_num(g.beta) << "\n";
  out << "# camera fps=" << fmt_num(config.camera.fps) << " gain=" << fmt_num(config.camera.gain)
      << "\n";
  out << "# trials=" << config.trials << " message-len=" << config.message_len
      << " seed=" << config.master_seed << "\n";
  out << "distance_m,ambient,noise_sigma,ber,ber_norm,capacity,decoder\n";
  const bool ook = is_ook(config.scheme);
  for (const SweepRow& row : result.rows) {
    out << fmt_num(row.distance) << ',' << fmt_num(row.ambient) << ','
        << fmt_num(row.noise_sigma) << ',' << fmt_num(row.ber_raw) << ','
        << fmt_num(row.ber_norm) << ',' << fmt_num(row.capacity) << ','
        << (ook ? "threshold" : to_string(row.decoder)) << '\n';
  }
  return out.str();
}

}  // namespace ledchan
