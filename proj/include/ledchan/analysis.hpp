#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "ledchan/camera.hpp"
#include "ledchan/modem.hpp"
#include "ledchan/optics.hpp"

namespace ledchan {

/// Fraction of flipped bits between two equal-length messages.
double ber(const Bits& sent, const Bits& received);  // LengthMismatch, Empty

/// H(p) in bits, with 0*log(0) taken as 0.
double binary_entropy(double p);  // OutOfRange

/// Binary symmetric channel capacity 1 - H(p), bits per symbol.
double capacity(double p);  // OutOfRange

/// Raw symbols needed per information bit, 1/C(p). Defined for p in
/// [0, 0.5); exactly 0.5 has no capacity at all.
double min_bits_per_info_bit(double p);  // OutOfRange, ZeroCapacity

/// Which demodulator a probe run uses.
enum class Decoder { Dips, Mean, Variance };

Decoder parse_decoder(std::string_view name);  // ParseError
const char* to_string(Decoder d) noexcept;

/// One Monte-Carlo probe of the simulated channel: everything needed to
/// push random messages through encode -> optics -> camera -> decode.
/// camera.noise_sigma and camera.seed are overridden per probe/trial.
struct ProbeConfig {
  GeometryConfig geometry;
  CameraConfig camera;
  SchemeParams scheme = BfskParams{};
  Decoder decoder = Decoder::Dips;
  int message_len = 256;
  int trials = 16;
  std::uint64_t seed = 1;
};

/// Mean BER over the probe's trials plus its standard error, and the
/// channel capacity at that error rate. Decision levels are calibrated from
/// the expected lit/dark luminance at the probe distance.
struct BerEstimate {
  double mean_ber = 0.0;
  double std_error = 0.0;
  double ber_norm = 0.0;  ///< min(ber, 1-ber)
  double capacity = 0.0;  ///< C(mean_ber); symmetric in the inversion
};

BerEstimate estimate_ber(const ProbeConfig& probe, double dist, double noise_sigma);

/// Generic search core: the largest distance in [d_min, d_max] (to the given
/// resolution, by bisection) for which `passes` holds. Assumes `passes` is
/// monotone non-increasing in distance. NotReachable when d_min already
/// fails.
double largest_passing_distance(const std::function<bool(double)>& passes, double d_min,
                                double d_max, double resolution_m = 0.01);

/// Largest distance at which the probed capacity stays at or above the
/// floor, to 1 cm. Probe seeds derive from (seed, distance), so repeated
/// runs and different search orders agree.
double effective_distance(const ProbeConfig& probe, double capacity_floor, double d_min,
                          double d_max);  // NotReachable

/// Rate/flicker tradeoff rows for codeword lengths [l_min, l_max] at a fixed
/// carrier: the on-off-keyed flicker for that length against the
/// frequency-pair flicker at the rate-matched f1 = 2F/(L+1).
struct FlickerTradeoffRow {
  int enc1_len = 1;
  double rate = 0.0;
  double f_ook = 0.0;
  double f_bfsk = 0.0;
};

std::vector<FlickerTradeoffRow> flicker_tradeoff_table(double carrier, int l_min, int l_max);

/// Full-factorial BER sweep over distance x ambient x noise x decoder.
struct SweepConfig {
  GeometryConfig geometry;
  CameraConfig camera;  ///< fps and gain are taken from here
  SchemeParams scheme = BfskParams{};
  std::vector<double> distances;
  std::vector<double> ambients;
  std::vector<double> sigmas;
  std::vector<Decoder> decoders = {Decoder::Dips, Decoder::Mean, Decoder::Variance};
  int message_len = 256;
  int trials = 16;
  std::uint64_t master_seed = 1;
};

struct SweepRow {
  double distance = 0.0;
  double ambient = 0.0;
  double noise_sigma = 0.0;
  Decoder decoder = Decoder::Dips;
  double ber_raw = 0.0;   ///< may exceed 0.5; inversion is not auto-corrected
  double ber_norm = 0.0;  ///< min(ber, 1-ber)
  double capacity = 0.0;
};

struct SweepResult {
  std::vector<SweepRow> rows;
};

/// Cells run as independent tasks with seeds derived from (master_seed,
/// cell index); rows come back in grid order whatever the execution order,
/// so a fixed config yields a byte-identical CSV.
SweepResult run_sweep(const SweepConfig& config);

std::string sweep_to_csv(const SweepConfig& config, const SweepResult& result);

}  // namespace ledchan
