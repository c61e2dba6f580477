#pragma once

#include <cstdint>

#include "ledchan/modem.hpp"
#include "ledchan/optics.hpp"
#include "ledchan/signal.hpp"

namespace ledchan {

/// Receiver-side camera model: frame-rate sampling of the block waveform
/// through the geometry, additive Gaussian noise, ambient offset and 8-bit
/// quantization.
struct CameraConfig {
  double fps = 25.0;         ///< frames per second
  double noise_sigma = 0.0;  ///< std dev of additive luminance noise
  double ambient = 16.0;     ///< ambient luminance offset, 0..255
  double gain = 219.0;       ///< luminance per unit received brightness
  std::uint64_t seed = 1;    ///< RNG seed; fixed seed gives bit-identical series
  double phase = 0.0;        ///< sampling phase offset, seconds (default 0)

  void validate() const;  // InvalidParams
};

/// Sample the indicator waveform as the camera would see it. Frame k at time
/// k/fps + phase holds the most recent block state (sample-and-hold);
/// luminance is ambient + gain * received_brightness for a lit block plus
/// N(0, noise_sigma), rounded and clamped to [0, 255].
///
/// Noise uses Box-Muller over std::mt19937_64 (see rng.hpp) so a fixed seed
/// reproduces the exact series on any platform.
LuminanceSeries sample_channel(const BlockSequence& seq, const GeometryConfig& g,
                               const CameraConfig& c, double dist);

/// Sampling-theorem bound: a carrier is recoverable iff it does not exceed
/// half the frame rate.
bool nyquist_ok(double f_carrier, double fps);

}  // namespace ledchan
