#include "ledchan/camera.hpp"

#include <algorithm>
#include <cmath>

#include "ledchan/rng.hpp"

namespace ledchan {

void CameraConfig::validate() const {
  if (fps <= 0.0) fail(Errc::InvalidParams, "fps must be > 0");
  if (noise_sigma < 0.0) fail(Errc::InvalidParams, "noise_sigma must be >= 0");
  if (ambient < 0.0 || ambient > 255.0) fail(Errc::InvalidParams, "ambient must be in [0, 255]");
  if (gain <= 0.0) fail(Errc::InvalidParams, "gain must be > 0");
}

LuminanceSeries sample_channel(const BlockSequence& seq, const GeometryConfig& g,
                               const CameraConfig& c, double dist) {
  c.validate();
  if (seq.block_rate < 1) fail(Errc::InvalidParams, "block_rate must be >= 1");
  if (seq.states.empty()) fail(Errc::EmptySequence, "cannot sample an empty sequence");

  const double brightness = received_brightness(g, dist);
  const double on_level = c.ambient + c.gain * brightness;
  const double off_level = c.ambient;

  const auto n_blocks = seq.states.size();
  const auto n_frames =
      static_cast<std::size_t>(std::floor(static_cast<double>(n_blocks) * c.fps / seq.block_rate));

  GaussianNoise noise(c.seed);
  LuminanceSeries series;
  series.sample_rate = c.fps;
  series.samples.reserve(n_frames);
  for (std::size_t k = 0; k < n_frames; ++k) {
    // k*block_rate stays exact in doubles, so the division is the only
    // rounding step; forming k/fps first loses blocks near window edges.
    const double pos =
        static_cast<double>(k) * seq.block_rate / c.fps + c.phase * seq.block_rate;
    auto block = static_cast<std::size_t>(std::floor(pos));
    block = std::min(block, n_blocks - 1);
    const double level = seq.states[block] == Block::On ? on_level : off_level;
    const double y = level + noise() * c.noise_sigma;
    series.samples.push_back(std::clamp(std::round(y), 0.0, 255.0));
  }
  return series;
}

bool nyquist_ok(double f_carrier, double fps) { return f_carrier <= fps / 2.0; }

}  // namespace ledchan
