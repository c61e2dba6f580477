#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ledchan/error.hpp"

namespace ledchan {

/// One slot of the LED state grid. The indicator is either lit or dark for
/// the whole block; the block rate fixes the slot duration.
enum class Block : std::uint8_t { Off = 0, On = 1 };

/// Time-indexed on/off states of the indicator at a fixed block rate.
/// This is the modulated waveform every encoder produces and the channel
/// model consumes.
struct BlockSequence {
  int block_rate = 30;        ///< blocks per second, >= 1
  std::vector<Block> states;  ///< ordered block states

  double duration_s() const { return static_cast<double>(states.size()) / block_rate; }

  /// Compact text form used for piping between CLI subcommands:
  /// "<block_rate>:<pattern>" where the pattern is '1' (on) / '0' (off)
  /// per block, e.g. "30:111011101110".
  std::string to_text() const;
  static BlockSequence parse(std::string_view text);
};

/// Maximal runs of identical states, in sequence order, split by state.
struct RunStats {
  std::vector<int> on_runs;
  std::vector<int> off_runs;
  double d_on = 0.0;   ///< mean on-run length, 0 when there are no on runs
  double d_off = 0.0;  ///< mean off-run length, 0 when there are no off runs
};

/// How noticeable a single dark interval is to an onlooker.
enum class CovertnessClass { Imperceptible = 0, TinyDither = 1, Perceptible = 2 };

const char* to_string(CovertnessClass c) noexcept;

/// Decompose a sequence into maximal runs. Throws EmptySequence.
RunStats run_lengths(const BlockSequence& seq);

/// Perceived-flicker index of a sequence: mean dark-run length squared over
/// mean lit-run length. A sequence with no dark blocks scores exactly 0.
/// Throws NoOnBlocks for an all-dark sequence (a dark LED has no flicker
/// semantics).
double flicker_value(const BlockSequence& seq);

/// Number of lit blocks in the sequence.
int brightness_index(const BlockSequence& seq);

/// Classify a dark interval by duration: under 20 ms is invisible even under
/// a direct stare, 20-50 ms reads as a tiny dither on the brightness, longer
/// dark times are plainly visible. Bounds are inclusive on the dither side.
CovertnessClass classify_covertness(double off_run_duration_ms);

}  // namespace ledchan
