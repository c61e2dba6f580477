#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ledchan/signal.hpp"

namespace ledchan {

/// Message bits, one 0/1 value per entry.
using Bits = std::vector<std::uint8_t>;

Bits parse_bits(std::string_view text);  // ParseError on non-'0'/'1' characters
std::string bits_to_string(const Bits& bits);

/// Frequency-pair modulation parameters. A bit lasts bit_blocks blocks; a
/// bit whose frequency f is nonzero carries one single-block dark dip at the
/// end of each round(block_rate/f)-block period, so the indicator stays lit
/// except for isolated dips.
struct BfskParams {
  int block_rate = 30;  ///< LED state changes per second
  int bit_blocks = 6;   ///< blocks per transmitted bit
  double f0 = 0.0;      ///< dip frequency encoding bit 0, Hz (0 = steady on)
  double f1 = 5.0;      ///< dip frequency encoding bit 1, Hz (> 0)

  /// Blocks per dip period of frequency f: round(block_rate / f).
  int period_blocks(double f) const;
  /// Dark dips emitted within one bit of frequency f.
  int dips_per_bit(double f) const;

  /// Throws InvalidParams unless:
  ///  - block_rate >= 1, bit_blocks >= 1,
  ///  - f0 >= 0, f1 > 0, f0 != f1,
  ///  - each nonzero frequency is at most block_rate/2 (every dip needs an
  ///    adjacent lit block),
  ///  - each nonzero frequency fits at least one full period into a bit,
  ///  - the two frequencies produce distinct dip counts per bit.
  void validate() const;
};

/// On-off keying parameters. Each block is one half-cycle of the carrier,
/// so the block rate is 2*carrier. A plain 0 is a single lit block; a plain
/// 1 is enc1_len-1 lit blocks followed by one dark block (the long lit
/// prelude keeps the dark time isolated).
struct OokParams {
  double carrier = 25.0;  ///< flicker carrier F, Hz
  int enc1_len = 4;       ///< codeword length for plain bit 1, >= 1

  int block_rate() const;  ///< 2*carrier, which must be a whole number
  void validate() const;
};

using SchemeParams = std::variant<BfskParams, OokParams>;

/// Luminance samples of the indicator as seen by the receiver, one value per
/// camera frame.
struct LuminanceSeries {
  double sample_rate = 25.0;    ///< samples per second (camera fps)
  std::vector<double> samples;  ///< luminance, nominally 0..255
};

BlockSequence bfsk_encode(const Bits& bits, const BfskParams& p);
BlockSequence ook_encode(const Bits& bits, const OokParams& p);

/// Per-bit-window sample means / population variances. The series must
/// divide into whole bit windows (WindowMismatch otherwise).
std::vector<double> bfsk_window_means(const LuminanceSeries& series, const BfskParams& p);
std::vector<double> bfsk_window_variances(const LuminanceSeries& series, const BfskParams& p);

/// Count below-threshold samples per bit window and pick whichever of f0/f1
/// predicts the nearer dip count; ties resolve to bit 0.
Bits bfsk_decode_dips(const LuminanceSeries& series, const BfskParams& p, double threshold);

/// Window mean against a split level: the dimmer window belongs to the
/// frequency with more dips per bit.
Bits bfsk_decode_mean(const LuminanceSeries& series, const BfskParams& p, double split);

/// Window variance against a split level: the jitterier window belongs to
/// the higher dip frequency.
Bits bfsk_decode_variance(const LuminanceSeries& series, const BfskParams& p, double split);

/// Threshold each block to on/off and invert the codeword table. A dark
/// block closes a plain-1 codeword consuming the preceding enc1_len-1 lit
/// blocks; lit blocks left over are plain 0s, including any unterminated
/// run at the end of the stream.
Bits ook_decode(const LuminanceSeries& series, const OokParams& p, double threshold);

/// Decision levels for the three discriminators, derived from the expected
/// lit/dark luminance of the channel. Midpoints between the two symbols'
/// expected window statistics.
struct BfskCalibration {
  double dip_threshold = 0.0;
  double mean_split = 0.0;
  double variance_split = 0.0;
};

BfskCalibration bfsk_calibrate(const BfskParams& p, double on_level, double off_level);

/// Channel rate and flicker figures.
double ook_rate(double carrier, int enc1_len);  ///< 2F / (L + 1) bits/s
double ook_flicker(int enc1_len);               ///< 1 / L
double bfsk_rate(double f1);                    ///< f1 bits/s
double bfsk_flicker(double carrier, double f1); ///< 1 / (2F/f1 - 0.5)

}  // namespace ledchan
