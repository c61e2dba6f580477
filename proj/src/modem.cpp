#include "ledchan/modem.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace ledchan {

namespace {

struct Windows {
  std::size_t samples_per_bit = 0;
  std::size_t count = 0;
};

/// The decoder assumes sample k sits over block floor(k*block_rate/fps)
/// with no clock recovery, so a bit must span a whole number of samples and
/// the series a whole number of bits.
Windows split_windows(const LuminanceSeries& series, int block_rate, int bit_blocks) {
  if (series.sample_rate <= 0.0) fail(Errc::InvalidParams, "sample_rate must be > 0");
  if (series.samples.empty()) fail(Errc::WindowMismatch, "series is empty");

  const double per_bit = static_cast<double>(bit_blocks) * series.sample_rate / block_rate;
  const auto rounded = static_cast<long long>(std::llround(per_bit));
  if (rounded < 1 || std::abs(per_bit - static_cast<double>(rounded)) > 1e-9)
    fail(Errc::WindowMismatch, "bit duration does not map to a whole number of samples");

  Windows w;
  w.samples_per_bit = static_cast<std::size_t>(rounded);
  if (series.samples.size() % w.samples_per_bit != 0)
    fail(Errc::WindowMismatch, "series length is not a whole number of bit windows");
  w.count = series.samples.size() / w.samples_per_bit;
  return w;
}

double window_mean(const std::vector<double>& s, std::size_t begin, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += s[begin + i];
  return acc / static_cast<double>(n);
}

double window_variance(const std::vector<double>& s, std::size_t begin, std::size_t n) {
  const double m = window_mean(s, begin, n);
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double d = s[begin + i] - m;
    acc += d * d;
  }
  return acc / static_cast<double>(n);
}

}  // namespace

Bits parse_bits(std::string_view text) {
  Bits bits;
  bits.reserve(text.size());
  for (char c : text) {
    if (c == '0')
      bits.push_back(0);
    else if (c == '1')
      bits.push_back(1);
    else if (c != ' ' && c != '\n' && c != '\r' && c != '\t')
      fail(Errc::ParseError, std::string("bit character must be '0' or '1', got '") + c + "'");
  }
  return bits;
}

std::string bits_to_string(const Bits& bits) {
  std::string out;
  out.reserve(bits.size());
  for (auto b : bits) out += (b ? '1' : '0');
  return out;
}

int BfskParams::period_blocks(double f) const {
  if (f <= 0.0) fail(Errc::InvalidParams, "dip period is only defined for f > 0");
  return static_cast<int>(std::llround(static_cast<double>(block_rate) / f));
}

int BfskParams::dips_per_bit(double f) const {
  if (f <= 0.0) return 0;
  return bit_blocks / period_blocks(f);
}

void BfskParams::validate() const {
  if (block_rate < 1) fail(Errc::InvalidParams, "block_rate must be >= 1");
  if (bit_blocks < 1) fail(Errc::InvalidParams, "bit_blocks must be >= 1");
  if (f0 < 0.0) fail(Errc::InvalidParams, "f0 must be >= 0");
  if (f1 <= 0.0) fail(Errc::InvalidParams, "f1 must be > 0");
  if (f0 == f1) fail(Errc::InvalidParams, "f0 and f1 must differ");

  const double half_rate = static_cast<double>(block_rate) / 2.0;
  for (double f : {f0, f1}) {
    if (f <= 0.0) continue;
    if (f > half_rate)
      fail(Errc::InvalidParams, "dip frequency above block_rate/2 leaves no lit block between dips");
    if (bit_blocks < period_blocks(f))
      fail(Errc::InvalidParams, "a bit must contain at least one full period of its frequency");
  }
  // Every discriminator separates the symbols by their per-bit dip count
  // (or statistics derived from it), so equal counts are undecodable even
  // when the periods differ.
  if (f0 > 0.0 && dips_per_bit(f0) == dips_per_bit(f1))
    fail(Errc::InvalidParams, "f0 and f1 produce the same dip count per bit");
}

int OokParams::block_rate() const {
  const double rate = 2.0 * carrier;
  const auto rounded = static_cast<long long>(std::llround(rate));
  if (rounded < 1 || std::abs(rate - static_cast<double>(rounded)) > 1e-9)
    fail(Errc::InvalidParams, "2*carrier must be a whole number of blocks per second");
  return static_cast<int>(rounded);
}

void OokParams::validate() const {
  if (carrier <= 0.0) fail(Errc::InvalidParams, "carrier must be > 0");
  if (enc1_len < 1) fail(Errc::InvalidParams, "enc1_len must be >= 1");
  (void)block_rate();
}

BlockSequence bfsk_encode(const Bits& bits, const BfskParams& p) {
  p.validate();
  BlockSequence seq;
  seq.block_rate = p.block_rate;
  seq.states.reserve(bits.size() * static_cast<std::size_t>(p.bit_blocks));
  for (auto bit : bits) {
    if (bit > 1) fail(Errc::InvalidParams, "bits must be 0 or 1");
    const double f = bit ? p.f1 : p.f0;
    if (f <= 0.0) {
      seq.states.insert(seq.states.end(), static_cast<std::size_t>(p.bit_blocks), Block::On);
      continue;
    }
    const int period = p.period_blocks(f);
    for (int i = 0; i < p.bit_blocks; ++i)
      seq.states.push_back((i + 1) % period == 0 ? Block::Off : Block::On);
  }
  return seq;
}

BlockSequence ook_encode(const Bits& bits, const OokParams& p) {
  p.validate();
  BlockSequence seq;
  seq.block_rate = p.block_rate();
  for (auto bit : bits) {
    if (bit > 1) fail(Errc::InvalidParams, "bits must be 0 or 1");
    if (bit == 0) {
      seq.states.push_back(Block::On);
    } else {
      seq.states.insert(seq.states.end(), static_cast<std::size_t>(p.enc1_len - 1), Block::On);
      seq.states.push_back(Block::Off);
    }
  }
  return seq;
}

std::vector<double> bfsk_window_means(const LuminanceSeries& series, const BfskParams& p) {
  p.validate();
  const Windows w = split_windows(series, p.block_rate, p.bit_blocks);
  std::vector<double> means(w.count);
  for (std::size_t i = 0; i < w.count; ++i)
    means[i] = window_mean(series.samples, i * w.samples_per_bit, w.samples_per_bit);
  return means;
}

std::vector<double> bfsk_window_variances(const LuminanceSeries& series, const BfskParams& p) {
  p.validate();
  const Windows w = split_windows(series, p.block_rate, p.bit_blocks);
  std::vector<double> vars(w.count);
  for (std::size_t i = 0; i < w.count; ++i)
    vars[i] = window_variance(series.samples, i * w.samples_per_bit, w.samples_per_bit);
  return vars;
}

Bits bfsk_decode_dips(const LuminanceSeries& series, const BfskParams& p, double threshold) {
  p.validate();
  if (series.sample_rate < 2.0 * std::max(p.f0, p.f1))
    fail(Errc::NyquistViolation, "sample rate below twice the highest dip frequency");
  const Windows w = split_windows(series, p.block_rate, p.bit_blocks);

  // Dips per window scale with the oversampling factor: each dark block is
  // seen sample_rate/block_rate times.
  const double scale = series.sample_rate / p.block_rate;
  const double expect0 = p.dips_per_bit(p.f0) * scale;
  const double expect1 = p.dips_per_bit(p.f1) * scale;

  Bits out(w.count);
  for (std::size_t i = 0; i < w.count; ++i) {
    int dips = 0;
    for (std::size_t k = 0; k < w.samples_per_bit; ++k)
      if (series.samples[i * w.samples_per_bit + k] < threshold) ++dips;
    const double err0 = std::abs(dips - expect0);
    const double err1 = std::abs(dips - expect1);
    out[i] = err1 < err0 ? 1 : 0;  // tie goes to bit 0
  }
  return out;
}

Bits bfsk_decode_mean(const LuminanceSeries& series, const BfskParams& p, double split) {
  const std::vector<double> means = bfsk_window_means(series, p);
  const std::uint8_t dimmer_bit = p.dips_per_bit(p.f1) > p.dips_per_bit(p.f0) ? 1 : 0;
  Bits out(means.size());
  for (std::size_t i = 0; i < means.size(); ++i)
    out[i] = means[i] < split ? dimmer_bit : static_cast<std::uint8_t>(1 - dimmer_bit);
  return out;
}

Bits bfsk_decode_variance(const LuminanceSeries& series, const BfskParams& p, double split) {
  const std::vector<double> vars = bfsk_window_variances(series, p);
  const std::uint8_t jittery_bit = p.dips_per_bit(p.f1) > p.dips_per_bit(p.f0) ? 1 : 0;
  Bits out(vars.size());
  for (std::size_t i = 0; i < vars.size(); ++i)
    out[i] = vars[i] > split ? jittery_bit : static_cast<std::uint8_t>(1 - jittery_bit);
  return out;
}

Bits ook_decode(const LuminanceSeries& series, const OokParams& p, double threshold) {
  p.validate();
  const int rate = p.block_rate();
  const Windows w = split_windows(series, rate, 1);  // one block per window

  Bits out;
  int pending_on = 0;
  for (std::size_t i = 0; i < w.count; ++i) {
    const double level = window_mean(series.samples, i * w.samples_per_bit, w.samples_per_bit);
    if (level == threshold)
      fail(Errc::ThresholdAmbiguous, "block level sits exactly on the threshold");
    if (level > threshold) {
      ++pending_on;
      continue;
    }
    // dark block: closes a plain-1 codeword
    if (pending_on < p.enc1_len - 1)
      fail(Errc::MalformedCodeword, "dark block arrived before a full lit prelude");
    for (int z = 0; z < pending_on - (p.enc1_len - 1); ++z) out.push_back(0);
    out.push_back(1);
    pending_on = 0;
  }
  for (int z = 0; z < pending_on; ++z) out.push_back(0);  // trailing lit blocks are plain 0s
  return out;
}

BfskCalibration bfsk_calibrate(const BfskParams& p, double on_level, double off_level) {
  p.validate();
  const double q0 = static_cast<double>(p.dips_per_bit(p.f0)) / p.bit_blocks;
  const double q1 = static_cast<double>(p.dips_per_bit(p.f1)) / p.bit_blocks;
  const double gap = on_level - off_level;

  const double mean0 = on_level - q0 * gap;
  const double mean1 = on_level - q1 * gap;
  const double var0 = gap * gap * q0 * (1.0 - q0);
  const double var1 = gap * gap * q1 * (1.0 - q1);

  BfskCalibration cal;
  cal.dip_threshold = (on_level + off_level) / 2.0;
  cal.mean_split = (mean0 + mean1) / 2.0;
  cal.variance_split = (var0 + var1) / 2.0;
  return cal;
}

double ook_rate(double carrier, int enc1_len) {
  if (carrier <= 0.0) fail(Errc::InvalidParams, "carrier must be > 0");
  if (enc1_len < 1) fail(Errc::InvalidParams, "enc1_len must be >= 1");
  return 2.0 * carrier / (enc1_len + 1);
}

double ook_flicker(int enc1_len) {
  if (enc1_len < 1) fail(Errc::InvalidParams, "enc1_len must be >= 1");
  return 1.0 / enc1_len;
}

double bfsk_rate(double f1) {
  if (f1 <= 0.0) fail(Errc::InvalidParams, "f1 must be > 0");
  return f1;
}

double bfsk_flicker(double carrier, double f1) {
  if (f1 <= 0.0) fail(Errc::InvalidParams, "f1 must be > 0");
  if (carrier <= 0.0) fail(Errc::InvalidParams, "carrier must be > 0");
  const double denom = 2.0 * carrier / f1 - 0.5;
  if (denom <= 0.0) fail(Errc::InvalidParams, "2*carrier/f1 must exceed 0.5");
  return 1.0 / denom;
}

}  // namespace ledchan
