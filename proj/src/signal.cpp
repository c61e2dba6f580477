#include "ledchan/signal.hpp"

#include <charconv>
#include <numeric>

namespace ledchan {

namespace {

double mean(const std::vector<int>& v) {
  return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

}  // namespace

std::string BlockSequence::to_text() const {
  if (block_rate < 1) fail(Errc::InvalidParams, "block_rate must be >= 1");
  std::string out = std::to_string(block_rate);
  out += ':';
  out.reserve(out.size() + states.size());
  for (Block b : states) out += (b == Block::On ? '1' : '0');
  return out;
}

BlockSequence BlockSequence::parse(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) fail(Errc::ParseError, "expected '<rate>:<pattern>'");
  int rate = 0;
  const char* first = text.data();
  const char* last = text.data() + colon;
  auto [ptr, ec] = std::from_chars(first, last, rate);
  if (ec != std::errc{} || ptr != last || rate < 1)
    fail(Errc::ParseError, "bad block rate in '" + std::string(text.substr(0, colon)) + "'");

  BlockSequence seq;
  seq.block_rate = rate;
  seq.states.reserve(text.size() - colon - 1);
  for (char c : text.substr(colon + 1)) {
    if (c == '1')
      seq.states.push_back(Block::On);
    else if (c == '0')
      seq.states.push_back(Block::Off);
    else
      fail(Errc::ParseError, std::string("pattern character must be '0' or '1', got '") + c + "'");
  }
  return seq;
}

const char* to_string(CovertnessClass c) noexcept {
  switch (c) {
    case CovertnessClass::Imperceptible: return "imperceptible";
    case CovertnessClass::TinyDither: return "tiny-dither";
    case CovertnessClass::Perceptible: return "perceptible";
  }
  return "?";
}

RunStats run_lengths(const BlockSequence& seq) {
  if (seq.states.empty()) fail(Errc::EmptySequence, "cannot compute runs of an empty sequence");

  RunStats stats;
  Block current = seq.states.front();
  int length = 0;
  auto flush = [&] { (current == Block::On ? stats.on_runs : stats.off_runs).push_back(length); };
  for (Block b : seq.states) {
    if (b == current) {
      ++length;
    } else {
      flush();
      current = b;
      length = 1;
    }
  }
  flush();

  if (!stats.on_runs.empty()) stats.d_on = mean(stats.on_runs);
  if (!stats.off_runs.empty()) stats.d_off = mean(stats.off_runs);
  return stats;
}

double flicker_value(const BlockSequence& seq) {
  const RunStats stats = run_lengths(seq);
  if (stats.on_runs.empty()) fail(Errc::NoOnBlocks, "flicker value needs at least one lit block");
  if (stats.off_runs.empty()) return 0.0;
  return stats.d_off * stats.d_off / stats.d_on;
}

int brightness_index(const BlockSequence& seq) {
  int on = 0;
  for (Block b : seq.states)
    if (b == Block::On) ++on;
  return on;
}

CovertnessClass classify_covertness(double off_run_duration_ms) {
  if (off_run_duration_ms < 0.0) fail(Errc::NegativeDuration, "duration must be >= 0 ms");
  if (off_run_duration_ms < 20.0) return CovertnessClass::Imperceptible;
  if (off_run_duration_ms <= 50.0) return CovertnessClass::TinyDither;
  return CovertnessClass::Perceptible;
}

}  // namespace ledchan
