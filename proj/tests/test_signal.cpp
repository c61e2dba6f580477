#include <random>
#include <string>

#include "doctest.h"
#include "ledchan/signal.hpp"

using namespace ledchan;

namespace {

BlockSequence seq_of(int rate, const std::string& pattern) {
  return BlockSequence::parse(std::to_string(rate) + ":" + pattern);
}

BlockSequence all_on(int blocks) { return seq_of(30, std::string(blocks, '1')); }

}  // namespace

TEST_CASE("run_lengths decomposes maximal runs in order") {
  const RunStats s = run_lengths(seq_of(30, "1101"));
  CHECK(s.on_runs == std::vector<int>{2, 1});
  CHECK(s.off_runs == std::vector<int>{1});
  CHECK(s.d_on == doctest::Approx(1.5));
  CHECK(s.d_off == doctest::Approx(1.0));
}

TEST_CASE("run_lengths of a steady-on sequence") {
  const RunStats s = run_lengths(all_on(30));
  CHECK(s.on_runs == std::vector<int>{30});
  CHECK(s.off_runs.empty());
  CHECK(s.d_on == doctest::Approx(30.0));
}

TEST_CASE("run_lengths of a strict alternation") {
  std::string pattern;
  for (int i = 0; i < 15; ++i) pattern += "10";
  const RunStats s = run_lengths(seq_of(30, pattern));
  CHECK(s.d_on == doctest::Approx(1.0));
  CHECK(s.d_off == doctest::Approx(1.0));
}

TEST_CASE("run_lengths rejects an empty sequence") {
  CHECK_THROWS_WITH_AS(run_lengths(seq_of(30, "")), doctest::Contains("empty"), Error);
}

TEST_CASE("run_lengths partitions the sequence") {
  // reconstructing from the ordered runs must reproduce the input exactly
  std::mt19937 rng(99);
  for (int round = 0; round < 200; ++round) {
    const int n = 1 + static_cast<int>(rng() % 64);
    std::string pattern;
    for (int i = 0; i < n; ++i) pattern += (rng() & 1) ? '1' : '0';
    const BlockSequence seq = seq_of(30, pattern);
    const RunStats s = run_lengths(seq);

    std::string rebuilt;
    bool on = seq.states.front() == Block::On;
    std::size_t io = 0, ioff = 0;
    while (io < s.on_runs.size() || ioff < s.off_runs.size()) {
      const int len = on ? s.on_runs[io++] : s.off_runs[ioff++];
      rebuilt += std::string(static_cast<std::size_t>(len), on ? '1' : '0');
      on = !on;
    }
    CHECK(rebuilt == pattern);
  }
}

TEST_CASE("flicker_value is zero iff there are no dark blocks") {
  CHECK(flicker_value(all_on(30)) == 0.0);
  CHECK(flicker_value(seq_of(30, "111")) == 0.0);
  CHECK(flicker_value(seq_of(30, "1110")) > 0.0);
}

TEST_CASE("flicker_value evaluates d_off^2/d_on") {
  // [off, off, on]: d_off = 2, d_on = 1
  CHECK(flicker_value(seq_of(30, "001")) == doctest::Approx(4.0));
  // mean on-run 5, mean off-run 2 -> 4/5
  CHECK(flicker_value(seq_of(30, "111110011111001111100")) ==
        doctest::Approx(0.8).epsilon(1e-12));
}

TEST_CASE("flicker_value rejects an all-dark sequence") {
  CHECK_THROWS_AS(flicker_value(seq_of(30, "0000")), Error);
  try {
    flicker_value(seq_of(30, "0000"));
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NoOnBlocks);
  }
}

TEST_CASE("flicker_value doubles when every run doubles") {
  std::mt19937 rng(7);
  for (int round = 0; round < 100; ++round) {
    const int n = 2 + static_cast<int>(rng() % 40);
    std::string pattern(static_cast<std::size_t>(n), '0');
    for (int i = 0; i < n; ++i) pattern[static_cast<std::size_t>(i)] = (rng() & 1) ? '1' : '0';
    pattern[rng() % pattern.size()] = '1';  // at least one lit block
    if (pattern.find('0') == std::string::npos) continue;

    std::string doubled;
    for (char c : pattern) doubled += {c, c};
    CHECK(flicker_value(seq_of(30, doubled)) ==
          doctest::Approx(2.0 * flicker_value(seq_of(30, pattern))).epsilon(1e-9));
  }
}

TEST_CASE("brightness_index counts lit blocks") {
  CHECK(brightness_index(all_on(30)) == 30);
  CHECK(brightness_index(seq_of(30, "0000")) == 0);
  CHECK(brightness_index(seq_of(30, "101")) == 2);
}

TEST_CASE("covertness classes follow the 20/50 ms bounds") {
  CHECK(classify_covertness(15.0) == CovertnessClass::Imperceptible);
  CHECK(classify_covertness(40.0) == CovertnessClass::TinyDither);
  CHECK(classify_covertness(100.0) == CovertnessClass::Perceptible);
  // bounds are inclusive on the dither side
  CHECK(classify_covertness(20.0) == CovertnessClass::TinyDither);
  CHECK(classify_covertness(50.0) == CovertnessClass::TinyDither);
  CHECK_THROWS_AS(classify_covertness(-1.0), Error);
}

TEST_CASE("covertness is monotone in duration") {
  CovertnessClass last = CovertnessClass::Imperceptible;
  for (double ms = 0.0; ms <= 120.0; ms += 0.5) {
    const CovertnessClass c = classify_covertness(ms);
    CHECK(static_cast<int>(c) >= static_cast<int>(last));
    last = c;
  }
}

TEST_CASE("block sequence text form round-trips") {
  const BlockSequence seq = seq_of(30, "111011101110");
  CHECK(seq.to_text() == "30:111011101110");
  CHECK(BlockSequence::parse(seq.to_text()).states == seq.states);

  CHECK(BlockSequence::parse("30:").states.empty());
  CHECK_THROWS_AS(BlockSequence::parse("banana"), Error);
  CHECK_THROWS_AS(BlockSequence::parse("0:101"), Error);
  CHECK_THROWS_AS(BlockSequence::parse("30:10x"), Error);
}
