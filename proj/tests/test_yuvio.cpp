#include <cstdio>
#include <fstream>
#include <random>

#include "doctest.h"
#include "ledchan/yuvio.hpp"

using namespace ledchan;

namespace {

struct TempFile {
  explicit TempFile(std::string p) : path(std::move(p)) {}
  ~TempFile() { std::remove(path.c_str()); }
  std::string path;
};

FrameBuffer noise_frame(int w, int h, PixelFormat f, std::uint32_t seed) {
  FrameBuffer frame = FrameBuffer::make(w, h, f);
  std::mt19937 rng(seed);
  for (auto& b : frame.y) b = static_cast<std::uint8_t>(rng());
  for (auto& b : frame.u) b = static_cast<std::uint8_t>(rng());
  for (auto& b : frame.v) b = static_cast<std::uint8_t>(rng());
  return frame;
}

}  // namespace

TEST_CASE("luma offsets follow the raster formula") {
  CHECK(y_offset(1, 1, 4) == 1);
  CHECK(y_offset(3, 2, 4) == 7);
  CHECK(y_offset(4, 4, 4) == 16);    // last pixel of a 4x4 frame
  CHECK(y_offset(7, 9, 7) == 63);
  CHECK(y_index(0, 0, 4) == 0);
  CHECK(y_index(2, 1, 4) == y_offset(3, 2, 4) - 1);
  CHECK_THROWS_AS(y_offset(5, 1, 4), Error);
  CHECK_THROWS_AS(y_offset(0, 1, 4), Error);
}

TEST_CASE("4:2:0 chroma offsets reproduce the shared-sample layout") {
  // top-left quad shares the first chroma sample
  CHECK(uv_offset_420(1, 1, 4) == 1);
  CHECK(uv_offset_420(2, 1, 4) == 1);
  CHECK(uv_offset_420(1, 2, 4) == 1);
  CHECK(uv_offset_420(2, 2, 4) == 1);
  // the quad to its right
  CHECK(uv_offset_420(3, 2, 4) == 2);
  // second chroma row
  CHECK(uv_offset_420(3, 3, 4) == 4);
  CHECK_THROWS_AS(uv_offset_420(1, 1, 5), Error);
  try {
    uv_offset_420(1, 1, 5);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::OddWidth);
  }
}

TEST_CASE("every pixel of a 4x4 frame maps to the expected chroma cell") {
  // chroma subscripts (row, col) for the 16 luma pixels of a 4x4 frame
  const int expect_row[4] = {1, 1, 2, 2};
  const int expect_col[4] = {1, 1, 2, 2};
  for (int m = 1; m <= 4; ++m)
    for (int n = 1; n <= 4; ++n) {
      const std::size_t offset = uv_offset_420(n, m, 4);
      const std::size_t from_table =
          static_cast<std::size_t>(expect_row[m - 1] - 1) * 2 + expect_col[n - 1];
      CHECK(offset == from_table);
    }
}

TEST_CASE("0-based indices are the 1-based offsets shifted by one") {
  for (int row = 0; row < 6; ++row)
    for (int col = 0; col < 8; ++col) {
      CHECK(y_index(col, row, 8) == y_offset(col + 1, row + 1, 8) - 1);
      CHECK(uv_index_420(col, row, 8) == uv_offset_420(col + 1, row + 1, 8) - 1);
    }
}

TEST_CASE("4:4:4 chroma indexing degenerates to the luma raster") {
  for (int row = 0; row < 4; ++row)
    for (int col = 0; col < 4; ++col)
      CHECK(uv_index(PixelFormat::YUV444, col, row, 4) == y_index(col, row, 4));
}

TEST_CASE("4:2:2 chroma indexing halves columns only") {
  CHECK(uv_index(PixelFormat::YUV422, 0, 0, 4) == 0);
  CHECK(uv_index(PixelFormat::YUV422, 1, 0, 4) == 0);
  CHECK(uv_index(PixelFormat::YUV422, 2, 0, 4) == 1);
  CHECK(uv_index(PixelFormat::YUV422, 0, 1, 4) == 2);  // next row, not shared
}

TEST_CASE("plane sizes follow the format") {
  CHECK(frame_bytes(PixelFormat::YUV420, 4, 4) == 24);  // 16 Y + 4 U + 4 V
  CHECK(frame_bytes(PixelFormat::YUV422, 4, 4) == 32);
  CHECK(frame_bytes(PixelFormat::YUV444, 4, 4) == 48);
  CHECK_THROWS_AS(frame_bytes(PixelFormat::YUV420, 5, 4), Error);
  CHECK_THROWS_AS(frame_bytes(PixelFormat::YUV422, 5, 4), Error);

  const FrameBuffer f = FrameBuffer::make(6, 4, PixelFormat::YUV420);
  CHECK(f.y.size() == 24);
  CHECK(f.u.size() == 6);
  CHECK(f.v.size() == 6);
}

TEST_CASE("render_frame paints the ROI only") {
  const Roi roi{0, 0, 1, 1};
  const FrameBuffer f = render_frame(4, 4, PixelFormat::YUV420, roi, 200, 30);
  int diff = 0;
  for (auto b : f.y) diff += (b != 30);
  CHECK(diff == 1);
  CHECK(f.y[0] == 200);
  for (auto b : f.u) CHECK(b == 128);
}

TEST_CASE("render then extract recovers the LED level exactly") {
  const Roi roi{5, 3, 4, 2};
  const FrameBuffer f = render_frame(16, 8, PixelFormat::YUV420, roi, 173, 16);
  CHECK(extract_roi_mean(f, roi) == 173.0);
  const Roi whole{0, 0, 16, 8};
  const FrameBuffer flat = render_frame(16, 8, PixelFormat::YUV422, whole, 99, 0);
  CHECK(extract_roi_mean(flat, whole) == 99.0);
}

TEST_CASE("extract_roi_mean averages the Y bytes") {
  FrameBuffer f = FrameBuffer::make(4, 2, PixelFormat::YUV444, 0);
  for (int c = 0; c < 4; ++c) f.y[y_index(c, 0, 4)] = 255;
  const Roi roi{0, 0, 4, 2};
  CHECK(extract_roi_mean(f, roi) == doctest::Approx(127.5));
}

TEST_CASE("extract ignores chroma contents") {
  const Roi roi{1, 1, 2, 2};
  FrameBuffer a = render_frame(6, 6, PixelFormat::YUV420, roi, 180, 20);
  FrameBuffer b = a;
  for (auto& byte : b.u) byte = 7;
  for (auto& byte : b.v) byte = 250;
  CHECK(extract_roi_mean(a, roi) == extract_roi_mean(b, roi));
}

TEST_CASE("roi bounds are enforced") {
  const FrameBuffer f = FrameBuffer::make(4, 4, PixelFormat::YUV420);
  CHECK_THROWS_AS(extract_roi_mean(f, Roi{3, 3, 2, 2}), Error);
  CHECK_THROWS_AS(extract_roi_mean(f, Roi{0, 0, 0, 1}), Error);
  CHECK_THROWS_AS(render_frame(4, 4, PixelFormat::YUV420, Roi{-1, 0, 2, 2}, 1, 0), Error);
}

TEST_CASE("raw file write/read is the identity") {
  TempFile raw("yuvio_test.yuv");
  std::vector<FrameBuffer> frames;
  for (std::uint32_t i = 0; i < 3; ++i) frames.push_back(noise_frame(4, 4, PixelFormat::YUV420, i));

  const RawMeta meta = write_raw(raw.path, frames, 30.0);
  CHECK(meta.frames == 3);
  CHECK(std::ifstream(raw.path, std::ios::ate | std::ios::binary).tellg() == 72);

  const auto back = read_raw(raw.path, meta);
  REQUIRE(back.size() == frames.size());
  for (std::size_t i = 0; i < frames.size(); ++i) {
    CHECK(back[i].y == frames[i].y);
    CHECK(back[i].u == frames[i].u);
    CHECK(back[i].v == frames[i].v);
  }
}

TEST_CASE("raw reader flags a truncated file") {
  TempFile raw("yuvio_trunc.yuv");
  const RawMeta meta = write_raw(raw.path, {noise_frame(4, 4, PixelFormat::YUV420, 1)}, 30.0);
  {
    std::ofstream out(raw.path, std::ios::binary | std::ios::trunc);
    out << "short";
  }
  CHECK_THROWS_AS(read_raw(raw.path, meta), Error);
  try {
    read_raw(raw.path, meta);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::SizeMismatch);
  }
}

TEST_CASE("raw writer accepts an empty stream") {
  TempFile raw("yuvio_empty.yuv");
  const RawMeta meta = write_raw(raw.path, {}, 30.0);
  CHECK(meta.frames == 0);
  CHECK(read_raw(raw.path, meta).empty());
}

TEST_CASE("raw writer rejects mixed geometries") {
  TempFile raw("yuvio_mixed.yuv");
  std::vector<FrameBuffer> frames = {noise_frame(4, 4, PixelFormat::YUV420, 1),
                                     noise_frame(6, 4, PixelFormat::YUV420, 2)};
  CHECK_THROWS_AS(write_raw(raw.path, frames, 30.0), Error);
}

TEST_CASE("sidecar round-trips the metadata") {
  TempFile sidecar("yuvio_test.meta");
  RawMeta meta;
  meta.width = 64;
  meta.height = 36;
  meta.format = PixelFormat::YUV422;
  meta.fps = 25.0;
  meta.frames = 12;
  save_sidecar(sidecar.path, meta);

  const RawMeta back = load_sidecar(sidecar.path);
  CHECK(back.width == 64);
  CHECK(back.height == 36);
  CHECK(back.format == PixelFormat::YUV422);
  CHECK(back.fps == 25.0);
  CHECK(back.frames == 12);
}

TEST_CASE("sidecar parse failures") {
  TempFile sidecar("yuvio_bad.meta");
  {
    std::ofstream out(sidecar.path);
    out << "width=4\nheight=4\nformat=yuv999\nfps=30\nframes=1\n";
  }
  CHECK_THROWS_AS(load_sidecar(sidecar.path), Error);
  {
    std::ofstream out(sidecar.path, std::ios::trunc);
    out << "width=4\nheight=4\n";  // missing keys
  }
  CHECK_THROWS_AS(load_sidecar(sidecar.path), Error);
}

TEST_CASE("pixel format names") {
  CHECK(parse_pixel_format("yuv420") == PixelFormat::YUV420);
  CHECK(parse_pixel_format("YUV444") == PixelFormat::YUV444);
  CHECK(parse_pixel_format("422") == PixelFormat::YUV422);
  CHECK_THROWS_AS(parse_pixel_format("rgb24"), Error);
}

TEST_CASE("frames_to_series extracts one mean per frame") {
  const Roi roi{0, 0, 4, 4};
  std::vector<FrameBuffer> frames;
  for (std::uint8_t level : {10, 20, 30})
    frames.push_back(render_frame(4, 4, PixelFormat::YUV420, roi, level, 0));

  const LuminanceSeries s = frames_to_series(frames, roi, 30.0);
  CHECK(s.sample_rate == 30.0);
  CHECK(s.samples == std::vector<double>{10.0, 20.0, 30.0});
}

TEST_CASE("frames_to_series follows a rendered flicker pattern") {
  const Roi roi{2, 1, 2, 2};
  std::vector<FrameBuffer> frames;
  for (int k = 0; k < 12; ++k)
    frames.push_back(
        render_frame(8, 4, PixelFormat::YUV420, roi, k % 3 == 2 ? 16 : 235, 16));
  const LuminanceSeries s = frames_to_series(frames, roi, 30.0);
  for (int k = 0; k < 12; ++k) CHECK(s.samples[static_cast<std::size_t>(k)] == (k % 3 == 2 ? 16.0 : 235.0));
}

TEST_CASE("frames_to_series error paths") {
  const Roi roi{0, 0, 2, 2};
  CHECK_THROWS_AS(frames_to_series({}, roi, 30.0), Error);
  try {
    frames_to_series({}, roi, 30.0);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::EmptySeries);
  }

  std::vector<FrameBuffer> mixed = {FrameBuffer::make(4, 4, PixelFormat::YUV420),
                                    FrameBuffer::make(6, 4, PixelFormat::YUV420)};
  CHECK_THROWS_AS(frames_to_series(mixed, roi, 30.0), Error);
}
