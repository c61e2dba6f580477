#pragma once

#include <cstddef>
#include <cstdint>
#include <fstream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ledchan/error.hpp"
#include "ledchan/modem.hpp"

namespace ledchan {

enum class PixelFormat { YUV444, YUV422, YUV420 };

const char* to_string(PixelFormat f) noexcept;
PixelFormat parse_pixel_format(std::string_view name);  // UnknownFormat

/// Chroma plane width/height for a format.
struct PlaneDims {
  int width = 0;
  int height = 0;
  std::size_t size() const { return static_cast<std::size_t>(width) * height; }
};

PlaneDims chroma_dims(PixelFormat f, int width, int height);      // InvalidParams on odd dims
std::size_t frame_bytes(PixelFormat f, int width, int height);    // Y + U + V

/// Planar raster frame: full-resolution luma plane plus two subsampled
/// chroma planes.
struct FrameBuffer {
  int width = 0;
  int height = 0;
  PixelFormat format = PixelFormat::YUV420;
  std::vector<std::uint8_t> y;
  std::vector<std::uint8_t> u;
  std::vector<std::uint8_t> v;

  static FrameBuffer make(int width, int height, PixelFormat format, std::uint8_t fill_y = 0,
                          std::uint8_t fill_uv = 128);
  std::size_t bytes() const { return y.size() + u.size() + v.size(); }
};

/// Pixel rectangle covering the indicator, 0-based.
struct Roi {
  int left = 0;
  int top = 0;
  int width = 0;
  int height = 0;
};

void validate_roi(const Roi& roi, int frame_width, int frame_height);  // RoiOutOfBounds

// -- Plane offset arithmetic ------------------------------------------------
//
// The published index formulas are 1-based: pixel (n, m) of a width-w frame
// has Y offset (m-1)*w + n, and for 4:2:0 chroma
// (floor((m+1)/2) - 1) * w/2 + floor((n+1)/2). They are kept verbatim here;
// the 0-based *_index variants are the conventional API and equal the
// 1-based results minus one.

std::size_t y_offset(int col, int row, int width);       // 1-based; OutOfBounds
std::size_t uv_offset_420(int col, int row, int width);  // 1-based; OutOfBounds, OddWidth

std::size_t y_index(int col, int row, int width);        // 0-based
std::size_t uv_index_420(int col, int row, int width);   // 0-based
std::size_t uv_index(PixelFormat f, int col, int row, int width);  // 0-based, any format

// -- Synthetic frames and extraction ----------------------------------------

/// Flat frame with the ROI at led_y over an ambient_y background; chroma is
/// neutral (the channel is luminance-only).
FrameBuffer render_frame(int width, int height, PixelFormat format, const Roi& roi,
                         std::uint8_t led_y, std::uint8_t ambient_y);

/// Arithmetic mean of the Y bytes inside the ROI.
double extract_roi_mean(const FrameBuffer& frame, const Roi& roi);

// -- Raw planar file I/O -----------------------------------------------------
//
// Frames are stored back to back, planes Y then U then V, no header. The
// sidecar is a key-value text file: width=, height=, format=, fps=, frames=.

struct RawMeta {
  int width = 0;
  int height = 0;
  PixelFormat format = PixelFormat::YUV420;
  double fps = 25.0;
  std::size_t frames = 0;
};

/// Streaming single-consumer reader over a raw planar file.
class RawFrameReader {
 public:
  RawFrameReader(const std::string& path, const RawMeta& meta);  // IoError, SizeMismatch
  std::optional<FrameBuffer> next();
  const RawMeta& meta() const { return meta_; }

 private:
  std::ifstream in_;
  RawMeta meta_;
  std::size_t read_ = 0;
};

RawMeta write_raw(const std::string& path, const std::vector<FrameBuffer>& frames, double fps);
std::vector<FrameBuffer> read_raw(const std::string& path, const RawMeta& meta);

void save_sidecar(const std::string& path, const RawMeta& meta);
RawMeta load_sidecar(const std::string& path);  // IoError, ParseError, UnknownFormat

/// Bridge to the demodulators: per-frame ROI mean, timestamped at k/fps.
LuminanceSeries frames_to_series(const std::vector<FrameBuffer>& frames, const Roi& roi,
                                 double fps);  // EmptySeries, GeometryMismatch

}  // namespace ledchan
