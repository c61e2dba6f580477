#include "ledchan/yuvio.hpp"

#include <cctype>
#include <filesystem>

#include "ledchan/kvfile.hpp"
#include "ledchan/series_io.hpp"

namespace ledchan {

const char* to_string(PixelFormat f) noexcept {
  switch (f) {
    case PixelFormat::YUV444: return "yuv444";
    case PixelFormat::YUV422: return "yuv422";
    case PixelFormat::YUV420: return "yuv420";
  }
  return "?";
}

PixelFormat parse_pixel_format(std::string_view name) {
  std::string lower(name);
  for (char& c : lower) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (lower == "yuv444" || lower == "444") return PixelFormat::YUV444;
  if (lower == "yuv422" || lower == "422") return PixelFormat::YUV422;
  if (lower == "yuv420" || lower == "420") return PixelFormat::YUV420;
  fail(Errc::UnknownFormat, "unknown pixel format '" + std::string(name) + "'");
}

PlaneDims chroma_dims(PixelFormat f, int width, int height) {
  if (width < 1 || height < 1) fail(Errc::InvalidParams, "frame dimensions must be positive");
  switch (f) {
    case PixelFormat::YUV444: return {width, height};
    case PixelFormat::YUV422:
      if (width % 2) fail(Errc::InvalidParams, "yuv422 needs an even width");
      return {width / 2, height};
    case PixelFormat::YUV420:
      if (width % 2 || height % 2) fail(Errc::InvalidParams, "yuv420 needs even dimensions");
      return {width / 2, height / 2};
  }
  fail(Errc::UnknownFormat, "bad pixel format enum");
}

std::size_t frame_bytes(PixelFormat f, int width, int height) {
  const std::size_t luma = static_cast<std::size_t>(width) * height;
  return luma + 2 * chroma_dims(f, width, height).size();
}

FrameBuffer FrameBuffer::make(int width, int height, PixelFormat format, std::uint8_t fill_y,
                              std::uint8_t fill_uv) {
  const PlaneDims chroma = chroma_dims(format, width, height);
  FrameBuffer frame;
  frame.width = width;
  frame.height = height;
  frame.format = format;
  frame.y.assign(static_cast<std::size_t>(width) * height, fill_y);
  frame.u.assign(chroma.size(), fill_uv);
  frame.v.assign(chroma.size(), fill_uv);
  return frame;
}

void validate_roi(const Roi& roi, int frame_width, int frame_height) {
  if (roi.width < 1 || roi.height < 1) fail(Errc::RoiOutOfBounds, "roi must be non-empty");
  if (roi.left < 0 || roi.top < 0 || roi.left + roi.width > frame_width ||
      roi.top + roi.height > frame_height)
    fail(Errc::RoiOutOfBounds, "roi extends outside the frame");
}

std::size_t y_offset(int col, int row, int width) {
  if (width < 1) fail(Errc::InvalidParams, "width must be >= 1");
  if (col < 1 || col > width || row < 1) fail(Errc::OutOfBounds, "pixel outside the frame");
  return static_cast<std::size_t>(row - 1) * width + col;
}

std::size_t uv_offset_420(int col, int row, int width) {
  if (width < 1) fail(Errc::InvalidParams, "width must be >= 1");
  if (width % 2) fail(Errc::OddWidth, "4:2:0 chroma indexing needs an even width");
  if (col < 1 || col > width || row < 1) fail(Errc::OutOfBounds, "pixel outside the frame");
  const std::size_t chroma_row = (row + 1) / 2;
  const std::size_t chroma_col = (col + 1) / 2;
  return (chroma_row - 1) * (width / 2) + chroma_col;
}

std::size_t y_index(int col, int row, int width) { return y_offset(col + 1, row + 1, width) - 1; }

std::size_t uv_index_420(int col, int row, int width) {
  return uv_offset_420(col + 1, row + 1, width) - 1;
}

std::size_t uv_index(PixelFormat f, int col, int row, int width) {
  switch (f) {
    case PixelFormat::YUV444: return y_index(col, row, width);
    case PixelFormat::YUV422: {
      if (width % 2) fail(Errc::OddWidth, "4:2:2 chroma indexing needs an even width");
      if (col < 0 || col >= width || row < 0) fail(Errc::OutOfBounds, "pixel outside the frame");
      return static_cast<std::size_t>(row) * (width / 2) + col / 2;
    }
    case PixelFormat::YUV420: return uv_index_420(col, row, width);
  }
  fail(Errc::UnknownFormat, "bad pixel format enum");
}

FrameBuffer render_frame(int width, int height, PixelFormat format, const Roi& roi,
                         std::uint8_t led_y, std::uint8_t ambient_y) {
  validate_roi(roi, width, height);
  FrameBuffer frame = FrameBuffer::make(width, height, format, ambient_y, 128);
  for (int r = roi.top; r < roi.top + roi.height; ++r)
    for (int c = roi.left; c < roi.left + roi.width; ++c) frame.y[y_index(c, r, width)] = led_y;
  return frame;
}

double extract_roi_mean(const FrameBuffer& frame, const Roi& roi) {
  validate_roi(roi, frame.width, frame.height);
  double acc = 0.0;
  for (int r = roi.top; r < roi.top + roi.height; ++r)
    for (int c = roi.left; c < roi.left + roi.width; ++c)
      acc += frame.y[y_index(c, r, frame.width)];
  return acc / (static_cast<double>(roi.width) * roi.height);
}

namespace {

void check_frame_shape(const FrameBuffer& frame) {
  const PlaneDims chroma = chroma_dims(frame.format, frame.width, frame.height);
  const auto luma = static_cast<std::size_t>(frame.width) * frame.height;
  if (frame.y.size() != luma || frame.u.size() != chroma.size() ||
      frame.v.size() != chroma.size())
    fail(Errc::SizeMismatch, "frame plane sizes do not match its format");
}

}  // namespace

RawFrameReader::RawFrameReader(const std::string& path, const RawMeta& meta)
    : in_(path, std::ios::binary), meta_(meta) {
  if (!in_) fail(Errc::IoError, "cannot open '" + path + "'");
  const auto expected =
      meta.frames == 0 ? 0 : meta.frames * frame_bytes(meta.format, meta.width, meta.height);
  const auto actual = static_cast<std::size_t>(std::filesystem::file_size(path));
  if (actual != expected)
    fail(Errc::SizeMismatch, "file is " + std::to_string(actual) + " bytes, metadata implies " +
                                 std::to_string(expected));
}

std::optional<FrameBuffer> RawFrameReader::next() {
  if (read_ >= meta_.frames) return std::nullopt;
  FrameBuffer frame = FrameBuffer::make(meta_.width, meta_.height, meta_.format);
  auto read_plane = [&](std::vector<std::uint8_t>& plane) {
    in_.read(reinterpret_cast<char*>(plane.data()), static_cast<std::streamsize>(plane.size()));
    if (static_cast<std::size_t>(in_.gcount()) != plane.size())
      fail(Errc::SizeMismatch, "raw file truncated mid-frame");
  };
  read_plane(frame.y);
  read_plane(frame.u);
  read_plane(frame.v);
  ++read_;
  return frame;
}

RawMeta write_raw(const std::string& path, const std::vector<FrameBuffer>& frames, double fps) {
  if (fps <= 0.0) fail(Errc::InvalidParams, "fps must be > 0");
  RawMeta meta;
  meta.fps = fps;
  meta.frames = frames.size();
  if (!frames.empty()) {
    meta.width = frames.front().width;
    meta.height = frames.front().height;
    meta.format = frames.front().format;
  }

  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(Errc::IoError, "cannot open '" + path + "' for writing");
  for (const FrameBuffer& frame : frames) {
    if (frame.width != meta.width || frame.height != meta.height || frame.format != meta.format)
      fail(Errc::GeometryMismatch, "all frames in a raw file must share geometry");
    check_frame_shape(frame);
    for (const auto* plane : {&frame.y, &frame.u, &frame.v})
      out.write(reinterpret_cast<const char*>(plane->data()),
                static_cast<std::streamsize>(plane->size()));
  }
  if (!out) fail(Errc::IoError, "write to '" + path + "' failed");
  return meta;
}

std::vector<FrameBuffer> read_raw(const std::string& path, const RawMeta& meta) {
  RawFrameReader reader(path, meta);
  std::vector<FrameBuffer> frames;
  frames.reserve(meta.frames);
  while (auto frame = reader.next()) frames.push_back(std::move(*frame));
  return frames;
}

void save_sidecar(const std::string& path, const RawMeta& meta) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) fail(Errc::IoError, "cannot open '" + path + "' for writing");
  out << "width=" << meta.width << "\n";
  out << "height=" << meta.height << "\n";
  out << "format=" << to_string(meta.format) << "\n";
  out << "fps=" << fmt_num(meta.fps) << "\n";
  out << "frames=" << meta.frames << "\n";
  if (!out) fail(Errc::IoError, "write to '" + path + "' failed");
}

RawMeta load_sidecar(const std::string& path) {
  const KvMap kv = read_kv_file(path);
  RawMeta meta;
  for (const char* key : {"width", "height", "format", "fps", "frames"})
    if (!kv_get(kv, key)) fail(Errc::ParseError, std::string("sidecar is missing '") + key + "'");
  meta.width = static_cast<int>(kv_number(kv, "width", 0));
  meta.height = static_cast<int>(kv_number(kv, "height", 0));
  meta.format = parse_pixel_format(*kv_get(kv, "format"));
  meta.fps = kv_number(kv, "fps", 0);
  meta.frames = static_cast<std::size_t>(kv_number(kv, "frames", 0));
  if (meta.width < 1 || meta.height < 1 || meta.fps <= 0.0)
    fail(Errc::ParseError, "sidecar has non-positive dimensions or fps");
  return meta;
}

LuminanceSeries frames_to_series(const std::vector<FrameBuffer>& frames, const Roi& roi,
                                 double fps) {
  if (fps <= 0.0) fail(Errc::InvalidParams, "fps must be > 0");
  if (frames.empty()) fail(Errc::EmptySeries, "no frames to extract from");
  const FrameBuffer& first = frames.front();
  LuminanceSeries series;
  series.sample_rate = fps;
  series.samples.reserve(frames.size());
  for (const FrameBuffer& frame : frames) {
    if (frame.width != first.width || frame.height != first.height ||
        frame.format != first.format)
      fail(Errc::GeometryMismatch, "frames differ in geometry");
    series.samples.push_back(extract_roi_mean(frame, roi));
  }
  return series;
}

}  // namespace ledchan
