#pragma once

#include <stdexcept>
#include <string>

namespace ledchan {

/// Machine-readable failure reasons. Every throwing operation in the library
/// reports one of these so callers (and the CLI) can branch without parsing
/// message text.
enum class Errc {
  EmptySequence,
  NoOnBlocks,
  NegativeDuration,
  InvalidParams,
  WindowMismatch,
  NyquistViolation,
  ThresholdAmbiguous,
  MalformedCodeword,
  DistanceBelowDrop,
  AngleOutOfRange,
  BeyondEmissionCone,
  OutOfBounds,
  OddWidth,
  RoiOutOfBounds,
  SizeMismatch,
  UnknownFormat,
  GeometryMismatch,
  EmptySeries,
  LengthMismatch,
  Empty,
  OutOfRange,
  ZeroCapacity,
  NotReachable,
  ParseError,
  IoError,
};

constexpr const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::EmptySequence: return "EmptySequence";
    case Errc::NoOnBlocks: return "NoOnBlocks";
    case Errc::NegativeDuration: return "NegativeDuration";
    case Errc::InvalidParams: return "InvalidParams";
    case Errc::WindowMismatch: return "WindowMismatch";
    case Errc::NyquistViolation: return "NyquistViolation";
    case Errc::ThresholdAmbiguous: return "ThresholdAmbiguous";
    case Errc::MalformedCodeword: return "MalformedCodeword";
    case Errc::DistanceBelowDrop: return "DistanceBelowDrop";
    case Errc::AngleOutOfRange: return "AngleOutOfRange";
    case Errc::BeyondEmissionCone: return "BeyondEmissionCone";
    case Errc::OutOfBounds: return "OutOfBounds";
    case Errc::OddWidth: return "OddWidth";
    case Errc::RoiOutOfBounds: return "RoiOutOfBounds";
    case Errc::SizeMismatch: return "SizeMismatch";
    case Errc::UnknownFormat: return "UnknownFormat";
    case Errc::GeometryMismatch: return "GeometryMismatch";
    case Errc::EmptySeries: return "EmptySeries";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::Empty: return "Empty";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::ZeroCapacity: return "ZeroCapacity";
    case Errc::NotReachable: return "NotReachable";
    case Errc::ParseError: return "ParseError";
    case Errc::IoError: return "IoError";
  }
  return "Error";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) { throw Error(code, message); }

}  // namespace ledchan
