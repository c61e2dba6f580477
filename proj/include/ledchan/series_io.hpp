#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "ledchan/modem.hpp"

namespace ledchan {

/// Provenance pairs written as "# key=value" comment lines ahead of the data.
using Provenance = std::vector<std::pair<std::string, std::string>>;

/// CSV form of a luminance series: comment lines, a "frame,t_seconds,y"
/// header, then one row per frame. A "# fps=..." comment always carries the
/// exact sample rate.
void write_series_csv(std::ostream& out, const LuminanceSeries& series,
                      const Provenance& provenance = {});
std::string series_to_csv(const LuminanceSeries& series, const Provenance& provenance = {});

/// Parse a series back. Accepts both the 3-column form above and plain
/// "t,y" rows; the sample rate comes from the "# fps" comment when present,
/// otherwise from the timestamp spacing. ParseError when neither works.
LuminanceSeries read_series_csv(std::istream& in);
LuminanceSeries series_from_csv(const std::string& text);

/// Shortest decimal form that round-trips the value; used by every CSV
/// writer so repeated runs are byte-identical.
std::string fmt_num(double v);

}  // namespace ledchan
