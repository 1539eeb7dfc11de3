#pragma once

#include <charconv>
#include <string>
#include <system_error>

namespace witbound {

/// Renders a double with 12 significant digits in the shortest of fixed or
/// scientific form, independent of locale and stream state. Used everywhere a
/// number crosses a process boundary (CSV files, CLI output) so that repeated
/// runs produce byte-identical text.
inline std::string format_sig(double value) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), value,
                           std::chars_format::general, 12);
  // 64 bytes always suffice for general format at this precision
  return std::string(buf, res.ptr);
}

}  // namespace witbound
