#pragma once

// Text and token conversions for the CLI surface.  Text mode treats each
// Unicode scalar as one symbol; token mode is comma-separated decimal.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include "lcsb/core.hpp"

namespace lcsb {

class parse_error : public std::runtime_error {
public:
  explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

/// Decodes UTF-8 into one symbol per Unicode scalar.
inline Sequence sequence_from_text(std::string_view text) {
  Sequence out;
  std::size_t i = 0;
  while (i < text.size()) {
    const unsigned char c = text[i];
    std::uint32_t cp = 0;
    std::size_t len = 0;
    if (c < 0x80) {
      cp = c;
      len = 1;
    } else if ((c & 0xE0) == 0xC0) {
      cp = c & 0x1F;
      len = 2;
    } else if ((c & 0xF0) == 0xE0) {
      cp = c & 0x0F;
      len = 3;
    } else if ((c & 0xF8) == 0xF0) {
      cp = c & 0x07;
      len = 4;
    } else {
      throw parse_error("invalid UTF-8 byte");
    }
    if (i + len > text.size()) throw parse_error("truncated UTF-8 sequence");
    for (std::size_t k = 1; k < len; ++k) {
      const unsigned char cc = text[i + k];
      if ((cc & 0xC0) != 0x80) throw parse_error("invalid UTF-8 continuation");
      cp = (cp << 6) | (cc & 0x3F);
    }
    out.push_back(static_cast<Symbol>(cp));
    i += len;
  }
  return out;
}

/// Comma-separated nonnegative decimal integers.
inline Sequence sequence_from_tokens(std::string_view text) {
  Sequence out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
    std::size_t start = i;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
    if (i == start) throw parse_error("expected a decimal token");
    long long v = 0;
    for (std::size_t k = start; k < i; ++k) {
      v = v * 10 + (text[k] - '0');
      if (v >= (1LL << 31)) throw parse_error("token out of symbol range");
    }
    out.push_back(static_cast<Symbol>(v));
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
    if (i < text.size()) {
      if (text[i] != ',') throw parse_error("expected ','");
      ++i;
    }
  }
  return out;
}

inline std::string sequence_to_tokens(const Sequence& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(s[i]);
  }
  return out;
}

/// Renders printable-ASCII symbol codes verbatim and maps small generator
/// codes 0..25 to letters; falls back to token form otherwise.
inline std::string sequence_to_text(const Sequence& s) {
  bool printable = true, small = true;
  for (Symbol c : s) {
    if (c < 0x21 || c > 0x7E) printable = false;
    if (c < 0 || c >= 26) small = false;
  }
  if (s.empty()) return "";
  std::string out;
  if (printable) {
    for (Symbol c : s) out += static_cast<char>(c);
    return out;
  }
  if (small) {
    for (Symbol c : s) out += static_cast<char>('a' + c);
    return out;
  }
  return sequence_to_tokens(s);
}

}  // namespace lcsb
