#pragma once

#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ctm/sequence.hpp"

namespace ctm {

// Integer input stays integral; a single non-integer token makes the whole
// sequence floating point.
using ParsedSequence = std::variant<Sequence<std::int64_t>, Sequence<double>>;

inline std::size_t parsed_size(const ParsedSequence& s) {
  return std::visit([](const auto& v) { return v.size(); }, s);
}

// Numbers separated by commas and/or whitespace (one per line works too).
inline ParsedSequence parse_sequence(std::string_view text) {
  std::vector<std::string_view> tokens;
  std::size_t k = 0;
  auto separator = [](char c) {
    return c == ',' || c == ' ' || c == '\t' || c == '\n' || c == '\r';
  };
  while (k < text.size()) {
    while (k < text.size() && separator(text[k])) ++k;
    const std::size_t begin = k;
    while (k < text.size() && !separator(text[k])) ++k;
    if (k > begin) tokens.push_back(text.substr(begin, k - begin));
  }

  Sequence<std::int64_t> ints;
  ints.reserve(tokens.size());
  bool integral = true;
  for (const auto tok : tokens) {
    std::int64_t v = 0;
    const auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || end != tok.data() + tok.size()) {
      integral = false;
      break;
    }
    ints.push_back(v);
  }
  if (integral) return ints;

  Sequence<double> reals;
  reals.reserve(tokens.size());
  for (const auto tok : tokens) {
    std::string_view body = tok;
    if (!body.empty() && body.front() == '+') body.remove_prefix(1);
    double v = 0;
    const auto [end, ec] = std::from_chars(body.data(), body.data() + body.size(), v);
    if (ec != std::errc() || end != body.data() + body.size())
      throw Error(ErrorKind::InvalidInput, "not a number: '" + std::string(tok) + "'");
    if (!std::isfinite(v))
      throw Error(ErrorKind::InvalidInput, "non-finite value: '" + std::string(tok) + "'");
    reals.push_back(v);
  }
  return reals;
}

inline ParsedSequence read_sequence_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::InvalidInput, "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_sequence(buf.str());
}

}  // namespace ctm
