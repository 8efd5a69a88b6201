#include "zerosum/parse.hpp"

#include <cctype>
#include <charconv>
#include <vector>

#include "zerosum/errors.hpp"

namespace zerosum {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Splits on commas that are not nested inside parentheses.
std::vector<std::string_view> split_top_level(std::string_view text) {
  std::vector<std::string_view> parts;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == '(') {
      ++depth;
    } else if (c == ')') {
      if (--depth < 0) throw ParseError("unbalanced parenthesis", std::string(text));
    } else if (c == ',' && depth == 0) {
      parts.push_back(trim(text.substr(start, i - start)));
      start = i + 1;
    }
  }
  if (depth != 0) throw ParseError("unbalanced parenthesis", std::string(text));
  parts.push_back(trim(text.substr(start)));
  return parts;
}

}  // namespace

std::int64_t parse_integer(std::string_view text) {
  auto t = trim(text);
  std::string_view digits = t;
  if (!digits.empty() && digits.front() == '+') digits.remove_prefix(1);
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (digits.empty() || ec != std::errc{} || ptr != digits.data() + digits.size()) {
    throw ParseError("expected an integer", std::string(t));
  }
  return value;
}

AbelianGroup parse_group(std::string_view text) {
  auto t = trim(text);
  if (t.empty()) throw ParseError("empty group string", std::string(t));
  std::vector<std::int64_t> factors;
  std::size_t start = 0;
  while (start <= t.size()) {
    std::size_t end = start;
    while (end < t.size() && t[end] != 'x' && t[end] != 'X') ++end;
    auto token = trim(t.substr(start, end - start));
    if (token.size() < 2 || (token[0] != 'Z' && token[0] != 'z')) {
      throw ParseError("expected a cyclic factor like Z6", std::string(token));
    }
    std::int64_t n = 0;
    try {
      n = parse_integer(token.substr(1));
    } catch (const ParseError&) {
      throw ParseError("expected a cyclic factor like Z6", std::string(token));
    }
    if (n < 1) throw ParseError("cyclic factor order must be >= 1", std::string(token));
    factors.push_back(n);
    start = end + 1;
  }
  try {
    return AbelianGroup(std::move(factors));
  } catch (const InvalidGroup& e) {
    throw ParseError(e.what(), std::string(t));
  }
}

GroupElement parse_element(const AbelianGroup& group, std::string_view text) {
  auto t = trim(text);
  std::vector<std::string_view> parts;
  if (!t.empty() && t.front() == '(') {
    if (t.back() != ')') throw ParseError("unterminated element", std::string(t));
    parts = split_top_level(t.substr(1, t.size() - 2));
  } else {
    parts.push_back(t);
  }
  if (parts.size() != group.rank()) {
    throw ParseError("element needs " + std::to_string(group.rank()) + " coordinate(s) for " +
                         group.to_string(),
                     std::string(t));
  }
  GroupElement g;
  const auto n = group.factors();
  for (std::size_t j = 0; j < parts.size(); ++j) {
    std::int64_t v = 0;
    try {
      v = parse_integer(parts[j]);
    } catch (const ParseError&) {
      throw ParseError("malformed element", std::string(t));
    }
    v %= n[j];
    if (v < 0) v += n[j];
    g.coords.push_back(v);
  }
  return g;
}

ZSequence parse_sequence(const AbelianGroup& group, std::string_view text) {
  auto t = trim(text);
  std::vector<GroupElement> entries;
  if (!t.empty()) {
    for (auto part : split_top_level(t)) entries.push_back(parse_element(group, part));
  }
  return ZSequence(group, std::move(entries));
}

std::string format_element(const GroupElement& g) {
  if (g.coords.size() == 1) return std::to_string(g.coords[0]);
  std::string out = "(";
  for (std::size_t j = 0; j < g.coords.size(); ++j) {
    if (j) out += ',';
    out += std::to_string(g.coords[j]);
  }
  return out + ')';
}

std::string format_sequence(const ZSequence& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += format_element(s.entries()[i]);
  }
  return out;
}

}  // namespace zerosum
