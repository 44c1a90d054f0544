#include "helberg/word.hpp"

#include <algorithm>
#include <charconv>

#include "helberg/errors.hpp"

namespace helberg {

Symbol Word::symbol(std::size_t i) const {
  if (i < 1 || i > syms_.size())
    throw InvalidParameter("word position out of range");
  return syms_[i - 1];
}

Word Word::slice(std::int64_t j1, std::int64_t j2) const {
  const auto n = static_cast<std::int64_t>(syms_.size());
  j1 = std::max<std::int64_t>(j1, 1);
  j2 = std::min(j2, n);
  if (j1 > j2) return Word{};
  return Word(std::vector<Symbol>(syms_.begin() + (j1 - 1),
                                  syms_.begin() + j2));
}

Word operator+(const Word& a, const Word& b) {
  std::vector<Symbol> out;
  out.reserve(a.syms_.size() + b.syms_.size());
  out.insert(out.end(), a.syms_.begin(), a.syms_.end());
  out.insert(out.end(), b.syms_.begin(), b.syms_.end());
  return Word(std::move(out));
}

namespace {

Symbol parse_symbol(std::string_view text, int q) {
  Symbol value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end)
    throw InvalidParameter("malformed word symbol '" + std::string(text) +
                           "'");
  if (value < 0 || value >= q)
    throw InvalidParameter("symbol " + std::to_string(value) +
                           " outside alphabet of size " + std::to_string(q));
  return value;
}

}  // namespace

Word parse_word(const std::string& text, int q) {
  if (q < 2) throw InvalidParameter("alphabet size must be at least 2");
  std::vector<Symbol> syms;
  if (text.empty()) return Word{};
  if (q <= 10) {
    syms.reserve(text.size());
    for (char c : text) {
      if (c < '0' || c > '9')
        throw InvalidParameter("malformed word symbol '" + std::string(1, c) +
                               "'");
      syms.push_back(parse_symbol(std::string_view(&c, 1), q));
    }
  } else {
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t comma = text.find(',', start);
      if (comma == std::string::npos) comma = text.size();
      syms.push_back(
          parse_symbol(std::string_view(text).substr(start, comma - start), q));
      start = comma + 1;
      if (start == text.size() + 1) break;
    }
  }
  return Word(std::move(syms));
}

std::string format_word(const Word& w, int q) {
  std::string out;
  bool first = true;
  for (Symbol s : w.symbols()) {
    if (q <= 10) {
      out += static_cast<char>('0' + s);
    } else {
      if (!first) out += ',';
      out += std::to_string(s);
    }
    first = false;
  }
  return out;
}

}  // namespace helberg
