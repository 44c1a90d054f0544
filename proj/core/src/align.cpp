#include "helberg/align.hpp"

#include <algorithm>
#include <vector>

#include "helberg/errors.hpp"

namespace helberg {

std::size_t lcs_length(const Word& s1, const Word& s2) {
  const auto a = s1.symbols();
  const auto b = s2.symbols();
  if (a.empty() || b.empty()) return 0;

  std::vector<std::size_t> row(b.size() + 1, 0);
  for (std::size_t i = 1; i <= a.size(); ++i) {
    std::size_t diag = 0;  // row[j-1] from the previous iteration of i
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t up = row[j];
      row[j] = (a[i - 1] == b[j - 1]) ? diag + 1 : std::max(row[j], row[j - 1]);
      diag = up;
    }
  }
  return row[b.size()];
}

std::size_t indel_distance(const Word& s1, const Word& s2) {
  return s1.len() + s2.len() - 2 * lcs_length(s1, s2);
}

std::int64_t VValue::value() const {
  if (unreachable_)
    throw InvalidParameter("no finite value: suffix window is unreachable");
  return value_;
}

std::string VValue::str() const {
  return unreachable_ ? "inf" : std::to_string(value_);
}

VValue compute_v(const Word& candidate, const Word& y,
                 std::int64_t threshold) {
  const auto len = static_cast<std::int64_t>(y.len());
  for (std::int64_t v = 0; v <= len; ++v) {
    const Word tail = y.slice(len - v + 1, len);
    if (static_cast<std::int64_t>(lcs_length(candidate, tail)) >= threshold)
      return VValue::finite(v);
  }
  return VValue::unreachable();
}

Word delete_at(const Word& s, std::size_t j) {
  if (j < 1 || j > s.len())
    throw InvalidParameter("deletion position out of range");
  const auto sj = static_cast<std::int64_t>(j);
  return s.slice(1, sj - 1) + s.slice(sj + 1, static_cast<std::int64_t>(s.len()));
}

Word insert_at(const Word& s, std::size_t j, Symbol sym) {
  if (j < 1 || j > s.len() + 1)
    throw InvalidParameter("insertion position out of range");
  if (sym < 0) throw InvalidParameter("negative symbol");
  const auto sj = static_cast<std::int64_t>(j);
  Word head = s.slice(1, sj - 1);
  head.append(sym);
  return head + s.slice(sj, static_cast<std::int64_t>(s.len()));
}

}  // namespace helberg
