#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "qdle/error.hpp"

namespace qdle {

// A bijection on {0..n-1} stored as its image array: images()[i] is where i
// goes. Immutable value type with content equality and lexicographic
// ordering, so closure enumeration can deduplicate and tie-break by value.
//
// Composition convention: compose(p, q)(i) == p(q(i)), i.e. q acts first.
// This matches the usual function-composition reading of p ∘ q and is relied
// on everywhere; do not flip it locally.
class Permutation {
 public:
  explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
    if (images_.empty())
      throw error(errc::degree_zero, "permutation degree must be >= 1");
    std::vector<char> seen(images_.size(), 0);
    for (std::size_t i = 0; i < images_.size(); ++i) {
      int v = images_[i];
      if (v < 0 || v >= static_cast<int>(images_.size()) || seen[v])
        throw error(errc::not_bijective,
                    "image array is not a bijection at index " +
                        std::to_string(i),
                    static_cast<int>(i));
      seen[v] = 1;
    }
  }

  static Permutation identity(int degree) {
    if (degree < 1)
      throw error(errc::degree_zero, "permutation degree must be >= 1");
    std::vector<int> im(static_cast<std::size_t>(degree));
    std::iota(im.begin(), im.end(), 0);
    return Permutation(unchecked{}, std::move(im));
  }

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const {
    for (int i = 0; i < degree(); ++i)
      if (images_[static_cast<std::size_t>(i)] != i) return false;
    return true;
  }

  int fixed_point_count() const {
    int c = 0;
    for (int i = 0; i < degree(); ++i)
      c += (images_[static_cast<std::size_t>(i)] == i);
    return c;
  }

  std::vector<int> fixed_points() const {
    std::vector<int> fp;
    for (int i = 0; i < degree(); ++i)
      if (images_[static_cast<std::size_t>(i)] == i) fp.push_back(i);
    return fp;
  }

  Permutation inverse() const {
    std::vector<int> inv(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i)
      inv[static_cast<std::size_t>(images_[i])] = static_cast<int>(i);
    return Permutation(unchecked{}, std::move(inv));
  }

  // Sorted cycle lengths including 1-cycles; invariant under conjugation.
  std::vector<int> cycle_type() const {
    std::vector<char> seen(images_.size(), 0);
    std::vector<int> lengths;
    for (int i = 0; i < degree(); ++i) {
      if (seen[static_cast<std::size_t>(i)]) continue;
      int len = 0;
      for (int j = i; !seen[static_cast<std::size_t>(j)];
           j = images_[static_cast<std::size_t>(j)]) {
        seen[static_cast<std::size_t>(j)] = 1;
        ++len;
      }
      lengths.push_back(len);
    }
    std::sort(lengths.begin(), lengths.end());
    return lengths;
  }

  friend Permutation compose(const Permutation& p, const Permutation& q) {
    if (p.degree() != q.degree())
      throw error(errc::degree_mismatch,
                  "compose: degrees differ (" + std::to_string(p.degree()) +
                      " vs " + std::to_string(q.degree()) + ")");
    std::vector<int> im(p.images_.size());
    for (std::size_t i = 0; i < im.size(); ++i)
      im[i] = p.images_[static_cast<std::size_t>(q.images_[i])];
    return Permutation(unchecked{}, std::move(im));
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  struct unchecked {};
  Permutation(unchecked, std::vector<int> images) : images_(std::move(images)) {}

  std::vector<int> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (int v : p.images())
      h ^= static_cast<std::uint64_t>(v) + 0x9e3779b97f4a7c15ull + (h << 6) +
           (h >> 2);
    return static_cast<std::size_t>(h);
  }
};

// Parses one-line cycle notation such as "(0 1)(2 4 3)". Points may be
// separated by spaces or commas; points not mentioned are fixed. An empty
// string (or "()") yields the identity of the given degree.
inline Permutation parse_cycles(std::string_view text, int degree) {
  if (degree < 1)
    throw error(errc::degree_zero, "permutation degree must be >= 1");
  std::vector<int> im(static_cast<std::size_t>(degree));
  std::iota(im.begin(), im.end(), 0);
  std::vector<char> used(static_cast<std::size_t>(degree), 0);

  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() &&
           (text[i] == ' ' || text[i] == '\t' || text[i] == ','))
      ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(')
      throw error(errc::syntax_error,
                  "cycle notation: expected '(' at position " +
                      std::to_string(i));
    ++i;
    std::vector<int> cyc;
    skip_ws();
    while (i < text.size() && text[i] != ')') {
      if (text[i] < '0' || text[i] > '9')
        throw error(errc::syntax_error,
                    "cycle notation: expected digit at position " +
                        std::to_string(i));
      int v = 0;
      while (i < text.size() && text[i] >= '0' && text[i] <= '9')
        v = v * 10 + (text[i++] - '0');
      if (v >= degree)
        throw error(errc::syntax_error,
                    "cycle notation: point " + std::to_string(v) +
                        " out of range for degree " + std::to_string(degree));
      if (used[static_cast<std::size_t>(v)])
        throw error(errc::syntax_error,
                    "cycle notation: point " + std::to_string(v) + " repeats");
      used[static_cast<std::size_t>(v)] = 1;
      cyc.push_back(v);
      skip_ws();
    }
    if (i == text.size())
      throw error(errc::syntax_error, "cycle notation: unclosed '('");
    ++i;  // ')'
    for (std::size_t k = 0; k < cyc.size(); ++k)
      im[static_cast<std::size_t>(cyc[k])] = cyc[(k + 1) % cyc.size()];
    skip_ws();
  }
  return Permutation(std::move(im));
}

}  // namespace qdle
