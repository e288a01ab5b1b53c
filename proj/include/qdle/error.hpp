#pragma once

#include <array>
#include <stdexcept>
#include <string>

namespace qdle {

// Every rejection the library produces, as a code plus (when meaningful)
// the witnessing indices, so callers can point at the offending entries.
enum class errc {
  // permutations
  degree_zero,
  degree_mismatch,
  not_bijective,
  // group tables
  order_zero,
  not_square,
  not_latin,
  no_identity,
  no_inverse,
  not_associative,
  not_an_automorphism,
  not_abelian,
  // quandle tables
  q1_violation,
  q2_violation,
  q3_violation,
  // weighted graphs
  diagonal_nonzero,
  // closure
  empty_degree,
  mixed_degrees,
  // generic bad call argument (zero cap, empty factor list, ...)
  invalid_argument,
  // spec parsing
  syntax_error,
  unknown_type,
  schema_error,
};

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  error(errc code, const std::string& what, int i, int j = -1, int k = -1)
      : std::runtime_error(what), code_(code), where_{i, j, k} {}

  errc code() const noexcept { return code_; }

  // Witnessing indices; unused slots hold -1.
  const std::array<int, 3>& where() const noexcept { return where_; }

 private:
  errc code_;
  std::array<int, 3> where_{-1, -1, -1};
};

}  // namespace qdle
