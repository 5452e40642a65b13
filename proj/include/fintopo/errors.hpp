#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace fintopo {

enum class errc {
  missing_empty,
  missing_full,
  not_closed_under_union,
  not_closed_under_intersection,
  invalid_point_set,
  not_reflexive,
  not_transitive,
  not_isotone,
  not_a_member,
  not_closed_set,
  not_in_grill,
  oracle_too_large,
  lattice_too_large,
  carrier_mismatch,
  space_mismatch,
  precondition_failed,
  too_large,
  bad_input,
};

const char* errc_name(errc c);

/// Error thrown by core operations. Carries a machine-readable code and,
/// where it helps debugging, a witness pair of point sets (bit masks).
class TopoError : public std::runtime_error {
 public:
  TopoError(errc code, std::string message)
      : std::runtime_error(std::move(message)), code_(code) {}
  TopoError(errc code, std::string message, std::uint64_t w1, std::uint64_t w2)
      : std::runtime_error(std::move(message)), code_(code), witness_({w1, w2}) {}

  errc code() const { return code_; }
  const std::optional<std::pair<std::uint64_t, std::uint64_t>>& witness() const {
    return witness_;
  }

 private:
  errc code_;
  std::optional<std::pair<std::uint64_t, std::uint64_t>> witness_;
};

}  // namespace fintopo
