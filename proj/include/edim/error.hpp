#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace edim {

/// Failure categories raised by the library. Every edim::Error carries one.
enum class Errc {
  empty_graph,
  self_loop,
  duplicate_edge,
  disconnected,
  invalid_id,
  not_a_permutation,
  pair_universe_too_large,
  parameter_out_of_domain,
  budget_exceeded,
  not_a_tree,
  no_known_formula,
  wrong_result_kind,
  parse_error,
  clause_arity,
  repeated_variable_in_clause,
  too_many_variables,
  not_a_generator,
  wrong_cardinality,
  claim_violation,
  io_error,
};

std::string_view errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace edim
