#pragma once

#include <stdexcept>
#include <string>

namespace lpbc {

enum class Errc {
  ok = 0,
  parse_error = 1,
  validation_error = 2,
  non_uniform_bases = 3,
  exchange_violation = 4,
  overlapping_sets = 5,
  rank_zero = 6,
  bad_target_rank = 7,
  ground_set_too_large = 8,
  has_free_edge = 9,
  not_circuit_hyperplane = 10,
  budget_exceeded = 11,
  no_circuit = 12,
  girth_too_small = 13,
  unknown_name = 14,
  bad_parameters = 15,
  precondition_violated = 16,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace lpbc
