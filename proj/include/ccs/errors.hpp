// Copyright 2026 The ccs authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ccs {

enum class errc {
  duplicate_identifier,
  unknown_reference,
  arity_mismatch,
  combinational_cycle,
  duplicate_binding,
  not_open,
  not_closed,
  not_semi_closed,
  length_mismatch,
  partial_assignment,
  too_many_feedback_variables,
  wrong_observation_domain,
  not_a_witness,
  no_designated_output,
  no_ports,
  bad_split,
  state_shape_mismatch,
  syntax_error,
  header_mismatch,
  literal_out_of_range,
  empty_formula,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::duplicate_identifier: return "DuplicateIdentifier";
    case errc::unknown_reference: return "UnknownReference";
    case errc::arity_mismatch: return "ArityMismatch";
    case errc::combinational_cycle: return "CombinationalCycle";
    case errc::duplicate_binding: return "DuplicateBinding";
    case errc::not_open: return "NotOpen";
    case errc::not_closed: return "NotClosed";
    case errc::not_semi_closed: return "NotSemiClosed";
    case errc::length_mismatch: return "LengthMismatch";
    case errc::partial_assignment: return "PartialAssignment";
    case errc::too_many_feedback_variables: return "TooManyFeedbackVariables";
    case errc::wrong_observation_domain: return "WrongObservationDomain";
    case errc::not_a_witness: return "NotAWitness";
    case errc::no_designated_output: return "NoDesignatedOutput";
    case errc::no_ports: return "NoPorts";
    case errc::bad_split: return "BadSplit";
    case errc::state_shape_mismatch: return "StateShapeMismatch";
    case errc::syntax_error: return "SyntaxError";
    case errc::header_mismatch: return "HeaderMismatch";
    case errc::literal_out_of_range: return "LiteralOutOfRange";
    case errc::empty_formula: return "EmptyFormula";
  }
  return "UnknownError";
}

// One validation problem. `line` is 1-based when the object came from a
// netlist file, 0 otherwise.
struct Violation {
  errc code;
  std::string subject;
  std::string message;
  int line = 0;
};

class CircuitError : public std::runtime_error {
 public:
  CircuitError(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

// Carries every violation found by validation, not just the first.
class BuildError : public CircuitError {
 public:
  explicit BuildError(std::vector<Violation> violations)
      : CircuitError(violations.front().code, join(violations)),
        violations_(std::move(violations)) {}

  const std::vector<Violation>& violations() const noexcept { return violations_; }

 private:
  static std::string join(const std::vector<Violation>& vs) {
    std::string out;
    for (const auto& v : vs) {
      if (!out.empty()) out += "; ";
      if (v.line > 0) out += "line " + std::to_string(v.line) + ": ";
      out += v.message;
    }
    return out;
  }

  std::vector<Violation> violations_;
};

}  // namespace ccs
