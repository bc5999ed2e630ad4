#pragma once

#include <string>

#include "throughsim/engine.hpp"
#include "throughsim/model.hpp"
#include "throughsim/oracle.hpp"

namespace throughsim {

// JSON in, JSON out. Emission is canonical (fixed key order, two-space
// indent, rationals as "num/den" strings, "inf" for ineligible machines), so
// parse(emit(x)) re-emits byte-identically. Parse errors carry field context.
Instance parse_instance(const std::string& text);
std::string emit_instance(const Instance& inst);

Outcome parse_outcome(const std::string& text);
std::string emit_outcome(const Outcome& outcome);

std::string emit_oracle_result(const OracleResult& result);

// One row per segment: machine,job,start,end.
std::string emit_trace_csv(const Outcome& outcome);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace throughsim
