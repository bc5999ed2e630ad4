#pragma once

#include <stdexcept>
#include <string>

namespace throughsim {

enum class ErrorCode {
	parse_error,       // malformed JSON/CSV/rational/policy-spec text
	bad_slack,         // epsilon <= 0
	bad_spec,          // generator or policy parameters out of range
	not_eligible,      // density requested on a machine with infinite proc time
	invalid_instance,  // simulate/oracle called on an instance that fails validation
	too_large,         // oracle size cap exceeded
};

class Error : public std::runtime_error {
public:
	Error(ErrorCode code, const std::string& what)
	    : std::runtime_error(what), code_(code) {}
	ErrorCode code() const { return code_; }

private:
	ErrorCode code_;
};

}  // namespace throughsim
