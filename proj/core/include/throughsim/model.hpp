#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "throughsim/rational.hpp"

namespace throughsim {

// Processing time of one job on one machine. Infinite means the machine is
// not eligible to run the job; finite values are strictly positive.
class ProcTime {
public:
	ProcTime() = default;  // infinite
	static ProcTime inf() { return ProcTime(); }
	static ProcTime of(const Rational& p);  // throws invalid_instance unless p > 0
	static ProcTime parse(std::string_view text);  // "inf" or a positive rational

	bool finite() const { return v_.has_value(); }
	const Rational& value() const;  // throws not_eligible when infinite
	std::string str() const { return finite() ? v_->str() : "inf"; }

	bool operator==(const ProcTime& o) const { return v_ == o.v_; }

private:
	std::optional<Rational> v_;
};

struct Job {
	int id = 0;
	Rational release;   // r_j >= 0
	Rational deadline;  // d_j
	Rational weight;    // w_j > 0
	std::vector<ProcTime> proc;  // one entry per machine
};

struct Instance {
	int machines = 0;
	Rational epsilon;  // slack parameter, > 0
	std::vector<Job> jobs;  // ids dense 0..n-1, stored in id order
};

bool eligible(const Job& job, int machine);

// Density w_j / p_ij on one machine; throws not_eligible when p_ij is infinite.
Rational density(const Job& job, int machine);

// min(epsilon, 1); throws bad_slack when epsilon <= 0. Admission thresholds
// and eligibility windows use the clamped value; slack validation does not.
Rational clamp_epsilon(const Rational& epsilon);

enum class ViolationKind {
	slack,                 // d - r < (1 + eps) * p on an eligible machine
	nonpositive_weight,
	no_eligible_machine,
	duplicate_id,
	non_dense_ids,
	proc_length_mismatch,  // proc vector size != machine count
	negative_release,
	bad_epsilon,
	bad_machine_count,
};

struct Violation {
	ViolationKind kind;
	int job = -1;      // -1 for instance-level violations
	int machine = -1;  // set for per-machine violations
	std::string message;
};

struct ValidationReport {
	std::vector<Violation> violations;
	bool ok() const { return violations.empty(); }
	std::string str() const;  // one line per violation
};

// Checks every instance invariant and lists every violation found. An empty
// report is the definition of a valid instance.
ValidationReport validate_instance(const Instance& inst);

}  // namespace throughsim
