#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "throughsim/model.hpp"
#include "throughsim/policy.hpp"
#include "throughsim/rational.hpp"

namespace throughsim {

struct OracleJob {
	Rational release;
	Rational deadline;
	Rational proc;
};

OracleJob oracle_job(const Job& job, int machine);  // throws not_eligible

// Preemptive single-machine feasibility with release dates: true iff every
// job can complete by its deadline. Earliest-deadline-first decides this
// exactly; the simulation below runs it with exact arithmetic.
bool edf_feasible(const std::vector<OracleJob>& jobs);

struct OracleResult {
	Rational optimum;                         // maximum feasible total weight
	std::map<int, int> assignment;            // scheduled job -> machine
	std::vector<std::vector<int>> per_machine;  // sorted ids per machine
};

inline constexpr int kDefaultOracleCap = 12;

// Exhaustive search over non-migratory schedules: every job is dropped or
// assigned to an eligible machine, each machine's set must be EDF-feasible.
// Branch and bound with the remaining-weight bound; per-machine feasibility
// results are memoized by job subset. Throws too_large past the caps.
OracleResult optimal_nonmigratory(const Instance& inst, int cap = kDefaultOracleCap);

struct RatioResult {
	std::optional<Rational> value;  // empty means unbounded (nothing finished)
	bool unbounded() const { return !value.has_value(); }
	std::string str() const { return value ? value->str() : "unbounded"; }
};

// optimum / finished-weight for one policy run on one instance.
RatioResult competitive_ratio(const Instance& inst, const AdmissionPolicy& policy,
                              int cap = kDefaultOracleCap);

}  // namespace throughsim
