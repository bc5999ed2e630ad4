#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "throughsim/model.hpp"
#include "throughsim/policy.hpp"

namespace throughsim {

struct AdmissionRecord {
	int job = -1;
	int machine = -1;
	Rational admit_time;        // a_j
	Rational virtual_deadline;  // v_j = a_j + (1 + eps/2) p_ij, always <= d_j
	std::optional<int> parent;  // job running on the machine at a_j, absent on an empty machine
};

// Half-open run [start, end) of one job on one machine; zero-length runs are
// never emitted.
struct ScheduleSegment {
	int machine = -1;
	int job = -1;
	Rational start;
	Rational end;
};

struct WeightTotals {
	Rational admitted;
	Rational finished;
	Rational discarded;
};

struct Outcome {
	std::vector<AdmissionRecord> admissions;  // in admission order
	std::vector<ScheduleSegment> segments;    // sorted by (machine, start)
	std::vector<int> finished;                // sorted ids
	std::vector<int> discarded;               // sorted ids
	std::vector<int> never_admitted;          // sorted ids
	WeightTotals weights;
};

// Event-driven run of one admission policy over one valid instance. Exact
// arithmetic throughout; identical inputs produce identical outcomes.
Outcome simulate(const Instance& inst, const AdmissionPolicy& policy);

// (total admitted weight, total finished weight)
std::pair<Rational, Rational> weight_totals(const Outcome& outcome);

struct AuditIssue {
	std::string what;
};

struct AuditReport {
	std::vector<AuditIssue> issues;
	bool ok() const { return issues.empty(); }
	std::string str() const;
};

// Structural audit of an outcome against its instance: disjoint in-order
// segments, non-migration, virtual-deadline discipline, exact processing
// coverage for finished jobs, exact weight totals, and admission-time
// active-set consistency (parent correctness, density dominance, immediate
// start) reconstructed from the trace alone.
AuditReport check_feasibility(const Outcome& outcome, const Instance& inst);

// Re-derives every interrupting admission from the trace and checks it
// against the policy's own admission inequalities.
AuditReport audit_policy_fidelity(const Outcome& outcome, const Instance& inst,
                                  const AdmissionPolicy& policy);

}  // namespace throughsim
