#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "throughsim/model.hpp"
#include "throughsim/rational.hpp"

namespace throughsim {

enum class PolicyKind { two_threshold, single_threshold };

// Admission policy configuration. The two-threshold policy carries the
// clamped slack parameter; the single-threshold baseline carries its density
// threshold gamma in (0,1] and ignores job sizes entirely.
struct AdmissionPolicy {
	PolicyKind kind;
	Rational param;

	static AdmissionPolicy two_threshold(const Rational& epsilon);        // clamps to min(eps,1)
	static AdmissionPolicy single_threshold(const Rational& gamma);       // requires 0 < gamma <= 1
	// "two-threshold" or "single-threshold:<gamma>"; the instance epsilon
	// feeds the two-threshold variant.
	static AdmissionPolicy from_spec(std::string_view spec, const Rational& instance_epsilon);
	std::string spec_string() const;
};

// Candidate/running job as seen from one machine.
struct JobView {
	Rational p;    // processing time on that machine
	Rational rho;  // density w/p on that machine
	Rational w;    // weight
};

JobView job_view(const Job& job, int machine);

enum class Verdict { admit, reject };

// A pending job may be admitted at time tau only when it is released and its
// remaining window still fits a (1 + eps/2) stretch of its processing time.
bool eligible_now(const Job& job, int machine, const Rational& tau, const Rational& eps_clamped);

// Size-aware admission test against the running job (none when the machine is
// empty). A much smaller candidate needs an 8/eps density advantage, a
// comparable one a 4x weight advantage, a larger one a 4x density advantage.
Verdict two_threshold_decide(const JobView& candidate, const std::optional<JobView>& running,
                             const Rational& eps_clamped);

// Baseline: admit on an empty machine, or when the candidate's density beats
// the running job's by a factor of at least 1/gamma.
Verdict single_threshold_decide(const JobView& candidate, const std::optional<JobView>& running,
                                const Rational& gamma);

Verdict decide(const AdmissionPolicy& policy, const JobView& candidate,
               const std::optional<JobView>& running);

}  // namespace throughsim
