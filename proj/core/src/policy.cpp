#include "throughsim/policy.hpp"

#include "throughsim/errors.hpp"

namespace throughsim {

AdmissionPolicy AdmissionPolicy::two_threshold(const Rational& epsilon) {
	return {PolicyKind::two_threshold, clamp_epsilon(epsilon)};
}

AdmissionPolicy AdmissionPolicy::single_threshold(const Rational& gamma) {
	if (gamma.sgn() <= 0 || gamma > Rational(1))
		throw Error(ErrorCode::bad_spec, "gamma must be in (0,1], got " + gamma.str());
	return {PolicyKind::single_threshold, gamma};
}

AdmissionPolicy AdmissionPolicy::from_spec(std::string_view spec, const Rational& instance_epsilon) {
	if (spec == "two-threshold") return two_threshold(instance_epsilon);
	constexpr std::string_view prefix = "single-threshold:";
	if (spec.substr(0, prefix.size()) == prefix)
		return single_threshold(Rational::parse(spec.substr(prefix.size())));
	throw Error(ErrorCode::parse_error,
	            "unknown policy spec '" + std::string(spec) +
	                "'; expected two-threshold or single-threshold:<gamma>");
}

std::string AdmissionPolicy::spec_string() const {
	return kind == PolicyKind::two_threshold ? "two-threshold"
	                                         : "single-threshold:" + param.str();
}

JobView job_view(const Job& job, int machine) {
	return {job.proc[machine].value(), density(job, machine), job.weight};
}

bool eligible_now(const Job& job, int machine, const Rational& tau, const Rational& eps_clamped) {
	if (!eligible(job, machine)) return false;
	if (tau < job.release) return false;
	const Rational need = (Rational(1) + eps_clamped / Rational(2)) * job.proc[machine].value();
	return job.deadline - tau >= need;
}

Verdict two_threshold_decide(const JobView& c, const std::optional<JobView>& running,
                             const Rational& eps) {
	if (!running) return Verdict::admit;
	const JobView& r = *running;
	const Rational half_eps_p = eps / Rational(2) * r.p;
	if (c.p <= half_eps_p)
		return c.rho >= Rational(8) / eps * r.rho ? Verdict::admit : Verdict::reject;
	if (c.p <= r.p)
		return c.w >= Rational(4) * r.w ? Verdict::admit : Verdict::reject;
	return c.rho >= Rational(4) * r.rho ? Verdict::admit : Verdict::reject;
}

Verdict single_threshold_decide(const JobView& c, const std::optional<JobView>& running,
                                const Rational& gamma) {
	if (!running) return Verdict::admit;
	return c.rho >= running->rho / gamma ? Verdict::admit : Verdict::reject;
}

Verdict decide(const AdmissionPolicy& policy, const JobView& candidate,
               const std::optional<JobView>& running) {
	return policy.kind == PolicyKind::two_threshold
	           ? two_threshold_decide(candidate, running, policy.param)
	           : single_threshold_decide(candidate, running, policy.param);
}

}  // namespace throughsim
