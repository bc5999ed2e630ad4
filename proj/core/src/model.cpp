#include "throughsim/model.hpp"

#include <set>
#include <sstream>

#include "throughsim/errors.hpp"

namespace throughsim {

ProcTime ProcTime::of(const Rational& p) {
	if (p.sgn() <= 0)
		throw Error(ErrorCode::invalid_instance, "finite processing time must be positive, got " + p.str());
	ProcTime t;
	t.v_ = p;
	return t;
}

ProcTime ProcTime::parse(std::string_view text) {
	if (text == "inf") return inf();
	return of(Rational::parse(text));
}

const Rational& ProcTime::value() const {
	if (!v_) throw Error(ErrorCode::not_eligible, "processing time is infinite");
	return *v_;
}

bool eligible(const Job& job, int machine) {
	return machine >= 0 && machine < static_cast<int>(job.proc.size()) && job.proc[machine].finite();
}

Rational density(const Job& job, int machine) {
	if (!eligible(job, machine))
		throw Error(ErrorCode::not_eligible,
		            "job " + std::to_string(job.id) + " not eligible on machine " + std::to_string(machine));
	return job.weight / job.proc[machine].value();
}

Rational clamp_epsilon(const Rational& epsilon) {
	if (epsilon.sgn() <= 0)
		throw Error(ErrorCode::bad_slack, "epsilon must be positive, got " + epsilon.str());
	return min(epsilon, Rational(1));
}

namespace {

const char* kind_name(ViolationKind k) {
	switch (k) {
		case ViolationKind::slack: return "slack";
		case ViolationKind::nonpositive_weight: return "nonpositive_weight";
		case ViolationKind::no_eligible_machine: return "no_eligible_machine";
		case ViolationKind::duplicate_id: return "duplicate_id";
		case ViolationKind::non_dense_ids: return "non_dense_ids";
		case ViolationKind::proc_length_mismatch: return "proc_length_mismatch";
		case ViolationKind::negative_release: return "negative_release";
		case ViolationKind::bad_epsilon: return "bad_epsilon";
		case ViolationKind::bad_machine_count: return "bad_machine_count";
	}
	return "?";
}

}  // namespace

std::string ValidationReport::str() const {
	std::ostringstream os;
	for (const auto& v : violations) {
		os << kind_name(v.kind);
		if (v.job >= 0) os << " job " << v.job;
		if (v.machine >= 0) os << " machine " << v.machine;
		os << ": " << v.message << "\n";
	}
	return os.str();
}

ValidationReport validate_instance(const Instance& inst) {
	ValidationReport rep;
	auto add = [&rep](ViolationKind kind, int job, int machine, std::string msg) {
		rep.violations.push_back({kind, job, machine, std::move(msg)});
	};

	if (inst.machines < 1)
		add(ViolationKind::bad_machine_count, -1, -1,
		    "machine count must be >= 1, got " + std::to_string(inst.machines));
	const bool eps_ok = inst.epsilon.sgn() > 0;
	if (!eps_ok)
		add(ViolationKind::bad_epsilon, -1, -1, "epsilon must be > 0, got " + inst.epsilon.str());

	std::set<int> seen;
	for (size_t k = 0; k < inst.jobs.size(); ++k) {
		const Job& j = inst.jobs[k];
		if (!seen.insert(j.id).second)
			add(ViolationKind::duplicate_id, j.id, -1, "job id appears more than once");
		else if (j.id != static_cast<int>(k))
			add(ViolationKind::non_dense_ids, j.id, -1,
			    "ids must be 0..n-1 in order; position " + std::to_string(k) + " holds id " + std::to_string(j.id));

		if (j.release.sgn() < 0)
			add(ViolationKind::negative_release, j.id, -1, "release " + j.release.str() + " < 0");
		if (j.weight.sgn() <= 0)
			add(ViolationKind::nonpositive_weight, j.id, -1, "weight " + j.weight.str() + " <= 0");
		if (static_cast<int>(j.proc.size()) != inst.machines) {
			add(ViolationKind::proc_length_mismatch, j.id, -1,
			    "proc vector has " + std::to_string(j.proc.size()) + " entries for " +
			        std::to_string(inst.machines) + " machines");
			continue;  // per-machine checks below index by machine count
		}

		bool any_eligible = false;
		for (int i = 0; i < inst.machines; ++i) {
			if (!j.proc[i].finite()) continue;
			any_eligible = true;
			if (eps_ok) {
				const Rational window = j.deadline - j.release;
				const Rational need = (Rational(1) + inst.epsilon) * j.proc[i].value();
				if (window < need)
					add(ViolationKind::slack, j.id, i,
					    "window " + window.str() + " < (1+eps)*p = " + need.str());
			}
		}
		if (!any_eligible)
			add(ViolationKind::no_eligible_machine, j.id, -1, "every processing time is infinite");
	}
	return rep;
}

}  // namespace throughsim
