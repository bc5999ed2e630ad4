#include "throughsim/engine.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "throughsim/errors.hpp"

namespace throughsim {

namespace {

struct Active {
	int id;
	Rational remaining;
	Rational v;    // virtual deadline
	Rational rho;  // density on this machine, fixed at admission
};

// Highest density first; density ties go to the lower job id. Ties are
// unreachable under the two-threshold policy (every admission strictly raises
// the density); the single-threshold baseline can admit at exactly equal
// density (gamma = 1), in which case the lower id keeps the machine.
const Active* front_job(const std::vector<Active>& act) {
	const Active* best = nullptr;
	for (const Active& a : act)
		if (!best || a.rho > best->rho || (a.rho == best->rho && a.id < best->id)) best = &a;
	return best;
}

struct Sim {
	const Instance& inst;
	const AdmissionPolicy& policy;
	Rational eps_c;

	std::vector<std::vector<Active>> active;       // per machine
	std::vector<std::optional<int>> run_id;        // physically running job
	std::vector<Rational> seg_start;               // start of the open segment
	std::vector<std::vector<ScheduleSegment>> segs;  // per machine, time order
	std::set<int> pending;                         // released, not admitted
	std::vector<AdmissionRecord> records;
	std::set<int> finished, discarded;

	Sim(const Instance& i, const AdmissionPolicy& p)
	    : inst(i), policy(p), eps_c(clamp_epsilon(i.epsilon)),
	      active(i.machines), run_id(i.machines), seg_start(i.machines, Rational(0)),
	      segs(i.machines) {}

	Active* find_active(int machine, int id) {
		for (Active& a : active[machine])
			if (a.id == id) return &a;
		return nullptr;
	}

	void drop_active(int machine, int id) {
		auto& act = active[machine];
		for (size_t k = 0; k < act.size(); ++k)
			if (act[k].id == id) {
				act.erase(act.begin() + k);
				return;
			}
	}

	// One admission pass at time tau. Machines go in index order; each keeps
	// taking its densest eligible pending candidate not considered before in
	// this pass, asks the policy, and admits or moves on. An admitted job
	// leaves the pending pool for all machines at once.
	void admission_pass(const Rational& tau) {
		for (int i = 0; i < inst.machines; ++i) {
			std::set<int> considered;
			for (;;) {
				int best = -1;
				Rational best_rho;
				for (int id : pending) {
					if (considered.count(id)) continue;
					const Job& j = inst.jobs[id];
					if (!eligible_now(j, i, tau, eps_c)) continue;
					Rational rho = density(j, i);
					if (best < 0 || rho > best_rho) {
						best = id;
						best_rho = rho;
					}
				}
				if (best < 0) break;
				considered.insert(best);
				const Job& j = inst.jobs[best];
				const Active* front = front_job(active[i]);
				std::optional<JobView> running;
				if (front) running = job_view(inst.jobs[front->id], i);
				if (decide(policy, job_view(j, i), running) != Verdict::admit) continue;

				const Rational p = j.proc[i].value();
				AdmissionRecord rec;
				rec.job = best;
				rec.machine = i;
				rec.admit_time = tau;
				rec.virtual_deadline = tau + (Rational(1) + eps_c / Rational(2)) * p;
				if (front) rec.parent = front->id;
				records.push_back(rec);
				active[i].push_back({best, p, rec.virtual_deadline, best_rho});
				pending.erase(best);
			}
		}
	}

	// Close the open segment if the machine's front job changed, then open a
	// segment for the new front. Zero-length segments are dropped.
	void reconcile(int i, const Rational& now) {
		const Active* front = front_job(active[i]);
		std::optional<int> next = front ? std::optional<int>(front->id) : std::nullopt;
		if (next == run_id[i]) return;
		if (run_id[i] && seg_start[i] < now)
			segs[i].push_back({i, *run_id[i], seg_start[i], now});
		run_id[i] = next;
		seg_start[i] = now;
	}

	Outcome run() {
		std::vector<std::pair<Rational, int>> releases;
		releases.reserve(inst.jobs.size());
		for (const Job& j : inst.jobs) releases.emplace_back(j.release, j.id);
		std::sort(releases.begin(), releases.end());
		size_t next_release = 0;

		Rational now(0);
		for (;;) {
			std::optional<Rational> next;
			auto consider = [&next](const Rational& t) {
				if (!next || t < *next) next = t;
			};
			if (next_release < releases.size()) consider(releases[next_release].first);
			for (int i = 0; i < inst.machines; ++i)
				for (const Active& a : active[i]) {
					if (run_id[i] && a.id == *run_id[i])
						consider(now + a.remaining);  // projected completion
					else
						consider(a.v - a.remaining);  // slack hits zero
				}
			if (!next) break;  // no active jobs, no future releases

			const Rational delta = *next - now;
			for (int i = 0; i < inst.machines; ++i)
				if (run_id[i]) find_active(i, *run_id[i])->remaining -= delta;
			now = *next;

			bool trigger = false;

			// (a) completions
			std::vector<std::pair<int, int>> done;  // (job, machine), job order
			for (int i = 0; i < inst.machines; ++i)
				if (run_id[i] && find_active(i, *run_id[i])->remaining.sgn() == 0)
					done.emplace_back(*run_id[i], i);
			std::sort(done.begin(), done.end());
			for (auto [id, i] : done) {
				segs[i].push_back({i, id, seg_start[i], now});
				finished.insert(id);
				drop_active(i, id);
				run_id[i] = std::nullopt;
				trigger = true;
			}

			// (b) discards: waiting jobs whose slack just reached zero
			std::vector<std::pair<int, int>> out;
			for (int i = 0; i < inst.machines; ++i)
				for (const Active& a : active[i])
					if ((!run_id[i] || a.id != *run_id[i]) && a.v - a.remaining == now)
						out.emplace_back(a.id, i);
			std::sort(out.begin(), out.end());
			for (auto [id, i] : out) {
				discarded.insert(id);
				drop_active(i, id);
			}

			// (c) releases
			while (next_release < releases.size() && releases[next_release].first == now) {
				pending.insert(releases[next_release].second);
				++next_release;
				trigger = true;
			}

			// (d) one admission pass; discards alone do not trigger it
			if (trigger) admission_pass(now);

			for (int i = 0; i < inst.machines; ++i) reconcile(i, now);
		}

		Outcome outcome;
		outcome.admissions = std::move(records);
		for (int i = 0; i < inst.machines; ++i)
			for (ScheduleSegment& s : segs[i]) outcome.segments.push_back(std::move(s));
		outcome.finished.assign(finished.begin(), finished.end());
		outcome.discarded.assign(discarded.begin(), discarded.end());
		std::set<int> admitted;
		for (const auto& r : outcome.admissions) admitted.insert(r.job);
		for (const Job& j : inst.jobs) {
			if (!admitted.count(j.id)) {
				outcome.never_admitted.push_back(j.id);
				continue;
			}
			outcome.weights.admitted += j.weight;
			if (finished.count(j.id)) outcome.weights.finished += j.weight;
			if (discarded.count(j.id)) outcome.weights.discarded += j.weight;
		}
		return outcome;
	}
};

}  // namespace

Outcome simulate(const Instance& inst, const AdmissionPolicy& policy) {
	ValidationReport rep = validate_instance(inst);
	if (!rep.ok())
		throw Error(ErrorCode::invalid_instance, "invalid instance:\n" + rep.str());
	if (policy.kind == PolicyKind::two_threshold && policy.param != clamp_epsilon(inst.epsilon))
		throw Error(ErrorCode::bad_spec,
		            "two-threshold policy epsilon " + policy.param.str() +
		                " does not match the instance's clamped epsilon " +
		                clamp_epsilon(inst.epsilon).str());

	Outcome outcome = Sim(inst, policy).run();

	// Engine self-check: admitted jobs end up finished or discarded, never both.
	if (outcome.finished.size() + outcome.discarded.size() != outcome.admissions.size())
		throw std::logic_error("engine bug: finished/discarded do not partition the admitted set");
	// Runtime guarantee of the two-threshold policy: at least half the
	// admitted weight finishes.
	if (policy.kind == PolicyKind::two_threshold &&
	    outcome.weights.finished * Rational(2) < outcome.weights.admitted)
		throw std::logic_error("engine bug: finished weight fell below half the admitted weight");
	return outcome;
}

std::pair<Rational, Rational> weight_totals(const Outcome& outcome) {
	return {outcome.weights.admitted, outcome.weights.finished};
}

std::string AuditReport::str() const {
	std::ostringstream os;
	for (const auto& i : issues) os << i.what << "\n";
	return os.str();
}

namespace {

struct Coverage {
	// Sum of segment lengths of one job up to time tau.
	static Rational up_to(const std::vector<const ScheduleSegment*>& segs, const Rational& tau) {
		Rational total(0);
		for (const ScheduleSegment* s : segs) {
			if (s->start >= tau) break;
			total += min(s->end, tau) - s->start;
		}
		return total;
	}
};

}  // namespace

AuditReport check_feasibility(const Outcome& out, const Instance& inst) {
	AuditReport rep;
	auto issue = [&rep](std::string what) { rep.issues.push_back({std::move(what)}); };
	const int n = static_cast<int>(inst.jobs.size());
	Rational eps_c;
	try {
		eps_c = clamp_epsilon(inst.epsilon);
	} catch (const Error& e) {
		issue(e.what());
		return rep;
	}
	const Rational half(1, 2);

	std::map<int, const AdmissionRecord*> by_job;
	for (const AdmissionRecord& r : out.admissions) {
		if (r.job < 0 || r.job >= n) {
			issue("admission of unknown job " + std::to_string(r.job));
			return rep;
		}
		if (r.machine < 0 || r.machine >= inst.machines) {
			issue("job " + std::to_string(r.job) + " admitted to unknown machine " + std::to_string(r.machine));
			return rep;
		}
		if (by_job.count(r.job)) issue("job " + std::to_string(r.job) + " admitted twice");
		by_job[r.job] = &r;

		const Job& j = inst.jobs[r.job];
		if (!eligible(j, r.machine)) {
			issue("job " + std::to_string(r.job) + " admitted to ineligible machine");
			continue;
		}
		const Rational& p = j.proc[r.machine].value();
		if (r.admit_time < j.release)
			issue("job " + std::to_string(r.job) + " admitted before release");
		if (j.deadline - r.admit_time < (Rational(1) + eps_c * half) * p)
			issue("job " + std::to_string(r.job) + " admitted outside its eligibility window");
		if (r.virtual_deadline != r.admit_time + (Rational(1) + eps_c * half) * p)
			issue("job " + std::to_string(r.job) + " has a wrong virtual deadline");
		if (r.virtual_deadline > j.deadline)
			issue("job " + std::to_string(r.job) + " has virtual deadline past its deadline");
	}

	// Segments: per machine in order, disjoint, nonzero, only on the admission
	// machine, only inside [a_j, v_j].
	std::map<int, std::vector<const ScheduleSegment*>> job_segs;
	std::map<int, const ScheduleSegment*> last_on_machine;
	for (const ScheduleSegment& s : out.segments) {
		if (s.job < 0 || s.job >= n || s.machine < 0 || s.machine >= inst.machines) {
			issue("segment references unknown job or machine");
			return rep;
		}
		if (!(s.start < s.end)) issue("empty or reversed segment for job " + std::to_string(s.job));
		auto it = by_job.find(s.job);
		if (it == by_job.end()) {
			issue("segment for never-admitted job " + std::to_string(s.job));
			continue;
		}
		const AdmissionRecord& r = *it->second;
		if (r.machine != s.machine)
			issue("job " + std::to_string(s.job) + " ran on a machine other than its admission machine");
		if (s.start < r.admit_time)
			issue("job " + std::to_string(s.job) + " ran before its admission");
		if (s.end > r.virtual_deadline)
			issue("job " + std::to_string(s.job) + " ran past its virtual deadline");
		auto [prev, inserted] = last_on_machine.try_emplace(s.machine, &s);
		if (!inserted) {
			if (s.start < prev->second->end)
				issue("segments on machine " + std::to_string(s.machine) + " overlap or are out of order");
			prev->second = &s;
		}
		job_segs[s.job].push_back(&s);
	}
	for (auto& [id, list] : job_segs)
		std::sort(list.begin(), list.end(),
		          [](const ScheduleSegment* a, const ScheduleSegment* b) { return a->start < b->start; });

	std::set<int> fin(out.finished.begin(), out.finished.end());
	std::set<int> dis(out.discarded.begin(), out.discarded.end());
	std::set<int> never(out.never_admitted.begin(), out.never_admitted.end());
	if (!std::is_sorted(out.finished.begin(), out.finished.end()) ||
	    !std::is_sorted(out.discarded.begin(), out.discarded.end()) ||
	    !std::is_sorted(out.never_admitted.begin(), out.never_admitted.end()))
		issue("outcome id lists are not sorted");
	for (int id : fin)
		if (dis.count(id)) issue("job " + std::to_string(id) + " both finished and discarded");
	for (const Job& j : inst.jobs) {
		const bool admitted = by_job.count(j.id) != 0;
		const bool listed = fin.count(j.id) || dis.count(j.id);
		if (admitted && !listed) issue("admitted job " + std::to_string(j.id) + " has no fate");
		if (!admitted && listed) issue("job " + std::to_string(j.id) + " has a fate but no admission");
		if (admitted == static_cast<bool>(never.count(j.id)))
			issue("neverAdmitted wrong for job " + std::to_string(j.id));
	}

	WeightTotals totals;
	for (const auto& [id, rec] : by_job) {
		const Job& j = inst.jobs[id];
		totals.admitted += j.weight;
		const Rational p = j.proc[rec->machine].value();
		Rational covered(0);
		for (const ScheduleSegment* s : job_segs[id]) covered += s->end - s->start;
		if (fin.count(id)) {
			totals.finished += j.weight;
			if (covered != p)
				issue("finished job " + std::to_string(id) + " covered " + covered.str() + " of " + p.str());
		} else if (dis.count(id)) {
			totals.discarded += j.weight;
			if (covered >= p)
				issue("discarded job " + std::to_string(id) + " covered its full processing time");
		}
	}
	if (totals.admitted != out.weights.admitted || totals.finished != out.weights.finished ||
	    totals.discarded != out.weights.discarded)
		issue("weight totals do not match the admitted/finished/discarded sets");

	// Active-set consistency at each admission, reconstructed from the trace:
	// the parent is the densest job then alive on the machine, the newcomer's
	// density dominates everything alive, and it starts immediately unless a
	// same-instant admission or an equal-density lower id outranks it.
	for (size_t k = 0; k < out.admissions.size(); ++k) {
		const AdmissionRecord& r = out.admissions[k];
		if (!eligible(inst.jobs[r.job], r.machine)) continue;
		const Rational& a = r.admit_time;
		const Rational rho_new = density(inst.jobs[r.job], r.machine);

		int best = -1;
		Rational best_rho;
		bool dominated = false;
		for (size_t l = 0; l < k; ++l) {
			const AdmissionRecord& q = out.admissions[l];
			if (q.machine != r.machine) continue;
			const Rational p = inst.jobs[q.job].proc[q.machine].value();
			const Rational covered = Coverage::up_to(job_segs[q.job], a);
			if (covered == p) continue;  // finished at or before a
			const Rational rem = p - covered;
			if (!(rem < q.virtual_deadline - a)) continue;  // discarded at or before a
			const Rational rho = density(inst.jobs[q.job], q.machine);
			if (best < 0 || rho > best_rho || (rho == best_rho && q.job < best)) {
				best = q.job;
				best_rho = rho;
			}
			if (rho > rho_new || (rho == rho_new && q.job < r.job)) dominated = true;
			if (rho > rho_new)
				issue("job " + std::to_string(r.job) + " admitted below the density of live job " +
				      std::to_string(q.job));
		}
		if (best < 0 ? r.parent.has_value() : (!r.parent || *r.parent != best))
			issue("job " + std::to_string(r.job) + " has wrong parent");

		bool starts = false;
		for (const ScheduleSegment* s : job_segs[r.job])
			if (s->start == a) starts = true;
		bool preempted_at_birth = false;
		for (size_t l = k + 1; l < out.admissions.size(); ++l)
			if (out.admissions[l].machine == r.machine && out.admissions[l].admit_time == a)
				preempted_at_birth = true;
		if (!starts && !preempted_at_birth && !dominated)
			issue("job " + std::to_string(r.job) + " did not start at its admission");
	}

	return rep;
}

AuditReport audit_policy_fidelity(const Outcome& out, const Instance& inst,
                                  const AdmissionPolicy& policy) {
	AuditReport rep;
	auto issue = [&rep](std::string what) { rep.issues.push_back({std::move(what)}); };

	for (const AdmissionRecord& r : out.admissions) {
		if (!r.parent) continue;
		const JobView cand = job_view(inst.jobs[r.job], r.machine);
		const JobView run = job_view(inst.jobs[*r.parent], r.machine);
		bool ok = true;
		if (policy.kind == PolicyKind::two_threshold) {
			const Rational& eps = policy.param;
			if (cand.p <= eps / Rational(2) * run.p)
				ok = cand.rho >= Rational(8) / eps * run.rho;
			else if (cand.p <= run.p)
				ok = cand.w >= Rational(4) * run.w;
			else
				ok = cand.rho >= Rational(4) * run.rho;
		} else {
			ok = cand.rho >= run.rho / policy.param;
		}
		if (!ok)
			issue("admission of job " + std::to_string(r.job) + " over job " +
			      std::to_string(*r.parent) + " violates the " +
			      (policy.kind == PolicyKind::two_threshold ? std::string("two-threshold")
			                                                : std::string("single-threshold")) +
			      " rule");
	}
	return rep;
}

}  // namespace throughsim
