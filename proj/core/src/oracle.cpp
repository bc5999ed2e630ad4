#include "throughsim/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <unordered_map>

#include "throughsim/engine.hpp"
#include "throughsim/errors.hpp"

namespace throughsim {

OracleJob oracle_job(const Job& job, int machine) {
	if (!eligible(job, machine))
		throw Error(ErrorCode::not_eligible,
		            "job " + std::to_string(job.id) + " not eligible on machine " + std::to_string(machine));
	return {job.release, job.deadline, job.proc[machine].value()};
}

bool edf_feasible(const std::vector<OracleJob>& jobs) {
	const size_t n = jobs.size();
	std::vector<Rational> rem(n);
	for (size_t i = 0; i < n; ++i) rem[i] = jobs[i].proc;

	std::vector<size_t> by_release(n);
	for (size_t i = 0; i < n; ++i) by_release[i] = i;
	std::sort(by_release.begin(), by_release.end(), [&jobs](size_t a, size_t b) {
		return jobs[a].release < jobs[b].release || (jobs[a].release == jobs[b].release && a < b);
	});

	size_t released = 0;
	size_t done = 0;
	Rational t(0);
	if (n > 0) t = jobs[by_release[0]].release;
	while (done < n) {
		while (released < n && jobs[by_release[released]].release <= t) ++released;

		// earliest deadline among released unfinished jobs, lowest index on ties
		size_t pick = n;
		for (size_t k = 0; k < released; ++k) {
			const size_t i = by_release[k];
			if (rem[i].sgn() == 0) continue;
			if (pick == n || jobs[i].deadline < jobs[pick].deadline ||
			    (jobs[i].deadline == jobs[pick].deadline && i < pick))
				pick = i;
		}
		if (pick == n) {
			t = jobs[by_release[released]].release;  // idle until the next release
			continue;
		}

		Rational until = t + rem[pick];
		if (released < n) until = min(until, jobs[by_release[released]].release);
		rem[pick] -= until - t;
		t = until;
		if (rem[pick].sgn() == 0) {
			if (t > jobs[pick].deadline) return false;
			++done;
		}
	}
	return true;
}

namespace {

struct Search {
	const Instance& inst;
	std::vector<int> order;                 // job ids, heaviest first
	std::vector<Rational> suffix;           // total weight from order[idx] on
	std::vector<std::unordered_map<std::uint64_t, bool>> feasible_memo;
	std::vector<std::uint64_t> masks;
	Rational best;
	std::vector<std::uint64_t> best_masks;
	Rational current;

	explicit Search(const Instance& i)
	    : inst(i), feasible_memo(i.machines), masks(i.machines, 0), best(0),
	      best_masks(i.machines, 0), current(0) {}

	bool machine_feasible(int machine, std::uint64_t mask) {
		auto& memo = feasible_memo[machine];
		if (auto it = memo.find(mask); it != memo.end()) return it->second;
		std::vector<OracleJob> set;
		for (size_t id = 0; id < inst.jobs.size(); ++id)
			if (mask & (std::uint64_t(1) << id)) set.push_back(oracle_job(inst.jobs[id], machine));
		const bool ok = edf_feasible(set);
		memo.emplace(mask, ok);
		return ok;
	}

	void dfs(size_t idx) {
		if (idx == order.size()) {
			if (current > best) {
				best = current;
				best_masks = masks;
			}
			return;
		}
		if (current + suffix[idx] <= best) return;  // cannot strictly improve
		const Job& j = inst.jobs[order[idx]];
		const std::uint64_t bit = std::uint64_t(1) << j.id;
		for (int i = 0; i < inst.machines; ++i) {
			if (!eligible(j, i)) continue;
			if (!machine_feasible(i, masks[i] | bit)) continue;
			masks[i] |= bit;
			current += j.weight;
			dfs(idx + 1);
			current -= j.weight;
			masks[i] &= ~bit;
		}
		dfs(idx + 1);  // drop the job
	}
};

}  // namespace

OracleResult optimal_nonmigratory(const Instance& inst, int cap) {
	ValidationReport rep = validate_instance(inst);
	if (!rep.ok())
		throw Error(ErrorCode::invalid_instance, "invalid instance:\n" + rep.str());
	const int n = static_cast<int>(inst.jobs.size());
	if (n > cap)
		throw Error(ErrorCode::too_large,
		            std::to_string(n) + " jobs exceed the oracle cap of " + std::to_string(cap));
	if (inst.machines > 3)
		throw Error(ErrorCode::too_large, "oracle supports at most 3 machines");
	if (n > 62) throw Error(ErrorCode::too_large, "oracle subsets are limited to 62 jobs");

	Search s(inst);
	s.order.resize(n);
	for (int k = 0; k < n; ++k) s.order[k] = k;
	std::sort(s.order.begin(), s.order.end(), [&inst](int a, int b) {
		return inst.jobs[a].weight > inst.jobs[b].weight ||
		       (inst.jobs[a].weight == inst.jobs[b].weight && a < b);
	});
	s.suffix.assign(n + 1, Rational(0));
	for (int k = n - 1; k >= 0; --k) s.suffix[k] = s.suffix[k + 1] + inst.jobs[s.order[k]].weight;
	s.dfs(0);

	OracleResult result;
	result.optimum = s.best;
	result.per_machine.resize(inst.machines);
	for (int i = 0; i < inst.machines; ++i)
		for (int id = 0; id < n; ++id)
			if (s.best_masks[i] & (std::uint64_t(1) << id)) {
				result.per_machine[i].push_back(id);
				result.assignment[id] = i;
			}
	return result;
}

RatioResult competitive_ratio(const Instance& inst, const AdmissionPolicy& policy, int cap) {
	const OracleResult opt = optimal_nonmigratory(inst, cap);
	if (opt.optimum.sgn() == 0)
		throw Error(ErrorCode::invalid_instance, "competitive ratio needs a positive optimum");
	const Outcome out = simulate(inst, policy);
	if (out.weights.finished.sgn() == 0) return {};
	return {opt.optimum / out.weights.finished};
}

}  // namespace throughsim
