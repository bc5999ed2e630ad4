#include "throughsim/checks.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>
#include <sstream>

#include "throughsim/engine.hpp"
#include "throughsim/errors.hpp"
#include "throughsim/harness.hpp"
#include "throughsim/io.hpp"

namespace throughsim {

namespace {

void note(CheckResult& res, const std::string& detail) {
	if (res.pass) {
		res.pass = false;
		res.detail = detail;
	}
}

std::vector<Instance> all_suite_instances(const CheckOptions& opts) {
	std::vector<Instance> out = family_suite();
	for (const auto& spec : random_suite(opts)) out.push_back(gen_random(spec));
	return out;
}

bool oracle_sized(const Instance& inst, int cap) {
	return static_cast<int>(inst.jobs.size()) <= std::min(cap, kDefaultOracleCap)
			&& inst.machines <= 3;
}

std::string describe(const Instance& inst, std::size_t index) {
	std::ostringstream s;
	s << "instance #" << index << " (n=" << inst.jobs.size()
		<< ", m=" << inst.machines << ", eps=" << inst.epsilon.str() << ")";
	return s.str();
}

}

std::vector<RandomSpec> random_suite(const CheckOptions& opts) {
	std::mt19937_64 rng(opts.seed);
	const Rational eps_grid[] = {Rational(1, 4), Rational(1, 2), Rational(1)};
	std::vector<RandomSpec> specs;
	specs.reserve(opts.random_instances);
	for (int i = 0; i < opts.random_instances; ++i) {
		RandomSpec spec;
		spec.seed = rng();
		spec.n = 1 + static_cast<int>(rng() % 20);
		spec.m = 1 + static_cast<int>(rng() % 3);
		spec.eps = eps_grid[i % 3];
		specs.push_back(spec);
	}
	return specs;
}

std::vector<Instance> family_suite() {
	std::vector<Instance> out;
	const Rational one(1);
	for (const Rational& eps : {Rational(1, 8), Rational(1, 4), Rational(1, 2)}) {
		for (const Rational& gamma : {eps * Rational(2), eps * Rational(4)}) {
			if (gamma > one) continue;
			for (int n : {0, 1, 4, 8})
				out.push_back(gen_chain({eps, gamma, default_delta(eps, gamma), n}));
		}
	}
	for (const Rational& eps : {one, Rational(1, 2), Rational(1, 4), Rational(1, 8)}) {
		std::vector<Rational> gammas{eps};
		if (eps != one) gammas.push_back(one);
		for (const auto& gamma : gammas)
			out.push_back(gen_pair({eps, gamma, default_delta(eps, gamma)}));
	}
	return out;
}

CheckResult check_half_weight(const CheckOptions& opts) {
	CheckResult res{"half-weight guarantee", true, 0, ""};
	auto instances = all_suite_instances(opts);
	for (std::size_t i = 0; i < instances.size(); ++i) {
		const Instance& inst = instances[i];
		++res.cases;
		try {
			Outcome out = simulate(inst, AdmissionPolicy::two_threshold(inst.epsilon));
			if (out.weights.finished * Rational(2) < out.weights.admitted)
				note(res, describe(inst, i) + ": finished " + out.weights.finished.str()
						+ " < half of admitted " + out.weights.admitted.str());
		} catch (const std::exception& e) {
			note(res, describe(inst, i) + ": " + e.what());
		}
	}
	if (res.pass) {
		std::ostringstream s;
		s << res.cases << " instances, finished >= admitted/2 on all";
		res.detail = s.str();
	}
	return res;
}

CheckResult check_ratio_bound(const CheckOptions& opts) {
	CheckResult res{"competitive-ratio bound", true, 0, ""};
	auto instances = all_suite_instances(opts);
	std::optional<Rational> worst;  // max ratio/bound over the suite
	for (std::size_t i = 0; i < instances.size(); ++i) {
		const Instance& inst = instances[i];
		if (!oracle_sized(inst, opts.oracle_cap)) continue;
		++res.cases;
		try {
			Rational optimum = optimal_nonmigratory(inst, opts.oracle_cap).optimum;
			Outcome out = simulate(inst, AdmissionPolicy::two_threshold(inst.epsilon));
			if (out.weights.finished.sgn() <= 0) {
				note(res, describe(inst, i) + ": nothing finished");
				continue;
			}
			Rational eps_c = clamp_epsilon(inst.epsilon);
			Rational bound = Rational(768) / eps_c + Rational(386);
			Rational ratio = optimum / out.weights.finished;
			if (ratio > bound)
				note(res, describe(inst, i) + ": ratio " + ratio.str()
						+ " exceeds bound " + bound.str());
			Rational frac = ratio / bound;
			if (!worst || frac > *worst) worst = frac;
		} catch (const std::exception& e) {
			note(res, describe(inst, i) + ": " + e.what());
		}
	}
	if (res.pass) {
		std::ostringstream s;
		s << res.cases << " instances";
		if (worst) s << ", max ratio/bound = " << worst->str();
		res.detail = s.str();
	}
	return res;
}

CheckResult check_pair_separation() {
	CheckResult res{"pair separation", true, 0, ""};
	struct Point {
		Rational eps;
		Rational single_ratio;
		Rational two_ratio;
	};
	const Point points[] = {
		{Rational(1), Rational(151, 101), Rational(151, 101)},
		{Rational(1, 2), Rational(200, 101), Rational(200, 101)},
		{Rational(1, 4), Rational(800, 101), Rational(800, 101)},
		{Rational(1, 8), Rational(3200, 101), Rational(1)},
	};
	std::vector<Rational> single_ratios;
	for (const auto& pt : points) {
		++res.cases;
		Rational gamma = pt.eps;
		Rational delta = pt.eps * gamma / Rational(100);
		Instance inst = gen_pair({pt.eps, gamma, delta});
		auto tag = [&](const std::string& what) {
			return "eps=" + pt.eps.str() + ": " + what;
		};

		Outcome single = simulate(inst, AdmissionPolicy::single_threshold(gamma));
		if (single.weights.finished != Rational(2))
			note(res, tag("baseline finished weight " + single.weights.finished.str()
					+ ", expected 2"));
		if (single.finished != std::vector<int>{0} || single.never_admitted != std::vector<int>{1})
			note(res, tag("baseline kept the wrong job"));
		RatioResult sr = competitive_ratio(inst, AdmissionPolicy::single_threshold(gamma));
		if (sr.unbounded() || *sr.value != pt.single_ratio)
			note(res, tag("baseline ratio " + sr.str() + ", expected " + pt.single_ratio.str()));
		single_ratios.push_back(sr.unbounded() ? Rational(0) : *sr.value);

		RatioResult tr = competitive_ratio(inst, AdmissionPolicy::two_threshold(inst.epsilon));
		if (tr.unbounded() || *tr.value != pt.two_ratio)
			note(res, tag("two-threshold ratio " + tr.str() + ", expected " + pt.two_ratio.str()));
		if (!tr.unbounded() && !sr.unbounded() && *tr.value > *sr.value)
			note(res, tag("two-threshold ratio above baseline ratio"));
		Rational bound = Rational(768) / clamp_epsilon(pt.eps) + Rational(386);
		if (!tr.unbounded() && *tr.value > bound)
			note(res, tag("two-threshold ratio above proven bound"));

		// Below eps = 1 the optimum is the heavy job alone, so the baseline's
		// ratio equals the exact weight gap between the two jobs.
		if (pt.eps < Rational(1)) {
			Rational gap = inst.jobs[1].weight / inst.jobs[0].weight;
			if (!sr.unbounded() && *sr.value != gap)
				note(res, tag("baseline ratio differs from weight gap " + gap.str()));
		}
		if (pt.eps == Rational(1, 8)) {
			Outcome two = simulate(inst, AdmissionPolicy::two_threshold(inst.epsilon));
			if (two.finished != std::vector<int>{1})
				note(res, tag("two-threshold did not switch to the heavy job"));
		}
	}
	// The baseline ratio quadruples as eps halves (past the degenerate
	// eps = 1 point, where both jobs still fit).
	for (std::size_t k = 2; k < single_ratios.size(); ++k) {
		++res.cases;
		if (single_ratios[k] != single_ratios[k - 1] * Rational(4))
			note(res, "baseline ratio growth at step " + std::to_string(k)
					+ " is not 4x");
	}
	if (res.pass)
		res.detail = "4 eps points, frozen exact ratios match, baseline ratio quadruples per halving";
	return res;
}

CheckResult check_chain_dynamics() {
	CheckResult res{"chain dynamics", true, 0, ""};
	const Rational one(1);
	for (const Rational& eps : {Rational(1, 8), Rational(1, 4), Rational(1, 2)}) {
		for (const Rational& gamma : {eps * Rational(2), eps * Rational(4)}) {
			if (gamma > one) continue;
			Rational base = default_delta(eps, gamma);
			for (const Rational& delta : {base, base / Rational(7)}) {
				for (int n : {0, 1, 2, 5, 8}) {
					++res.cases;
					Instance inst = gen_chain({eps, gamma, delta, n});
					auto tag = [&](const std::string& what) {
						std::ostringstream s;
						s << "chain eps=" << eps.str() << " gamma=" << gamma.str()
							<< " delta=" << delta.str() << " n=" << n << ": " << what;
						return s.str();
					};
					Outcome out = simulate(inst, AdmissionPolicy::single_threshold(gamma));
					if (static_cast<int>(out.admissions.size()) != n + 1) {
						note(res, tag("expected every link admitted"));
						continue;
					}
					for (int j = 0; j <= n; ++j) {
						const auto& rec = out.admissions[j];
						if (rec.job != j)
							note(res, tag("admission order broken at " + std::to_string(j)));
						if (rec.admit_time != inst.jobs[j].release)
							note(res, tag("job " + std::to_string(j) + " not admitted on arrival"));
						bool parent_ok = (j == 0) ? !rec.parent.has_value()
								: (rec.parent.has_value() && *rec.parent == j - 1);
						if (!parent_ok)
							note(res, tag("job " + std::to_string(j) + " did not preempt its predecessor"));
					}
					if (out.finished != std::vector<int>{n})
						note(res, tag("finished set is not exactly the last job"));
					std::vector<int> expect_discarded;
					for (int j = 0; j < n; ++j) expect_discarded.push_back(j);
					if (out.discarded != expect_discarded)
						note(res, tag("discarded set is not exactly the earlier links"));
					if (!out.never_admitted.empty())
						note(res, tag("some link was never admitted"));
					if (out.weights.finished != inst.jobs[n].weight)
						note(res, tag("finished weight differs from the last link's weight"));
					// Each link runs in one piece from its arrival to the next arrival;
					// the last link runs to completion.
					if (static_cast<int>(out.segments.size()) != n + 1) {
						note(res, tag("expected one segment per link"));
						continue;
					}
					for (int j = 0; j <= n; ++j) {
						const auto& seg = out.segments[j];
						Rational end = (j == n)
								? inst.jobs[n].release + inst.jobs[n].proc[0].value()
								: inst.jobs[j + 1].release;
						if (seg.job != j || seg.start != inst.jobs[j].release || seg.end != end)
							note(res, tag("segment " + std::to_string(j) + " has the wrong extent"));
					}
				}
			}
		}
	}
	if (res.pass) {
		std::ostringstream s;
		s << res.cases << " chains, every link preempts its predecessor and only the last survives";
		res.detail = s.str();
	}
	return res;
}

namespace {

// Static-priority preemptive run, highest priority first; independent of the
// earliest-deadline scheduler it cross-checks.
bool priority_feasible(const std::vector<OracleJob>& jobs, const std::vector<int>& prio) {
	std::vector<int> rank(jobs.size());
	for (std::size_t k = 0; k < prio.size(); ++k) rank[prio[k]] = static_cast<int>(k);
	std::vector<Rational> left;
	left.reserve(jobs.size());
	for (const auto& j : jobs) left.push_back(j.proc);
	std::size_t done = 0;
	Rational t = jobs[0].release;
	for (const auto& j : jobs) t = std::min(t, j.release);
	while (done < jobs.size()) {
		int run = -1;
		std::optional<Rational> next_release;
		for (std::size_t i = 0; i < jobs.size(); ++i) {
			if (left[i].sgn() == 0) continue;
			if (jobs[i].release > t) {
				if (!next_release || jobs[i].release < *next_release)
					next_release = jobs[i].release;
				continue;
			}
			if (run < 0 || rank[i] < rank[run]) run = static_cast<int>(i);
		}
		if (run < 0) {
			t = *next_release;
			continue;
		}
		Rational finish = t + left[run];
		if (next_release && *next_release < finish) {
			left[run] = left[run] - (*next_release - t);
			t = *next_release;
		} else {
			left[run] = Rational(0);
			++done;
			t = finish;
			if (finish > jobs[run].deadline) return false;
		}
	}
	return true;
}

std::string describe_jobs(const std::vector<OracleJob>& jobs) {
	std::ostringstream s;
	for (const auto& j : jobs)
		s << " (r=" << j.release.str() << ",d=" << j.deadline.str()
			<< ",p=" << j.proc.str() << ")";
	return s.str();
}

}

CheckResult check_oracle_soundness(const CheckOptions& opts) {
	CheckResult res{"oracle soundness", true, 0, ""};

	// Feasibility cross-check: earliest-deadline agrees with trying every
	// static priority order, over all job multisets of size <= 4 drawn from a
	// dense grid of release/size/slack combinations.
	std::vector<OracleJob> types;
	for (const Rational& r : {Rational(0), Rational(1, 2), Rational(1)})
		for (const Rational& p : {Rational(1, 2), Rational(1)})
			for (const Rational& extra : {Rational(0), Rational(1, 2), Rational(1)})
				types.push_back({r, r + p + extra, p});
	long grid_sets = 0;
	std::vector<int> pick;
	std::function<void(int, int)> rec = [&](int start, int remaining) {
		if (!pick.empty()) {
			++grid_sets;
			std::vector<OracleJob> jobs;
			jobs.reserve(pick.size());
			for (int tix : pick) jobs.push_back(types[tix]);
			std::vector<std::vector<int>> by_type(types.size());
			for (std::size_t pos = 0; pos < pick.size(); ++pos)
				by_type[pick[pos]].push_back(static_cast<int>(pos));
			bool brute = false;
			std::vector<int> perm = pick;
			do {
				std::vector<std::size_t> cursor(types.size(), 0);
				std::vector<int> prio;
				prio.reserve(perm.size());
				for (int tix : perm) prio.push_back(by_type[tix][cursor[tix]++]);
				if (priority_feasible(jobs, prio)) {
					brute = true;
					break;
				}
			} while (std::next_permutation(perm.begin(), perm.end()));
			if (brute != edf_feasible(jobs))
				note(res, std::string("feasibility disagreement on") + describe_jobs(jobs));
		}
		if (remaining == 0) return;
		for (int tix = start; tix < static_cast<int>(types.size()); ++tix) {
			pick.push_back(tix);
			rec(tix, remaining - 1);
			pick.pop_back();
		}
	};
	rec(0, 4);
	res.cases += grid_sets;

	// Dominance and witness replay on every oracle-sized suite instance.
	auto instances = all_suite_instances(opts);
	for (std::size_t i = 0; i < instances.size(); ++i) {
		const Instance& inst = instances[i];
		if (!oracle_sized(inst, opts.oracle_cap)) continue;
		++res.cases;
		try {
			OracleResult orc = optimal_nonmigratory(inst, opts.oracle_cap);
			Rational witness_weight(0);
			std::size_t listed = 0;
			for (int mi = 0; mi < inst.machines; ++mi) {
				std::vector<OracleJob> assigned;
				for (int id : orc.per_machine[mi]) {
					++listed;
					if (!eligible(inst.jobs[id], mi)) {
						note(res, describe(inst, i) + ": witness assigns an ineligible job");
						continue;
					}
					auto it = orc.assignment.find(id);
					if (it == orc.assignment.end() || it->second != mi)
						note(res, describe(inst, i) + ": witness map disagrees with machine lists");
					assigned.push_back(oracle_job(inst.jobs[id], mi));
					witness_weight = witness_weight + inst.jobs[id].weight;
				}
				if (!assigned.empty() && !edf_feasible(assigned))
					note(res, describe(inst, i) + ": witness set infeasible on machine "
							+ std::to_string(mi));
			}
			if (witness_weight != orc.optimum)
				note(res, describe(inst, i) + ": witness weight " + witness_weight.str()
						+ " != optimum " + orc.optimum.str());
			if (listed != orc.assignment.size())
				note(res, describe(inst, i) + ": witness map size mismatch");
			Rational heaviest(0);
			for (const auto& job : inst.jobs) heaviest = std::max(heaviest, job.weight);
			if (orc.optimum < heaviest)
				note(res, describe(inst, i) + ": optimum below the heaviest single job");
			Rational eps_c = clamp_epsilon(inst.epsilon);
			for (const auto& policy : {AdmissionPolicy::two_threshold(inst.epsilon),
					AdmissionPolicy::single_threshold(eps_c)}) {
				Outcome out = simulate(inst, policy);
				if (out.weights.finished > orc.optimum)
					note(res, describe(inst, i) + ": " + policy.spec_string()
							+ " finished more than the optimum");
			}
		} catch (const std::exception& e) {
			note(res, describe(inst, i) + ": " + e.what());
		}
	}
	if (res.pass) {
		std::ostringstream s;
		s << grid_sets << " grid sets cross-checked, dominance and witness replay on the rest";
		res.detail = s.str();
	}
	return res;
}

CheckResult check_engine_audits(const CheckOptions& opts) {
	CheckResult res{"engine audits", true, 0, ""};
	auto instances = all_suite_instances(opts);
	for (std::size_t i = 0; i < instances.size(); ++i) {
		const Instance& inst = instances[i];
		Rational eps_c = clamp_epsilon(inst.epsilon);
		const AdmissionPolicy policies[] = {
			AdmissionPolicy::two_threshold(inst.epsilon),
			AdmissionPolicy::single_threshold(eps_c),
			AdmissionPolicy::single_threshold(Rational(1)),
		};
		for (const auto& policy : policies) {
			++res.cases;
			try {
				Outcome out = simulate(inst, policy);
				AuditReport structural = check_feasibility(out, inst);
				if (!structural.ok())
					note(res, describe(inst, i) + " under " + policy.spec_string()
							+ ": " + structural.str());
				AuditReport fidelity = audit_policy_fidelity(out, inst, policy);
				if (!fidelity.ok())
					note(res, describe(inst, i) + " under " + policy.spec_string()
							+ ": " + fidelity.str());
			} catch (const std::exception& e) {
				note(res, describe(inst, i) + " under " + policy.spec_string()
						+ ": " + e.what());
			}
		}
	}
	if (res.pass) {
		std::ostringstream s;
		s << res.cases << " runs, structural and fidelity audits clean";
		res.detail = s.str();
	}
	return res;
}

CheckResult check_density_algebra(const CheckOptions& opts) {
	CheckResult res{"density algebra", true, 0, ""};
	std::mt19937_64 rng(opts.seed ^ 0x9e3779b97f4a7c15ull);
	auto sixteenth = [&](long count) {
		return Rational(1 + static_cast<long>(rng() % count), 16);
	};
	auto started = std::chrono::steady_clock::now();
	for (long iter = 0; iter < opts.algebra_triples; ++iter) {
		++res.cases;
		Rational eps = sixteenth(16);  // (0, 1]
		Rational pj = sixteenth(32);
		Rational wj = sixteenth(32);
		Rational rho_j = wj / pj;
		if (iter % 2 == 0) {
			// Candidate no larger than the running job but above the small-job
			// cutoff: a 4x weight advantage forces a 4x density advantage, and
			// anything short of 4x weight stays below the 8/eps density bar.
			Rational lo = eps / Rational(2) * pj;
			Rational t(1 + static_cast<long>(rng() % 32), 32);
			Rational pk = lo + t * (pj - lo);
			Rational wk(1 + static_cast<long>(rng() % 128), 16);
			Rational rho_k = wk / pk;
			if (wk >= Rational(4) * wj) {
				if (rho_k < Rational(4) * rho_j) {
					note(res, "weight advantage without density advantage: eps=" + eps.str()
							+ " pj=" + pj.str() + " wj=" + wj.str()
							+ " pk=" + pk.str() + " wk=" + wk.str());
				}
			} else {
				if (rho_k >= Rational(8) / eps * rho_j) {
					note(res, "density above 8/eps bar without 4x weight: eps=" + eps.str()
							+ " pj=" + pj.str() + " wj=" + wj.str()
							+ " pk=" + pk.str() + " wk=" + wk.str());
				}
			}
		} else {
			// Larger candidate at or above the 4x density bar always carries a
			// 4x weight advantage.
			Rational t(1 + static_cast<long>(rng() % 32), 32);
			Rational pk = pj * (Rational(1) + t);
			Rational s(static_cast<long>(rng() % 33), 32);
			Rational rho_k = Rational(4) * rho_j * (Rational(1) + s);
			Rational wk = rho_k * pk;
			if (wk < Rational(4) * wj) {
				note(res, "density advantage without weight advantage: eps=" + eps.str()
						+ " pj=" + pj.str() + " wj=" + wj.str()
						+ " pk=" + pk.str() + " rho_k=" + rho_k.str());
			}
		}
	}
	auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
			std::chrono::steady_clock::now() - started).count();
	std::ostringstream s;
	s << res.cases << " triples in " << elapsed << " ms";
	if (elapsed >= 1000) {
		note(res, s.str() + " (over the 1 s budget)");
	} else if (res.pass) {
		res.detail = s.str();
	}
	return res;
}

CheckResult check_generators(const CheckOptions& opts) {
	CheckResult res{"generator validity", true, 0, ""};
	auto specs = random_suite(opts);
	std::size_t sample = std::min<std::size_t>(specs.size(), 100);
	for (std::size_t i = 0; i < sample; ++i) {
		++res.cases;
		Instance inst = gen_random(specs[i]);
		ValidationReport report = validate_instance(inst);
		if (!report.ok())
			note(res, "random seed " + std::to_string(specs[i].seed) + ": " + report.str());
	}
	auto families = family_suite();
	for (std::size_t i = 0; i < families.size(); ++i) {
		++res.cases;
		ValidationReport report = validate_instance(families[i]);
		if (!report.ok())
			note(res, describe(families[i], i) + ": " + report.str());
	}
	auto expect_bad = [&](const char* what, auto&& fn) {
		++res.cases;
		try {
			fn();
			note(res, std::string("accepted bad parameters: ") + what);
		} catch (const Error& e) {
			if (e.code() != ErrorCode::bad_spec)
				note(res, std::string("wrong error for ") + what + ": " + e.what());
		}
	};
	const Rational half(1, 2);
	expect_bad("chain eps=0", [&] { gen_chain({Rational(0), half, Rational(1, 100), 2}); });
	expect_bad("chain eps>1", [&] { gen_chain({Rational(2), half, Rational(1, 100), 2}); });
	expect_bad("chain gamma=0", [&] { gen_chain({half, Rational(0), Rational(1, 100), 2}); });
	expect_bad("chain gamma>1", [&] { gen_chain({half, Rational(2), Rational(1, 100), 2}); });
	expect_bad("chain delta=0", [&] { gen_chain({half, half, Rational(0), 2}); });
	expect_bad("chain delta=1", [&] { gen_chain({half, half, Rational(1), 2}); });
	expect_bad("chain n<0", [&] { gen_chain({half, half, Rational(1, 100), -1}); });
	expect_bad("pair delta=0", [&] { gen_pair({half, half, Rational(0)}); });
	expect_bad("pair delta=eps*gamma", [&] { gen_pair({half, half, Rational(1, 4)}); });
	expect_bad("random n<0", [&] {
		RandomSpec spec;
		spec.n = -1;
		spec.m = 1;
		spec.eps = half;
		gen_random(spec);
	});
	expect_bad("random eps=0", [&] {
		RandomSpec spec;
		spec.n = 1;
		spec.m = 1;
		spec.eps = Rational(0);
		gen_random(spec);
	});
	for (const Rational& eps : {Rational(1, 8), half}) {
		for (const Rational& gamma : {Rational(1, 4), Rational(1)}) {
			++res.cases;
			Rational d = default_delta(eps, gamma);
			if (d.sgn() <= 0 || d >= eps * gamma)
				note(res, "default delta out of range for eps=" + eps.str()
						+ " gamma=" + gamma.str());
		}
	}
	if (res.pass) {
		std::ostringstream s;
		s << res.cases << " generator cases";
		res.detail = s.str();
	}
	return res;
}

CheckResult check_io_roundtrip(const CheckOptions& opts) {
	CheckResult res{"serialization round-trip", true, 0, ""};
	auto instances = family_suite();
	auto specs = random_suite(opts);
	for (std::size_t i = 0; i < std::min<std::size_t>(specs.size(), 50); ++i)
		instances.push_back(gen_random(specs[i]));
	for (std::size_t i = 0; i < instances.size(); ++i) {
		const Instance& inst = instances[i];
		++res.cases;
		try {
			std::string text = emit_instance(inst);
			std::string again = emit_instance(parse_instance(text));
			if (text != again) {
				note(res, describe(inst, i) + ": instance round-trip not byte-identical");
				continue;
			}
			Outcome out = simulate(inst, AdmissionPolicy::two_threshold(inst.epsilon));
			std::string otext = emit_outcome(out);
			std::string oagain = emit_outcome(parse_outcome(otext));
			if (otext != oagain)
				note(res, describe(inst, i) + ": outcome round-trip not byte-identical");
			std::string csv = emit_trace_csv(out);
			std::size_t lines = static_cast<std::size_t>(
					std::count(csv.begin(), csv.end(), '\n'));
			if (lines != out.segments.size() + 1)
				note(res, describe(inst, i) + ": trace line count mismatch");
		} catch (const std::exception& e) {
			note(res, describe(inst, i) + ": " + e.what());
		}
	}
	if (res.pass) {
		std::ostringstream s;
		s << res.cases << " artifacts round-tripped byte-identically";
		res.detail = s.str();
	}
	return res;
}

CheckResult check_determinism(const CheckOptions& opts) {
	CheckResult res{"determinism", true, 0, ""};
	auto specs = random_suite(opts);
	std::size_t sample = std::min<std::size_t>(specs.size(), 30);
	for (std::size_t i = 0; i < sample; ++i) {
		++res.cases;
		std::string a = emit_instance(gen_random(specs[i]));
		std::string b = emit_instance(gen_random(specs[i]));
		if (a != b) {
			note(res, "same seed produced different instances");
			continue;
		}
		Instance inst = parse_instance(a);
		for (const auto& policy : {AdmissionPolicy::two_threshold(inst.epsilon),
				AdmissionPolicy::single_threshold(clamp_epsilon(inst.epsilon))}) {
			std::string run1 = emit_outcome(simulate(inst, policy));
			std::string run2 = emit_outcome(simulate(inst, policy));
			if (run1 != run2)
				note(res, "same input produced different outcomes under " + policy.spec_string());
		}
	}
	++res.cases;
	SweepSpec sweep;
	sweep.family = Family::random_jobs;
	sweep.eps_grid = {Rational(1, 2), Rational(1, 4)};
	sweep.n = 6;
	sweep.m = 2;
	sweep.seeds = {1, 2, 3};
	std::string csv1 = sweep_csv(run_sweep(sweep));
	std::string csv2 = sweep_csv(run_sweep(sweep));
	if (csv1 != csv2) note(res, "sweep reruns differ");
	if (res.pass) {
		std::ostringstream s;
		s << res.cases << " rerun comparisons, all byte-identical";
		res.detail = s.str();
	}
	return res;
}

std::vector<CheckResult> run_all_checks(const CheckOptions& opts) {
	return {
		check_half_weight(opts),
		check_ratio_bound(opts),
		check_pair_separation(),
		check_chain_dynamics(),
		check_oracle_soundness(opts),
		check_engine_audits(opts),
		check_density_algebra(opts),
		check_generators(opts),
		check_io_roundtrip(opts),
		check_determinism(opts),
	};
}

}
