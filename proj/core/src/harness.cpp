#include "throughsim/harness.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

#include "throughsim/engine.hpp"
#include "throughsim/errors.hpp"

namespace throughsim {

std::string family_name(Family family) {
	switch (family) {
	case Family::chain: return "chain";
	case Family::pair: return "pair";
	case Family::random_jobs: return "random";
	}
	throw Error(ErrorCode::bad_spec, "unknown family");
}

Family parse_family(const std::string& name) {
	if (name == "chain") return Family::chain;
	if (name == "pair") return Family::pair;
	if (name == "random") return Family::random_jobs;
	throw Error(ErrorCode::bad_spec, "unknown family: " + name);
}

namespace {

struct Point {
	Rational eps;
	Rational gamma;
	Rational delta;
	std::uint64_t seed = 0;
};

Instance build_instance(const SweepSpec& spec, const Point& pt) {
	switch (spec.family) {
	case Family::chain:
		return gen_chain({pt.eps, pt.gamma, pt.delta, spec.n});
	case Family::pair:
		return gen_pair({pt.eps, pt.gamma, pt.delta});
	case Family::random_jobs: {
		RandomSpec rs;
		rs.seed = pt.seed;
		rs.n = spec.n;
		rs.m = spec.m;
		rs.eps = pt.eps;
		return gen_random(rs);
	}
	}
	throw Error(ErrorCode::bad_spec, "unknown family");
}

AdmissionPolicy resolve_policy(const std::string& spec, const Instance& inst,
		const Rational& gamma) {
	if (spec == "single-threshold")
		return AdmissionPolicy::single_threshold(gamma);
	return AdmissionPolicy::from_spec(spec, inst.epsilon);
}

std::vector<SweepRow> run_point(const SweepSpec& spec, const Point& pt) {
	Instance inst = build_instance(spec, pt);
	std::optional<Rational> optimum;
	if (spec.with_oracle) {
		try {
			optimum = optimal_nonmigratory(inst, spec.oracle_cap).optimum;
		} catch (const Error& e) {
			if (e.code() != ErrorCode::too_large) throw;
		}
	}
	std::vector<SweepRow> rows;
	for (const auto& pspec : spec.policies) {
		AdmissionPolicy policy = resolve_policy(pspec, inst, pt.gamma);
		Outcome out = simulate(inst, policy);
		SweepRow row;
		row.family = family_name(spec.family);
		row.eps = pt.eps;
		row.gamma = pt.gamma;
		row.delta = pt.delta;
		row.n = static_cast<int>(inst.jobs.size());
		row.m = inst.machines;
		row.seed = pt.seed;
		row.policy = policy.spec_string();
		row.admitted = out.weights.admitted;
		row.finished = out.weights.finished;
		row.optimum = optimum;
		if (optimum) {
			if (row.finished.sgn() > 0)
				row.ratio = RatioResult{*optimum / row.finished};
			else
				row.ratio = RatioResult{};
		}
		if (row.admitted.sgn() > 0)
			row.margin = row.finished / row.admitted;
		rows.push_back(std::move(row));
	}
	return rows;
}

}

std::vector<SweepRow> run_sweep(const SweepSpec& spec) {
	if (spec.eps_grid.empty())
		throw Error(ErrorCode::bad_spec, "sweep needs at least one epsilon");
	if (spec.policies.empty())
		throw Error(ErrorCode::bad_spec, "sweep needs at least one policy");
	std::vector<Point> points;
	for (const auto& eps : spec.eps_grid) {
		Point pt;
		pt.eps = eps;
		pt.gamma = spec.gamma ? *spec.gamma : eps;
		pt.delta = spec.delta ? *spec.delta : default_delta(eps, pt.gamma);
		if (spec.family == Family::random_jobs) {
			for (auto seed : spec.seeds) {
				pt.seed = seed;
				points.push_back(pt);
			}
		} else {
			points.push_back(pt);
		}
	}

	std::vector<std::vector<SweepRow>> results(points.size());
	std::atomic<std::size_t> next{0};
	std::exception_ptr fail;
	std::mutex fail_mu;
	auto worker = [&] {
		for (;;) {
			std::size_t i = next.fetch_add(1);
			if (i >= points.size()) return;
			try {
				results[i] = run_point(spec, points[i]);
			} catch (...) {
				std::lock_guard<std::mutex> lock(fail_mu);
				if (!fail) fail = std::current_exception();
			}
		}
	};
	unsigned hw = std::max(1u, std::thread::hardware_concurrency());
	unsigned nthreads = static_cast<unsigned>(
			std::min<std::size_t>(hw, points.size()));
	std::vector<std::thread> pool;
	for (unsigned t = 0; t < nthreads; ++t) pool.emplace_back(worker);
	for (auto& th : pool) th.join();
	if (fail) std::rethrow_exception(fail);

	std::vector<SweepRow> rows;
	for (auto& part : results)
		for (auto& row : part) rows.push_back(std::move(row));
	std::sort(rows.begin(), rows.end(), [](const SweepRow& a, const SweepRow& b) {
		if (a.eps != b.eps) return a.eps < b.eps;
		if (a.gamma != b.gamma) return a.gamma < b.gamma;
		if (a.seed != b.seed) return a.seed < b.seed;
		return a.policy < b.policy;
	});
	return rows;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
	std::ostringstream out;
	out << "family,eps,gamma,delta,n,m,seed,policy,admitted,finished,"
			"optimum,ratio,margin\n";
	for (const auto& r : rows) {
		out << r.family << ',' << r.eps.str() << ',' << r.gamma.str() << ','
			<< r.delta.str() << ',' << r.n << ',' << r.m << ',' << r.seed << ','
			<< r.policy << ',' << r.admitted.str() << ',' << r.finished.str() << ',';
		if (r.optimum) out << r.optimum->str();
		out << ',';
		if (r.ratio) out << r.ratio->str();
		out << ',';
		if (r.margin) out << r.margin->str();
		out << '\n';
	}
	return out.str();
}

}
