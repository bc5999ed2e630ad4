#include "throughsim/generators.hpp"

#include <algorithm>
#include <random>

#include "throughsim/errors.hpp"

namespace throughsim {

namespace {

void require(bool cond, const std::string& what) {
	if (!cond) throw Error(ErrorCode::bad_spec, what);
}

void require_unit(const Rational& v, const char* name) {
	require(v.sgn() > 0 && v <= Rational(1), std::string(name) + " must be in (0,1]");
}

}  // namespace

Rational default_delta(const Rational& eps, const Rational& gamma) {
	return min(min(eps, gamma), eps * gamma) / Rational(100);
}

Instance gen_chain(const ChainSpec& spec) {
	require_unit(spec.eps, "eps");
	require_unit(spec.gamma, "gamma");
	require(spec.delta.sgn() > 0 && spec.delta < Rational(1), "delta must be in (0,1)");
	require(spec.n >= 0, "n must be >= 0");

	Instance inst;
	inst.machines = 1;
	inst.epsilon = spec.eps;
	const Rational one(1);
	Rational r(0), p(1), rho(1);
	for (int j = 0; j <= spec.n; ++j) {
		if (j > 0) {
			r += (one - spec.delta) * p;           // arrives just before the predecessor ends
			p *= spec.eps + spec.delta;            // shrinks
			rho *= (one + spec.delta) / spec.gamma;  // clears the baseline's density bar
		}
		Job job;
		job.id = j;
		job.release = r;
		job.weight = rho * p;
		job.deadline = r + (one + spec.eps) * p;  // minimal window for the slack
		job.proc = {ProcTime::of(p)};
		inst.jobs.push_back(std::move(job));
	}
	return inst;
}

Instance gen_pair(const PairSpec& spec) {
	require_unit(spec.eps, "eps");
	require_unit(spec.gamma, "gamma");
	require(spec.delta.sgn() > 0, "delta must be > 0");
	require(spec.delta < spec.eps * spec.gamma, "delta must be < eps*gamma");

	const Rational one(1);
	Instance inst;
	inst.machines = 1;
	inst.epsilon = spec.eps;

	Job first;
	first.id = 0;
	first.release = Rational(0);
	first.weight = Rational(2);
	first.proc = {ProcTime::of(Rational(2))};
	first.deadline = (one + spec.eps) * Rational(2);

	// Density (1/gamma - ...) just below the baseline's bar against job 0.
	Job second;
	second.id = 1;
	second.release = spec.delta;
	second.weight = one / (spec.eps * spec.gamma + spec.delta);
	second.proc = {ProcTime::of(one / spec.eps)};
	second.deadline = spec.delta + (one + spec.eps) / spec.eps;

	inst.jobs = {std::move(first), std::move(second)};
	return inst;
}

Instance gen_random(const RandomSpec& spec) {
	require(spec.n >= 0, "n must be >= 0");
	require(spec.m >= 1, "m must be >= 1");
	require(spec.eps.sgn() > 0, "eps must be > 0");
	require(spec.proc.lo.sgn() > 0 && spec.proc.lo <= spec.proc.hi, "bad processing-time range");
	require(spec.weight.lo.sgn() > 0 && spec.weight.lo <= spec.weight.hi, "bad weight range");
	require(spec.stretch.lo >= Rational(1) && spec.stretch.lo <= spec.stretch.hi,
	        "stretch range must start at >= 1");

	std::mt19937_64 rng(spec.seed);
	auto draw = [&rng](int k) { return static_cast<int>(rng() % static_cast<std::uint64_t>(k)); };
	auto grid = [&draw](const RangeSpec& range) {
		return range.lo + (range.hi - range.lo) * Rational(draw(17), 16);
	};

	Instance inst;
	inst.machines = spec.m;
	inst.epsilon = spec.eps;
	const Rational one(1);
	const RangeSpec release_range{Rational(0),
	                              spec.proc.hi * Rational(std::max(spec.n, 1), spec.m)};
	for (int j = 0; j < spec.n; ++j) {
		Job job;
		job.id = j;
		unsigned mask = 0;
		for (int i = 0; i < spec.m; ++i)
			if (draw(2)) mask |= 1u << i;
		if (mask == 0) mask = 1u << draw(spec.m);

		Rational p_max(0);
		for (int i = 0; i < spec.m; ++i) {
			if (!(mask & (1u << i))) {
				job.proc.push_back(ProcTime::inf());
				continue;
			}
			Rational p = grid(spec.proc);
			p_max = max(p_max, p);
			job.proc.push_back(ProcTime::of(p));
		}
		job.weight = grid(spec.weight);
		job.release = grid(release_range);
		job.deadline = job.release + (one + spec.eps) * p_max * grid(spec.stretch);
		inst.jobs.push_back(std::move(job));
	}
	return inst;
}

}  // namespace throughsim
