#include <benchmark/benchmark.h>

#include "throughsim/engine.hpp"
#include "throughsim/generators.hpp"
#include "throughsim/oracle.hpp"

namespace {

using namespace throughsim;

Instance random_instance(int n, int m, std::uint64_t seed = 7) {
	RandomSpec spec;
	spec.seed = seed;
	spec.n = n;
	spec.m = m;
	spec.eps = Rational(1, 2);
	return gen_random(spec);
}

void BM_simulate_two_threshold(benchmark::State& state) {
	Instance inst = random_instance(static_cast<int>(state.range(0)), 2);
	AdmissionPolicy policy = AdmissionPolicy::two_threshold(inst.epsilon);
	for (auto _ : state) {
		Outcome out = simulate(inst, policy);
		benchmark::DoNotOptimize(out.weights.finished);
	}
}
BENCHMARK(BM_simulate_two_threshold)->Arg(8)->Arg(32)->Arg(128)->Arg(512);

void BM_simulate_single_threshold(benchmark::State& state) {
	Instance inst = random_instance(static_cast<int>(state.range(0)), 2);
	AdmissionPolicy policy = AdmissionPolicy::single_threshold(Rational(1, 2));
	for (auto _ : state) {
		Outcome out = simulate(inst, policy);
		benchmark::DoNotOptimize(out.weights.finished);
	}
}
BENCHMARK(BM_simulate_single_threshold)->Arg(8)->Arg(32)->Arg(128)->Arg(512);

void BM_simulate_chain(benchmark::State& state) {
	Rational eps(1, 4);
	Rational gamma(1, 2);
	Instance inst = gen_chain({eps, gamma, default_delta(eps, gamma),
			static_cast<int>(state.range(0))});
	AdmissionPolicy policy = AdmissionPolicy::single_threshold(gamma);
	for (auto _ : state) {
		Outcome out = simulate(inst, policy);
		benchmark::DoNotOptimize(out.weights.finished);
	}
}
BENCHMARK(BM_simulate_chain)->Arg(16)->Arg(64)->Arg(256);

void BM_edf_feasible(benchmark::State& state) {
	Instance inst = random_instance(static_cast<int>(state.range(0)), 1);
	std::vector<OracleJob> jobs;
	for (const auto& job : inst.jobs) jobs.push_back(oracle_job(job, 0));
	for (auto _ : state) {
		bool feasible = edf_feasible(jobs);
		benchmark::DoNotOptimize(feasible);
	}
}
BENCHMARK(BM_edf_feasible)->Arg(8)->Arg(16)->Arg(32);

void BM_oracle(benchmark::State& state) {
	Instance inst = random_instance(static_cast<int>(state.range(0)), 2);
	for (auto _ : state) {
		OracleResult res = optimal_nonmigratory(inst);
		benchmark::DoNotOptimize(res.optimum);
	}
}
BENCHMARK(BM_oracle)->Arg(6)->Arg(9)->Arg(12);

void BM_decide_two_threshold(benchmark::State& state) {
	Rational eps(1, 2);
	JobView running{Rational(4), Rational(3, 2), Rational(6)};
	JobView candidate{Rational(1), Rational(13), Rational(13)};
	for (auto _ : state) {
		Verdict v = two_threshold_decide(candidate, running, eps);
		benchmark::DoNotOptimize(v);
	}
}
BENCHMARK(BM_decide_two_threshold);

}

BENCHMARK_MAIN();
