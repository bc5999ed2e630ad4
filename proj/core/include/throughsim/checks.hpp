#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "throughsim/generators.hpp"
#include "throughsim/oracle.hpp"

namespace throughsim {

struct CheckResult {
	std::string name;
	bool pass = false;
	long cases = 0;
	std::string detail;
};

struct CheckOptions {
	std::uint64_t seed = 811557281;
	int random_instances = 1000;
	long algebra_triples = 100000;
	int oracle_cap = kDefaultOracleCap;
};

// Deterministic random workload: n in 1..20, m in 1..3, eps cycling
// through {1/4, 1/2, 1}, per-instance seeds drawn from options.seed.
std::vector<RandomSpec> random_suite(const CheckOptions& opts);

// Chain and pair instances across a fixed parameter grid.
std::vector<Instance> family_suite();

// Finished weight is at least half of admitted weight under the
// two-threshold policy, exactly, on every suite instance.
CheckResult check_half_weight(const CheckOptions& opts);

// Measured optimum/finished ratio under the two-threshold policy stays
// within 768/eps + 386 on every suite instance the oracle can solve.
CheckResult check_ratio_bound(const CheckOptions& opts);

// Two-job needle instances: the single-threshold baseline keeps the
// light job and its ratio quadruples as eps halves; the two-threshold
// policy switches to the heavy job once its density clears the bar.
CheckResult check_pair_separation();

// Chain instances under the single-threshold baseline: every job
// preempts its predecessor on arrival and only the last one finishes.
CheckResult check_chain_dynamics();

// The offline oracle agrees with an independent brute-force scheduler
// on small dense grids, dominates every policy, and returns a witness
// assignment that replays feasibly and sums to the reported optimum.
CheckResult check_oracle_soundness(const CheckOptions& opts);

// Every simulation passes the structural replay audit and the
// admission-rule fidelity audit, for both policies.
CheckResult check_engine_audits(const CheckOptions& opts);

// The density/weight implications behind the two-threshold constants,
// verified on random rational triples in exact arithmetic, timed.
CheckResult check_density_algebra(const CheckOptions& opts);

// Generator outputs always validate; bad parameters always throw.
CheckResult check_generators(const CheckOptions& opts);

// Serialized artifacts reparse to byte-identical bytes.
CheckResult check_io_roundtrip(const CheckOptions& opts);

// Reruns of every pipeline stage produce byte-identical artifacts.
CheckResult check_determinism(const CheckOptions& opts);

std::vector<CheckResult> run_all_checks(const CheckOptions& opts);

}
