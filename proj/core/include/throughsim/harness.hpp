#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "throughsim/generators.hpp"
#include "throughsim/oracle.hpp"

namespace throughsim {

enum class Family { chain, pair, random_jobs };

std::string family_name(Family family);
Family parse_family(const std::string& name);

// One measured grid point. Optional fields stay empty when the oracle
// was skipped or the instance exceeded its size cap.
struct SweepRow {
	std::string family;
	Rational eps;
	Rational gamma;
	Rational delta;
	int n = 0;
	int m = 1;
	std::uint64_t seed = 0;
	std::string policy;
	Rational admitted;
	Rational finished;
	std::optional<Rational> optimum;
	std::optional<RatioResult> ratio;
	std::optional<Rational> margin;
};

struct SweepSpec {
	Family family = Family::pair;
	std::vector<Rational> eps_grid;
	// Absent gamma means "track eps" at each grid point.
	std::optional<Rational> gamma;
	// Absent delta means default_delta(eps, gamma) at each grid point.
	std::optional<Rational> delta;
	int n = 4;
	int m = 1;
	std::vector<std::uint64_t> seeds{0};
	// "single-threshold" with no parameter resolves to the grid point's gamma.
	std::vector<std::string> policies{"two-threshold", "single-threshold"};
	bool with_oracle = true;
	int oracle_cap = kDefaultOracleCap;
};

// Runs every (eps, seed, policy) combination, oracle once per instance,
// and returns rows sorted by (eps, gamma, seed, policy).
std::vector<SweepRow> run_sweep(const SweepSpec& spec);

std::string sweep_csv(const std::vector<SweepRow>& rows);

}
