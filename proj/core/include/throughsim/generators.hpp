#pragma once

#include <cstdint>

#include "throughsim/model.hpp"
#include "throughsim/rational.hpp"

namespace throughsim {

// Shared perturbation default: min(eps, gamma, eps*gamma) / 100.
Rational default_delta(const Rational& eps, const Rational& gamma);

// Single-machine chain of n+1 jobs, each released shortly before its
// predecessor would finish, smaller by a factor (eps+delta) and denser by a
// factor (1+delta)/gamma. A density-threshold baseline with threshold gamma
// admits every link, abandons all but the last, and finishes only job n.
struct ChainSpec {
	Rational eps;    // (0,1]
	Rational gamma;  // (0,1]
	Rational delta;  // (0,1)
	int n = 0;       // chain extends n links past job 0
};
Instance gen_chain(const ChainSpec& spec);

// Single-machine pair: an early moderate job, then a far heavier one whose
// density lands just below the baseline's admission bar rho/gamma, so the
// baseline keeps the first job and forfeits the second. Both windows are
// minimal for the slack eps, so no schedule completes both (for small eps).
struct PairSpec {
	Rational eps;    // (0,1]
	Rational gamma;  // (0,1]
	Rational delta;  // (0, eps*gamma)
};
Instance gen_pair(const PairSpec& spec);

struct RangeSpec {
	Rational lo;
	Rational hi;
};

// Seeded random instances: each (job, machine) pair is eligible with
// probability 1/2 (at least one machine forced), processing times and weights
// come off a 16-step grid over their ranges, and deadlines get the full
// (1+eps) slack of the largest eligible size times a stretch >= 1, so every
// generated instance validates.
struct RandomSpec {
	std::uint64_t seed = 0;
	int n = 0;
	int m = 1;
	Rational eps;
	RangeSpec proc{Rational(1), Rational(8)};
	RangeSpec weight{Rational(1), Rational(16)};
	RangeSpec stretch{Rational(1), Rational(3)};
};
Instance gen_random(const RandomSpec& spec);

}  // namespace throughsim
