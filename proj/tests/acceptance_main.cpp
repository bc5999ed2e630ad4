#include <cstdio>
#include <vector>

#include "throughsim/checks.hpp"

// Full-scale acceptance battery: one line per criterion, nonzero exit on any
// failure. Counts and tolerances are fixed here on purpose; do not trim them.
int main() {
	using namespace throughsim;
	CheckOptions opts;  // 1000 random instances, 100000 algebra triples, cap 12

	std::vector<CheckResult> results;
	results.push_back(check_half_weight(opts));
	results.push_back(check_ratio_bound(opts));
	results.push_back(check_pair_separation());
	results.push_back(check_chain_dynamics());
	results.push_back(check_oracle_soundness(opts));
	results.push_back(check_engine_audits(opts));
	results.push_back(check_density_algebra(opts));

	bool all = true;
	for (std::size_t i = 0; i < results.size(); ++i) {
		const CheckResult& r = results[i];
		all = all && r.pass;
		std::printf("%s criterion %zu, %s: %s\n", r.pass ? "PASS" : "FAIL",
				i + 1, r.name.c_str(), r.detail.c_str());
	}
	return all ? 0 : 1;
}
