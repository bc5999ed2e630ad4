#include <doctest.h>

#include <map>
#include <sstream>

#include "throughsim/harness.hpp"

using namespace throughsim;

namespace {

const SweepRow& find_row(const std::vector<SweepRow>& rows, const Rational& eps,
		const std::string& policy) {
	for (const auto& row : rows)
		if (row.eps == eps && row.policy == policy) return row;
	REQUIRE(false);
	return rows.front();
}

}

TEST_CASE("family names") {
	CHECK(family_name(Family::chain) == "chain");
	CHECK(family_name(Family::pair) == "pair");
	CHECK(family_name(Family::random_jobs) == "random");
	CHECK(parse_family("chain") == Family::chain);
	CHECK(parse_family("random") == Family::random_jobs);
	CHECK_THROWS(parse_family("bogus"));
}

TEST_CASE("needle-pair sweep reproduces the frozen separation") {
	SweepSpec spec;
	spec.family = Family::pair;
	spec.eps_grid = {Rational(1), Rational(1, 2), Rational(1, 4), Rational(1, 8)};
	std::vector<SweepRow> rows = run_sweep(spec);
	REQUIRE(rows.size() == 8);

	// canonical order: eps ascending, two-threshold before single-threshold:<g>
	CHECK(rows[0].eps == Rational(1, 8));
	CHECK(rows[0].policy == "single-threshold:1/8");
	CHECK(rows[1].policy == "two-threshold");
	CHECK(rows.back().eps == Rational(1));

	const std::map<std::string, std::pair<const char*, const char*>> frozen = {
		{"1", {"151/101", "151/101"}},
		{"1/2", {"200/101", "200/101"}},
		{"1/4", {"800/101", "800/101"}},
		{"1/8", {"3200/101", "1"}},
	};
	for (const auto& [eps_text, ratios] : frozen) {
		Rational eps = Rational::parse(eps_text);
		const SweepRow& single = find_row(rows, eps, "single-threshold:" + std::string(eps_text));
		const SweepRow& two = find_row(rows, eps, "two-threshold");
		REQUIRE(single.ratio.has_value());
		REQUIRE(two.ratio.has_value());
		CHECK(single.ratio->str() == ratios.first);
		CHECK(two.ratio->str() == ratios.second);
		CHECK(single.finished == Rational(2));
		CHECK(single.gamma == eps);
		REQUIRE(single.optimum.has_value());
		REQUIRE(single.margin.has_value());
		CHECK(*single.margin <= Rational(1));
	}

	// the eps = 1/8 two-threshold row, frozen byte for byte
	std::string csv = sweep_csv(rows);
	CHECK(csv.find("family,eps,gamma,delta,n,m,seed,policy,admitted,finished,"
			"optimum,ratio,margin\n") == 0);
	CHECK(csv.find("pair,1/8,1/8,1/6400,2,1,0,two-threshold,"
			"6602/101,6400/101,6400/101,1,3200/3301\n") != std::string::npos);
}

TEST_CASE("chain sweep with a pinned gamma") {
	SweepSpec spec;
	spec.family = Family::chain;
	spec.eps_grid = {Rational(1, 4)};
	spec.gamma = Rational(1, 2);
	spec.n = 3;
	spec.policies = {"single-threshold"};
	std::vector<SweepRow> rows = run_sweep(spec);
	REQUIRE(rows.size() == 1);
	CHECK(rows[0].family == "chain");
	CHECK(rows[0].n == 4);  // jobs, not links
	CHECK(rows[0].policy == "single-threshold:1/2");
	CHECK(rows[0].gamma == Rational(1, 2));
	CHECK(rows[0].finished < rows[0].admitted);
	REQUIRE(rows[0].ratio.has_value());
	CHECK(!rows[0].ratio->unbounded());
}

TEST_CASE("random sweep skips the oracle when asked or oversized") {
	SweepSpec spec;
	spec.family = Family::random_jobs;
	spec.eps_grid = {Rational(1, 2)};
	spec.seeds = {5, 6};
	spec.n = 14;  // past the oracle cap
	spec.m = 2;
	std::vector<SweepRow> rows = run_sweep(spec);
	REQUIRE(rows.size() == 4);
	for (const auto& row : rows) {
		CHECK(!row.optimum.has_value());
		CHECK(!row.ratio.has_value());
		CHECK(row.n == 14);
	}
	// rows sorted by seed then policy
	CHECK(rows[0].seed == 5);
	CHECK(rows[1].seed == 5);
	CHECK(rows[2].seed == 6);
	CHECK(rows[0].policy < rows[1].policy);

	spec.n = 4;
	spec.with_oracle = false;
	rows = run_sweep(spec);
	for (const auto& row : rows) CHECK(!row.optimum.has_value());

	spec.with_oracle = true;
	rows = run_sweep(spec);
	for (const auto& row : rows) CHECK(row.optimum.has_value());
}

TEST_CASE("sweep validates its spec") {
	SweepSpec spec;
	spec.eps_grid = {};
	CHECK_THROWS(run_sweep(spec));
	spec.eps_grid = {Rational(1, 2)};
	spec.policies = {};
	CHECK_THROWS(run_sweep(spec));
}

TEST_CASE("csv cells leave unknown fields empty") {
	SweepRow row;
	row.family = "random";
	row.eps = Rational(1, 2);
	row.gamma = Rational(1, 2);
	row.delta = Rational(0);
	row.n = 3;
	row.m = 1;
	row.seed = 9;
	row.policy = "two-threshold";
	row.admitted = Rational(5);
	row.finished = Rational(4);
	std::string csv = sweep_csv({row});
	std::istringstream lines(csv);
	std::string header, data;
	std::getline(lines, header);
	std::getline(lines, data);
	CHECK(data == "random,1/2,1/2,0,3,1,9,two-threshold,5,4,,,");
}
