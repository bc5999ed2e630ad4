#include <doctest.h>

#include <algorithm>

#include "throughsim/errors.hpp"
#include "throughsim/model.hpp"

using namespace throughsim;

namespace {

Job make_job(int id, const char* r, const char* d, const char* w,
		std::vector<const char*> procs) {
	Job job;
	job.id = id;
	job.release = Rational::parse(r);
	job.deadline = Rational::parse(d);
	job.weight = Rational::parse(w);
	for (const char* p : procs) job.proc.push_back(ProcTime::parse(p));
	return job;
}

bool has_violation(const ValidationReport& report, ViolationKind kind) {
	return std::any_of(report.violations.begin(), report.violations.end(),
			[kind](const Violation& v) { return v.kind == kind; });
}

}

TEST_CASE("processing times") {
	ProcTime inf = ProcTime::inf();
	CHECK(!inf.finite());
	CHECK(inf.str() == "inf");
	CHECK_THROWS_AS(inf.value(), Error);

	ProcTime p = ProcTime::parse("3/2");
	CHECK(p.finite());
	CHECK(p.value() == Rational(3, 2));
	CHECK(p.str() == "3/2");
	CHECK(ProcTime::parse("inf") == ProcTime::inf());
	CHECK_THROWS_AS(ProcTime::of(Rational(0)), Error);
	CHECK_THROWS_AS(ProcTime::of(Rational(-1)), Error);
}

TEST_CASE("eligibility and density") {
	Job job = make_job(0, "0", "4", "3", {"2", "inf"});
	CHECK(eligible(job, 0));
	CHECK(!eligible(job, 1));
	CHECK(density(job, 0) == Rational(3, 2));
	CHECK_THROWS_AS(density(job, 1), Error);
}

TEST_CASE("epsilon clamp") {
	CHECK(clamp_epsilon(Rational(2)) == Rational(1));
	CHECK(clamp_epsilon(Rational(1)) == Rational(1));
	CHECK(clamp_epsilon(Rational(1, 2)) == Rational(1, 2));
	CHECK_THROWS_AS(clamp_epsilon(Rational(0)), Error);
	CHECK_THROWS_AS(clamp_epsilon(Rational(-1)), Error);
}

TEST_CASE("a well-formed instance validates") {
	Instance inst;
	inst.machines = 2;
	inst.epsilon = Rational(1, 2);
	inst.jobs.push_back(make_job(0, "0", "3", "1", {"2", "inf"}));
	inst.jobs.push_back(make_job(1, "1", "4", "2", {"2", "2"}));
	ValidationReport report = validate_instance(inst);
	CHECK(report.ok());
	CHECK(report.str().empty());
}

TEST_CASE("validation flags every defect kind") {
	Instance base;
	base.machines = 1;
	base.epsilon = Rational(1, 2);
	base.jobs.push_back(make_job(0, "0", "3", "1", {"2"}));

	SUBCASE("bad machine count") {
		base.machines = 0;
		CHECK(has_violation(validate_instance(base), ViolationKind::bad_machine_count));
	}
	SUBCASE("bad epsilon") {
		base.epsilon = Rational(0);
		CHECK(has_violation(validate_instance(base), ViolationKind::bad_epsilon));
	}
	SUBCASE("duplicate ids") {
		base.jobs.push_back(make_job(0, "0", "3", "1", {"2"}));
		CHECK(has_violation(validate_instance(base), ViolationKind::duplicate_id));
	}
	SUBCASE("non-dense ids") {
		base.jobs[0].id = 1;
		CHECK(has_violation(validate_instance(base), ViolationKind::non_dense_ids));
	}
	SUBCASE("negative release") {
		base.jobs[0].release = Rational(-1);
		CHECK(has_violation(validate_instance(base), ViolationKind::negative_release));
	}
	SUBCASE("nonpositive weight") {
		base.jobs[0].weight = Rational(0);
		CHECK(has_violation(validate_instance(base), ViolationKind::nonpositive_weight));
	}
	SUBCASE("proc length mismatch") {
		base.jobs[0].proc.push_back(ProcTime::inf());
		CHECK(has_violation(validate_instance(base), ViolationKind::proc_length_mismatch));
	}
	SUBCASE("no eligible machine") {
		base.jobs[0].proc[0] = ProcTime::inf();
		CHECK(has_violation(validate_instance(base), ViolationKind::no_eligible_machine));
	}
	SUBCASE("slack violation") {
		// needs d - r >= (1 + 1/2) * 2 = 3; give it one hair less
		base.jobs[0].deadline = Rational(299, 100);
		ValidationReport report = validate_instance(base);
		CHECK(has_violation(report, ViolationKind::slack));
		REQUIRE(!report.violations.empty());
		CHECK(report.violations[0].job == 0);
		CHECK(report.violations[0].machine == 0);
	}
	SUBCASE("slack boundary is allowed") {
		base.jobs[0].deadline = Rational(3);
		CHECK(validate_instance(base).ok());
	}
}
