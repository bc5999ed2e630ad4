#include <doctest.h>

#include <optional>
#include <vector>

#include "throughsim/engine.hpp"
#include "throughsim/errors.hpp"
#include "throughsim/io.hpp"

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

void expect_admission(const AdmissionRecord& rec, int job, int machine,
		const char* a, const char* v, std::optional<int> parent) {
	CHECK(rec.job == job);
	CHECK(rec.machine == machine);
	CHECK(rec.admit_time == Rational::parse(a));
	CHECK(rec.virtual_deadline == Rational::parse(v));
	CHECK(rec.parent == parent);
}

void expect_segment(const ScheduleSegment& seg, int machine, int job,
		const char* start, const char* end) {
	CHECK(seg.machine == machine);
	CHECK(seg.job == job);
	CHECK(seg.start == Rational::parse(start));
	CHECK(seg.end == Rational::parse(end));
}

void expect_clean(const Outcome& out, const Instance& inst, const AdmissionPolicy& policy) {
	AuditReport structural = check_feasibility(out, inst);
	INFO(structural.str());
	CHECK(structural.ok());
	AuditReport fidelity = audit_policy_fidelity(out, inst, policy);
	INFO(fidelity.str());
	CHECK(fidelity.ok());
}

}

TEST_CASE("rejected twin is admitted after the first completes") {
	Instance inst;
	inst.machines = 1;
	inst.epsilon = Rational(1);
	inst.jobs.push_back(make_job(0, "0", "4", "1", {"1"}));
	inst.jobs.push_back(make_job(1, "0", "4", "1", {"1"}));

	AdmissionPolicy policy = AdmissionPolicy::two_threshold(inst.epsilon);
	Outcome out = simulate(inst, policy);

	REQUIRE(out.admissions.size() == 2);
	expect_admission(out.admissions[0], 0, 0, "0", "3/2", std::nullopt);
	expect_admission(out.admissions[1], 1, 0, "1", "5/2", std::nullopt);
	REQUIRE(out.segments.size() == 2);
	expect_segment(out.segments[0], 0, 0, "0", "1");
	expect_segment(out.segments[1], 0, 1, "1", "2");
	CHECK(out.finished == std::vector<int>{0, 1});
	CHECK(out.discarded.empty());
	CHECK(out.never_admitted.empty());
	CHECK(out.weights.admitted == Rational(2));
	CHECK(out.weights.finished == Rational(2));
	CHECK(out.weights.discarded == Rational(0));
	expect_clean(out, inst, policy);
}

TEST_CASE("preempted job is discarded when its slack runs out") {
	Instance inst;
	inst.machines = 1;
	inst.epsilon = Rational(1, 8);
	inst.jobs.push_back(make_job(0, "0", "9/4", "2", {"2"}));
	inst.jobs.push_back(make_job(1, "1/6400", "57601/6400", "100", {"8"}));

	AdmissionPolicy policy = AdmissionPolicy::two_threshold(inst.epsilon);
	Outcome out = simulate(inst, policy);

	REQUIRE(out.admissions.size() == 2);
	expect_admission(out.admissions[0], 0, 0, "0", "17/8", std::nullopt);
	expect_admission(out.admissions[1], 1, 0, "1/6400", "54401/6400", 0);
	REQUIRE(out.segments.size() == 2);
	expect_segment(out.segments[0], 0, 0, "0", "1/6400");
	expect_segment(out.segments[1], 0, 1, "1/6400", "51201/6400");
	CHECK(out.finished == std::vector<int>{1});
	CHECK(out.discarded == std::vector<int>{0});
	CHECK(out.never_admitted.empty());
	CHECK(out.weights.admitted == Rational(102));
	CHECK(out.weights.finished == Rational(100));
	CHECK(out.weights.discarded == Rational(2));
	expect_clean(out, inst, policy);
}

TEST_CASE("equal-density admission waits behind the lower id and dies") {
	Instance inst;
	inst.machines = 1;
	inst.epsilon = Rational(1);
	inst.jobs.push_back(make_job(0, "0", "6", "2", {"2"}));
	inst.jobs.push_back(make_job(1, "0", "6", "1", {"1"}));

	AdmissionPolicy policy = AdmissionPolicy::single_threshold(Rational(1));
	Outcome out = simulate(inst, policy);

	REQUIRE(out.admissions.size() == 2);
	expect_admission(out.admissions[0], 0, 0, "0", "3", std::nullopt);
	expect_admission(out.admissions[1], 1, 0, "0", "3/2", 0);
	REQUIRE(out.segments.size() == 1);
	expect_segment(out.segments[0], 0, 0, "0", "2");
	CHECK(out.finished == std::vector<int>{0});
	CHECK(out.discarded == std::vector<int>{1});  // discarded at 1/2 without ever running
	CHECK(out.weights.admitted == Rational(3));
	CHECK(out.weights.finished == Rational(2));
	CHECK(out.weights.discarded == Rational(1));
	expect_clean(out, inst, policy);
}

TEST_CASE("per-machine admission respects eligibility") {
	Instance inst;
	inst.machines = 2;
	inst.epsilon = Rational(1);
	inst.jobs.push_back(make_job(0, "0", "4", "4", {"1", "inf"}));
	inst.jobs.push_back(make_job(1, "0", "4", "3", {"inf", "1"}));
	inst.jobs.push_back(make_job(2, "0", "4", "2", {"1", "1"}));

	AdmissionPolicy policy = AdmissionPolicy::two_threshold(inst.epsilon);
	Outcome out = simulate(inst, policy);

	REQUIRE(out.admissions.size() == 3);
	expect_admission(out.admissions[0], 0, 0, "0", "3/2", std::nullopt);
	expect_admission(out.admissions[1], 1, 1, "0", "3/2", std::nullopt);
	expect_admission(out.admissions[2], 2, 0, "1", "5/2", std::nullopt);
	REQUIRE(out.segments.size() == 3);
	expect_segment(out.segments[0], 0, 0, "0", "1");
	expect_segment(out.segments[1], 0, 2, "1", "2");
	expect_segment(out.segments[2], 1, 1, "0", "1");
	CHECK(out.finished == std::vector<int>{0, 1, 2});
	CHECK(out.weights.finished == Rational(9));
	expect_clean(out, inst, policy);
}

TEST_CASE("simulate rejects unusable inputs") {
	Instance inst;
	inst.machines = 1;
	inst.epsilon = Rational(1, 2);
	inst.jobs.push_back(make_job(0, "0", "3", "1", {"2"}));

	SUBCASE("invalid instance") {
		inst.jobs[0].weight = Rational(0);
		CHECK_THROWS_AS((void)simulate(inst, AdmissionPolicy::two_threshold(Rational(1, 2))),
				Error);
	}
	SUBCASE("mismatched two-threshold parameter") {
		CHECK_THROWS_AS((void)simulate(inst, AdmissionPolicy::two_threshold(Rational(1, 4))),
				Error);
	}
	SUBCASE("any single-threshold gamma is accepted") {
		Outcome out = simulate(inst, AdmissionPolicy::single_threshold(Rational(1, 7)));
		CHECK(out.finished == std::vector<int>{0});
	}
}

TEST_CASE("structural audit catches hand-corrupted outcomes") {
	Instance inst;
	inst.machines = 1;
	inst.epsilon = Rational(1, 8);
	inst.jobs.push_back(make_job(0, "0", "9/4", "2", {"2"}));
	inst.jobs.push_back(make_job(1, "1/6400", "57601/6400", "100", {"8"}));
	AdmissionPolicy policy = AdmissionPolicy::two_threshold(inst.epsilon);
	const Outcome clean = simulate(inst, policy);
	REQUIRE(check_feasibility(clean, inst).ok());

	SUBCASE("segment stretched past the virtual deadline") {
		Outcome bad = clean;
		bad.segments[1].end = bad.segments[1].end + Rational(4);
		CHECK(!check_feasibility(bad, inst).ok());
	}
	SUBCASE("finished job recorded as discarded") {
		Outcome bad = clean;
		bad.finished = {};
		bad.discarded = {0, 1};
		CHECK(!check_feasibility(bad, inst).ok());
	}
	SUBCASE("admission moved to an ineligible machine") {
		Outcome bad = clean;
		bad.admissions[1].machine = 1;
		CHECK(!check_feasibility(bad, inst).ok());
	}
	SUBCASE("parent dropped") {
		Outcome bad = clean;
		bad.admissions[1].parent = std::nullopt;
		CHECK(!check_feasibility(bad, inst).ok());
	}
	SUBCASE("lost segment leaves a finished job short") {
		Outcome bad = clean;
		bad.segments.pop_back();
		CHECK(!check_feasibility(bad, inst).ok());
	}
	SUBCASE("weight totals cooked") {
		Outcome bad = clean;
		bad.weights.finished = bad.weights.finished + Rational(1);
		CHECK(!check_feasibility(bad, inst).ok());
	}
	SUBCASE("overlapping segments on one machine") {
		Outcome bad = clean;
		bad.segments[1].start = Rational(0);
		CHECK(!check_feasibility(bad, inst).ok());
	}
	SUBCASE("admission before release") {
		Outcome bad = clean;
		bad.admissions[1].admit_time = Rational(0);
		CHECK(!check_feasibility(bad, inst).ok());
	}
}

TEST_CASE("fidelity audit flags admissions a stricter policy forbids") {
	Instance inst;
	inst.machines = 1;
	inst.epsilon = Rational(1);
	inst.jobs.push_back(make_job(0, "0", "6", "2", {"2"}));      // rho 1
	inst.jobs.push_back(make_job(1, "1/2", "6", "3", {"1"}));    // rho 3, preempts job 0
	AdmissionPolicy loose = AdmissionPolicy::single_threshold(Rational(1, 2));
	Outcome out = simulate(inst, loose);
	REQUIRE(out.admissions.size() == 2);  // 3 >= 2 * 1 clears the loose bar
	CHECK(audit_policy_fidelity(out, inst, loose).ok());

	AdmissionPolicy strict = AdmissionPolicy::single_threshold(Rational(1, 10));
	CHECK(!audit_policy_fidelity(out, inst, strict).ok());
}

TEST_CASE("simulation is deterministic") {
	Instance inst;
	inst.machines = 2;
	inst.epsilon = Rational(1);
	inst.jobs.push_back(make_job(0, "0", "4", "4", {"1", "inf"}));
	inst.jobs.push_back(make_job(1, "0", "4", "3", {"inf", "1"}));
	inst.jobs.push_back(make_job(2, "0", "4", "2", {"1", "1"}));
	AdmissionPolicy policy = AdmissionPolicy::two_threshold(inst.epsilon);
	CHECK(emit_outcome(simulate(inst, policy)) == emit_outcome(simulate(inst, policy)));
}
