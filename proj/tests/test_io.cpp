#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <string>

#include "throughsim/engine.hpp"
#include "throughsim/errors.hpp"
#include "throughsim/generators.hpp"
#include "throughsim/io.hpp"
#include "throughsim/oracle.hpp"

using namespace throughsim;

namespace {

Instance sample_instance() {
	Instance inst;
	inst.machines = 2;
	inst.epsilon = Rational(1, 2);
	Job a;
	a.id = 0;
	a.release = Rational(0);
	a.deadline = Rational(3);
	a.weight = Rational(7, 3);
	a.proc = {ProcTime::of(Rational(2)), ProcTime::inf()};
	Job b;
	b.id = 1;
	b.release = Rational(1, 2);
	b.deadline = Rational(4);
	b.weight = Rational(1);
	b.proc = {ProcTime::of(Rational(7, 5)), ProcTime::of(Rational(2))};
	inst.jobs = {a, b};
	return inst;
}

}

TEST_CASE("instance serialization round-trips byte for byte") {
	Instance inst = sample_instance();
	std::string text = emit_instance(inst);
	Instance back = parse_instance(text);
	CHECK(emit_instance(back) == text);
	CHECK(back.machines == 2);
	CHECK(back.epsilon == Rational(1, 2));
	REQUIRE(back.jobs.size() == 2);
	CHECK(back.jobs[0].weight == Rational(7, 3));
	CHECK(!back.jobs[0].proc[1].finite());
	CHECK(back.jobs[1].proc[0].value() == Rational(7, 5));
}

TEST_CASE("parser sorts jobs by id") {
	std::string text = R"({
  "machines": 1,
  "epsilon": "1",
  "jobs": [
    {"id": 1, "r": "0", "d": "4", "w": "1", "p": ["1"]},
    {"id": 0, "r": "0", "d": "4", "w": "2", "p": ["1"]}
  ]
})";
	Instance inst = parse_instance(text);
	CHECK(inst.jobs[0].id == 0);
	CHECK(inst.jobs[0].weight == Rational(2));
	CHECK(inst.jobs[1].id == 1);
}

TEST_CASE("parser rejects malformed input") {
	CHECK_THROWS_AS((void)parse_instance("not json"), Error);
	CHECK_THROWS_AS((void)parse_instance("[]"), Error);
	CHECK_THROWS_AS((void)parse_instance(R"({"epsilon": "1", "jobs": []})"), Error);
	CHECK_THROWS_AS((void)parse_instance(R"({"machines": 1, "epsilon": 0.5, "jobs": []})"), Error);
	CHECK_THROWS_AS((void)parse_instance(R"({"machines": 1, "epsilon": "1/2"})"), Error);
	CHECK_THROWS_AS((void)parse_instance(
			R"({"machines": 1, "epsilon": "1/2", "jobs": [{"id": 0}]})"), Error);
	CHECK_THROWS_AS((void)parse_instance(
			R"({"machines": 1, "epsilon": "1/2",
			    "jobs": [{"id": 0, "r": "0", "d": "3", "w": "1", "p": [2]}]})"), Error);
}

TEST_CASE("outcome serialization round-trips byte for byte") {
	Instance inst = sample_instance();
	Outcome out = simulate(inst, AdmissionPolicy::two_threshold(inst.epsilon));
	std::string text = emit_outcome(out);
	Outcome back = parse_outcome(text);
	CHECK(emit_outcome(back) == text);
	CHECK_THROWS_AS((void)parse_outcome("{}"), Error);  // missing weights
	CHECK_THROWS_AS((void)parse_outcome("null"), Error);
}

TEST_CASE("trace csv freezes the schedule") {
	Instance inst;
	inst.machines = 1;
	inst.epsilon = Rational(1);
	Job a;
	a.id = 0;
	a.release = Rational(0);
	a.deadline = Rational(4);
	a.weight = Rational(1);
	a.proc = {ProcTime::of(Rational(1))};
	Job b = a;
	b.id = 1;
	inst.jobs = {a, b};
	Outcome out = simulate(inst, AdmissionPolicy::two_threshold(inst.epsilon));
	CHECK(emit_trace_csv(out) == "machine,job,start,end\n0,0,0,1\n0,1,1,2\n");
}

TEST_CASE("oracle result serialization") {
	Instance inst = sample_instance();
	OracleResult res = optimal_nonmigratory(inst);
	std::string text = emit_oracle_result(res);
	CHECK(text.find("\"optimum\"") != std::string::npos);
	CHECK(text.find("\"assignment\"") != std::string::npos);
	CHECK(text.find("\"perMachine\"") != std::string::npos);
	CHECK(text.back() == '\n');
}

TEST_CASE("file helpers") {
	namespace fs = std::filesystem;
	fs::path path = fs::temp_directory_path() / "throughsim_io_test.txt";
	write_file(path.string(), "payload\n");
	CHECK(read_file(path.string()) == "payload\n");
	std::remove(path.string().c_str());
	CHECK_THROWS_AS((void)read_file(path.string()), Error);
	CHECK_THROWS_AS(write_file((path / "nope" / "x").string(), "y"), Error);
}
