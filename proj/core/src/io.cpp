#include "throughsim/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "throughsim/errors.hpp"

namespace throughsim {

namespace {

using ordered_json = nlohmann::ordered_json;

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::parse_error, what); }

ordered_json parse_json(const std::string& text) {
	ordered_json j = ordered_json::parse(text, nullptr, false);
	if (j.is_discarded()) bad("malformed JSON");
	return j;
}

Rational rational_field(const ordered_json& j, const char* key) {
	if (!j.contains(key) || !j[key].is_string()) bad(std::string("missing rational field '") + key + "'");
	return Rational::parse(j[key].get<std::string>());
}

int int_field(const ordered_json& j, const char* key) {
	if (!j.contains(key) || !j[key].is_number_integer()) bad(std::string("missing integer field '") + key + "'");
	return j[key].get<int>();
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

}  // namespace

Instance parse_instance(const std::string& text) {
	const ordered_json j = parse_json(text);
	if (!j.is_object()) bad("instance must be a JSON object");
	Instance inst;
	inst.machines = int_field(j, "machines");
	inst.epsilon = rational_field(j, "epsilon");
	if (!j.contains("jobs") || !j["jobs"].is_array()) bad("missing 'jobs' array");
	for (const auto& each : j["jobs"]) {
		Job job;
		job.id = int_field(each, "id");
		job.release = rational_field(each, "r");
		job.deadline = rational_field(each, "d");
		job.weight = rational_field(each, "w");
		if (!each.contains("p") || !each["p"].is_array()) bad("job missing 'p' array");
		for (const auto& p : each["p"]) {
			if (!p.is_string()) bad("processing times must be strings");
			job.proc.push_back(ProcTime::parse(p.get<std::string>()));
		}
		inst.jobs.push_back(std::move(job));
	}
	std::sort(inst.jobs.begin(), inst.jobs.end(),
	          [](const Job& a, const Job& b) { return a.id < b.id; });
	return inst;
}

std::string emit_instance(const Instance& inst) {
	ordered_json j;
	j["machines"] = inst.machines;
	j["epsilon"] = inst.epsilon.str();
	j["jobs"] = ordered_json::array();
	for (const Job& job : inst.jobs) {
		ordered_json each;
		each["id"] = job.id;
		each["r"] = job.release.str();
		each["d"] = job.deadline.str();
		each["w"] = job.weight.str();
		ordered_json procs = ordered_json::array();
		for (const ProcTime& p : job.proc) procs.push_back(p.str());
		each["p"] = std::move(procs);
		j["jobs"].push_back(std::move(each));
	}
	return dump(j);
}

Outcome parse_outcome(const std::string& text) {
	const ordered_json j = parse_json(text);
	if (!j.is_object()) bad("outcome must be a JSON object");
	Outcome out;
	for (const auto& each : j.value("admissions", ordered_json::array())) {
		AdmissionRecord rec;
		rec.job = int_field(each, "job");
		rec.machine = int_field(each, "machine");
		rec.admit_time = rational_field(each, "a");
		rec.virtual_deadline = rational_field(each, "v");
		if (!each.contains("parent")) bad("admission missing 'parent'");
		if (!each["parent"].is_null()) rec.parent = each["parent"].get<int>();
		out.admissions.push_back(std::move(rec));
	}
	for (const auto& each : j.value("segments", ordered_json::array())) {
		ScheduleSegment seg;
		seg.machine = int_field(each, "machine");
		seg.job = int_field(each, "job");
		seg.start = rational_field(each, "start");
		seg.end = rational_field(each, "end");
		out.segments.push_back(std::move(seg));
	}
	auto ids = [&j](const char* key) {
		std::vector<int> v;
		for (const auto& each : j.value(key, ordered_json::array())) v.push_back(each.get<int>());
		return v;
	};
	out.finished = ids("finished");
	out.discarded = ids("discarded");
	out.never_admitted = ids("neverAdmitted");
	if (!j.contains("weights")) bad("outcome missing 'weights'");
	out.weights.admitted = rational_field(j["weights"], "admitted");
	out.weights.finished = rational_field(j["weights"], "finished");
	out.weights.discarded = rational_field(j["weights"], "discarded");
	return out;
}

std::string emit_outcome(const Outcome& out) {
	ordered_json j;
	j["admissions"] = ordered_json::array();
	for (const AdmissionRecord& r : out.admissions) {
		ordered_json each;
		each["job"] = r.job;
		each["machine"] = r.machine;
		each["a"] = r.admit_time.str();
		each["v"] = r.virtual_deadline.str();
		if (r.parent)
			each["parent"] = *r.parent;
		else
			each["parent"] = nullptr;
		j["admissions"].push_back(std::move(each));
	}
	j["segments"] = ordered_json::array();
	for (const ScheduleSegment& s : out.segments) {
		ordered_json each;
		each["machine"] = s.machine;
		each["job"] = s.job;
		each["start"] = s.start.str();
		each["end"] = s.end.str();
		j["segments"].push_back(std::move(each));
	}
	j["finished"] = out.finished;
	j["discarded"] = out.discarded;
	j["neverAdmitted"] = out.never_admitted;
	j["weights"] = {{"admitted", out.weights.admitted.str()},
	                {"finished", out.weights.finished.str()},
	                {"discarded", out.weights.discarded.str()}};
	return dump(j);
}

std::string emit_oracle_result(const OracleResult& result) {
	ordered_json j;
	j["optimum"] = result.optimum.str();
	ordered_json assignment = ordered_json::object();
	for (const auto& [job, machine] : result.assignment) assignment[std::to_string(job)] = machine;
	j["assignment"] = std::move(assignment);
	j["perMachine"] = result.per_machine;
	return dump(j);
}

std::string emit_trace_csv(const Outcome& out) {
	std::ostringstream os;
	os << "machine,job,start,end\n";
	for (const ScheduleSegment& s : out.segments)
		os << s.machine << "," << s.job << "," << s.start.str() << "," << s.end.str() << "\n";
	return os.str();
}

std::string read_file(const std::string& path) {
	std::ifstream in(path, std::ios::binary);
	if (!in) throw Error(ErrorCode::parse_error, "cannot read " + path);
	std::ostringstream os;
	os << in.rdbuf();
	return os.str();
}

void write_file(const std::string& path, const std::string& content) {
	std::ofstream outf(path, std::ios::binary);
	if (!outf) throw Error(ErrorCode::parse_error, "cannot write " + path);
	outf << content;
}

}  // namespace throughsim
