#include <cstdlib>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "throughsim/checks.hpp"
#include "throughsim/engine.hpp"
#include "throughsim/errors.hpp"
#include "throughsim/generators.hpp"
#include "throughsim/harness.hpp"
#include "throughsim/io.hpp"
#include "throughsim/oracle.hpp"

namespace {

using namespace throughsim;

void put(const std::string& path, const std::string& content) {
	if (path.empty())
		std::cout << content;
	else
		write_file(path, content);
}

int env_cap() {
	const char* v = std::getenv("SCHED_ORACLE_CAP");
	if (!v) return kDefaultOracleCap;
	char* end = nullptr;
	long cap = std::strtol(v, &end, 10);
	if (end == v || *end != '\0' || cap < 1)
		throw Error(ErrorCode::bad_spec, "SCHED_ORACLE_CAP must be a positive integer");
	return static_cast<int>(cap);
}

int pick_cap(int flag) { return flag >= 1 ? flag : env_cap(); }

RangeSpec parse_range(const std::string& text) {
	auto colon = text.find(':');
	if (colon == std::string::npos)
		throw Error(ErrorCode::bad_spec, "range must look like lo:hi, got " + text);
	return {Rational::parse(text.substr(0, colon)), Rational::parse(text.substr(colon + 1))};
}

Instance load_instance(const std::string& path) {
	return parse_instance(read_file(path));
}

int usage_code(ErrorCode code) {
	switch (code) {
	case ErrorCode::parse_error:
	case ErrorCode::bad_spec:
	case ErrorCode::bad_slack:
	case ErrorCode::not_eligible:
	case ErrorCode::invalid_instance:
	case ErrorCode::too_large:
		return 2;
	}
	return 1;
}

}

int main(int argc, char** argv) {
	CLI::App app{"exact event-driven scheduling testbed"};
	app.require_subcommand(1);
	std::function<int()> run;

	// validate
	auto* validate = app.add_subcommand("validate", "check an instance file against the model rules");
	{
		auto path = std::make_shared<std::string>();
		validate->add_option("instance", *path, "instance JSON file")->required();
		validate->callback([path, &run] {
			run = [path] {
				ValidationReport report = validate_instance(load_instance(*path));
				if (!report.ok()) {
					std::cerr << report.str();
					return 1;
				}
				std::cout << "ok\n";
				return 0;
			};
		});
	}

	// gen
	auto* gen = app.add_subcommand("gen", "generate an instance");
	{
		struct GenCfg {
			std::string family;
			std::string eps;
			std::string gamma;
			std::string delta;
			int n = -1;
			int m = 1;
			std::uint64_t seed = 0;
			std::string proc = "1:8";
			std::string weight = "1:16";
			std::string stretch = "1:3";
			std::string out;
		};
		auto cfg = std::make_shared<GenCfg>();
		gen->add_option("family", cfg->family, "chain, pair, or random")->required()
				->check(CLI::IsMember({"chain", "pair", "random"}));
		gen->add_option("--eps", cfg->eps, "slack parameter, a rational like 1/2")->required();
		gen->add_option("--gamma", cfg->gamma, "density threshold (default: eps)");
		gen->add_option("--delta", cfg->delta, "perturbation (default: family-specific safe value)");
		gen->add_option("-n", cfg->n, "chain links past job 0, or random job count");
		gen->add_option("-m", cfg->m, "machine count (random family)");
		gen->add_option("--seed", cfg->seed, "random family seed");
		gen->add_option("--proc", cfg->proc, "processing-time range lo:hi (random family)");
		gen->add_option("--weight", cfg->weight, "weight range lo:hi (random family)");
		gen->add_option("--stretch", cfg->stretch, "deadline stretch range lo:hi (random family)");
		gen->add_option("-o,--out", cfg->out, "output file (default: stdout)");
		gen->callback([cfg, &run] {
			run = [cfg] {
				Rational eps = Rational::parse(cfg->eps);
				Rational gamma = cfg->gamma.empty() ? eps : Rational::parse(cfg->gamma);
				Instance inst;
				if (cfg->family == "chain") {
					Rational delta = cfg->delta.empty() ? default_delta(eps, gamma)
							: Rational::parse(cfg->delta);
					inst = gen_chain({eps, gamma, delta, cfg->n < 0 ? 4 : cfg->n});
				} else if (cfg->family == "pair") {
					Rational delta = cfg->delta.empty() ? default_delta(eps, gamma)
							: Rational::parse(cfg->delta);
					inst = gen_pair({eps, gamma, delta});
				} else {
					RandomSpec spec;
					spec.seed = cfg->seed;
					spec.n = cfg->n < 0 ? 8 : cfg->n;
					spec.m = cfg->m;
					spec.eps = eps;
					spec.proc = parse_range(cfg->proc);
					spec.weight = parse_range(cfg->weight);
					spec.stretch = parse_range(cfg->stretch);
					inst = gen_random(spec);
				}
				put(cfg->out, emit_instance(inst));
				return 0;
			};
		});
	}

	// simulate
	auto* sim = app.add_subcommand("simulate", "run one policy over one instance");
	{
		struct SimCfg {
			std::string path;
			std::string policy = "two-threshold";
			std::string trace;
			std::string format = "json";
			std::string out;
		};
		auto cfg = std::make_shared<SimCfg>();
		sim->add_option("instance", cfg->path, "instance JSON file")->required();
		sim->add_option("--policy", cfg->policy, "two-threshold or single-threshold:<gamma>");
		sim->add_option("--trace", cfg->trace, "also write the schedule as CSV to this file");
		sim->add_option("--format", cfg->format, "json (outcome) or csv (schedule)")
				->check(CLI::IsMember({"json", "csv"}));
		sim->add_option("-o,--out", cfg->out, "output file (default: stdout)");
		sim->callback([cfg, &run] {
			run = [cfg] {
				Instance inst = load_instance(cfg->path);
				AdmissionPolicy policy = AdmissionPolicy::from_spec(cfg->policy, inst.epsilon);
				Outcome out = simulate(inst, policy);
				if (!cfg->trace.empty()) write_file(cfg->trace, emit_trace_csv(out));
				put(cfg->out, cfg->format == "csv" ? emit_trace_csv(out) : emit_outcome(out));
				return 0;
			};
		});
	}

	// oracle
	auto* oracle = app.add_subcommand("oracle", "exact offline optimum for one instance");
	{
		struct OracleCfg {
			std::string path;
			int cap = -1;
			std::string out;
		};
		auto cfg = std::make_shared<OracleCfg>();
		oracle->add_option("instance", cfg->path, "instance JSON file")->required();
		oracle->add_option("--cap", cfg->cap, "job-count cap (default: SCHED_ORACLE_CAP or 12)");
		oracle->add_option("-o,--out", cfg->out, "output file (default: stdout)");
		oracle->callback([cfg, &run] {
			run = [cfg] {
				OracleResult res = optimal_nonmigratory(load_instance(cfg->path), pick_cap(cfg->cap));
				put(cfg->out, emit_oracle_result(res));
				return 0;
			};
		});
	}

	// ratio
	auto* ratio = app.add_subcommand("ratio", "optimum over finished weight for one policy");
	{
		struct RatioCfg {
			std::string path;
			std::string policy = "two-threshold";
			int cap = -1;
			std::string out;
		};
		auto cfg = std::make_shared<RatioCfg>();
		ratio->add_option("instance", cfg->path, "instance JSON file")->required();
		ratio->add_option("--policy", cfg->policy, "two-threshold or single-threshold:<gamma>");
		ratio->add_option("--cap", cfg->cap, "job-count cap (default: SCHED_ORACLE_CAP or 12)");
		ratio->add_option("-o,--out", cfg->out, "output file (default: stdout)");
		ratio->callback([cfg, &run] {
			run = [cfg] {
				Instance inst = load_instance(cfg->path);
				AdmissionPolicy policy = AdmissionPolicy::from_spec(cfg->policy, inst.epsilon);
				RatioResult res = competitive_ratio(inst, policy, pick_cap(cfg->cap));
				put(cfg->out, res.str() + "\n");
				return 0;
			};
		});
	}

	// sweep
	auto* sweep = app.add_subcommand("sweep", "measure policies across a parameter grid");
	{
		struct SweepCfg {
			std::string family = "pair";
			std::vector<std::string> eps;
			std::string gamma;
			std::string delta;
			int n = 4;
			int m = 1;
			std::vector<std::uint64_t> seeds{0};
			std::vector<std::string> policies;
			bool no_oracle = false;
			int cap = -1;
			std::string out;
		};
		auto cfg = std::make_shared<SweepCfg>();
		sweep->add_option("--family", cfg->family, "chain, pair, or random")
				->check(CLI::IsMember({"chain", "pair", "random"}));
		sweep->add_option("--eps", cfg->eps, "comma-separated epsilon grid")
				->required()->delimiter(',');
		sweep->add_option("--gamma", cfg->gamma, "fixed gamma (default: gamma = eps per point)");
		sweep->add_option("--delta", cfg->delta, "fixed delta (default: per-point safe value)");
		sweep->add_option("-n", cfg->n, "chain links past job 0, or random job count");
		sweep->add_option("-m", cfg->m, "machine count (random family)");
		sweep->add_option("--seeds", cfg->seeds, "comma-separated seeds (random family)")
				->delimiter(',');
		sweep->add_option("--policy", cfg->policies,
				"policy spec, repeatable (default: two-threshold and single-threshold)");
		sweep->add_flag("--no-oracle", cfg->no_oracle, "skip the offline optimum");
		sweep->add_option("--cap", cfg->cap, "oracle job-count cap");
		sweep->add_option("-o,--out", cfg->out, "output CSV file (default: stdout)");
		sweep->callback([cfg, &run] {
			run = [cfg] {
				SweepSpec spec;
				spec.family = parse_family(cfg->family);
				for (const auto& e : cfg->eps) spec.eps_grid.push_back(Rational::parse(e));
				if (!cfg->gamma.empty()) spec.gamma = Rational::parse(cfg->gamma);
				if (!cfg->delta.empty()) spec.delta = Rational::parse(cfg->delta);
				spec.n = cfg->n;
				spec.m = cfg->m;
				spec.seeds = cfg->seeds;
				if (!cfg->policies.empty()) spec.policies = cfg->policies;
				spec.with_oracle = !cfg->no_oracle;
				spec.oracle_cap = pick_cap(cfg->cap);
				put(cfg->out, sweep_csv(run_sweep(spec)));
				return 0;
			};
		});
	}

	// check
	auto* check = app.add_subcommand("check", "run the full invariant battery");
	{
		struct CheckCfg {
			std::uint64_t seed = CheckOptions{}.seed;
			int instances = CheckOptions{}.random_instances;
			long triples = CheckOptions{}.algebra_triples;
			int cap = -1;
		};
		auto cfg = std::make_shared<CheckCfg>();
		check->add_option("--seed", cfg->seed, "master seed for the random workload");
		check->add_option("--instances", cfg->instances, "random instance count");
		check->add_option("--triples", cfg->triples, "algebra triple count");
		check->add_option("--cap", cfg->cap, "oracle job-count cap");
		check->callback([cfg, &run] {
			run = [cfg] {
				CheckOptions opts;
				opts.seed = cfg->seed;
				opts.random_instances = cfg->instances;
				opts.algebra_triples = cfg->triples;
				opts.oracle_cap = pick_cap(cfg->cap);
				bool all = true;
				for (const CheckResult& res : run_all_checks(opts)) {
					all = all && res.pass;
					std::cout << (res.pass ? "PASS" : "FAIL") << ' ' << res.name
							<< ": " << res.detail << '\n';
				}
				return all ? 0 : 1;
			};
		});
	}

	try {
		app.parse(argc, argv);
	} catch (const CLI::ParseError& e) {
		int rc = app.exit(e);
		return rc == 0 ? 0 : 2;
	}
	try {
		return run();
	} catch (const Error& e) {
		std::cerr << "error: " << e.what() << '\n';
		return usage_code(e.code());
	} catch (const std::exception& e) {
		std::cerr << "error: " << e.what() << '\n';
		return 1;
	}
}
