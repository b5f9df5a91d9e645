// bettilab: Monte Carlo laboratory for Betti-number limit statistics of
// random clique and Cech complexes.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <memory>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>
#include <omp.h>

#include "bettilab/experiment.hpp"

namespace {

using bettilab::ExperimentConfig;

// CLI11 writes a bound variable only when its flag appears, so parsing the
// same argv twice -- once to find --config, once on top of the file-loaded
// config -- gives file values with explicit flags winning.
std::unique_ptr<CLI::App> make_app(ExperimentConfig& cfg, std::string& config_path,
                                   std::string& chosen) {
	auto app = std::make_unique<CLI::App>("bettilab " + std::string(bettilab::bettilab_version));
	app->require_subcommand(1);

	auto add_common = [&](CLI::App* cmd) {
		cmd->add_option("--config", config_path, "JSON config; explicit flags override its fields");
		cmd->add_option("--seed", cfg.master_seed, "master seed");
		cmd->add_option("--trials", cfg.trials, "number of Monte Carlo trials");
		cmd->add_option("--k", cfg.k, "target Betti degree");
		cmd->add_option("--delta", cfg.delta, "regime slack delta");
		cmd->add_option("--out-csv", cfg.out_csv, "trials CSV path");
		cmd->add_option("--out-json", cfg.out_json, "summary JSON path (default: stdout)");
		cmd->callback([cmd, &chosen] { chosen = cmd->get_name(); });
	};

	auto* er = app->add_subcommand("er-sim", "Erdos-Renyi clique complex trials");
	add_common(er);
	er->add_option("--n", cfg.n, "vertex count");
	er->add_option("--p", cfg.p, "edge probability");
	er->add_flag("--betti,!--no-betti", cfg.betti, "compute beta_k per trial");
	er->add_flag("--full-homology", cfg.full_homology, "compute every beta_i per trial");
	er->add_option("--c-const", cfg.c_const, "Stein rate constant c_k");

	auto* cech = app->add_subcommand("cech-sim", "random Cech complex trials");
	add_common(cech);
	cech->add_option("--n", cfg.n, "sample size or Poisson intensity");
	cech->add_option("--r", cfg.r, "ball radius r");
	cech->add_option("--d", cfg.d, "ambient dimension");
	cech->add_flag("--poissonized", cfg.poissonized, "N ~ Poisson(n) points");
	cech->add_option("--m-override", cfg.m_override, "truncation order override");
	cech->add_flag("--nerve-check,!--no-nerve-check", cfg.nerve_check,
	               "compute beta_d per trial");

	auto* increments = app->add_subcommand("increments", "de-Poissonization increment statistics");
	add_common(increments);
	increments->add_option("--n", cfg.n, "coupling center n");
	increments->add_option("--r", cfg.r, "ball radius r");
	increments->add_option("--d", cfg.d, "ambient dimension");
	increments->add_option("--gamma", cfg.gamma, "window exponent in (1/2, 1]");
	increments->add_option("--q-offsets", cfg.q_offsets, "window offsets in [-1, 1]")
	    ->delimiter(',');

	auto* mecke = app->add_subcommand("mecke", "Mecke formula self-test");
	add_common(mecke);
	mecke->add_option("--lambda", cfg.lambda, "Poisson intensity");
	mecke->add_option("--j", cfg.j, "subset size");
	mecke->add_option("--h-spec", cfg.h_spec, "h spec: zero | count | isolated-component");
	mecke->add_option("--r", cfg.r, "ball radius r");
	mecke->add_option("--d", cfg.d, "ambient dimension");

	auto* mu = app->add_subcommand("mu", "mu constant estimation / Poisson mean scaling");
	add_common(mu);
	mu->add_option("--n", cfg.n, "Poisson intensity (scaling mode)");
	mu->add_option("--r", cfg.r, "ball radius for the S_k trials");
	mu->add_option("--d", cfg.d, "ambient dimension");
	mu->add_option("--i", cfg.mu_i, "component order i (default k+2)");
	mu->add_option("--j", cfg.mu_j, "component Betti value j");
	mu->add_option("--mu-r", cfg.mu_r, "radius for the mu estimator");
	mu->add_option("--mu-trials", cfg.mu_trials, "trials for the mu estimator");
	mu->add_flag("--poissonized", cfg.poissonized,
	             "also run S_k trials and compare the two estimators");

	auto* formula = app->add_subcommand("formula", "closed-form moment evaluation, no trials");
	add_common(formula);
	formula->add_option("--n", cfg.n, "vertex count");
	formula->add_option("--p", cfg.p, "edge probability");
	formula->add_option("--p-exact", cfg.p_exact, "exact rational p, e.g. 1/2");
	formula->add_option("--r", cfg.r, "radius for the tail bound");
	formula->add_option("--d", cfg.d, "ambient dimension");
	formula->add_option("--cov-max-dim", cfg.cov_max_dim, "covariance table extent");
	formula->add_option("--c-const", cfg.c_const, "Stein rate constant c_k");

	auto* oracle = app->add_subcommand("oracle", "exhaustive enumeration oracle (n <= 5)");
	add_common(oracle);
	oracle->add_option("--n", cfg.n, "vertex count (<= 5)");
	oracle->add_option("--p-exact", cfg.p_exact, "exact rational p, e.g. 1/2");

	return app;
}

}  // namespace

int main(int argc, char** argv) {
	// worker count only; results are independent of it
	if (const char* threads = std::getenv("BETTILAB_THREADS")) {
		const int count = std::atoi(threads);
		if (count > 0) omp_set_num_threads(count);
	}

	ExperimentConfig scout_cfg;
	std::string config_path, chosen;
	{
		auto scout = make_app(scout_cfg, config_path, chosen);
		try {
			scout->parse(argc, argv);
		} catch (const CLI::ParseError& e) {
			return scout->exit(e);
		}
	}

	try {
		ExperimentConfig cfg;
		if (!config_path.empty()) {
			std::ifstream in(config_path);
			if (!in) throw std::runtime_error("cannot open config " + config_path);
			cfg = bettilab::config_from_json(nlohmann::json::parse(in));
		}
		std::string ignored_path, ignored_chosen;
		auto app = make_app(cfg, ignored_path, ignored_chosen);
		app->parse(argc, argv);

		if (chosen == "er-sim") cfg.model = "er", cfg.battery = "sim";
		else if (chosen == "cech-sim") cfg.model = "cech", cfg.battery = "sim";
		else if (chosen == "increments") cfg.model = "cech", cfg.battery = "increments";
		else if (chosen == "mecke") cfg.model = "cech", cfg.battery = "mecke";
		else if (chosen == "mu") cfg.model = "cech", cfg.battery = "mu";
		else if (chosen == "formula") cfg.model = "formula", cfg.battery = "sim";
		else if (chosen == "oracle") cfg.model = "oracle", cfg.battery = "sim";
		return bettilab::run_and_emit(cfg);
	} catch (const std::exception& e) {
		nlohmann::json err;
		err["error"] = e.what();
		std::fputs((err.dump() + "\n").c_str(), stderr);
		return 1;
	}
}
