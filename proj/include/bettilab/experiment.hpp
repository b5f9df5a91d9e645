#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace bettilab {

inline constexpr const char* bettilab_version = "0.1.0";

// One flat config drives every battery.  Serialization is canonical
// (alphabetical keys, every field present); parsing rejects unknown fields.
struct ExperimentConfig {
	std::string model = "er";     // er | cech | oracle | formula
	std::string battery = "sim";  // cech: sim | increments | mecke | mu
	std::int64_t n = 100;
	double p = 0.1;
	std::string p_exact;  // "num/den" for the oracle and exact formula paths
	double r = 0.1;
	int d = 2;
	int k = 1;
	double delta = 0.25;
	std::int64_t trials = 100;
	double gamma = 0.75;
	int m_override = -1;    // -1: use truncation_order(delta, d)
	double c_const = 1.0;   // the paper's unspecified c_k
	std::uint64_t master_seed = 1;
	bool poissonized = false;
	double lambda = 200.0;
	int j = 2;
	std::string h_spec = "isolated-component";
	int mu_i = -1;  // -1: k+2
	int mu_j = 1;
	double mu_r = 0.05;
	std::int64_t mu_trials = 100000;
	std::vector<double> q_offsets = {-1.0, 0.0, 1.0};
	bool betti = true;           // compute beta_k per trial (er)
	bool full_homology = false;  // compute every beta_i per trial (er)
	bool nerve_check = true;     // compute beta_d per trial (cech)
	int cov_max_dim = 3;         // formula: covariance table extent
	std::string out_csv;
	std::string out_json;

	bool operator==(const ExperimentConfig&) const = default;
};

nlohmann::json config_to_json(const ExperimentConfig& config);
ExperimentConfig config_from_json(const nlohmann::json& doc);  // unknown fields rejected

struct RunArtifacts {
	std::string csv;  // empty for trial-free models
	nlohmann::json summary;
};

// Executes the configured battery; deterministic byte output given config.
RunArtifacts run_experiment(const ExperimentConfig& config);

// run_experiment + file emission to config.out_csv / config.out_json
int run_and_emit(const ExperimentConfig& config);

}  // namespace bettilab
