#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "bettilab/point_cloud.hpp"
#include "bettilab/rng.hpp"
#include "bettilab/simplicial_complex.hpp"

namespace bettilab {

enum class DensityKind { uniform_unit_cube };

struct DensitySpec {
	int d = 2;
	DensityKind kind = DensityKind::uniform_unit_cube;
	double supremum = 1.0;  // ||f||_inf

	std::vector<double> sample(Rng& rng) const;
};

struct GeomConfig {
	std::int64_t n = 0;  // sample size (i.i.d.) or intensity (Poisson)
	double r = 0.0;
	DensitySpec density;
	int k = 1;
	double delta = 0.25;
	bool poissonized = false;
	std::uint64_t seed = 0;

	int d() const { return density.d; }
};

// i.i.d. mode: exactly n points; Poisson mode: N ~ Poisson(n) points
PointCloud sample_points(const GeomConfig& config, Rng& rng);
PointCloud sample_points(const GeomConfig& config);

// Per-component record: s_k counts empty-(k+1)-simplex components (exactly
// k+2 vertices, component beta_k = 1); x[(i, j)] counts components on i
// vertices with component beta_k = j >= 1.  s_k == x[(k+2, 1)].
struct ComponentDecomposition {
	int k = 1;
	std::int64_t s_k = 0;
	std::map<std::pair<std::int64_t, std::int64_t>, std::int64_t> x;
	std::int64_t beta_k_total = 0;
	std::int64_t max_component_size = 0;
	std::int64_t num_components = 0;

	bool cap_ok() const;          // j <= C(i, k+1) on every entry
	std::uint64_t digest() const;  // FNV-1a over the sorted (i, j, count) triples
};

ComponentDecomposition component_decomposition(const SimplicialComplex& complex, int k);
ComponentDecomposition component_decomposition(const PointCloud& cloud, int k);

// S_k + sum_{i=k+3..m} sum_j j x[i,j]; requires m >= k+2
std::int64_t truncated_beta(const ComponentDecomposition& decomp, int k, std::int64_t m);

// m = floor(1 + 1/(delta d)), with a tolerant floor for decimal parameters
int truncation_order(double delta, int d);

// S = ceil(2/(d delta) + 1), tolerant ceiling
int tail_split_order(double delta, int d);

// (n^i / i!) i^(i-2) (f_sup r^d)^(i-1) C(i, k+1), log-space evaluation
double tail_contribution_bound(std::int64_t n, double r, int d, int i, int k, double f_sup);

struct MuEstimate {
	int i = 0, j = 0, k = 0, d = 0;
	double r_used = 0.0;
	std::int64_t trials = 0;
	std::int64_t successes = 0;
	double mu_hat = 0.0;
	double std_err = 0.0;
	bool degenerate = false;  // zero successes or impossible Betti value
};

// mu_hat = r^{-d(i-1)} P_hat[i i.i.d. points form a connected Cech complex
// with beta_k = j]
MuEstimate estimate_mu(int i, int j, int k, const DensitySpec& density, double r,
                       std::int64_t trials, std::uint64_t seed);

struct ScalingComparison {
	double lhs = 0.0, lhs_se = 0.0;  // n^{-(k+2)} r^{-d(k+1)} E_hat[S_k]
	double rhs = 0.0, rhs_se = 0.0;  // mu_hat(k+2, 1) / (k+2)!
	double mean_s_k = 0.0;
	std::int64_t trials = 0;
	MuEstimate mu;
};

ScalingComparison poisson_mean_scaling(const GeomConfig& config, std::int64_t trials,
                                       double mu_r, std::int64_t mu_trials);

enum class MeckeH { zero, count, isolated_component };
MeckeH parse_mecke_h(const std::string& name);

struct MeckeResult {
	double lhs = 0.0, lhs_se = 0.0;
	double rhs = 0.0, rhs_se = 0.0;
	std::int64_t trials = 0;
};

// Two-estimator test of the Poisson-process subset identity: lhs averages
// sum_{Y subset P} h(Y, P); rhs averages (lambda^j / j!) h(X_j, X_j u P).
MeckeResult mecke_selftest(double lambda, int j, MeckeH h, const DensitySpec& density, double r,
                           std::int64_t trials, std::uint64_t seed);

// (n r^d)^{-(k+1)/2} * truncated_beta of the cloud's Cech complex
double h_functional(const PointCloud& cloud, std::int64_t n, double r, int k, std::int64_t m);

struct IncrementStats {
	std::vector<std::int64_t> q_values;
	std::vector<double> mean_r;     // E_hat[R_q]
	std::vector<double> se_r;
	std::vector<double> mean_rr;    // E_hat[R_q R_q'] over pairs q < q'
	std::vector<double> se_rr;
	std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
	std::vector<double> mean_r2;    // E_hat[R_q^2]
	std::vector<double> se_r2;
	double max_r2_over_sqrt_n = 0.0;
	double mean_bound = 0.0;  // C(m,k+1) ((n+n^gamma) f_sup r^d)^{k+1} / sqrt((n r^d)^{k+1})
	std::int64_t trials = 0;
};

// Couples X_q subset X_{q+1} on one point stream per trial and evaluates the
// increments R_q = (H(X_{q+1}) - H(X_q)) of the truncated functional.
// q offsets are multipliers in [-1, 1]: q = round(n + offset * n^gamma).
IncrementStats increment_stats(const GeomConfig& config, double gamma,
                               const std::vector<double>& q_offsets, std::int64_t trials);

}  // namespace bettilab
