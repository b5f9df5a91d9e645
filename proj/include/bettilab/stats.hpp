#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace bettilab {

struct TrialRecord {
	std::int64_t trial_index = 0;
	std::uint64_t seed = 0;
	std::map<std::string, double> stats;
	double wall_seconds = 0.0;  // diagnostic only, never emitted
};

// Runs `fn(seed, stats)` for each trial on the OpenMP pool.  Records come
// back ordered by trial index whatever the execution order; a trial that
// throws aborts the battery with its index attached.
using TrialFn = std::function<void(std::uint64_t seed, std::map<std::string, double>& stats)>;
std::vector<TrialRecord> run_trials(std::int64_t trials, std::uint64_t master_seed,
                                    const TrialFn& fn);

std::vector<double> extract(const std::vector<TrialRecord>& records, const std::string& name);

struct SummaryStats {
	std::int64_t count = 0;
	double mean = 0.0;
	double variance = 0.0;  // unbiased
	double skewness = 0.0;
	double ex_kurtosis = 0.0;
	double se_mean = 0.0;
	double se_variance = 0.0;  // jackknife
	double se_skewness = 0.0;  // jackknife
	double se_kurtosis = 0.0;  // jackknife
};

SummaryStats summarize(const std::vector<double>& values);  // count >= 2

std::vector<double> standardize(const std::vector<double>& values, double center, double scale);

// sup_t |F_emp(t) - Phi(t)|
double ks_normal(const std::vector<double>& samples);

// integral |F_emp - Phi| dt, exact piecewise between sorted samples with
// closed-form Gaussian tails
double wasserstein1_normal(const std::vector<double>& samples);

struct LinFit {
	double slope = 0.0, intercept = 0.0, r2 = 0.0;
};
LinFit rate_regression(const std::vector<std::pair<double, double>>& points);

double normal_cdf(double t);
double normal_quantile(double q);

// bootstrap standard error of an arbitrary sample statistic
double bootstrap_se(const std::vector<double>& samples,
                    const std::function<double(const std::vector<double>&)>& statistic,
                    int resamples, std::uint64_t seed);

}  // namespace bettilab
