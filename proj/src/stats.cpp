#include "bettilab/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "bettilab/rng.hpp"

namespace bettilab {

std::vector<TrialRecord> run_trials(std::int64_t trials, std::uint64_t master_seed,
                                    const TrialFn& fn) {
	if (trials < 1) throw std::invalid_argument("run_trials: trials must be >= 1");
	std::vector<TrialRecord> records(trials);
	bool failed = false;
	std::string failure;
#pragma omp parallel for schedule(dynamic, 1)
	for (std::int64_t t = 0; t < trials; ++t) {
		bool skip;
#pragma omp atomic read
		skip = failed;
		if (skip) continue;
		auto& rec = records[t];
		rec.trial_index = t;
		rec.seed = trial_seed(master_seed, static_cast<std::uint64_t>(t));
		try {
			rec.stats.clear();
			fn(rec.seed, rec.stats);
		} catch (const std::exception& e) {
#pragma omp critical
			{
				if (!failed) failure = "trial " + std::to_string(t) + ": " + e.what();
				failed = true;
			}
		}
	}
	if (failed) throw std::runtime_error(failure);
	return records;
}

std::vector<double> extract(const std::vector<TrialRecord>& records, const std::string& name) {
	std::vector<double> out;
	out.reserve(records.size());
	for (const auto& rec : records) {
		const auto it = rec.stats.find(name);
		if (it == rec.stats.end()) throw std::out_of_range("extract: no statistic named " + name);
		out.push_back(it->second);
	}
	return out;
}

namespace {

struct Moments {
	double mean, m2, m3, m4;  // central power sums / n
};

double skew_of(const Moments& m) {
	return m.m2 > 0.0 ? m.m3 / std::pow(m.m2, 1.5) : 0.0;
}
double kurt_of(const Moments& m) {
	return m.m2 > 0.0 ? m.m4 / (m.m2 * m.m2) - 3.0 : 0.0;
}

}  // namespace

SummaryStats summarize(const std::vector<double>& values) {
	const std::int64_t n = static_cast<std::int64_t>(values.size());
	if (n < 2) throw std::invalid_argument("summarize: need at least 2 values");
	SummaryStats s;
	s.count = n;
	double mean = 0.0;
	for (double v : values) mean += v;
	mean /= static_cast<double>(n);
	// centered power sums
	double c2 = 0.0, c3 = 0.0, c4 = 0.0;
	for (double v : values) {
		const double d = v - mean;
		c2 += d * d;
		c3 += d * d * d;
		c4 += d * d * d * d;
	}
	s.mean = mean;
	s.variance = c2 / static_cast<double>(n - 1);
	const Moments full{mean, c2 / n, c3 / n, c4 / n};
	s.skewness = skew_of(full);
	s.ex_kurtosis = kurt_of(full);
	s.se_mean = std::sqrt(s.variance / static_cast<double>(n));

	// jackknife over leave-one-out statistics, O(1) per deletion from the sums
	double jv = 0.0, js = 0.0, jk = 0.0;     // sums of loo statistics
	double jv2 = 0.0, js2 = 0.0, jk2 = 0.0;  // sums of squares
	const double nn = static_cast<double>(n - 1);
	for (double v : values) {
		const double d = v - mean;
		const double s1 = -d;  // sum of (x - mean) over the loo set
		const double s2 = c2 - d * d;
		const double s3 = c3 - d * d * d;
		const double s4 = c4 - d * d * d * d;
		const double a = s1 / nn;  // loo mean shift
		const double m2 = (s2 - nn * a * a) / nn;
		const double m3 = (s3 - 3.0 * a * s2 + 2.0 * nn * a * a * a) / nn;
		const double m4 = (s4 - 4.0 * a * s3 + 6.0 * a * a * s2 - 3.0 * nn * a * a * a * a) / nn;
		const double loo_var = m2 * nn / (nn - 1.0);
		const Moments loo{mean + a, m2, m3, m4};
		const double loo_skew = skew_of(loo);
		const double loo_kurt = kurt_of(loo);
		jv += loo_var;
		jv2 += loo_var * loo_var;
		js += loo_skew;
		js2 += loo_skew * loo_skew;
		jk += loo_kurt;
		jk2 += loo_kurt * loo_kurt;
	}
	const double scale = nn / static_cast<double>(n);
	auto se = [&](double sum, double sum2) {
		const double spread = std::max(0.0, sum2 - sum * sum / static_cast<double>(n));
		return std::sqrt(scale * spread);
	};
	s.se_variance = se(jv, jv2);
	s.se_skewness = se(js, js2);
	s.se_kurtosis = se(jk, jk2);
	return s;
}

std::vector<double> standardize(const std::vector<double>& values, double center, double scale) {
	if (!(scale > 0.0)) throw std::invalid_argument("standardize: scale must be positive");
	std::vector<double> out;
	out.reserve(values.size());
	for (double v : values) out.push_back((v - center) / scale);
	return out;
}

double normal_cdf(double t) { return 0.5 * std::erfc(-t * 0.7071067811865475244); }

namespace {

double normal_pdf(double t) { return 0.3989422804014326779 * std::exp(-0.5 * t * t); }

}  // namespace

// Acklam's rational approximation refined by one Halley step.
double normal_quantile(double q) {
	if (!(q > 0.0) || !(q < 1.0)) throw std::domain_error("normal_quantile: q must be in (0,1)");
	static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
	                           -2.759285104469687e+02, 1.383577518672690e+02,
	                           -3.066479806614716e+01, 2.506628277459239e+00};
	static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
	                           -1.556989798598866e+02, 6.680131188771972e+01,
	                           -1.328068155288572e+01};
	static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
	                           -2.400758277161838e+00, -2.549732539343734e+00,
	                           4.374664141464968e+00,  2.938163982698783e+00};
	static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
	                           2.445134137142996e+00, 3.754408661907416e+00};
	const double p_low = 0.02425;
	double x;
	if (q < p_low) {
		const double u = std::sqrt(-2.0 * std::log(q));
		x = (((((c[0] * u + c[1]) * u + c[2]) * u + c[3]) * u + c[4]) * u + c[5]) /
		    ((((d[0] * u + d[1]) * u + d[2]) * u + d[3]) * u + 1.0);
	} else if (q <= 1.0 - p_low) {
		const double u = q - 0.5;
		const double t = u * u;
		x = (((((a[0] * t + a[1]) * t + a[2]) * t + a[3]) * t + a[4]) * t + a[5]) * u /
		    (((((b[0] * t + b[1]) * t + b[2]) * t + b[3]) * t + b[4]) * t + 1.0);
	} else {
		const double u = std::sqrt(-2.0 * std::log(1.0 - q));
		x = -(((((c[0] * u + c[1]) * u + c[2]) * u + c[3]) * u + c[4]) * u + c[5]) /
		    ((((d[0] * u + d[1]) * u + d[2]) * u + d[3]) * u + 1.0);
	}
	const double e = normal_cdf(x) - q;
	const double f = e * 2.506628274631000502 * std::exp(0.5 * x * x);
	return x - f / (1.0 + 0.5 * x * f);
}

double ks_normal(const std::vector<double>& samples) {
	if (samples.empty()) throw std::invalid_argument("ks_normal: empty input");
	std::vector<double> sorted(samples);
	std::sort(sorted.begin(), sorted.end());
	const double n = static_cast<double>(sorted.size());
	double sup = 0.0;
	for (std::size_t i = 0; i < sorted.size(); ++i) {
		const double phi = normal_cdf(sorted[i]);
		sup = std::max(sup, (static_cast<double>(i) + 1.0) / n - phi);
		sup = std::max(sup, phi - static_cast<double>(i) / n);
	}
	return sup;
}

namespace {

// antiderivative of Phi
double big_phi(double t) { return t * normal_cdf(t) + normal_pdf(t); }

// integral of |level - Phi(t)| over [a, b]
double segment_integral(double level, double a, double b) {
	if (b <= a) return 0.0;
	auto signed_part = [level](double lo, double hi) {
		return level * (hi - lo) - (big_phi(hi) - big_phi(lo));
	};
	if (level > 0.0 && level < 1.0) {
		const double cross = normal_quantile(level);
		if (cross > a && cross < b) {
			return std::fabs(signed_part(a, cross)) + std::fabs(signed_part(cross, b));
		}
	}
	return std::fabs(signed_part(a, b));
}

}  // namespace

double wasserstein1_normal(const std::vector<double>& samples) {
	if (samples.empty()) throw std::invalid_argument("wasserstein1_normal: empty input");
	std::vector<double> sorted(samples);
	std::sort(sorted.begin(), sorted.end());
	const double n = static_cast<double>(sorted.size());
	// below the smallest sample F_emp = 0, above the largest F_emp = 1
	double total = big_phi(sorted.front());
	total += normal_pdf(sorted.back()) - sorted.back() * (1.0 - normal_cdf(sorted.back()));
	for (std::size_t i = 0; i + 1 < sorted.size(); ++i) {
		total += segment_integral((static_cast<double>(i) + 1.0) / n, sorted[i], sorted[i + 1]);
	}
	return total;
}

LinFit rate_regression(const std::vector<std::pair<double, double>>& points) {
	if (points.size() < 3) throw std::invalid_argument("rate_regression: need at least 3 points");
	double sx = 0.0, sy = 0.0;
	for (const auto& [x, y] : points) {
		sx += x;
		sy += y;
	}
	const double n = static_cast<double>(points.size());
	const double mx = sx / n, my = sy / n;
	double sxx = 0.0, sxy = 0.0, syy = 0.0;
	for (const auto& [x, y] : points) {
		sxx += (x - mx) * (x - mx);
		sxy += (x - mx) * (y - my);
		syy += (y - my) * (y - my);
	}
	if (sxx <= 0.0) throw std::invalid_argument("rate_regression: degenerate x values");
	LinFit fit;
	fit.slope = sxy / sxx;
	fit.intercept = my - fit.slope * mx;
	fit.r2 = syy > 0.0 ? (sxy * sxy) / (sxx * syy) : 1.0;
	return fit;
}

double bootstrap_se(const std::vector<double>& samples,
                    const std::function<double(const std::vector<double>&)>& statistic,
                    int resamples, std::uint64_t seed) {
	if (samples.empty() || resamples < 2) throw std::invalid_argument("bootstrap_se: bad arguments");
	Rng rng(seed);
	const std::size_t n = samples.size();
	std::vector<double> stat_values(resamples);
	std::vector<double> resample(n);
	for (int b = 0; b < resamples; ++b) {
		for (std::size_t i = 0; i < n; ++i) resample[i] = samples[rng.below(n)];
		stat_values[b] = statistic(resample);
	}
	double mean = 0.0;
	for (double v : stat_values) mean += v;
	mean /= resamples;
	double var = 0.0;
	for (double v : stat_values) var += (v - mean) * (v - mean);
	return std::sqrt(var / (resamples - 1));
}

}  // namespace bettilab
