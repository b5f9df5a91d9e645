#include "bettilab/cech_model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "bettilab/cech.hpp"
#include "bettilab/homology.hpp"
#include "bettilab/miniball.hpp"
#include "bettilab/simplicial_complex.hpp"

namespace bettilab {

std::vector<double> DensitySpec::sample(Rng& rng) const {
	std::vector<double> p(d);
	for (int t = 0; t < d; ++t) p[t] = rng.uniform();
	return p;
}

PointCloud sample_points(const GeomConfig& config, Rng& rng) {
	if (config.n < 0) throw std::invalid_argument("sample_points: n must be >= 0");
	if (!(config.r > 0.0)) throw std::invalid_argument("sample_points: r must be positive");
	PointCloud cloud(config.d(), config.r);
	const std::int64_t count =
	    config.poissonized ? rng.poisson(static_cast<double>(config.n)) : config.n;
	cloud.coords.reserve(static_cast<std::size_t>(count) * config.d());
	for (std::int64_t i = 0; i < count; ++i) {
		const auto p = config.density.sample(rng);
		cloud.coords.insert(cloud.coords.end(), p.begin(), p.end());
	}
	return cloud;
}

PointCloud sample_points(const GeomConfig& config) {
	Rng rng(config.seed);
	return sample_points(config, rng);
}

bool ComponentDecomposition::cap_ok() const {
	for (const auto& [key, count] : x) {
		if (count == 0) continue;
		const auto [i, j] = key;
		// C(i, k+1) without overflow worries at component scale
		double cap = 1.0;
		for (std::int64_t t = 0; t < k + 1; ++t) cap = cap * static_cast<double>(i - t) / (t + 1);
		if (static_cast<double>(j) > cap + 0.5) return false;
	}
	return true;
}

std::uint64_t ComponentDecomposition::digest() const {
	std::uint64_t h = 1469598103934665603ULL;
	auto mix = [&h](std::uint64_t v) {
		for (int b = 0; b < 8; ++b) {
			h ^= (v >> (8 * b)) & 0xff;
			h *= 1099511628211ULL;
		}
	};
	mix(static_cast<std::uint64_t>(s_k));
	for (const auto& [key, count] : x) {
		mix(static_cast<std::uint64_t>(key.first));
		mix(static_cast<std::uint64_t>(key.second));
		mix(static_cast<std::uint64_t>(count));
	}
	return h;
}

namespace {

// components (by point index) of the distance-<=2r graph, ordered by
// smallest member
std::vector<std::vector<std::int32_t>> point_components(const PointCloud& cloud) {
	const std::int64_t n = cloud.size();
	const auto adj = geometric_adjacency(cloud, 2.0 * cloud.radius);
	std::vector<std::int32_t> parent(n);
	std::iota(parent.begin(), parent.end(), 0);
	auto find = [&parent](std::int32_t v) {
		while (parent[v] != v) {
			parent[v] = parent[parent[v]];
			v = parent[v];
		}
		return v;
	};
	for (std::int64_t i = 0; i < n; ++i) {
		for (std::int32_t j : adj[i]) {
			const auto a = find(static_cast<std::int32_t>(i)), b = find(j);
			if (a != b) parent[std::max(a, b)] = std::min(a, b);
		}
	}
	std::vector<std::vector<std::int32_t>> comps;
	std::vector<std::int32_t> slot(n, -1);
	for (std::int64_t i = 0; i < n; ++i) {
		const auto root = find(static_cast<std::int32_t>(i));
		if (slot[root] < 0) {
			slot[root] = static_cast<std::int32_t>(comps.size());
			comps.emplace_back();
		}
		comps[slot[root]].push_back(static_cast<std::int32_t>(i));
	}
	return comps;
}

void record_component(ComponentDecomposition& decomp, std::int64_t size, std::int64_t beta_k) {
	decomp.num_components += 1;
	decomp.max_component_size = std::max(decomp.max_component_size, size);
	if (beta_k <= 0) return;
	decomp.x[{size, beta_k}] += 1;
	decomp.beta_k_total += beta_k;
	if (size == decomp.k + 2 && beta_k == 1) decomp.s_k += 1;
}

}  // namespace

ComponentDecomposition component_decomposition(const SimplicialComplex& complex, int k) {
	if (k < 1) throw std::invalid_argument("component_decomposition: k must be >= 1");
	if (complex.max_dim < k + 1) {
		throw std::invalid_argument("component_decomposition: complex not built to dimension k+1");
	}
	ComponentDecomposition decomp;
	decomp.k = k;
	for (const auto& comp : connected_components(complex)) {
		const std::int64_t size = comp.count(0);
		std::int64_t beta = 0;
		if (size >= k + 2) beta = betti_numbers(comp, k).beta[k];
		record_component(decomp, size, beta);
	}
	return decomp;
}

ComponentDecomposition component_decomposition(const PointCloud& cloud, int k) {
	if (k < 1) throw std::invalid_argument("component_decomposition: k must be >= 1");
	ComponentDecomposition decomp;
	decomp.k = k;
	for (const auto& members : point_components(cloud)) {
		const std::int64_t size = static_cast<std::int64_t>(members.size());
		std::int64_t beta = 0;
		// components too small to carry a k-cycle contribute zero
		if (size >= k + 2) {
			const auto comp = build_cech_complex_subset(cloud, members, k + 1);
			beta = betti_numbers(comp, k).beta[k];
		}
		record_component(decomp, size, beta);
	}
	return decomp;
}

std::int64_t truncated_beta(const ComponentDecomposition& decomp, int k, std::int64_t m) {
	if (m < k + 2) throw std::invalid_argument("truncated_beta: m must be >= k+2");
	std::int64_t total = decomp.s_k;
	for (const auto& [key, count] : decomp.x) {
		const auto [i, j] = key;
		if (i >= k + 3 && i <= m) total += j * count;
	}
	return total;
}

int truncation_order(double delta, int d) {
	if (!(delta > 0.0) || d < 1) throw std::invalid_argument("truncation_order: need delta > 0, d >= 1");
	return static_cast<int>(std::floor(1.0 + 1.0 / (delta * d) + 1e-9));
}

int tail_split_order(double delta, int d) {
	if (!(delta > 0.0) || d < 1) throw std::invalid_argument("tail_split_order: need delta > 0, d >= 1");
	return static_cast<int>(std::ceil(2.0 / (d * delta) + 1.0 - 1e-9));
}

double tail_contribution_bound(std::int64_t n, double r, int d, int i, int k, double f_sup) {
	if (i < k + 3) throw std::invalid_argument("tail_contribution_bound: i must be >= k+3");
	if (r == 0.0) return 0.0;
	double log_binom = 0.0;  // log C(i, k+1)
	for (int t = 0; t < k + 1; ++t) {
		log_binom += std::log(static_cast<double>(i - t)) - std::log(static_cast<double>(t + 1));
	}
	const double log_value = i * std::log(static_cast<double>(n)) -
	                         std::lgamma(static_cast<double>(i) + 1.0) +
	                         (i - 2) * std::log(static_cast<double>(i)) +
	                         (i - 1) * (std::log(f_sup) + d * std::log(r)) + log_binom;
	return std::exp(log_value);
}

MuEstimate estimate_mu(int i, int j, int k, const DensitySpec& density, double r,
                       std::int64_t trials, std::uint64_t seed) {
	if (i < 2 || j < 0 || k < 1 || trials < 1) throw std::invalid_argument("estimate_mu: bad arguments");
	if (!(r > 0.0)) throw std::invalid_argument("estimate_mu: r must be positive");
	MuEstimate est;
	est.i = i;
	est.j = j;
	est.k = k;
	est.d = density.d;
	est.r_used = r;
	est.trials = trials;

	// j above the per-component contribution cap C(i, k+1) is impossible
	double cap = 1.0;
	for (int t = 0; t < k + 1; ++t) cap = cap * static_cast<double>(i - t) / (t + 1);
	const double scale = std::pow(r, -static_cast<double>(density.d) * (i - 1));
	if (static_cast<double>(j) > cap + 0.5) {
		est.degenerate = true;
		est.std_err = scale / static_cast<double>(trials);
		return est;
	}

	std::int64_t successes = 0;
#pragma omp parallel for schedule(static) reduction(+ : successes)
	for (std::int64_t t = 0; t < trials; ++t) {
		Rng rng(trial_seed(seed, static_cast<std::uint64_t>(t)));
		PointCloud cloud(density.d, r);
		for (int v = 0; v < i; ++v) cloud.push_point(density.sample(rng));
		// cheap connectivity screen before any homology
		const auto comps = point_components(cloud);
		if (comps.size() != 1) continue;
		std::int64_t beta = 0;
		if (i >= k + 2) {
			const auto complex = build_cech_complex(cloud, k + 1);
			beta = betti_numbers(complex, k).beta[k];
		}
		if (beta == j) ++successes;
	}
	est.successes = successes;
	const double p_hat = static_cast<double>(successes) / static_cast<double>(trials);
	est.mu_hat = scale * p_hat;
	est.std_err =
	    scale * std::max(std::sqrt(p_hat * (1.0 - p_hat) / static_cast<double>(trials)),
	                     1.0 / static_cast<double>(trials));
	est.degenerate = successes == 0;
	return est;
}

ScalingComparison poisson_mean_scaling(const GeomConfig& config, std::int64_t trials,
                                       double mu_r, std::int64_t mu_trials) {
	if (!config.poissonized) throw std::invalid_argument("poisson_mean_scaling: Poisson mode required");
	if (!(config.r > 0.0)) throw std::invalid_argument("poisson_mean_scaling: r must be positive");
	if (trials < 2) throw std::invalid_argument("poisson_mean_scaling: need trials >= 2");

	const int k = config.k;
	const int d = config.d();
	std::vector<double> s_k_samples(trials);
#pragma omp parallel for schedule(dynamic, 4)
	for (std::int64_t t = 0; t < trials; ++t) {
		Rng rng(trial_seed(config.seed, static_cast<std::uint64_t>(t)));
		const auto cloud = sample_points(config, rng);
		s_k_samples[t] = static_cast<double>(component_decomposition(cloud, k).s_k);
	}
	double mean = 0.0;
	for (double v : s_k_samples) mean += v;
	mean /= static_cast<double>(trials);
	double var = 0.0;
	for (double v : s_k_samples) var += (v - mean) * (v - mean);
	var /= static_cast<double>(trials - 1);

	const double scale = std::pow(static_cast<double>(config.n), -(k + 2.0)) *
	                     std::pow(config.r, -static_cast<double>(d) * (k + 1));
	ScalingComparison cmp;
	cmp.trials = trials;
	cmp.mean_s_k = mean;
	cmp.lhs = scale * mean;
	cmp.lhs_se = scale * std::sqrt(var / static_cast<double>(trials));
	cmp.mu = estimate_mu(k + 2, 1, k, config.density, mu_r, mu_trials,
	                     splitmix64(config.seed ^ 0xabcdef1234567890ULL));
	double factorial = 1.0;
	for (int t = 2; t <= k + 2; ++t) factorial *= t;
	cmp.rhs = cmp.mu.mu_hat / factorial;
	cmp.rhs_se = cmp.mu.std_err / factorial;
	return cmp;
}

MeckeH parse_mecke_h(const std::string& name) {
	if (name == "zero") return MeckeH::zero;
	if (name == "count") return MeckeH::count;
	if (name == "isolated-component") return MeckeH::isolated_component;
	throw std::invalid_argument("unknown mecke h spec: " + name);
}

namespace {

// number of j-subsets Y of the cloud with h(Y, cloud) = 1
std::int64_t mecke_lhs_count(const PointCloud& cloud, int j, MeckeH h) {
	const std::int64_t n = cloud.size();
	switch (h) {
		case MeckeH::zero:
			return 0;
		case MeckeH::count: {
			// C(n, j)
			std::int64_t c = 1;
			if (j > n) return 0;
			for (int t = 0; t < j; ++t) c = c * (n - t) / (t + 1);
			return c;
		}
		case MeckeH::isolated_component: {
			std::int64_t count = 0;
			for (const auto& comp : point_components(cloud)) {
				if (static_cast<std::int64_t>(comp.size()) == j) ++count;
			}
			return count;
		}
	}
	return 0;
}

// h(X_j, X_j u P): the j fresh points form a component of the joint complex
bool mecke_rhs_indicator(const std::vector<std::vector<double>>& fresh, const PointCloud& process,
                         double r, MeckeH h) {
	switch (h) {
		case MeckeH::zero:
			return false;
		case MeckeH::count:
			return true;
		case MeckeH::isolated_component: {
			const int d = static_cast<int>(fresh[0].size());
			const double thr = 2.0 * (r + miniball_tolerance);
			const double thr2 = thr * thr;
			// fresh points must be mutually connected (they are a component, so
			// for j <= 2 pairwise adjacency equals connectivity; larger j uses
			// union-find over the fresh subset)
			const int j = static_cast<int>(fresh.size());
			std::vector<int> parent(j);
			std::iota(parent.begin(), parent.end(), 0);
			auto find = [&parent](int v) {
				while (parent[v] != v) {
					parent[v] = parent[parent[v]];
					v = parent[v];
				}
				return v;
			};
			for (int a = 0; a < j; ++a) {
				for (int b = a + 1; b < j; ++b) {
					if (squared_distance(fresh[a].data(), fresh[b].data(), d) <= thr2) {
						const int ra = find(a), rb = find(b);
						if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
					}
				}
			}
			for (int a = 1; a < j; ++a) {
				if (find(a) != find(0)) return false;
			}
			// and isolated from every process point
			const std::int64_t n = process.size();
			for (std::int64_t i = 0; i < n; ++i) {
				for (int a = 0; a < j; ++a) {
					if (squared_distance(process.point(i), fresh[a].data(), d) <= thr2) return false;
				}
			}
			return true;
		}
	}
	return false;
}

}  // namespace

MeckeResult mecke_selftest(double lambda, int j, MeckeH h, const DensitySpec& density, double r,
                           std::int64_t trials, std::uint64_t seed) {
	if (lambda < 0.0 || j < 1 || trials < 2) throw std::invalid_argument("mecke_selftest: bad arguments");
	if (!(r > 0.0)) throw std::invalid_argument("mecke_selftest: r must be positive");

	std::vector<double> lhs_samples(trials), rhs_samples(trials);
	double j_factorial = 1.0;
	for (int t = 2; t <= j; ++t) j_factorial *= t;
	const double rhs_scale = std::pow(lambda, j) / j_factorial;

#pragma omp parallel for schedule(dynamic, 16)
	for (std::int64_t t = 0; t < trials; ++t) {
		Rng rng(trial_seed(seed, static_cast<std::uint64_t>(t)));
		// left side: one Poisson sample
		PointCloud cloud(density.d, r);
		const std::int64_t count = rng.poisson(lambda);
		for (std::int64_t i = 0; i < count; ++i) cloud.push_point(density.sample(rng));
		lhs_samples[t] = static_cast<double>(mecke_lhs_count(cloud, j, h));
		// right side: j i.i.d. points adjoined to an independent process
		std::vector<std::vector<double>> fresh(j);
		for (int a = 0; a < j; ++a) fresh[a] = density.sample(rng);
		PointCloud process(density.d, r);
		const std::int64_t count2 = rng.poisson(lambda);
		for (std::int64_t i = 0; i < count2; ++i) process.push_point(density.sample(rng));
		rhs_samples[t] = rhs_scale * (mecke_rhs_indicator(fresh, process, r, h) ? 1.0 : 0.0);
	}

	auto mean_se = [trials](const std::vector<double>& v) {
		double mean = 0.0;
		for (double x : v) mean += x;
		mean /= static_cast<double>(trials);
		double var = 0.0;
		for (double x : v) var += (x - mean) * (x - mean);
		var /= static_cast<double>(trials - 1);
		return std::pair<double, double>(mean, std::sqrt(var / static_cast<double>(trials)));
	};
	MeckeResult result;
	result.trials = trials;
	std::tie(result.lhs, result.lhs_se) = mean_se(lhs_samples);
	std::tie(result.rhs, result.rhs_se) = mean_se(rhs_samples);
	return result;
}

double h_functional(const PointCloud& cloud, std::int64_t n, double r, int k, std::int64_t m) {
	if (!(r > 0.0)) throw std::invalid_argument("h_functional: r must be positive");
	if (cloud.radius != r) throw std::invalid_argument("h_functional: cloud radius must equal r");
	if (cloud.size() == 0) return 0.0;
	const std::int64_t m_eff = std::max<std::int64_t>(m, k + 2);
	const auto decomp = component_decomposition(cloud, k);
	const double norm = std::pow(static_cast<double>(n) * std::pow(r, cloud.d), -(k + 1) / 2.0);
	return norm * static_cast<double>(truncated_beta(decomp, k, m_eff));
}

IncrementStats increment_stats(const GeomConfig& config, double gamma,
                               const std::vector<double>& q_offsets, std::int64_t trials) {
	if (!(gamma > 0.5) || gamma > 1.0) throw std::invalid_argument("increment_stats: gamma in (1/2, 1]");
	if (q_offsets.empty() || trials < 2) throw std::invalid_argument("increment_stats: bad arguments");
	for (double off : q_offsets) {
		if (off < -1.0 || off > 1.0) throw std::invalid_argument("increment_stats: offsets in [-1, 1]");
	}

	const int k = config.k;
	const int d = config.d();
	const double n_gamma = std::pow(static_cast<double>(config.n), gamma);
	IncrementStats stats;
	stats.trials = trials;
	for (double off : q_offsets) {
		stats.q_values.push_back(
		    std::max<std::int64_t>(0, std::llround(static_cast<double>(config.n) + off * n_gamma)));
	}
	const int nq = static_cast<int>(stats.q_values.size());
	for (int a = 0; a < nq; ++a) {
		for (int b = a + 1; b < nq; ++b) stats.pairs.emplace_back(stats.q_values[a], stats.q_values[b]);
	}

	// paper bound on |E[R_q]| for q in the window
	double binom_mk = 1.0;
	for (int t = 0; t < k + 1; ++t) {
		binom_mk *= static_cast<double>(truncation_order(config.delta, d) - t) / (t + 1);
	}
	const double fs = config.density.supremum;
	const double rd = std::pow(config.r, d);
	const double h_norm = config.r > 0.0
	                          ? std::pow(static_cast<double>(config.n) * rd, (k + 1) / 2.0)
	                          : 1.0;
	stats.mean_bound = binom_mk *
	                   std::pow((static_cast<double>(config.n) + n_gamma) * fs * rd, k + 1) / h_norm;

	if (config.r == 0.0) {  // no edges ever: all increments vanish
		stats.mean_r.assign(nq, 0.0);
		stats.se_r.assign(nq, 0.0);
		stats.mean_rr.assign(stats.pairs.size(), 0.0);
		stats.se_rr.assign(stats.pairs.size(), 0.0);
		stats.mean_r2.assign(nq, 0.0);
		stats.se_r2.assign(nq, 0.0);
		return stats;
	}

	const std::int64_t m = std::max<std::int64_t>(truncation_order(config.delta, d), k + 2);
	const std::int64_t max_q = *std::max_element(stats.q_values.begin(), stats.q_values.end());

	std::vector<std::vector<double>> r_samples(nq, std::vector<double>(trials));
#pragma omp parallel for schedule(dynamic, 4)
	for (std::int64_t t = 0; t < trials; ++t) {
		Rng rng(trial_seed(config.seed, static_cast<std::uint64_t>(t)));
		PointCloud stream(d, config.r);
		stream.coords.reserve(static_cast<std::size_t>(max_q + 1) * d);
		for (std::int64_t i = 0; i <= max_q; ++i) {
			const auto p = config.density.sample(rng);
			stream.coords.insert(stream.coords.end(), p.begin(), p.end());
		}
		for (int qi = 0; qi < nq; ++qi) {
			const std::int64_t q = stats.q_values[qi];
			PointCloud at_q(d, config.r), at_q1(d, config.r);
			at_q.coords.assign(stream.coords.begin(), stream.coords.begin() + q * d);
			at_q1.coords.assign(stream.coords.begin(), stream.coords.begin() + (q + 1) * d);
			const double h_q = h_functional(at_q, config.n, config.r, k, m);
			const double h_q1 = h_functional(at_q1, config.n, config.r, k, m);
			r_samples[qi][t] = h_q1 - h_q;
		}
	}

	auto mean_se = [trials](const std::vector<double>& v) {
		double mean = 0.0;
		for (double x : v) mean += x;
		mean /= static_cast<double>(trials);
		double var = 0.0;
		for (double x : v) var += (x - mean) * (x - mean);
		var /= static_cast<double>(trials - 1);
		return std::pair<double, double>(mean, std::sqrt(var / static_cast<double>(trials)));
	};

	for (int qi = 0; qi < nq; ++qi) {
		auto [m1, se1] = mean_se(r_samples[qi]);
		stats.mean_r.push_back(m1);
		stats.se_r.push_back(se1);
		std::vector<double> sq(trials);
		for (std::int64_t t = 0; t < trials; ++t) sq[t] = r_samples[qi][t] * r_samples[qi][t];
		auto [m2, se2] = mean_se(sq);
		stats.mean_r2.push_back(m2);
		stats.se_r2.push_back(se2);
		stats.max_r2_over_sqrt_n =
		    std::max(stats.max_r2_over_sqrt_n, m2 / std::sqrt(static_cast<double>(config.n)));
	}
	for (int a = 0; a < nq; ++a) {
		for (int b = a + 1; b < nq; ++b) {
			std::vector<double> prod(trials);
			for (std::int64_t t = 0; t < trials; ++t) prod[t] = r_samples[a][t] * r_samples[b][t];
			auto [mp, sep] = mean_se(prod);
			stats.mean_rr.push_back(mp);
			stats.se_rr.push_back(sep);
		}
	}
	return stats;
}

}  // namespace bettilab
