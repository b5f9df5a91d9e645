#include "bettilab/er_model.hpp"

#include <atomic>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace bettilab {

namespace {

double log_choose(std::int64_t n, std::int64_t k) {
	if (k < 0 || k > n) return -std::numeric_limits<double>::infinity();
	return std::lgamma(static_cast<double>(n) + 1.0) - std::lgamma(static_cast<double>(k) + 1.0) -
	       std::lgamma(static_cast<double>(n - k) + 1.0);
}

std::int64_t choose2(std::int64_t m) { return m * (m - 1) / 2; }

void check_probability(double p) {
	if (!(p > 0.0) || p > 1.0) throw std::invalid_argument("edge probability must be in (0, 1]");
}

struct KahanSum {
	double sum = 0.0, carry = 0.0;
	void add(double x) {
		const double y = x - carry;
		const double t = sum + y;
		carry = (t - sum) - y;
		sum = t;
	}
};

}  // namespace

Graph sample_er_graph(const ERConfig& config) {
	Rng rng(config.seed);
	return sample_er_graph(config.n, config.p, rng);
}

Graph sample_er_graph(std::int64_t n, double p, Rng& rng) {
	if (p < 0.0 || p > 1.0) throw std::invalid_argument("sample_er_graph: p outside [0, 1]");
	Graph g(static_cast<int>(n));
	for (int i = 0; i < g.n; ++i) {
		for (int j = i + 1; j < g.n; ++j) {
			if (rng.bernoulli(p)) g.add_edge(i, j);
		}
	}
	return g;
}

namespace {

// counts[t] += cliques extending `cand`; depth = current clique size
bool count_extensions(const Graph& g, const std::vector<std::uint64_t>& cand, int depth,
                      int max_clique_size, std::vector<std::int64_t>& counts) {
	const int words = g.words;
	for (int w = 0; w < words; ++w) {
		std::uint64_t bits = cand[w];
		while (bits) {
			const int v = (w << 6) + __builtin_ctzll(bits);
			bits &= bits - 1;
			if (depth + 1 > max_clique_size) return false;  // clique number exceeds cap
			++counts[depth];
			std::vector<std::uint64_t> next(words);
			bool any = false;
			const std::uint64_t* nv = g.row(v);
			for (int u = w; u < words; ++u) {
				std::uint64_t b = cand[u] & nv[u];
				if (u == w) b &= (v & 63) == 63 ? 0ULL : ~((1ULL << ((v & 63) + 1)) - 1);
				next[u] = b;
				any |= b != 0;
			}
			if (any && !count_extensions(g, next, depth + 1, max_clique_size, counts)) return false;
		}
	}
	return true;
}

std::vector<std::uint64_t> upper_neighbors(const Graph& g, int v) {
	std::vector<std::uint64_t> cand(g.words, 0);
	const std::uint64_t* rv = g.row(v);
	const int wv = v >> 6;
	for (int w = wv; w < g.words; ++w) {
		std::uint64_t b = rv[w];
		if (w == wv) b &= (v & 63) == 63 ? 0ULL : ~((1ULL << ((v & 63) + 1)) - 1);
		cand[w] = b;
	}
	return cand;
}

void trim_trailing_zeros(std::vector<std::int64_t>& f) {
	while (!f.empty() && f.back() == 0) f.pop_back();
}

}  // namespace

std::vector<std::int64_t> clique_f_vector_serial(const Graph& graph, int max_clique_size) {
	if (max_clique_size < 1) throw std::invalid_argument("clique_f_vector: cap must be >= 1");
	std::vector<std::int64_t> counts(max_clique_size, 0);
	for (int v = 0; v < graph.n; ++v) {
		counts[0] += 1;
		const auto cand = upper_neighbors(graph, v);
		if (!count_extensions(graph, cand, 1, max_clique_size, counts)) {
			throw std::length_error("clique_f_vector: clique number exceeds the size cap");
		}
	}
	trim_trailing_zeros(counts);
	return counts;
}

std::vector<std::int64_t> clique_f_vector(const Graph& graph, int max_clique_size) {
	if (max_clique_size < 1) throw std::invalid_argument("clique_f_vector: cap must be >= 1");
	std::vector<std::int64_t> counts(max_clique_size, 0);
	std::atomic<bool> overflow{false};
#pragma omp parallel
	{
		std::vector<std::int64_t> local(max_clique_size, 0);
#pragma omp for schedule(dynamic, 16)
		for (int v = 0; v < graph.n; ++v) {
			if (overflow.load(std::memory_order_relaxed)) continue;
			local[0] += 1;
			const auto cand = upper_neighbors(graph, v);
			if (!count_extensions(graph, cand, 1, max_clique_size, local)) {
				overflow.store(true, std::memory_order_relaxed);
			}
		}
#pragma omp critical
		{
			for (int t = 0; t < max_clique_size; ++t) counts[t] += local[t];
		}
	}
	if (overflow.load()) {
		throw std::length_error("clique_f_vector: clique number exceeds the size cap");
	}
	trim_trailing_zeros(counts);
	return counts;
}

std::int64_t tilde_beta(const std::vector<std::int64_t>& f, int k) {
	if (k < 1) throw std::invalid_argument("tilde_beta: k must be >= 1");
	std::int64_t acc = 0;
	for (std::size_t i = 0; i < f.size(); ++i) {
		const int dist = std::abs(static_cast<int>(i) - k);
		acc += (dist % 2 == 0 ? 1 : -1) * f[i];
	}
	return acc;
}

std::pair<std::int64_t, std::int64_t> morse_bounds(const std::vector<std::int64_t>& f, int k) {
	if (k < 1) throw std::invalid_argument("morse_bounds: k must be >= 1");
	auto at = [&f](int i) -> std::int64_t {
		return (i >= 0 && i < static_cast<int>(f.size())) ? f[i] : 0;
	};
	return {at(k) - at(k + 1) - at(k - 1), at(k)};
}

MomentResult mean_f(std::int64_t n, double p, int dim) {
	check_probability(p);
	MomentResult r;
	r.mode = MomentMode::exact;
	r.symbol = "E[f_" + std::to_string(dim) + "]";
	r.log_value = log_choose(n, dim + 1) + static_cast<double>(choose2(dim + 1)) * std::log(p);
	r.value = std::exp(r.log_value);
	return r;
}

Rational mean_f_exact(std::int64_t n, const Rational& p, int dim) {
	return Rational(binomial_big(n, dim + 1)) * pow_rational(p, choose2(dim + 1));
}

MomentResult cov_f(std::int64_t n, double p, int a, int b) {
	check_probability(p);
	const std::int64_t s = std::max(a, b) + 1;
	const std::int64_t t = std::min(a, b) + 1;
	MomentResult r;
	r.mode = MomentMode::exact;
	r.symbol = "Cov(f_" + std::to_string(a) + ",f_" + std::to_string(b) + ")";
	const double logp = std::log(p);
	// log-sum-exp over the (all nonnegative) overlap terms
	double max_log = -std::numeric_limits<double>::infinity();
	std::vector<double> logs;
	for (std::int64_t overlap = 2; overlap <= t; ++overlap) {
		if (t - overlap > n - s) continue;
		const double log_gain = p == 1.0
		                            ? -std::numeric_limits<double>::infinity()
		                            : std::log(std::expm1(-static_cast<double>(choose2(overlap)) * logp));
		const double term = log_choose(s, overlap) + log_choose(n - s, t - overlap) + log_gain;
		logs.push_back(term);
		max_log = std::max(max_log, term);
	}
	if (logs.empty() || max_log == -std::numeric_limits<double>::infinity()) {
		r.log_value = -std::numeric_limits<double>::infinity();
		r.value = 0.0;
		return r;
	}
	KahanSum acc;
	for (double term : logs) acc.add(std::exp(term - max_log));
	r.log_value = log_choose(n, s) + static_cast<double>(choose2(s) + choose2(t)) * logp + max_log +
	              std::log(acc.sum);
	r.value = std::exp(r.log_value);
	return r;
}

Rational cov_f_exact(std::int64_t n, const Rational& p, int a, int b) {
	const std::int64_t s = std::max(a, b) + 1;
	const std::int64_t t = std::min(a, b) + 1;
	Rational sum = 0;
	for (std::int64_t overlap = 2; overlap <= t; ++overlap) {
		if (t - overlap > n - s) continue;
		sum += Rational(binomial_big(s, overlap) * binomial_big(n - s, t - overlap)) *
		       (pow_rational(p, -choose2(overlap)) - 1);
	}
	return Rational(binomial_big(n, s)) * pow_rational(p, choose2(s) + choose2(t)) * sum;
}

MomentResult exact_var_tilde_beta(std::int64_t n, double p, int k) {
	check_probability(p);
	if (k < 1) throw std::invalid_argument("exact_var_tilde_beta: k must be >= 1");
	if (n > 100000) throw std::length_error("exact_var_tilde_beta: n capped at 1e5");
	// Truncate the dimension range once terms cannot move the double-precision
	// sum: Var(f_a) <= E[f_a] C(n,a+1), and E[f_a] is unimodal in a.
	const double logn = std::log(static_cast<double>(n));
	int a_max = 0;
	double peak = -std::numeric_limits<double>::infinity();
	for (int a = 0; a < n; ++a) {
		const double lm = mean_f(n, p, a).log_value;
		peak = std::max(peak, lm);
		a_max = a;
		if (a > k + 3 && lm + (a + 1) * logn < peak - 120.0) break;
	}
	KahanSum acc;
	for (int a = 0; a <= a_max; ++a) {
		const int sa = std::abs(a - k) % 2 == 0 ? 1 : -1;
		acc.add(sa * sa * cov_f(n, p, a, a).value);
		for (int b = a + 1; b <= a_max; ++b) {
			const int sb = std::abs(b - k) % 2 == 0 ? 1 : -1;
			acc.add(2.0 * sa * sb * cov_f(n, p, a, b).value);
		}
	}
	MomentResult r;
	r.mode = MomentMode::exact;
	r.symbol = "Var(tilde_beta_" + std::to_string(k) + ")";
	r.value = acc.sum;
	r.log_value = acc.sum > 0.0 ? std::log(acc.sum) : -std::numeric_limits<double>::infinity();
	return r;
}

Rational exact_var_tilde_beta_exact(std::int64_t n, const Rational& p, int k) {
	if (k < 1) throw std::invalid_argument("exact_var_tilde_beta: k must be >= 1");
	Rational acc = 0;
	for (int a = 0; a < n; ++a) {
		const int sa = std::abs(a - k) % 2 == 0 ? 1 : -1;
		for (int b = 0; b < n; ++b) {
			const int sb = std::abs(b - k) % 2 == 0 ? 1 : -1;
			acc += Rational(sa * sb) * cov_f_exact(n, p, a, b);
		}
	}
	return acc;
}

MomentResult sigma2_asymptotic(std::int64_t n, double p, int k) {
	check_probability(p);
	MomentResult r;
	r.mode = MomentMode::asymptotic_order;
	r.symbol = "sigma2 ~ n^2k p^(2C(k+1,2)-1)";
	r.log_value = 2.0 * k * std::log(static_cast<double>(n)) +
	              (2.0 * static_cast<double>(choose2(k + 1)) - 1.0) * std::log(p);
	r.value = std::exp(r.log_value);
	return r;
}

double stein_rate(std::int64_t n, double p, int k, double c) {
	check_probability(p);
	(void)k;  // the paper's constant c_k is supplied by the caller
	if (!(c > 0.0)) throw std::invalid_argument("stein_rate: c must be positive");
	return c / (static_cast<double>(n) * std::sqrt(p));
}

Regime regime_check(std::int64_t n, double p, int k, double delta) {
	if (!(delta > 0.0)) throw std::invalid_argument("regime_check: delta must be positive");
	const double nn = static_cast<double>(n);
	const double lower = std::pow(nn, -1.0 / k + delta);
	const double upper = std::pow(nn, -1.0 / (k + 1) - delta);
	if (p < lower) return Regime::below;
	if (p > upper) return Regime::above;
	return Regime::inside;
}

const char* regime_name(Regime r) {
	switch (r) {
		case Regime::below: return "below";
		case Regime::inside: return "inside";
		default: return "above";
	}
}

}  // namespace bettilab
