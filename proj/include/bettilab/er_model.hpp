#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bettilab/graph.hpp"
#include "bettilab/rational.hpp"
#include "bettilab/rng.hpp"

namespace bettilab {

struct ERConfig {
	std::int64_t n = 0;
	double p = 0.0;       // edge probability in (0, 1]
	int k = 1;            // target Betti degree
	double delta = 0.05;  // regime slack
	std::uint64_t seed = 0;
};

enum class MomentMode { exact, asymptotic_order };

// Closed-form moment value.  Exact-mode results are evaluated in log space
// (value = exp(log_value), which may overflow while log_value stays finite);
// asymptotic-order results suppress the constant.
struct MomentResult {
	double value = 0.0;
	double log_value = 0.0;
	MomentMode mode = MomentMode::exact;
	std::string symbol;
};

Graph sample_er_graph(const ERConfig& config);
Graph sample_er_graph(std::int64_t n, double p, Rng& rng);

// f[i] = number of (i+1)-cliques, exact, counted by ordered extension over
// adjacency bitsets up to the clique number.  Throws if the clique number
// exceeds max_clique_size (never truncates silently).
std::vector<std::int64_t> clique_f_vector(const Graph& graph, int max_clique_size = 64);
std::vector<std::int64_t> clique_f_vector_serial(const Graph& graph, int max_clique_size = 64);

// f_k - f_{k+1} - f_{k-1} + f_{k+2} + f_{k-2} - ... ; missing entries are 0.
// Identically equal to (-1)^k * sum_i (-1)^i f_i.
std::int64_t tilde_beta(const std::vector<std::int64_t>& f, int k);

// lower = f_k - f_{k+1} - f_{k-1}, upper = f_k
std::pair<std::int64_t, std::int64_t> morse_bounds(const std::vector<std::int64_t>& f, int k);

// E[f_dim] = C(n, dim+1) p^C(dim+1, 2)
MomentResult mean_f(std::int64_t n, double p, int dim);
Rational mean_f_exact(std::int64_t n, const Rational& p, int dim);

// Cov(f_a, f_b) = C(n,s) p^{C(s,2)+C(t,2)} sum_{r=2}^{t} C(s,r) C(n-s,t-r)
// (p^{-C(r,2)} - 1), with s = max(a,b)+1, t = min(a,b)+1.
MomentResult cov_f(std::int64_t n, double p, int a, int b);
Rational cov_f_exact(std::int64_t n, const Rational& p, int a, int b);

// Var(tilde_beta_k) = sum_{a,b} s_a s_b Cov(f_a, f_b), s_a the tilde sign of
// f_a.  The double version sums every term that contributes at double
// precision (compensated summation); the rational version is fully exact.
MomentResult exact_var_tilde_beta(std::int64_t n, double p, int k);
Rational exact_var_tilde_beta_exact(std::int64_t n, const Rational& p, int k);

// order-only n^{2k} p^{2 C(k+1,2) - 1}
MomentResult sigma2_asymptotic(std::int64_t n, double p, int k);

// c / (n sqrt(p)); the constant c_k is caller-supplied
double stein_rate(std::int64_t n, double p, int k, double c);

enum class Regime { below, inside, above };
// inside iff n^{-1/k+delta} <= p <= n^{-1/(k+1)-delta}
Regime regime_check(std::int64_t n, double p, int k, double delta);
const char* regime_name(Regime r);

}  // namespace bettilab
