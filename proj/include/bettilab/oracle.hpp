#pragma once

#include <cstdint>
#include <vector>

#include "bettilab/graph.hpp"
#include "bettilab/rational.hpp"

namespace bettilab {

// Exhaustive G(n, p) moment enumeration over all 2^C(n,2) graphs in exact
// rational arithmetic.  Statistic order: f_0, ..., f_{n-1}, beta_k,
// tilde_beta_k.
struct EnumerationResult {
	int n = 0;
	Rational p;
	int k = 1;
	std::vector<std::string> names;
	std::vector<Rational> mean;
	std::vector<std::vector<Rational>> cov;
	Rational weight_sum;  // must be exactly 1

	const Rational& mean_f(int dim) const { return mean[dim]; }
	const Rational& cov_ff(int a, int b) const { return cov[a][b]; }
	const Rational& mean_beta() const { return mean[n]; }
	const Rational& var_beta() const { return cov[n][n]; }
	const Rational& mean_tilde() const { return mean[n + 1]; }
	const Rational& var_tilde() const { return cov[n + 1][n + 1]; }
};

EnumerationResult enumerate_er(int n, const Rational& p, int k);  // n <= 5

// counts size-cliques by testing every vertex subset; n <= 16
std::int64_t brute_clique_count(const Graph& graph, int size);

}  // namespace bettilab
