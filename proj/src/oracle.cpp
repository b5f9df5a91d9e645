#include "bettilab/oracle.hpp"

#include <stdexcept>

#include "bettilab/er_model.hpp"
#include "bettilab/homology.hpp"
#include "bettilab/simplicial_complex.hpp"

namespace bettilab {

EnumerationResult enumerate_er(int n, const Rational& p, int k) {
	if (n < 1 || n > 5) throw std::invalid_argument("enumerate_er: n must be in 1..5");
	if (p < 0 || p > 1) throw std::invalid_argument("enumerate_er: p outside [0,1]");
	if (k < 1) throw std::invalid_argument("enumerate_er: k must be >= 1");

	const int num_edges = n * (n - 1) / 2;
	std::vector<std::pair<int, int>> edge_list;
	for (int i = 0; i < n; ++i) {
		for (int j = i + 1; j < n; ++j) edge_list.emplace_back(i, j);
	}

	const int stats = n + 2;  // f_0..f_{n-1}, beta_k, tilde_beta_k
	EnumerationResult result;
	result.n = n;
	result.p = p;
	result.k = k;
	for (int d = 0; d < n; ++d) result.names.push_back("f_" + std::to_string(d));
	result.names.push_back("beta_" + std::to_string(k));
	result.names.push_back("tilde_beta_" + std::to_string(k));
	result.mean.assign(stats, 0);
	result.cov.assign(stats, std::vector<Rational>(stats, 0));
	result.weight_sum = 0;

	std::vector<Rational> p_pow(num_edges + 1), q_pow(num_edges + 1);
	p_pow[0] = q_pow[0] = 1;
	for (int e = 1; e <= num_edges; ++e) {
		p_pow[e] = p_pow[e - 1] * p;
		q_pow[e] = q_pow[e - 1] * (Rational(1) - p);
	}

	std::vector<std::vector<Rational>> raw_second(stats, std::vector<Rational>(stats, 0));
	std::vector<std::int64_t> value(stats);
	for (std::uint32_t mask = 0; mask < (1u << num_edges); ++mask) {
		Graph g(n);
		int present = 0;
		for (int e = 0; e < num_edges; ++e) {
			if (mask & (1u << e)) {
				g.add_edge(edge_list[e].first, edge_list[e].second);
				++present;
			}
		}
		const auto f = clique_f_vector_serial(g, n);
		const auto complex = build_clique_complex(g, std::max(k + 1, n));
		const auto betti = betti_numbers(complex, k);
		for (int d = 0; d < n; ++d) value[d] = d < static_cast<int>(f.size()) ? f[d] : 0;
		value[n] = betti.beta[k];
		value[n + 1] = tilde_beta(f, k);

		const Rational weight = p_pow[present] * q_pow[num_edges - present];
		result.weight_sum += weight;
		for (int a = 0; a < stats; ++a) {
			result.mean[a] += weight * value[a];
			for (int b = a; b < stats; ++b) raw_second[a][b] += weight * value[a] * value[b];
		}
	}

	for (int a = 0; a < stats; ++a) {
		for (int b = a; b < stats; ++b) {
			result.cov[a][b] = raw_second[a][b] - result.mean[a] * result.mean[b];
			result.cov[b][a] = result.cov[a][b];
		}
	}
	return result;
}

std::int64_t brute_clique_count(const Graph& graph, int size) {
	if (graph.n > 16) throw std::invalid_argument("brute_clique_count: n must be <= 16");
	if (size < 1 || size > graph.n) return size == 0 ? 1 : 0;
	std::int64_t count = 0;
	for (std::uint32_t mask = 0; mask < (1u << graph.n); ++mask) {
		if (__builtin_popcount(mask) != size) continue;
		bool clique = true;
		for (int i = 0; i < graph.n && clique; ++i) {
			if (!(mask & (1u << i))) continue;
			for (int j = i + 1; j < graph.n && clique; ++j) {
				if ((mask & (1u << j)) && !graph.has_edge(i, j)) clique = false;
			}
		}
		if (clique) ++count;
	}
	return count;
}

}  // namespace bettilab
