#include "bettilab/simplicial_complex.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace bettilab {

bool SimplicialComplex::has_simplex(int dim, const Simplex& s) const {
	if (dim < 0 || dim > max_dim) return false;
	const auto& level = cells[dim];
	return std::binary_search(level.begin(), level.end(), s);
}

namespace {

// depth-first ordered clique extension over adjacency bitsets
void extend_cliques(const Graph& g, std::vector<std::int32_t>& current,
                    const std::vector<std::uint64_t>& cand, int max_dim,
                    std::vector<std::vector<Simplex>>& out) {
	const int words = g.words;
	for (int w = 0; w < words; ++w) {
		std::uint64_t bits = cand[w];
		while (bits) {
			const int v = (w << 6) + __builtin_ctzll(bits);
			bits &= bits - 1;
			current.push_back(v);
			out[current.size() - 1].push_back(current);
			if (static_cast<int>(current.size()) - 1 < max_dim) {
				std::vector<std::uint64_t> next(words);
				bool any = false;
				const std::uint64_t* nv = g.row(v);
				for (int u = 0; u < words; ++u) {
					std::uint64_t b = cand[u] & nv[u];
					if (u == w) b &= ~((v % 64 == 63) ? ~0ULL : ((1ULL << ((v & 63) + 1)) - 1));
					else if (u < w) b = 0;
					next[u] = b;
					any |= b != 0;
				}
				if (any) extend_cliques(g, current, next, max_dim, out);
			}
			current.pop_back();
		}
	}
}

}  // namespace

SimplicialComplex build_clique_complex(const Graph& graph, int max_dim) {
	if (max_dim < 0) throw std::invalid_argument("build_clique_complex: max_dim must be >= 0");
	SimplicialComplex complex;
	complex.max_dim = max_dim;
	complex.cells.assign(max_dim + 1, {});
	for (int v = 0; v < graph.n; ++v) {
		complex.cells[0].push_back({v});
		if (max_dim == 0) continue;
		// candidates: neighbors of v above v
		std::vector<std::uint64_t> cand(graph.words);
		const std::uint64_t* rv = graph.row(v);
		bool any = false;
		for (int w = 0; w < graph.words; ++w) {
			std::uint64_t b = rv[w];
			if (w == v / 64) b &= ~((v % 64 == 63) ? ~0ULL : ((1ULL << ((v & 63) + 1)) - 1));
			else if (w < v / 64) b = 0;
			cand[w] = b;
			any |= b != 0;
		}
		if (!any) continue;
		std::vector<std::int32_t> current = {v};
		extend_cliques(graph, current, cand, max_dim, complex.cells);
	}
	return complex;
}

std::vector<SimplicialComplex> connected_components(const SimplicialComplex& complex) {
	if (complex.max_dim < 0 || complex.cells[0].empty()) return {};

	// union-find over the vertex labels present
	std::map<std::int32_t, std::int32_t> parent;
	for (const auto& v : complex.cells[0]) parent[v[0]] = v[0];
	auto find = [&parent](std::int32_t x) {
		while (parent[x] != x) {
			parent[x] = parent[parent[x]];
			x = parent[x];
		}
		return x;
	};
	if (complex.max_dim >= 1) {
		for (const auto& e : complex.cells[1]) {
			const auto a = find(e[0]), b = find(e[1]);
			if (a != b) parent[std::max(a, b)] = std::min(a, b);
		}
	}

	std::map<std::int32_t, std::size_t> slot_of_root;
	std::vector<SimplicialComplex> components;
	for (const auto& v : complex.cells[0]) {
		const auto root = find(v[0]);
		if (!slot_of_root.count(root)) {
			slot_of_root[root] = components.size();
			components.emplace_back();
			components.back().max_dim = complex.max_dim;
			components.back().cells.assign(complex.max_dim + 1, {});
		}
	}
	for (int t = 0; t <= complex.max_dim; ++t) {
		for (const auto& s : complex.cells[t]) {
			components[slot_of_root[find(s[0])]].cells[t].push_back(s);
		}
	}
	return components;
}

bool is_face_closed(const SimplicialComplex& complex) {
	for (int t = 1; t <= complex.max_dim; ++t) {
		for (const auto& s : complex.cells[t]) {
			Simplex face(s.size() - 1);
			for (std::size_t drop = 0; drop < s.size(); ++drop) {
				std::size_t w = 0;
				for (std::size_t i = 0; i < s.size(); ++i) {
					if (i != drop) face[w++] = s[i];
				}
				if (!complex.has_simplex(t - 1, face)) return false;
			}
		}
	}
	return true;
}

}  // namespace bettilab
