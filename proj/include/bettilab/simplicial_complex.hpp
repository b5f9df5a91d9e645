#pragma once

#include <cstdint>
#include <vector>

#include "bettilab/graph.hpp"

namespace bettilab {

using Simplex = std::vector<std::int32_t>;

// Explicit simplex lists per dimension.  Vertex tuples are strictly
// increasing; each per-dimension list is sorted lexicographically.  max_dim
// is the highest dimension *slot* stored: levels up to max_dim exist and are
// known to be complete, even when empty.
struct SimplicialComplex {
	int max_dim = -1;
	std::vector<std::vector<Simplex>> cells;  // cells[t] = t-simplices

	std::int64_t count(int dim) const {
		if (dim < 0 || dim > max_dim) return 0;
		return static_cast<std::int64_t>(cells[dim].size());
	}

	// highest dimension with at least one simplex, -1 for the empty complex
	int top_dim() const {
		for (int t = max_dim; t >= 0; --t) {
			if (!cells[t].empty()) return t;
		}
		return -1;
	}

	// face counts up to the top nonempty dimension
	std::vector<std::int64_t> f_vector() const {
		std::vector<std::int64_t> f;
		for (int t = 0; t <= top_dim(); ++t) f.push_back(count(t));
		return f;
	}

	std::int64_t euler_characteristic() const {
		std::int64_t chi = 0;
		for (int t = 0; t <= max_dim; ++t) chi += (t % 2 == 0 ? 1 : -1) * count(t);
		return chi;
	}

	bool has_simplex(int dim, const Simplex& s) const;
};

// Simplices of dimension t are exactly the (t+1)-cliques of the graph, for
// all t <= max_dim.  Levels above the clique number stay empty.
SimplicialComplex build_clique_complex(const Graph& graph, int max_dim);

// Partition by 1-skeleton connectivity.  Components keep the original vertex
// labels and the parent's max_dim, and are ordered by smallest vertex.
std::vector<SimplicialComplex> connected_components(const SimplicialComplex& complex);

// Every codimension-1 face of every stored simplex is stored.
bool is_face_closed(const SimplicialComplex& complex);

}  // namespace bettilab
