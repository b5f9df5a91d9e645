#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace bettilab {

// Undirected simple graph on dense vertex labels 0..n-1 with bit-packed
// symmetric adjacency rows.
struct Graph {
	int n = 0;
	int words = 0;
	std::vector<std::uint64_t> adj;

	Graph() = default;
	explicit Graph(int vertex_count)
	    : n(vertex_count), words((vertex_count + 63) / 64),
	      adj(static_cast<std::size_t>(vertex_count) * words, 0) {
		if (vertex_count < 0) throw std::invalid_argument("Graph: negative vertex count");
	}

	const std::uint64_t* row(int v) const { return adj.data() + static_cast<std::size_t>(v) * words; }
	std::uint64_t* row(int v) { return adj.data() + static_cast<std::size_t>(v) * words; }

	void add_edge(int i, int j) {
		if (i == j) throw std::invalid_argument("Graph: self-loop");
		row(i)[j >> 6] |= 1ULL << (j & 63);
		row(j)[i >> 6] |= 1ULL << (i & 63);
	}

	bool has_edge(int i, int j) const { return (row(i)[j >> 6] >> (j & 63)) & 1ULL; }

	std::int64_t edge_count() const {
		std::int64_t twice = 0;
		for (std::uint64_t w : adj) twice += __builtin_popcountll(w);
		return twice / 2;
	}
};

}  // namespace bettilab
