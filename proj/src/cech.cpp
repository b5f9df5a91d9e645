#include "bettilab/cech.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_map>

#include "bettilab/miniball.hpp"

namespace bettilab {

namespace {

constexpr int grid_max_dim = 4;  // 16 bits per packed axis

struct CellGrid {
	double cell = 1.0;
	int d = 0;
	double origin[grid_max_dim] = {0, 0, 0, 0};
	std::unordered_map<std::uint64_t, std::vector<std::int32_t>> buckets;

	static std::uint64_t pack(const std::int32_t* c, int d) {
		std::uint64_t key = 0;
		for (int t = 0; t < d; ++t) key = (key << 16) | static_cast<std::uint16_t>(c[t]);
		return key;
	}

	void locate(const double* p, std::int32_t* c) const {
		for (int t = 0; t < d; ++t) {
			c[t] = static_cast<std::int32_t>(std::floor((p[t] - origin[t]) / cell)) + 1;
		}
	}

	// false when the point extent does not fit the packed cell range
	bool build(const PointCloud& cloud, double cell_size) {
		cell = cell_size;
		d = cloud.d;
		if (d > grid_max_dim) return false;
		const std::int64_t n = cloud.size();
		if (n == 0) return true;
		double hi[grid_max_dim];
		for (int t = 0; t < d; ++t) origin[t] = hi[t] = cloud.point(0)[t];
		for (std::int64_t i = 1; i < n; ++i) {
			const double* p = cloud.point(i);
			for (int t = 0; t < d; ++t) {
				origin[t] = std::min(origin[t], p[t]);
				hi[t] = std::max(hi[t], p[t]);
			}
		}
		for (int t = 0; t < d; ++t) {
			if ((hi[t] - origin[t]) / cell > 65000.0) return false;
		}
		buckets.reserve(static_cast<std::size_t>(n));
		std::int32_t c[grid_max_dim];
		for (std::int64_t i = 0; i < n; ++i) {
			locate(cloud.point(i), c);
			buckets[pack(c, d)].push_back(static_cast<std::int32_t>(i));
		}
		return true;
	}

	template <typename Fn>
	void for_neighborhood(const double* p, Fn&& fn) const {
		std::int32_t base[grid_max_dim], c[grid_max_dim];
		locate(p, base);
		int total = 1;
		for (int t = 0; t < d; ++t) total *= 3;
		for (int m = 0; m < total; ++m) {
			int rem = m;
			for (int t = 0; t < d; ++t) {
				c[t] = base[t] + (rem % 3) - 1;
				rem /= 3;
			}
			const auto it = buckets.find(pack(c, d));
			if (it == buckets.end()) continue;
			for (std::int32_t j : it->second) fn(j);
		}
	}
};

double edge_threshold_sq(double threshold) {
	const double thr = threshold + 2.0 * miniball_tolerance;
	return thr * thr;
}

}  // namespace

std::vector<std::pair<std::int32_t, std::int32_t>> geometric_edges_serial(
    const PointCloud& cloud, double threshold) {
	cloud.validate_finite();
	const std::int64_t n = cloud.size();
	const double thr2 = edge_threshold_sq(threshold);
	std::vector<std::pair<std::int32_t, std::int32_t>> edges;
	for (std::int64_t i = 0; i < n; ++i) {
		for (std::int64_t j = i + 1; j < n; ++j) {
			if (squared_distance(cloud.point(i), cloud.point(j), cloud.d) <= thr2) {
				edges.emplace_back(static_cast<std::int32_t>(i), static_cast<std::int32_t>(j));
			}
		}
	}
	return edges;
}

std::vector<std::vector<std::int32_t>> geometric_adjacency(const PointCloud& cloud,
                                                           double threshold) {
	cloud.validate_finite();
	const std::int64_t n = cloud.size();
	std::vector<std::vector<std::int32_t>> adj(n);
	if (n == 0) return adj;

	const double thr2 = edge_threshold_sq(threshold);
	CellGrid grid;
	if (n < 64 || threshold <= 0.0 || !grid.build(cloud, threshold + 1e-8)) {
		for (const auto& [i, j] : geometric_edges_serial(cloud, threshold)) {
			adj[i].push_back(j);
			adj[j].push_back(i);
		}
		return adj;
	}

#pragma omp parallel for schedule(dynamic, 256)
	for (std::int64_t i = 0; i < n; ++i) {
		const double* pi = cloud.point(i);
		auto& out = adj[i];
		grid.for_neighborhood(pi, [&](std::int32_t j) {
			if (j != i && squared_distance(pi, cloud.point(j), cloud.d) <= thr2) {
				out.push_back(j);
			}
		});
		std::sort(out.begin(), out.end());
	}
	return adj;
}

std::vector<std::pair<std::int32_t, std::int32_t>> geometric_edges(
    const PointCloud& cloud, double threshold) {
	const auto adj = geometric_adjacency(cloud, threshold);
	std::vector<std::pair<std::int32_t, std::int32_t>> edges;
	for (std::size_t i = 0; i < adj.size(); ++i) {
		for (std::int32_t j : adj[i]) {
			if (j > static_cast<std::int32_t>(i)) edges.emplace_back(static_cast<std::int32_t>(i), j);
		}
	}
	return edges;
}

namespace {

SimplicialComplex cech_from_adjacency(const double* coords, int d, double radius,
                                      std::int64_t n,
                                      const std::vector<std::vector<std::int32_t>>& adj,
                                      int max_dim) {
	SimplicialComplex complex;
	complex.max_dim = max_dim;
	complex.cells.assign(max_dim + 1, {});
	for (std::int64_t v = 0; v < n; ++v) complex.cells[0].push_back({static_cast<std::int32_t>(v)});
	if (max_dim == 0) return complex;
	for (std::int64_t v = 0; v < n; ++v) {
		for (std::int32_t u : adj[v]) {
			if (u > v) complex.cells[1].push_back({static_cast<std::int32_t>(v), u});
		}
	}
	// Extend dimension by dimension.  Each t-simplex is reached exactly once,
	// from its face with the largest vertex dropped; the minimal-enclosing-ball
	// test alone decides membership (faces are covered by ball monotonicity).
	for (int t = 2; t <= max_dim; ++t) {
		const auto& prev = complex.cells[t - 1];
		auto& cur = complex.cells[t];
		for (const auto& s : prev) {
			const std::int32_t last = s.back();
			for (std::int32_t u : adj[last]) {
				if (u <= last) continue;
				bool adjacent_to_all = true;
				for (std::size_t i = 0; i + 1 < s.size() && adjacent_to_all; ++i) {
					adjacent_to_all = std::binary_search(adj[s[i]].begin(), adj[s[i]].end(), u);
				}
				if (!adjacent_to_all) continue;
				Simplex candidate = s;
				candidate.push_back(u);
				const Ball ball = min_enclosing_ball_indexed(coords, d, candidate);
				if (ball.radius <= radius + miniball_tolerance) cur.push_back(std::move(candidate));
			}
		}
		std::sort(cur.begin(), cur.end());
		if (cur.empty()) break;
	}
	return complex;
}

}  // namespace

SimplicialComplex build_cech_complex(const PointCloud& cloud, int max_dim) {
	if (max_dim < 0) throw std::invalid_argument("build_cech_complex: max_dim must be >= 0");
	cloud.validate_finite();
	const auto adj = geometric_adjacency(cloud, 2.0 * cloud.radius);
	return cech_from_adjacency(cloud.coords.data(), cloud.d, cloud.radius, cloud.size(), adj,
	                           max_dim);
}

SimplicialComplex build_cech_complex_subset(const PointCloud& cloud,
                                            const std::vector<std::int32_t>& index,
                                            int max_dim) {
	PointCloud sub(cloud.d, cloud.radius);
	sub.coords.reserve(index.size() * cloud.d);
	for (auto i : index) {
		const double* p = cloud.point(i);
		sub.coords.insert(sub.coords.end(), p, p + cloud.d);
	}
	return build_cech_complex(sub, max_dim);
}

}  // namespace bettilab
