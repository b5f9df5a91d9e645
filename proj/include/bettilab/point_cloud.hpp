#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace bettilab {

// Points in R^d with an attached ball radius (the r of the Cech construction:
// a simplex enters the complex iff the smallest ball enclosing its vertices
// has radius <= r, so edges appear at pairwise distance <= 2r).
struct PointCloud {
	int d = 0;
	std::vector<double> coords;  // flat, point i at [i*d, (i+1)*d)
	double radius = 0.0;

	PointCloud() = default;
	PointCloud(int dim, double r) : d(dim), radius(r) {
		if (dim < 1) throw std::invalid_argument("PointCloud: d must be >= 1");
		if (!(r > 0.0)) throw std::invalid_argument("PointCloud: radius must be positive");
	}

	std::int64_t size() const { return d == 0 ? 0 : static_cast<std::int64_t>(coords.size()) / d; }
	const double* point(std::int64_t i) const { return coords.data() + i * d; }

	void push_point(const std::vector<double>& p) {
		if (static_cast<int>(p.size()) != d) throw std::invalid_argument("PointCloud: wrong dimension");
		for (double c : p) {
			if (!std::isfinite(c)) throw std::invalid_argument("PointCloud: non-finite coordinate");
		}
		coords.insert(coords.end(), p.begin(), p.end());
	}

	void validate_finite() const {
		for (double c : coords) {
			if (!std::isfinite(c)) throw std::invalid_argument("PointCloud: non-finite coordinate");
		}
	}
};

inline double squared_distance(const double* a, const double* b, int d) {
	double s = 0.0;
	for (int t = 0; t < d; ++t) {
		const double diff = a[t] - b[t];
		s += diff * diff;
	}
	return s;
}

}  // namespace bettilab
