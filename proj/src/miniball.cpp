#include "bettilab/miniball.hpp"

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>

#include "bettilab/point_cloud.hpp"

namespace bettilab {

bool Ball::contains(const double* p, int d, double tol) const {
	if (radius < 0.0) return false;
	const double r = radius + tol;
	return squared_distance(center.data(), p, d) <= r * r;
}

namespace {

// Ball with the support points on its boundary: solve for the circumcenter
// in the affine basis of the support set.  Near-singular directions (support
// close to affinely dependent) are projected out.
Ball ball_from_support(const std::vector<const double*>& support, int d) {
	Ball ball;
	const int m = static_cast<int>(support.size());
	if (m == 0) return ball;
	ball.center.assign(support[0], support[0] + d);
	ball.radius = 0.0;
	if (m == 1) return ball;

	const int k = m - 1;
	// A x = b with A_ij = 2 (p_i - p_0).(p_j - p_0), b_i = |p_i - p_0|^2
	std::vector<double> a(static_cast<std::size_t>(k) * k), b(k);
	double scale = 0.0;
	for (int i = 0; i < k; ++i) {
		for (int j = 0; j < k; ++j) {
			double dot = 0.0;
			for (int t = 0; t < d; ++t) {
				dot += (support[i + 1][t] - support[0][t]) * (support[j + 1][t] - support[0][t]);
			}
			a[static_cast<std::size_t>(i) * k + j] = 2.0 * dot;
			if (i == j) {
				b[i] = dot;
				scale = std::max(scale, dot);
			}
		}
	}
	std::vector<double> x(k, 0.0);
	std::vector<int> col(k);
	for (int i = 0; i < k; ++i) col[i] = i;
	const double pivot_floor = 1e-12 * std::max(scale, 1.0);
	int rank = 0;
	for (int step = 0; step < k; ++step) {
		int pr = -1, pc = -1;
		double best = pivot_floor;
		for (int i = rank; i < k; ++i) {
			for (int j = rank; j < k; ++j) {
				const double v = std::fabs(a[static_cast<std::size_t>(i) * k + col[j]]);
				if (v > best) {
					best = v;
					pr = i;
					pc = j;
				}
			}
		}
		if (pr < 0) break;
		for (int j = 0; j < k; ++j) std::swap(a[static_cast<std::size_t>(pr) * k + j], a[static_cast<std::size_t>(rank) * k + j]);
		std::swap(b[pr], b[rank]);
		std::swap(col[pc], col[rank]);
		const double piv = a[static_cast<std::size_t>(rank) * k + col[rank]];
		for (int i = rank + 1; i < k; ++i) {
			const double f = a[static_cast<std::size_t>(i) * k + col[rank]] / piv;
			if (f == 0.0) continue;
			for (int j = rank; j < k; ++j) {
				a[static_cast<std::size_t>(i) * k + col[j]] -= f * a[static_cast<std::size_t>(rank) * k + col[j]];
			}
			b[i] -= f * b[rank];
		}
		++rank;
	}
	for (int i = rank - 1; i >= 0; --i) {
		double s = b[i];
		for (int j = i + 1; j < k; ++j) s -= a[static_cast<std::size_t>(i) * k + col[j]] * x[col[j]];
		x[col[i]] = s / a[static_cast<std::size_t>(i) * k + col[i]];
	}
	for (int j = 0; j < k; ++j) {
		for (int t = 0; t < d; ++t) {
			ball.center[t] += x[j] * (support[j + 1][t] - support[0][t]);
		}
	}
	ball.radius = std::sqrt(squared_distance(ball.center.data(), support[0], d));
	return ball;
}

Ball welzl(std::vector<const double*>& pts, std::size_t count,
           std::vector<const double*>& support, int d) {
	if (count == 0 || static_cast<int>(support.size()) == d + 1) {
		return ball_from_support(support, d);
	}
	Ball ball = welzl(pts, count - 1, support, d);
	const double* p = pts[count - 1];
	if (ball.contains(p, d, miniball_tolerance)) return ball;
	support.push_back(p);
	ball = welzl(pts, count - 1, support, d);
	support.pop_back();
	// move-to-front keeps hard points early in later calls
	for (std::size_t i = count - 1; i > 0; --i) pts[i] = pts[i - 1];
	pts[0] = p;
	return ball;
}

Ball solve(std::vector<const double*>& pts, int d) {
	if (pts.empty()) throw std::invalid_argument("min_enclosing_ball: empty input");
	std::mt19937_64 shuffler(0x5eedba11u);  // deterministic by construction
	for (std::size_t i = pts.size() - 1; i > 0; --i) {
		std::swap(pts[i], pts[shuffler() % (i + 1)]);
	}
	std::vector<const double*> support;
	support.reserve(d + 1);
	return welzl(pts, pts.size(), support, d);
}

}  // namespace

Ball min_enclosing_ball(const std::vector<std::vector<double>>& points) {
	if (points.empty()) throw std::invalid_argument("min_enclosing_ball: empty input");
	const int d = static_cast<int>(points[0].size());
	std::vector<const double*> pts;
	pts.reserve(points.size());
	for (const auto& p : points) {
		if (static_cast<int>(p.size()) != d) throw std::invalid_argument("min_enclosing_ball: mixed dimensions");
		pts.push_back(p.data());
	}
	return solve(pts, d);
}

Ball min_enclosing_ball_indexed(const double* coords, int d,
                                const std::vector<std::int32_t>& index) {
	if (index.empty()) throw std::invalid_argument("min_enclosing_ball: empty input");
	std::vector<const double*> pts;
	pts.reserve(index.size());
	for (auto i : index) pts.push_back(coords + static_cast<std::size_t>(i) * d);
	return solve(pts, d);
}

}  // namespace bettilab
