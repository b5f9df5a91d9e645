#pragma once

#include <cstdint>
#include <vector>

namespace bettilab {

struct Ball {
	std::vector<double> center;
	double radius = -1.0;  // negative: no ball yet

	bool contains(const double* p, int d, double tol) const;
};

// Smallest enclosing ball, Welzl's move-to-front algorithm with a fixed
// internal shuffle seed.  Containment tolerance 1e-9 on the radius.
// Throws on an empty input.
Ball min_enclosing_ball(const std::vector<std::vector<double>>& points);

// Same, over a flat coordinate array restricted to `index` (used by the Cech
// builder to test candidate simplices without copying points).
Ball min_enclosing_ball_indexed(const double* coords, int d,
                                const std::vector<std::int32_t>& index);

constexpr double miniball_tolerance = 1e-9;

}  // namespace bettilab
