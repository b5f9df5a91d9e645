#pragma once

#include <cstdint>
#include <vector>

#include "bettilab/simplicial_complex.hpp"

namespace bettilab {

// Bit-packed incidence of t-simplices (rows) against their facets (columns).
struct BoundaryMatrix {
	std::int64_t rows = 0;
	std::int64_t cols = 0;
	int words = 0;
	std::vector<std::uint64_t> bits;

	BoundaryMatrix() = default;
	BoundaryMatrix(std::int64_t r, std::int64_t c)
	    : rows(r), cols(c), words(static_cast<int>((c + 63) / 64)),
	      bits(static_cast<std::size_t>(r) * words, 0) {}

	std::uint64_t* row(std::int64_t r) { return bits.data() + static_cast<std::size_t>(r) * words; }
	const std::uint64_t* row(std::int64_t r) const {
		return bits.data() + static_cast<std::size_t>(r) * words;
	}
	void set(std::int64_t r, std::int64_t c) { row(r)[c >> 6] |= 1ULL << (c & 63); }
	bool get(std::int64_t r, std::int64_t c) const { return (row(r)[c >> 6] >> (c & 63)) & 1ULL; }
};

// entry (sigma, tau) set iff tau is a facet of sigma; dim must be a stored
// dimension of the complex
BoundaryMatrix boundary_matrix(const SimplicialComplex& complex, int dim);

// GF(2) rank by word-packed elimination, pivoting on the first set bit.
// rank_gf2 parallelizes the elimination sweep for large matrices; the serial
// version is the reference.
std::int64_t rank_gf2(const BoundaryMatrix& matrix);
std::int64_t rank_gf2_serial(const BoundaryMatrix& matrix);

// Rank over Q by Bareiss fraction-free elimination on exact integers.
// Oracle-scale only: dimensions capped at 500.
std::int64_t rational_rank(const BoundaryMatrix& matrix);

struct BettiVector {
	std::vector<std::int64_t> beta;
};

// beta_t = f_t - rank d_t - rank d_{t+1} for t <= max_k, with d_0 = 0.
// Requires the complex to store simplices up to dimension max_k + 1.
BettiVector betti_numbers(const SimplicialComplex& complex, int max_k);

// All Betti numbers of a complete complex (nothing stored above max_dim
// exists), with d_{top+1} = 0.
BettiVector betti_numbers_full(const SimplicialComplex& complex);

// Sum(-1)^i f_i == Sum(-1)^i beta_i, exact
bool euler_check(const SimplicialComplex& complex);

// d_{t-1} o d_t == 0 over GF(2)
bool boundary_square_is_zero(const SimplicialComplex& complex, int dim);

}  // namespace bettilab
