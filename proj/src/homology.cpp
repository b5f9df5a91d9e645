#include "bettilab/homology.hpp"

#include <algorithm>
#include <stdexcept>

#include "bettilab/rational.hpp"

namespace bettilab {

BoundaryMatrix boundary_matrix(const SimplicialComplex& complex, int dim) {
	if (dim < 1 || dim > complex.max_dim) {
		throw std::out_of_range("boundary_matrix: dim out of range");
	}
	const auto& simplices = complex.cells[dim];
	const auto& faces = complex.cells[dim - 1];
	BoundaryMatrix m(static_cast<std::int64_t>(simplices.size()),
	                 static_cast<std::int64_t>(faces.size()));
	Simplex face(dim);
	for (std::size_t r = 0; r < simplices.size(); ++r) {
		const auto& s = simplices[r];
		for (std::size_t drop = 0; drop < s.size(); ++drop) {
			std::size_t w = 0;
			for (std::size_t i = 0; i < s.size(); ++i) {
				if (i != drop) face[w++] = s[i];
			}
			const auto it = std::lower_bound(faces.begin(), faces.end(), face);
			if (it == faces.end() || *it != face) {
				throw std::logic_error("boundary_matrix: complex is not face-closed");
			}
			m.set(static_cast<std::int64_t>(r), it - faces.begin());
		}
	}
	return m;
}

namespace {

inline int leading_bit(const std::uint64_t* row, int words) {
	for (int w = 0; w < words; ++w) {
		if (row[w]) return (w << 6) + __builtin_ctzll(row[w]);
	}
	return -1;
}

}  // namespace

std::int64_t rank_gf2_serial(const BoundaryMatrix& matrix) {
	const std::int64_t rows = matrix.rows;
	const int words = matrix.words;
	if (rows == 0 || matrix.cols == 0) return 0;
	std::vector<std::uint64_t> work(matrix.bits);
	std::vector<std::int64_t> pivot_of_col(matrix.cols, -1);
	std::int64_t rank = 0;
	for (std::int64_t r = 0; r < rows; ++r) {
		std::uint64_t* row = work.data() + static_cast<std::size_t>(r) * words;
		for (;;) {
			const int lead = leading_bit(row, words);
			if (lead < 0) break;
			const std::int64_t p = pivot_of_col[lead];
			if (p < 0) {
				pivot_of_col[lead] = r;
				++rank;
				break;
			}
			const std::uint64_t* prow = work.data() + static_cast<std::size_t>(p) * words;
			for (int w = lead >> 6; w < words; ++w) row[w] ^= prow[w];
		}
	}
	return rank;
}

std::int64_t rank_gf2(const BoundaryMatrix& matrix) {
	const std::int64_t rows = matrix.rows;
	const std::int64_t cols = matrix.cols;
	const int words = matrix.words;
	if (rows == 0 || cols == 0) return 0;
	if (rows * words < (1 << 16)) return rank_gf2_serial(matrix);

	std::vector<std::uint64_t> work(matrix.bits);
	auto row = [&](std::int64_t r) { return work.data() + static_cast<std::size_t>(r) * words; };
	std::int64_t processed = 0;
	for (std::int64_t c = 0; c < cols && processed < rows; ++c) {
		const int w = static_cast<int>(c >> 6);
		const std::uint64_t mask = 1ULL << (c & 63);
		std::int64_t pivot = -1;
		for (std::int64_t r = processed; r < rows; ++r) {
			if (row(r)[w] & mask) {
				pivot = r;
				break;
			}
		}
		if (pivot < 0) continue;
		if (pivot != processed) {
			std::swap_ranges(row(pivot), row(pivot) + words, row(processed));
		}
		const std::uint64_t* prow = row(processed);
#pragma omp parallel for schedule(static)
		for (std::int64_t r = processed + 1; r < rows; ++r) {
			std::uint64_t* target = row(r);
			if (target[w] & mask) {
				for (int t = w; t < words; ++t) target[t] ^= prow[t];
			}
		}
		++processed;
	}
	return processed;
}

std::int64_t rational_rank(const BoundaryMatrix& matrix) {
	if (matrix.rows > 500 || matrix.cols > 500) {
		throw std::length_error("rational_rank: oracle capped at 500x500");
	}
	const int rows = static_cast<int>(matrix.rows);
	const int cols = static_cast<int>(matrix.cols);
	if (rows == 0 || cols == 0) return 0;
	std::vector<BigInt> m(static_cast<std::size_t>(rows) * cols);
	for (int r = 0; r < rows; ++r) {
		for (int c = 0; c < cols; ++c) m[static_cast<std::size_t>(r) * cols + c] = matrix.get(r, c) ? 1 : 0;
	}
	auto at = [&](int r, int c) -> BigInt& { return m[static_cast<std::size_t>(r) * cols + c]; };
	BigInt prev = 1;
	int rank = 0;
	for (int c = 0; c < cols && rank < rows; ++c) {
		int pivot = -1;
		for (int r = rank; r < rows; ++r) {
			if (at(r, c) != 0) {
				pivot = r;
				break;
			}
		}
		if (pivot < 0) continue;
		if (pivot != rank) {
			for (int j = 0; j < cols; ++j) std::swap(at(pivot, j), at(rank, j));
		}
		for (int r = rank + 1; r < rows; ++r) {
			for (int j = c + 1; j < cols; ++j) {
				at(r, j) = (at(r, j) * at(rank, c) - at(r, c) * at(rank, j)) / prev;
			}
			at(r, c) = 0;
		}
		prev = at(rank, c);
		++rank;
	}
	return rank;
}

namespace {

std::vector<std::int64_t> boundary_ranks(const SimplicialComplex& complex, int up_to_dim) {
	// ranks[t] = rank of d_t; d_0 = 0 and dimensions above max_dim are empty
	std::vector<std::int64_t> ranks(up_to_dim + 2, 0);
	for (int t = 1; t <= up_to_dim + 1; ++t) {
		if (t > complex.max_dim || complex.cells[t].empty()) continue;
		ranks[t] = rank_gf2(boundary_matrix(complex, t));
	}
	return ranks;
}

}  // namespace

BettiVector betti_numbers(const SimplicialComplex& complex, int max_k) {
	if (max_k < 0) throw std::invalid_argument("betti_numbers: max_k must be >= 0");
	BettiVector result;
	result.beta.assign(max_k + 1, 0);
	if (complex.max_dim < 0 || complex.cells[0].empty()) return result;  // empty complex
	if (complex.max_dim < max_k + 1) {
		throw std::invalid_argument("betti_numbers: complex not stored up to dimension max_k+1");
	}
	const auto ranks = boundary_ranks(complex, max_k);
	for (int t = 0; t <= max_k; ++t) {
		result.beta[t] = complex.count(t) - ranks[t] - ranks[t + 1];
	}
	return result;
}

BettiVector betti_numbers_full(const SimplicialComplex& complex) {
	BettiVector result;
	const int top = complex.top_dim();
	if (top < 0) return result;
	result.beta.assign(top + 1, 0);
	const auto ranks = boundary_ranks(complex, top);
	for (int t = 0; t <= top; ++t) {
		result.beta[t] = complex.count(t) - ranks[t] - ranks[t + 1];
	}
	return result;
}

bool euler_check(const SimplicialComplex& complex) {
	const auto betti = betti_numbers_full(complex);
	std::int64_t chi_f = 0, chi_b = 0;
	for (int t = 0; t <= complex.max_dim; ++t) chi_f += (t % 2 == 0 ? 1 : -1) * complex.count(t);
	for (std::size_t t = 0; t < betti.beta.size(); ++t) {
		chi_b += (t % 2 == 0 ? 1 : -1) * betti.beta[t];
	}
	return chi_f == chi_b;
}

bool boundary_square_is_zero(const SimplicialComplex& complex, int dim) {
	if (dim < 2 || dim > complex.max_dim) {
		throw std::out_of_range("boundary_square_is_zero: need dim >= 2 within the complex");
	}
	if (complex.cells[dim].empty()) return true;
	const BoundaryMatrix d_t = boundary_matrix(complex, dim);
	const BoundaryMatrix d_tm1 = boundary_matrix(complex, dim - 1);
	std::vector<std::uint64_t> acc(d_tm1.words);
	for (std::int64_t r = 0; r < d_t.rows; ++r) {
		std::fill(acc.begin(), acc.end(), 0);
		for (std::int64_t c = 0; c < d_t.cols; ++c) {
			if (!d_t.get(r, c)) continue;
			const std::uint64_t* frow = d_tm1.row(c);
			for (int w = 0; w < d_tm1.words; ++w) acc[w] ^= frow[w];
		}
		for (std::uint64_t w : acc) {
			if (w) return false;
		}
	}
	return true;
}

}  // namespace bettilab
