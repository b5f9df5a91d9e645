#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace bettilab {

constexpr std::uint64_t golden_gamma = 0x9e3779b97f4a7c15ULL;

inline std::uint64_t splitmix64(std::uint64_t x) {
	x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
	x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
	return x ^ (x >> 31);
}

// Seed-splitting rule: trial i of a battery with master seed s draws its
// stream from the splitmix64 counter sequence at position i+1.
inline std::uint64_t trial_seed(std::uint64_t master_seed, std::uint64_t trial_index) {
	return splitmix64(master_seed + golden_gamma * (trial_index + 1));
}

// Deterministic variate stream over xoshiro256**.  Everything derives from
// raw 64-bit output, never from std::*_distribution, so identical seeds
// reproduce identical values on every platform.
class Rng {
public:
	explicit Rng(std::uint64_t seed) {
		std::uint64_t x = seed;
		for (auto& word : state_) word = splitmix64(x += golden_gamma);
	}

	std::uint64_t next_u64() {
		const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
		const std::uint64_t t = state_[1] << 17;
		state_[2] ^= state_[0];
		state_[3] ^= state_[1];
		state_[1] ^= state_[2];
		state_[0] ^= state_[3];
		state_[2] ^= t;
		state_[3] = rotl(state_[3], 45);
		return result;
	}

	// uniform on [0, 1), 53-bit resolution
	double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

	// uniform on (0, 1]
	double uniform_pos() { return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53; }

	bool bernoulli(double p) { return uniform() < p; }

	// integer in [0, bound)
	std::uint64_t below(std::uint64_t bound) {
		return static_cast<std::uint64_t>(
		    (static_cast<unsigned __int128>(next_u64()) * bound) >> 64);
	}

	double normal() {
		const double u = uniform_pos();
		const double v = uniform();
		return std::sqrt(-2.0 * std::log(u)) * std::cos(2.0 * 3.14159265358979323846 * v);
	}

	// Exact Poisson(mean) by chunked sequential inversion; O(mean) time.
	std::int64_t poisson(double mean) {
		if (mean < 0.0 || !std::isfinite(mean)) throw std::invalid_argument("poisson: bad mean");
		std::int64_t total = 0;
		while (mean > 0.0) {
			const double chunk = mean > 256.0 ? 256.0 : mean;
			mean -= chunk;
			double p = std::exp(-chunk);
			double cdf = p;
			const double u = uniform();
			std::int64_t x = 0;
			const std::int64_t cap = static_cast<std::int64_t>(10.0 * chunk) + 200;
			while (u > cdf && x < cap) {
				++x;
				p *= chunk / static_cast<double>(x);
				cdf += p;
			}
			total += x;
		}
		return total;
	}

private:
	static std::uint64_t rotl(std::uint64_t x, int s) { return (x << s) | (x >> (64 - s)); }
	std::uint64_t state_[4];
};

}  // namespace bettilab
