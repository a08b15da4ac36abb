#pragma once

// Extended binary Golay code and the octads of the Witt design S(5,8,24).
// A 24-bit mask stores a subset of {1..24}: bit k is point k+1.

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

namespace eqlines {

using PointSet = uint32_t;

/// Rows g(x) x^i, i = 0..11, of the cyclic [23,12] code generated by
/// g(x) = x^11 + x^10 + x^6 + x^5 + x^4 + x^2 + 1, each extended by a
/// parity bit in position 23.
std::array<PointSet, 12> golay_generator_rows();

/// FNV-1a over the little-endian bytes of the generator rows.
uint64_t golay_generator_hash();
inline constexpr uint64_t kGolayGeneratorHash = 0x345db8f6c8992545ULL;

/// All 4096 codewords, sorted.
std::vector<PointSet> golay_codewords();

/// The 759 weight-8 codewords, sorted.
std::vector<PointSet> golay_octads();

std::vector<int> points_of(PointSet s);
PointSet set_of(const std::vector<int>& points);

/// Every 5-subset of {1..24} lies in exactly one block; returns the number of
/// 5-subsets covered once (42504 for a Steiner system S(5,8,24)).
size_t steiner_coverage(const std::vector<PointSet>& blocks);

/// Finds a relabelling f of {1..24} with f(B) a block of `design` for every
/// B in `wanted`. Result maps label -> design label, index 0 unused.
std::optional<std::array<int, 25>> embed_blocks(const std::vector<PointSet>& design,
                                                const std::vector<PointSet>& wanted);

}  // namespace eqlines
