#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cfr/designs.hpp"
#include "cfr/rational.hpp"
#include "cfr/skipcost.hpp"

namespace cfr {

/// Which size formula applies, by where r = k mod-bar (t-1) falls:
/// r = t-1, floor(t/q) <= r <= t-2, or 1 <= r <= floor(t/q) - 1.
enum class RemainderCase { kFull, kMid, kLow };

std::string to_string(RemainderCase c);

/// q = ceil(k/(t-1)) and r = k mod-bar (t-1), so k = (q-1)(t-1) + r.
struct RecursiveParams {
  int q = 0;
  int r = 0;
  RemainderCase tag = RemainderCase::kFull;
};

/// Throws DomainError unless 2 <= t <= k.
RecursiveParams recursive_params(int t, int k);

/// Closed-form block count of the recursive construction.
struct SizePrediction {
  std::int64_t predicted_blocks = 0;
  std::int64_t coefficient = 0;  // c1, c2 or c3 depending on `tag`
  RecursiveParams shape;
};

/// Closed-form |B*| for a base design with `base_blocks` distinct blocks.
SizePrediction predict_recursive_size(const DesignParams& params, std::int64_t base_blocks);

/// Limit of the recursive construction's expansion factor as v grows:
/// c_j(t,k) / q^t. Requires 2 <= t <= k.
Rational asymptotic_expansion(int t, int k);

/// Every block written twice (the block list, then the block list again),
/// ascending within columns. Zero skip cost at locality 1.
CfrArray construct_duplicate(const CoveringDesign& design);

/// Column count of construct_combination for the given block counts.
std::int64_t combination_columns(int t, int k, std::int64_t blocks_t, std::int64_t blocks_tm1);

/// Blocks of the strength-t design (ascending), then C(k,t-1) copies of each
/// block of the strength-(t-1) design with every (t-1)-subset leading, then,
/// when 2 <= r <= t-2, C(k,r) copies with every r-subset leading. Copies
/// are grouped by block, subsets in lexicographic order; prefix and suffix
/// are ascending. Throws ParameterError on mismatched (k, v) or strengths,
/// DomainError when t < 2.
CfrArray construct_combination(const CoveringDesign& design_t, const CoveringDesign& design_tm1);

enum class BlockFamily { kB1, kB2, kB3FromI1, kB3FromI2, kB4 };

std::string to_string(BlockFamily f);

struct RecursiveBuild {
  CoveringDesign design;  // (t, k, q*v)
  CfrArray array;         // columns ascending, grouped by family
  std::vector<BlockFamily> family;  // per column
  SizePrediction prediction;
  std::vector<std::string> warnings;
};

/// Builds the (t, k, qv) design from a (t, k, v) design by translating
/// copies of [v] and writes its blocks ascending as columns.
///
/// Families are emitted in the order B1, B2, B3 (I1 and I2 index vectors
/// together), B4, each in lexicographic block order. The final block count
/// is checked against predict_recursive_size() and a mismatch raises
/// ConsistencyError. Duplicate base blocks raise ParameterError.
///
/// The base design should satisfy ceil((v-t+1)/(k-t+1)) >= q; a failure is
/// reported in `warnings`, or raised as ConstructionError when `strict`.
RecursiveBuild construct_recursive(const CoveringDesign& design, bool strict = false);

/// Locality the zero-skip guarantee of each construction is stated at.
int construction_locality(const std::string& method, int t, int k);

}  // namespace cfr
