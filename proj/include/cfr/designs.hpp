#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "cfr/rational.hpp"

namespace cfr {

/// (t, k, v): strength, block size, point count, with 1 <= t <= k <= v.
struct DesignParams {
  int t = 0;
  int k = 0;
  int v = 0;

  /// Throws DomainError unless 1 <= t <= k <= v.
  void validate() const;
  friend bool operator==(const DesignParams&, const DesignParams&) = default;
};

std::string to_string(const DesignParams& p);

/// A k-subset of [v], stored ascending.
using Block = std::vector<int>;

/// Blocks over [v] with their parameters. Blocks are canonical (sorted,
/// distinct, in range, of size k); the multiset keeps duplicates and file
/// order. Coverage is not implied by construction, see verify_covering().
class CoveringDesign {
 public:
  CoveringDesign() = default;

  /// Canonicalizes and validates every block; throws ArityError or
  /// RangeError (with the 1-based block index as the line) on bad blocks.
  CoveringDesign(DesignParams params, std::vector<Block> blocks);

  const DesignParams& params() const noexcept { return params_; }
  const std::vector<Block>& blocks() const noexcept { return blocks_; }
  std::size_t size() const noexcept { return blocks_.size(); }

  bool has_duplicate_blocks() const;

 private:
  DesignParams params_;
  std::vector<Block> blocks_;
};

/// Reads one block per line, whitespace-separated 1-based points. Blank
/// lines and lines starting with '#' are skipped.
CoveringDesign parse_design(std::istream& in, const DesignParams& params);
CoveringDesign parse_design(const std::string& text, const DesignParams& params);
CoveringDesign load_design(const std::filesystem::path& path, const DesignParams& params);

/// One block per line, ascending, space-separated, newline-terminated.
void write_design(std::ostream& out, const CoveringDesign& design);
std::string serialize_design(const CoveringDesign& design);

/// The t-subsets of [v] contained in no block, lexicographically ordered.
std::vector<Block> verify_covering(const CoveringDesign& design);

/// C(v-s, t-s) / C(k-s, t-s), the least number of blocks through any
/// s-subset. Throws DomainError unless 1 <= s <= t.
Rational replication_bound(const DesignParams& params, int s);

/// C(v, t) / C(k, t).
Rational min_blocks_bound(const DesignParams& params);

struct LocalityCondition {
  std::int64_t lhs = 0;  // ceil((v-t+1) / (k-t+1))
  std::int64_t q = 0;    // ceil(k / (t-1))
  bool properly_local = false;  // lhs >= q + 1
  bool weak = false;            // lhs >= q
};

/// Evaluates the properly-local condition. Throws DomainError for t = 1.
LocalityCondition is_properly_local(const DesignParams& params);

/// The block list repeated n times (n copies of every block). Throws
/// DomainError for n = 0.
CoveringDesign multiply_design(const CoveringDesign& design, int n);

/// Keeps the first occurrence of each distinct block.
CoveringDesign remove_duplicate_blocks(const CoveringDesign& design);

/// Number of blocks containing each s-subset of [v], indexed by colex rank.
std::vector<std::int64_t> subset_replication(const CoveringDesign& design, int s);

}  // namespace cfr
