#pragma once

#include <span>
#include <vector>

namespace cfr {

/// Enumerates set partitions of {0, ..., n-1} into at most `max_parts`
/// nonempty parts as restricted growth strings, in lexicographic order.
///
/// A restricted growth string a satisfies a[0] = 0 and
/// a[i] <= 1 + max(a[0..i-1]); element i belongs to part a[i].
class SetPartitions {
 public:
  SetPartitions(int n, int max_parts);

  /// Current string; empty once exhausted (or when n == 0 after the first
  /// and only, empty partition).
  std::span<const int> rgs() const { return rgs_; }
  int parts() const { return parts_; }
  bool done() const { return done_; }

  /// Advances to the next partition. Returns false when exhausted.
  bool next();

  /// Materializes the parts, each listing element indices ascending.
  std::vector<std::vector<int>> blocks() const;

 private:
  int n_;
  int max_parts_;
  std::vector<int> rgs_;
  std::vector<int> prefix_max_;  // prefix_max_[i] = max(rgs_[0..i])
  int parts_ = 0;
  bool done_ = false;
};

/// Number of partitions of an n-set into at most m parts (sum of Stirling
/// numbers of the second kind); Bell(n) when m >= n.
long long count_partitions(int n, int max_parts);

}  // namespace cfr
