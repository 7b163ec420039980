#include "cfr/partitions.hpp"

#include <algorithm>

#include "cfr/errors.hpp"

namespace cfr {

SetPartitions::SetPartitions(int n, int max_parts)
    : n_(n), max_parts_(max_parts), rgs_(n, 0), prefix_max_(n, 0) {
  if (n < 0 || max_parts < 1) throw DomainError("SetPartitions needs n >= 0, max_parts >= 1");
  parts_ = n > 0 ? 1 : 0;
}

bool SetPartitions::next() {
  if (done_) return false;
  for (int i = n_ - 1; i >= 1; --i) {
    const int limit = std::min(prefix_max_[i - 1] + 1, max_parts_ - 1);
    if (rgs_[i] < limit) {
      ++rgs_[i];
      prefix_max_[i] = std::max(prefix_max_[i - 1], rgs_[i]);
      for (int j = i + 1; j < n_; ++j) {
        rgs_[j] = 0;
        prefix_max_[j] = prefix_max_[i];
      }
      parts_ = prefix_max_[n_ - 1] + 1;
      return true;
    }
  }
  done_ = true;
  return false;
}

std::vector<std::vector<int>> SetPartitions::blocks() const {
  std::vector<std::vector<int>> out(parts_);
  for (int i = 0; i < n_; ++i) out[rgs_[i]].push_back(i);
  return out;
}

long long count_partitions(int n, int max_parts) {
  // S(i, j) row by row.
  std::vector<long long> row(max_parts + 1, 0);
  row[0] = 1;
  for (int i = 1; i <= n; ++i) {
    for (int j = std::min(i, max_parts); j >= 1; --j) row[j] = j * row[j] + row[j - 1];
    row[0] = 0;
  }
  long long total = 0;
  for (int j = (n == 0 ? 0 : 1); j <= max_parts; ++j) total += row[j];
  return total;
}

}  // namespace cfr
