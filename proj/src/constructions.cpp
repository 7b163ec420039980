#include "cfr/constructions.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "cfr/combinatorics.hpp"
#include "cfr/errors.hpp"

namespace cfr {

std::string to_string(RemainderCase c) {
  switch (c) {
    case RemainderCase::kFull: return "r=t-1";
    case RemainderCase::kMid: return "floor(t/q)<=r<=t-2";
    case RemainderCase::kLow: return "1<=r<=floor(t/q)-1";
  }
  return "?";
}

std::string to_string(BlockFamily f) {
  switch (f) {
    case BlockFamily::kB1: return "B1";
    case BlockFamily::kB2: return "B2";
    case BlockFamily::kB3FromI1: return "B3/I1";
    case BlockFamily::kB3FromI2: return "B3/I2";
    case BlockFamily::kB4: return "B4";
  }
  return "?";
}

RecursiveParams recursive_params(int t, int k) {
  if (t < 2 || k < t) throw DomainError("recursive parameters need 2 <= t <= k");
  RecursiveParams p;
  p.q = static_cast<int>(ceil_div(k, t - 1));
  p.r = static_cast<int>(mod_bar(k, t - 1));
  const int floor_tq = t / p.q;
  if (p.r == t - 1) {
    p.tag = RemainderCase::kFull;
  } else if (floor_tq <= p.r) {
    p.tag = RemainderCase::kMid;
  } else {
    p.tag = RemainderCase::kLow;
  }
  return p;
}

namespace {

// k! / prod(parts!) as an exact integer; `parts` sum to k.
Rational multinomial(int k, std::initializer_list<std::pair<int, int>> part_powers) {
  Rational x(factorial(k));
  for (const auto& [size, power] : part_powers) {
    for (int i = 0; i < power; ++i) x /= factorial(size);
  }
  return x;
}

std::int64_t as_integer(const Rational& x, const char* what) {
  if (x.denominator() != 1) {
    throw ConsistencyError(std::string("non-integral ") + what + ": " + to_string(x));
  }
  return x.numerator();
}

// c1, c2 or c3 as selected by the remainder case.
Rational size_coefficient(int t, int k, const RecursiveParams& p) {
  const int q = p.q, r = p.r;
  if (p.tag == RemainderCase::kFull) {
    return multinomial(k, {{t - 1, q}}) +
           Rational(q * (q - 1)) * multinomial(k, {{2 * t - 2, 1}, {t - 1, q - 2}});
  }
  Rational c2 = Rational(q) * multinomial(k, {{r, 1}, {t - 1, q - 1}}) +
                Rational(q * (q - 1)) * multinomial(k, {{t - 1 + r, 1}, {t - 1, q - 2}});
  if (p.tag == RemainderCase::kMid) return c2;
  Rational extra(0);
  for (int m = r + 1; m <= t / q; ++m) {
    extra += multinomial(k, {{m, 1}, {t - 1 + r - m, 1}, {t - 1, q - 2}});
  }
  return c2 + Rational(q * (q - 1)) * extra;
}

}  // namespace

SizePrediction predict_recursive_size(const DesignParams& params, std::int64_t base_blocks) {
  params.validate();
  if (base_blocks < 0) throw DomainError("base block count must be nonnegative");
  const int t = params.t, k = params.k, v = params.v;
  SizePrediction s;
  s.shape = recursive_params(t, k);
  const int q = s.shape.q, r = s.shape.r;
  s.coefficient = as_integer(size_coefficient(t, k, s.shape), "size coefficient");
  const std::int64_t tm1_subsets = binomial(v, t - 1);
  std::int64_t extra = 0;
  switch (s.shape.tag) {
    case RemainderCase::kFull:
      extra = tm1_subsets;
      break;
    case RemainderCase::kMid:
      extra = q * binomial(t - 1, r) * tm1_subsets;
      break;
    case RemainderCase::kLow:
      extra = q * binomial(t - 1, r) * tm1_subsets;
      for (int m = r + 1; m <= t / q; ++m) {
        extra += static_cast<std::int64_t>(q) * (q - 1) * binomial(t - 1, m) *
                 binomial(t - 1, t - 1 + r - m) * tm1_subsets;
      }
      break;
  }
  s.predicted_blocks = s.coefficient * base_blocks + extra;
  return s;
}

Rational asymptotic_expansion(int t, int k) {
  const auto p = recursive_params(t, k);
  Rational q_pow(1);
  for (int i = 0; i < t; ++i) q_pow *= p.q;
  return size_coefficient(t, k, p) / q_pow;
}

CfrArray construct_duplicate(const CoveringDesign& design) {
  return array_from_design(multiply_design(design, 2));
}

std::int64_t combination_columns(int t, int k, std::int64_t blocks_t, std::int64_t blocks_tm1) {
  if (t < 2) throw DomainError("combination construction needs t >= 2");
  const auto r = mod_bar(k, t - 1);
  std::int64_t copies = binomial(k, t - 1);
  if (r >= 2 && r <= t - 2) copies += binomial(k, r);
  return blocks_t + copies * blocks_tm1;
}

namespace {

// Columns of `block` with each `lead`-subset first, subsets in
// lexicographic order.
void append_leading_copies(const Block& block, int lead, std::vector<std::vector<int>>& out) {
  for_each_combination(block, lead, [&](std::span<const int> prefix) {
    std::vector<int> col(prefix.begin(), prefix.end());
    for (int x : block) {
      if (!std::binary_search(prefix.begin(), prefix.end(), x)) col.push_back(x);
    }
    out.push_back(std::move(col));
    return true;
  });
}

}  // namespace

CfrArray construct_combination(const CoveringDesign& design_t, const CoveringDesign& design_tm1) {
  const auto& p = design_t.params();
  const auto& p2 = design_tm1.params();
  if (p.t < 2) throw DomainError("combination construction needs t >= 2");
  if (p.k != p2.k || p.v != p2.v) {
    throw ParameterError("designs must share k and v, got " + to_string(p) + " and " +
                         to_string(p2));
  }
  if (p2.t != p.t - 1) {
    throw ParameterError("second design must have strength t-1 = " + std::to_string(p.t - 1));
  }
  const int r = static_cast<int>(mod_bar(p.k, p.t - 1));
  std::vector<std::vector<int>> columns(design_t.blocks().begin(), design_t.blocks().end());
  for (const auto& block : design_tm1.blocks()) append_leading_copies(block, p.t - 1, columns);
  if (r >= 2 && r <= p.t - 2) {
    for (const auto& block : design_tm1.blocks()) append_leading_copies(block, r, columns);
  }
  const auto expected = combination_columns(p.t, p.k, static_cast<std::int64_t>(design_t.size()),
                                            static_cast<std::int64_t>(design_tm1.size()));
  if (static_cast<std::int64_t>(columns.size()) != expected) {
    throw ConsistencyError("combination construction produced " +
                           std::to_string(columns.size()) + " columns, expected " +
                           std::to_string(expected));
  }
  return CfrArray(p.k, p.v, std::move(columns));
}

namespace {

// Calls `visit` with every index vector in [1,q]^k (as 1-based copy
// numbers per position) whose per-copy counts are a permutation of
// `profile`.
void for_each_index_vector(int k, std::vector<int> profile,
                           const std::function<void(const std::vector<int>&)>& visit) {
  std::sort(profile.begin(), profile.end());
  const int q = static_cast<int>(profile.size());
  std::vector<int> index(k);
  std::vector<int> remaining;
  std::function<void(int)> fill = [&](int pos) {
    if (pos == k) {
      visit(index);
      return;
    }
    for (int c = 0; c < q; ++c) {
      if (remaining[c] == 0) continue;
      --remaining[c];
      index[pos] = c + 1;
      fill(pos + 1);
      ++remaining[c];
    }
  };
  do {
    remaining = profile;
    fill(0);
  } while (std::next_permutation(profile.begin(), profile.end()));
}

// All orderings (i_1, ..., i_q) of [q].
std::vector<std::vector<int>> copy_orderings(int q) {
  std::vector<int> perm(q);
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

class FamilyCollector {
 public:
  void add(Block block, BlockFamily family) {
    std::sort(block.begin(), block.end());
    const auto [it, inserted] = owner_.emplace(block, family);
    if (!inserted && it->second != family) {
      throw ConsistencyError("block families " + to_string(it->second) + " and " +
                             to_string(family) + " overlap");
    }
  }
  const std::map<Block, BlockFamily>& blocks() const { return owner_; }

 private:
  std::map<Block, BlockFamily> owner_;
};

}  // namespace

RecursiveBuild construct_recursive(const CoveringDesign& design, bool strict) {
  const auto& p = design.params();
  if (p.t < 2) throw DomainError("recursive construction needs t >= 2");
  if (design.has_duplicate_blocks()) {
    throw ParameterError("recursive construction needs distinct base blocks");
  }
  RecursiveBuild out;
  const auto shape = recursive_params(p.t, p.k);
  const int q = shape.q, r = shape.r, t = p.t, k = p.k, v = p.v;
  const auto locality = is_properly_local(p);
  if (!locality.weak) {
    const std::string msg = "base design " + to_string(p) +
                            " has ceil((v-t+1)/(k-t+1)) = " + std::to_string(locality.lhs) +
                            " < q = " + std::to_string(locality.q);
    if (strict) throw ConstructionError(msg);
    out.warnings.push_back(msg);
  } else if (!locality.properly_local) {
    out.warnings.push_back("base design " + to_string(p) + " is not properly local");
  }

  auto point = [v](int x, int copy) { return x + (copy - 1) * v; };
  FamilyCollector families;
  std::vector<int> points(v);
  std::iota(points.begin(), points.end(), 1);
  const auto orderings = copy_orderings(q);

  // B1: U in q-1 copies, V (an r-subset of U) in the remaining one.
  for_each_combination(points, t - 1, [&](std::span<const int> u) {
    for_each_combination(u, r, [&](std::span<const int> vset) {
      for (const auto& order : orderings) {
        Block block;
        for (int j = 0; j < q - 1; ++j) {
          for (int x : u) block.push_back(point(x, order[j]));
        }
        for (int x : vset) block.push_back(point(x, order[q - 1]));
        families.add(std::move(block), BlockFamily::kB1);
      }
      return true;
    });
    return true;
  });

  // B2: U in q-2 copies, V (size m) and W (size t-1+r-m) in the other two.
  if (shape.tag == RemainderCase::kLow) {
    for_each_combination(points, t - 1, [&](std::span<const int> u) {
      for (int m = r + 1; m <= t / q; ++m) {
        for_each_combination(u, m, [&](std::span<const int> vset) {
          for_each_combination(u, t - 1 + r - m, [&](std::span<const int> wset) {
            for (const auto& order : orderings) {
              Block block;
              for (int j = 0; j < q - 2; ++j) {
                for (int x : u) block.push_back(point(x, order[j]));
              }
              for (int x : vset) block.push_back(point(x, order[q - 2]));
              for (int x : wset) block.push_back(point(x, order[q - 1]));
              families.add(std::move(block), BlockFamily::kB2);
            }
            return true;
          });
          return true;
        });
      }
      return true;
    });
  }

  // B3 and B4: each base block lifted along index vectors with the
  // given count profiles.
  auto lift = [&](const std::vector<int>& profile, BlockFamily family) {
    for (const auto& base : design.blocks()) {
      for_each_index_vector(k, profile, [&](const std::vector<int>& index) {
        Block block(k);
        for (int j = 0; j < k; ++j) block[j] = point(base[j], index[j]);
        families.add(std::move(block), family);
      });
    }
  };
  std::vector<int> i1(q, t - 1);
  i1[0] = r;
  lift(i1, BlockFamily::kB3FromI1);
  std::vector<int> i2(q, t - 1);
  i2[0] = 0;
  i2[1] = t - 1 + r;
  lift(i2, BlockFamily::kB3FromI2);
  if (shape.tag == RemainderCase::kLow) {
    for (int m = r + 1; m <= t / q; ++m) {
      std::vector<int> i3(q, t - 1);
      i3[0] = m;
      i3[1] = t - 1 + r - m;
      lift(i3, BlockFamily::kB4);
    }
  }

  // Canonical column order: family groups, lexicographic inside each.
  std::vector<Block> blocks;
  const BlockFamily group_order[] = {BlockFamily::kB1, BlockFamily::kB2,
                                     BlockFamily::kB3FromI1, BlockFamily::kB4};
  for (auto group : group_order) {
    for (const auto& [block, family] : families.blocks()) {
      const bool in_group = group == BlockFamily::kB3FromI1
                                ? (family == BlockFamily::kB3FromI1 ||
                                   family == BlockFamily::kB3FromI2)
                                : family == group;
      if (!in_group) continue;
      blocks.push_back(block);
      out.family.push_back(family);
    }
  }

  out.prediction = predict_recursive_size(p, static_cast<std::int64_t>(design.size()));
  if (static_cast<std::int64_t>(blocks.size()) != out.prediction.predicted_blocks) {
    throw ConsistencyError("recursive construction produced " + std::to_string(blocks.size()) +
                           " blocks, closed form predicts " +
                           std::to_string(out.prediction.predicted_blocks));
  }
  const DesignParams lifted{t, k, q * v};
  out.array = CfrArray(k, q * v, blocks);
  out.design = CoveringDesign(lifted, std::move(blocks));
  return out;
}

int construction_locality(const std::string& method, int t, int k) {
  if (method == "dup") return 1;
  return default_locality(t, k);
}

}  // namespace cfr
