#include "cfr/designs.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

#include "cfr/combinatorics.hpp"
#include "cfr/errors.hpp"

namespace cfr {

void DesignParams::validate() const {
  if (!(1 <= t && t <= k && k <= v)) {
    throw DomainError("design parameters must satisfy 1 <= t <= k <= v, got " +
                      to_string(*this));
  }
}

std::string to_string(const DesignParams& p) {
  return "(" + std::to_string(p.t) + "," + std::to_string(p.k) + "," +
         std::to_string(p.v) + ")";
}

namespace {

void canonicalize(Block& block, const DesignParams& params, int line) {
  for (int x : block) {
    if (x < 1 || x > params.v) {
      throw RangeError("point " + std::to_string(x) + " outside [1," +
                           std::to_string(params.v) + "]",
                       line);
    }
  }
  std::sort(block.begin(), block.end());
  if (std::adjacent_find(block.begin(), block.end()) != block.end()) {
    throw ArityError("block repeats a point", line);
  }
  if (static_cast<int>(block.size()) != params.k) {
    throw ArityError("block has " + std::to_string(block.size()) +
                         " points, expected k=" + std::to_string(params.k),
                     line);
  }
}

}  // namespace

CoveringDesign::CoveringDesign(DesignParams params, std::vector<Block> blocks)
    : params_(params), blocks_(std::move(blocks)) {
  params_.validate();
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    canonicalize(blocks_[i], params_, static_cast<int>(i) + 1);
  }
}

bool CoveringDesign::has_duplicate_blocks() const {
  std::set<Block> seen;
  for (const auto& b : blocks_) {
    if (!seen.insert(b).second) return true;
  }
  return false;
}

CoveringDesign parse_design(std::istream& in, const DesignParams& params) {
  params.validate();
  std::vector<Block> blocks;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    Block block;
    std::istringstream tokens(line);
    std::string tok;
    while (tokens >> tok) {
      int value = 0;
      const auto* end = tok.data() + tok.size();
      auto [ptr, ec] = std::from_chars(tok.data(), end, value);
      if (ec != std::errc() || ptr != end) {
        throw ParseError("malformed token '" + tok + "'", line_no);
      }
      block.push_back(value);
    }
    canonicalize(block, params, line_no);
    blocks.push_back(std::move(block));
  }
  return CoveringDesign(params, std::move(blocks));
}

CoveringDesign parse_design(const std::string& text, const DesignParams& params) {
  std::istringstream in(text);
  return parse_design(in, params);
}

CoveringDesign load_design(const std::filesystem::path& path, const DesignParams& params) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open design file " + path.string());
  return parse_design(in, params);
}

void write_design(std::ostream& out, const CoveringDesign& design) {
  for (const auto& block : design.blocks()) {
    for (std::size_t i = 0; i < block.size(); ++i) {
      if (i) out << ' ';
      out << block[i];
    }
    out << '\n';
  }
}

std::string serialize_design(const CoveringDesign& design) {
  std::ostringstream out;
  write_design(out, design);
  return out.str();
}

std::vector<std::int64_t> subset_replication(const CoveringDesign& design, int s) {
  const auto& p = design.params();
  if (s < 0 || s > p.k) throw DomainError("subset size out of range");
  std::vector<std::int64_t> counts(static_cast<std::size_t>(binomial(p.v, s)), 0);
  std::vector<int> zero_based(p.k);
  for (const auto& block : design.blocks()) {
    for (int i = 0; i < p.k; ++i) zero_based[i] = block[i] - 1;
    for_each_combination(zero_based, s, [&](std::span<const int> sub) {
      ++counts[colex_rank(sub)];
      return true;
    });
  }
  return counts;
}

std::vector<Block> verify_covering(const CoveringDesign& design) {
  const auto& p = design.params();
  const auto covered = subset_replication(design, p.t);
  std::vector<Block> missing;
  std::vector<int> points(p.v);
  for (int i = 0; i < p.v; ++i) points[i] = i + 1;
  std::vector<int> zero_based(p.t);
  for_each_combination(points, p.t, [&](std::span<const int> subset) {
    for (int i = 0; i < p.t; ++i) zero_based[i] = subset[i] - 1;
    if (covered[colex_rank(zero_based)] == 0) missing.emplace_back(subset.begin(), subset.end());
    return true;
  });
  return missing;
}

Rational replication_bound(const DesignParams& params, int s) {
  params.validate();
  if (s < 1 || s > params.t) {
    throw DomainError("replication_bound needs 1 <= s <= t, got s=" + std::to_string(s));
  }
  return Rational(binomial(params.v - s, params.t - s), binomial(params.k - s, params.t - s));
}

Rational min_blocks_bound(const DesignParams& params) {
  params.validate();
  return Rational(binomial(params.v, params.t), binomial(params.k, params.t));
}

LocalityCondition is_properly_local(const DesignParams& params) {
  params.validate();
  if (params.t < 2) throw DomainError("properly-local test needs t >= 2");
  LocalityCondition c;
  c.lhs = ceil_div(params.v - params.t + 1, params.k - params.t + 1);
  c.q = ceil_div(params.k, params.t - 1);
  c.properly_local = c.lhs >= c.q + 1;
  c.weak = c.lhs >= c.q;
  return c;
}

CoveringDesign multiply_design(const CoveringDesign& design, int n) {
  if (n < 1) throw DomainError("multiply_design needs n >= 1");
  std::vector<Block> blocks;
  blocks.reserve(design.size() * n);
  for (int i = 0; i < n; ++i) {
    blocks.insert(blocks.end(), design.blocks().begin(), design.blocks().end());
  }
  return CoveringDesign(design.params(), std::move(blocks));
}

CoveringDesign remove_duplicate_blocks(const CoveringDesign& design) {
  std::set<Block> seen;
  std::vector<Block> blocks;
  for (const auto& b : design.blocks()) {
    if (seen.insert(b).second) blocks.push_back(b);
  }
  return CoveringDesign(design.params(), std::move(blocks));
}

}  // namespace cfr
