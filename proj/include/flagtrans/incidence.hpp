#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "flagtrans/perm_group.hpp"

namespace flagtrans::design {

using Block = std::vector<Point>;

/// Fixed-width bitset over {0, ..., n-1}.
class PointSet {
 public:
  PointSet() = default;
  explicit PointSet(std::size_t n) : words_((n + 63) / 64, 0) {}

  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1u; }
  std::size_t count() const;
  std::size_t count_and(const PointSet& o) const;

 private:
  std::vector<std::uint64_t> words_;
};

/// Points 0..v-1 and a multiset of blocks. Blocks are kept in
/// lexicographic order, each a strictly increasing list of points.
class IncidenceStructure {
 public:
  IncidenceStructure() = default;
  /// Sorts each block and the block list. Throws std::invalid_argument on
  /// an empty block, a repeated point inside a block, or a point >= v.
  IncidenceStructure(std::size_t v, std::vector<Block> blocks);

  std::size_t v() const { return v_; }
  std::size_t b() const { return blocks_.size(); }
  const std::vector<Block>& blocks() const { return blocks_; }
  const Block& block(std::size_t i) const { return blocks_[i]; }
  const PointSet& block_set(std::size_t i) const { return block_sets_[i]; }
  /// Blocks through x, as a bitset over block indices.
  const PointSet& blocks_through(Point x) const { return point_rows_[x]; }
  /// Indices of the blocks through x, ascending.
  std::vector<std::size_t> block_indices_through(Point x) const;

  /// Image of every block under g, as a new structure.
  IncidenceStructure image(const Perm& g) const;

  friend bool operator==(const IncidenceStructure& a, const IncidenceStructure& b) {
    return a.v_ == b.v_ && a.blocks_ == b.blocks_;
  }

 private:
  std::size_t v_ = 0;
  std::vector<Block> blocks_;
  std::vector<PointSet> block_sets_;
  std::vector<PointSet> point_rows_;
};

/// {"v": int, "k": int, "blocks": [[...], ...]}; k is the first block's size
/// (0 when there are no blocks).
std::string to_json(const IncidenceStructure& d, int indent = -1);
/// Throws std::invalid_argument on malformed input.
IncidenceStructure from_json(const std::string& text);
/// One line "v b" followed by one line per block.
std::string to_text(const IncidenceStructure& d);

struct DesignParams {
  std::uint64_t v = 0, b = 0, k = 0, r = 0, lambda = 0;

  /// v r = b k and lambda (v - 1) = r (k - 1).
  bool counting_identities() const { return v * r == b * k && lambda * (v - 1) == r * (k - 1); }
  friend bool operator==(const DesignParams&, const DesignParams&) = default;
};

}  // namespace flagtrans::design
