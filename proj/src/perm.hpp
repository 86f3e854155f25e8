#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace permlat {

// Permutation of {1..n} in one-line form: image(k) is where k goes.
// Composition is left to right, so x*(a*b) = (x*a)*b. The inverse table is
// kept alongside; all queries are O(1) and values are immutable.
class Perm {
 public:
  explicit Perm(std::vector<int> images);

  static Perm identity(int n);
  static Perm reversal(int n);

  // One-line text form: digits concatenated for n <= 9 ("213"),
  // comma-separated for larger orders ("2,1,3").
  static Perm parse(const std::string& text);
  std::string str() const;

  int order() const { return static_cast<int>(images_.size()); }
  int image(int k) const { return images_[static_cast<std::size_t>(k) - 1]; }
  int position(int v) const {
    return positions_[static_cast<std::size_t>(v) - 1];
  }
  const std::vector<int>& images() const { return images_; }

  bool operator==(const Perm& o) const { return images_ == o.images_; }
  bool operator!=(const Perm& o) const { return images_ != o.images_; }
  bool operator<(const Perm& o) const { return images_ < o.images_; }

 private:
  std::vector<int> images_;
  std::vector<int> positions_;
};

struct PermHash {
  std::size_t operator()(const Perm& p) const;
};

// Partition of {1..n} into consecutive intervals (stored as inclusive
// [lo,hi] pairs in increasing order). Nontrivial when some block has
// size >= 2.
class OrderedPartition {
 public:
  OrderedPartition(int n, std::vector<std::pair<int, int>> blocks);

  int order() const { return n_; }
  const std::vector<std::pair<int, int>>& blocks() const { return blocks_; }
  bool nontrivial() const;
  std::size_t block_count() const { return blocks_.size(); }
  // 0-based index of the block containing x.
  int block_of(int x) const;
  // "{1},{2,3,4},{5}"
  std::string str() const;

  bool operator==(const OrderedPartition& o) const {
    return n_ == o.n_ && blocks_ == o.blocks_;
  }

 private:
  int n_;
  std::vector<std::pair<int, int>> blocks_;
};

// x*(a), then the result through b.
Perm compose(const Perm& a, const Perm& b);
Perm inverse(const Perm& a);

// x <_a y: x appears before y in the one-line form of a.
bool less_in(const Perm& a, int x, int y);

// Number of unordered pairs appearing in opposite order in a and b.
long long inversion_distance(const Perm& a, const Perm& b);

// d(a,g) + d(g,b) == d(a,b).
bool is_between(const Perm& a, const Perm& g, const Perm& b);

// The permutation reversing every block of a nontrivial partition.
Perm tau_of(const OrderedPartition& p);

// The unique nontrivial partition p with a*inverse(b) == tau_of(p), if any.
std::optional<OrderedPartition> adjacency_partition(const Perm& a,
                                                    const Perm& b);

}  // namespace permlat
