#pragma once

#include <vector>

namespace sspb {

// Contiguous span of descriptor dimensions belonging to one spatial bin.
struct GroupSpan {
  int offset = 0;
  int length = 0;
};

// Ordered, non-overlapping spans covering a descriptor end to end.
struct GroupStructure {
  std::vector<GroupSpan> groups;

  int count() const { return static_cast<int>(groups.size()); }
  int dim() const {
    return groups.empty() ? 0 : groups.back().offset + groups.back().length;
  }
  // All groups share one length (4 for edge bins, channel count for conv bins).
  static GroupStructure uniform(int group_count, int group_length);
  void validate() const;  // throws std::invalid_argument if spans don't partition
};

// Surviving group indices after sparsity-driven selection, sorted ascending.
struct BinSelection {
  std::vector<int> kept;
  double lambda = 0.0;  // regularizer strength that produced this selection

  bool empty() const { return kept.empty(); }
  int count() const { return static_cast<int>(kept.size()); }
};

}  // namespace sspb
