#ifndef FSX_NONREGULAR_H_
#define FSX_NONREGULAR_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fsx/bigint.h"
#include "fsx/representation.h"
#include "fsx/sequences.h"

namespace fsx {

// Sizes of disjoint blocks X_1, ..., X_s; every size >= 1.
class BlockPartition {
 public:
  explicit BlockPartition(std::vector<std::uint64_t> sizes);

  const std::vector<std::uint64_t>& sizes() const { return sizes_; }
  std::uint64_t total() const { return total_; }
  std::uint64_t max_size() const;

 private:
  std::vector<std::uint64_t> sizes_;
  std::uint64_t total_ = 0;
};

// Dense 0/1 matrix. Entry (i, j) = 1 means block X_i is matched to block Y_j
// by exactly one edge.
class BlockMatrix {
 public:
  BlockMatrix(std::size_t rows, std::size_t cols);
  static BlockMatrix from_bit_rows(std::span<const std::string> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool at(std::size_t i, std::size_t j) const { return bits_[i * cols_ + j] != 0; }
  void set(std::size_t i, std::size_t j, bool value);

  std::vector<std::uint64_t> row_sums() const;
  std::vector<std::uint64_t> col_sums() const;
  // Row-major "0"/"1" strings.
  std::vector<std::string> to_bit_rows() const;

  bool operator==(const BlockMatrix&) const = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::uint8_t> bits_;
};

// A 0/1 matrix with the given margins, greedy largest-demand-first. Throws
// Infeasible naming the violated Gale-Ryser prefix inequality.
BlockMatrix realize_margins(std::span<const std::uint64_t> row_sums,
                            std::span<const std::uint64_t> col_sums);

// Block matching for partitions of equal total with every block no larger
// than floor(sqrt(total)). Throws ContractViolation if that hypothesis fails.
BlockMatrix block_matching(const BlockPartition& rows, const BlockPartition& cols);

struct MatchedPair {
  std::size_t row_block = 0;
  std::uint64_t row_item = 0;
  std::size_t col_block = 0;
  std::uint64_t col_item = 0;

  bool operator==(const MatchedPair&) const = default;
};

// One element-level edge per 1-entry, items taken in order within blocks.
std::vector<MatchedPair> expand_matching(const BlockMatrix& matrix);

// Shortest representation with minimal multiplicity, ties broken by the
// lexicographically smallest descending expansion.
Representation preferred_shortest(const GrowthSequence& seq, const BigInt& n);

// Splits `rep` to `target_length` keeping every multiplicity <= cap. Tries
// the greedy policy (split the element whose witness raises the maximum
// multiplicity least, larger element first), then an exhaustive search over
// split orders and all two-term decompositions. Empty if neither succeeds.
std::optional<Representation> split_with_cap(const GrowthSequence& seq,
                                             const Representation& rep,
                                             std::uint64_t target_length,
                                             std::uint64_t cap,
                                             bool* used_search = nullptr);

struct SufficientResult {
  std::uint64_t rank1 = 0;
  std::uint64_t rank2 = 0;
  std::uint64_t k_value = 0;  // max{mult1, mult2, |rank1 - rank2|}
  std::uint64_t l_value = 0;  // min{rank1, rank2}
  bool condition_holds = false;  // K <= sqrt(L) / 2
  Representation eps1;
  Representation eps2;
  std::optional<Representation> lengthened;  // the split side
  bool used_search = false;
  // No split met the sqrt cap; the witness comes from margins that are
  // feasible without the block-size bound of block_matching.
  bool cap_relaxed = false;
  std::optional<std::vector<std::pair<BigInt, BigInt>>> witness;
  std::string reason;
  bool operator==(const SufficientResult&) const = default;
};

// Builds a witness for (p1, p2) in FS(A1 x A2) when K <= sqrt(L)/2. An
// absent witness says nothing about non-membership. Throws
// ConstructionFailed if the condition holds but no witness is found.
SufficientResult sufficient_membership(const GrowthSequence& seq1,
                                       const GrowthSequence& seq2,
                                       const BigInt& p1, const BigInt& p2);

}  // namespace fsx

#endif  // FSX_NONREGULAR_H_
