#include "fsx/nonregular.h"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "fsx/errors.h"
#include "fsx/representations.h"

namespace fsx {

namespace {

std::uint64_t isqrt(std::uint64_t n) {
  std::uint64_t r = 0;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

std::vector<std::uint64_t> multiplicities(const Representation& rep) {
  std::vector<std::uint64_t> out;
  for (const auto& [element, count] : rep.terms()) out.push_back(count);
  return out;
}

std::vector<BigInt> keys(const Representation& rep) {
  std::vector<BigInt> out;
  for (const auto& [element, count] : rep.terms()) out.push_back(element);
  return out;
}

Representation apply_split(const Representation& rep, const BigInt& y,
                           const Decomposition& d) {
  Representation out = rep;
  out.remove_one(y);
  out.add(d.first);
  out.add(d.second);
  return out;
}

constexpr std::size_t kSearchNodeLimit = 500'000;

// DFS over split orders and all two-term decompositions until a
// representation of `target_length` satisfies `accept`.
std::optional<Representation> search_splits(
    const GrowthSequence& seq, const Representation& rep, std::uint64_t target_length,
    const std::function<bool(const Representation&)>& accept) {
  std::map<BigInt, std::vector<Decomposition>> splits;
  std::set<std::string> visited;
  std::size_t nodes = 0;
  std::optional<Representation> found;
  std::function<bool(const Representation&)> search = [&](const Representation& cur) {
    if (cur.length() == target_length) {
      if (!accept(cur)) return false;
      found = cur;
      return true;
    }
    if (++nodes > kSearchNodeLimit) return false;
    if (!visited.insert(cur.to_string()).second) return false;
    for (const BigInt& y : keys(cur)) {
      if (y <= 1) continue;
      auto it = splits.find(y);
      if (it == splits.end()) it = splits.emplace(y, seq.all_decompositions(y)).first;
      for (const Decomposition& d : it->second) {
        if (search(apply_split(cur, y, d))) return true;
      }
    }
    return false;
  };
  search(rep);
  return found;
}

bool margins_feasible(const std::vector<std::uint64_t>& rows,
                      const std::vector<std::uint64_t>& cols) {
  try {
    realize_margins(rows, cols);
    return true;
  } catch (const Infeasible&) {
    return false;
  }
}

}  // namespace

BlockPartition::BlockPartition(std::vector<std::uint64_t> sizes)
    : sizes_(std::move(sizes)) {
  if (sizes_.empty()) throw ContractViolation("block partition is empty");
  for (std::uint64_t s : sizes_) {
    if (s < 1) throw ContractViolation("block sizes must be >= 1");
    total_ += s;
  }
}

std::uint64_t BlockPartition::max_size() const {
  return *std::max_element(sizes_.begin(), sizes_.end());
}

BlockMatrix::BlockMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), bits_(rows * cols, 0) {}

BlockMatrix BlockMatrix::from_bit_rows(std::span<const std::string> rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  BlockMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw ParseError("ragged block matrix rows");
    for (std::size_t j = 0; j < cols; ++j) {
      if (rows[i][j] != '0' && rows[i][j] != '1') {
        throw ParseError("block matrix rows must be 0/1 strings");
      }
      m.set(i, j, rows[i][j] == '1');
    }
  }
  return m;
}

void BlockMatrix::set(std::size_t i, std::size_t j, bool value) {
  bits_.at(i * cols_ + j) = value ? 1 : 0;
}

std::vector<std::uint64_t> BlockMatrix::row_sums() const {
  std::vector<std::uint64_t> out(rows_, 0);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out[i] += at(i, j);
  }
  return out;
}

std::vector<std::uint64_t> BlockMatrix::col_sums() const {
  std::vector<std::uint64_t> out(cols_, 0);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out[j] += at(i, j);
  }
  return out;
}

std::vector<std::string> BlockMatrix::to_bit_rows() const {
  std::vector<std::string> out(rows_, std::string(cols_, '0'));
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (at(i, j)) out[i][j] = '1';
    }
  }
  return out;
}

BlockMatrix realize_margins(std::span<const std::uint64_t> row_sums,
                            std::span<const std::uint64_t> col_sums) {
  const std::uint64_t row_total =
      std::accumulate(row_sums.begin(), row_sums.end(), std::uint64_t{0});
  const std::uint64_t col_total =
      std::accumulate(col_sums.begin(), col_sums.end(), std::uint64_t{0});
  if (row_total != col_total) {
    throw Infeasible("margin totals differ: rows " + std::to_string(row_total) +
                     ", columns " + std::to_string(col_total));
  }

  // Gale-Ryser: with rows sorted descending, for every k the k largest rows
  // need sum <= sum_j min(c_j, k).
  std::vector<std::uint64_t> sorted_rows(row_sums.begin(), row_sums.end());
  std::sort(sorted_rows.rbegin(), sorted_rows.rend());
  std::uint64_t prefix = 0;
  for (std::size_t k = 1; k <= sorted_rows.size(); ++k) {
    prefix += sorted_rows[k - 1];
    std::uint64_t capacity = 0;
    for (std::uint64_t c : col_sums) capacity += std::min<std::uint64_t>(c, k);
    if (prefix > capacity) {
      throw Infeasible("Gale-Ryser condition fails at k = " + std::to_string(k) +
                       ": sum of the " + std::to_string(k) + " largest rows = " +
                       std::to_string(prefix) + " > sum_j min(c_j, k) = " +
                       std::to_string(capacity));
    }
  }

  const std::size_t rows = row_sums.size();
  const std::size_t cols = col_sums.size();
  BlockMatrix matrix(rows, cols);
  std::vector<std::size_t> row_order(rows);
  std::iota(row_order.begin(), row_order.end(), 0);
  std::stable_sort(row_order.begin(), row_order.end(), [&](std::size_t a, std::size_t b) {
    return row_sums[a] > row_sums[b];
  });
  std::vector<std::uint64_t> remaining(col_sums.begin(), col_sums.end());
  std::vector<std::size_t> col_order(cols);
  for (std::size_t i : row_order) {
    const std::uint64_t need = row_sums[i];
    if (need > cols) throw Infeasible("row demand exceeds the number of columns");
    std::iota(col_order.begin(), col_order.end(), 0);
    auto by_demand = [&](std::size_t a, std::size_t b) {
      return remaining[a] != remaining[b] ? remaining[a] > remaining[b] : a < b;
    };
    if (need < cols) {
      std::nth_element(col_order.begin(), col_order.begin() + need, col_order.end(),
                       by_demand);
    }
    for (std::size_t t = 0; t < need; ++t) {
      const std::size_t j = col_order[t];
      if (remaining[j] == 0) {
        throw ConstructionFailed("greedy margin realization ran out of column demand");
      }
      --remaining[j];
      matrix.set(i, j, true);
    }
  }
  return matrix;
}

BlockMatrix block_matching(const BlockPartition& rows, const BlockPartition& cols) {
  if (rows.total() != cols.total()) {
    throw ContractViolation("block partitions must have equal totals");
  }
  const std::uint64_t limit = isqrt(rows.total());
  if (rows.max_size() > limit || cols.max_size() > limit) {
    throw ContractViolation("block sizes must not exceed floor(sqrt(" +
                            std::to_string(rows.total()) + ")) = " +
                            std::to_string(limit));
  }
  BlockMatrix matrix = realize_margins(rows.sizes(), cols.sizes());
  if (matrix.row_sums() != rows.sizes() || matrix.col_sums() != cols.sizes()) {
    throw ConstructionFailed("block matrix margins do not match the partitions");
  }
  return matrix;
}

std::vector<MatchedPair> expand_matching(const BlockMatrix& matrix) {
  std::vector<std::uint64_t> next_row(matrix.rows(), 0);
  std::vector<std::uint64_t> next_col(matrix.cols(), 0);
  std::vector<MatchedPair> out;
  for (std::size_t i = 0; i < matrix.rows(); ++i) {
    for (std::size_t j = 0; j < matrix.cols(); ++j) {
      if (matrix.at(i, j)) out.push_back({i, next_row[i]++, j, next_col[j]++});
    }
  }
  return out;
}

Representation preferred_shortest(const GrowthSequence& seq, const BigInt& n) {
  const auto reps = shortest_representations(seq, n);
  if (reps.empty()) throw Unrepresentable(n.str() + " has no representation");
  return *std::min_element(reps.begin(), reps.end(),
                           [](const Representation& a, const Representation& b) {
                             if (a.mult() != b.mult()) return a.mult() < b.mult();
                             return a < b;
                           });
}

std::optional<Representation> split_with_cap(const GrowthSequence& seq,
                                             const Representation& rep,
                                             std::uint64_t target_length,
                                             std::uint64_t cap, bool* used_search) {
  if (used_search) *used_search = false;
  if (target_length < rep.length()) {
    throw ContractViolation("split_with_cap: target below current length");
  }
  if (BigInt(target_length) > rep.value()) {
    throw Infeasible("split_with_cap: target exceeds the all-ones length");
  }

  Representation greedy = rep;
  bool stuck = false;
  while (greedy.length() < target_length) {
    std::optional<Representation> best;
    for (const auto& [y, count] : greedy.terms()) {
      if (y <= 1) continue;
      const auto d = seq.decompose(y);
      if (!d) continue;
      Representation candidate = apply_split(greedy, y, *d);
      if (!best || candidate.mult() < best->mult()) best = std::move(candidate);
    }
    if (!best) {
      stuck = true;
      break;
    }
    greedy = std::move(*best);
  }
  if (!stuck && greedy.mult() <= cap) return greedy;

  if (used_search) *used_search = true;
  return search_splits(seq, rep, target_length,
                       [cap](const Representation& r) { return r.mult() <= cap; });
}

SufficientResult sufficient_membership(const GrowthSequence& seq1,
                                       const GrowthSequence& seq2,
                                       const BigInt& p1, const BigInt& p2) {
  if (p1 < 1 || p2 < 1) throw ContractViolation("coordinates must be >= 1");
  SufficientResult out;
  out.rank1 = rank(seq1, p1);
  out.rank2 = rank(seq2, p2);
  out.eps1 = preferred_shortest(seq1, p1);
  out.eps2 = preferred_shortest(seq2, p2);
  const std::uint64_t gap =
      out.rank1 > out.rank2 ? out.rank1 - out.rank2 : out.rank2 - out.rank1;
  out.k_value = std::max({out.eps1.mult(), out.eps2.mult(), gap});
  out.l_value = std::min(out.rank1, out.rank2);
  // K <= sqrt(L)/2  <=>  4 K^2 <= L
  out.condition_holds = 4 * out.k_value * out.k_value <= out.l_value;
  const std::string summary = "K = " + std::to_string(out.k_value) +
                              ", L = " + std::to_string(out.l_value);
  if (!out.condition_holds) {
    out.reason = summary + ": K > sqrt(L)/2, condition not met (no conclusion)";
    return out;
  }

  // The side with the larger rank keeps its representation; the other side
  // is lengthened to match.
  const bool first_is_long = out.rank1 >= out.rank2;
  const Representation& long_rep = first_is_long ? out.eps1 : out.eps2;
  const GrowthSequence& short_seq = first_is_long ? seq2 : seq1;
  const BigInt& short_value = first_is_long ? p2 : p1;
  const Representation& short_rep = first_is_long ? out.eps2 : out.eps1;
  const std::uint64_t length = long_rep.length();
  const std::uint64_t cap = isqrt(length);

  out.lengthened = split_with_cap(short_seq, short_rep, length, cap, &out.used_search);
  if (!out.lengthened) {
    for (const Representation& alt : shortest_representations(short_seq, short_value)) {
      if (alt == short_rep || alt.mult() > out.k_value) continue;
      out.lengthened = split_with_cap(short_seq, alt, length, cap);
      if (out.lengthened) break;
    }
  }
  // The block-size bound of block_matching is sufficient but not necessary. When
  // no capped split exists, any split whose multiplicities form feasible
  // margins against the kept side still gives distinct pairs.
  const std::vector<std::uint64_t> long_mults = multiplicities(long_rep);
  if (!out.lengthened) {
    out.lengthened = search_splits(short_seq, short_rep, length,
                                   [&](const Representation& r) {
                                     return margins_feasible(long_mults, multiplicities(r));
                                   });
    if (out.lengthened) {
      out.cap_relaxed = true;
      out.used_search = true;
    }
  }
  if (!out.lengthened) {
    throw ConstructionFailed("no split of " + short_rep.to_string() + " reaches length " +
                             std::to_string(length) + " with multiplicity <= " +
                             std::to_string(cap) +
                             " or with feasible margins (" + summary + ")");
  }

  const std::vector<std::uint64_t> short_mults = multiplicities(*out.lengthened);
  const BlockMatrix matrix =
      out.cap_relaxed ? realize_margins(long_mults, short_mults)
                      : block_matching(BlockPartition(long_mults), BlockPartition(short_mults));
  const std::vector<BigInt> row_keys = keys(long_rep);
  const std::vector<BigInt> col_keys = keys(*out.lengthened);

  std::vector<std::pair<BigInt, BigInt>> pairs;
  std::set<std::pair<BigInt, BigInt>> seen;
  BigInt sum1 = 0;
  BigInt sum2 = 0;
  for (const MatchedPair& m : expand_matching(matrix)) {
    std::pair<BigInt, BigInt> pt{row_keys[m.row_block], col_keys[m.col_block]};
    if (!first_is_long) std::swap(pt.first, pt.second);
    if (!seen.insert(pt).second) {
      throw ConstructionFailed("block matching produced a repeated pair");
    }
    sum1 += pt.first;
    sum2 += pt.second;
    pairs.push_back(std::move(pt));
  }
  if (sum1 != p1 || sum2 != p2) {
    throw ConstructionFailed("matched pairs do not sum to the target point");
  }
  out.witness = std::move(pairs);
  out.reason = summary + ": K <= sqrt(L)/2, witness of " +
               std::to_string(length) + " distinct pairs" +
               (out.cap_relaxed ? " (multiplicity cap " + std::to_string(cap) +
                                      " unreachable, margins realized directly)"
                                : "");
  return out;
}

}  // namespace fsx
