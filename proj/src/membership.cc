#include "fsx/membership.h"

#include <algorithm>
#include <set>
#include <sstream>

#include "fsx/errors.h"

namespace fsx {

LatticePoint::LatticePoint(std::vector<BigInt> coords) : coords_(std::move(coords)) {
  if (coords_.empty()) throw ContractViolation("lattice point needs k >= 1");
  for (const BigInt& c : coords_) {
    if (c < 1) {
      throw ContractViolation("lattice coordinates must be >= 1, got " + c.str());
    }
  }
}

LatticePoint LatticePoint::parse(std::string_view text) {
  std::vector<BigInt> coords;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    coords.push_back(parse_bigint(text.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return LatticePoint(std::move(coords));
}

std::string LatticePoint::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) out += ", ";
    out += coords_[i].str();
  }
  return out + ")";
}

ClosedFormDecider::ClosedFormDecider(std::vector<GrowthSequence> seqs,
                                     const BigInt& bound, std::uint64_t budget)
    : seqs_(std::move(seqs)), budget_(budget) {
  if (seqs_.empty()) throw ContractViolation("at least one sequence is required");
  for (const GrowthSequence& seq : seqs_) {
    if (bound > budget) {
      if (seq.kind() == SequenceKind::kCustom) {
        throw BudgetExceeded("custom sequence '" + seq.label() +
                             "' cannot be ranked up to " + bound.str());
      }
      // Builtin kinds are regular for every n; ranks come from closed forms.
      tables_.emplace_back(std::nullopt);
      continue;
    }
    const std::uint64_t small = bound.convert_to<std::uint64_t>();
    RankTable table(seq, small, budget);
    for (std::uint64_t n = 1; n <= small; ++n) {
      if (table.rank(n) == RankTable::kUnreachable) {
        throw Unrepresentable(std::to_string(n) + " has no representation in '" +
                              seq.label() + "'");
      }
      if (!table.regular_at(n)) {
        throw RegularityRequired(
            "sequence '" + seq.label() + "' is not regular: " +
            std::to_string(n) + " has rank " + std::to_string(table.rank(n)) +
            " (" + table.shortest(n).to_string() +
            ") but no distinct representation of that length; use the "
            "nonregular sufficient condition instead");
      }
    }
    tables_.emplace_back(std::move(table));
  }
}

std::uint64_t ClosedFormDecider::rank_of(std::size_t axis, const BigInt& value) const {
  const auto& table = tables_.at(axis);
  if (table && value <= table->bound()) {
    return table->rank(value.convert_to<std::uint64_t>());
  }
  const GrowthSequence& seq = seqs_[axis];
  if (seq.kind() == SequenceKind::kCustom) {
    throw ContractViolation("coordinate " + value.str() +
                            " lies beyond the decider bound for '" +
                            seq.label() + "'");
  }
  return rank(seq, value, table ? std::min(budget_, table->bound()) : budget_);
}

void ClosedFormDecider::check_dimension(const LatticePoint& p) const {
  if (p.dimension() != seqs_.size()) {
    throw ContractViolation("point " + p.to_string() + " has dimension " +
                            std::to_string(p.dimension()) + ", expected " +
                            std::to_string(seqs_.size()));
  }
}

Verdict ClosedFormDecider::decide(const LatticePoint& p, bool with_witness) const {
  check_dimension(p);
  Verdict verdict;
  std::size_t argmax = 0;
  std::size_t argmin = 0;
  for (std::size_t i = 0; i < p.dimension(); ++i) {
    verdict.ranks.push_back(rank_of(i, p[i]));
    if (verdict.ranks[i] > verdict.ranks[argmax]) argmax = i;
    if (p[i] < p[argmin]) argmin = i;
  }
  const std::uint64_t max_rank = verdict.ranks[argmax];
  verdict.member = p[argmin] >= max_rank;

  std::ostringstream reason;
  reason << "ranks=(";
  for (std::size_t i = 0; i < verdict.ranks.size(); ++i) {
    reason << (i ? "," : "") << verdict.ranks[i];
  }
  reason << ") max_rank=" << max_rank << " (coordinate " << argmax + 1 << ")";
  if (verdict.member) {
    reason << "; min coordinate " << p[argmin] << " >= max rank";
  } else {
    reason << "; coordinate " << argmin + 1 << " = " << p[argmin]
           << " < max rank";
  }
  verdict.reason = reason.str();
  if (verdict.member && with_witness) verdict.witness = witness(p);
  return verdict;
}

std::vector<LatticePoint> ClosedFormDecider::witness(const LatticePoint& p) const {
  check_dimension(p);
  const std::size_t k = p.dimension();
  std::vector<std::uint64_t> ranks(k);
  std::size_t lead = 0;
  for (std::size_t i = 0; i < k; ++i) {
    ranks[i] = rank_of(i, p[i]);
    if (ranks[i] > ranks[lead]) lead = i;
  }
  const std::uint64_t length = ranks[lead];
  for (std::size_t i = 0; i < k; ++i) {
    if (p[i] < length) {
      throw ContractViolation("no witness: " + p.to_string() +
                              " is not a member");
    }
  }

  // The lead coordinate uses a distinct shortest representation, which keeps
  // the resulting points pairwise distinct; every other coordinate is split
  // up to the same length.
  std::vector<std::vector<BigInt>> columns(k);
  for (std::size_t i = 0; i < k; ++i) {
    auto distinct = mult1_shortest(seqs_[i], p[i], budget_);
    if (!distinct) {
      throw RegularityRequired("no distinct shortest representation of " +
                               p[i].str() + " in '" + seqs_[i].label() + "'");
    }
    columns[i] = split_to_length(seqs_[i], *distinct, length).expanded();
  }
  std::vector<LatticePoint> points;
  points.reserve(length);
  for (std::uint64_t t = 0; t < length; ++t) {
    std::vector<BigInt> coords(k);
    for (std::size_t i = 0; i < k; ++i) coords[i] = columns[i][t];
    points.emplace_back(std::move(coords));
  }
  return points;
}

namespace {

BigInt max_coordinate(const LatticePoint& p) {
  return *std::max_element(p.coords().begin(), p.coords().end());
}

}  // namespace

Verdict decide_closed_form(std::span<const GrowthSequence> seqs,
                           const LatticePoint& p, bool with_witness) {
  const ClosedFormDecider decider({seqs.begin(), seqs.end()}, max_coordinate(p));
  return decider.decide(p, with_witness);
}

std::vector<LatticePoint> construct_witness(std::span<const GrowthSequence> seqs,
                                            const LatticePoint& p) {
  const ClosedFormDecider decider({seqs.begin(), seqs.end()}, max_coordinate(p));
  return decider.witness(p);
}

std::optional<std::string> check_witness(std::span<const GrowthSequence> seqs,
                                         const LatticePoint& p,
                                         std::span<const LatticePoint> witness) {
  if (witness.empty()) return "witness is empty";
  std::vector<BigInt> sums(p.dimension(), 0);
  std::set<LatticePoint> seen;
  for (const LatticePoint& q : witness) {
    if (q.dimension() != p.dimension() || seqs.size() != p.dimension()) {
      return "dimension mismatch at " + q.to_string();
    }
    if (!seen.insert(q).second) return "repeated point " + q.to_string();
    for (std::size_t i = 0; i < q.dimension(); ++i) {
      if (!seqs[i].contains(q[i])) {
        return "coordinate " + q[i].str() + " of " + q.to_string() +
               " is not in '" + seqs[i].label() + "'";
      }
      sums[i] += q[i];
    }
  }
  for (std::size_t i = 0; i < p.dimension(); ++i) {
    if (sums[i] != p[i]) {
      return "coordinate " + std::to_string(i + 1) + " sums to " + sums[i].str() +
             ", expected " + p[i].str();
    }
  }
  return std::nullopt;
}

OracleGrid::OracleGrid(std::span<const GrowthSequence> seqs,
                       std::vector<std::uint64_t> extents, std::uint64_t budget)
    : extents_(std::move(extents)) {
  const std::size_t k = extents_.size();
  if (k != seqs.size()) throw ContractViolation("oracle: dimension mismatch");
  if (k < 2 || k > 3) {
    throw ContractViolation("oracle supports k in {2, 3}, got " + std::to_string(k));
  }
  std::uint64_t cells = 1;
  for (std::uint64_t e : extents_) {
    if (e + 1 > budget || cells > budget / (e + 1)) {
      throw BudgetExceeded("oracle box exceeds the budget of " +
                           std::to_string(budget) + " cells");
    }
    cells *= e + 1;
  }
  strides_.assign(k, 1);
  for (std::size_t i = k - 1; i-- > 0;) strides_[i] = strides_[i + 1] * (extents_[i + 1] + 1);

  std::vector<std::vector<std::uint64_t>> axes(k);
  for (std::size_t i = 0; i < k; ++i) {
    seqs[i].require_covers(BigInt(extents_[i]));
    axes[i] = seqs[i].small_elements_upto(extents_[i]);
  }

  cells_.assign(cells, 0);
  cells_[0] = 1;
  const std::uint64_t inner_extent = extents_[k - 1];

  // Product elements in lexicographic order via an odometer over the axes.
  std::vector<std::size_t> pick(k, 0);
  for (const auto& axis : axes) {
    if (axis.empty()) return;
  }
  while (true) {
    std::vector<std::uint64_t> a(k);
    for (std::size_t i = 0; i < k; ++i) a[i] = axes[i][pick[i]];
    std::uint64_t offset = 0;
    for (std::size_t i = 0; i < k; ++i) offset += a[i] * strides_[i];

    // Walk target cells in descending flat order so each element is used at
    // most once: sources have smaller flat indices and are still unmodified.
    std::vector<std::uint64_t> outer(k - 1);
    for (std::size_t i = 0; i + 1 < k; ++i) outer[i] = extents_[i];
    bool outer_done = false;
    while (!outer_done) {
      std::uint64_t base = 0;
      for (std::size_t i = 0; i + 1 < k; ++i) base += outer[i] * strides_[i];
      std::uint8_t* cells = cells_.data();
      for (std::uint64_t y = inner_extent + 1; y-- > a[k - 1];) {
        cells[base + y] |= cells[base + y - offset];
      }
      // Decrement the outer odometer, staying within coords >= a.
      std::size_t i = k - 1;
      while (true) {
        if (i == 0) {
          outer_done = true;
          break;
        }
        --i;
        if (outer[i] > a[i]) {
          --outer[i];
          for (std::size_t j = i + 1; j + 1 < k; ++j) outer[j] = extents_[j];
          break;
        }
      }
    }

    std::size_t axis = k;
    while (axis-- > 0) {
      if (++pick[axis] < axes[axis].size()) break;
      pick[axis] = 0;
      if (axis == 0) return;
    }
  }
}

std::size_t OracleGrid::flat_index(std::span<const std::uint64_t> coords) const {
  if (coords.size() != extents_.size()) {
    throw ContractViolation("oracle query has the wrong dimension");
  }
  std::size_t index = 0;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i] > extents_[i]) {
      throw ContractViolation("oracle query outside the computed box");
    }
    index += coords[i] * strides_[i];
  }
  return index;
}

bool OracleGrid::reachable(std::span<const std::uint64_t> coords) const {
  return cells_[flat_index(coords)] != 0;
}

bool OracleGrid::contains(const LatticePoint& p) const {
  std::vector<std::uint64_t> coords;
  for (const BigInt& c : p.coords()) coords.push_back(to_u64(c, "coordinate"));
  return reachable(coords);
}

bool oracle_membership(std::span<const GrowthSequence> seqs, const LatticePoint& p,
                       std::uint64_t budget) {
  std::vector<std::uint64_t> extents;
  for (const BigInt& c : p.coords()) extents.push_back(to_u64(c, "coordinate"));
  const OracleGrid grid(seqs, extents, budget);
  return grid.reachable(extents);
}

bool MembershipGrid::at(std::span<const std::uint64_t> coords) const {
  std::size_t index = 0;
  for (std::uint64_t c : coords) {
    if (c < 1 || c > n) throw ContractViolation("grid query outside the box");
    index = index * n + (c - 1);
  }
  return member.at(index) != 0;
}

std::uint64_t MembershipGrid::member_count() const {
  return static_cast<std::uint64_t>(std::count(member.begin(), member.end(), 1));
}

MembershipGrid scan_box(std::span<const GrowthSequence> seqs, const Box& box,
                        bool cross_check, std::uint64_t budget) {
  if (box.k != seqs.size()) throw ContractViolation("scan_box: dimension mismatch");
  if (box.n < 1) throw ContractViolation("scan_box: N must be >= 1");
  std::uint64_t cells = 1;
  for (std::size_t i = 0; i < box.k; ++i) {
    if (cells > budget / box.n) {
      throw BudgetExceeded("scan_box: box exceeds the budget of " +
                           std::to_string(budget) + " cells");
    }
    cells *= box.n;
  }
  const ClosedFormDecider decider({seqs.begin(), seqs.end()}, BigInt(box.n));
  std::optional<OracleGrid> oracle;
  if (cross_check) {
    oracle.emplace(seqs, std::vector<std::uint64_t>(box.k, box.n), budget);
  }

  MembershipGrid grid;
  grid.k = box.k;
  grid.n = box.n;
  grid.cross_checked = cross_check;
  grid.member.reserve(cells);
  std::vector<std::uint64_t> coords(box.k, 1);
  for (std::uint64_t cell = 0; cell < cells; ++cell) {
    std::vector<BigInt> big(coords.begin(), coords.end());
    const LatticePoint p(std::move(big));
    const bool member = decider.decide(p).member;
    grid.member.push_back(member ? 1 : 0);
    if (oracle && oracle->reachable(coords) != member) grid.mismatches.push_back(p);
    for (std::size_t i = box.k; i-- > 0;) {
      if (++coords[i] <= box.n) break;
      coords[i] = 1;
    }
  }
  return grid;
}

}  // namespace fsx
