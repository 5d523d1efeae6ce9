#ifndef FSX_PROTOCOL_H_
#define FSX_PROTOCOL_H_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fsx/bigint.h"
#include "fsx/membership.h"
#include "fsx/sequences.h"

namespace fsx {

// Largest t with rho^t <= N, i.e. floor(log N / log rho), exactly.
std::uint64_t max_rank_index(const BigInt& n, const Rational& rho);

// W = ceil(log2(t_max + 1)) bits per round-one message.
std::uint64_t message_width(const BigInt& n, const Rational& rho);

// k * log2(log2 N / log2 rho) + k, the real-valued upper bound.
double paper_cost_bound(std::size_t k, const BigInt& n, const Rational& rho);

// Fixed-width big-endian binary. Throws ProtocolViolation if rank needs
// more than `width` bits.
std::string encode_rank(std::uint64_t rank, std::uint64_t width);
std::uint64_t decode_rank(std::string_view bits);

// The whole round-two rule: a player sees only its own coordinate and the
// round-one messages, and answers 1 iff coordinate >= max decoded rank.
bool round_two_bit(const BigInt& own_coordinate,
                   std::span<const std::string> round_one);

struct PlayerInput {
  std::size_t index = 0;
  GrowthSequence sequence;
  BigInt coordinate;
};

struct Transcript {
  BigInt n;
  Rational rho;
  std::uint64_t width = 0;
  std::vector<std::string> round1;
  std::vector<std::uint8_t> round2;
  std::uint64_t total_bits = 0;
  bool decision = false;

  bool operator==(const Transcript&) const = default;
};

struct ProtocolRun {
  bool decision = false;
  Transcript transcript;
};

// Minimum rho over the players' sequences.
Rational effective_rho(std::span<const GrowthSequence> seqs);

// Runs the two-round blackboard protocol for a fixed set of sequences and a
// public bound N. Rank tables (and the regularity check) are built once and
// shared read-only between runs.
class ProtocolSimulator {
 public:
  ProtocolSimulator(std::vector<GrowthSequence> seqs, const BigInt& n);

  const BigInt& bound() const { return n_; }
  const Rational& rho() const { return rho_; }
  std::uint64_t width() const { return width_; }
  std::size_t players() const { return decider_.sequences().size(); }

  ProtocolRun run(const LatticePoint& p) const;

 private:
  BigInt n_;
  Rational rho_;
  std::uint64_t width_;
  ClosedFormDecider decider_;
};

ProtocolRun run_protocol(std::span<const PlayerInput> players, const BigInt& n);

// Re-derives the decision from the transcript alone and checks its
// invariants (widths, bit count, decision = AND of round two). Throws
// ProtocolViolation on any inconsistency.
bool replay(const Transcript& transcript);

// Human-readable blackboard.
std::string render_blackboard(const Transcript& transcript);

}  // namespace fsx

#endif  // FSX_PROTOCOL_H_
