#include "fsx/protocol.h"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "fsx/errors.h"

namespace fsx {

namespace {

void check_parameters(const BigInt& n, const Rational& rho) {
  if (n < 2) throw ContractViolation("protocol bound N must be >= 2");
  if (rho <= 1 || rho > 2) {
    throw ContractViolation("rho = " + to_string(rho) + " outside (1, 2]");
  }
}

double log2_of(const Rational& r) {
  return fsx::log2_of(boost::multiprecision::numerator(r)) -
         fsx::log2_of(boost::multiprecision::denominator(r));
}

// Each player knows only its own index, sequence ranks and coordinate.
class Player {
 public:
  Player(std::size_t index, const ClosedFormDecider& ranks, BigInt coordinate)
      : index_(index), ranks_(ranks), coordinate_(std::move(coordinate)) {}

  std::string round_one(std::uint64_t width) const {
    return encode_rank(ranks_.rank_of(index_, coordinate_), width);
  }
  bool round_two(std::span<const std::string> board) const {
    return round_two_bit(coordinate_, board);
  }

 private:
  std::size_t index_;
  const ClosedFormDecider& ranks_;
  BigInt coordinate_;
};

}  // namespace

std::uint64_t max_rank_index(const BigInt& n, const Rational& rho) {
  check_parameters(n, rho);
  const BigInt num = boost::multiprecision::numerator(rho);
  const BigInt den = boost::multiprecision::denominator(rho);
  // rho^t <= N  <=>  num^t <= N * den^t
  std::uint64_t t = 0;
  BigInt num_pow = num;
  BigInt den_pow = den;
  while (num_pow <= n * den_pow) {
    ++t;
    num_pow *= num;
    den_pow *= den;
  }
  return t;
}

std::uint64_t message_width(const BigInt& n, const Rational& rho) {
  return bit_length(BigInt(max_rank_index(n, rho)));
}

double paper_cost_bound(std::size_t k, const BigInt& n, const Rational& rho) {
  check_parameters(n, rho);
  const double kd = static_cast<double>(k);
  return kd * std::log2(fsx::log2_of(n) / log2_of(rho)) + kd;
}

std::string encode_rank(std::uint64_t rank, std::uint64_t width) {
  if (width < 64 && rank >> width != 0) {
    throw ProtocolViolation("rank " + std::to_string(rank) + " does not fit in " +
                            std::to_string(width) + " bits");
  }
  std::string bits(width, '0');
  for (std::uint64_t i = 0; i < width && i < 64; ++i) {
    if ((rank >> i) & 1) bits[width - 1 - i] = '1';
  }
  return bits;
}

std::uint64_t decode_rank(std::string_view bits) {
  if (bits.empty() || bits.size() > 64) {
    throw ProtocolViolation("malformed round-one message of length " +
                            std::to_string(bits.size()));
  }
  std::uint64_t value = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') throw ProtocolViolation("non-binary message");
    value = (value << 1) | static_cast<std::uint64_t>(c == '1');
  }
  return value;
}

bool round_two_bit(const BigInt& own_coordinate,
                   std::span<const std::string> round_one) {
  std::uint64_t max_rank = 0;
  for (const std::string& message : round_one) {
    max_rank = std::max(max_rank, decode_rank(message));
  }
  return own_coordinate >= max_rank;
}

Rational effective_rho(std::span<const GrowthSequence> seqs) {
  if (seqs.empty()) throw ContractViolation("no sequences");
  Rational rho = seqs.front().rho();
  for (const GrowthSequence& s : seqs) rho = std::min(rho, s.rho());
  return rho;
}

ProtocolSimulator::ProtocolSimulator(std::vector<GrowthSequence> seqs, const BigInt& n)
    : n_(n),
      rho_(effective_rho(seqs)),
      width_(message_width(n, rho_)),
      decider_(std::move(seqs), n) {}

ProtocolRun ProtocolSimulator::run(const LatticePoint& p) const {
  const std::size_t k = players();
  if (p.dimension() != k) {
    throw ContractViolation("expected " + std::to_string(k) + " coordinates");
  }
  std::vector<Player> roster;
  roster.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    if (p[i] > n_) {
      throw ContractViolation("coordinate " + p[i].str() + " exceeds N = " + n_.str());
    }
    roster.emplace_back(i, decider_, p[i]);
  }

  Transcript t;
  t.n = n_;
  t.rho = rho_;
  t.width = width_;
  for (const Player& player : roster) t.round1.push_back(player.round_one(width_));
  // Round two reads a frozen copy of round one only.
  const std::vector<std::string> board = t.round1;
  for (const Player& player : roster) {
    t.round2.push_back(player.round_two(board) ? 1 : 0);
  }
  t.total_bits = k * width_ + k;
  t.decision = std::all_of(t.round2.begin(), t.round2.end(),
                           [](std::uint8_t b) { return b == 1; });
  return {t.decision, t};
}

ProtocolRun run_protocol(std::span<const PlayerInput> players, const BigInt& n) {
  if (players.empty()) throw ContractViolation("protocol needs at least one player");
  std::vector<const PlayerInput*> ordered;
  for (const PlayerInput& in : players) ordered.push_back(&in);
  std::sort(ordered.begin(), ordered.end(),
            [](const PlayerInput* a, const PlayerInput* b) { return a->index < b->index; });
  std::vector<GrowthSequence> seqs;
  std::vector<BigInt> coords;
  for (std::size_t i = 0; i < ordered.size(); ++i) {
    if (ordered[i]->index != i) {
      throw ContractViolation("player indices must be 0..k-1 without gaps");
    }
    seqs.push_back(ordered[i]->sequence);
    coords.push_back(ordered[i]->coordinate);
  }
  const ProtocolSimulator simulator(std::move(seqs), n);
  return simulator.run(LatticePoint(std::move(coords)));
}

bool replay(const Transcript& t) {
  const std::size_t k = t.round1.size();
  if (k == 0 || t.round2.size() != k) {
    throw ProtocolViolation("transcript rounds have inconsistent sizes");
  }
  if (t.width != message_width(t.n, t.rho)) {
    throw ProtocolViolation("recorded width does not match N and rho");
  }
  for (const std::string& m : t.round1) {
    if (m.size() != t.width) throw ProtocolViolation("message width mismatch");
    decode_rank(m);
  }
  for (std::uint8_t b : t.round2) {
    if (b > 1) throw ProtocolViolation("round-two entries must be bits");
  }
  if (t.total_bits != k * t.width + k) {
    throw ProtocolViolation("total_bits does not equal k*W + k");
  }
  const bool decision = std::all_of(t.round2.begin(), t.round2.end(),
                                    [](std::uint8_t b) { return b == 1; });
  if (decision != t.decision) throw ProtocolViolation("decision is not the AND of round two");
  return decision;
}

std::string render_blackboard(const Transcript& t) {
  std::ostringstream out;
  out << "N = " << t.n << ", rho = " << to_string(t.rho) << ", W = " << t.width
      << " bits\n";
  out << "round 1 (ranks):\n";
  for (std::size_t i = 0; i < t.round1.size(); ++i) {
    out << "  P" << i + 1 << ": " << t.round1[i] << "  (rank "
        << decode_rank(t.round1[i]) << ")\n";
  }
  out << "round 2 (p_i >= max rank):\n";
  for (std::size_t i = 0; i < t.round2.size(); ++i) {
    out << "  P" << i + 1 << ": " << int(t.round2[i]) << "\n";
  }
  out << "total bits: " << t.total_bits << "\n";
  out << "decision: " << (t.decision ? "accept (member)" : "reject (non-member)") << "\n";
  return out.str();
}

}  // namespace fsx
