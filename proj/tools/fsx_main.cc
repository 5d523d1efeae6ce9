// fsx: command-line front end for the finite-sum lattice toolkit.
//
// Exit codes: 0 member / success, 3 non-member, 1 invariant breach or
// disagreement, 2 usage error.

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fsx/errors.h"
#include "fsx/grid_io.h"
#include "fsx/lattice.h"
#include "fsx/membership.h"
#include "fsx/nonregular.h"
#include "fsx/protocol.h"
#include "fsx/reduction.h"
#include "fsx/serialize.h"

namespace {

using fsx::BigInt;
using fsx::GrowthSequence;
using fsx::Json;
using fsx::LatticePoint;

constexpr int kOk = 0;
constexpr int kBreach = 1;
constexpr int kUsage = 2;
constexpr int kNonMember = 3;

struct Globals {
  std::string format = "text";
  std::uint64_t seed = 1;
  std::uint64_t budget = fsx::kDefaultOracleBudget;
};

bool json_out(const Globals& g) { return g.format == "json"; }

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

// "2pow", "powers-of-two", "fib", "fibonacci", "short-nonregular",
// "thirteen[:BOUND]" or a file path.
GrowthSequence sequence_from_spec(const std::string& spec) {
  if (spec == "2pow" || spec == "powers-of-two") return GrowthSequence::powers_of_two();
  if (spec == "fib" || spec == "fibonacci") return GrowthSequence::fibonacci();
  if (spec == "short-nonregular") {
    return GrowthSequence::custom(fsx::short_nonregular_terms(), std::nullopt, "short-nonregular");
  }
  if (spec.rfind("thirteen", 0) == 0) {
    // thirteen[:BOUND] -> 1,2,3,6,12,13,26,... up to BOUND (default 4096)
    const auto colon = spec.find(':');
    const BigInt bound = colon == std::string::npos ? BigInt(4096)
                                                    : fsx::parse_bigint(spec.substr(colon + 1));
    return GrowthSequence::custom(fsx::thirteen_doubling_terms(bound), std::nullopt, "thirteen");
  }
  return fsx::load_custom_sequence_file(spec);
}

std::vector<GrowthSequence> sequences_from_list(const std::vector<std::string>& specs) {
  std::vector<GrowthSequence> out;
  for (const auto& s : specs) out.push_back(sequence_from_spec(s));
  return out;
}

std::vector<std::uint64_t> parse_u64_list(const std::string& text) {
  std::vector<std::uint64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(fsx::to_u64(fsx::parse_bigint(item), "list entry"));
  if (out.empty()) throw fsx::ParseError("empty list: '" + text + "'");
  return out;
}

BigInt max_coordinate(const LatticePoint& p) {
  BigInt m = 0;
  for (const auto& c : p.coords()) m = std::max(m, c);
  return m;
}

std::string join(const std::vector<std::uint64_t>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + std::to_string(xs[i]);
  return out;
}

// ---- validate ----------------------------------------------------------

struct ValidateArgs {
  std::string kind;
  std::string file;
  std::string rho;
  std::uint64_t nmax = 1000;
};

int cmd_validate(const Globals& g, const ValidateArgs& a) {
  if (a.kind.empty() == a.file.empty()) {
    throw fsx::ParseError("give exactly one of --kind or --file");
  }
  GrowthSequence seq = a.file.empty() ? sequence_from_spec(a.kind)
                                      : fsx::load_custom_sequence_file(a.file);
  if (!a.rho.empty()) seq = seq.with_rho(fsx::parse_rational(a.rho));
  if (seq.kind() != fsx::SequenceKind::kCustom) seq = fsx::extend_to(seq, a.nmax);

  const auto report = fsx::validate(seq);
  const bool complete = fsx::verify_completeness(seq, a.nmax);
  const auto violations = fsx::check_regularity(seq, a.nmax);
  const bool ok = report.ok() && complete && violations.empty();

  if (json_out(g)) {
    emit(Json{{"sequence", seq.label()},
              {"report", report},
              {"complete", complete},
              {"nmax", std::to_string(a.nmax)},
              {"violations", violations},
              {"ok", ok}});
  } else {
    std::cout << "sequence " << seq.label() << " rho=" << fsx::to_string(report.rho)
              << " (max admissible " << fsx::to_string(report.max_rho) << ")\n"
              << "  condition (i)   " << (report.condition_i ? "ok" : "FAIL") << "\n"
              << "  condition (ii)  " << (report.condition_ii ? "ok" : "FAIL") << "\n"
              << "  condition (iii) " << (report.condition_iii ? "ok" : "FAIL") << "\n"
              << "  growth bound    " << (report.growth_bound ? "ok" : "FAIL") << "\n";
    for (const auto& f : report.failures) {
      std::cout << "    (" << f.condition << ") at " << f.element << ": " << f.detail << "\n";
    }
    std::cout << "  complete up to " << a.nmax << ": " << (complete ? "yes" : "no") << "\n"
              << "  regularity violations up to " << a.nmax << ": " << violations.size() << "\n";
    for (const auto& v : violations) {
      std::cout << "    n=" << v.n << " rank=" << v.rank << " via " << v.evidence.to_string()
                << ", shortest distinct length " << v.min_distinct_length << "\n";
    }
  }
  return ok ? kOk : kBreach;
}

// ---- membership --------------------------------------------------------

struct MembershipArgs {
  std::vector<std::string> seqs{"2pow", "2pow"};
  std::string point;
  bool cross_check = false;
  bool witness = false;
};

int cmd_membership(const Globals& g, const MembershipArgs& a) {
  const LatticePoint p = LatticePoint::parse(a.point);
  auto seqs = sequences_from_list(a.seqs);
  if (seqs.size() == 1 && p.dimension() > 1) seqs.assign(p.dimension(), seqs.front());

  fsx::Verdict verdict;
  try {
    const fsx::ClosedFormDecider decider(seqs, max_coordinate(p));
    verdict = decider.decide(p, a.witness);
  } catch (const fsx::RegularityRequired& e) {
    std::cerr << "fsx: " << e.what()
              << "\n(use `fsx nonregular check` for non-regular sequences)\n";
    return kUsage;
  }

  std::optional<bool> oracle;
  if (a.cross_check) oracle = fsx::oracle_membership(seqs, p, g.budget);
  std::optional<std::string> witness_error;
  if (verdict.witness) witness_error = fsx::check_witness(seqs, p, *verdict.witness);
  const bool disagree = (oracle && *oracle != verdict.member) || witness_error.has_value();

  if (json_out(g)) {
    Json j = verdict;
    j["point"] = p;
    if (oracle) j["oracle"] = *oracle;
    if (witness_error) j["witness_error"] = *witness_error;
    emit(j);
  } else {
    std::cout << p.to_string() << ": " << (verdict.member ? "member" : "non-member") << "\n"
              << "  " << verdict.reason << "\n";
    if (oracle) std::cout << "  oracle: " << (*oracle ? "member" : "non-member") << "\n";
    if (verdict.witness) {
      std::cout << "  witness:";
      for (const auto& q : *verdict.witness) std::cout << " " << q.to_string();
      std::cout << "\n";
    }
    if (witness_error) std::cout << "  WITNESS INVALID: " << *witness_error << "\n";
  }
  if (disagree) {
    std::cerr << "fsx: closed form and cross-check disagree\n";
    return kBreach;
  }
  return verdict.member ? kOk : kNonMember;
}

// ---- protocol ----------------------------------------------------------

struct ProtocolArgs {
  std::vector<std::string> seqs{"2pow", "2pow"};
  std::string point;
  std::string n;
  std::uint64_t random = 0;
};

int cmd_protocol(const Globals& g, const ProtocolArgs& a) {
  if (a.random > 0) {
    // Random instances over the given sequences, p uniform in B(N).
    const BigInt n = a.n.empty() ? BigInt(4096) : fsx::parse_bigint(a.n);
    const std::uint64_t nn = fsx::to_u64(n, "N");
    const auto seqs = sequences_from_list(a.seqs);
    const fsx::ProtocolSimulator sim(seqs, n);
    const fsx::ClosedFormDecider decider(seqs, n);
    std::mt19937_64 gen(g.seed);
    std::uniform_int_distribution<std::uint64_t> coord(1, nn);
    std::uint64_t accepted = 0, mismatches = 0;
    for (std::uint64_t i = 0; i < a.random; ++i) {
      std::vector<BigInt> c;
      for (std::size_t k = 0; k < seqs.size(); ++k) c.emplace_back(coord(gen));
      const LatticePoint p(c);
      const auto r = sim.run(p);
      fsx::replay(r.transcript);
      accepted += r.decision;
      mismatches += r.decision != decider.decide(p).member;
    }
    const double bound = fsx::paper_cost_bound(seqs.size(), n, sim.rho());
    const std::uint64_t bits = seqs.size() * sim.width() + seqs.size();
    if (json_out(g)) {
      emit(Json{{"runs", std::to_string(a.random)},
                {"accepted", std::to_string(accepted)},
                {"mismatches", std::to_string(mismatches)},
                {"total_bits", std::to_string(bits)},
                {"paper_bound", bound},
                {"seed", std::to_string(g.seed)}});
    } else {
      std::cout << a.random << " runs (seed " << g.seed << "): " << accepted << " accepted, "
                << mismatches << " mismatches vs closed form\n"
                << "total_bits=" << bits << " cost bound=" << bound << "\n";
    }
    return mismatches == 0 ? kOk : kBreach;
  }

  const LatticePoint p = LatticePoint::parse(a.point);
  const BigInt n = a.n.empty() ? max_coordinate(p) : fsx::parse_bigint(a.n);
  auto seqs = sequences_from_list(a.seqs);
  if (seqs.size() == 1 && p.dimension() > 1) seqs.assign(p.dimension(), seqs.front());
  const fsx::ProtocolSimulator sim(seqs, n);
  const auto run = sim.run(p);
  fsx::replay(run.transcript);
  const double bound = fsx::paper_cost_bound(seqs.size(), n, sim.rho());
  if (json_out(g)) {
    Json j = run.transcript;
    j["point"] = p;
    j["paper_bound"] = bound;
    emit(j);
  } else {
    std::cout << fsx::render_blackboard(run.transcript) << "total_bits=" << run.transcript.total_bits
              << " cost bound=" << bound << "\n";
  }
  return run.decision ? kOk : kNonMember;
}

// ---- lattice -----------------------------------------------------------

struct LatticeArgs {
  std::uint64_t value = 0;
  bool oracle = false;
  bool overlay = false;
  std::string out;
  std::vector<std::string> seqs{"2pow", "2pow"};
};

int cmd_coverage(const Globals& g, const LatticeArgs& a) {
  const auto v = fsx::verify_complement_coverage(a.value);
  if (json_out(g)) {
    Json j{{"N", std::to_string(a.value)}, {"violations", Json::array()}};
    for (const auto& p : v) j["violations"].push_back(p);
    emit(j);
  } else {
    std::cout << "B(" << a.value << ") outside E: " << v.size() << " violations\n";
    for (const auto& p : v) std::cout << "  " << p.to_string() << "\n";
  }
  return v.empty() ? kOk : kBreach;
}

int cmd_empty_square(const Globals& g, const LatticeArgs& a) {
  const auto c = fsx::empty_square(a.value);
  std::optional<bool> oracle;
  if (a.oracle) oracle = fsx::empty_square_oracle_check(c, g.budget);
  if (json_out(g)) {
    Json j = c;
    if (oracle) j["oracle_confirms"] = *oracle;
    emit(j);
  } else {
    std::cout << "corner (" << c.square.x0 << ", " << c.square.y0 << ") side " << c.square.side
              << "\n  ranks s(x0+k): " << join(c.per_point_rank)
              << "\n  all excluded: " << (c.all_excluded ? "yes" : "no")
              << "\n  inside E: " << (c.inside_exceptional_set ? "yes" : "no") << "\n";
    if (oracle) std::cout << "  oracle confirms: " << (*oracle ? "yes" : "no") << "\n";
  }
  return c.all_excluded && oracle.value_or(true) ? kOk : kBreach;
}

int cmd_dense_square(const Globals& g, const LatticeArgs& a) {
  const auto c = fsx::dense_square_count(a.value);
  if (json_out(g)) {
    emit(c);
  } else {
    std::cout << "R=" << c.r << " M=" << c.m << "\n  binomial sum: " << c.exact_count
              << "\n  enumeration:  " << c.enumerated_count << "\n  M log2 M / 4: " << c.paper_bound
              << "\n";
  }
  return c.routes_agree && c.meets_bound ? kOk : kBreach;
}

int cmd_grid(const Globals& g, const LatticeArgs& a) {
  const auto seqs = sequences_from_list(a.seqs);
  const auto grid = fsx::scan_box(seqs, fsx::Box{seqs.size(), a.value}, a.oracle, g.budget);
  std::ofstream file;
  if (!a.out.empty()) {
    file.open(a.out, std::ios::binary);
    if (!file) throw fsx::ParseError("cannot write '" + a.out + "'");
  }
  std::ostream& out = a.out.empty() ? std::cout : file;
  if (g.format == "pgm") {
    fsx::write_pgm(grid, out, a.overlay);
  } else if (g.format == "csv") {
    fsx::write_csv(grid, out);
  } else {
    Json j{{"k", std::to_string(grid.k)},
           {"N", std::to_string(grid.n)},
           {"members", std::to_string(grid.member_count())},
           {"cross_checked", grid.cross_checked},
           {"mismatches", Json::array()}};
    for (const auto& p : grid.mismatches) j["mismatches"].push_back(p);
    if (json_out(g)) {
      out << j.dump(2) << "\n";
    } else {
      out << "B(" << grid.n << ")^" << grid.k << ": " << grid.member_count() << " members";
      if (grid.cross_checked) out << ", " << grid.mismatches.size() << " oracle mismatches";
      out << "\n";
    }
  }
  return grid.mismatches.empty() ? kOk : kBreach;
}

// ---- nonregular --------------------------------------------------------

struct NonregularArgs {
  std::vector<std::string> seqs{"thirteen", "thirteen"};
  std::string point;
  bool oracle = false;
  std::string rows;
  std::string cols;
};

int cmd_nonregular_check(const Globals& g, const NonregularArgs& a) {
  const LatticePoint p = LatticePoint::parse(a.point);
  if (p.dimension() != 2) throw fsx::ParseError("nonregular check takes a 2-dimensional point");
  auto seqs = sequences_from_list(a.seqs);
  if (seqs.size() == 1) seqs.push_back(seqs.front());
  if (seqs.size() != 2) throw fsx::ParseError("nonregular check takes two sequences");
  const auto r = fsx::sufficient_membership(seqs[0], seqs[1], p[0], p[1]);
  std::optional<bool> oracle;
  if (a.oracle) oracle = fsx::oracle_membership(seqs, p, g.budget);
  std::optional<std::string> witness_error;
  if (r.witness) {
    std::vector<LatticePoint> w;
    for (const auto& [x, y] : *r.witness) w.push_back(LatticePoint({x, y}));
    witness_error = fsx::check_witness(seqs, p, w);
  }
  if (json_out(g)) {
    Json j = r;
    if (oracle) j["oracle"] = *oracle;
    if (witness_error) j["witness_error"] = *witness_error;
    emit(j);
  } else {
    std::cout << p.to_string() << ": ranks (" << r.rank1 << ", " << r.rank2 << "), "
              << r.reason << "\n  eps1 = " << r.eps1.to_string()
              << "\n  eps2 = " << r.eps2.to_string() << "\n";
    if (r.lengthened) std::cout << "  lengthened = " << r.lengthened->to_string() << "\n";
    if (r.witness) {
      std::cout << "  witness:";
      for (const auto& [x, y] : *r.witness) std::cout << " (" << x << ", " << y << ")";
      std::cout << "\n";
    }
    if (oracle) std::cout << "  oracle: " << (*oracle ? "member" : "non-member") << "\n";
  }
  if (witness_error || (oracle && r.witness && !*oracle)) return kBreach;
  if (oracle) return *oracle ? kOk : kNonMember;
  return kOk;
}

int cmd_nonregular_matching(const Globals& g, const NonregularArgs& a) {
  const fsx::BlockPartition rows(parse_u64_list(a.rows));
  const fsx::BlockPartition cols(parse_u64_list(a.cols));
  const auto m = fsx::block_matching(rows, cols);
  const auto edges = fsx::expand_matching(m);
  if (json_out(g)) {
    Json j = m;
    j["edges"] = Json::array();
    for (const auto& e : edges) {
      j["edges"].push_back({std::to_string(e.row_block), std::to_string(e.row_item),
                            std::to_string(e.col_block), std::to_string(e.col_item)});
    }
    emit(j);
  } else {
    for (const auto& row : m.to_bit_rows()) std::cout << row << "\n";
    std::cout << "row sums " << join(m.row_sums()) << ", col sums " << join(m.col_sums())
              << ", " << edges.size() << " matched pairs\n";
  }
  return kOk;
}

// ---- reduce ------------------------------------------------------------

struct ReduceArgs {
  std::vector<std::string> seqs{"2pow", "2pow"};
  std::string m;
  std::string point;
  std::string mode = "prefix";
  std::uint64_t sweep = 0;
};

int cmd_reduce(const Globals& g, const ReduceArgs& a) {
  auto seqs = sequences_from_list(a.seqs);
  if (seqs.size() == 1) seqs.push_back(seqs.front());
  if (seqs.size() != 2) throw fsx::ParseError("reduce takes two sequences");
  const auto mode = fsx::parse_reduction_mode(a.mode);

  if (a.sweep > 0) {
    const auto report = fsx::reduction_sweep(seqs[0], seqs[1], a.sweep, mode);
    if (json_out(g)) {
      Json j = report;
      j["instances"] = Json::array();
      for (const auto& mm : report.mismatches) {
        j["instances"].push_back(
            fsx::build_reduced_instance(seqs[0], seqs[1], a.sweep, mm.p1, mm.p2, mode));
      }
      emit(j);
    } else {
      std::cout << "sweep M=" << report.m << " mode=" << fsx::to_string(mode) << ": "
                << report.mismatches.size() << "/" << report.cells << " mismatches\n";
      for (const auto& mm : report.mismatches) {
        std::cout << "  (" << mm.p1 << ", " << mm.p2 << ") reduction=" << mm.reduction
                  << " oracle=" << mm.oracle << "\n";
      }
    }
    return report.mismatches.empty() ? kOk : kBreach;
  }

  const LatticePoint p = LatticePoint::parse(a.point);
  if (p.dimension() != 2) throw fsx::ParseError("reduce takes a 2-dimensional point");
  const BigInt m = a.m.empty() ? max_coordinate(p) : fsx::parse_bigint(a.m);
  const auto inst = fsx::build_reduced_instance(seqs[0], seqs[1], m, p[0], p[1], mode);
  const bool member = fsx::decide_via_reduction(inst);
  const double density = fsx::knapsack_density(inst.z);
  if (json_out(g)) {
    Json j = inst;
    j["decision"] = member;
    j["density"] = density;
    emit(j);
  } else {
    std::cout << "mode " << fsx::to_string(mode) << ", M=" << inst.m
              << ", multiplier " << inst.multiplier << ", |Z|=" << inst.z.size()
              << ", target " << inst.target << "\n  knapsack density " << density
              << "\n  " << p.to_string() << ": " << (member ? "member" : "non-member") << "\n";
  }
  return member ? kOk : kNonMember;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite sums of lattice point sets: membership, protocol and structure tools"};
  app.require_subcommand(1);
  app.set_config("--config", "", "key=value file overriding flags");

  Globals g;
  app.add_option("--format", g.format, "output format")
      ->check(CLI::IsMember({"text", "json", "csv", "pgm"}));
  app.add_option("--seed", g.seed, "seed for randomized runs");
  app.add_option("--budget", g.budget, "oracle cell budget")->check(CLI::PositiveNumber);

  ValidateArgs va;
  auto* validate = app.add_subcommand("validate", "check conditions, completeness and regularity");
  validate->add_option("--kind", va.kind, "powers-of-two | fibonacci");
  validate->add_option("--file", va.file, "custom sequence file, one term per line");
  validate->add_option("--rho", va.rho, "growth ratio p/q");
  validate->add_option("--nmax", va.nmax, "scan bound")->check(CLI::PositiveNumber);

  MembershipArgs ma;
  auto* membership = app.add_subcommand("membership", "decide p in FS(A_1 x ... x A_k)");
  membership->add_option("--seqs", ma.seqs, "2pow, fib or a file, comma separated")
      ->delimiter(',');
  membership->add_option("--point", ma.point, "comma-separated coordinates")->required();
  membership->add_flag("--cross-check", ma.cross_check, "also run the brute-force oracle");
  membership->add_flag("--witness", ma.witness, "construct and verify a witness");

  ProtocolArgs pa;
  auto* protocol = app.add_subcommand("protocol", "two-round blackboard protocol");
  protocol->add_option("--seqs", pa.seqs, "one sequence per player")->delimiter(',');
  protocol->add_option("--point", pa.point, "the players' coordinates");
  protocol->add_option("--N", pa.n, "public bound");
  protocol->add_option("--random", pa.random, "run this many random instances instead");

  LatticeArgs la;
  auto* lattice = app.add_subcommand("lattice", "structure of FS({2^m} x {2^k})");
  lattice->require_subcommand(1);
  auto* coverage = lattice->add_subcommand("coverage", "points outside E are members");
  coverage->add_option("N", la.value)->required()->check(CLI::PositiveNumber);
  auto* empty = lattice->add_subcommand("empty-square", "D x D square missed by FS");
  empty->add_option("D", la.value)->required()->check(CLI::PositiveNumber);
  empty->add_flag("--oracle", la.oracle, "confirm with the oracle");
  auto* dense = lattice->add_subcommand("dense-square", "horizontal-family count");
  dense->add_option("R", la.value)->required();
  auto* grid = lattice->add_subcommand("grid", "membership grid over B(N)");
  grid->add_option("N", la.value)->required()->check(CLI::PositiveNumber);
  grid->add_option("--seqs", la.seqs)->delimiter(',');
  grid->add_flag("--cross-check", la.oracle, "compare against the oracle");
  grid->add_flag("--overlay", la.overlay, "mark non-members in E as 128 (pgm)");
  grid->add_option("--out", la.out, "output file");

  NonregularArgs na;
  auto* nonregular = app.add_subcommand("nonregular", "sufficient condition and block matching");
  nonregular->require_subcommand(1);
  auto* check = nonregular->add_subcommand("check", "K <= sqrt(L)/2 witness construction");
  check->add_option("--seqs", na.seqs)->delimiter(',');
  check->add_option("--point", na.point)->required();
  check->add_flag("--oracle", na.oracle, "compare against the oracle");
  auto* matching = nonregular->add_subcommand("matching", "0/1 matrix with block margins");
  matching->add_option("--rows", na.rows, "row block sizes, e.g. 3,3,3")->required();
  matching->add_option("--cols", na.cols, "column block sizes")->required();

  ReduceArgs ra;
  auto* reduce = app.add_subcommand("reduce", "reduction to 0/1 knapsack");
  reduce->add_option("--seqs", ra.seqs)->delimiter(',');
  reduce->add_option("--M", ra.m, "bound M >= p1, p2");
  reduce->add_option("--point", ra.point);
  reduce->add_option("--mode", ra.mode)->check(CLI::IsMember({"prefix", "shifted", "safe"}));
  reduce->add_option("--sweep", ra.sweep, "compare with the oracle over [1,M]^2");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*validate) return cmd_validate(g, va);
    if (*membership) return cmd_membership(g, ma);
    if (*protocol) {
      if (pa.point.empty() && pa.random == 0) {
        throw fsx::ParseError("protocol needs --point or --random");
      }
      return cmd_protocol(g, pa);
    }
    if (*coverage) return cmd_coverage(g, la);
    if (*empty) return cmd_empty_square(g, la);
    if (*dense) return cmd_dense_square(g, la);
    if (*grid) return cmd_grid(g, la);
    if (*check) return cmd_nonregular_check(g, na);
    if (*matching) return cmd_nonregular_matching(g, na);
    if (*reduce) {
      if (ra.point.empty() && ra.sweep == 0) throw fsx::ParseError("reduce needs --point or --sweep");
      return cmd_reduce(g, ra);
    }
  } catch (const fsx::ParseError& e) {
    std::cerr << "fsx: " << e.what() << "\n";
    return kUsage;
  } catch (const fsx::ContractViolation& e) {
    std::cerr << "fsx: " << e.what() << "\n";
    return kUsage;
  } catch (const fsx::PrefixIncomplete& e) {
    std::cerr << "fsx: " << e.what() << "\n";
    return kUsage;
  } catch (const fsx::RegularityRequired& e) {
    std::cerr << "fsx: " << e.what() << "\n(use `fsx nonregular check`)\n";
    return kUsage;
  } catch (const fsx::Error& e) {
    std::cerr << "fsx: " << e.what() << "\n";
    return kBreach;
  }
  return kUsage;
}
