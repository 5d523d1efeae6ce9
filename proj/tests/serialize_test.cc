#include "fsx/serialize.h"

#include <sstream>

#include "fsx/grid_io.h"
#include "fsx/lattice.h"
#include "fsx/nonregular.h"
#include "fsx/protocol.h"
#include "fsx/reduction.h"
#include "gtest/gtest.h"

namespace fsx {
namespace {

template <typename T>
T round_trip(const T& value) {
  const Json j = value;
  return Json::parse(j.dump()).get<T>();
}

TEST(Json, BigIntegersAreStrings) {
  const Json j = big_to_json(pow2(100));
  EXPECT_TRUE(j.is_string());
  EXPECT_EQ(big_from_json(j), pow2(100));
}

TEST(Json, Representation) {
  const auto rep = Representation::from_terms(std::vector<BigInt>{26, 12, 12});
  EXPECT_EQ(round_trip(rep), rep);
}

TEST(Json, ValidationReport) {
  const auto report = validate(GrowthSequence::custom({1, 3, 4}));
  EXPECT_EQ(round_trip(report), report);
}

TEST(Json, Verdict) {
  const std::vector<GrowthSequence> seqs{GrowthSequence::powers_of_two(),
                                         GrowthSequence::powers_of_two()};
  const auto v = decide_closed_form(seqs, LatticePoint::parse("15,257"), true);
  EXPECT_EQ(round_trip(v), v);
}

TEST(Json, Transcript) {
  const std::vector<GrowthSequence> seqs{GrowthSequence::powers_of_two(),
                                         GrowthSequence::fibonacci()};
  const ProtocolSimulator sim(seqs, 1024);
  const auto t = sim.run(LatticePoint::parse("15,257")).transcript;
  EXPECT_EQ(round_trip(t), t);
  const Json j = t;
  EXPECT_EQ(j.at("W"), "5");
}

TEST(Json, ReducedInstance) {
  const auto p = GrowthSequence::powers_of_two();
  const auto inst = build_reduced_instance(p, p, 16, 5, 3, ReductionMode::kSafe);
  EXPECT_EQ(round_trip(inst), inst);
}

TEST(Json, Certificates) {
  const auto c = empty_square(3);
  EXPECT_EQ(round_trip(c), c);
  const auto d = dense_square_count(6);
  EXPECT_EQ(round_trip(d), d);
}

TEST(Json, Violation) {
  const auto v = check_regularity(GrowthSequence::custom(short_nonregular_terms()), 12);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(round_trip(v[0]), v[0]);
}

TEST(Json, PointAndMatrix) {
  const auto p = LatticePoint::parse("3,50,7");
  EXPECT_EQ(lattice_point_from_json(Json(p)), p);
  const std::vector<std::string> rows{"110", "001"};
  const auto m = BlockMatrix::from_bit_rows(rows);
  EXPECT_EQ(block_matrix_from_json(Json::parse(Json(m).dump())), m);
}

TEST(Json, SufficientResult) {
  const auto p = GrowthSequence::powers_of_two();
  const auto with_witness = sufficient_membership(p, p, 15, 31);
  EXPECT_EQ(round_trip(with_witness), with_witness);
  const auto t = GrowthSequence::custom(thirteen_doubling_terms(208));
  const auto without = sufficient_membership(t, t, 3, 50);
  EXPECT_EQ(round_trip(without), without);
}

TEST(Json, SweepReport) {
  const auto p = GrowthSequence::powers_of_two();
  const auto report = reduction_sweep(p, p, 12, ReductionMode::kPrefix);
  EXPECT_FALSE(report.mismatches.empty());
  EXPECT_EQ(round_trip(report), report);
}

TEST(GridIo, Csv) {
  const std::vector<GrowthSequence> seqs{GrowthSequence::powers_of_two(),
                                         GrowthSequence::powers_of_two()};
  const auto grid = scan_box(seqs, Box{2, 2});
  std::ostringstream out;
  write_csv(grid, out);
  EXPECT_EQ(out.str(), "p1,p2,member\n1,1,1\n1,2,1\n2,1,1\n2,2,1\n");
}

TEST(GridIo, Pgm) {
  const std::vector<GrowthSequence> seqs{GrowthSequence::powers_of_two(),
                                         GrowthSequence::powers_of_two()};
  const auto grid = scan_box(seqs, Box{2, 4});
  std::ostringstream out;
  write_pgm(grid, out, true);
  const std::string s = out.str();
  const std::string header = "P5\n4 4\n255\n";
  ASSERT_EQ(s.substr(0, header.size()), header);
  const std::string px = s.substr(header.size());
  ASSERT_EQ(px.size(), 16u);
  // bottom-left pixel is (1,1); (3,1) has rank 2 > 1 and 2^1 <= 3.
  EXPECT_EQ(static_cast<unsigned char>(px[12]), 255);
  EXPECT_EQ(static_cast<unsigned char>(px[14]), 128);
}

}  // namespace
}  // namespace fsx
