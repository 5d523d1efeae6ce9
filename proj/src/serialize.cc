#include "fsx/serialize.h"

#include "fsx/errors.h"

namespace fsx {

namespace {

Json u64_json(std::uint64_t v) { return std::to_string(v); }

template <typename T>
Json u64_array(const std::vector<T>& values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(u64_json(v));
  return out;
}

Json big_array(const std::vector<BigInt>& values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(big_to_json(v));
  return out;
}

std::vector<BigInt> big_vector(const Json& j) {
  std::vector<BigInt> out;
  for (const auto& v : j) out.push_back(big_from_json(v));
  return out;
}

std::vector<std::uint64_t> u64_vector(const Json& j) {
  std::vector<std::uint64_t> out;
  for (const auto& v : j) out.push_back(u64_from_json(v));
  return out;
}

Rational rational_from_json(const Json& j) { return parse_rational(j.get<std::string>()); }

}  // namespace

Json big_to_json(const BigInt& value) { return value.str(); }

BigInt big_from_json(const Json& j) {
  if (!j.is_string()) throw ParseError("expected a decimal string, got " + j.dump());
  return parse_bigint(j.get<std::string>());
}

std::uint64_t u64_from_json(const Json& j) {
  return to_u64(big_from_json(j), "JSON integer");
}

void to_json(Json& j, const Representation& rep) {
  j = Json::array();
  for (const auto& [element, count] : rep.terms()) {
    j.push_back(Json::array({big_to_json(element), u64_json(count)}));
  }
}

void from_json(const Json& j, Representation& rep) {
  rep = Representation();
  for (const auto& pair : j) rep.add(big_from_json(pair.at(0)), u64_from_json(pair.at(1)));
}

void to_json(Json& j, const ValidationReport& r) {
  Json failures = Json::array();
  for (const auto& f : r.failures) {
    failures.push_back({{"condition", f.condition},
                        {"element", big_to_json(f.element)},
                        {"detail", f.detail}});
  }
  j = Json{{"condition_i", r.condition_i},
           {"condition_ii", r.condition_ii},
           {"condition_iii", r.condition_iii},
           {"growth_bound", r.growth_bound},
           {"rho", to_string(r.rho)},
           {"max_rho", to_string(r.max_rho)},
           {"failures", failures}};
}

void from_json(const Json& j, ValidationReport& r) {
  r.condition_i = j.at("condition_i").get<bool>();
  r.condition_ii = j.at("condition_ii").get<bool>();
  r.condition_iii = j.at("condition_iii").get<bool>();
  r.growth_bound = j.at("growth_bound").get<bool>();
  r.rho = rational_from_json(j.at("rho"));
  r.max_rho = rational_from_json(j.at("max_rho"));
  r.failures.clear();
  for (const auto& f : j.at("failures")) {
    r.failures.push_back({f.at("condition").get<std::string>(), big_from_json(f.at("element")),
                          f.at("detail").get<std::string>()});
  }
}

void to_json(Json& j, const RegularityViolation& v) {
  j = Json{{"n", u64_json(v.n)},
           {"rank", u64_json(v.rank)},
           {"min_distinct_length", u64_json(v.min_distinct_length)},
           {"evidence", v.evidence}};
}

void from_json(const Json& j, RegularityViolation& v) {
  v.n = u64_from_json(j.at("n"));
  v.rank = u64_from_json(j.at("rank"));
  v.min_distinct_length = u64_from_json(j.at("min_distinct_length"));
  v.evidence = j.at("evidence").get<Representation>();
}

void to_json(Json& j, const LatticePoint& p) { j = big_array(p.coords()); }

LatticePoint lattice_point_from_json(const Json& j) { return LatticePoint(big_vector(j)); }

void to_json(Json& j, const Verdict& v) {
  j = Json{{"member", v.member}, {"ranks", u64_array(v.ranks)}, {"reason", v.reason}};
  if (v.witness) {
    Json points = Json::array();
    for (const auto& p : *v.witness) points.push_back(p);
    j["witness"] = points;
  } else {
    j["witness"] = nullptr;
  }
}

void from_json(const Json& j, Verdict& v) {
  v.member = j.at("member").get<bool>();
  v.ranks = u64_vector(j.at("ranks"));
  v.reason = j.at("reason").get<std::string>();
  v.witness.reset();
  if (!j.at("witness").is_null()) {
    std::vector<LatticePoint> points;
    for (const auto& p : j.at("witness")) points.push_back(lattice_point_from_json(p));
    v.witness = std::move(points);
  }
}

void to_json(Json& j, const Transcript& t) {
  Json round2 = Json::array();
  for (std::uint8_t b : t.round2) round2.push_back(b ? "1" : "0");
  j = Json{{"N", big_to_json(t.n)},
           {"rho", to_string(t.rho)},
           {"W", u64_json(t.width)},
           {"round1", t.round1},
           {"round2", round2},
           {"total_bits", u64_json(t.total_bits)},
           {"decision", t.decision}};
}

void from_json(const Json& j, Transcript& t) {
  t.n = big_from_json(j.at("N"));
  t.rho = rational_from_json(j.at("rho"));
  t.width = u64_from_json(j.at("W"));
  t.round1 = j.at("round1").get<std::vector<std::string>>();
  t.round2.clear();
  for (const auto& b : j.at("round2")) {
    const std::string bit = b.get<std::string>();
    if (bit != "0" && bit != "1") throw ParseError("round2 entries must be \"0\" or \"1\"");
    t.round2.push_back(bit == "1" ? 1 : 0);
  }
  t.total_bits = u64_from_json(j.at("total_bits"));
  t.decision = j.at("decision").get<bool>();
}

void to_json(Json& j, const BlockMatrix& m) {
  j = Json{{"rows", m.to_bit_rows()},
           {"row_sums", u64_array(m.row_sums())},
           {"col_sums", u64_array(m.col_sums())}};
}

BlockMatrix block_matrix_from_json(const Json& j) {
  const auto rows = j.at("rows").get<std::vector<std::string>>();
  return BlockMatrix::from_bit_rows(rows);
}

void to_json(Json& j, const ReducedInstance& inst) {
  j = Json{{"mode", to_string(inst.mode)},
           {"M", big_to_json(inst.m)},
           {"multiplier", big_to_json(inst.multiplier)},
           {"p1", big_to_json(inst.p1)},
           {"p2", big_to_json(inst.p2)},
           {"B1", big_array(inst.b1)},
           {"B2", big_array(inst.b2)},
           {"Z", big_array(inst.z)},
           {"target", big_to_json(inst.target)}};
}

void from_json(const Json& j, ReducedInstance& inst) {
  inst.mode = parse_reduction_mode(j.at("mode").get<std::string>());
  inst.m = big_from_json(j.at("M"));
  inst.multiplier = big_from_json(j.at("multiplier"));
  inst.p1 = big_from_json(j.at("p1"));
  inst.p2 = big_from_json(j.at("p2"));
  inst.b1 = big_vector(j.at("B1"));
  inst.b2 = big_vector(j.at("B2"));
  inst.z = big_vector(j.at("Z"));
  inst.target = big_from_json(j.at("target"));
}

void to_json(Json& j, const EmptySquareCertificate& c) {
  j = Json{{"corner", Json::array({big_to_json(c.square.x0), big_to_json(c.square.y0)})},
           {"side", u64_json(c.square.side)},
           {"per_point_rank", u64_array(c.per_point_rank)},
           {"all_excluded", c.all_excluded},
           {"inside_exceptional_set", c.inside_exceptional_set}};
}

void from_json(const Json& j, EmptySquareCertificate& c) {
  c.square.x0 = big_from_json(j.at("corner").at(0));
  c.square.y0 = big_from_json(j.at("corner").at(1));
  c.square.side = u64_from_json(j.at("side"));
  c.per_point_rank = u64_vector(j.at("per_point_rank"));
  c.all_excluded = j.at("all_excluded").get<bool>();
  c.inside_exceptional_set = j.at("inside_exceptional_set").get<bool>();
}

void to_json(Json& j, const DenseSquareCount& c) {
  j = Json{{"R", u64_json(c.r)},
           {"M", big_to_json(c.m)},
           {"exact_count", big_to_json(c.exact_count)},
           {"enumerated_count", big_to_json(c.enumerated_count)},
           {"paper_bound", big_to_json(c.paper_bound)},
           {"routes_agree", c.routes_agree},
           {"meets_bound", c.meets_bound}};
}

void from_json(const Json& j, DenseSquareCount& c) {
  c.r = u64_from_json(j.at("R"));
  c.m = big_from_json(j.at("M"));
  c.exact_count = big_from_json(j.at("exact_count"));
  c.enumerated_count = big_from_json(j.at("enumerated_count"));
  c.paper_bound = big_from_json(j.at("paper_bound"));
  c.routes_agree = j.at("routes_agree").get<bool>();
  c.meets_bound = j.at("meets_bound").get<bool>();
}

void to_json(Json& j, const SufficientResult& r) {
  j = Json{{"rank1", u64_json(r.rank1)},
           {"rank2", u64_json(r.rank2)},
           {"K", u64_json(r.k_value)},
           {"L", u64_json(r.l_value)},
           {"condition_holds", r.condition_holds},
           {"eps1", r.eps1},
           {"eps2", r.eps2},
           {"used_search", r.used_search},
           {"cap_relaxed", r.cap_relaxed},
           {"reason", r.reason}};
  j["lengthened"] = r.lengthened ? Json(*r.lengthened) : Json(nullptr);
  if (r.witness) {
    Json pairs = Json::array();
    for (const auto& [x, y] : *r.witness) {
      pairs.push_back(Json::array({big_to_json(x), big_to_json(y)}));
    }
    j["witness"] = pairs;
  } else {
    j["witness"] = nullptr;
  }
}

void from_json(const Json& j, SufficientResult& r) {
  r.rank1 = u64_from_json(j.at("rank1"));
  r.rank2 = u64_from_json(j.at("rank2"));
  r.k_value = u64_from_json(j.at("K"));
  r.l_value = u64_from_json(j.at("L"));
  r.condition_holds = j.at("condition_holds").get<bool>();
  r.eps1 = j.at("eps1").get<Representation>();
  r.eps2 = j.at("eps2").get<Representation>();
  r.used_search = j.at("used_search").get<bool>();
  r.cap_relaxed = j.at("cap_relaxed").get<bool>();
  r.reason = j.at("reason").get<std::string>();
  r.lengthened.reset();
  if (!j.at("lengthened").is_null()) r.lengthened = j.at("lengthened").get<Representation>();
  r.witness.reset();
  if (!j.at("witness").is_null()) {
    std::vector<std::pair<BigInt, BigInt>> pairs;
    for (const auto& pair : j.at("witness")) {
      if (!pair.is_array() || pair.size() != 2) throw ParseError("witness pair must have 2 entries");
      pairs.emplace_back(big_from_json(pair[0]), big_from_json(pair[1]));
    }
    r.witness = std::move(pairs);
  }
}

void to_json(Json& j, const SweepReport& r) {
  Json mismatches = Json::array();
  for (const auto& m : r.mismatches) {
    mismatches.push_back({{"p1", u64_json(m.p1)},
                          {"p2", u64_json(m.p2)},
                          {"reduction", m.reduction},
                          {"oracle", m.oracle}});
  }
  j = Json{{"M", u64_json(r.m)},
           {"mode", to_string(r.mode)},
           {"cells", u64_json(r.cells)},
           {"mismatches", mismatches}};
}

void from_json(const Json& j, SweepReport& r) {
  r.m = u64_from_json(j.at("M"));
  r.mode = parse_reduction_mode(j.at("mode").get<std::string>());
  r.cells = u64_from_json(j.at("cells"));
  r.mismatches.clear();
  for (const auto& m : j.at("mismatches")) {
    r.mismatches.push_back({u64_from_json(m.at("p1")), u64_from_json(m.at("p2")),
                            m.at("reduction").get<bool>(), m.at("oracle").get<bool>()});
  }
}

}  // namespace fsx
