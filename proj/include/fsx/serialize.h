#ifndef FSX_SERIALIZE_H_
#define FSX_SERIALIZE_H_

// JSON mappings for the library's value types. Every integer is written as a
// decimal string so arbitrary-precision values survive the round trip.

#include "json.hpp"

#include "fsx/bigint.h"
#include "fsx/lattice.h"
#include "fsx/membership.h"
#include "fsx/nonregular.h"
#include "fsx/protocol.h"
#include "fsx/reduction.h"
#include "fsx/representation.h"
#include "fsx/sequences.h"

namespace fsx {

using Json = nlohmann::json;

Json big_to_json(const BigInt& value);
BigInt big_from_json(const Json& j);
std::uint64_t u64_from_json(const Json& j);

void to_json(Json& j, const Representation& rep);
void from_json(const Json& j, Representation& rep);

void to_json(Json& j, const ValidationReport& report);
void from_json(const Json& j, ValidationReport& report);

void to_json(Json& j, const RegularityViolation& v);
void from_json(const Json& j, RegularityViolation& v);

void to_json(Json& j, const LatticePoint& p);
LatticePoint lattice_point_from_json(const Json& j);

void to_json(Json& j, const Verdict& verdict);
void from_json(const Json& j, Verdict& verdict);

void to_json(Json& j, const Transcript& t);
void from_json(const Json& j, Transcript& t);

void to_json(Json& j, const BlockMatrix& m);
BlockMatrix block_matrix_from_json(const Json& j);

void to_json(Json& j, const ReducedInstance& inst);
void from_json(const Json& j, ReducedInstance& inst);

void to_json(Json& j, const EmptySquareCertificate& c);
void from_json(const Json& j, EmptySquareCertificate& c);

void to_json(Json& j, const DenseSquareCount& c);
void from_json(const Json& j, DenseSquareCount& c);

void to_json(Json& j, const SufficientResult& r);
void from_json(const Json& j, SufficientResult& r);

void to_json(Json& j, const SweepReport& r);
void from_json(const Json& j, SweepReport& r);

}  // namespace fsx

#endif  // FSX_SERIALIZE_H_
