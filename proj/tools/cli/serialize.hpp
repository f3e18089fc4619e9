#pragma once

#include <json.hpp>

#include "sfrey/pipeline.hpp"

namespace sfrey::io {

using Json = nlohmann::ordered_json;

Json to_json(const Int& v);
Json to_json(const AlgInt& x);
Json to_json(const QuadField& k);
Json to_json(const IdealHNF& ideal);
Json to_json(const PrimeIdeal& prime);
Json to_json(const BinaryCubic& f);
Json to_json(const BinaryQuadratic& h);
Json to_json(const BinaryForm& f);
Json to_json(const WeierstrassCurve& e);
Json to_json(const KFraction& x);
Json to_json(const CurveInvariants& inv);
Json to_json(const ExceptionalSet& s);
Json to_json(const TMSolution& sol);
Json to_json(const AuditReport& r);

/// Integers may be JSON numbers or decimal strings.
Int int_from_json(const Json& j);
/// An integer (rational element) or an [a, b] pair.
AlgInt element_from_json(const QuadField& k, const Json& j);
/// {"d": -5}, {"d": "Q"}, a bare integer or "Q".
QuadField field_from_json(const Json& j);
IdealHNF ideal_from_json(const QuadField& k, const Json& j);
/// {"coeffs": [...]} or the bare coefficient list.
BinaryCubic form_from_json(const QuadField& k, const Json& j);
WeierstrassCurve curve_from_json(const QuadField& k, const Json& j);

}  // namespace sfrey::io
