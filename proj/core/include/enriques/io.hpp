#ifndef ENRIQUES_IO_HPP
#define ENRIQUES_IO_HPP

// JSON encoding of every value the command line tool reads or prints.
//
//   class          {"u": [u1, u2], "e8": [a1, ..., a8], "torsion": 0 | 1}
//   Mukai vector   {"r": int, "c1": class, "s2": int}   (s2 = 2s)
//   integer        JSON number when it fits in 64 bits, else decimal string
//   rational       string "p" or "p/q"
//
// Parsers throw PreconditionError on malformed input.

#include <nlohmann/json.hpp>

#include "enriques/enumeration.hpp"
#include "enriques/feasibility.hpp"
#include "enriques/integer.hpp"
#include "enriques/lattice.hpp"
#include "enriques/moduli.hpp"
#include "enriques/mukai.hpp"
#include "enriques/reduction.hpp"
#include "enriques/walls.hpp"

namespace enriques::io {

using Json = nlohmann::ordered_json;

Json encode(const Integer& x);
Json encode(const Rational& x);
Json encode(const NumClass& x);
Json encode(const PicClass& x);
Json encode(const MukaiVector& v);
Json encode(const PhiResult& r);
Json encode(const SquareReduction& r);
Json encode(const ReductionResult& r);
Json encode(const TableRow& r);
Json encode(const PrimitiveDecomposition& d);
Json encode(const WallReport& r);
Json encode(const ModuliProfile& p);
Json encode(const HodgeDescriptor& d);
Json encode(const HodgePolynomial& p);
Json encode(const FeasibilityCertificate& c);
Json encode(const SweepRow& r);

Integer parse_integer(const Json& j);
Rational parse_rational(const Json& j);
PicClass parse_pic_class(const Json& j);
/// Like parse_pic_class but rejects a set torsion bit.
NumClass parse_num_class(const Json& j);
MukaiVector parse_mukai(const Json& j);
PhiResult parse_phi_result(const Json& j);
ReductionResult parse_reduction(const Json& j);
TableRow parse_table_row(const Json& j);
WallReport parse_wall_report(const Json& j);
ModuliProfile parse_moduli_profile(const Json& j);
HodgePolynomial parse_hodge_polynomial(const Json& j);
FeasibilityCertificate parse_certificate(const Json& j);

}  // namespace enriques::io

#endif  // ENRIQUES_IO_HPP
