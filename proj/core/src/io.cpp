#include "enriques/io.hpp"

#include <string>

#include "enriques/errors.hpp"

namespace enriques::io {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw PreconditionError(std::string("JSON: missing field \"") + key + "\"");
  }
  return j.at(key);
}

template <typename T, typename F>
Json encode_array(const T& items, F&& f) {
  Json out = Json::array();
  for (const auto& item : items) {
    out.push_back(f(item));
  }
  return out;
}

bool parse_bool(const Json& j) {
  if (!j.is_boolean()) {
    throw PreconditionError("JSON: expected a boolean");
  }
  return j.get<bool>();
}

Json encode_optional_int(const std::optional<int>& x) { return x ? Json(*x) : Json("unknown"); }

const char* locus_name(SemistableLocus l) {
  switch (l) {
    case SemistableLocus::all_semistable:
      return "all-semistable";
    case SemistableLocus::all_stable:
      return "all-stable";
    case SemistableLocus::codimension:
      break;
  }
  return "codimension";
}

}  // namespace

Json encode(const Integer& x) {
  if (fits_int64(x)) {
    return Json(to_int64(x));
  }
  return Json(x.get_str());
}

Json encode(const Rational& x) { return Json(to_string(x)); }

Json encode(const NumClass& x) { return encode(PicClass(x)); }

Json encode(const PicClass& x) {
  Json u = Json::array();
  Json e8 = Json::array();
  for (std::size_t i = 0; i < kLatticeRank; ++i) {
    (i < kE8Offset ? u : e8).push_back(encode(x.num[i]));
  }
  return Json{{"u", u}, {"e8", e8}, {"torsion", x.torsion}};
}

Json encode(const MukaiVector& v) {
  return Json{{"r", encode(v.rank())}, {"c1", encode(v.c1())}, {"s2", encode(v.s2())}};
}

Json encode(const PhiResult& r) {
  return Json{{"phi", encode(r.value)}, {"witness", encode(r.witness)}};
}

Json encode(const SquareReduction& r) {
  return Json{{"shift", encode(r.shift)},
              {"squares", encode_array(r.squares, [](const Integer& x) { return encode(x); })}};
}

Json encode(const ReductionResult& r) {
  return Json{{"twistDivisor", encode(r.twist_divisor)},
              {"finalC1", encode(r.final_c1)},
              {"finalC2", encode(r.final_c2)},
              {"k", encode(r.k)},
              {"intermediateC1", encode(r.intermediate_c1)}};
}

Json encode(const TableRow& r) {
  return Json{{"k", r.k},
              {"dim", "2c2" + (r.dim_offset < 0 ? std::to_string(r.dim_offset)
                                                  : "+" + std::to_string(r.dim_offset))},
              {"dimOffset", r.dim_offset},
              {"minC2", encode(r.min_c2)},
              {"minC1sq", encode(r.min_c1_squared)}};
}

Json encode(const PrimitiveDecomposition& d) {
  return Json{{"m", encode(d.m)}, {"v0", encode(d.primitive)}};
}

Json encode(const WallReport& r) {
  return Json{{"v", encode(r.v)},
              {"H", encode(r.h)},
              {"squareBound", encode(r.square_bound)},
              {"generic", r.generic},
              {"walls", encode_array(r.walls, [](const NumClass& x) { return encode(x); })}};
}

Json encode(const ModuliProfile& p) {
  Json out{{"v", encode(p.v)}, {"m", encode(p.m)}, {"v0", encode(p.v0)}};
  out["nonempty"] = p.nonempty;
  out["dimension"] = p.dimension ? encode(*p.dimension) : Json("empty");
  out["stableNonempty"] = p.stable_nonempty;
  out["ssCodim"] = p.locus == SemistableLocus::codimension ? encode(p.ss_codim)
                                                           : Json(locus_name(p.locus));
  out["normalKTrivial"] = p.normal_k_trivial;
  out["components"] = encode_optional_int(p.components);
  return out;
}

Json encode(const HodgeDescriptor& d) {
  Json out{{"strategy", d.strategy}};
  if (d.points) {
    out["n"] = encode(*d.points);
  }
  out["components"] = encode_optional_int(d.components);
  if (!d.target_ranks.empty()) {
    out["targetRanks"] = d.target_ranks;
  }
  if (d.irreducible) {
    out["irreducible"] = *d.irreducible;
  }
  out["twistedComponentEmpty"] = d.twisted_component_empty;
  return out;
}

Json encode(const HodgePolynomial& p) {
  Json out = Json::object();
  for (const auto& [key, c] : p) {
    out[std::to_string(key.first) + "," + std::to_string(key.second)] = encode(c);
  }
  return out;
}

Json encode(const FeasibilityCertificate& c) {
  Json bounds = Json::array();
  for (const DestabilizerBounds& b : c.degree_bounds) {
    bounds.push_back(Json{{"degMax", encode(b.degree)}, {"sqMax", encode(b.square)}});
  }
  return Json{{"H2", encode(c.h2)},
              {"k", c.k},
              {"t", encode(c.t)},
              {"a", encode(c.a)},
              {"lengths", encode_array(c.lengths, [](const Integer& x) { return encode(x); })},
              {"h0Bound", encode(c.h0_bound)},
              {"lengthsBounded", c.lengths_bounded},
              {"margins", encode_array(c.margins, [](const Rational& x) { return encode(x); })},
              {"slopes", encode_array(c.slopes, [](const Rational& x) { return encode(x); })},
              {"degreeBounds", bounds},
              {"pass", c.pass}};
}

Json encode(const SweepRow& r) {
  return Json{{"k", r.k},
              {"minH2", encode(r.min_h2)},
              {"maxH2", encode(r.max_h2)},
              {"cases", encode(r.cases)},
              {"pass", r.all_pass},
              {"minMargins",
               encode_array(r.min_margins, [](const Rational& x) { return encode(x); })}};
}

Integer parse_integer(const Json& j) {
  if (j.is_number_integer()) {
    return j.is_number_unsigned() ? Integer(std::to_string(j.get<std::uint64_t>()))
                                  : Integer(std::to_string(j.get<std::int64_t>()));
  }
  if (j.is_string()) {
    Integer out;
    if (out.set_str(j.get<std::string>(), 10) != 0) {
      throw PreconditionError("JSON: malformed integer \"" + j.get<std::string>() + "\"");
    }
    return out;
  }
  throw PreconditionError("JSON: expected an integer");
}

Rational parse_rational(const Json& j) {
  if (j.is_number_integer()) {
    return Rational(parse_integer(j));
  }
  if (!j.is_string()) {
    throw PreconditionError("JSON: expected a rational string");
  }
  Rational out;
  const std::string s = j.get<std::string>();
  if (out.set_str(s, 10) != 0 || out.get_den() == 0) {
    throw PreconditionError("JSON: malformed rational \"" + s + "\"");
  }
  out.canonicalize();
  return out;
}

PicClass parse_pic_class(const Json& j) {
  const Json& u = field(j, "u");
  const Json& e8 = field(j, "e8");
  if (!u.is_array() || u.size() != kE8Offset || !e8.is_array() ||
      e8.size() != kLatticeRank - kE8Offset) {
    throw PreconditionError("JSON: a class needs \"u\" of length 2 and \"e8\" of length 8");
  }
  NumClass x;
  for (std::size_t i = 0; i < kLatticeRank; ++i) {
    x[i] = parse_integer(i < kE8Offset ? u[i] : e8[i - kE8Offset]);
  }
  int torsion = 0;
  if (j.contains("torsion")) {
    const Integer t = parse_integer(j.at("torsion"));
    if (t != 0 && t != 1) {
      throw PreconditionError("JSON: torsion must be 0 or 1");
    }
    torsion = t == 1 ? 1 : 0;
  }
  return PicClass(x, torsion);
}

NumClass parse_num_class(const Json& j) {
  const PicClass c = parse_pic_class(j);
  if (c.torsion != 0) {
    throw PreconditionError("JSON: a numerical class cannot carry the torsion bit");
  }
  return c.num;
}

MukaiVector parse_mukai(const Json& j) {
  return MukaiVector(parse_integer(field(j, "r")), parse_pic_class(field(j, "c1")),
                     parse_integer(field(j, "s2")));
}

PhiResult parse_phi_result(const Json& j) {
  return PhiResult{parse_integer(field(j, "phi")), parse_num_class(field(j, "witness"))};
}

ReductionResult parse_reduction(const Json& j) {
  return ReductionResult{parse_pic_class(field(j, "twistDivisor")),
                         parse_pic_class(field(j, "finalC1")),
                         parse_integer(field(j, "finalC2")), parse_integer(field(j, "k")),
                         parse_pic_class(field(j, "intermediateC1"))};
}

TableRow parse_table_row(const Json& j) {
  TableRow r;
  r.k = static_cast<int>(to_int64(parse_integer(field(j, "k"))));
  r.dim_offset = static_cast<int>(to_int64(parse_integer(field(j, "dimOffset"))));
  r.min_c2 = parse_integer(field(j, "minC2"));
  r.min_c1_squared = parse_integer(field(j, "minC1sq"));
  return r;
}

WallReport parse_wall_report(const Json& j) {
  WallReport r{parse_mukai(field(j, "v")), parse_num_class(field(j, "H")), {},
               parse_bool(field(j, "generic")), parse_integer(field(j, "squareBound"))};
  for (const Json& w : field(j, "walls")) {
    r.walls.push_back(parse_num_class(w));
  }
  return r;
}

ModuliProfile parse_moduli_profile(const Json& j) {
  ModuliProfile p{parse_mukai(field(j, "v")),
                  parse_integer(field(j, "m")),
                  parse_mukai(field(j, "v0")),
                  false,
                  std::nullopt,
                  false,
                  SemistableLocus::all_stable,
                  Integer(0),
                  false,
                  std::nullopt};
  p.nonempty = parse_bool(field(j, "nonempty"));
  const Json& dim = field(j, "dimension");
  if (!(dim.is_string() && dim.get<std::string>() == "empty")) {
    p.dimension = parse_integer(dim);
  }
  p.stable_nonempty = parse_bool(field(j, "stableNonempty"));
  const Json& codim = field(j, "ssCodim");
  if (codim.is_string() && codim.get<std::string>() == "all-semistable") {
    p.locus = SemistableLocus::all_semistable;
  } else if (codim.is_string() && codim.get<std::string>() == "all-stable") {
    p.locus = SemistableLocus::all_stable;
  } else {
    p.locus = SemistableLocus::codimension;
    p.ss_codim = parse_integer(codim);
  }
  p.normal_k_trivial = parse_bool(field(j, "normalKTrivial"));
  const Json& comps = field(j, "components");
  if (!(comps.is_string() && comps.get<std::string>() == "unknown")) {
    p.components = static_cast<int>(to_int64(parse_integer(comps)));
  }
  return p;
}

HodgePolynomial parse_hodge_polynomial(const Json& j) {
  if (!j.is_object()) {
    throw PreconditionError("JSON: expected a coefficient map");
  }
  HodgePolynomial p;
  for (const auto& [key, value] : j.items()) {
    const auto comma = key.find(',');
    if (comma == std::string::npos) {
      throw PreconditionError("JSON: coefficient key must look like \"p,q\"");
    }
    p[{std::stoi(key.substr(0, comma)), std::stoi(key.substr(comma + 1))}] = parse_integer(value);
  }
  return p;
}

FeasibilityCertificate parse_certificate(const Json& j) {
  FeasibilityCertificate c;
  c.h2 = parse_integer(field(j, "H2"));
  c.k = static_cast<int>(to_int64(parse_integer(field(j, "k"))));
  c.t = parse_integer(field(j, "t"));
  c.a = parse_integer(field(j, "a"));
  c.h0_bound = parse_integer(field(j, "h0Bound"));
  c.lengths_bounded = parse_bool(field(j, "lengthsBounded"));
  c.pass = parse_bool(field(j, "pass"));
  const Json& lengths = field(j, "lengths");
  const Json& margins = field(j, "margins");
  const Json& slopes = field(j, "slopes");
  const Json& bounds = field(j, "degreeBounds");
  if (lengths.size() != 3 || margins.size() != 3 || slopes.size() != 3 || bounds.size() != 3) {
    throw PreconditionError("JSON: certificate arrays must have three entries");
  }
  for (std::size_t i = 0; i < 3; ++i) {
    c.lengths[i] = parse_integer(lengths[i]);
    c.margins[i] = parse_rational(margins[i]);
    c.slopes[i] = parse_rational(slopes[i]);
    c.degree_bounds[i] = {parse_rational(field(bounds[i], "degMax")),
                          parse_rational(field(bounds[i], "sqMax"))};
  }
  return c;
}

}  // namespace enriques::io
