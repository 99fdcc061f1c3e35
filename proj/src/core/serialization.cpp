#include "core/serialization.hpp"

#include <sstream>

#include "core/errors.hpp"

namespace meshk0 {

namespace {

Json integer_to_json(const Integer& value) {
  if (value.fits_slong_p()) return value.get_si();
  return value.get_str();
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (j.is_string()) return Integer(j.get<std::string>());
  throw ParseError("expected an integer, got " + j.dump());
}

Json rationals_to_json(const std::set<Rational>& values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(v.get_str());
  return out;
}

std::set<Rational> rationals_from_json(const Json& j) {
  std::set<Rational> out;
  for (const auto& v : j) {
    Rational q(v.get<std::string>());
    q.canonicalize();
    out.insert(q);
  }
  return out;
}

template <class T>
std::string braces(const std::set<T>& values) {
  std::string out = "{";
  for (const auto& v : values) {
    if (out.size() > 1) out += ", ";
    std::ostringstream s;
    s << v;
    out += s.str();
  }
  return out + "}";
}

template <class T>
Json optional_field(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

}  // namespace

Json group_to_json(const AbelianGroup& group) {
  Json torsion = Json::array();
  for (const auto& d : group.torsion()) torsion.push_back(integer_to_json(d));
  return {{"rank", group.free_rank()}, {"torsion", torsion}};
}

AbelianGroup group_from_json(const Json& j) {
  try {
    std::vector<Integer> orders;
    for (const auto& d : j.at("torsion")) orders.push_back(integer_from_json(d));
    return {j.at("rank").get<long>(), orders};
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed group JSON: ") + e.what());
  }
}

Json matrix_to_json(const IntMatrix& m) {
  Json data = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) data.push_back(m(r, c).get_str());
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"data", data}};
}

IntMatrix matrix_from_json(const Json& j) {
  try {
    const auto rows = j.at("rows").get<std::size_t>();
    const auto cols = j.at("cols").get<std::size_t>();
    const auto& data = j.at("data");
    if (data.size() != rows * cols) throw ParseError("matrix data length does not match its shape");
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < data.size(); ++i) m(i / cols, i % cols) = integer_from_json(data[i]);
    return m;
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed matrix JSON: ") + e.what());
  }
}

const char* characteristic_name(Characteristic characteristic) {
  return characteristic == Characteristic::Two ? "2" : "0";
}

Characteristic parse_characteristic(const std::string& text) {
  if (text == "0" || text == "zero") return Characteristic::Zero;
  if (text == "2" || text == "two") return Characteristic::Two;
  throw ParseError("characteristic must be 0 or 2, got '" + text + "'");
}

Json profile_to_json(const InvariantProfile& p) {
  Json j;
  j["triple"] = p.triple.to_string();
  j["type"] = type_name(p.triple.type());
  j["char"] = characteristic_name(p.characteristic);
  j["a"] = optional_field(p.a);
  j["b"] = p.b ? Json(*p.b) : Json(nullptr);
  j["c"] = p.c ? rationals_to_json(*p.c) : Json(nullptr);
  j["d_group"] = group_to_json(p.d_group);
  j["has_ct"] = optional_field(p.has_ct);
  j["e"] = optional_field(p.e);
  j["f"] = p.f ? rationals_to_json(*p.f) : Json(nullptr);
  j["subtype"] = optional_field(p.subtype);
  return j;
}

InvariantProfile profile_from_json(const Json& j) {
  try {
    InvariantProfile p{.triple = MeshTriple::parse(j.at("triple").get<std::string>())};
    p.characteristic = parse_characteristic(j.at("char").get<std::string>());
    if (!j.at("a").is_null()) p.a = j["a"].get<long>();
    if (!j.at("b").is_null()) p.b = j["b"].get<std::set<long>>();
    if (!j.at("c").is_null()) p.c = rationals_from_json(j["c"]);
    p.d_group = group_from_json(j.at("d_group"));
    if (!j.at("has_ct").is_null()) p.has_ct = j["has_ct"].get<bool>();
    if (!j.at("e").is_null()) p.e = j["e"].get<long>();
    if (!j.at("f").is_null()) p.f = rationals_from_json(j["f"]);
    if (!j.at("subtype").is_null()) p.subtype = j["subtype"].get<std::string>();
    return p;
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed profile JSON: ") + e.what());
  }
}

std::string profile_to_text(const InvariantProfile& p) {
  std::ostringstream out;
  out << p.triple.to_string() << "  type " << type_name(p.triple.type()) << "  char "
      << characteristic_name(p.characteristic) << "\n";
  if (p.a) out << "a = " << *p.a << "\n";
  if (p.b) out << "b = " << braces(*p.b) << "\n";
  if (p.c) out << "c = " << braces(*p.c) << "\n";
  out << "d_group = " << p.d_group.to_text() << "\n";
  if (p.has_ct) out << "has_ct = " << (*p.has_ct ? "true" : "false") << "\n";
  if (p.e) out << "e = " << *p.e << "\n";
  if (p.f) out << "f = " << braces(*p.f) << "\n";
  if (p.subtype) out << "subtype = " << *p.subtype << "\n";
  return out.str();
}

Json verdict_to_json(const Verdict& verdict, const InvariantProfile& p1, const InvariantProfile& p2) {
  Json j;
  j["kind"] = verdict_kind_name(verdict.kind);
  j["separator"] = verdict.kind == Verdict::Kind::DistinguishedBy ? Json(verdict.separator) : Json(nullptr);
  j["details"] = {{"first", profile_to_json(p1)}, {"second", profile_to_json(p2)}};
  return j;
}

Verdict verdict_from_json(const Json& j) {
  try {
    const auto kind = j.at("kind").get<std::string>();
    for (auto k : {Verdict::Kind::SameQuiver, Verdict::Kind::BothA1, Verdict::Kind::DistinguishedBy,
                   Verdict::Kind::Indistinguishable}) {
      if (kind == verdict_kind_name(k)) {
        Verdict v{k, ""};
        if (k == Verdict::Kind::DistinguishedBy) v.separator = j.at("separator").get<std::string>();
        return v;
      }
    }
    throw ParseError("unknown verdict kind '" + kind + "'");
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed verdict JSON: ") + e.what());
  }
}

}  // namespace meshk0
