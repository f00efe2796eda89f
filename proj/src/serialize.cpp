#include "arconv/serialize.hpp"

#include "json.hpp"

#include <sstream>

namespace arconv {

using json = nlohmann::ordered_json;

namespace {

json rat_json(const Rat& r) { return json::array({r.get_num().get_str(), r.get_den().get_str()}); }

json poly_json(const RatPoly& p) {
  json out = json::array();
  for (const Rat& c : p.coefficients()) out.push_back(rat_json(c));
  return out;
}

json value_json(const Value& v) {
  return std::visit(
      [](const auto& x) -> json {
        if constexpr (std::is_same_v<std::decay_t<decltype(x)>, Rat>) return rat_json(x);
        else return poly_json(x);
      },
      v);
}

[[noreturn]] void bad(const std::string& what) { throw Error(Errc::parse_error, what); }

Int parse_int(const json& j, const char* where) {
  if (!j.is_string()) bad(std::string(where) + " must be a decimal string");
  Int out;
  const auto& s = j.get_ref<const std::string&>();
  if (s.empty() || out.set_str(s, 10) != 0) bad(std::string(where) + " is not an integer: '" + s + "'");
  return out;
}

Rat rat_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) bad("a rational must be a [numerator, denominator] pair");
  Int den = parse_int(j[1], "denominator");
  if (den == 0) bad("zero denominator");
  return make_rat(parse_int(j[0], "numerator"), den);
}

RatPoly poly_from_json(const json& j) {
  std::vector<Rat> coeffs;
  for (const auto& c : j) coeffs.push_back(rat_from_json(c));
  return RatPoly(std::move(coeffs));
}

bool is_rat_entry(const json& j) { return j.is_array() && !j.empty() && j[0].is_string(); }

}  // namespace

std::size_t depth_of(const AnySeq& s) {
  return std::visit([](const auto& f) { return f.depth(); }, s);
}

std::string to_json(const NamedSeq& s) {
  json out;
  out["name"] = s.name;
  out["depth"] = depth_of(s.seq);
  json values = json::array();
  std::visit(
      [&](const auto& f) {
        for (const auto& v : f) values.push_back(value_json(Value(v)));
      },
      s.seq);
  out["values"] = std::move(values);
  return out.dump() + "\n";
}

NamedSeq seq_from_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    bad(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) bad("sequence JSON must be an object");
  if (!j.contains("values") || !j["values"].is_array()) bad("missing \"values\" array");
  const json& values = j["values"];
  if (values.empty()) bad("\"values\" must hold at least f(0)");
  if (j.contains("depth")) {
    if (!j["depth"].is_number_unsigned()) bad("\"depth\" must be a nonnegative integer");
    if (j["depth"].get<std::size_t>() + 1 != values.size()) bad("\"depth\" does not match the number of values");
  }
  NamedSeq out{"", Seq(0)};
  if (j.contains("name")) {
    if (!j["name"].is_string()) bad("\"name\" must be a string");
    out.name = j["name"].get<std::string>();
  }
  bool all_rat = true;
  for (const auto& v : values) {
    if (!v.is_array()) bad("each value must be an array");
    all_rat = all_rat && is_rat_entry(v);
  }
  if (all_rat) {
    std::vector<Rat> r;
    for (const auto& v : values) r.push_back(rat_from_json(v));
    out.seq = Seq(std::move(r));
  } else {
    std::vector<RatPoly> p;
    for (const auto& v : values) p.push_back(is_rat_entry(v) ? RatPoly(rat_from_json(v)) : poly_from_json(v));
    out.seq = PolySeq(std::move(p));
  }
  return out;
}

std::string to_csv(const NamedSeq& s) {
  std::ostringstream os;
  std::visit(
      [&](const auto& f) {
        using R = typename std::decay_t<decltype(f)>::value_type;
        if constexpr (std::is_same_v<R, Rat>) {
          os << "k,numerator,denominator\n";
          for (std::size_t k = 0; k < f.size(); ++k) os << k << ',' << f[k].get_num() << ',' << f[k].get_den() << '\n';
        } else {
          os << "k,polynomial\n";
          for (std::size_t k = 0; k < f.size(); ++k) os << k << ',' << f[k].to_string() << '\n';
        }
      },
      s.seq);
  return os.str();
}

std::string to_json(const std::string& name, const DirSeq& f) {
  json out;
  out["name"] = name;
  out["bound"] = f.bound();
  out["index_base"] = 1;
  json values = json::array();
  for (const Rat& v : f.values()) values.push_back(rat_json(v));
  out["values"] = std::move(values);
  return out.dump() + "\n";
}

std::string to_json(const IdentityReport& report) {
  json out;
  out["name"] = report.name;
  json params = json::object();
  for (const auto& [k, v] : report.params) params[k] = v;
  out["params"] = std::move(params);
  out["depth"] = report.depth;
  out["pass"] = report.pass;
  if (report.first_failure) {
    const Failure& f = *report.first_failure;
    json index;
    if (f.index.size() == 1) {
      index = f.index.front().second;
    } else {
      index = json::object();
      for (const auto& [k, v] : f.index) index[k] = v;
    }
    json failure;
    failure["index"] = std::move(index);
    failure["lhs"] = value_json(f.lhs);
    failure["rhs"] = value_json(f.rhs);
    out["first_failure"] = std::move(failure);
  } else {
    out["first_failure"] = nullptr;
  }
  out["notes"] = report.notes;
  return out.dump(2) + "\n";
}

std::string value_string(const Value& v) {
  return std::visit(
      [](const auto& x) -> std::string {
        if constexpr (std::is_same_v<std::decay_t<decltype(x)>, Rat>) return to_string(x);
        else return x.to_string();
      },
      v);
}

}  // namespace arconv
