#include "arconv/arconv.h"

#include "arconv/bfile.hpp"
#include "arconv/identities.hpp"
#include "arconv/serialize.hpp"
#include "arconv/special.hpp"
#include "arconv/table1.hpp"
#include "arconv/units.hpp"

#include <cstdlib>
#include <cstring>
#include <set>

using namespace arconv;

struct arconv_seq {
  NamedSeq value;
};

struct arconv_params {
  Params values;
};

namespace {

thread_local std::string g_last_error;

arconv_status status_of(Errc c) {
  switch (c) {
    case Errc::depth_mismatch: return ARCONV_ERR_DEPTH_MISMATCH;
    case Errc::not_a_unit: return ARCONV_ERR_NOT_A_UNIT;
    case Errc::not_invertible_in_ring: return ARCONV_ERR_NOT_INVERTIBLE;
    case Errc::root_not_representable: return ARCONV_ERR_ROOT;
    case Errc::invalid_argument: return ARCONV_ERR_USAGE;
    case Errc::unknown_name: return ARCONV_ERR_UNKNOWN_NAME;
    case Errc::parse_error: return ARCONV_ERR_PARSE;
  }
  return ARCONV_ERR_INTERNAL;
}

template <class F>
arconv_status guarded(F&& body) {
  try {
    body();
    g_last_error.clear();
    return ARCONV_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return status_of(e.code());
  } catch (const std::exception& e) {
    g_last_error = std::string("internal error: ") + e.what();
    return ARCONV_ERR_INTERNAL;
  }
}

void require(bool ok, const char* what) {
  if (!ok) throw Error(Errc::invalid_argument, what);
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.data(), s.size() + 1);
  return out;
}

class ParamReader {
 public:
  ParamReader(const arconv_params* p, std::string context, std::set<std::string> allowed)
      : context_(std::move(context)) {
    if (!p) return;
    values_ = p->values;
    for (const auto& [k, v] : values_)
      if (!allowed.count(k)) throw Error(Errc::invalid_argument, context_ + " does not take parameter '" + k + "'");
  }

  bool has(const std::string& key) const { return values_.count(key) > 0; }
  const std::string& raw(const std::string& key) const { return values_.at(key); }

  long integer(const std::string& key, std::optional<long> fallback = std::nullopt) const {
    if (!has(key)) {
      if (fallback) return *fallback;
      throw Error(Errc::invalid_argument, context_ + " needs parameter '" + key + "'");
    }
    const std::string& v = raw(key);
    try {
      std::size_t pos = 0;
      long out = std::stol(v, &pos);
      if (pos == v.size()) return out;
    } catch (const std::logic_error&) {
    }
    throw Error(Errc::invalid_argument, context_ + ": parameter '" + key + "' must be an integer, got '" + v + "'");
  }

  /// A rational, or nullopt when the value is the indeterminate "x".
  std::optional<Rat> rational_or_x(const std::string& key) const {
    if (!has(key)) throw Error(Errc::invalid_argument, context_ + " needs parameter '" + key + "'");
    if (raw(key) == "x") return std::nullopt;
    try {
      return parse_rat(raw(key));
    } catch (const Error&) {
      throw Error(Errc::invalid_argument, context_ + ": parameter '" + key + "' must be NUM/DEN or x");
    }
  }

  std::string suffix() const {
    if (values_.empty()) return "";
    std::string out = "(";
    bool first = true;
    for (const auto& [k, v] : values_) {
      out += (first ? "" : ",") + k + "=" + v;
      first = false;
    }
    return out + ")";
  }

 private:
  std::string context_;
  Params values_;
};

unsigned long positive(long v, const char* what) {
  if (v < 1) throw Error(Errc::invalid_argument, std::string(what) + " must be >= 1");
  return static_cast<unsigned long>(v);
}

AnySeq generate(const std::string& name, const ParamReader& p, std::size_t K) {
  if (name == "e" || name == "I" || name == "nu" || name == "xi1" || name == "fact")
    return make_named<Rat>(parse_named(name), K);
  if (name == "eps") {
    auto x = p.rational_or_x("x");
    if (x) return make_eps(*x, K);
    return make_eps(RatPoly::x(), K);
  }
  if (name == "xi") {
    auto x = p.rational_or_x("x");
    long m = p.integer("m", 1);
    if (x) return make_xi(*x, m, K);
    return make_xi(RatPoly::x(), m, K);
  }
  if (name == "bernoulli") return bernoulli(K);
  if (name == "bernoulli-poly") return bernoulli_poly(K);
  if (name == "euler1") return euler1(K);
  if (name == "euler-poly") return euler_poly(K);
  if (name == "norlund") return norlund(p.integer("p"), p.integer("q", 1), K);
  if (name == "faulhaber") {
    long n = p.integer("n");
    if (n < 0) throw Error(Errc::invalid_argument, "faulhaber needs n >= 0");
    return faulhaber(static_cast<unsigned long>(n), K);
  }
  if (name == "mobius-bernoulli") return mobius_bernoulli(positive(p.integer("n"), "n"), K);
  if (name == "sigma") return sigma(K);
  throw Error(Errc::unknown_name, "no generator named '" + name + "'");
}

std::set<std::string> generator_params(const std::string& name) {
  if (name == "eps") return {"x"};
  if (name == "xi") return {"x", "m"};
  if (name == "norlund") return {"p", "q"};
  if (name == "faulhaber" || name == "mobius-bernoulli") return {"n"};
  return {};
}

std::string strip_wrapper(const std::string& name, const std::string& wrapper) {
  const std::string open = wrapper + "(";
  if (name.size() > open.size() + 1 && name.compare(0, open.size(), open) == 0 && name.back() == ')')
    return name.substr(open.size(), name.size() - open.size() - 1);
  return {};
}

/// Name of op(name); applying an operation to the result of its inverse unwraps it.
std::string result_name(const std::string& op, const std::string& name, const std::string& undoes) {
  std::string inner = strip_wrapper(name, undoes);
  if (!inner.empty()) return inner;
  return op + "(" + name + ")";
}

template <class F>
AnySeq apply_unary(const AnySeq& in, F&& fn) {
  return std::visit([&](const auto& f) -> AnySeq { return fn(f); }, in);
}

template <class F>
AnySeq apply_binary(const AnySeq& a, const AnySeq& b, F&& fn) {
  if (a.index() != b.index()) {
    // Mixed operands: lift the rational one.
    auto as_poly = [](const AnySeq& s) { return std::holds_alternative<PolySeq>(s) ? std::get<PolySeq>(s) : lift(std::get<Seq>(s)); };
    return fn(as_poly(a), as_poly(b));
  }
  return std::visit(
      [&](const auto& f) -> AnySeq {
        using T = std::decay_t<decltype(f)>;
        return fn(f, std::get<T>(b));
      },
      a);
}

}  // namespace

extern "C" {

const char* arconv_version(void) { return "1.0.0"; }

const char* arconv_last_error(void) { return g_last_error.c_str(); }

const char* arconv_status_name(arconv_status status) {
  switch (status) {
    case ARCONV_OK: return "OK";
    case ARCONV_ERR_USAGE: return "InvalidArgument";
    case ARCONV_ERR_UNKNOWN_NAME: return "UnknownName";
    case ARCONV_ERR_PARSE: return "ParseError";
    case ARCONV_ERR_DEPTH_MISMATCH: return "DepthMismatch";
    case ARCONV_ERR_NOT_A_UNIT: return "NotAUnit";
    case ARCONV_ERR_NOT_INVERTIBLE: return "NotInvertibleInRing";
    case ARCONV_ERR_ROOT: return "RootNotRepresentable";
    case ARCONV_ERR_INTERNAL: return "Internal";
  }
  return "Unknown";
}

void arconv_string_free(char* s) { std::free(s); }

arconv_params* arconv_params_new(void) {
  try {
    return new arconv_params();
  } catch (...) {
    g_last_error = "out of memory";
    return nullptr;
  }
}

void arconv_params_free(arconv_params* params) { delete params; }

arconv_status arconv_params_set(arconv_params* params, const char* key, const char* value) {
  return guarded([&] {
    require(params && key && value, "arconv_params_set: null argument");
    params->values[key] = value;
  });
}

arconv_status arconv_gen(const char* name, const arconv_params* params, size_t depth, arconv_seq** out) {
  return guarded([&] {
    require(name && out, "arconv_gen: null argument");
    *out = nullptr;
    ParamReader p(params, name, generator_params(name));
    AnySeq s = generate(name, p, depth);
    *out = new arconv_seq{NamedSeq{std::string(name) + p.suffix(), std::move(s)}};
  });
}

arconv_status arconv_seq_from_json(const char* text, arconv_seq** out) {
  return guarded([&] {
    require(text && out, "arconv_seq_from_json: null argument");
    *out = nullptr;
    *out = new arconv_seq{seq_from_json(text)};
  });
}

arconv_status arconv_seq_from_values(const char* name, const char* const* values, size_t count, arconv_seq** out) {
  return guarded([&] {
    require(out && (values || count == 0), "arconv_seq_from_values: null argument");
    *out = nullptr;
    require(count > 0, "arconv_seq_from_values: need at least one value");
    std::vector<Rat> v;
    v.reserve(count);
    for (size_t i = 0; i < count; ++i) {
      require(values[i] != nullptr, "arconv_seq_from_values: null value");
      v.push_back(parse_rat(values[i]));
    }
    *out = new arconv_seq{NamedSeq{name ? name : "", Seq(std::move(v))}};
  });
}

void arconv_seq_free(arconv_seq* seq) { delete seq; }

size_t arconv_seq_depth(const arconv_seq* seq) { return seq ? depth_of(seq->value.seq) : 0; }

int arconv_seq_is_polynomial(const arconv_seq* seq) {
  return seq && std::holds_alternative<PolySeq>(seq->value.seq) ? 1 : 0;
}

const char* arconv_seq_name(const arconv_seq* seq) { return seq ? seq->value.name.c_str() : ""; }

arconv_status arconv_seq_value(const arconv_seq* seq, size_t k, char** out) {
  return guarded([&] {
    require(seq && out, "arconv_seq_value: null argument");
    *out = nullptr;
    require(k <= depth_of(seq->value.seq), "arconv_seq_value: index beyond depth");
    std::string s = std::visit([&](const auto& f) { return value_string(Value(f[k])); }, seq->value.seq);
    *out = copy_string(s);
  });
}

arconv_status arconv_seq_serialize(const arconv_seq* seq, arconv_format format, char** out) {
  return guarded([&] {
    require(seq && out, "arconv_seq_serialize: null argument");
    *out = nullptr;
    std::string text;
    switch (format) {
      case ARCONV_FORMAT_JSON: text = to_json(seq->value); break;
      case ARCONV_FORMAT_CSV: text = to_csv(seq->value); break;
      case ARCONV_FORMAT_BFILE_NUMERATOR:
      case ARCONV_FORMAT_BFILE_DENOMINATOR: {
        const Seq* f = std::get_if<Seq>(&seq->value.seq);
        require(f != nullptr, "b-file output needs rational entries, not polynomials");
        text = to_bfile(*f, format == ARCONV_FORMAT_BFILE_NUMERATOR ? BfilePart::numerator : BfilePart::denominator);
        break;
      }
      default: throw Error(Errc::invalid_argument, "unknown output format");
    }
    *out = copy_string(text);
  });
}

arconv_status arconv_op(const char* op_name, const arconv_seq* const* inputs, size_t n_inputs,
                        const arconv_params* params, arconv_seq* out[ARCONV_MAX_OUTPUTS], size_t* n_out) {
  return guarded([&] {
    require(op_name && out && n_out && (inputs || n_inputs == 0), "arconv_op: null argument");
    for (size_t i = 0; i < ARCONV_MAX_OUTPUTS; ++i) out[i] = nullptr;
    *n_out = 0;
    const std::string op = op_name;
    const bool binary = op == "bullet" || op == "cauchy";
    const std::set<std::string> known = {"bullet", "cauchy", "invert", "root", "pow", "transform", "invert-transform",
                                         "decompose"};
    if (!known.count(op)) throw Error(Errc::unknown_name, "no operation named '" + op + "'");
    const size_t arity = binary ? 2 : 1;
    if (n_inputs != arity)
      throw Error(Errc::invalid_argument, op + " takes " + std::to_string(arity) + " input" + (arity > 1 ? "s" : ""));
    for (size_t i = 0; i < n_inputs; ++i) require(inputs[i] != nullptr, "arconv_op: null input");

    std::set<std::string> allowed;
    if (op == "root") allowed = {"m"};
    if (op == "pow") allowed = {"p", "q"};
    ParamReader p(params, op, allowed);
    const NamedSeq& a = inputs[0]->value;

    std::vector<NamedSeq> results;
    if (binary) {
      const NamedSeq& b = inputs[1]->value;
      AnySeq r = apply_binary(a.seq, b.seq, [&](const auto& f, const auto& g) -> AnySeq {
        return op == "bullet" ? bullet(f, g) : cauchy(f, g);
      });
      results.push_back({op + "(" + a.name + "," + b.name + ")", std::move(r)});
    } else if (op == "invert") {
      results.push_back({result_name("inverse", a.name, "inverse"), apply_unary(a.seq, [](const auto& f) { return inverse(f); })});
    } else if (op == "root") {
      long m = p.integer("m");
      require(m >= 1, "root needs m >= 1");
      results.push_back({"root" + std::to_string(m) + "(" + a.name + ")",
                         apply_unary(a.seq, [&](const auto& f) { return mth_root(f, m); })});
    } else if (op == "pow") {
      long num = p.integer("p");
      long den = p.integer("q", 1);
      require(den >= 1, "pow needs q >= 1");
      std::string label = den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
      results.push_back({"pow(" + a.name + "," + label + ")",
                         apply_unary(a.seq, [&](const auto& f) { return power_rat(f, num, den); })});
    } else if (op == "transform") {
      results.push_back({result_name("transform", a.name, "invert-transform"),
                         apply_unary(a.seq, [](const auto& f) { return binomial_transform(f); })});
    } else if (op == "invert-transform") {
      results.push_back({result_name("invert-transform", a.name, "transform"),
                         apply_unary(a.seq, [](const auto& f) { return binomial_invert(f); })});
    } else {  // decompose
      std::visit(
          [&](const auto& f) {
            auto d = decompose(f);
            results.push_back({"v(" + a.name + ")", d.v});
            results.push_back({"w(" + a.name + ")", d.w});
            results.push_back({"c(" + a.name + ")", d.c});
          },
          a.seq);
    }
    for (size_t i = 0; i < results.size(); ++i) out[i] = new arconv_seq{std::move(results[i])};
    *n_out = results.size();
  });
}

arconv_status arconv_identity_names(char** out) {
  return guarded([&] {
    require(out != nullptr, "arconv_identity_names: null argument");
    std::string text;
    for (const auto& n : registered_identities()) text += n + "\n";
    *out = copy_string(text);
  });
}

arconv_status arconv_verify(const char* name, const arconv_params* params, long depth, int* pass,
                            char** report_json) {
  return guarded([&] {
    require(name && pass && report_json, "arconv_verify: null argument");
    *report_json = nullptr;
    std::optional<std::size_t> d;
    if (depth >= 0) d = static_cast<std::size_t>(depth);
    IdentityReport r = check(name, params ? params->values : Params{}, d);
    *pass = r.pass ? 1 : 0;
    *report_json = copy_string(to_json(r));
  });
}

arconv_status arconv_table1(int as_json, int* all_agree, char** out) {
  return guarded([&] {
    require(out != nullptr, "arconv_table1: null argument");
    auto cells = table1();
    bool agree = true;
    for (const auto& c : cells) agree = agree && c.agree();
    if (all_agree) *all_agree = agree ? 1 : 0;
    *out = copy_string(as_json ? table1_json(cells) : format_table1(cells));
  });
}

arconv_status arconv_oeis_compare(const arconv_seq* seq, const char* bfile_text, int part,
                                  arconv_compare_result* result, char** report) {
  return guarded([&] {
    require(seq && bfile_text && result && report, "arconv_oeis_compare: null argument");
    *report = nullptr;
    require(part == 0 || part == 1, "part must be 0 (numerator) or 1 (denominator)");
    const Seq* f = std::get_if<Seq>(&seq->value.seq);
    require(f != nullptr, "b-file comparison needs rational entries");
    BfileEntries entries = parse_bfile(bfile_text);
    BfileComparison c = compare_bfile(*f, entries, part == 0 ? BfilePart::numerator : BfilePart::denominator);
    const char* what = part == 0 ? "numerators" : "denominators";
    std::string text;
    if (!c.overlap) {
      *result = ARCONV_COMPARE_NO_OVERLAP;
      text = "no overlap: the b-file has no index in 0.." + std::to_string(f->depth()) + "\n";
    } else if (c.mismatch) {
      *result = ARCONV_COMPARE_MISMATCH;
      text = std::string(what) + " differ at index " + std::to_string(c.mismatch->index) + ": b-file " +
             c.mismatch->expected.get_str() + ", sequence " + c.mismatch->actual.get_str() + "\n";
    } else {
      *result = ARCONV_COMPARE_AGREE;
      text = std::string(what) + " agree on indices " + std::to_string(c.overlap->first) + ".." +
             std::to_string(c.overlap->second) + " (" + std::to_string(c.compared) + " values)\n";
    }
    *report = copy_string(text);
  });
}

}  // extern "C"
