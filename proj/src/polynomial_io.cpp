#include "prym/polynomial_io.hpp"

#include <fstream>
#include <set>

namespace prym {

using nlohmann::json;

namespace {

std::string int_string(const json& j, const char* key, const char* fallback) {
  if (!j.contains(key)) return fallback;
  const auto& v = j.at(key);
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  throw ParseError(std::string("term field '") + key + "' must be an integer string");
}

Rational term_rational(const json& t) {
  const std::string num = int_string(t, "num", "1");
  const std::string den = int_string(t, "den", "1");
  Integer n, d;
  if (n.set_str(num, 10) != 0) throw ParseError("bad numerator '" + num + "'");
  if (d.set_str(den, 10) != 0) throw ParseError("bad denominator '" + den + "'");
  if (d == 0) throw ParseError("zero denominator in term");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

}  // namespace

NamedForm form_from_json(const json& j) {
  try {
    NamedForm out;
    out.vars = j.at("vars").get<std::vector<std::string>>();
    if (out.vars.empty()) throw ParseError("'vars' must be nonempty");
    std::set<std::string> seen(out.vars.begin(), out.vars.end());
    if (seen.size() != out.vars.size()) throw ParseError("duplicate variable names");
    const int degree = j.at("degree").get<int>();
    const int n = static_cast<int>(out.vars.size());
    const auto& terms = j.at("terms");
    if (!terms.is_array()) throw ParseError("'terms' must be an array");

    auto read_exp = [&](const json& t) {
      auto e = t.at("exp").get<Exponent>();
      if (static_cast<int>(e.size()) != n)
        throw ParseError("exponent vector length " + std::to_string(e.size()) + " does not match vars length " +
                         std::to_string(n));
      int s = 0;
      for (int x : e) {
        if (x < 0) throw ParseError("negative exponent");
        s += x;
      }
      if (s != degree) throw ParseError("exponent vector does not sum to degree");
      return e;
    };

    const auto& field = j.at("field");
    if (field.is_string()) {
      if (field.get<std::string>() != "rational") throw ParseError("unknown field '" + field.get<std::string>() + "'");
      HomogeneousForm<RationalField> f(RationalField{}, n, degree);
      for (const auto& t : terms) {
        if (t.contains("poly")) throw ParseError("'poly' coefficients need a finite field");
        f.add_term(read_exp(t), term_rational(t));
      }
      out.form = std::move(f);
    } else {
      const auto p = field.at("char").get<std::uint32_t>();
      const auto k = field.contains("ext") ? field.at("ext").get<std::uint32_t>() : 1u;
      FiniteField fq(p, k);
      HomogeneousForm<FiniteField> f(fq, n, degree);
      for (const auto& t : terms) {
        const auto e = read_exp(t);
        if (t.contains("poly")) {
          f.add_term(e, Fq{fq.gf->from_digits(t.at("poly").get<std::vector<std::uint32_t>>()), fq.gf});
        } else {
          f.add_term(e, fq.from_rational(term_rational(t)));
        }
      }
      out.form = std::move(f);
    }
    return out;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed polynomial JSON: ") + e.what());
  } catch (const DomainError& e) {
    throw ParseError(std::string("invalid polynomial JSON: ") + e.what());
  } catch (const ShapeError& e) {
    throw ParseError(std::string("invalid polynomial JSON: ") + e.what());
  }
}

NamedForm load_form(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
  return form_from_json(j);
}

json form_to_json(const HomogeneousForm<RationalField>& f, const std::vector<std::string>& vars) {
  if (static_cast<int>(vars.size()) != f.num_vars()) throw ShapeError("vars length does not match form");
  json terms = json::array();
  for (const auto& [e, c] : f.terms())
    terms.push_back({{"exp", e}, {"num", c.get_num().get_str()}, {"den", c.get_den().get_str()}});
  return {{"vars", vars}, {"degree", f.degree()}, {"field", "rational"}, {"terms", terms}};
}

json form_to_json(const HomogeneousForm<FiniteField>& f, const std::vector<std::string>& vars) {
  if (static_cast<int>(vars.size()) != f.num_vars()) throw ShapeError("vars length does not match form");
  const GaloisField& gf = *f.field().gf;
  json terms = json::array();
  for (const auto& [e, c] : f.terms()) {
    if (gf.degree() == 1) {
      terms.push_back({{"exp", e}, {"num", std::to_string(c.v)}, {"den", "1"}});
    } else {
      terms.push_back({{"exp", e}, {"poly", gf.digits(c.v)}});
    }
  }
  return {{"vars", vars},
          {"degree", f.degree()},
          {"field", {{"char", gf.characteristic()}, {"ext", gf.degree()}}},
          {"terms", terms}};
}

void save_form(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path);
  out << j.dump(2) << "\n";
}

}  // namespace prym
