#include <cstdio>
#include <sstream>

#include "poz/errors.hpp"
#include "poz/io.hpp"

namespace poz {

std::string to_string(const Rational& r) { return r.get_str(); }

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& t : p.terms()) {
    const bool negative = t.coeff < 0;
    if (first)
      out << (negative ? "-" : "");
    else
      out << (negative ? " - " : " + ");
    first = false;

    Rational magnitude = abs(t.coeff);
    if (t.monomial.is_one()) {
      out << magnitude.get_str();
      continue;
    }
    if (magnitude != 1) out << magnitude.get_str() << "*";
    bool first_factor = true;
    for (const auto& [v, e] : t.monomial.entries()) {
      if (!first_factor) out << "*";
      first_factor = false;
      out << v.name();
      if (e != 1) out << "^" << e;
    }
  }
  return out.str();
}

Json rational_json(const Rational& r) {
  Json j;
  j["num"] = r.get_num().get_str();
  j["den"] = r.get_den().get_str();
  return j;
}

Rational rational_from_json(const Json& j) {
  auto field = [&](const char* key) {
    if (!j.is_object() || !j.contains(key) || !j[key].is_string())
      throw PreconditionError(std::string("rational needs string field '") + key + "'");
    Integer v;
    if (v.set_str(j[key].get<std::string>(), 10) != 0)
      throw PreconditionError(std::string("rational field '") + key + "' is not an integer");
    return v;
  };
  const Integer num = field("num"), den = field("den");
  if (den == 0) throw PreconditionError("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string digest(std::string_view bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Json polynomial_json(const Polynomial& p, std::size_t max_terms) {
  const std::string text = to_string(p);
  Json j;
  j["terms"] = p.size();
  if (p.size() <= max_terms) j["text"] = text;
  j["digest"] = digest(text);
  return j;
}

} // namespace poz
