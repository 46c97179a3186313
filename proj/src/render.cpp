#include "wt/render.hpp"

#include <limits>
#include <sstream>
#include <vector>

namespace wt {

namespace {

bool is_one(const Scalar& c) { return c == Scalar(1); }
bool is_minus_one(const Scalar& c) { return c == Scalar(-1); }

std::string power_text(const std::string& sym, unsigned e) {
  if (e == 0) return "";
  if (e == 1) return sym;
  return sym + "^" + std::to_string(e);
}

std::string power_latex(const std::string& sym, unsigned e) {
  if (e == 0) return "";
  if (e == 1) return sym;
  return sym + "^{" + std::to_string(e) + "}";
}

// Joins signed pieces: first piece keeps its sign, later ones get " + "/" - ".
void append_signed(std::string& out, std::string piece) {
  if (out.empty()) {
    out = std::move(piece);
  } else if (!piece.empty() && piece[0] == '-') {
    out += " - " + piece.substr(1);
  } else {
    out += " + " + piece;
  }
}

// Coefficient times a word, text form. Complex coefficients are parenthesized.
std::string scaled_text(const Scalar& c, const std::string& word) {
  if (word.empty()) return c.str();
  if (is_one(c)) return word;
  if (is_minus_one(c)) return "-" + word;
  std::string cs = c.str();
  if (!c.re().is_zero() && !c.im().is_zero()) cs = "(" + cs + ")";
  return cs + "*" + word;
}

std::string rational_latex(const Rational& r) {
  if (r.is_integer()) return r.str();
  std::string sign = r.sign() < 0 ? "-" : "";
  mpz_class num = abs(r.numerator());
  return sign + "\\frac{" + num.get_str() + "}{" + r.denominator().get_str() + "}";
}

std::string scaled_latex(const Scalar& c, const std::string& word) {
  if (word.empty()) return to_latex(c);
  if (is_one(c)) return word;
  if (is_minus_one(c)) return "-" + word;
  std::string cs = to_latex(c);
  if (!c.re().is_zero() && !c.im().is_zero()) cs = "(" + cs + ")";
  return cs + " " + word;
}

const char* plane_symbol(Basis b, int which, bool latex) {
  if (b == Basis::XY) return which == 0 ? "x" : "y";
  if (which == 0) return "z";
  return latex ? "\\bar{z}" : "zbar";
}

nlohmann::json integer_json(const mpz_class& n) {
  if (n.fits_slong_p()) return static_cast<std::int64_t>(n.get_si());
  return n.get_str();
}

mpz_class integer_from_json(const nlohmann::json& j, const std::string& path) {
  if (j.is_number_integer()) return mpz_class(std::to_string(j.get<std::int64_t>()));
  if (j.is_number_unsigned()) return mpz_class(std::to_string(j.get<std::uint64_t>()));
  if (j.is_string()) {
    try {
      return mpz_class(j.get<std::string>());
    } catch (const std::invalid_argument&) {
      throw SchemaError(path, "not a decimal integer");
    }
  }
  throw SchemaError(path, "expected an integer");
}

unsigned exponent_from_json(const nlohmann::json& obj, const char* key, const std::string& path) {
  const std::string p = path + "." + key;
  if (!obj.contains(key)) throw SchemaError(p, "missing field");
  const auto& v = obj.at(key);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0)) {
    throw SchemaError(p, "expected a non-negative integer");
  }
  auto e = v.get<std::uint64_t>();
  if (e > std::numeric_limits<unsigned>::max()) throw SchemaError(p, "exponent too large");
  return static_cast<unsigned>(e);
}

}  // namespace

std::string to_text(const QPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
    if (p.coeffs()[k].is_zero()) continue;
    append_signed(out, scaled_text(p.coeffs()[k], power_text("q", k)));
  }
  return out;
}

std::string to_text(const Spinor& s) {
  if (s.is_zero()) return "0";
  std::string body;
  for (const auto& [e, p] : s.terms()) {
    std::string word = power_text(plane_symbol(s.basis(), 0, false), e.first);
    std::string w2 = power_text(plane_symbol(s.basis(), 1, false), e.second);
    if (!word.empty() && !w2.empty()) word += "*";
    word += w2;
    std::string poly = to_text(p);
    bool single = p.coeffs().size() == 1 || poly.find(' ') == std::string::npos;
    std::string piece;
    if (word.empty()) {
      piece = poly;
    } else if (single && poly == "1") {
      piece = word;
    } else if (single && poly == "-1") {
      piece = "-" + word;
    } else {
      piece = (single ? poly : "(" + poly + ")") + "*" + word;
    }
    append_signed(body, piece);
  }
  return "e^(-q^2/2)*(" + body + ")";
}

std::string to_text(const WeylOperator& op) {
  if (op.is_zero()) return "0";
  const char* xy[6] = {"x", "y", "q", "dx", "dy", "dq"};
  const char* zz[6] = {"z", "zbar", "q", "dz", "dzbar", "dq"};
  const char** names = op.basis() == Basis::XY ? xy : zz;
  std::string out;
  for (const auto& [m, c] : op.terms()) {
    std::string word;
    for (int g = 0; g < 6; ++g) {
      std::string f = power_text(names[g], m.exp[g]);
      if (f.empty()) continue;
      if (!word.empty()) word += "*";
      word += f;
    }
    append_signed(out, scaled_text(c, word));
  }
  return out;
}

std::string to_latex(const Scalar& c) {
  if (c.im().is_zero()) return rational_latex(c.re());
  std::string imag;
  if (c.im() == Rational(1)) {
    imag = "i";
  } else if (c.im() == Rational(-1)) {
    imag = "-i";
  } else {
    imag = rational_latex(c.im()) + " i";
  }
  if (c.re().is_zero()) return imag;
  std::string out = rational_latex(c.re());
  append_signed(out, imag);
  return out;
}

std::string to_latex(const QPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
    if (p.coeffs()[k].is_zero()) continue;
    append_signed(out, scaled_latex(p.coeffs()[k], power_latex("q", k)));
  }
  return out;
}

std::string to_latex(const Spinor& s) {
  if (s.is_zero()) return "0";
  // Descending in the first coordinate, matching z^m, z^{m-1}\bar{z}, ...
  std::vector<std::pair<PlaneExp, QPoly>> terms(s.terms().rbegin(), s.terms().rend());
  std::string body;
  for (const auto& [e, p] : terms) {
    std::string word = power_latex(plane_symbol(s.basis(), 0, true), e.first);
    std::string w2 = power_latex(plane_symbol(s.basis(), 1, true), e.second);
    if (!word.empty() && !w2.empty()) word += " ";
    word += w2;
    std::string poly = to_latex(p);
    bool single = poly.find(' ') == std::string::npos || p.coeffs().size() == 1;
    std::string piece;
    if (word.empty()) {
      piece = poly;
    } else if (single && poly == "1") {
      piece = word;
    } else if (single && poly == "-1") {
      piece = "-" + word;
    } else {
      piece = (single ? poly : "\\left(" + poly + "\\right)") + " " + word;
    }
    append_signed(body, piece);
  }
  return "e^{-\\frac{q^2}{2}}\\Big(" + body + "\\Big)";
}

std::string to_latex(const WeylOperator& op) {
  if (op.is_zero()) return "0";
  const char* xy[6] = {"x", "y", "q", "\\partial_x", "\\partial_y", "\\partial_q"};
  const char* zz[6] = {"z", "\\bar{z}", "q", "\\partial_z", "\\partial_{\\bar{z}}", "\\partial_q"};
  const char** names = op.basis() == Basis::XY ? xy : zz;
  std::string out;
  for (const auto& [m, c] : op.terms()) {
    std::string word;
    for (int g = 0; g < 6; ++g) word += power_latex(names[g], m.exp[g]);
    append_signed(out, scaled_latex(c, word));
  }
  return out;
}

nlohmann::json to_json(const Scalar& c) {
  return nlohmann::json::array({integer_json(c.re().numerator()), integer_json(c.re().denominator()),
                                integer_json(c.im().numerator()), integer_json(c.im().denominator())});
}

Scalar scalar_from_json(const nlohmann::json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 4) {
    throw SchemaError(path, "expected [re_num, re_den, im_num, im_den]");
  }
  mpz_class v[4];
  for (int k = 0; k < 4; ++k) v[k] = integer_from_json(j[k], path + "[" + std::to_string(k) + "]");
  if (v[1] <= 0) throw SchemaError(path + "[1]", "denominator must be positive");
  if (v[3] <= 0) throw SchemaError(path + "[3]", "denominator must be positive");
  return {Rational(v[0], v[1]), Rational(v[2], v[3])};
}

nlohmann::json to_json(const Spinor& s) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [e, p] : s.terms()) {
    nlohmann::json q = nlohmann::json::array();
    for (const auto& c : p.coeffs()) q.push_back(to_json(c));
    terms.push_back({{"e1", e.first}, {"e2", e.second}, {"q", std::move(q)}});
  }
  return {{"basis", to_string(s.basis())}, {"weight", "exp(-q^2/2)"}, {"terms", std::move(terms)}};
}

Spinor spinor_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw SchemaError("$", "expected an object");
  if (!j.contains("basis")) throw SchemaError("$.basis", "missing field");
  const auto& b = j.at("basis");
  Basis basis;
  if (b == "xy") {
    basis = Basis::XY;
  } else if (b == "zzbar") {
    basis = Basis::ZZBAR;
  } else {
    throw SchemaError("$.basis", "expected \"xy\" or \"zzbar\"");
  }
  if (!j.contains("terms")) throw SchemaError("$.terms", "missing field");
  const auto& terms = j.at("terms");
  if (!terms.is_array()) throw SchemaError("$.terms", "expected an array");
  Spinor s(basis);
  for (std::size_t t = 0; t < terms.size(); ++t) {
    const std::string path = "$.terms[" + std::to_string(t) + "]";
    const auto& term = terms[t];
    if (!term.is_object()) throw SchemaError(path, "expected an object");
    unsigned e1 = exponent_from_json(term, "e1", path);
    unsigned e2 = exponent_from_json(term, "e2", path);
    if (!term.contains("q")) throw SchemaError(path + ".q", "missing field");
    const auto& q = term.at("q");
    if (!q.is_array()) throw SchemaError(path + ".q", "expected an array");
    std::vector<Scalar> coeffs;
    for (std::size_t k = 0; k < q.size(); ++k) {
      coeffs.push_back(scalar_from_json(q[k], path + ".q[" + std::to_string(k) + "]"));
    }
    s += Spinor::term(basis, e1, e2, QPoly(std::move(coeffs)));
  }
  return s;
}

nlohmann::json to_json(const WeylOperator& op) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [m, c] : op.terms()) {
    terms.push_back({{"exponents", m.exp}, {"coeff", to_json(c)}});
  }
  return {{"basis", to_string(op.basis())}, {"text", to_text(op)}, {"terms", std::move(terms)}};
}

}  // namespace wt
