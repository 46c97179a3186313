#include "wt/combinatorics.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "wt/operators.hpp"
#include "wt/render.hpp"

namespace wt {

namespace {

nlohmann::json integer_json(const mpz_class& n) {
  if (n.fits_slong_p()) return static_cast<std::int64_t>(n.get_si());
  return n.get_str();
}

// Normal-ordered word q^a d^b q~^r in the algebra with central q~ = [d, q].
struct TildeWord {
  unsigned a, b, r;
  friend auto operator<=>(const TildeWord&, const TildeWord&) = default;
};

std::string aligned(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows) {
    width.resize(std::max(width.size(), row.size()));
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  std::ostringstream out;
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out << "  ";
      out << std::setw(static_cast<int>(width[c])) << row[c];
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace

Scalar CoeffTableA::at(unsigned j, unsigned k) const {
  auto it = entries.find({j, k});
  return it == entries.end() ? Scalar() : it->second;
}

mpz_class StirlingTildeTable::at(unsigned i, unsigned r) const {
  auto it = entries.find({i, r});
  return it == entries.end() ? mpz_class(0) : it->second;
}

CoeffTableA a_table(unsigned n) {
  CoeffTableA t;
  t.entries[{0, 0}] = Scalar(1);
  for (unsigned level = 1; level <= n; ++level) {
    CoeffTableA next;
    next.n = level;
    for (unsigned j = 0; j <= level / 2; ++j) {
      for (unsigned k = 0; k + 2 * j <= level; ++k) {
        Scalar v = t.at(j, k);
        if (k > 0) v += t.at(j, k - 1);
        if (j > 0) v += Scalar(static_cast<long>(k) + 1) * t.at(j - 1, k + 1);
        next.entries[{j, k}] = v;
      }
    }
    t = std::move(next);
  }
  t.n = n;
  return t;
}

WeylOperator xs_power_expand(unsigned n) { return power(build_xs(), n); }

CoeffTableA a_table_from_expansion(const WeylOperator& expansion, unsigned n) {
  CoeffTableA t;
  t.n = n;
  for (unsigned j = 0; j <= n / 2; ++j) {
    for (unsigned k = 0; k + 2 * j <= n; ++k) {
      WeylMonomial mono;
      mono[Gen::P1] = j + k;
      mono[Gen::P2] = n - j - k;
      mono[Gen::Q] = k;
      mono[Gen::DQ] = n - 2 * j - k;
      t.entries[{j, k}] = expansion.coeff(mono) * Scalar::i().pow(j + k).inv();
    }
  }
  return t;
}

mpz_class stirling(unsigned n, unsigned m) {
  if (m > n) return 0;
  if (n == 0) return 1;
  if (m == 0) return 0;
  std::vector<mpz_class> row{1};  // s(0, .)
  for (unsigned level = 1; level <= n; ++level) {
    std::vector<mpz_class> next(level + 1);
    for (unsigned c = 1; c <= level; ++c) {
      mpz_class v = c < row.size() ? mpz_class(c * row[c]) : mpz_class(0);
      v += row[c - 1];
      next[c] = v;
    }
    row = std::move(next);
  }
  return row[m];
}

mpz_class stirling_from_expansion(unsigned n, unsigned m) {
  WeylMonomial qdq;
  qdq[Gen::Q] = 1;
  qdq[Gen::DQ] = 1;
  const WeylOperator expanded = power(WeylOperator::monomial(Basis::XY, qdq), n);
  WeylMonomial target;
  target[Gen::Q] = m;
  target[Gen::DQ] = m;
  const Scalar c = expanded.coeff(target);
  return c.re().numerator();
}

StirlingTildeTable stirling_tilde(unsigned n) {
  std::map<TildeWord, mpz_class> acc{{{0, 0, 0}, 1}};
  for (unsigned step = 0; step < n; ++step) {
    std::map<TildeWord, mpz_class> next;
    for (const auto& [w, c] : acc) {
      // w * q = q^{a+1} d^b q~^r + b q^a d^{b-1} q~^{r+1}
      next[{w.a + 1, w.b, w.r}] += c;
      if (w.b > 0) next[{w.a, w.b - 1, w.r + 1}] += c * w.b;
      // w * d
      next[{w.a, w.b + 1, w.r}] += c;
    }
    acc = std::move(next);
  }
  StirlingTildeTable t;
  t.n = n;
  for (const auto& [w, c] : acc) {
    if (c != 0) t.entries[{w.a + w.r, w.r}] = c;
  }
  return t;
}

StirlingTildeTable stirling_tilde_recursive(unsigned n) {
  StirlingTildeTable t;
  t.entries[{0, 0}] = 1;
  for (unsigned level = 1; level <= n; ++level) {
    StirlingTildeTable next;
    next.n = level;
    for (unsigned i = 0; i <= level; ++i) {
      for (unsigned r = 0; r <= std::min(i, level - i); ++r) {
        mpz_class v = t.at(i, r);
        if (i > 0) v += t.at(i - 1, r);
        if (r > 0) v += (i - r + 1) * t.at(i, r - 1);
        if (v != 0) next.entries[{i, r}] = v;
      }
    }
    t = std::move(next);
  }
  t.n = n;
  return t;
}

std::vector<std::string> flat_sequence(const CoeffTableA& t) {
  std::vector<std::string> out;
  for (const auto& [jk, v] : t.entries) out.push_back(v.str());
  return out;
}

std::vector<std::string> flat_sequence(const StirlingTildeTable& t) {
  std::vector<std::string> out;
  for (const auto& [ir, v] : t.entries) out.push_back(v.get_str());
  return out;
}

nlohmann::json to_json(const CoeffTableA& t) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& [jk, v] : t.entries) {
    entries.push_back({{"n", t.n}, {"j", jk.first}, {"k", jk.second}, {"value", to_json(v)}});
  }
  return {{"table", "A"}, {"n", t.n}, {"entries", entries}, {"flat", flat_sequence(t)}};
}

nlohmann::json to_json(const StirlingTildeTable& t) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& [ir, v] : t.entries) {
    entries.push_back({{"n", t.n}, {"i", ir.first}, {"r", ir.second}, {"value", integer_json(v)}});
  }
  return {{"table", "stirling-tilde"}, {"n", t.n}, {"entries", entries}, {"flat", flat_sequence(t)}};
}

nlohmann::json stirling_json(unsigned n) {
  nlohmann::json entries = nlohmann::json::array();
  std::vector<std::string> flat;
  for (unsigned m = n == 0 ? 0 : 1; m <= n; ++m) {
    const mpz_class v = stirling(n, m);
    entries.push_back({{"n", n}, {"m", m}, {"value", integer_json(v)}});
    flat.push_back(v.get_str());
  }
  return {{"table", "stirling"}, {"n", n}, {"entries", entries}, {"flat", flat}};
}

std::string to_text(const CoeffTableA& t) {
  std::vector<std::vector<std::string>> rows{{"n", "j", "k", "A"}};
  for (const auto& [jk, v] : t.entries) {
    rows.push_back({std::to_string(t.n), std::to_string(jk.first), std::to_string(jk.second), v.str()});
  }
  return aligned(rows);
}

std::string to_text(const StirlingTildeTable& t) {
  std::vector<std::vector<std::string>> rows{{"n", "i", "r", "s~"}};
  for (const auto& [ir, v] : t.entries) {
    rows.push_back({std::to_string(t.n), std::to_string(ir.first), std::to_string(ir.second), v.get_str()});
  }
  return aligned(rows);
}

std::string stirling_text(unsigned n) {
  std::vector<std::vector<std::string>> rows{{"n", "m", "s"}};
  for (unsigned m = n == 0 ? 0 : 1; m <= n; ++m) {
    rows.push_back({std::to_string(n), std::to_string(m), stirling(n, m).get_str()});
  }
  return aligned(rows);
}

}  // namespace wt
