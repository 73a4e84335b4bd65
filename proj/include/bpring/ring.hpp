#pragma once

// The Brauer-Picard ring of Vec(Z_p): structure constants over the 2p+2
// indecomposable bimodules, ring-axiom checks, the group of units and
// deterministic serialization.

#include <nlohmann/json.hpp>

#include <sstream>
#include <string>
#include <vector>

#include "bpring/fusion.hpp"
#include "bpring/table.hpp"
#include "bpring/parallel.hpp"

namespace bpring {

/// Structure constants computed by the relative tensor product of every
/// ordered pair of catalogue bimodules.
inline RingTable build_table(int p, bool check_absorption = false) {
  require_prime(p);
  RingTable t = RingTable::zero(p);
  const auto cat = catalogue(p);
  const std::size_t n = cat.size();
  std::vector<Decomposition> results(n * n);
  parallel_for(n * n, [&](std::size_t idx) {
    RelativeProduct product(cat[idx / n], cat[idx % n]);
    product.set_check_absorption(check_absorption);
    results[idx] = product.decompose();
  });
  for (std::size_t idx = 0; idx < n * n; ++idx) {
    t.set_product(static_cast<int>(idx / n), static_cast<int>(idx % n), results[idx]);
  }
  return t;
}

/// Closed-form product of two basis labels.
inline Decomposition closed_form_product(int p, const BimoduleLabel& a, const BimoduleLabel& b) {
  using K = BimoduleLabel::Kind;
  const BimoduleLabel T = BimoduleLabel::t(), L = BimoduleLabel::l(), R = BimoduleLabel::r(), F0 = BimoduleLabel::f(0);
  auto one = [](BimoduleLabel l) { return Decomposition{{{l, 1}}}; };
  auto many = [p](BimoduleLabel l) { return Decomposition{{{l, p}}}; };
  // Columns: T, L, R, F0, X_l, F_r (r != 0)
  auto column = [&](const BimoduleLabel& l) {
    if (l.kind == K::F) return l.index == 0 ? 3 : 5;
    if (l.kind == K::X) return 4;
    return l.kind == K::T ? 0 : l.kind == K::L ? 1 : 2;
  };
  const int col = column(b);
  const bool a_invertible = a.invertible();
  if (!a_invertible) {
    const int row = column(a);
    using D = Decomposition;
    const D rows[4][6] = {
        {many(T), one(T), many(R), one(R), one(T), one(R)},
        {many(L), one(L), many(F0), one(F0), one(L), one(F0)},
        {one(T), many(T), one(R), many(R), one(R), one(T)},
        {one(L), many(L), one(F0), many(F0), one(F0), one(L)},
    };
    return rows[row][col];
  }
  if (a.kind == K::X) {
    const int k = a.index;
    switch (col) {
      case 0: return one(T);
      case 1: return one(L);
      case 2: return one(R);
      case 3: return one(F0);
      case 4: return one(BimoduleLabel::x(mod(static_cast<long long>(k) * b.index, p)));
      default: return one(BimoduleLabel::f(mod(static_cast<long long>(inverse_mod(k, p)) * b.index, p)));
    }
  }
  const int q = a.index;
  switch (col) {
    case 0: return one(L);
    case 1: return one(T);
    case 2: return one(F0);
    case 3: return one(R);
    case 4: return one(BimoduleLabel::f(mod(static_cast<long long>(q) * b.index, p)));
    default: return one(BimoduleLabel::x(mod(static_cast<long long>(inverse_mod(q, p)) * b.index, p)));
  }
}

inline RingTable closed_form_table(int p) {
  RingTable t = RingTable::zero(p);
  for (int i = 0; i < t.size(); ++i)
    for (int j = 0; j < t.size(); ++j) t.set_product(i, j, closed_form_product(p, t.basis[i], t.basis[j]));
  return t;
}

/// One line per differing entry: "M,N: expected ... got ...".
inline std::vector<std::string> diff_tables(const RingTable& expected, const RingTable& actual) {
  if (expected.p != actual.p || expected.basis != actual.basis) return {"tables are over different bases"};
  std::vector<std::string> out;
  for (int i = 0; i < expected.size(); ++i) {
    for (int j = 0; j < expected.size(); ++j) {
      auto e = expected.product(i, j), a = actual.product(i, j);
      if (!(e == a)) {
        out.push_back(label_print(expected.basis[i]) + "," + label_print(expected.basis[j]) + ": expected " + e.to_string() +
                      ", got " + a.to_string());
      }
    }
  }
  return out;
}

struct AxiomReport {
  bool unit = true;
  bool associativity = true;
  std::vector<std::string> violations;

  bool ok() const { return unit && associativity; }
};

/// X1 as two-sided unit and, optionally, associativity over all triples
/// (compared on every output coefficient).
inline AxiomReport check_axioms(const RingTable& t, bool associativity = true) {
  AxiomReport r;
  const int n = t.size();
  const int unit = t.index_of(BimoduleLabel::x(1));
  for (int i = 0; i < n; ++i) {
    const Decomposition self{{{t.basis[i], 1}}};
    if (!(t.product(unit, i) == self) || !(t.product(i, unit) == self)) {
      r.unit = false;
      r.violations.push_back("X1 is not a unit for " + label_print(t.basis[i]));
    }
  }
  if (!associativity) return r;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c) {
        for (int d = 0; d < n; ++d) {
          long long left = 0, right = 0;
          for (int e = 0; e < n; ++e) {
            left += static_cast<long long>(t.at(a, b, e)) * t.at(e, c, d);
            right += static_cast<long long>(t.at(b, c, e)) * t.at(a, e, d);
          }
          if (left != right) {
            r.associativity = false;
            if (r.violations.size() < 64) {
              r.violations.push_back("(" + label_print(t.basis[a]) + "*" + label_print(t.basis[b]) + ")*" +
                                     label_print(t.basis[c]) + " != " + label_print(t.basis[a]) + "*(" +
                                     label_print(t.basis[b]) + "*" + label_print(t.basis[c]) + ") at coefficient of " +
                                     label_print(t.basis[d]) + ": " + std::to_string(left) + " vs " + std::to_string(right));
            }
          }
        }
      }
    }
  }
  return r;
}

/// Entries whose multiplicity is neither 1 nor p.
inline std::vector<std::string> multiplicity_anomalies(const RingTable& t) {
  std::vector<std::string> out;
  for (int i = 0; i < t.size(); ++i)
    for (int j = 0; j < t.size(); ++j)
      for (int k = 0; k < t.size(); ++k) {
        const int m = t.at(i, j, k);
        if (m != 0 && m != 1 && m != t.p) {
          out.push_back(label_print(t.basis[i]) + "," + label_print(t.basis[j]) + " -> " + std::to_string(m) + "*" +
                        label_print(t.basis[k]));
        }
      }
  return out;
}

struct UnitsGroup {
  std::vector<BimoduleLabel> elements;
  std::vector<std::vector<int>> table;  // indices into elements; -1 if the product is not a unit
  bool cyclic_x = false;                // X labels: cyclic of order p-1
  bool f1_involution = false;           // F1 F1 = X1
  bool conjugation = false;             // F1 X_k F1 = X_{1/k}

  int order() const { return static_cast<int>(elements.size()); }
  bool dihedral(int p) const { return order() == 2 * (p - 1) && cyclic_x && f1_involution && conjugation; }
};

inline UnitsGroup units_group(const RingTable& t) {
  UnitsGroup u;
  const BimoduleLabel x1 = BimoduleLabel::x(1);
  const Decomposition identity{{{x1, 1}}};
  for (int i = 0; i < t.size(); ++i) {
    for (int j = 0; j < t.size(); ++j) {
      if (t.product(i, j) == identity && t.product(j, i) == identity) {
        u.elements.push_back(t.basis[i]);
        break;
      }
    }
  }
  auto find = [&](const BimoduleLabel& l) {
    for (int i = 0; i < u.order(); ++i)
      if (u.elements[i] == l) return i;
    return -1;
  };
  u.table.assign(u.elements.size(), std::vector<int>(u.elements.size(), -1));
  for (int i = 0; i < u.order(); ++i) {
    for (int j = 0; j < u.order(); ++j) {
      const auto d = t.product(u.elements[i], u.elements[j]);
      if (d.summands.size() == 1 && d.summands[0].second == 1) u.table[i][j] = find(d.summands[0].first);
    }
  }
  auto mul = [&](int i, int j) { return i < 0 || j < 0 ? -1 : u.table[i][j]; };

  const int p = t.p;
  const int one = find(x1);
  std::vector<int> xs;
  for (int i = 0; i < u.order(); ++i)
    if (u.elements[i].kind == BimoduleLabel::Kind::X) xs.push_back(i);
  if (one >= 0 && static_cast<int>(xs.size()) == p - 1) {
    for (int gen : xs) {
      int acc = one, steps = 0;
      do {
        acc = mul(acc, gen);
        ++steps;
      } while (acc >= 0 && acc != one && steps <= p);
      if (acc == one && steps == p - 1) {
        u.cyclic_x = true;
        break;
      }
    }
  }
  const int f1 = find(BimoduleLabel::f(1));
  u.f1_involution = f1 >= 0 && one >= 0 && mul(f1, f1) == one;
  u.conjugation = f1 >= 0;
  for (int k = 1; k < p && u.conjugation; ++k) {
    const int xk = find(BimoduleLabel::x(k));
    const int expected = find(BimoduleLabel::x(inverse_mod(k, p)));
    if (xk < 0 || expected < 0 || mul(mul(f1, xk), f1) != expected) u.conjugation = false;
  }
  return u;
}

enum class Format { json, markdown, csv };

inline Format parse_format(const std::string& name) {
  if (name == "json") return Format::json;
  if (name == "md" || name == "markdown") return Format::markdown;
  if (name == "csv") return Format::csv;
  throw Error(ErrorKind::invalid_input, "unknown format '" + name + "' (expected json, md or csv)");
}

inline nlohmann::ordered_json to_json(const RingTable& t) {
  nlohmann::ordered_json j;
  j["p"] = t.p;
  j["basis"] = nlohmann::ordered_json::array();
  for (const auto& l : t.basis) j["basis"].push_back(label_print(l));
  j["products"] = nlohmann::ordered_json::object();
  for (int a = 0; a < t.size(); ++a) {
    for (int b = 0; b < t.size(); ++b) {
      auto cell = nlohmann::ordered_json::array();
      for (const auto& [label, mult] : t.product(a, b).summands) {
        cell.push_back({{"label", label_print(label)}, {"mult", mult}});
      }
      j["products"][label_print(t.basis[a]) + "," + label_print(t.basis[b])] = cell;
    }
  }
  const auto units = units_group(t);
  auto& u = j["units"];
  u["elements"] = nlohmann::ordered_json::array();
  for (const auto& l : units.elements) u["elements"].push_back(label_print(l));
  u["order"] = units.order();
  u["cyclic_x"] = units.cyclic_x;
  u["f1_involution"] = units.f1_involution;
  u["conjugation"] = units.conjugation;
  u["dihedral"] = units.dihedral(t.p);
  const auto axioms = check_axioms(t);
  j["checks"] = {{"unit", axioms.unit}, {"associativity", axioms.associativity}};
  return j;
}

inline std::string serialize(const RingTable& t, Format format) {
  std::ostringstream os;
  switch (format) {
    case Format::json: os << to_json(t).dump(2) << '\n'; break;
    case Format::markdown: {
      os << "| ⊗ |";
      for (const auto& l : t.basis) os << ' ' << label_print(l) << " |";
      os << "\n|---|";
      for (std::size_t i = 0; i < t.basis.size(); ++i) os << "---|";
      os << '\n';
      for (int a = 0; a < t.size(); ++a) {
        os << "| " << label_print(t.basis[a]) << " |";
        for (int b = 0; b < t.size(); ++b) os << ' ' << t.product(a, b).to_string() << " |";
        os << '\n';
      }
      break;
    }
    case Format::csv: {
      os << "product";
      for (const auto& l : t.basis) os << ',' << label_print(l);
      os << '\n';
      for (int a = 0; a < t.size(); ++a) {
        os << label_print(t.basis[a]);
        for (int b = 0; b < t.size(); ++b) os << ',' << t.product(a, b).to_string();
        os << '\n';
      }
      break;
    }
  }
  return os.str();
}

inline std::string serialize(const RingTable& t, const std::string& format) { return serialize(t, parse_format(format)); }

/// Reads the "p", "basis" and "products" members written by serialize(json).
inline RingTable parse_table_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::parse_error, std::string("malformed table JSON: ") + e.what());
  }
  try {
    RingTable t = RingTable::zero(j.at("p").get<int>());
    std::vector<BimoduleLabel> basis;
    for (const auto& s : j.at("basis")) basis.push_back(label_parse(s.get<std::string>(), t.p));
    if (basis != t.basis) throw Error(ErrorKind::parse_error, "basis does not match the canonical order");
    for (const auto& [key, cell] : j.at("products").items()) {
      const auto comma = key.find(',');
      if (comma == std::string::npos) throw Error(ErrorKind::parse_error, "bad product key '" + key + "'");
      const int a = t.index_of(label_parse(key.substr(0, comma), t.p));
      const int b = t.index_of(label_parse(key.substr(comma + 1), t.p));
      for (const auto& term : cell) {
        t.at(a, b, t.index_of(label_parse(term.at("label").get<std::string>(), t.p))) += term.at("mult").get<int>();
      }
    }
    return t;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::parse_error, std::string("table JSON has the wrong shape: ") + e.what());
  }
}

}  // namespace bpring
