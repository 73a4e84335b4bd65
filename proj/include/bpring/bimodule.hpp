#pragma once

// Vec(Z_p)-Vec(Z_p) bimodule categories: the generic data type, the catalogue
// of the 2p+2 indecomposables and an exhaustive coherence validator.

#include <cctype>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bpring/group.hpp"
#include "bpring/scalar.hpp"

namespace bpring {

struct BimoduleLabel {
  enum class Kind { T, L, R, F, X };

  Kind kind = Kind::T;
  int index = 0;  // q for F, k for X, unused otherwise

  static BimoduleLabel t() { return {Kind::T, 0}; }
  static BimoduleLabel l() { return {Kind::L, 0}; }
  static BimoduleLabel r() { return {Kind::R, 0}; }
  static BimoduleLabel f(int q) { return {Kind::F, q}; }
  static BimoduleLabel x(int k) { return {Kind::X, k}; }

  bool invertible() const { return kind == Kind::X || (kind == Kind::F && index != 0); }

  friend bool operator==(const BimoduleLabel&, const BimoduleLabel&) = default;
};

inline std::string label_print(const BimoduleLabel& l) {
  switch (l.kind) {
    case BimoduleLabel::Kind::T: return "T";
    case BimoduleLabel::Kind::L: return "L";
    case BimoduleLabel::Kind::R: return "R";
    case BimoduleLabel::Kind::F: return "F" + std::to_string(l.index);
    case BimoduleLabel::Kind::X: return "X" + std::to_string(l.index);
  }
  return "?";
}

/// Grammar: "T" | "L" | "R" | "F<q>" | "X<k>" with decimal indices, k != 0.
inline BimoduleLabel label_parse(std::string_view text) {
  auto fail = [&](const std::string& why) -> BimoduleLabel {
    throw Error(ErrorKind::parse_error, "bad bimodule label '" + std::string(text) + "': " + why);
  };
  if (text == "T") return BimoduleLabel::t();
  if (text == "L") return BimoduleLabel::l();
  if (text == "R") return BimoduleLabel::r();
  if (text.size() < 2 || (text[0] != 'F' && text[0] != 'X')) return fail("expected T, L, R, F<q> or X<k>");
  auto digits = text.substr(1);
  if (digits.size() > 1 && digits[0] == '0') return fail("leading zero");
  int value = 0;
  for (char ch : digits) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return fail("index must be a decimal integer");
    value = value * 10 + (ch - '0');
    if (value > 1000000) return fail("index too large");
  }
  if (text[0] == 'F') return BimoduleLabel::f(value);
  if (value == 0) return fail("invertible index must be nonzero");
  return BimoduleLabel::x(value);
}

/// Parses and range-checks the index against p.
inline BimoduleLabel label_parse(std::string_view text, int p) {
  BimoduleLabel l = label_parse(text);
  if ((l.kind == BimoduleLabel::Kind::F || l.kind == BimoduleLabel::Kind::X) && l.index >= p) {
    throw Error(ErrorKind::parse_error,
                "label '" + std::string(text) + "' has index out of range for p=" + std::to_string(p));
  }
  return l;
}

/// T, L, R, F0, X1..X_{p-1}, F1..F_{p-1}.
inline std::vector<BimoduleLabel> basis_labels(int p) {
  require_prime(p);
  std::vector<BimoduleLabel> out{BimoduleLabel::t(), BimoduleLabel::l(), BimoduleLabel::r(), BimoduleLabel::f(0)};
  for (int k = 1; k < p; ++k) out.push_back(BimoduleLabel::x(k));
  for (int q = 1; q < p; ++q) out.push_back(BimoduleLabel::f(q));
  return out;
}

/// Scalar associator data indexed by (group element, group element, object)
/// in the argument order of the corresponding isomorphism.
using PhaseFn = std::function<CyclotomicScalar(int, int, int)>;

/// A bimodule category over Vec(Z_p) on both sides.  All Hom spaces between
/// simples are at most one dimensional, so the associators are scalars:
///   left_assoc(g, h, m):  g > (h > m)  -> (g+h) > m
///   right_assoc(m, g, h): m < (g+h)    -> (m < g) < h
///   mixed_assoc(g, m, h): (g > m) < h  -> g > (m < h)
struct BimoduleData {
  int p = 2;
  std::optional<BimoduleLabel> label;
  Subgroup subgroup = Subgroup::trivial(2);
  CocycleClass cocycle;
  std::vector<std::string> simples;
  std::vector<std::vector<int>> left_act;   // [g][m]
  std::vector<std::vector<int>> right_act;  // [m][h]
  PhaseFn left_assoc;
  PhaseFn mixed_assoc;
  PhaseFn right_assoc;

  int num_simples() const { return static_cast<int>(simples.size()); }
  int left(int g, int m) const { return left_act[static_cast<std::size_t>(mod(g, p))][static_cast<std::size_t>(m)]; }
  int right(int m, int h) const { return right_act[static_cast<std::size_t>(m)][static_cast<std::size_t>(mod(h, p))]; }
  std::string name() const { return label ? label_print(*label) : std::string("<unlabelled>"); }
};

namespace detail {

inline PhaseFn trivial_phase(int p) {
  return [p](int, int, int) { return CyclotomicScalar::one(p); };
}

template <class Name>
BimoduleData make_bimodule(int p, BimoduleLabel label, Subgroup subgroup, int count, Name name_of,
                           std::function<int(int, int)> left, std::function<int(int, int)> right) {
  BimoduleData b;
  b.p = p;
  b.label = label;
  b.subgroup = subgroup;
  b.cocycle = CocycleClass{p, 0};
  for (int m = 0; m < count; ++m) b.simples.push_back(name_of(m));
  b.left_act.assign(static_cast<std::size_t>(p), std::vector<int>(static_cast<std::size_t>(count)));
  b.right_act.assign(static_cast<std::size_t>(count), std::vector<int>(static_cast<std::size_t>(p)));
  for (int g = 0; g < p; ++g) {
    for (int m = 0; m < count; ++m) {
      b.left_act[g][m] = left(g, m);
      b.right_act[m][g] = right(m, g);
    }
  }
  b.left_assoc = trivial_phase(p);
  b.right_assoc = trivial_phase(p);
  b.mixed_assoc = trivial_phase(p);
  return b;
}

}  // namespace detail

/// One catalogue entry, with the actions and associator of its table row.
inline BimoduleData catalogue_entry(int p, const BimoduleLabel& label) {
  require_prime(p);
  using K = BimoduleLabel::Kind;
  auto plain = [](int m) { return std::to_string(m); };
  switch (label.kind) {
    case K::T:
      return detail::make_bimodule(
          p, label, Subgroup::trivial(p), p * p,
          [p](int m) { return "(" + std::to_string(m / p) + "," + std::to_string(m % p) + ")"; },
          // object (a,b) has index a*p + b
          [p](int g, int m) { return mod(m / p + g, p) * p + m % p; },
          [p](int m, int h) { return (m / p) * p + mod(m % p + h, p); });
    case K::L:
      return detail::make_bimodule(
          p, label, Subgroup::line(PairElt(p, 1, 0)), p, plain, [](int, int m) { return m; },
          [p](int m, int h) { return mod(m + h, p); });
    case K::R:
      return detail::make_bimodule(
          p, label, Subgroup::line(PairElt(p, 0, 1)), p, plain, [p](int g, int m) { return mod(g + m, p); },
          [](int m, int) { return m; });
    case K::X: {
      const int k = label.index;
      if (mod(k, p) == 0) throw Error(ErrorKind::invalid_input, "X index must be nonzero mod p");
      return detail::make_bimodule(
          p, label, Subgroup::line(PairElt(p, -k, 1)), p, plain, [p](int g, int m) { return mod(m + g, p); },
          [p, k](int m, int h) { return mod(m + static_cast<long long>(k) * h, p); });
    }
    case K::F: {
      const int q = label.index;
      if (q < 0 || q >= p) throw Error(ErrorKind::invalid_input, "F index must lie in [0, p)");
      auto b = detail::make_bimodule(
          p, label, Subgroup::full(p), 1, [](int) { return std::string("*"); }, [](int, int) { return 0; },
          [](int, int) { return 0; });
      b.cocycle = CocycleClass{p, q};
      b.mixed_assoc = [p, q](int g, int, int h) { return root_of_unity(p, static_cast<long long>(q) * g * h); };
      return b;
    }
  }
  throw Error(ErrorKind::invalid_input, "unknown label kind");
}

inline std::vector<BimoduleData> catalogue(int p) {
  require_prime(p);
  std::vector<BimoduleData> out;
  for (const auto& l : basis_labels(p)) out.push_back(catalogue_entry(p, l));
  return out;
}

/// {(g, h) : g > m < h = m}.
inline Subgroup stabilizer(const BimoduleData& b, int m) {
  std::vector<PairElt> fixers;
  for (int g = 0; g < b.p; ++g) {
    for (int h = 0; h < b.p; ++h) {
      if (b.right(b.left(g, m), h) == m) fixers.emplace_back(b.p, g, h);
    }
  }
  return subgroup_from_generators(b.p, fixers);
}

/// Lexicographically least (g, h) with g > 0 < h = m, for each simple m.
inline std::vector<PairElt> coset_representatives(const BimoduleData& b) {
  std::vector<std::optional<PairElt>> reps(static_cast<std::size_t>(b.num_simples()));
  for (int g = 0; g < b.p; ++g) {
    for (int h = 0; h < b.p; ++h) {
      auto& slot = reps[static_cast<std::size_t>(b.right(b.left(g, 0), h))];
      if (!slot) slot = PairElt(b.p, g, h);
    }
  }
  std::vector<PairElt> out;
  for (const auto& r : reps) {
    if (!r) throw Error(ErrorKind::invalid_input, "bimodule is not transitive on simples");
    out.push_back(*r);
  }
  return out;
}

/// Every violated coherence condition, checked exhaustively.  Empty iff valid.
inline std::vector<std::string> validate(const BimoduleData& b) {
  std::vector<std::string> v;
  const int p = b.p;
  const int n = b.num_simples();
  auto where = [](std::initializer_list<int> xs) {
    std::string s = "(";
    for (int x : xs) s += (s.size() > 1 ? "," : "") + std::to_string(x);
    return s + ")";
  };

  if (!is_prime(p)) return {"p is not prime"};
  if (n == 0) return {"no simple objects"};
  if (static_cast<int>(b.left_act.size()) != p || static_cast<int>(b.right_act.size()) != n) {
    return {"action table has the wrong shape"};
  }
  for (int g = 0; g < p; ++g) {
    if (static_cast<int>(b.left_act[g].size()) != n) return {"left action row has the wrong length"};
  }
  for (int m = 0; m < n; ++m) {
    if (static_cast<int>(b.right_act[m].size()) != p) return {"right action row has the wrong length"};
  }
  for (const auto& row : b.left_act)
    for (int x : row)
      if (x < 0 || x >= n) return {"left action leaves the object set"};
  for (const auto& row : b.right_act)
    for (int x : row)
      if (x < 0 || x >= n) return {"right action leaves the object set"};
  if (!b.left_assoc || !b.right_assoc || !b.mixed_assoc) return {"missing associator data"};

  for (int m = 0; m < n; ++m) {
    if (b.left(0, m) != m) v.push_back("left unit fails at m=" + std::to_string(m));
    if (b.right(m, 0) != m) v.push_back("right unit fails at m=" + std::to_string(m));
    for (int g = 0; g < p; ++g) {
      for (int h = 0; h < p; ++h) {
        if (b.left(g, b.left(h, m)) != b.left(g + h, m)) v.push_back("left action not associative at " + where({g, h, m}));
        if (b.right(b.right(m, g), h) != b.right(m, g + h)) v.push_back("right action not associative at " + where({m, g, h}));
        if (b.left(g, b.right(m, h)) != b.right(b.left(g, m), h)) v.push_back("actions do not commute at " + where({g, m, h}));
      }
    }
  }
  if (!v.empty()) return v;  // associator checks need well-defined actions

  const auto one = CyclotomicScalar::one(p);
  for (int m = 0; m < n; ++m) {
    for (int g = 0; g < p; ++g) {
      if (!(b.left_assoc(0, g, m) == one) || !(b.left_assoc(g, 0, m) == one)) v.push_back("left associator not normalized at " + where({g, m}));
      if (!(b.right_assoc(m, 0, g) == one) || !(b.right_assoc(m, g, 0) == one)) v.push_back("right associator not normalized at " + where({m, g}));
      if (!(b.mixed_assoc(0, m, g) == one) || !(b.mixed_assoc(g, m, 0) == one)) v.push_back("mixed associator not normalized at " + where({g, m}));
    }
  }

  for (int m = 0; m < n; ++m) {
    for (int g1 = 0; g1 < p; ++g1) {
      for (int g2 = 0; g2 < p; ++g2) {
        for (int g3 = 0; g3 < p; ++g3) {
          // module pentagons (the category associator of Vec(Z_p) is trivial)
          auto lhs = b.left_assoc(mod(g1 + g2, p), g3, m) * b.left_assoc(g1, g2, b.left(g3, m));
          auto rhs = b.left_assoc(g1, mod(g2 + g3, p), m) * b.left_assoc(g2, g3, m);
          if (!(lhs == rhs)) v.push_back("left module pentagon fails at " + where({g1, g2, g3, m}));
          lhs = b.right_assoc(m, mod(g1 + g2, p), g3) * b.right_assoc(m, g1, g2);
          rhs = b.right_assoc(m, g1, mod(g2 + g3, p)) * b.right_assoc(b.right(m, g1), g2, g3);
          if (!(lhs == rhs)) v.push_back("right module pentagon fails at " + where({m, g1, g2, g3}));
        }
        for (int h = 0; h < p; ++h) {
          // middle pentagons: left-left-right and left-right-right
          auto lhs = b.mixed_assoc(mod(g1 + g2, p), m, h) * b.left_assoc(g1, g2, m);
          auto rhs = b.left_assoc(g1, g2, b.right(m, h)) * b.mixed_assoc(g1, b.left(g2, m), h) * b.mixed_assoc(g2, m, h);
          if (!(lhs == rhs)) v.push_back("mixed associator incompatible with left action at " + where({g1, g2, m, h}));
          // same with the roles (g, h1, h2) = (h, g1, g2)
          lhs = b.mixed_assoc(h, m, mod(g1 + g2, p)) * b.right_assoc(m, g1, g2);
          rhs = b.right_assoc(b.left(h, m), g1, g2) * b.mixed_assoc(h, m, g1) * b.mixed_assoc(h, b.right(m, g1), g2);
          if (!(lhs == rhs)) v.push_back("mixed associator incompatible with right action at " + where({h, m, g1, g2}));
        }
      }
    }
  }

  if (b.label) {
    const bool is_f = b.label->kind == BimoduleLabel::Kind::F;
    for (int m = 0; m < n; ++m) {
      if (!(stabilizer(b, m) == b.subgroup)) v.push_back("stabilizer of simple " + std::to_string(m) + " differs from the stored subgroup");
      for (int g = 0; g < p; ++g) {
        for (int h = 0; h < p; ++h) {
          if (!(b.left_assoc(g, h, m) == one)) v.push_back("catalogue left associator not trivial at " + where({g, h, m}));
          if (!(b.right_assoc(m, g, h) == one)) v.push_back("catalogue right associator not trivial at " + where({m, g, h}));
          const long long expected = is_f ? static_cast<long long>(b.label->index) * g * h : 0;
          if (!(b.mixed_assoc(g, m, h) == root_of_unity(p, expected))) {
            v.push_back("catalogue mixed associator differs from zeta^(q g h) at " + where({g, m, h}));
          }
        }
      }
    }
    if (b.cocycle.q != (is_f ? b.label->index : 0)) v.push_back("cocycle class does not match the label");
  }
  return v;
}

}  // namespace bpring
