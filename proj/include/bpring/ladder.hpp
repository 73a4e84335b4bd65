#pragma once

// The ladder category Lad(M, N) over Vec(Z_p).
//
// Objects are pairs (m, n) of simples of M and N.  A basic ladder from
// (m, n) up to (x, y) carries a rung b in Z_p and exists exactly when
// m = x < b and y = b > n; all trivalent vertex spaces are one dimensional so
// a morphism is a linear combination of rungs.  Stacking rung b1 (below) and
// b2 (above) fuses to rung b1 + b2 times the associator phases of the two
// uprights.

#include <algorithm>
#include <compare>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bpring/bimodule.hpp"

namespace bpring {

struct LadderObject {
  int m = 0;
  int n = 0;

  friend bool operator==(const LadderObject&, const LadderObject&) = default;
  // Canonical order compares the right-hand label first, so that the least
  // object of an isomorphism class has its N-label reduced, e.g. (a,b)(0,c).
  friend std::strong_ordering operator<=>(const LadderObject& a, const LadderObject& b) {
    if (auto c = a.n <=> b.n; c != 0) return c;
    return a.m <=> b.m;
  }
};

struct LadderMorphism {
  LadderObject source;
  LadderObject target;
  std::map<int, CyclotomicScalar> coeffs;  // rung -> coefficient, zeros pruned

  bool is_zero() const { return coeffs.empty(); }
  int dimension_of_support() const { return static_cast<int>(coeffs.size()); }

  friend bool operator==(const LadderMorphism&, const LadderMorphism&) = default;
};

inline LadderMorphism operator*(const CyclotomicScalar& s, LadderMorphism f) {
  if (s.is_zero()) {
    f.coeffs.clear();
    return f;
  }
  if (s.is_one()) return f;
  for (auto& [rung, c] : f.coeffs) c = s * c;
  return f;
}

inline LadderMorphism operator+(LadderMorphism f, const LadderMorphism& g) {
  if (!(f.source == g.source) || !(f.target == g.target)) {
    throw Error(ErrorKind::composition_error, "adding ladder morphisms between different objects");
  }
  for (const auto& [rung, c] : g.coeffs) {
    auto it = f.coeffs.find(rung);
    if (it == f.coeffs.end()) {
      f.coeffs.emplace(rung, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) f.coeffs.erase(it);
    }
  }
  return f;
}

inline LadderMorphism operator-(const LadderMorphism& f, const LadderMorphism& g) {
  if (g.coeffs.empty()) return f;
  const int p = g.coeffs.begin()->second.prime();
  return f + CyclotomicScalar(p, Rational(-1)) * g;
}

/// Structure constants of End(obj): rungs[i] * rungs[j] = coeff * rungs[index].
struct EndAlgebra {
  struct Product {
    int index;
    CyclotomicScalar coeff;
  };
  std::vector<int> rungs;
  std::vector<std::vector<Product>> table;  // table[i][j] = e_i followed by e_j

  int dimension() const { return static_cast<int>(rungs.size()); }

  bool commutative() const {
    for (std::size_t i = 0; i < table.size(); ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        if (table[i][j].index != table[j][i].index || !(table[i][j].coeff == table[j][i].coeff)) return false;
      }
    }
    return true;
  }

  /// True when every product coefficient is 1, i.e. a plain group algebra.
  bool untwisted() const {
    for (const auto& row : table)
      for (const auto& pr : row)
        if (!pr.coeff.is_one()) return false;
    return true;
  }
};

class LadderCategory {
 public:
  LadderCategory(BimoduleData left, BimoduleData right) : m_(std::move(left)), n_(std::move(right)) {
    if (m_.p != n_.p) throw Error(ErrorKind::invalid_input, "bimodules over different primes");
  }

  int prime() const { return m_.p; }
  const BimoduleData& left_module() const { return m_; }
  const BimoduleData& right_module() const { return n_; }

  std::vector<LadderObject> objects() const {
    std::vector<LadderObject> out;
    for (int n = 0; n < n_.num_simples(); ++n)
      for (int m = 0; m < m_.num_simples(); ++m) out.push_back({m, n});
    return out;
  }

  int object_count() const { return m_.num_simples() * n_.num_simples(); }

  /// The top of the unique basic ladder with bottom `src` and the given rung.
  LadderObject target_of(LadderObject src, int rung) const { return {m_.right(src.m, -rung), n_.left(rung, src.n)}; }

  bool admissible(LadderObject src, LadderObject tgt, int rung) const {
    return m_.right(tgt.m, rung) == src.m && n_.left(rung, src.n) == tgt.n;
  }

  std::vector<int> hom_basis(LadderObject src, LadderObject tgt) const {
    std::vector<int> out;
    for (int b = 0; b < prime(); ++b) {
      if (admissible(src, tgt, b)) out.push_back(b);
    }
    return out;
  }

  LadderMorphism zero(LadderObject src, LadderObject tgt) const { return {src, tgt, {}}; }

  LadderMorphism basic(LadderObject src, int rung) const {
    const int b = mod(rung, prime());
    return {src, target_of(src, b), {{b, CyclotomicScalar::one(prime())}}};
  }

  LadderMorphism identity(LadderObject obj) const { return basic(obj, 0); }

  /// Phase picked up when the rung b1 ladder out of `bottom` is followed by
  /// the rung b2 ladder and the two rungs are fused.
  CyclotomicScalar fusion_coefficient(LadderObject bottom, int b1, int b2) const {
    const LadderObject top = target_of(target_of(bottom, b1), b2);
    return m_.right_assoc(top.m, b2, b1) * n_.left_assoc(b2, b1, bottom.n);
  }

  /// `f` followed by `g` (g o f); requires f.target == g.source.
  LadderMorphism compose(const LadderMorphism& f, const LadderMorphism& g) const {
    if (!(f.target == g.source)) throw Error(ErrorKind::composition_error, "target of first ladder is not the source of the second");
    LadderMorphism out = zero(f.source, g.target);
    for (const auto& [b1, c1] : f.coeffs) {
      for (const auto& [b2, c2] : g.coeffs) {
        const int b = mod(b1 + b2, prime());
        auto phase = fusion_coefficient(f.source, b1, b2);
        auto term = c1 * c2;
        if (!phase.is_one()) term = term * phase;
        auto it = out.coeffs.find(b);
        if (it == out.coeffs.end()) out.coeffs.emplace(b, std::move(term));
        else it->second += term;
      }
    }
    std::erase_if(out.coeffs, [](const auto& kv) { return kv.second.is_zero(); });
    return out;
  }

  /// Inverse of a basic ladder (a single rung with nonzero coefficient).
  LadderMorphism inverse_basic(const LadderMorphism& f) const {
    if (f.coeffs.size() != 1) throw Error(ErrorKind::composition_error, "inverse_basic needs a single-rung ladder");
    LadderMorphism back = basic(f.target, -f.coeffs.begin()->first);
    auto loop = compose(f, back);  // c * phase * rung 0
    return loop.coeffs.at(0).inv() * back;
  }

  /// Throws composition-error when a rung with nonzero coefficient is not admissible.
  void check(const LadderMorphism& f) const {
    for (const auto& [b, c] : f.coeffs) {
      if (!admissible(f.source, f.target, b)) {
        throw Error(ErrorKind::composition_error, "rung " + std::to_string(b) + " is not admissible");
      }
    }
  }

  EndAlgebra end_algebra(LadderObject obj) const {
    EndAlgebra alg;
    alg.rungs = hom_basis(obj, obj);
    for (int b1 : alg.rungs) {
      std::vector<EndAlgebra::Product> row;
      for (int b2 : alg.rungs) {
        const int b = mod(b1 + b2, prime());
        const auto idx = std::find(alg.rungs.begin(), alg.rungs.end(), b) - alg.rungs.begin();
        row.push_back({static_cast<int>(idx), fusion_coefficient(obj, b1, b2)});
      }
      alg.table.push_back(std::move(row));
    }
    return alg;
  }

  // Outer actions.  g acts on the M upright from the left, h on the N upright
  // from the right; on a ladder the strand slides past the rung vertex with
  // the mixed associator of the bimodule it crosses.

  LadderObject act_left(int g, LadderObject o) const { return {m_.left(g, o.m), o.n}; }
  LadderObject act_right(LadderObject o, int h) const { return {o.m, n_.right(o.n, h)}; }

  LadderMorphism act_left(int g, const LadderMorphism& f) const {
    LadderMorphism out{act_left(g, f.source), act_left(g, f.target), {}};
    for (const auto& [b, c] : f.coeffs) {
      auto phase = m_.mixed_assoc(mod(g, prime()), f.target.m, b);
      out.coeffs.emplace(b, phase.is_one() ? c : c * phase);
    }
    return out;
  }

  LadderMorphism act_right(const LadderMorphism& f, int h) const {
    LadderMorphism out{act_right(f.source, h), act_right(f.target, h), {}};
    for (const auto& [b, c] : f.coeffs) {
      auto phase = n_.mixed_assoc(b, f.source.n, mod(h, prime()));
      out.coeffs.emplace(b, phase.is_one() ? c : c * phase);
    }
    return out;
  }

  std::string object_name(LadderObject o) const { return m_.simples[o.m] + n_.simples[o.n]; }

 private:
  BimoduleData m_;
  BimoduleData n_;
};

}  // namespace bpring
