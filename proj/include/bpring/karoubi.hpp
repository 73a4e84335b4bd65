#pragma once

// Idempotent completion of a ladder category: primitive idempotents,
// morphism spaces between (object, idempotent) pairs and one canonical
// representative per isomorphism class of simple objects.

#include <map>
#include <optional>
#include <vector>

#include "bpring/ladder.hpp"

namespace bpring {

struct KarObject {
  LadderObject base;
  LadderMorphism idem;  // source == target == base, idem o idem == idem

  friend bool operator==(const KarObject&, const KarObject&) = default;
};

struct KarSimple {
  KarObject representative;
  int class_index = 0;
  int character = 0;  // index k of the character idempotent I_k at the base
};

/// lambda with x == lambda * y, if any.  y must be nonzero.
inline std::optional<CyclotomicScalar> proportionality(const LadderMorphism& x, const LadderMorphism& y) {
  if (y.is_zero() || !(x.source == y.source) || !(x.target == y.target)) return std::nullopt;
  if (x.coeffs.size() != y.coeffs.size()) return std::nullopt;
  const auto& [b0, y0] = *y.coeffs.begin();
  auto it = x.coeffs.find(b0);
  if (it == x.coeffs.end()) return std::nullopt;
  CyclotomicScalar lambda = it->second / y0;
  if (!(x == lambda * y)) return std::nullopt;
  return lambda;
}

/// Linearly independent subset (over Q(zeta_p)) of morphisms sharing a source and target.
inline std::vector<LadderMorphism> independent_subset(const std::vector<LadderMorphism>& candidates) {
  std::vector<std::pair<int, LadderMorphism>> echelon;  // pivot rung, reduced vector
  std::vector<LadderMorphism> chosen;
  for (const auto& cand : candidates) {
    LadderMorphism v = cand;
    for (const auto& [pivot, row] : echelon) {
      auto it = v.coeffs.find(pivot);
      if (it == v.coeffs.end()) continue;
      v = v - (it->second / row.coeffs.at(pivot)) * row;
    }
    if (v.is_zero()) continue;
    echelon.emplace_back(v.coeffs.begin()->first, v);
    chosen.push_back(cand);
  }
  return chosen;
}

/// Complete set of orthogonal primitive idempotents of End(obj), indexed by
/// character: I_k = (1/d) sum_{b in S} zeta^(k b) [rung b] where S is the
/// rung stabilizer of obj and d = |S| in {1, p}.
inline std::vector<LadderMorphism> primitive_idempotents(const LadderCategory& cat, LadderObject obj) {
  const EndAlgebra alg = cat.end_algebra(obj);
  if (!alg.commutative()) throw Error(ErrorKind::unsupported_input, "non-commutative endomorphism algebra");
  if (!alg.untwisted()) throw Error(ErrorKind::unsupported_input, "twisted endomorphism algebra");
  const int p = cat.prime();
  const int d = alg.dimension();
  if (d == 1) return {cat.identity(obj)};
  if (d != p) throw Error(ErrorKind::internal_error, "rung stabilizer of unexpected order " + std::to_string(d));
  std::vector<LadderMorphism> out;
  const Rational weight(1, d);
  for (int k = 0; k < p; ++k) {
    LadderMorphism e = cat.zero(obj, obj);
    for (int b : alg.rungs) e.coeffs.emplace(b, root_of_unity(p, static_cast<long long>(k) * b) * weight);
    out.push_back(std::move(e));
  }
  return out;
}

/// Basis of b.idem o Hom(a.base, b.base) o a.idem.
inline std::vector<LadderMorphism> kar_hom_basis(const LadderCategory& cat, const KarObject& a, const KarObject& b) {
  std::vector<LadderMorphism> projected;
  for (int rung : cat.hom_basis(a.base, b.base)) {
    auto f = cat.compose(cat.compose(a.idem, cat.basic(a.base, rung)), b.idem);
    if (!f.is_zero()) projected.push_back(std::move(f));
  }
  return independent_subset(projected);
}

/// For objects with primitive idempotents: nonzero morphisms both ways whose
/// composites are (after rescaling) the two idempotents.
inline bool is_isomorphic(const LadderCategory& cat, const KarObject& a, const KarObject& b) {
  const auto ab = kar_hom_basis(cat, a, b);
  const auto ba = kar_hom_basis(cat, b, a);
  if (ab.empty() || ba.empty()) return false;
  const auto round_a = proportionality(cat.compose(ab.front(), ba.front()), a.idem);
  const auto round_b = proportionality(cat.compose(ba.front(), ab.front()), b.idem);
  return round_a && round_b && !round_a->is_zero() && !round_b->is_zero();
}

/// The simples of Kar(Lad(M, N)).
///
/// Rungs act on ladder objects as the group Z_p, so each isomorphism class of
/// ladder objects is a Z_p-orbit joined by single basic ladders.  Every
/// primitive idempotent is conjugate to one at the least object of its
/// orbit, and distinct character idempotents there are orthogonal, so the
/// simples are (orbit minimum, character) pairs.
class KaroubiEnvelope {
 public:
  explicit KaroubiEnvelope(const LadderCategory& cat) : cat_(&cat) {
    const int p = cat.prime();
    const auto objects = cat.objects();
    anchor_.resize(objects.size());
    for (const auto& obj : objects) {
      LadderObject best = obj;
      int best_rung = 0;
      for (int b = 1; b < p; ++b) {
        LadderObject t = cat.target_of(obj, b);
        if (t < best) {
          best = t;
          best_rung = b;
        }
      }
      anchor_[id(obj)] = {best, best_rung};
    }
    for (const auto& obj : objects) {
      if (!(anchor_[id(obj)].first == obj)) continue;
      first_simple_.emplace(id(obj), static_cast<int>(simples_.size()));
      auto idems = primitive_idempotents(cat, obj);
      for (int k = 0; k < static_cast<int>(idems.size()); ++k) {
        simples_.push_back({KarObject{obj, std::move(idems[k])}, static_cast<int>(simples_.size()), k});
      }
    }
  }

  const LadderCategory& ladder() const { return *cat_; }
  const std::vector<KarSimple>& simples() const { return simples_; }
  int size() const { return static_cast<int>(simples_.size()); }

  /// Least object isomorphic to obj in Lad(M, N).
  LadderObject anchor(LadderObject obj) const { return anchor_[id(obj)].first; }

  /// The basic ladder from obj to its anchor.
  LadderMorphism to_anchor(LadderObject obj) const { return cat_->basic(obj, anchor_[id(obj)].second); }

  /// Index of the simple isomorphic to a KarObject with primitive idempotent.
  int classify(const KarObject& x) const {
    const LadderObject base = anchor(x.base);
    const auto r = to_anchor(x.base);
    const auto moved = cat_->compose(cat_->compose(cat_->inverse_basic(r), x.idem), r);
    const int first = first_simple_.at(id(base));
    for (int s = first; s < size() && simples_[s].representative.base == base; ++s) {
      if (simples_[s].representative.idem == moved) return s;
    }
    throw Error(ErrorKind::internal_error, "idempotent transported to its anchor is not a character idempotent");
  }

 private:
  int id(LadderObject o) const { return o.n * cat_->left_module().num_simples() + o.m; }

  const LadderCategory* cat_;
  std::vector<std::pair<LadderObject, int>> anchor_;
  std::map<int, int> first_simple_;
  std::vector<KarSimple> simples_;
};

/// Canonical simple representatives of Kar(Lad(M, N)).
inline std::vector<KarSimple> simples(const LadderCategory& cat) { return KaroubiEnvelope(cat).simples(); }

}  // namespace bpring
