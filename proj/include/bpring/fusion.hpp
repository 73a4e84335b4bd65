#pragma once

// Relative tensor product M (x)_B N as a classified bimodule.
//
// The outer actions of Vec(Z_p) on the simples of Kar(Lad(M, N)) are found by
// attaching the outer strand to a simple, moving the result to its anchor
// object and matching the transported idempotent.  The mixed associator is
// read off by comparing the two witness paths g>(s)<h.  Orbits of the action
// then give (stabilizer, associator exponent) which names a catalogue label.

#include <algorithm>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "bpring/karoubi.hpp"
#include "bpring/table.hpp"

namespace bpring {

enum class Side { left, right };

struct ActionMorphism {
  int g = 0;
  Side side = Side::left;
  int source = 0;  // simple index
  int target = 0;  // simple index
  LadderMorphism witness;
};

/// The label of an indecomposable with stabilizer H; `exponent` is only
/// consulted when H is the whole group.
inline BimoduleLabel classify_orbit(const Subgroup& h, std::optional<int> exponent) {
  const int p = h.prime();
  switch (h.kind()) {
    case Subgroup::Kind::trivial: return BimoduleLabel::t();
    case Subgroup::Kind::full:
      if (!exponent) throw Error(ErrorKind::classification_error, "full stabilizer without associator exponent");
      return BimoduleLabel::f(mod(*exponent, p));
    case Subgroup::Kind::line: {
      const PairElt gen = h.generator();
      if (gen == PairElt(p, 1, 0)) return BimoduleLabel::l();
      if (gen == PairElt(p, 0, 1)) return BimoduleLabel::r();
      // <(-k, 1)> = <(1, -1/k)>
      if (gen.left == 1) return BimoduleLabel::x(inverse_mod(-gen.right, p));
      break;
    }
  }
  throw Error(ErrorKind::classification_error, "unrecognized stabilizer " + h.to_string());
}

struct Orbit {
  std::vector<int> members;  // simple indices, ascending
  Subgroup stabilizer = Subgroup::trivial(2);
  std::optional<int> exponent;  // mixed associator exponent at (g, h) = (1, 1)
  BimoduleLabel label;
};

class RelativeProduct {
 public:
  RelativeProduct(BimoduleData left, BimoduleData right)
      : cat_(std::make_unique<LadderCategory>(std::move(left), std::move(right))), env_(*cat_) {}

  int prime() const { return cat_->prime(); }
  const LadderCategory& ladder() const { return *cat_; }
  const KaroubiEnvelope& envelope() const { return env_; }
  const std::vector<KarSimple>& simples() const { return env_.simples(); }

  /// Attaches g to simple s on the given side and finds the isomorphic
  /// canonical simple together with a normalized witness f satisfying
  /// t.idem o f o (g.s.idem) = f.
  ActionMorphism outer_action(int g, Side side, int s) const {
    const KarSimple& src = simples().at(static_cast<std::size_t>(s));
    const auto& e = src.representative.idem;
    const LadderMorphism moved = side == Side::left ? cat_->act_left(g, e) : cat_->act_right(e, g);
    const LadderMorphism r = env_.to_anchor(moved.source);
    const int t = env_.classify(KarObject{moved.source, moved});
    LadderMorphism witness = cat_->compose(moved, r);
    if (witness.is_zero()) throw Error(ErrorKind::internal_error, "outer action produced a zero witness");
    witness = witness.coeffs.begin()->second.inv() * witness;
    if (check_absorption_) {
      const auto& target_idem = simples()[static_cast<std::size_t>(t)].representative.idem;
      if (!(cat_->compose(moved, witness) == witness) || !(cat_->compose(witness, target_idem) == witness)) {
        throw Error(ErrorKind::internal_error, "action witness does not absorb the idempotents");
      }
    }
    return {mod(g, prime()), side, s, t, std::move(witness)};
  }

  /// Exponent k with (left g, then right h) = zeta^k (right h, then left g)
  /// as morphisms out of g > s < h.
  int mixed_associator(int g, int h, int s) const {
    const auto lg = outer_action(g, Side::left, s);
    const auto rh_after = outer_action(h, Side::right, lg.target);
    const auto path_a = cat_->compose(cat_->act_right(lg.witness, h), rh_after.witness);

    const auto rh = outer_action(h, Side::right, s);
    const auto lg_after = outer_action(g, Side::left, rh.target);
    const auto path_b = cat_->compose(cat_->act_left(g, rh.witness), lg_after.witness);

    if (rh_after.target != lg_after.target) {
      throw Error(ErrorKind::internal_error, "left and right outer actions do not commute on simples");
    }
    const auto ratio = proportionality(path_a, path_b);
    if (!ratio) throw Error(ErrorKind::internal_error, "witness paths are not proportional");
    const auto k = phase_exponent(*ratio);
    if (!k) throw Error(ErrorKind::internal_error, "associator ratio " + ratio->to_string() + " is not a root of unity");
    return *k;
  }

  /// action_table(Side::left)[g][s] is the simple g > s (similarly on the right).
  const std::vector<std::vector<int>>& action_table(Side side) const {
    ensure_actions();
    return side == Side::left ? left_table_ : right_table_;
  }

  /// {(g, h) : g > s < h = s}.
  Subgroup stabilizer(int s) const {
    ensure_actions();
    std::vector<PairElt> fixers;
    for (int g = 0; g < prime(); ++g)
      for (int h = 0; h < prime(); ++h)
        if (right_table_[h][left_table_[g][s]] == s) fixers.emplace_back(prime(), g, h);
    return subgroup_from_generators(prime(), fixers);
  }

  const std::vector<Orbit>& orbits() const {
    if (orbits_) return *orbits_;
    ensure_actions();
    const int n = env_.size();
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (int s = 0; s < n; ++s) {
      for (int t : {left_table_[1 % prime()][s], right_table_[1 % prime()][s]}) {
        int a = find(s), b = find(t);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
    std::vector<Orbit> out;
    std::map<int, std::size_t> slot;
    for (int s = 0; s < n; ++s) {
      int root = find(s);
      auto [it, fresh] = slot.emplace(root, out.size());
      if (fresh) out.emplace_back();
      out[it->second].members.push_back(s);
    }
    for (auto& orbit : out) {
      const int base = orbit.members.front();
      orbit.stabilizer = stabilizer(base);
      if (static_cast<int>(orbit.members.size()) * orbit.stabilizer.order() != prime() * prime()) {
        throw Error(ErrorKind::internal_error, "orbit-stabilizer count mismatch");
      }
      if (orbit.stabilizer.kind() == Subgroup::Kind::full) orbit.exponent = mixed_associator(1, 1, base);
      orbit.label = classify_orbit(orbit.stabilizer, orbit.exponent);
    }
    orbits_ = std::move(out);
    return *orbits_;
  }

  Decomposition decompose() const {
    std::vector<std::pair<BimoduleLabel, int>> counts;
    for (const auto& o : orbits()) counts.emplace_back(o.label, 1);
    return make_decomposition(prime(), counts);
  }

  /// Skips the idempotent absorption self-check in outer_action.
  void set_check_absorption(bool on) { check_absorption_ = on; }

 private:
  void ensure_actions() const {
    if (!left_table_.empty()) return;
    const int p = prime(), n = env_.size();
    left_table_.assign(static_cast<std::size_t>(p), std::vector<int>(static_cast<std::size_t>(n)));
    right_table_.assign(static_cast<std::size_t>(p), std::vector<int>(static_cast<std::size_t>(n)));
    for (int g = 0; g < p; ++g) {
      for (int s = 0; s < n; ++s) {
        left_table_[g][s] = outer_action(g, Side::left, s).target;
        right_table_[g][s] = outer_action(g, Side::right, s).target;
      }
    }
  }

  std::unique_ptr<LadderCategory> cat_;
  KaroubiEnvelope env_;
  bool check_absorption_ = true;
  mutable std::vector<std::vector<int>> left_table_;
  mutable std::vector<std::vector<int>> right_table_;
  mutable std::optional<std::vector<Orbit>> orbits_;
};

inline Decomposition decompose(const BimoduleData& m, const BimoduleData& n) { return RelativeProduct(m, n).decompose(); }

}  // namespace bpring
