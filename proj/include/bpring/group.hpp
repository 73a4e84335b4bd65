#pragma once

// Z_p and Z_p x Z_p: elements, subgroups, cosets and the bilinear 2-cocycle
// representatives used to label bimodules.

#include <algorithm>
#include <compare>
#include <set>
#include <string>
#include <vector>

#include "bpring/scalar.hpp"

namespace bpring {

struct ZpElt {
  int p = 2;
  int value = 0;

  ZpElt() = default;
  ZpElt(int prime, long long v) : p(prime), value(mod(v, prime)) {}

  friend ZpElt operator+(ZpElt a, ZpElt b) { return {a.p, static_cast<long long>(a.value) + b.value}; }
  friend ZpElt operator-(ZpElt a, ZpElt b) { return {a.p, static_cast<long long>(a.value) - b.value}; }
  ZpElt operator-() const { return {p, -static_cast<long long>(value)}; }
  friend bool operator==(const ZpElt&, const ZpElt&) = default;
  friend auto operator<=>(const ZpElt&, const ZpElt&) = default;
};

/// Element (left, right) of Z_p x Z_p.
struct PairElt {
  int p = 2;
  int left = 0;
  int right = 0;

  PairElt() = default;
  PairElt(int prime, long long l, long long r) : p(prime), left(mod(l, prime)), right(mod(r, prime)) {}

  friend PairElt operator+(PairElt a, PairElt b) {
    return {a.p, static_cast<long long>(a.left) + b.left, static_cast<long long>(a.right) + b.right};
  }
  PairElt operator-() const { return {p, -static_cast<long long>(left), -static_cast<long long>(right)}; }
  PairElt scaled(long long k) const { return {p, k * left, k * right}; }
  bool is_zero() const { return left == 0 && right == 0; }

  friend bool operator==(const PairElt&, const PairElt&) = default;
  friend auto operator<=>(const PairElt&, const PairElt&) = default;

  std::string to_string() const { return "(" + std::to_string(left) + "," + std::to_string(right) + ")"; }
};

class Subgroup {
 public:
  enum class Kind { trivial, line, full };

  static Subgroup trivial(int p) { return Subgroup(p, Kind::trivial, PairElt(p, 0, 0)); }
  static Subgroup full(int p) { return Subgroup(p, Kind::full, PairElt(p, 0, 0)); }
  /// The cyclic subgroup generated by a nonzero element, generator stored with
  /// its first nonzero coordinate scaled to 1.
  static Subgroup line(PairElt gen) {
    if (gen.is_zero()) throw Error(ErrorKind::invalid_input, "line generator must be nonzero");
    int lead = gen.left != 0 ? gen.left : gen.right;
    return Subgroup(gen.p, Kind::line, gen.scaled(inverse_mod(lead, gen.p)));
  }

  int prime() const { return p_; }
  Kind kind() const { return kind_; }
  /// Canonical generator; meaningful for lines only.
  PairElt generator() const { return gen_; }

  int order() const {
    switch (kind_) {
      case Kind::trivial: return 1;
      case Kind::line: return p_;
      case Kind::full: return p_ * p_;
    }
    return 0;
  }

  bool contains(PairElt x) const {
    switch (kind_) {
      case Kind::trivial: return x.is_zero();
      case Kind::full: return true;
      case Kind::line:
        // x is a multiple of gen iff the 2x2 determinant vanishes
        return mod(static_cast<long long>(x.left) * gen_.right - static_cast<long long>(x.right) * gen_.left, p_) == 0;
    }
    return false;
  }

  /// All members in lexicographic order.
  std::vector<PairElt> elements() const {
    std::vector<PairElt> out;
    for (int a = 0; a < p_; ++a) {
      for (int b = 0; b < p_; ++b) {
        PairElt x(p_, a, b);
        if (contains(x)) out.push_back(x);
      }
    }
    return out;
  }

  std::string to_string() const {
    switch (kind_) {
      case Kind::trivial: return "{(0,0)}";
      case Kind::full: return "<(1,0),(0,1)>";
      case Kind::line: return "<" + gen_.to_string() + ">";
    }
    return "?";
  }

  friend bool operator==(const Subgroup&, const Subgroup&) = default;

 private:
  Subgroup(int p, Kind kind, PairElt gen) : p_(p), kind_(kind), gen_(gen) {}

  int p_;
  Kind kind_;
  PairElt gen_;
};

/// Closure of a set of elements under addition, by brute force.
inline std::set<PairElt> closure(int p, const std::vector<PairElt>& gens) {
  std::set<PairElt> members{PairElt(p, 0, 0)};
  std::vector<PairElt> frontier{PairElt(p, 0, 0)};
  while (!frontier.empty()) {
    std::vector<PairElt> next;
    for (const auto& x : frontier) {
      for (const auto& g : gens) {
        PairElt y = x + g;
        if (members.insert(y).second) next.push_back(y);
      }
    }
    frontier = std::move(next);
  }
  return members;
}

inline Subgroup subgroup_from_generators(int p, const std::vector<PairElt>& gens) {
  require_prime(p);
  for (const auto& g : gens) {
    if (g.p != p) throw Error(ErrorKind::invalid_input, "generator over a different prime");
  }
  auto members = closure(p, gens);
  if (members.size() == 1) return Subgroup::trivial(p);
  if (static_cast<int>(members.size()) == p * p) return Subgroup::full(p);
  if (static_cast<int>(members.size()) != p) {
    throw Error(ErrorKind::internal_error, "subgroup order " + std::to_string(members.size()) + " impossible for prime p");
  }
  return Subgroup::line(*std::next(members.begin()));
}

/// trivial, then the p+1 lines ordered by canonical generator, then the full group.
inline std::vector<Subgroup> enumerate_subgroups(int p) {
  require_prime(p);
  std::vector<Subgroup> out{Subgroup::trivial(p), Subgroup::line(PairElt(p, 0, 1))};
  for (int t = 0; t < p; ++t) out.push_back(Subgroup::line(PairElt(p, 1, t)));
  out.push_back(Subgroup::full(p));
  return out;
}

/// Lexicographically least member of each coset, in increasing order.
inline std::vector<PairElt> cosets(const Subgroup& h) {
  const int p = h.prime();
  const auto members = h.elements();
  std::set<PairElt> covered;
  std::vector<PairElt> reps;
  for (int a = 0; a < p; ++a) {
    for (int b = 0; b < p; ++b) {
      PairElt x(p, a, b);
      if (covered.count(x)) continue;
      reps.push_back(x);
      for (const auto& y : members) covered.insert(x + y);
    }
  }
  return reps;
}

/// Class in H^2(Z_p x Z_p, U(1)) ~ Z_p, represented by the bilinear cocycle
/// omega(x, y) = zeta^(q * x.right * y.left).
struct CocycleClass {
  int p = 2;
  int q = 0;

  friend bool operator==(const CocycleClass&, const CocycleClass&) = default;
};

inline CyclotomicScalar cocycle_phase(const CocycleClass& c, PairElt x, PairElt y) {
  if (x.p != c.p || y.p != c.p) throw Error(ErrorKind::invalid_input, "cocycle arguments over a different prime");
  return root_of_unity(c.p, static_cast<long long>(c.q) * x.right * y.left);
}

}  // namespace bpring
