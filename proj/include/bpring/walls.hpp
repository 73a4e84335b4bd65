#pragma once

// Domain walls in the Z_p toric code as an independent model of the ring.
//
// Non-invertible bimodules are pairs of gapped boundaries (rough condenses e,
// smooth condenses m).  Invertible ones permute anyon labels e^a m^b through
// a 2x2 matrix over Z_p.  Stacking walls reproduces the multiplication table
// without touching ladders or idempotents.

#include <array>
#include <mutex>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "bpring/bimodule.hpp"
#include "bpring/table.hpp"

namespace bpring {

enum class BoundaryType { e_condensing, m_condensing };

inline const char* to_string(BoundaryType b) { return b == BoundaryType::e_condensing ? "e" : "m"; }

inline BoundaryType flip(BoundaryType b) {
  return b == BoundaryType::e_condensing ? BoundaryType::m_condensing : BoundaryType::e_condensing;
}

struct BoundaryPair {
  BoundaryType left = BoundaryType::e_condensing;
  BoundaryType right = BoundaryType::e_condensing;

  friend bool operator==(const BoundaryPair&, const BoundaryPair&) = default;
};

/// (a, b) -> (m[0][0] a + m[0][1] b, m[1][0] a + m[1][1] b) on e^a m^b.
struct LabelMap {
  int p = 2;
  std::array<std::array<int, 2>, 2> m{{{1, 0}, {0, 1}}};

  std::pair<int, int> operator()(int a, int b) const {
    return {mod(static_cast<long long>(m[0][0]) * a + static_cast<long long>(m[0][1]) * b, p),
            mod(static_cast<long long>(m[1][0]) * a + static_cast<long long>(m[1][1]) * b, p)};
  }

  int determinant() const { return mod(static_cast<long long>(m[0][0]) * m[1][1] - static_cast<long long>(m[0][1]) * m[1][0], p); }
  bool bijective() const { return determinant() != 0; }

  /// True when pure e charges are sent to pure m charges.
  bool exchanges_sectors() const {
    const auto [a, b] = (*this)(1, 0);
    return a == 0 && b != 0;
  }

  friend LabelMap operator*(const LabelMap& x, const LabelMap& y) {
    LabelMap out{x.p, {}};
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        out.m[i][j] = mod(static_cast<long long>(x.m[i][0]) * y.m[0][j] + static_cast<long long>(x.m[i][1]) * y.m[1][j], x.p);
    return out;
  }

  friend bool operator==(const LabelMap&, const LabelMap&) = default;

  std::string to_string() const {
    return "[[" + std::to_string(m[0][0]) + "," + std::to_string(m[0][1]) + "],[" + std::to_string(m[1][0]) + "," +
           std::to_string(m[1][1]) + "]]";
  }
};

using WallModel = std::variant<BoundaryPair, LabelMap>;

/// How F_q is built from F1 and X_q, and in which order stacked maps compose.
struct WallConvention {
  bool swap_first = true;       // F_q = F1 * X_q (else X_q * F1)
  bool left_wall_first = true;  // stack(w1, w2) = w1 * w2 (else w2 * w1)

  friend bool operator==(const WallConvention&, const WallConvention&) = default;

  std::string to_string() const {
    return std::string(swap_first ? "F_q = F1*X_q" : "F_q = X_q*F1") + ", " +
           (left_wall_first ? "stack(w1,w2) = w1*w2" : "stack(w1,w2) = w2*w1");
  }
};

inline LabelMap x_map(int p, int k) { return {p, {{{mod(k, p), 0}, {0, inverse_mod(k, p)}}}}; }
inline LabelMap swap_map(int p) { return {p, {{{0, 1}, {1, 0}}}}; }

inline WallModel wall_of(int p, const BimoduleLabel& l, const WallConvention& c) {
  using K = BimoduleLabel::Kind;
  constexpr auto e = BoundaryType::e_condensing, m = BoundaryType::m_condensing;
  switch (l.kind) {
    case K::T: return BoundaryPair{e, e};
    case K::L: return BoundaryPair{m, e};
    case K::R: return BoundaryPair{e, m};
    case K::X: return x_map(p, l.index);
    case K::F:
      if (l.index == 0) return BoundaryPair{m, m};
      return c.swap_first ? swap_map(p) * x_map(p, l.index) : x_map(p, l.index) * swap_map(p);
  }
  throw Error(ErrorKind::oracle_error, "unknown label kind");
}

/// The label whose invertible wall is `map`.
inline BimoduleLabel label_of(const LabelMap& map, const WallConvention& c) {
  const int p = map.p;
  for (int k = 1; k < p; ++k) {
    if (x_map(p, k) == map) return BimoduleLabel::x(k);
    if (std::get<LabelMap>(wall_of(p, BimoduleLabel::f(k), c)) == map) return BimoduleLabel::f(k);
  }
  throw Error(ErrorKind::oracle_error, "label map " + map.to_string() + " is not a catalogue wall");
}

inline BimoduleLabel label_of(const BoundaryPair& b) {
  constexpr auto e = BoundaryType::e_condensing;
  if (b.left == e) return b.right == e ? BimoduleLabel::t() : BimoduleLabel::r();
  return b.right == e ? BimoduleLabel::l() : BimoduleLabel::f(0);
}

/// w1 stacked to the left of w2.
inline Decomposition fuse_walls(const WallModel& w1, const WallModel& w2, int p, const WallConvention& c) {
  const auto* b1 = std::get_if<BoundaryPair>(&w1);
  const auto* b2 = std::get_if<BoundaryPair>(&w2);
  if (b1 && b2) {
    const int mult = b1->right == b2->left ? p : 1;
    return Decomposition{{{label_of(BoundaryPair{b1->left, b2->right}), mult}}};
  }
  if (b1) {
    const auto& map = std::get<LabelMap>(w2);
    const auto face = map.exchanges_sectors() ? flip(b1->right) : b1->right;
    return Decomposition{{{label_of(BoundaryPair{b1->left, face}), 1}}};
  }
  if (b2) {
    const auto& map = std::get<LabelMap>(w1);
    const auto face = map.exchanges_sectors() ? flip(b2->left) : b2->left;
    return Decomposition{{{label_of(BoundaryPair{face, b2->right}), 1}}};
  }
  const auto& m1 = std::get<LabelMap>(w1);
  const auto& m2 = std::get<LabelMap>(w2);
  return Decomposition{{{label_of(c.left_wall_first ? m1 * m2 : m2 * m1, c), 1}}};
}

inline Decomposition fuse_labels(int p, const BimoduleLabel& a, const BimoduleLabel& b, const WallConvention& c) {
  return fuse_walls(wall_of(p, a, c), wall_of(p, b, c), p, c);
}

/// Conventions consistent with F_q F_r = X_{r/q} and F_q X_l = F_{ql} at p,
/// in search order.
inline std::vector<WallConvention> consistent_conventions(int p) {
  require_prime(p);
  std::vector<WallConvention> out;
  for (bool swap_first : {true, false}) {
    for (bool left_first : {true, false}) {
      const WallConvention c{swap_first, left_first};
      bool ok = true;
      for (int q = 1; q < p && ok; ++q) {
        for (int r = 1; r < p && ok; ++r) {
          try {
            const auto ff = fuse_labels(p, BimoduleLabel::f(q), BimoduleLabel::f(r), c);
            const auto fx = fuse_labels(p, BimoduleLabel::f(q), BimoduleLabel::x(r), c);
            const auto want_ff = BimoduleLabel::x(mod(static_cast<long long>(inverse_mod(q, p)) * r, p));
            const auto want_fx = BimoduleLabel::f(mod(static_cast<long long>(q) * r, p));
            ok = ff == Decomposition{{{want_ff, 1}}} && fx == Decomposition{{{want_fx, 1}}};
          } catch (const Error&) {
            ok = false;
          }
        }
      }
      if (ok) out.push_back(c);
    }
  }
  return out;
}

inline constexpr int kCalibrationPrime = 5;

/// First consistent convention at p = 5; computed once and reused.
inline const WallConvention& calibrated_convention() {
  static const WallConvention frozen = [] {
    const auto found = consistent_conventions(kCalibrationPrime);
    if (found.empty()) throw Error(ErrorKind::oracle_error, "no wall convention reproduces the invertible products");
    return found.front();
  }();
  return frozen;
}

inline WallModel wall_of(int p, const BimoduleLabel& l) { return wall_of(p, l, calibrated_convention()); }
inline Decomposition fuse_walls(const WallModel& w1, const WallModel& w2, int p) {
  return fuse_walls(w1, w2, p, calibrated_convention());
}

inline RingTable oracle_table(int p) {
  require_prime(p);
  const auto& c = calibrated_convention();
  RingTable t = RingTable::zero(p);
  for (int i = 0; i < t.size(); ++i)
    for (int j = 0; j < t.size(); ++j) t.set_product(i, j, fuse_labels(p, t.basis[i], t.basis[j], c));
  return t;
}

// Pairings on anyon labels, as exponents of zeta_p.

/// ad - bc for e^a m^b, e^c m^d.
inline int antisymmetric_pairing(int p, std::pair<int, int> x, std::pair<int, int> y) {
  return mod(static_cast<long long>(x.first) * y.second - static_cast<long long>(x.second) * y.first, p);
}

/// ad + bc: the mutual braiding phase of e^a m^b around e^c m^d.
inline int braiding_pairing(int p, std::pair<int, int> x, std::pair<int, int> y) {
  return mod(static_cast<long long>(x.first) * y.second + static_cast<long long>(x.second) * y.first, p);
}

using Pairing = int (*)(int, std::pair<int, int>, std::pair<int, int>);

/// Label pairs (x, y) with <w(x), w(y)> != <x, y>.
inline std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> pairing_violations(const LabelMap& w, Pairing pairing) {
  const int p = w.p;
  std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> out;
  for (int a = 0; a < p; ++a)
    for (int b = 0; b < p; ++b)
      for (int c = 0; c < p; ++c)
        for (int d = 0; d < p; ++d) {
          const std::pair x{a, b}, y{c, d};
          if (pairing(p, w(a, b), w(c, d)) != pairing(p, x, y)) out.emplace_back(x, y);
        }
  return out;
}

/// X walls preserve the pure-e and pure-m sectors; F walls exchange them.
inline bool respects_sectors(const BimoduleLabel& l, const LabelMap& w) {
  const int p = w.p;
  const bool exchange = l.kind == BimoduleLabel::Kind::F;
  for (int a = 1; a < p; ++a) {
    const auto [ea, eb] = w(a, 0);
    const auto [ma, mb] = w(0, a);
    const bool e_to_e = eb == 0 && ea != 0, e_to_m = ea == 0 && eb != 0;
    const bool m_to_m = ma == 0 && mb != 0, m_to_e = mb == 0 && ma != 0;
    if (exchange ? !(e_to_m && m_to_e) : !(e_to_e && m_to_m)) return false;
  }
  return true;
}

}  // namespace bpring
