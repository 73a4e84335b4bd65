#pragma once

// Decompositions into catalogue labels and dense ring structure constants.

#include <string>
#include <utility>
#include <vector>

#include "bpring/bimodule.hpp"

namespace bpring {

struct Decomposition {
  std::vector<std::pair<BimoduleLabel, int>> summands;  // canonical basis order

  int multiplicity(const BimoduleLabel& l) const {
    for (const auto& [label, mult] : summands)
      if (label == l) return mult;
    return 0;
  }

  /// e.g. "3*T", "F1", "2*T + L".
  std::string to_string() const {
    if (summands.empty()) return "0";
    std::string out;
    for (const auto& [label, mult] : summands) {
      if (!out.empty()) out += " + ";
      if (mult != 1) out += std::to_string(mult) + "*";
      out += label_print(label);
    }
    return out;
  }

  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

/// Number of simples of a catalogue bimodule with this label.
inline int simple_count(int p, const BimoduleLabel& l) {
  switch (l.kind) {
    case BimoduleLabel::Kind::T: return p * p;
    case BimoduleLabel::Kind::F: return 1;
    default: return p;
  }
}

/// Builds a Decomposition in canonical basis order from unordered counts.
inline Decomposition make_decomposition(int p, const std::vector<std::pair<BimoduleLabel, int>>& counts) {
  Decomposition d;
  for (const auto& l : basis_labels(p)) {
    int total = 0;
    for (const auto& [label, mult] : counts)
      if (label == l) total += mult;
    if (total > 0) d.summands.emplace_back(l, total);
  }
  return d;
}

struct RingTable {
  int p = 2;
  std::vector<BimoduleLabel> basis;
  std::vector<int> constants;  // N_{ij}^k at (i * n + j) * n + k

  static RingTable zero(int prime) {
    RingTable t;
    t.p = prime;
    t.basis = basis_labels(prime);
    t.constants.assign(t.basis.size() * t.basis.size() * t.basis.size(), 0);
    return t;
  }

  int size() const { return static_cast<int>(basis.size()); }

  int index_of(const BimoduleLabel& l) const {
    for (int i = 0; i < size(); ++i)
      if (basis[i] == l) return i;
    throw Error(ErrorKind::invalid_input, "label " + label_print(l) + " is not in the basis for p=" + std::to_string(p));
  }

  int& at(int i, int j, int k) { return constants[static_cast<std::size_t>((i * size() + j) * size() + k)]; }
  int at(int i, int j, int k) const { return constants[static_cast<std::size_t>((i * size() + j) * size() + k)]; }

  Decomposition product(int i, int j) const {
    Decomposition d;
    for (int k = 0; k < size(); ++k)
      if (at(i, j, k) != 0) d.summands.emplace_back(basis[k], at(i, j, k));
    return d;
  }

  Decomposition product(const BimoduleLabel& a, const BimoduleLabel& b) const { return product(index_of(a), index_of(b)); }

  void set_product(int i, int j, const Decomposition& d) {
    for (int k = 0; k < size(); ++k) at(i, j, k) = 0;
    for (const auto& [label, mult] : d.summands) at(i, j, index_of(label)) += mult;
  }

  friend bool operator==(const RingTable&, const RingTable&) = default;
};

}  // namespace bpring
