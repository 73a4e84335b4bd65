// Acceptance checks AC1..AC8.  With no argument every criterion runs; with
// an argument such as "ac3" only that one.  One PASS/FAIL line per criterion.

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "bpring/bpring.hpp"

using namespace bpring;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Notes {
 public:
  void fail(const std::string& what) {
    pass_ = false;
    if (count_++ < 5) out_ << (out_.tellp() > 0 ? "; " : "") << what;
  }
  void note(const std::string& what) { info_ << (info_.tellp() > 0 ? "; " : "") << what; }
  Outcome outcome() const {
    std::string d = info_.str();
    if (!pass_) d = out_.str() + (count_ > 5 ? " (+" + std::to_string(count_ - 5) + " more)" : "") + (d.empty() ? "" : " | " + d);
    return {pass_, d};
  }

 private:
  bool pass_ = true;
  int count_ = 0;
  std::ostringstream out_, info_;
};

const std::vector<int> kPrimes{2, 3, 5, 7};

const RingTable& engine_table(int p) {
  static std::map<int, RingTable> cache;
  auto it = cache.find(p);
  if (it == cache.end()) it = cache.emplace(p, build_table(p)).first;
  return it->second;
}

std::string ps(int p) { return "p=" + std::to_string(p); }

Outcome check_golden_table() {
  Notes n;
  for (int p : kPrimes) {
    const auto start = std::chrono::steady_clock::now();
    const auto& t = engine_table(p);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const auto diffs = diff_tables(closed_form_table(p), t);
    for (const auto& d : diffs) n.fail(ps(p) + " " + d);
    if (p == 7) {
      std::ostringstream s;
      s.precision(2);
      s << std::fixed << "p=7 built in " << secs << " s";
      n.note(s.str());
      if (secs >= 60.0) n.fail("p=7 took " + std::to_string(secs) + " s");
    }
  }
  n.note("(2p+2)^2 entries compared for p in {2,3,5,7}");
  return n.outcome();
}

Outcome check_catalogue_shape() {
  Notes n;
  for (int p : kPrimes) {
    const auto cat = catalogue(p);
    if (static_cast<int>(cat.size()) != 2 * p + 2) {
      n.fail(ps(p) + " has " + std::to_string(cat.size()) + " entries");
      continue;
    }
    for (const auto& b : cat) {
      const auto& l = *b.label;
      int want_simples = 0;
      Subgroup want = Subgroup::trivial(p);
      switch (l.kind) {
        case BimoduleLabel::Kind::T: want_simples = p * p; break;
        case BimoduleLabel::Kind::L: want_simples = p; want = Subgroup::line(PairElt(p, 1, 0)); break;
        case BimoduleLabel::Kind::R: want_simples = p; want = Subgroup::line(PairElt(p, 0, 1)); break;
        case BimoduleLabel::Kind::X: want_simples = p; want = Subgroup::line(PairElt(p, -l.index, 1)); break;
        case BimoduleLabel::Kind::F: want_simples = 1; want = Subgroup::full(p); break;
      }
      if (b.num_simples() != want_simples) n.fail(ps(p) + " " + b.name() + " has " + std::to_string(b.num_simples()) + " simples");
      if (!(b.subgroup == want)) n.fail(ps(p) + " " + b.name() + " subgroup " + b.subgroup.to_string());
      for (int m = 0; m < b.num_simples(); ++m)
        if (!(stabilizer(b, m) == want)) n.fail(ps(p) + " " + b.name() + " stabilizer of simple " + std::to_string(m));
      for (const auto& v : validate(b)) n.fail(ps(p) + " " + b.name() + ": " + v);
    }
  }
  return n.outcome();
}

Outcome check_worked_examples() {
  Notes n;
  for (int p : {2, 3, 5}) {
    // T x T
    {
      RelativeProduct prod(catalogue_entry(p, BimoduleLabel::t()), catalogue_entry(p, BimoduleLabel::t()));
      for (const auto& o : prod.ladder().objects())
        if (prod.ladder().end_algebra(o).dimension() != 1) n.fail(ps(p) + " Lad(T,T) has a nontrivial End");
      if (prod.envelope().size() != p * p * p) n.fail(ps(p) + " Lad(T,T) has " + std::to_string(prod.envelope().size()) + " simples");
      if (!(prod.decompose() == Decomposition{{{BimoduleLabel::t(), p}}})) n.fail(ps(p) + " T*T = " + prod.decompose().to_string());
    }
    // R x F0
    {
      RelativeProduct prod(catalogue_entry(p, BimoduleLabel::r()), catalogue_entry(p, BimoduleLabel::f(0)));
      const auto& cat = prod.ladder();
      for (const auto& o : cat.objects()) {
        const auto alg = cat.end_algebra(o);
        if (alg.dimension() != p || !alg.commutative() || !alg.untwisted()) n.fail(ps(p) + " End in Lad(R,F0) is not C[Z_p]");
        const auto idems = primitive_idempotents(cat, o);
        LadderMorphism total = cat.zero(o, o);
        for (int j = 0; j < static_cast<int>(idems.size()); ++j) {
          total = total + idems[j];
          for (int k = 0; k < static_cast<int>(idems.size()); ++k) {
            const auto prod_jk = cat.compose(idems[j], idems[k]);
            if (j == k ? !(prod_jk == idems[k]) : !prod_jk.is_zero()) n.fail(ps(p) + " I_j I_k != delta I_k");
          }
        }
        if (!(total == cat.identity(o))) n.fail(ps(p) + " sum of I_k is not the identity");
      }
      if (!(prod.decompose() == Decomposition{{{BimoduleLabel::r(), p}}})) n.fail(ps(p) + " R*F0 = " + prod.decompose().to_string());
    }
    // X_k x X_l and F_q x F_r
    for (int a = 1; a < p; ++a) {
      for (int b = 1; b < p; ++b) {
        const auto xx = decompose(catalogue_entry(p, BimoduleLabel::x(a)), catalogue_entry(p, BimoduleLabel::x(b)));
        if (!(xx == Decomposition{{{BimoduleLabel::x(mod(a * b, p)), 1}}})) n.fail(ps(p) + " X*X = " + xx.to_string());
        const auto ff = decompose(catalogue_entry(p, BimoduleLabel::f(a)), catalogue_entry(p, BimoduleLabel::f(b)));
        if (!(ff == Decomposition{{{BimoduleLabel::x(mod(inverse_mod(a, p) * b, p)), 1}}})) n.fail(ps(p) + " F*F = " + ff.to_string());
      }
    }
    // F_q x X_l
    for (int q = 1; q < p; ++q) {
      for (int l = 1; l < p; ++l) {
        RelativeProduct prod(catalogue_entry(p, BimoduleLabel::f(q)), catalogue_entry(p, BimoduleLabel::x(l)));
        if (prod.envelope().size() != 1) n.fail(ps(p) + " Lad(F,X) has " + std::to_string(prod.envelope().size()) + " simples");
        const int k = prod.mixed_associator(1, 1, 0);
        if (k != mod(q * l, p)) n.fail(ps(p) + " F" + std::to_string(q) + "*X" + std::to_string(l) + " exponent " + std::to_string(k));
        if (!(prod.decompose() == Decomposition{{{BimoduleLabel::f(mod(q * l, p)), 1}}})) n.fail(ps(p) + " F*X = " + prod.decompose().to_string());
      }
    }
  }
  n.note("five worked products replayed for p in {2,3,5}");
  return n.outcome();
}

Outcome check_ring_axioms() {
  Notes n;
  for (int p : kPrimes) {
    const auto report = check_axioms(engine_table(p), true);
    for (const auto& v : report.violations) n.fail(ps(p) + " " + v);
  }
  n.note("unit and all (2p+2)^3 triples for p in {2,3,5,7}");
  return n.outcome();
}

Outcome check_units() {
  Notes n;
  for (int p : kPrimes) {
    const auto u = units_group(engine_table(p));
    if (u.order() != 2 * (p - 1)) n.fail(ps(p) + " has " + std::to_string(u.order()) + " units");
    if (!u.cyclic_x) n.fail(ps(p) + " X units are not cyclic of order p-1");
    if (!u.f1_involution) n.fail(ps(p) + " F1^2 != X1");
    if (!u.conjugation) n.fail(ps(p) + " F1 X_k F1 != X_{1/k}");
  }
  return n.outcome();
}

Outcome check_oracle() {
  Notes n;
  n.note("calibrated convention: " + calibrated_convention().to_string());
  for (int p : kPrimes) {
    try {
      for (const auto& d : diff_tables(engine_table(p), oracle_table(p))) n.fail(ps(p) + " " + d);
    } catch (const Error& e) {
      n.fail(ps(p) + " " + e.what());
    }
  }
  return n.outcome();
}

Outcome check_properties() {
  Notes n;
  // cyclotomic field axioms and root relations
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
  for (int p : kPrimes) {
    auto random = [&] {
      std::vector<Rational> c;
      for (int i = 0; i < p; ++i) c.emplace_back(num(rng), den(rng));
      return CyclotomicScalar::from_coeffs(p, c);
    };
    auto power = CyclotomicScalar::one(p), total = CyclotomicScalar(p);
    for (int i = 0; i < p; ++i) {
      total += power;
      power = power * root_of_unity(p, 1);
    }
    if (!power.is_one() || !total.is_zero()) n.fail(ps(p) + " zeta relations");
    for (int trial = 0; trial < 20; ++trial) {
      const auto a = random(), b = random(), c = random();
      if (!((a * b) * c == a * (b * c)) || !(a * (b + c) == a * b + a * c) || !(a * b == b * a)) n.fail(ps(p) + " ring axiom");
      if (!a.is_zero() && !(a * a.inv()).is_one()) n.fail(ps(p) + " inverse");
    }
  }
  // 2-cocycle identity
  for (int p : {2, 3}) {
    std::vector<PairElt> all;
    for (int a = 0; a < p; ++a)
      for (int b = 0; b < p; ++b) all.emplace_back(p, a, b);
    for (int q = 0; q < p; ++q)
      for (const auto& x : all)
        for (const auto& y : all)
          for (const auto& z : all) {
            const CocycleClass c{p, q};
            if (!(cocycle_phase(c, x, y) * cocycle_phase(c, x + y, z) == cocycle_phase(c, y, z) * cocycle_phase(c, x, y + z)))
              n.fail(ps(p) + " cocycle q=" + std::to_string(q));
          }
  }
  // ladder composition associativity at p=2
  {
    const int p = 2;
    for (const auto& a : basis_labels(p))
      for (const auto& b : basis_labels(p)) {
        const LadderCategory cat(catalogue_entry(p, a), catalogue_entry(p, b));
        for (const auto& o : cat.objects())
          for (int r1 = 0; r1 < p; ++r1)
            for (int r2 = 0; r2 < p; ++r2)
              for (int r3 = 0; r3 < p; ++r3) {
                const auto f = cat.basic(o, r1);
                const auto g = cat.basic(f.target, r2);
                const auto h = cat.basic(g.target, r3);
                if (!(cat.compose(cat.compose(f, g), h) == cat.compose(f, cat.compose(g, h))))
                  n.fail("composition not associative in Lad(" + label_print(a) + "," + label_print(b) + ")");
              }
      }
  }
  // stabilizer base point and counting identity
  for (int p : {2, 3}) {
    for (const auto& a : basis_labels(p))
      for (const auto& b : basis_labels(p)) {
        RelativeProduct prod(catalogue_entry(p, a), catalogue_entry(p, b));
        int counted = 0;
        for (const auto& [label, mult] : prod.decompose().summands) counted += mult * simple_count(p, label);
        if (counted != prod.envelope().size()) n.fail(ps(p) + " counting for " + label_print(a) + "*" + label_print(b));
        for (const auto& o : prod.orbits())
          for (int s : o.members)
            if (!(prod.stabilizer(s) == o.stabilizer)) n.fail(ps(p) + " stabilizer varies in " + label_print(a) + "*" + label_print(b));
      }
  }
  n.note("field axioms, cocycles, ladder associativity, stabilizers and counting");
  return n.outcome();
}

Outcome check_braiding_pairing() {
  Notes n;
  for (int p : {2, 3, 5}) {
    for (const auto& l : basis_labels(p)) {
      if (!l.invertible()) continue;
      const auto w = std::get<LabelMap>(wall_of(p, l));
      const auto bad = pairing_violations(w, antisymmetric_pairing);
      if (!bad.empty()) {
        const auto& [x, y] = bad.front();
        n.fail(ps(p) + " " + label_print(l) + " changes zeta^(ad-bc) on " + std::to_string(bad.size()) + " of " +
               std::to_string(p * p * p * p) + " pairs, e.g. (" + std::to_string(x.first) + "," + std::to_string(x.second) + "),(" +
               std::to_string(y.first) + "," + std::to_string(y.second) + ")");
      }
    }
  }
  return n.outcome();
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"AC1 golden table", check_golden_table},     {"AC2 catalogue shape", check_catalogue_shape},
      {"AC3 worked examples", check_worked_examples}, {"AC4 ring axioms", check_ring_axioms},
      {"AC5 units group", check_units},             {"AC6 oracle equivalence", check_oracle},
      {"AC7 property suites", check_properties},    {"AC8 braiding pairing", check_braiding_pairing},
  };
  std::string only;
  if (argc > 1) {
    only = argv[1];
    for (auto& c : only) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    if (only.rfind("AC", 0) != 0) only = "AC" + only;
  }
  int failed = 0, ran = 0;
  for (const auto& [name, run] : criteria) {
    if (!only.empty() && name.substr(0, name.find(' ')) != only) continue;
    ++ran;
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::cout << (o.pass ? "PASS " : "FAIL ") << name << (o.detail.empty() ? "" : ": " + o.detail) << std::endl;
    failed += o.pass ? 0 : 1;
  }
  if (ran == 0) {
    std::cerr << "unknown criterion '" << argv[1] << "'\n";
    return 2;
  }
  return failed == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
