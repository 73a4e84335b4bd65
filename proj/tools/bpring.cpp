// bpring: catalogue inspection, single products, full tables and verification.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "bpring/bpring.hpp"

namespace {

using namespace bpring;
using ojson = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitInvalid = 2;

int mixed_exponent(const BimoduleData& b) {
  return b.label && b.label->kind == BimoduleLabel::Kind::F ? b.label->index : 0;
}

ojson catalogue_json(int p) {
  ojson out = ojson::array();
  for (const auto& b : catalogue(p)) {
    ojson e;
    e["label"] = b.name();
    e["subgroup"] = b.subgroup.to_string();
    e["objects"] = b.num_simples();
    e["simples"] = b.simples;
    e["left_action"] = b.left_act;
    e["right_action"] = b.right_act;
    e["associator_exponent"] = mixed_exponent(b);
    e["invertible"] = b.label->invertible();
    out.push_back(std::move(e));
  }
  return out;
}

std::string action_row(const BimoduleData& b, const std::vector<int>& row) {
  std::string s;
  for (int v : row) s += (s.empty() ? "" : " ") + b.simples[static_cast<std::size_t>(v)];
  return s;
}

void print_catalogue_md(int p, std::ostream& os) {
  os << "| label | subgroup | objects | g > 0 | 0 < h | exponent |\n|---|---|---|---|---|---|\n";
  for (const auto& b : catalogue(p)) {
    std::vector<int> left, right;
    for (int g = 0; g < p; ++g) left.push_back(b.left(g, 0));
    for (int h = 0; h < p; ++h) right.push_back(b.right(0, h));
    os << "| " << b.name() << " | " << b.subgroup.to_string() << " | " << b.num_simples() << " | " << action_row(b, left)
       << " | " << action_row(b, right) << " | " << mixed_exponent(b) << " |\n";
  }
}

struct FuseDetail {
  int ladder_objects = 0;
  std::map<int, int> end_dimensions;  // dimension -> number of objects
  int kar_simples = 0;
  std::vector<Orbit> orbits;
};

FuseDetail collect_detail(const RelativeProduct& prod) {
  FuseDetail d;
  const auto& cat = prod.ladder();
  d.ladder_objects = cat.object_count();
  for (const auto& obj : cat.objects()) ++d.end_dimensions[cat.end_algebra(obj).dimension()];
  d.kar_simples = prod.envelope().size();
  d.orbits = prod.orbits();
  return d;
}

int run_catalog(int p, const std::string& format) {
  require_prime(p);
  if (format == "json") {
    std::cout << catalogue_json(p).dump(2) << '\n';
  } else if (format == "md") {
    print_catalogue_md(p, std::cout);
  } else {
    throw Error(ErrorKind::invalid_input, "unknown format '" + format + "' (expected json or md)");
  }
  return kExitOk;
}

int run_fuse(int p, const std::string& left, const std::string& right, bool detail, const std::string& format) {
  require_prime(p);
  if (format != "json" && format != "md") {
    throw Error(ErrorKind::invalid_input, "unknown format '" + format + "' (expected json or md)");
  }
  const auto a = label_parse(left, p);
  const auto b = label_parse(right, p);
  RelativeProduct prod(catalogue_entry(p, a), catalogue_entry(p, b));
  const auto result = prod.decompose();

  if (format == "json") {
    ojson j;
    j["p"] = p;
    j["left"] = label_print(a);
    j["right"] = label_print(b);
    j["product"] = ojson::array();
    for (const auto& [label, mult] : result.summands) j["product"].push_back({{"label", label_print(label)}, {"mult", mult}});
    if (detail) {
      const auto d = collect_detail(prod);
      j["ladder_objects"] = d.ladder_objects;
      j["end_dimensions"] = ojson::object();
      for (const auto& [dim, count] : d.end_dimensions) j["end_dimensions"][std::to_string(dim)] = count;
      j["kar_simples"] = d.kar_simples;
      j["orbits"] = ojson::array();
      for (const auto& o : d.orbits) {
        ojson oj{{"label", label_print(o.label)}, {"size", o.members.size()}, {"stabilizer", o.stabilizer.to_string()}};
        oj["associator_exponent"] = o.exponent ? ojson(*o.exponent) : ojson(nullptr);
        j["orbits"].push_back(std::move(oj));
      }
    }
    std::cout << j.dump(2) << '\n';
    return kExitOk;
  }

  std::cout << result.to_string() << '\n';
  if (!detail) return kExitOk;
  const auto d = collect_detail(prod);
  const auto& cat = prod.ladder();
  std::cout << "\nladder objects: " << d.ladder_objects << " (" << cat.left_module().num_simples() << " x "
            << cat.right_module().num_simples() << ")\n";
  std::cout << "End dimensions:";
  for (const auto& [dim, count] : d.end_dimensions) std::cout << ' ' << count << " of dim " << dim;
  std::cout << "\nKaroubi simples: " << d.kar_simples << '\n';
  for (const auto& s : prod.simples()) {
    std::cout << "  " << cat.object_name(s.representative.base) << " I_" << s.character << '\n';
  }
  std::cout << "orbits: " << d.orbits.size() << '\n';
  for (const auto& o : d.orbits) {
    std::cout << "  " << label_print(o.label) << ": " << o.members.size() << " simples, stabilizer " << o.stabilizer.to_string();
    if (o.exponent) std::cout << ", associator exponent " << *o.exponent;
    std::cout << '\n';
  }
  return kExitOk;
}

int run_table(int p, const std::string& format, const std::string& out) {
  require_prime(p);
  const auto fmt = parse_format(format);
  const auto text = serialize(build_table(p), fmt);
  if (out.empty()) {
    std::cout << text;
    return kExitOk;
  }
  std::ofstream file(out, std::ios::binary);
  if (!file || !(file << text) || !file.flush()) {
    std::cerr << "error: cannot write " << out << '\n';
    return kExitFailed;
  }
  return kExitOk;
}

int report(const std::string& name, const std::vector<std::string>& problems) {
  if (problems.empty()) {
    std::cout << name << ": ok\n";
    return 0;
  }
  std::cout << name << ": " << problems.size() << " mismatch(es)\n";
  for (const auto& line : problems) std::cout << "  " << line << '\n';
  return 1;
}

int run_verify(int p, bool oracle, bool triples, bool inject_fault) {
  require_prime(p);
  RingTable engine = build_table(p);
  if (inject_fault) {
    const int n = engine.size();
    const int x1 = engine.index_of(BimoduleLabel::x(1));
    engine.at(n - 1, n - 1, x1) += 1;
  }
  int failures = 0;
  failures += report("closed form", diff_tables(closed_form_table(p), engine));
  failures += report("multiplicities", multiplicity_anomalies(engine));
  const auto axioms = check_axioms(engine, triples);
  std::vector<std::string> unit_problems, assoc_problems;
  for (const auto& v : axioms.violations) (v.rfind("X1", 0) == 0 ? unit_problems : assoc_problems).push_back(v);
  failures += report("unit", unit_problems);
  if (triples) failures += report("associativity", assoc_problems);
  if (oracle) failures += report("wall oracle", diff_tables(oracle_table(p), engine));
  return failures == 0 ? kExitOk : kExitFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Brauer-Picard ring of Vec(Z_p) via ladder categories"};
  app.require_subcommand(1);

  int p = 0;
  std::string format = "md", left, right, out;
  bool detail = false, oracle = false, triples = false, inject_fault = false;

  auto* catalog = app.add_subcommand("catalog", "list the indecomposable bimodules");
  catalog->add_option("--p", p, "prime")->required();
  catalog->add_option("--format", format, "json or md");

  auto* fuse = app.add_subcommand("fuse", "relative tensor product of two bimodules");
  fuse->add_option("--p", p, "prime")->required();
  fuse->add_option("--left", left, "left label")->required();
  fuse->add_option("--right", right, "right label")->required();
  fuse->add_flag("--detail", detail, "show ladder, idempotent and orbit data");
  fuse->add_option("--format", format, "json or md");

  auto* table = app.add_subcommand("table", "full multiplication table");
  table->add_option("--p", p, "prime")->required();
  table->add_option("--format", format, "json, md or csv");
  table->add_option("--out", out, "output file");

  auto* verify = app.add_subcommand("verify", "check the table against the closed form");
  verify->add_option("--p", p, "prime")->required();
  verify->add_flag("--oracle", oracle, "compare with the domain-wall oracle");
  verify->add_flag("--triples", triples, "exhaustive associativity");
  verify->add_flag("--inject-fault", inject_fault)->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  try {
    if (catalog->parsed()) return run_catalog(p, format);
    if (fuse->parsed()) return run_fuse(p, left, right, detail, format);
    if (table->parsed()) return run_table(p, format, out);
    return run_verify(p, oracle, triples, inject_fault);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    const bool bad_input = e.kind() == ErrorKind::invalid_input || e.kind() == ErrorKind::parse_error;
    return bad_input ? kExitInvalid : kExitFailed;
  }
}
