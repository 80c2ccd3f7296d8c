#include "koszulkit_cli/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "koszulkit/bar_complex.hpp"
#include "koszulkit/builder.hpp"
#include "koszulkit/generators.hpp"
#include "koszulkit/poset_io.hpp"
#include "koszulkit/quadratic_dual.hpp"

namespace koszulkit::cli {

namespace {

struct Options {
  std::string input;
  std::string gen;
  std::string field = "q";
  bool full = false;
  bool pretty = false;
  bool witness = false;
  bool koszul_complex = false;
  bool debug_matrices = false;
  std::string target;
  std::vector<std::string> gens;
  std::string spec;
};

std::string slurp(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
  } else {
    std::ifstream file(path);
    if (!file) throw Error("cannot open '" + path + "'");
    buf << file.rdbuf();
  }
  return buf.str();
}

Poset load_poset(const Options& o, std::istream& in) {
  if (!o.gen.empty()) return generate(o.gen);
  if (o.input.empty()) throw Error("no input poset (give a path, '-' or --gen)");
  return poset_from_json(slurp(o.input, in));
}

// Column-aligned rendering of a TSV block.
std::string align(const std::string& tsv) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream is(tsv);
  std::string line;
  std::vector<std::size_t> width;
  while (std::getline(is, line)) {
    std::vector<std::string> cells;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, '\t')) cells.push_back(cell);
    if (width.size() < cells.size()) width.resize(cells.size(), 0);
    for (std::size_t i = 0; i < cells.size(); ++i) width[i] = std::max(width[i], cells[i].size());
    rows.push_back(std::move(cells));
  }
  std::ostringstream os;
  for (const auto& r : rows) {
    for (std::size_t i = 0; i < r.size(); ++i) {
      os << r[i];
      if (i + 1 < r.size()) os << std::string(width[i] - r[i].size() + 2, ' ');
    }
    os << '\n';
  }
  return os.str();
}

void emit(std::ostream& out, const std::string& tsv, bool pretty) { out << (pretty ? align(tsv) : tsv); }

void dump_differentials(const Poset& p, std::ostream& err) {
  const int top = p.max_interval_length();
  for (int m = 2; m <= top; ++m) {
    for (int n = 2; n <= m; ++n) {
      err << "# d_" << n << " m=" << m << '\n' << build_differential(p, n, m).to_triplets();
    }
  }
}

// Residues above p/2 read better as negatives.
Vector signed_residues(Vector v, const FieldSpec& field) {
  if (field.is_rational()) return v;
  for (auto& x : v)
    if (x > field.prime / 2) x -= field.prime;
  return v;
}

int cmd_validate(const Options& o, std::istream& in, std::ostream& out) {
  Poset p = load_poset(o, in);
  p.require_graded();
  out << "elements\t" << p.size() << '\n'
      << "covers\t" << p.covers().size() << '\n'
      << "graded\ttrue\n"
      << "max_length\t" << p.max_interval_length() << '\n';
  return kOk;
}

int cmd_tor(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
  Poset p = load_poset(o, in);
  FieldSpec field = FieldSpec::parse(o.field);
  TorTable table = tor_table(p, field);
  if (o.debug_matrices) dump_differentials(p, err);
  emit(out, to_tsv(table, o.full), o.pretty);
  return kOk;
}

int cmd_koszul(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
  Poset p = load_poset(o, in);
  FieldSpec field = FieldSpec::parse(o.field);
  TorTable table = tor_table(p, field);
  if (o.debug_matrices) dump_differentials(p, err);
  out << "koszul: " << (table.koszul ? "true" : "false") << " (field " << field.name() << ")\n";
  for (const auto& w : table.witnesses) {
    out << "witness: n=" << w.n << " m=" << w.m << " dim=" << w.dim << '\n';
    if (!o.witness) continue;
    ChainFamily basis = enumerate_chains(p, w.n, w.m);
    for (const auto& z : witness_cycles(p, w.n, w.m, field))
      out << "  cycle: " << format_chain_combination(p, basis, signed_residues(z, field)) << '\n';
  }
  return table.koszul ? kOk : kNotKoszul;
}

int cmd_shriek(const Options& o, std::istream& in, std::ostream& out) {
  Poset p = load_poset(o, in);
  FieldSpec field = FieldSpec::parse(o.field);
  std::string tsv = to_tsv(phi_dimension_check(p, field));
  if (o.koszul_complex) {
    KoszulExactness ex = koszul_complex_exact(p, field);
    tsv += "koszul_complex_exact\t";
    tsv += ex.exact ? "true" : "false";
    tsv += '\n';
    if (ex.failure) {
      tsv += "homology\tposition=" + std::to_string(ex.failure->first) +
             "\tq=" + std::to_string(ex.failure->second) + "\tdim=" + std::to_string(ex.failure_dim) +
             '\n';
    }
  }
  emit(out, tsv, o.pretty);
  return kOk;
}

int cmd_module_tor(const Options& o, std::istream& in, std::ostream& out) {
  Poset p = load_poset(o, in);
  FieldSpec field = FieldSpec::parse(o.field);
  Index t = p.index_of(o.target);
  std::vector<Index> gens = resolve(p, o.gens);
  std::ostringstream os;
  os << "n\tm\tdim\n";
  for (int m = 0; m <= p.max_interval_length(); ++m) {
    for (int n = 0; n <= m; ++n) {
      std::size_t dim = module_tor(p, t, gens, n, m, field);
      if (o.full || dim > 0) os << n << '\t' << m << '\t' << dim << '\n';
    }
  }
  emit(out, os.str(), o.pretty);
  return kOk;
}

int cmd_build(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
  if (o.input.empty()) throw Error("no build script given");
  BuildScript script = script_from_json(slurp(o.input, in));
  try {
    BuildResult r = run_script(script);
    for (const auto& line : r.log) err << line << '\n';
    out << poset_to_json(r.poset) << '\n';
  } catch (const ScriptError& e) {
    for (const auto& line : e.log()) err << line << '\n';
    throw;
  }
  return kOk;
}

int cmd_gen(const Options& o, std::ostream& out) {
  out << poset_to_json(generate(o.spec)) << '\n';
  return kOk;
}

int cmd_dot(const Options& o, std::istream& in, std::ostream& out) {
  out << poset_to_dot(load_poset(o, in));
  return kOk;
}

void add_input(CLI::App* sub, Options& o) {
  sub->add_option("input", o.input, "poset JSON file, '-' for stdin");
  sub->add_option("-g,--gen", o.gen, "use a generated poset, e.g. tile or vdiamond:3");
}

void add_field(CLI::App* sub, Options& o) {
  sub->add_option("--field", o.field, "q or fp:<prime>")->default_val("q");
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  Options o;
  CLI::App app{"Koszulity of incidence rings of finite graded posets", "koszulkit"};
  app.require_subcommand(1, 1);

  auto* validate = app.add_subcommand("validate", "check the poset is well formed and graded");
  add_input(validate, o);

  auto* tor = app.add_subcommand("tor", "bigraded Tor table as TSV");
  add_input(tor, o);
  add_field(tor, o);
  tor->add_flag("--full", o.full, "also print zero cells");
  tor->add_flag("--pretty", o.pretty, "aligned columns");
  tor->add_flag("--debug-matrices", o.debug_matrices, "dump bar differentials to stderr");

  auto* koszul = app.add_subcommand("koszul", "Koszul verdict; exit 1 when not Koszul");
  add_input(koszul, o);
  add_field(koszul, o);
  koszul->add_flag("--witness", o.witness, "print representative cycles");
  koszul->add_flag("--debug-matrices", o.debug_matrices, "dump bar differentials to stderr");

  auto* shriek = app.add_subcommand("shriek", "quadratic dual dimensions against the Tor diagonal");
  add_input(shriek, o);
  add_field(shriek, o);
  shriek->add_flag("--koszul-complex", o.koszul_complex, "also test exactness of the Koszul complex");
  shriek->add_flag("--pretty", o.pretty, "aligned columns");

  auto* mtor = app.add_subcommand("module-tor", "Tor of the frontier module below a maximal target");
  add_input(mtor, o);
  add_field(mtor, o);
  mtor->add_option("--target", o.target, "maximal element t")->required();
  mtor->add_option("--gens", o.gens, "comma-separated generators below t")
      ->required()
      ->delimiter(',');
  mtor->add_flag("--full", o.full, "also print zero cells");
  mtor->add_flag("--pretty", o.pretty, "aligned columns");

  auto* build = app.add_subcommand("build", "run a build script; poset to stdout, log to stderr");
  build->add_option("script", o.input, "build script JSON, '-' for stdin")->required();

  auto* gen = app.add_subcommand("gen", "write a generated poset as JSON");
  gen->add_option("spec", o.spec, "tile, hexagon, vdiamond:n, hdiamond:i,j, chain:n, antichain:n, "
                                  "tiling:x1,y1,..., random:seed,size,density")
      ->required();

  auto* dot = app.add_subcommand("dot", "Hasse diagram in Graphviz DOT");
  add_input(dot, o);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kFailure;
  }

  try {
    if (*validate) return cmd_validate(o, in, out);
    if (*tor) return cmd_tor(o, in, out, err);
    if (*koszul) return cmd_koszul(o, in, out, err);
    if (*shriek) return cmd_shriek(o, in, out);
    if (*mtor) return cmd_module_tor(o, in, out);
    if (*build) return cmd_build(o, in, out, err);
    if (*gen) return cmd_gen(o, out);
    if (*dot) return cmd_dot(o, in, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kFailure;
}

}  // namespace koszulkit::cli
