// Command line front end for the exact Lie algebra engine.
//
// Subcommands:
//   build <model> [--out FILE]   write structure constants as JSON
//   verify <model>               antisymmetry, grading and Jacobi checks
//   roots <model>                root multiset, shape census, Cartan matrix
//   table <name>                 render a sign table or the octonion table
//   tri <dim>                    triality algebra dimension for S_dim
//   fts <pair>                   extract triple systems and check the axioms
//   magic <m>x<n>                two-algebra construction with cross checks
//   octonions                    twisted products against the frozen table
//
// Exit codes: 0 when every check passes, 1 when a verification fails,
// 2 on a usage error. Bad model or table names are rejected during
// argument parsing, before any computation starts.

#include <CLI11.hpp>

#include <msq/comp_alg.hpp>
#include <msq/json_io.hpp>
#include <msq/lie.hpp>
#include <msq/magic.hpp>
#include <msq/roots.hpp>
#include <msq/sign_tables.hpp>
#include <msq/tensor_model.hpp>
#include <msq/triples.hpp>

#include <cstdio>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace {

using namespace msq;

const std::vector<std::string> kModels = {"d4", "c3", "f4", "d6",
                                          "e7", "e8", "a5", "e6"};
const std::vector<std::string> kTables = {"eps_d4", "eps_c3", "eps_f4",
                                          "eps_d6", "eps_e7", "eps_e8",
                                          "eps_a5", "eps_e6", "octonions"};
const std::vector<std::string> kPairs = {"e8/e7", "e7/d6", "e6/a5", "f4/c3"};

std::string srat(const Rational& r) {
  std::string s = r.get_num().get_str();
  if (r.get_den() != 1) s += "/" + r.get_den().get_str();
  return s;
}

std::string weight_str(const std::vector<Rational>& w) {
  std::string s = "(";
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) s += ", ";
    s += srat(w[i]);
  }
  return s + ")";
}

void print_witnesses(const std::vector<std::string>& witnesses) {
  for (const auto& w : witnesses) std::printf("  witness: %s\n", w.c_str());
  if (witnesses.size() == 32)
    std::printf("  (witness list capped at 32 entries)\n");
}

void print_check_line(const char* what, const CheckReport& r, int dim) {
  std::printf("%s: %zu violations / dim %d\n", what, r.witnesses.size(), dim);
  print_witnesses(r.witnesses);
}

void print_triple_report(const char* what, const TripleReport& r) {
  std::printf("%s: %s (a=%ld, b=%ld, c=%ld, d=%ld)\n", what,
              r.pass ? "pass" : "FAIL", r.checked_a, r.checked_b, r.checked_c,
              r.checked_d);
  if (r.sampled)
    std::printf("  highest-arity axiom sampled: %ld draws, seed %llu\n",
                r.samples, r.seed);
  print_witnesses(r.witnesses);
}

// Right-aligned grid with a header row and a header column, fixed column
// widths, so the rendering is stable across runs and easy to diff.
void print_grid(const std::vector<std::string>& row_names,
                const std::vector<std::string>& col_names,
                const std::vector<std::vector<std::string>>& cells) {
  size_t head = 0;
  for (const auto& n : row_names) head = std::max(head, n.size());
  std::vector<size_t> width(col_names.size(), 0);
  for (size_t j = 0; j < col_names.size(); ++j) {
    width[j] = col_names[j].size();
    for (size_t i = 0; i < row_names.size(); ++i)
      width[j] = std::max(width[j], cells[i][j].size());
  }
  std::printf("%*s", (int)head, "");
  for (size_t j = 0; j < col_names.size(); ++j)
    std::printf("  %*s", (int)width[j], col_names[j].c_str());
  std::printf("\n");
  for (size_t i = 0; i < row_names.size(); ++i) {
    std::printf("%*s", (int)head, row_names[i].c_str());
    for (size_t j = 0; j < col_names.size(); ++j)
      std::printf("  %*s", (int)width[j], cells[i][j].c_str());
    std::printf("\n");
  }
}

int run_build(const std::string& model, const std::string& out) {
  StructureConstants sc = assemble(build_model(family_from_name(model)));
  std::string text = to_json(sc);
  if (out.empty()) {
    std::fputs(text.c_str(), stdout);
  } else {
    write_text_file(out, text);
    std::printf("wrote %s (%s, dim %d)\n", out.c_str(), sc.name.c_str(),
                sc.dim);
  }
  return 0;
}

int run_verify(const std::string& model, long sample,
               unsigned long long seed, int threads) {
  TensorModel m = build_model(family_from_name(model));
  StructureConstants sc = assemble(m);
  CheckReport anti = model_antisymmetry_check(m);
  CheckReport grad = degree_check(sc);
  CheckReport jac = sample > 0 ? jacobi_sample(sc, sample, seed)
                               : jacobi_check(sc, threads);
  print_check_line("antisymmetry", anti, sc.dim);
  print_check_line("grading", grad, sc.dim);
  print_check_line("jacobi", jac, sc.dim);
  if (sample > 0)
    std::printf("jacobi coverage: %ld sampled triples, seed %llu\n",
                jac.checked, seed);
  else
    std::printf("jacobi coverage: %ld triples, exhaustive\n", jac.checked);
  bool ok = anti.pass && grad.pass && jac.pass;
  std::printf("verify %s: %s\n", model.c_str(), ok ? "pass" : "FAIL");
  return ok ? 0 : 1;
}

int run_roots(const std::string& model, int threads) {
  TensorModel m = build_model(family_from_name(model));
  StructureConstants sc = assemble(m);
  RootDatum rd = root_datum(m, sc);
  const WeightSpace* zero = rd.zero_space();
  std::printf("model: %s (dim %d, rank %d)\n", sc.name.c_str(), sc.dim,
              rd.rank());
  std::printf("roots: %ld (zero weight space dim %d)\n", rd.root_count(),
              zero ? (int)zero->members.size() : 0);
  RootCensus census = classify_roots(rd);
  std::printf("census: %ld long type (one coordinate +-2), "
              "%ld mixed type (all nonzero coordinates +-1), %ld other\n",
              census.sp_like, census.pattern_like, census.other);
  std::vector<std::vector<Rational>> vecs = rd.root_vectors();
  for (size_t i = 0; i < vecs.size();) {
    size_t j = i;
    while (j < vecs.size() && vecs[j] == vecs[i]) ++j;
    std::printf("  %s  x%zu\n", weight_str(vecs[i]).c_str(), j - i);
    i = j;
  }
  if (model == "e7" || model == "e8") {
    std::vector<std::vector<Rational>> simples = simple_roots(rd);
    Mat killing = killing_form(sc, threads);
    std::vector<std::vector<Rational>> cm =
        cartan_matrix(rd, killing, simples);
    std::printf("simple roots:\n");
    for (size_t a = 0; a < simples.size(); ++a)
      std::printf("  a%zu = %s\n", a + 1, weight_str(simples[a]).c_str());
    std::printf("cartan matrix:\n");
    for (const auto& row : cm) {
      std::printf(" ");
      for (const auto& c : row) std::printf(" %2s", srat(c).c_str());
      std::printf("\n");
    }
  }
  return 0;
}

int run_table(const std::string& name) {
  if (name == "octonions") {
    const std::array<std::string, 8>& units = octonion_unit_names();
    std::vector<std::string> names(units.begin(), units.end());
    std::vector<std::vector<std::string>> cells(8,
                                                std::vector<std::string>(8));
    for (unsigned x = 0; x < 8; ++x)
      for (unsigned y = 0; y < 8; ++y) {
        SignedUnit p = octonion_product(x, y);
        cells[x][y] = (p.sign < 0 ? "-" : "") + units[p.code];
      }
    print_grid(names, names, cells);
    return 0;
  }
  Family fam = family_from_name(name.substr(4));
  const std::vector<Subset>& subs = family_subsets(fam);
  std::vector<std::string> names;
  for (Subset s : subs) names.push_back(subset_str(s));
  std::vector<std::vector<std::string>> cells(
      subs.size(), std::vector<std::string>(subs.size()));
  for (size_t i = 0; i < subs.size(); ++i)
    for (size_t j = 0; j < subs.size(); ++j) {
      if (fam == Family::e8) {
        Rational v;
        cells[i][j] = e8_printed_value((int)i, (int)j, v) ? srat(v) : ".";
      } else {
        cells[i][j] = srat(eps(fam, subs[i], subs[j]));
      }
    }
  print_grid(names, names, cells);
  return 0;
}

int run_tri(int dim) {
  CompAlg s = symmetric_composition(dim);
  TrialityBasis t = triality_algebra(s);
  std::printf("tri(%s): dim %d\n", s.name.c_str(), t.dim());
  return 0;
}

int run_fts(const std::string& pair, int threads, const std::string& out) {
  SymplecticTripleSystem sts = sts_extract(pair);
  std::printf("pair %s: symplectic triple system dim %d\n", pair.c_str(),
              sts.dim);
  TripleReport rs = sts_axioms(sts, AxiomMode::Auto, threads);
  print_triple_report("symplectic axioms", rs);
  FreudenthalTripleSystem fts = fts_from_sts(sts);
  std::printf("freudenthal triple system dim %d\n", fts.dim);
  TripleReport rf = fts_axioms(fts, AxiomMode::Auto, threads);
  print_triple_report("freudenthal axioms", rf);
  if (!out.empty()) {
    write_text_file(out, to_json(fts));
    std::printf("wrote %s\n", out.c_str());
  }
  bool ok = rs.pass && rf.pass;
  std::printf("fts %s: %s\n", pair.c_str(), ok ? "pass" : "FAIL");
  return ok ? 0 : 1;
}

// Tensor model matching a magic pair, keyed by sorted input dimensions.
// The pairs built from dimensions 1 and 2 alone have no counterpart here.
const std::map<std::pair<int, int>, Family> kPairModel = {
    {{1, 4}, Family::c3}, {{1, 8}, Family::f4}, {{2, 4}, Family::a5},
    {{2, 8}, Family::e6}, {{4, 4}, Family::d6}, {{4, 8}, Family::e7},
    {{8, 8}, Family::e8}};

int run_magic(const std::string& spec, int threads) {
  size_t xpos = spec.find('x');
  int ds = std::stoi(spec.substr(0, xpos));
  int dsp = std::stoi(spec.substr(xpos + 1));
  MagicAlgebra g = build_magic(ds, dsp);
  std::printf("g(S%d, S%d): dim %d\n", ds, dsp, g.sc.dim);
  CheckReport grad = degree_check(g.sc);
  CheckReport jac = jacobi_check(g.sc, threads);
  print_check_line("grading", grad, g.sc.dim);
  print_check_line("jacobi", jac, g.sc.dim);
  bool ok = grad.pass && jac.pass;
  auto it = kPairModel.find({std::min(ds, dsp), std::max(ds, dsp)});
  if (it == kPairModel.end()) {
    std::printf("no tensor counterpart for this pair\n");
  } else {
    TensorModel tm = build_model(it->second);
    StructureConstants tsc = assemble(tm);
    CrossReport cr = cross_validate(g, tm, tsc);
    std::printf("cross validation against %s: %s\n",
                family_name(it->second).c_str(), cr.pass ? "pass" : "FAIL");
    std::printf("  dimension %d / %d, killing rank %d / %d\n", cr.dim_magic,
                cr.dim_tensor, cr.killing_rank_magic, cr.killing_rank_tensor);
    if (cr.root_comparison)
      std::printf("  roots %ld / %ld (%s)\n", cr.roots_magic, cr.roots_tensor,
                  cr.roots_match ? "profiles match" : "MISMATCH");
    for (const auto& n : cr.notes) std::printf("  note: %s\n", n.c_str());
    ok = ok && cr.pass;
  }
  std::printf("magic %s: %s\n", spec.c_str(), ok ? "pass" : "FAIL");
  return ok ? 0 : 1;
}

int run_octonions() {
  const std::array<std::array<SignedUnit, 8>, 8>& ref =
      octonion_reference_table();
  const std::array<std::string, 8>& units = octonion_unit_names();
  int mismatches = 0;
  for (unsigned x = 0; x < 8; ++x)
    for (unsigned y = 0; y < 8; ++y) {
      SignedUnit p = octonion_product(x, y);
      if (p.sign != ref[x][y].sign || p.code != ref[x][y].code) {
        ++mismatches;
        std::printf("  mismatch at %s * %s\n", units[x].c_str(),
                    units[y].c_str());
      }
    }
  std::printf("octonion products: %d mismatches / 64\n", mismatches);
  CheckReport fano = fano_check();
  std::printf("incidence bookkeeping: %s\n", fano.pass ? "pass" : "FAIL");
  print_witnesses(fano.witnesses);
  bool ok = mismatches == 0 && fano.pass;
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact constructions of the split exceptional Lie algebras"};
  app.require_subcommand(1);

  std::string build_name, build_out;
  CLI::App* build_cmd =
      app.add_subcommand("build", "Write a model's structure constants as JSON");
  build_cmd->add_option("model", build_name, "Model name")
      ->required()
      ->check(CLI::IsMember(kModels));
  build_cmd->add_option("--out", build_out, "Output file (stdout when absent)");

  std::string verify_name;
  long verify_sample = 0;
  unsigned long long verify_seed = 20260819ULL;
  int verify_threads = 0;
  CLI::App* verify_cmd = app.add_subcommand(
      "verify", "Check antisymmetry, grading and the Jacobi identity");
  verify_cmd->add_option("model", verify_name, "Model name")
      ->required()
      ->check(CLI::IsMember(kModels));
  CLI::Option* exhaustive_opt = verify_cmd->add_flag(
      "--exhaustive", "Scan every basis triple (the default)");
  CLI::Option* sample_opt =
      verify_cmd
          ->add_option("--sample", verify_sample,
                       "Check this many seeded random triples instead")
          ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--seed", verify_seed, "Seed for --sample")
      ->needs(sample_opt);
  sample_opt->excludes(exhaustive_opt);
  verify_cmd->add_option("--threads", verify_threads,
                         "Worker threads (0 = MSQ_THREADS or hardware)");

  std::string roots_name;
  int roots_threads = 0;
  CLI::App* roots_cmd = app.add_subcommand(
      "roots", "Print the root multiset and, for e7 and e8, the Cartan matrix");
  roots_cmd->add_option("model", roots_name, "Model name")
      ->required()
      ->check(CLI::IsMember(kModels));
  roots_cmd->add_option("--threads", roots_threads,
                        "Worker threads for the Killing form");

  std::string table_name;
  CLI::App* table_cmd =
      app.add_subcommand("table", "Render a sign table or the octonion table");
  table_cmd->add_option("name", table_name, "Table name")
      ->required()
      ->check(CLI::IsMember(kTables));

  int tri_dim = 0;
  CLI::App* tri_cmd = app.add_subcommand(
      "tri", "Print the triality algebra dimension of a composition algebra");
  tri_cmd->add_option("dim", tri_dim, "Algebra dimension")
      ->required()
      ->check(CLI::IsMember(std::set<int>{1, 2, 4, 8}));

  std::string fts_pair, fts_out;
  int fts_threads = 0;
  CLI::App* fts_cmd = app.add_subcommand(
      "fts", "Extract the triple systems of a pair and check the axioms");
  fts_cmd->add_option("pair", fts_pair, "Algebra pair")
      ->required()
      ->check(CLI::IsMember(kPairs));
  fts_cmd->add_option("--out", fts_out,
                      "Write the Freudenthal system as JSON to this file");
  fts_cmd->add_option("--threads", fts_threads, "Worker threads");

  std::string magic_spec;
  int magic_threads = 0;
  CLI::App* magic_cmd = app.add_subcommand(
      "magic", "Build the two-algebra construction and cross validate it");
  magic_cmd
      ->add_option("pair", magic_spec,
                   "Input dimensions, for example 8x8 or 1x4")
      ->required()
      ->check(CLI::IsMember(std::vector<std::string>{
          "1x1", "1x2", "1x4", "1x8", "2x1", "2x2", "2x4", "2x8", "4x1",
          "4x2", "4x4", "4x8", "8x1", "8x2", "8x4", "8x8"}));
  magic_cmd->add_option("--threads", magic_threads, "Worker threads");

  CLI::App* oct_cmd = app.add_subcommand(
      "octonions", "Check the twisted products against the frozen table");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (build_cmd->parsed()) return run_build(build_name, build_out);
    if (verify_cmd->parsed())
      return run_verify(verify_name, verify_sample, verify_seed,
                        verify_threads);
    if (roots_cmd->parsed()) return run_roots(roots_name, roots_threads);
    if (table_cmd->parsed()) return run_table(table_name);
    if (tri_cmd->parsed()) return run_tri(tri_dim);
    if (fts_cmd->parsed()) return run_fts(fts_pair, fts_threads, fts_out);
    if (magic_cmd->parsed()) return run_magic(magic_spec, magic_threads);
    if (oct_cmd->parsed()) return run_octonions();
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 2;
}
