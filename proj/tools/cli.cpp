#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <numeric>
#include <optional>
#include <sstream>

#include "dseries/characters.hpp"
#include "dseries/dirac.hpp"
#include "dseries/fixtures.hpp"
#include "dseries/io.hpp"
#include "dseries/spectrum.hpp"
#include "dseries/unipotent.hpp"
#include "dseries/unitarity.hpp"
#include "dseries/weights.hpp"

#ifndef DSERIES_FIXTURE_DIR
#define DSERIES_FIXTURE_DIR "fixtures"
#endif

namespace dseries::cli {

namespace {

constexpr int kUnset = -1;

// Storage for every flag; each subcommand binds the subset it understands.
struct Options {
  std::string type;
  int rank = kUnset;
  std::string hw, a, b, eta;
  std::string partition, klass;
  std::string family;
  int n = kUnset, fa = kUnset, fb = kUnset;
  int bound = kUnset;
  std::string levi, core, xi;
  int core_rank = 0;
  std::string lambda, lambda_l, lambda_r;
  std::string dir = DSERIES_FIXTURE_DIR;
  bool json = false;
};

int parse_nonnegative(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  int value = -1;
  try {
    value = std::stoi(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  require(used == text.size() && value >= 0, what + " must be a non-negative integer, got '" + text + "'");
  return value;
}

std::optional<int> resolve_bound(int flag) {
  if (flag != kUnset) {
    require(flag >= 0, "--bound must be non-negative");
    return flag;
  }
  if (const char* env = std::getenv("DIRAC_SERIES_BOUND"); env && *env) {
    return parse_nonnegative(env, "DIRAC_SERIES_BOUND");
  }
  return std::nullopt;
}

RootDatum datum_of(const Options& o) {
  require(!o.type.empty(), "--type is required");
  require(o.rank >= 1, "--rank must be at least 1");
  return RootDatum(parse_family(o.type), o.rank);
}

Weight weight_of_rank(const std::string& text, const RootDatum& d, const std::string& flag) {
  Weight w = Weight::parse(text);
  require(w.size() == static_cast<std::size_t>(d.rank()),
          flag + " has " + std::to_string(w.size()) + " coordinates, rank is " + std::to_string(d.rank()));
  return w;
}

UnipotentFamily family_of(const Options& o) {
  require(!o.family.empty(), "--family is required");
  if (o.family.find(':') != std::string::npos) return UnipotentFamily::parse(o.family);
  const bool single = o.family == "C_even" || o.family == "C_odd" || o.family == "SpinB" || o.family == "SpinD+" ||
                      o.family == "SpinD-";
  if (single) {
    require(o.n != kUnset, "family " + o.family + " needs --n");
    return UnipotentFamily::parse(o.family + ":" + std::to_string(o.n));
  }
  require(o.fa != kUnset && o.fb != kUnset, "family " + o.family + " needs --a and --b");
  return UnipotentFamily::parse(o.family + ":" + std::to_string(o.fa) + "," + std::to_string(o.fb));
}

std::string rational_x4(std::int64_t x4) {
  const std::int64_t g = std::gcd(x4, std::int64_t{4});
  const std::int64_t num = x4 / g;
  const std::int64_t den = 4 / g;
  return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

std::string weight_set(const std::vector<Weight>& ws) {
  std::string out;
  for (std::size_t i = 0; i < ws.size(); ++i) out += (i ? " (" : "(") + ws[i].str() + ")";
  return out;
}

void print_json(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

void cmd_rho(const Options& o, std::ostream& out) {
  const RootDatum d = datum_of(o);
  if (o.json) return print_json(out, {{"type", family_name(d.family())}, {"rank", d.rank()}, {"rho", d.rho()}});
  out << d.rho().str() << "\n";
}

void cmd_dim(const Options& o, std::ostream& out) {
  const RootDatum d = datum_of(o);
  const Weight hw = weight_of_rank(o.hw, d, "--hw");
  require_highest_weight(d, hw);
  const auto dim = weyl_dimension(d, hw);
  if (o.json) return print_json(out, {{"hw", hw}, {"dim", dim}});
  out << dim << "\n";
}

void cmd_tensor(const Options& o, std::ostream& out) {
  const RootDatum d = datum_of(o);
  const Weight a = weight_of_rank(o.a, d, "--a");
  const Weight b = weight_of_rank(o.b, d, "--b");
  const auto terms = tensor_decompose(d, a, b);
  if (o.json) return print_json(out, terms);
  out << "hw\tmult\tdim\n";
  for (const auto& t : terms) out << t.highest.str() << "\t" << t.multiplicity << "\t" << t.dimension << "\n";
}

void cmd_prv(const Options& o, std::ostream& out) {
  const RootDatum d = datum_of(o);
  const Weight a = weight_of_rank(o.a, d, "--a");
  const Weight b = weight_of_rank(o.b, d, "--b");
  const Weight prv = prv_component(d, a, b);
  if (o.json) return print_json(out, {{"a", a}, {"b", b}, {"prv", prv}});
  out << prv.str() << "\n";
}

void cmd_spin_norm(const Options& o, std::ostream& out) {
  const RootDatum d = datum_of(o);
  const Weight eta = weight_of_rank(o.eta, d, "--eta");
  const auto x4 = spin_norm_sq_x4(d, eta);
  if (o.json) return print_json(out, {{"eta", eta}, {"spin_norm_sq", rational_x4(x4)}, {"spin_norm_sq_x4", x4}});
  out << rational_x4(x4) << "\n";
}

void cmd_catalog(const Options& o, std::ostream& out) {
  require(!o.type.empty(), "--type is required");
  const Family family = parse_family(o.type);
  const Partition rows = parse_partition(o.partition);
  if (!is_valid_partition(family, rows)) {
    if (o.json) return print_json(out, {{"type", family_name(family)}, {"partition", format_partition(rows)}, {"valid", false}});
    out << "partition [" << format_partition(rows) << "] is not a type " << family_name(family) << " orbit\n";
    return;
  }
  std::optional<VeryEvenClass> tag;
  if (!o.klass.empty()) {
    require(o.klass == "I" || o.klass == "II", "--class must be I or II");
    tag = o.klass == "I" ? VeryEvenClass::I : VeryEvenClass::II;
  }
  const NilpotentOrbit orbit(family, rows, tag);
  const Weight lambda = infinitesimal_character(orbit);
  const auto a_order = component_group_order(orbit);
  const auto stably = is_stably_trivial(orbit);
  const ParameterSet params = enumerate_parameters(orbit);

  if (o.json) {
    return print_json(out, {{"orbit", orbit.label()},
                            {"valid", true},
                            {"lambda", lambda},
                            {"component_group_order", a_order},
                            {"special", is_special(orbit)},
                            {"stably_trivial", stably ? Json(*stably) : Json(nullptr)},
                            {"triangular", is_triangular(orbit)},
                            {"orthogonal_multiplier", params.orthogonal_multiplier},
                            {"parameters", params.parameters}});
  }
  out << "orbit           " << orbit.label() << "\n"
      << "lambda          " << lambda.str() << "\n"
      << "|A(O)|          " << a_order << "\n"
      << "special         " << (is_special(orbit) ? "yes" : "no") << "\n"
      << "stably trivial  " << (stably ? (*stably ? "yes" : "no") : "-") << "\n"
      << "triangular      " << (is_triangular(orbit) ? "yes" : "no") << "\n"
      << "parameters      " << params.parameters.size();
  if (params.orthogonal_multiplier > 1) out << " (x" << params.orthogonal_multiplier << " for the orthogonal group)";
  out << "\n";
  for (const auto& p : params.parameters) {
    out << "  (" << p.left.str() << ") / (" << p.right.str() << ")";
    if (!p.eta.empty()) {
      out << "  eta";
      for (int e : p.eta) out << " " << (e > 0 ? "+" : "-");
    }
    out << "\n";
  }
}

void cmd_spectrum(const Options& o, std::ostream& out) {
  const UnipotentFamily fam = family_of(o);
  const int bound = resolve_bound(o.bound).value_or(4);
  const Weight tl = two_lambda(fam);
  if (!fam.has_spectrum()) {
    if (o.json) return print_json(out, {{"family", fam}, {"two_lambda", tl}, {"spectrum", nullptr}});
    out << fam.name() << "\n2lambda " << tl.str() << "\nK-spectrum not available for this family\n";
    return;
  }
  const auto ktypes = kspectrum(fam, bound);
  if (o.json) return print_json(out, {{"family", fam}, {"two_lambda", tl}, {"bound", bound}, {"spectrum", ktypes}});
  out << fam.name() << "\n2lambda " << tl.str() << "\nK-types with coordinates <= " << bound << ": "
      << ktypes.size() << "\n";
  for (const auto& k : ktypes) out << "  " << k.str() << "\n";
}

DiracOptions dirac_options(const Options& o) {
  DiracOptions opts;
  opts.bound = resolve_bound(o.bound);
  return opts;
}

// For induced data the scan statistics belong to the core.
void print_dirac(const DiracResult& r, std::ostream& out, bool induced = false) {
  out << r.label << "\n"
      << "2lambda         " << r.two_lambda.str() << "\n"
      << "H_D             " << (r.nonzero ? "nonzero" : "zero") << "\n";
  if (r.tau) out << "tau             " << r.tau->str() << "\n";
  if (r.multiplicity) out << "multiplicity    " << *r.multiplicity << "\n";
  const auto& c = r.checks;
  if (!induced) {
    out << "spin-LKTs       " << r.spin_lkts.size() << "\n";
    for (const auto& s : r.spin_lkts) {
      out << "  " << s.ktype.str() << "  delta " << s.delta.str() << "  spin norm^2 " << rational_x4(s.spin_norm_x4)
          << "\n";
    }
    out << "|2lambda|^2     " << rational_x4(c.target_norm_x4) << "\n"
        << "min spin norm^2 " << rational_x4(c.min_spin_norm_x4) << "\n"
        << "bound           " << c.search_bound << " (" << c.scanned << " K-types scanned)\n";
  } else if (c.scanned > 0) {
    out << "core bound      " << c.search_bound << " (" << c.scanned << " K-types scanned)\n";
  }
  out << "by count        " << c.by_count << "\n"
      << "by tensor       " << c.by_tensor << "\n";
  if (c.full_tensor_sum) out << (induced ? "core pairing    " : "full tensor sum ") << *c.full_tensor_sum << "\n";
}

void cmd_spin_lkt(const Options& o, std::ostream& out) {
  const UnipotentFamily fam = family_of(o);
  DiracOptions opts = dirac_options(o);
  opts.full_tensor_check = false;
  const DiracResult r = dirac_unipotent(fam, opts);
  if (o.json) {
    return print_json(out, {{"family", fam},
                            {"spin_lkts", r.spin_lkts},
                            {"min_spin_norm_x4", r.checks.min_spin_norm_x4},
                            {"target_norm_x4", r.checks.target_norm_x4},
                            {"bound", r.checks.search_bound}});
  }
  out << fam.name() << "\nmin spin norm^2 " << rational_x4(r.checks.min_spin_norm_x4) << " (|2lambda|^2 = "
      << rational_x4(r.checks.target_norm_x4) << ")\n";
  for (const auto& s : r.spin_lkts) out << "  " << s.ktype.str() << "  delta " << s.delta.str() << "\n";
}

void cmd_dirac(const Options& o, std::ostream& out) {
  const DiracResult r = dirac_unipotent(family_of(o), dirac_options(o));
  if (o.json) return print_json(out, r);
  print_dirac(r, out);
}

std::vector<int> parse_levi(const std::string& text) {
  std::vector<int> sizes;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    require(token.size() > 2 && token.rfind("gl", 0) == 0, "Levi factor '" + token + "' must look like gl2");
    sizes.push_back(parse_nonnegative(token.substr(2), "GL block size"));
    require(sizes.back() >= 1, "GL block size must be positive");
    token.clear();
  };
  for (char ch : text) {
    if (ch == ',' || ch == 'x' || ch == '*' || ch == ' ') {
      flush();
    } else {
      token += ch;
    }
  }
  flush();
  return sizes;
}

std::vector<GlBlock> blocks_with_xi(const std::vector<int>& sizes, const std::string& xi_text) {
  std::vector<std::int64_t> values;
  if (!xi_text.empty()) values = Weight::parse(xi_text).twice_vector();
  std::vector<GlBlock> blocks;
  const std::size_t coords = std::accumulate(sizes.begin(), sizes.end(), std::size_t{0});
  if (values.empty()) values.assign(sizes.size(), 0);
  if (values.size() == sizes.size()) {
    for (std::size_t i = 0; i < sizes.size(); ++i) blocks.push_back({sizes[i], values[i]});
    return blocks;
  }
  require(values.size() == coords,
          "--xi needs one value per GL block (" + std::to_string(sizes.size()) + ") or per coordinate (" +
              std::to_string(coords) + ")");
  std::size_t at = 0;
  for (int size : sizes) {
    for (int k = 1; k < size; ++k) {
      require(values[at + k] == values[at], "--xi must be constant on each GL block");
    }
    blocks.push_back({size, values[at]});
    at += static_cast<std::size_t>(size);
  }
  return blocks;
}

void cmd_dirac_induced(const Options& o, std::ostream& out) {
  InductionData data;
  const std::vector<int> sizes = parse_levi(o.levi);
  data.blocks = blocks_with_xi(sizes, o.xi);
  if (!o.core.empty() && o.core != "trivial") {
    data.core = UnipotentFamily::parse(o.core);
    data.group = data.core->datum().family();
    if (!o.type.empty()) {
      require(parse_family(o.type) == data.group, "--type disagrees with the core family");
    }
  } else {
    require(!o.type.empty(), "--type is required when the core is trivial");
    data.group = parse_family(o.type);
    require(o.core_rank >= 0, "--core-rank must be non-negative");
    data.core_rank = o.core_rank;
  }
  const DiracResult r = dirac_induced(data, dirac_options(o));
  if (o.json) return print_json(out, {{"induction", data}, {"result", r}});
  print_dirac(r, out, true);
}

void cmd_unitarity(const Options& o, std::ostream& out) {
  require(!o.type.empty(), "--type is required");
  const Family family = parse_family(o.type);
  Weight left;
  Weight right;
  if (!o.lambda.empty()) {
    require(o.lambda_l.empty() && o.lambda_r.empty(), "give either --lambda or --lambda-l/--lambda-r");
    left = Weight::parse(o.lambda);
    right = left;
  } else {
    require(!o.lambda_l.empty() && !o.lambda_r.empty(), "--lambda, or both --lambda-l and --lambda-r, is required");
    left = Weight::parse(o.lambda_l);
    right = Weight::parse(o.lambda_r);
  }
  const int rank = static_cast<int>(left.size());
  require(rank >= 1, "lambda must be non-empty");
  require(right.size() == left.size(), "--lambda-l and --lambda-r have different lengths");
  if (o.rank != kUnset) require(o.rank == rank, "--rank disagrees with the length of lambda");
  const RootDatum d(family, rank);
  const UnitarityVerdict v = full_unitarity(left, right, d);
  if (o.json) return print_json(out, v);
  out << (v.unitary ? "Unitary" : "NonUnitary") << "\n"
      << "case        " << v.case_tag << "\n";
  if (v.unitary) {
    out << "certificate " << v.certificate->describe() << "\n"
        << "orbit       " << v.orbit << "\n";
  } else {
    out << "witness     " << weight_set(v.witness) << "\n";
  }
}

int cmd_fixtures(const Options& o, std::ostream& out) {
  const auto fixtures = load_fixture_dir(o.dir);
  require(!fixtures.empty(), "no fixture files in " + o.dir);
  bool all_ok = true;
  Json report = Json::array();
  for (const auto& f : fixtures) {
    const FixtureReport r = replay_fixture(f);
    all_ok = all_ok && r.ok();
    if (o.json) {
      report.push_back({{"name", r.name},
                        {"ok", r.ok()},
                        {"dimensions_match", r.dimensions_match},
                        {"verdict_matches", r.verdict_matches},
                        {"witness_matches", r.witness_matches},
                        {"witness_indefinite", r.witness_indefinite},
                        {"verdict", r.verdict},
                        {"expected_witness", f.witness},
                        {"problems", r.problems}});
      continue;
    }
    const RootDatum d(f.family, f.rank);
    out << (r.ok() ? "PASS " : "FAIL ") << r.name << "  " << d.name() << "  (" << f.lambda_left.str() << ") / ("
        << f.lambda_right.str() << ")\n";
    for (const auto& row : f.rows) {
      out << "    " << row.sig << "\t" << row.highest.str() << "\t" << row.dimension << "\t"
          << (weyl_dimension(d, row.highest) == row.dimension ? "dim ok" : "dim MISMATCH") << "\n";
    }
    out << "    verdict " << (r.verdict.unitary ? "Unitary" : "NonUnitary");
    if (!r.verdict.unitary) out << ", witness " << weight_set(r.verdict.witness);
    out << "; expected " << weight_set(f.witness) << "\n";
    for (const auto& p : r.problems) out << "    ! " << p << "\n";
  }
  if (o.json) {
    print_json(out, {{"ok", all_ok}, {"fixtures", report}});
  } else {
    out << (all_ok ? "all fixtures pass" : "fixture mismatches found") << "\n";
  }
  return all_ok ? kExitOk : kExitInternal;
}

void add_type_rank(CLI::App* sub, Options& o, bool rank_required = true) {
  sub->add_option("--type", o.type, "Lie type: A, B, C or D")->required();
  auto* rank = sub->add_option("--rank", o.rank, "rank");
  if (rank_required) rank->required();
}

void add_family(CLI::App* sub, Options& o) {
  sub->add_option("--family", o.family, "B, C_even, C_odd, D_even, D_odd, A, SpinB, SpinD+, SpinD- or NAME:params")
      ->required();
  sub->add_option("--n", o.n, "parameter of C_even, C_odd and the Spin families");
  sub->add_option("--a", o.fa, "first parameter of B, D and A families");
  sub->add_option("--b", o.fb, "second parameter of B, D and A families");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Dirac series of complex classical groups: weights, characters, unipotent parameters, Dirac "
               "cohomology and unitarity"};
  app.name("dseries");
  app.require_subcommand(1, 1);
  app.add_flag("--json", o.json, "emit JSON");

  auto* rho = app.add_subcommand("rho", "half sum of positive roots");
  add_type_rank(rho, o);

  auto* dim = app.add_subcommand("dim", "Weyl dimension of a K-type");
  add_type_rank(dim, o);
  dim->add_option("--hw", o.hw, "highest weight")->required();

  auto* tensor = app.add_subcommand("tensor", "decompose V(a) (x) V(b)");
  add_type_rank(tensor, o);
  tensor->add_option("--a", o.a, "highest weight a")->required();
  tensor->add_option("--b", o.b, "highest weight b")->required();

  auto* prv = app.add_subcommand("prv", "PRV component {a + w0 b}");
  add_type_rank(prv, o);
  prv->add_option("--a", o.a, "highest weight a")->required();
  prv->add_option("--b", o.b, "highest weight b")->required();

  auto* spin_norm = app.add_subcommand("spin-norm", "spin norm |{eta - rho} + rho|^2");
  add_type_rank(spin_norm, o);
  spin_norm->add_option("--eta", o.eta, "K-type")->required();

  auto* catalog = app.add_subcommand("catalog", "unipotent parameters attached to a nilpotent orbit");
  catalog->add_option("--type", o.type, "Lie type: B, C or D")->required();
  catalog->add_option("--partition", o.partition, "Jordan type, e.g. 2,2,2")->required();
  catalog->add_option("--class", o.klass, "very even class I or II");

  auto* spectrum = app.add_subcommand("spectrum", "K-spectrum of a unipotent family");
  add_family(spectrum, o);
  spectrum->add_option("--bound", o.bound, "largest coordinate listed");

  auto* spin_lkt = app.add_subcommand("spin-lkt", "spin lowest K-types of a unipotent family");
  add_family(spin_lkt, o);
  spin_lkt->add_option("--bound", o.bound, "coordinate cutoff of the K-type scan");

  auto* dirac = app.add_subcommand("dirac", "Dirac cohomology of a unipotent family");
  add_family(dirac, o);
  dirac->add_option("--bound", o.bound, "coordinate cutoff of the K-type scan");

  auto* induced = app.add_subcommand("dirac-induced", "Dirac cohomology of a representation induced from a Levi");
  induced->add_option("--levi", o.levi, "GL blocks, e.g. gl2 or gl2,gl1")->required();
  induced->add_option("--core", o.core, "core family NAME:params, or trivial");
  induced->add_option("--type", o.type, "group type when the core is trivial");
  induced->add_option("--core-rank", o.core_rank, "rank of a trivial core");
  induced->add_option("--xi", o.xi, "character weights, one per block or one per coordinate");
  induced->add_option("--bound", o.bound, "coordinate cutoff of the K-type scan");

  auto* unitarity = app.add_subcommand("unitarity", "unitarity of J(lambda_L, lambda_R)");
  add_type_rank(unitarity, o, false);
  unitarity->add_option("--lambda", o.lambda, "spherical parameter");
  unitarity->add_option("--lambda-l", o.lambda_l, "left parameter");
  unitarity->add_option("--lambda-r", o.lambda_r, "right parameter");

  auto* fixtures = app.add_subcommand("fixtures", "replay the atlas signature tables");
  fixtures->add_option("--dir", o.dir, "fixture directory");

  // --json is accepted after the subcommand as well
  for (auto* sub : app.get_subcommands({})) sub->add_flag("--json", o.json, "emit JSON");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitPrecondition;
  }

  try {
    if (rho->parsed()) cmd_rho(o, out);
    if (dim->parsed()) cmd_dim(o, out);
    if (tensor->parsed()) cmd_tensor(o, out);
    if (prv->parsed()) cmd_prv(o, out);
    if (spin_norm->parsed()) cmd_spin_norm(o, out);
    if (catalog->parsed()) cmd_catalog(o, out);
    if (spectrum->parsed()) cmd_spectrum(o, out);
    if (spin_lkt->parsed()) cmd_spin_lkt(o, out);
    if (dirac->parsed()) cmd_dirac(o, out);
    if (induced->parsed()) cmd_dirac_induced(o, out);
    if (unitarity->parsed()) cmd_unitarity(o, out);
    if (fixtures->parsed()) return cmd_fixtures(o, out);
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitOk;
}

}  // namespace dseries::cli
