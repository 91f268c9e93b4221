#include <cmath>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "nsphere/closed_forms.hpp"
#include "nsphere/errors.hpp"
#include "nsphere/matrix_model.hpp"
#include "nsphere/spectral.hpp"
#include "nsphere/weingarten.hpp"
#include "report.hpp"

using namespace nsphere;
using nsphere::cli::Report;

namespace {

constexpr const char* kVersion = "0.1.0";

enum Exit { ok = 0, failure = 1, singular = 2, invalid = 3 };

struct Common {
  std::string category = "classical";
  std::string n = "3";
  std::string emit = "text";
  std::string singular = "reject";
  bool cap_override = false;
};

PairingCategory category_of(const std::string& text) {
  const auto c = parse_category(text);
  if (!c) throw InvalidInput("unknown category '" + text + "' (classical|half|free|even-crossings)");
  return *c;
}

std::vector<int> int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw InvalidInput("not an integer list: '" + text + "'");
    }
  }
  if (out.empty()) throw InvalidInput("empty integer list");
  return out;
}

int single_n(const std::string& text) {
  const auto v = int_list(text);
  if (v.size() != 1) throw InvalidInput("--n takes one value here");
  if (v[0] < 1) throw InvalidInput("dimension n must be positive");
  return v[0];
}

std::unique_ptr<WeingartenEngine> make_engine(const Common& c) {
  WeingartenEngine::Options o;
  if (c.singular == "pinv") o.singular = SingularPolicy::pseudo_inverse;
  o.caps.enforce = !c.cap_override;
  return std::make_unique<WeingartenEngine>(o);
}

Report integrate(const Common& c, const std::vector<std::string>& words) {
  const auto cat = category_of(c.category);
  const int n = single_n(c.n);
  const auto engine = make_engine(c);
  Report r;
  auto& s = r.section("integrals", {"category", "n", "word", "value"});
  for (const auto& text : words) {
    const Word w = parse_word(text);
    s.add({std::string(name(cat)), n, w.to_string(), engine->integrate_word(w, n, cat)});
  }
  return r;
}

Report pairings(const Common& c, std::size_t k, bool histogram, bool list) {
  const auto cat = category_of(c.category);
  const auto all = enumerate_pairings(k, cat);
  Report r;
  r.section("summary", {"category", "k", "total"}).add({std::string(name(cat)), k, all.size()});
  if (histogram) {
    std::map<std::size_t, std::size_t> h;
    for (const auto& p : all) ++h[crossing_number(p)];
    auto& s = r.section("histogram", {"crossings", "count"});
    for (auto [x, count] : h) s.add({x, count});
  }
  if (list) {
    auto& s = r.section("pairings", {"index", "partners", "crossings"});
    for (std::size_t i = 0; i < all.size(); ++i)
      s.add({i + 1, all[i].to_string(), crossing_number(all[i])});
  }
  return r;
}

void matrix_section(Report& r, const std::string& title, const RationalMatrix& m) {
  std::vector<std::string> cols{"row"};
  for (std::size_t j = 0; j < m.cols(); ++j) cols.push_back(std::to_string(j + 1));
  auto& s = r.section(title, cols);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::vector<cli::Cell> row{i + 1};
    for (std::size_t j = 0; j < m.cols(); ++j) row.emplace_back(m(i, j));
    s.add(std::move(row));
  }
}

Report weingarten(const Common& c, std::size_t k) {
  const auto cat = category_of(c.category);
  const int n = single_n(c.n);
  const auto engine = make_engine(c);
  const auto t = engine->table(k, n, cat);
  Report r;
  r.section("summary", {"category", "k", "n", "size", "determinant", "inverse"})
      .add({std::string(name(cat)), k, n, t->basis.size(), determinant(t->gram),
            t->pseudo ? "pseudo" : "exact"});
  auto& b = r.section("basis", {"index", "partners"});
  for (std::size_t i = 0; i < t->basis.size(); ++i) b.add({i + 1, t->basis[i].to_string()});
  matrix_section(r, "gram", t->gram);
  matrix_section(r, "weingarten", t->wg);
  return r;
}

Report audit(const Common& c, std::size_t k_max, bool category_given) {
  AuditOptions o;
  o.k_max = k_max;
  o.n_set = int_list(c.n);
  if (category_given) o.categories = {category_of(c.category)};
  const auto engine = make_engine(c);
  const auto rows = closed_form_audit(o, *engine);
  Report r;
  auto& s = r.section("rows", {"category", "n", "word", "formula", "oracle", "formula_value",
                               "verdict", "abs_gap"});
  std::map<std::pair<std::string, std::string>, std::array<std::size_t, 4>> tally;
  std::vector<std::pair<std::string, std::string>> order;
  for (const auto& row : rows) {
    const std::string cat(name(row.category));
    s.add({cat, row.n, row.word.to_string(), row.formula, row.oracle, row.formula_value,
           std::string(name(row.verdict)), row.abs_gap});
    const auto key = std::make_pair(cat, row.formula);
    if (!tally.contains(key)) order.push_back(key);
    ++tally[key][static_cast<std::size_t>(row.verdict)];
  }
  auto& sum = r.section("summary", {"category", "formula", "exact_match", "match", "mismatch",
                                    "undefined"});
  for (const auto& key : order) {
    const auto& t = tally[key];
    sum.add({key.first, key.second, t[0], t[1], t[2], t[3]});
  }
  return r;
}

Report laws(const Common& c, unsigned l) {
  const auto cat = category_of(c.category);
  const auto ns = int_list(c.n);
  const auto engine = make_engine(c);
  const auto rep = convergence_report(cat, l, ns, *engine);
  Report r;
  auto& s = r.section("convergence", {"n", "moment", "scaled", "limit", "relative_gap"});
  for (const auto& row : rep.rows)
    s.add({row.n, row.moment, row.scaled, row.limit, row.relative_gap});
  r.section("summary", {"category", "l", "limit", "shrinking"})
      .add({std::string(name(cat)), l, limit_moment(cat, l), rep.shrinking});
  if (cat == PairingCategory::classical || cat == PairingCategory::half) {
    // classical profiles count all occurrences, half counts one parity
    const unsigned scale = cat == PairingCategory::classical ? 2 : 1;
    auto& ind = r.section("independence", {"n", "l_a", "l_b", "mixed", "product", "relative_gap",
                                           "relative_gap_2n", "decays_like_1_over_n"});
    for (int n : ns) {
      const auto x = independence_check(cat, scale * l, scale * l, n);
      ind.add({n, x.l_a, x.l_b, x.mixed, x.product, x.relative_gap, x.relative_gap_doubled,
               x.decays_like_one_over_n});
    }
  }
  return r;
}

Report spectrum(const Common& c, std::size_t max_len, int coordinate, bool blocks) {
  const auto cat = category_of(c.category);
  const int n = single_n(c.n);
  const auto engine = make_engine(c);
  const auto f = filtration_dimensions(max_len, n, cat, *engine);
  Report r;
  auto& s = r.section("filtration", {"k", "rank", "e_dim", "harmonics", "dirac_eigenvalue",
                                     "dirac_mapped"});
  for (std::size_t k = 0; k <= max_len; ++k) {
    const double eig = std::sqrt(double(k) * (double(k) + n - 2));
    s.add({k, f.ranks[k], f.e_dims[k], spherical_harmonics_dimension(n, k), eig,
           dirac_map_f(eig, n)});
  }
  if (blocks) {
    const auto b = multiplication_block_profile(coordinate, max_len, n, cat, *engine);
    r.section("blocks", {"coordinate", "elements_checked", "violations"})
        .add({coordinate, b.block_elements_checked, b.block_violations});
  }
  return r;
}

Report model(double a_scale) {
  ModelParams p = ModelParams::defaults();
  for (auto& a : p.a) a *= a_scale / 0.1;
  const auto m = build_model(p);
  const auto rel = verify_spherical_relations(m.x);
  Report r;
  auto& s = r.section("matrices", {"name", "eigen_min", "eigen_max"});
  for (int i = 0; i < 3; ++i) {
    const auto e = m.y[static_cast<std::size_t>(i)].eigenvalues();
    s.add({"Y" + std::to_string(i + 1), e[0], e[1]});
  }
  for (int i = 0; i < 3; ++i) {
    const auto& e = rel.eigenvalues[static_cast<std::size_t>(i)];
    s.add({"X" + std::to_string(i + 1), e[0], e[1]});
  }
  r.section("relations", {"all_psd", "sum_of_squares_residual", "witness", "pass"})
      .add({rel.all_psd, rel.sum_of_squares_residual, noncommutativity_witness(m.y), rel.pass});
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact integration on the classical, half-liberated and free real spheres"};
  app.require_subcommand(1);
  Common common;

  auto add_common = [&](CLI::App* sub, bool with_category, bool with_n) {
    if (with_category)
      sub->add_option("--category", common.category, "classical|half|free|even-crossings");
    if (with_n) sub->add_option("--n", common.n, "dimension (comma list for audit and laws)");
    sub->add_option("--emit", common.emit, "text|json|csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    sub->add_option("--singular", common.singular, "reject|pinv at singular Gram matrices")
        ->check(CLI::IsMember({"reject", "pinv"}));
    sub->add_flag("--cap-override", common.cap_override, "lift the size caps on k");
  };

  std::vector<std::string> words;
  std::size_t k = 0;
  std::size_t k_max = 6;
  std::size_t max_len = 3;
  unsigned l = 2;
  int coordinate = 1;
  bool histogram = false;
  bool list = false;
  bool blocks = false;
  double a_scale = 0.1;

  auto* integrate_cmd = app.add_subcommand("integrate", "tr of monomials x_{i1}...x_{ik}");
  add_common(integrate_cmd, true, true);
  integrate_cmd->add_option("--word", words, "1-based letters, e.g. 1,2,2,1 (repeatable)")
      ->required()
      ->allow_extra_args(false);

  auto* pairings_cmd = app.add_subcommand("pairings", "enumerate a pairing category");
  add_common(pairings_cmd, true, false);
  pairings_cmd->add_option("--k", k, "number of points")->required();
  pairings_cmd->add_flag("--histogram", histogram, "crossing-number histogram");
  pairings_cmd->add_flag("--list", list, "list the pairings");

  auto* weingarten_cmd = app.add_subcommand("weingarten", "Gram and Weingarten matrices");
  add_common(weingarten_cmd, true, true);
  weingarten_cmd->add_option("--k", k, "number of points")->required();

  auto* audit_cmd = app.add_subcommand("audit", "closed forms against the Weingarten integrals");
  add_common(audit_cmd, true, true);
  audit_cmd->add_option("--kmax", k_max, "longest word");
  bool category_given = false;

  auto* laws_cmd = app.add_subcommand("laws", "n -> infinity moments and independence");
  add_common(laws_cmd, true, true);
  laws_cmd->add_option("--l", l, "moment of order 2l");

  auto* spectrum_cmd = app.add_subcommand("spectrum", "filtration dimensions and Dirac map");
  add_common(spectrum_cmd, true, true);
  spectrum_cmd->add_option("--max-len", max_len, "longest word");
  spectrum_cmd->add_option("--i", coordinate, "coordinate for --blocks");
  spectrum_cmd->add_flag("--blocks", blocks, "check x_i is tridiagonal on the E_k");

  auto* model_cmd = app.add_subcommand("model", "2x2 matrix model of the n = 3 relations");
  add_common(model_cmd, false, false);
  model_cmd->add_option("--a-scale", a_scale, "off-diagonal size |a_i|");

  auto* version_cmd = app.add_subcommand("version", "print the version");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return invalid;
  }

  if (version_cmd->parsed()) {
    std::cout << "nsphere " << kVersion << '\n';
    return ok;
  }
  // audit and laws take lists; default n differs
  if (audit_cmd->parsed()) {
    category_given = audit_cmd->count("--category") > 0;
    if (audit_cmd->count("--n") == 0) common.n = "2,3,4,5";
  }
  if (laws_cmd->parsed() && laws_cmd->count("--n") == 0) common.n = "10,20,40,80";

  const auto emit = common.emit == "json"  ? cli::Emit::json
                    : common.emit == "csv" ? cli::Emit::csv
                                           : cli::Emit::text;
  try {
    Report r;
    if (integrate_cmd->parsed()) r = integrate(common, words);
    else if (pairings_cmd->parsed()) r = pairings(common, k, histogram, list);
    else if (weingarten_cmd->parsed()) r = weingarten(common, k);
    else if (audit_cmd->parsed()) r = audit(common, k_max, category_given);
    else if (laws_cmd->parsed()) r = laws(common, l);
    else if (spectrum_cmd->parsed()) r = spectrum(common, max_len, coordinate, blocks);
    else r = model(a_scale);
    r.write(std::cout, emit);
    return ok;
  } catch (const SingularGram& e) {
    std::cerr << "error: SingularGram: " << e.what() << "\n(rerun with --singular pinv to use the exact pseudo-inverse)\n";
    return singular;
  } catch (const InvalidInput& e) {
    std::cerr << "error: InvalidInput: " << e.what() << '\n';
    return invalid;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return failure;
  }
}
