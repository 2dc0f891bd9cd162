#include "lazard/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <CLI11.hpp>

#include "lazard/corpus.hpp"
#include "lazard/io.hpp"

namespace lazard {

namespace {

struct Options {
  std::string algebra;
  Scalar p = 5;
  int k = 2;
  std::string out;
};

LieAlgebra load_algebra(const Options& o) {
  if (std::filesystem::is_regular_file(o.algebra)) return parse_algebra(read_file(o.algebra));
  return corpus(o.algebra, PrimeContext(o.p, o.k));
}

void emit(const Options& o, const Json& doc, std::ostream& out) {
  const std::string text = dump(doc);
  if (o.out.empty()) {
    out << text;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw Error(ErrorKind::Parse, "cannot write '" + o.out + "'");
  f << text;
}

int cmd_betti(const Options& o, const std::string& coeff, bool integral, std::ostream& out) {
  const LieAlgebra g = load_algebra(o);
  const LieAlgebra gbar = reduce_mod_p(g);
  Json doc;
  doc["schema"] = kSchemaVersion;
  doc["algebra"] = g.name();
  doc["p"] = g.context().p();
  doc["k"] = g.context().k();
  std::vector<Index> b;
  if (coeff == "trivial") {
    doc["coefficients"] = "trivial";
    b = betti(gbar);
  } else {
    const LieModule v = parse_module(read_file(coeff), gbar.context());
    doc["coefficients"] = coeff;
    b = betti(gbar, v);
  }
  doc["betti"] = to_json(b);
  Json torsion = Json::array();
  if (integral) {
    if (coeff != "trivial") throw Error(ErrorKind::InvalidArgument, "--integral needs trivial coefficients");
    const auto h = integral_cohomology(g);
    for (const auto& c : h) torsion.push_back(c.torsion);
    doc["integral"] = integral_to_json(h);
  }
  doc["torsion"] = torsion;
  doc["euler"] = euler_characteristic(b);
  emit(o, doc, out);
  return kExitPass;
}

int cmd_compare(const Options& o, std::ostream& out, std::ostream& err) {
  const LieAlgebra g = load_algebra(o);
  const ComparisonReport r = main_theorem_check(g);
  emit(o, comparison_to_json(r, g), out);
  err << "algebra " << r.algebra << "  p=" << g.context().p() << " k=" << g.context().k() << "\n";
  err << std::setw(4) << "n" << std::setw(8) << "group" << std::setw(8) << "lie" << std::setw(8) << "direct" << "\n";
  const std::size_t rows = std::max({r.group.size(), r.lie.size(), r.direct.size()});
  auto at = [](const std::vector<Index>& v, std::size_t i) { return i < v.size() ? std::to_string(v[i]) : "-"; };
  for (std::size_t n = 0; n < rows; ++n)
    err << std::setw(4) << n << std::setw(8) << at(r.group, n) << std::setw(8) << at(r.lie, n) << std::setw(8)
        << at(r.direct, n) << "\n";
  err << "verdict: " << (r.pass ? "pass" : "FAIL") << "\n";
  return r.pass ? kExitPass : kExitMismatch;
}

Json series_dims(const std::vector<Submodule>& s) {
  Json a = Json::array();
  for (const auto& m : s) a.push_back(m.size());
  return a;
}

Json vector_json(const Vector& v) {
  Json a = Json::array();
  for (Index i = 0; i < v.size(); ++i) a.push_back(v[i]);
  return a;
}

int cmd_series(const Options& o, const std::string& chain_path, std::ostream& out) {
  const LieAlgebra g = load_algebra(o);
  Json doc;
  doc["schema"] = kSchemaVersion;
  doc["algebra"] = g.name();
  doc["p"] = g.context().p();
  doc["k"] = g.context().k();
  doc["derived_series"] = series_dims(derived_series(g));
  doc["lower_central_series"] = series_dims(lower_central_series(g));
  const Solvability sv = is_solvable(g);
  doc["solvable"] = sv.solvable;
  if (sv.solvable) doc["derived_length"] = sv.derived_length;
  if (auto c = nilpotency_class(g))
    doc["nilpotency_class"] = *c;
  else
    doc["nilpotency_class"] = nullptr;

  int status = kExitPass;
  try {
    const SolvableChain chain = solvable_chain(g);
    Json links = Json::array();
    for (Index i = 0; i < chain.length(); ++i)
      links.push_back({{"ideal_rank", chain.ideal(i).rows()}, {"generator", vector_json(chain.links[i].generator)}});
    doc["solvable_chain"] = links;
  } catch (const Error& e) {
    doc["solvable_chain"] = nullptr;
    doc["chain_error"] = e.what();
    status = kExitInput;
  }

  Json pf;
  if (chain_path.empty()) {
    pf["status"] = "witness not constructed";
  } else {
    const FiltrationChain chain = parse_chain(read_file(chain_path), g);
    const PfReport r = verify_pf_chain(g, chain);
    pf["status"] = r.ok ? "pass" : "fail";
    if (!r.ok) {
      pf["condition"] = r.condition;
      pf["index"] = r.index;
      pf["witness"] = vector_json(r.witness);
      pf["message"] = r.message;
      if (status == kExitPass) status = kExitMismatch;
    }
  }
  doc["pf_chain"] = pf;
  emit(o, doc, out);
  return status;
}

int cmd_bch(const Options& o, int degree, std::ostream& out) {
  const BchTable t = bch_table(PrimeContext(o.p, o.k), degree);
  emit(o, bch_to_json(t), out);
  return kExitPass;
}

Json class_json(const Vector& v) {
  Json a = Json::array();
  for (Index i = 0; i < v.size(); ++i) a.push_back(v[i]);
  return a;
}

int cmd_cup(const Options& o, int m, int n, std::ostream& out) {
  const LieAlgebra g = load_algebra(o);
  const LieAlgebra gbar = reduce_mod_p(g);
  const int r = static_cast<int>(g.rank());
  if (m < 0 || n < 0 || m > r || n > r) throw Error(ErrorKind::InvalidArgument, "degree out of range");
  const CochainComplex c = ce_complex(gbar);
  const CohomologySpace hm = cocycle_representatives(c, m);
  const CohomologySpace hn = cocycle_representatives(c, n);
  Json doc;
  doc["schema"] = kSchemaVersion;
  doc["algebra"] = g.name();
  doc["p"] = g.context().p();
  doc["deg1"] = m;
  doc["deg2"] = n;
  doc["dim1"] = hm.dim();
  doc["dim2"] = hn.dim();
  Json products = Json::array();
  if (m + n <= r) {
    const CohomologySpace hmn = cocycle_representatives(c, m + n);
    doc["dim_product"] = hmn.dim();
    for (Index a = 0; a < hm.dim(); ++a)
      for (Index b = 0; b < hn.dim(); ++b) {
        const Vector x = cup_product(c, hm, Vector::Unit(hm.dim(), a), hn, Vector::Unit(hn.dim(), b), hmn);
        products.push_back({{"left", a}, {"right", b}, {"class", class_json(x)}});
      }
  } else {
    doc["dim_product"] = 0;
  }
  doc["products"] = products;
  emit(o, doc, out);
  return kExitPass;
}

int cmd_corpus(const Options& o, std::ostream& out) {
  Json doc;
  doc["schema"] = kSchemaVersion;
  Json list = Json::array();
  for (const auto& e : corpus_entries())
    list.push_back({{"name", e.name}, {"signature", e.signature}, {"description", e.description}});
  doc["corpus"] = list;
  emit(o, doc, out);
  return kExitPass;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cohomology of p-adic Lie algebras and the Lazard comparison"};
  app.name("lazard");
  app.require_subcommand(1);
  Options o;
  auto common = [&](CLI::App* sub, bool algebra) {
    if (algebra) sub->add_option("--algebra", o.algebra, "algebra file or corpus call such as ut(4)")->required();
    sub->add_option("--p", o.p, "prime for corpus algebras")->capture_default_str();
    sub->add_option("--k", o.k, "precision exponent for corpus algebras")->capture_default_str();
    sub->add_option("--out", o.out, "write JSON here instead of stdout");
  };

  std::string coeff = "trivial";
  bool integral = false;
  auto* betti_cmd = app.add_subcommand("betti", "Betti numbers of g/pg");
  common(betti_cmd, true);
  betti_cmd->add_option("--coeff", coeff, "trivial or a module file")->capture_default_str();
  betti_cmd->add_flag("--integral", integral, "also report H^*(g; Z/p^k)");

  auto* compare_cmd = app.add_subcommand("compare", "group, Lie and direct Betti numbers");
  common(compare_cmd, true);

  std::string chain_path;
  auto* series_cmd = app.add_subcommand("series", "derived and lower central series, solvable chain");
  common(series_cmd, true);
  series_cmd->add_option("--chain", chain_path, "chain file to check against conditions ii-v");

  int degree = 0;
  auto* bch_cmd = app.add_subcommand("bch", "BCH coefficients in the Hall basis");
  common(bch_cmd, false);
  bch_cmd->add_option("--degree", degree, "maximal degree, at most p-1")->required();

  int deg1 = 0, deg2 = 0;
  auto* cup_cmd = app.add_subcommand("cup", "cup products H^m x H^n -> H^{m+n}");
  common(cup_cmd, true);
  cup_cmd->add_option("--deg1", deg1)->required();
  cup_cmd->add_option("--deg2", deg2)->required();

  bool list = false;
  auto* corpus_cmd = app.add_subcommand("corpus", "named algebras");
  corpus_cmd->add_flag("--list", list, "list the corpus");
  corpus_cmd->add_option("--out", o.out, "write JSON here instead of stdout");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }

  try {
    if (betti_cmd->parsed()) return cmd_betti(o, coeff, integral, out);
    if (compare_cmd->parsed()) return cmd_compare(o, out, err);
    if (series_cmd->parsed()) return cmd_series(o, chain_path, out);
    if (bch_cmd->parsed()) return cmd_bch(o, degree, out);
    if (cup_cmd->parsed()) return cmd_cup(o, deg1, deg2, out);
    if (corpus_cmd->parsed()) return cmd_corpus(o, out);
  } catch (const Error& e) {
    err << "error [" << to_string(e.kind()) << "]: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}

}  // namespace lazard
