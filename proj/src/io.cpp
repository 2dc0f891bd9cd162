#include "lazard/io.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <tuple>

namespace lazard {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw Error(ErrorKind::Parse, where + ": " + what);
}

Json parse_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail("document", e.what());
  }
}

void check_schema(const Json& doc) {
  if (!doc.is_object()) fail("document", "expected a JSON object");
  if (doc.contains("schema") && doc["schema"] != kSchemaVersion)
    fail("schema", "unsupported version " + doc["schema"].dump());
}

long long integer(const Json& doc, const char* key, const std::string& where) {
  if (!doc.contains(key)) fail(where, std::string("missing field '") + key + "'");
  const Json& v = doc[key];
  if (!v.is_number_integer()) fail(where, std::string("field '") + key + "' must be an integer");
  return v.get<long long>();
}

long long integer(const Json& v, const std::string& where) {
  if (!v.is_number_integer()) fail(where, "expected an integer");
  return v.get<long long>();
}

Matrix matrix_of(const Json& rows, Index r, Index c, const PrimeContext& ctx, const std::string& where) {
  if (!rows.is_array() || static_cast<Index>(rows.size()) != r) fail(where, "expected " + std::to_string(r) + " rows");
  Matrix m(r, c);
  for (Index i = 0; i < r; ++i) {
    const Json& row = rows[i];
    const std::string w = where + "[" + std::to_string(i) + "]";
    if (!row.is_array() || static_cast<Index>(row.size()) != c)
      fail(w, "expected " + std::to_string(c) + " entries");
    for (Index j = 0; j < c; ++j) m(i, j) = ctx.reduce(integer(row[j], w));
  }
  return m;
}

}  // namespace

LieAlgebra parse_algebra(const Json& doc) {
  check_schema(doc);
  const long long p = integer(doc, "p", "header");
  const long long k = doc.contains("k") ? integer(doc, "k", "header") : 1;
  const long long rank = integer(doc, "rank", "header");
  if (rank < 0 || rank > 24) fail("header", "rank must lie in [0, 24]");
  if (k < 1 || k > 64) fail("header", "k out of range");
  const PrimeContext ctx(p, static_cast<int>(k));
  std::string name = doc.contains("name") && doc["name"].is_string() ? doc["name"].get<std::string>() : "";

  std::vector<LieAlgebra::Bracket> brackets;
  std::map<std::tuple<long long, long long, long long>, std::size_t> seen;
  if (doc.contains("brackets")) {
    const Json& list = doc["brackets"];
    if (!list.is_array()) fail("brackets", "expected an array");
    for (std::size_t n = 0; n < list.size(); ++n) {
      const Json& rec = list[n];
      const std::string where = "brackets[" + std::to_string(n) + "]";
      long long i, j, m, c;
      if (rec.is_array()) {
        if (rec.size() != 4) fail(where, "expected [i, j, m, c]");
        i = integer(rec[0], where);
        j = integer(rec[1], where);
        m = integer(rec[2], where);
        c = integer(rec[3], where);
      } else if (rec.is_object()) {
        i = integer(rec, "i", where);
        j = integer(rec, "j", where);
        m = integer(rec, "m", where);
        c = integer(rec, "c", where);
      } else {
        fail(where, "expected an object or an array");
      }
      if (i >= j) fail(where, "needs i < j");
      if (i < 1 || j > rank || m < 1 || m > rank) fail(where, "index out of range 1.." + std::to_string(rank));
      if (c < 0 || c >= ctx.modulus()) fail(where, "coefficient outside [0, p^k)");
      auto [it, fresh] = seen.emplace(std::make_tuple(i, j, m), n);
      if (!fresh) fail(where, "duplicate of brackets[" + std::to_string(it->second) + "]");
      brackets.push_back({i - 1, j - 1, m - 1, c});
    }
  }
  LieAlgebra g = LieAlgebra::from_brackets(ctx, rank, brackets, name);
  if (auto bad = validate(g))
    throw Error(ErrorKind::InvalidArgument, "Jacobi identity fails on basis triple (" + std::to_string(bad->i + 1) +
                                                ", " + std::to_string(bad->j + 1) + ", " +
                                                std::to_string(bad->m + 1) + ")");
  return g;
}

LieAlgebra parse_algebra(const std::string& text) { return parse_algebra(parse_text(text)); }

Json algebra_to_json(const LieAlgebra& g) {
  Json doc;
  doc["schema"] = kSchemaVersion;
  doc["name"] = g.name();
  doc["p"] = g.context().p();
  doc["k"] = g.context().k();
  doc["rank"] = g.rank();
  Json list = Json::array();
  for (const auto& b : g.brackets())
    list.push_back({{"i", b.i + 1}, {"j", b.j + 1}, {"m", b.m + 1}, {"c", b.c}});
  doc["brackets"] = list;
  return doc;
}

std::string emit_algebra(const LieAlgebra& g) { return dump(algebra_to_json(g)); }

LieModule parse_module(const std::string& text, const PrimeContext& field) {
  const Json doc = parse_text(text);
  check_schema(doc);
  const long long p = integer(doc, "p", "header");
  if (p != field.p()) fail("header", "module prime differs from the algebra prime");
  const long long dim = integer(doc, "dim", "header");
  if (dim < 1) fail("header", "dim must be positive");
  if (!doc.contains("action") || !doc["action"].is_array()) fail("action", "expected an array of matrices");
  std::vector<Matrix> action;
  const Json& list = doc["action"];
  for (std::size_t n = 0; n < list.size(); ++n)
    action.push_back(matrix_of(list[n], dim, dim, field, "action[" + std::to_string(n) + "]"));
  LieModule v(field, action);
  return v;
}

FiltrationChain parse_chain(const std::string& text, const LieAlgebra& g) {
  const Json doc = parse_text(text);
  check_schema(doc);
  if (!doc.contains("ideals") || !doc["ideals"].is_array()) fail("ideals", "expected an array");
  FiltrationChain chain;
  const Json& list = doc["ideals"];
  for (std::size_t n = 0; n < list.size(); ++n) {
    const std::string where = "ideals[" + std::to_string(n) + "]";
    if (!list[n].is_array()) fail(where, "expected a list of vectors");
    const Matrix rows = matrix_of(list[n], static_cast<Index>(list[n].size()), g.rank(), g.context(), where);
    chain.ideals.push_back(Submodule::span(g.context(), g.rank(), rows));
  }
  return chain;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Parse, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json to_json(const std::vector<Index>& v) {
  Json a = Json::array();
  for (Index x : v) a.push_back(x);
  return a;
}

Json bch_to_json(const BchTable& table) {
  Json doc;
  doc["schema"] = kSchemaVersion;
  doc["p"] = table.context().p();
  doc["k"] = table.context().k();
  doc["degree"] = table.max_degree();
  Json terms = Json::array();
  for (const auto& t : table.terms())
    terms.push_back({{"hall_word", t.word},
                     {"degree", t.degree},
                     {"numerator", numerator(t.coefficient).convert_to<long long>()},
                     {"denominator", denominator(t.coefficient).convert_to<long long>()},
                     {"residue_mod_pk", t.residue}});
  doc["terms"] = terms;
  return doc;
}

Json comparison_to_json(const ComparisonReport& r, const LieAlgebra& g) {
  Json doc;
  doc["schema"] = kSchemaVersion;
  doc["algebra"] = r.algebra;
  doc["p"] = g.context().p();
  doc["k"] = g.context().k();
  doc["group"] = to_json(r.group);
  doc["lie"] = to_json(r.lie);
  doc["direct"] = to_json(r.direct);
  doc["recursion_consistent"] = r.recursion_consistent;
  doc["operators_compatible"] = r.operators_compatible;
  doc["verdict"] = r.pass ? "pass" : "fail";
  return doc;
}

Json integral_to_json(const std::vector<IntegralCohomology>& h) {
  Json a = Json::array();
  for (const auto& c : h)
    a.push_back({{"degree", c.degree}, {"free_rank", c.free_rank}, {"torsion", c.torsion}});
  return a;
}

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

}  // namespace lazard
