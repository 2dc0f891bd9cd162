#include "lazard/corpus.hpp"

#include <regex>
#include <sstream>

namespace lazard {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorKind::InvalidArgument, what);
}

std::string label(const std::string& name, int n) { return name + "(" + std::to_string(n) + ")"; }

}  // namespace

LieAlgebra abelian(const PrimeContext& ctx, int n) {
  require(n >= 1 && n <= 24, "abelian(n) needs 1 <= n <= 24");
  return LieAlgebra::from_brackets(ctx, n, {}, label("abelian", n));
}

LieAlgebra heisenberg_gen(const PrimeContext& ctx, int n) {
  require(n >= 1 && 2 * n + 1 <= 24, "heisenberg_gen(n) needs 1 <= n <= 11");
  std::vector<LieAlgebra::Bracket> b;
  for (int i = 0; i < n; ++i) b.push_back({i, n + i, 2 * n, 1});
  return LieAlgebra::from_brackets(ctx, 2 * n + 1, b, label("heisenberg_gen", n));
}

LieAlgebra filiform(const PrimeContext& ctx, int n) {
  require(n >= 2 && n <= 24, "filiform(n) needs 2 <= n <= 24");
  std::vector<LieAlgebra::Bracket> b;
  for (int i = 1; i + 1 < n; ++i) b.push_back({0, i, i + 1, 1});
  return LieAlgebra::from_brackets(ctx, n, b, label("filiform", n));
}

LieAlgebra solvable_px(const PrimeContext& ctx) {
  require(ctx.k() >= 2, "solvable_px needs k >= 2");
  return LieAlgebra::from_brackets(ctx, 2, {{0, 1, 1, ctx.p()}}, "solvable_px");
}

LieAlgebra ut(const PrimeContext& ctx, int n) {
  require(n >= 2 && n - 1 < ctx.p(), "ut(n) needs 2 <= n and n - 1 < p");
  std::vector<std::pair<int, int>> pos;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pos.emplace_back(i, j);
  require(pos.size() <= 24, "ut(n) rank exceeds 24");
  auto index_of = [&](int i, int j) {
    for (std::size_t a = 0; a < pos.size(); ++a)
      if (pos[a] == std::make_pair(i, j)) return static_cast<Index>(a);
    return Index{-1};
  };
  std::vector<LieAlgebra::Bracket> b;
  for (std::size_t a = 0; a < pos.size(); ++a)
    for (std::size_t c = a + 1; c < pos.size(); ++c) {
      auto [i, j] = pos[a];
      auto [k, l] = pos[c];
      // [E_ij, E_kl] = d_jk E_il - d_li E_kj
      if (j == k) b.push_back({static_cast<Index>(a), static_cast<Index>(c), index_of(i, l), 1});
      if (l == i) b.push_back({static_cast<Index>(a), static_cast<Index>(c), index_of(k, j), ctx.neg(1)});
    }
  return LieAlgebra::from_brackets(ctx, static_cast<Index>(pos.size()), b, label("ut", n));
}

const std::vector<CorpusEntry>& corpus_entries() {
  static const std::vector<CorpusEntry> entries{
      {"abelian", "abelian(n)", "rank n, all brackets zero"},
      {"heisenberg_gen", "heisenberg_gen(n)", "rank 2n+1, [x_i, y_i] = z"},
      {"filiform", "filiform(n)", "rank n, [e_1, e_i] = e_{i+1}"},
      {"solvable_px", "solvable_px", "rank 2, [t, x] = p x; needs k >= 2"},
      {"ut", "ut(n)", "strictly upper triangular n x n, class n-1; needs n-1 < p"},
  };
  return entries;
}

LieAlgebra corpus(const std::string& call, const PrimeContext& ctx) {
  static const std::regex form(R"(^\s*([a-z_]+)\s*(?:\(\s*([0-9,\s]*)\))?\s*$)");
  std::smatch m;
  if (!std::regex_match(call, m, form)) throw Error(ErrorKind::Parse, "malformed corpus call '" + call + "'");
  const std::string name = m[1];
  std::vector<int> args;
  std::stringstream ss(m[2]);
  for (std::string tok; std::getline(ss, tok, ',');) {
    if (tok.find_first_not_of(" \t") == std::string::npos) continue;
    args.push_back(std::stoi(tok));
  }
  auto one = [&]() {
    if (args.size() != 1) throw Error(ErrorKind::Parse, name + " takes one integer argument");
    return args[0];
  };
  if (name == "abelian") return abelian(ctx, one());
  if (name == "heisenberg_gen") return heisenberg_gen(ctx, one());
  if (name == "filiform") return filiform(ctx, one());
  if (name == "ut") return ut(ctx, one());
  if (name == "solvable_px") {
    if (!args.empty()) throw Error(ErrorKind::Parse, "solvable_px takes no arguments");
    return solvable_px(ctx);
  }
  throw Error(ErrorKind::Parse, "unknown corpus entry '" + name + "'");
}

}  // namespace lazard
