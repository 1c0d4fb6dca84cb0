// Command-line surface for the rational blowdown toolkit.  Exit codes:
// 0 success, 1 invalid input, 2 internal invariant violation.

#include "rbd/contfrac.hpp"
#include "rbd/export.hpp"
#include "rbd/flipgraph.hpp"
#include "rbd/lattice.hpp"
#include "rbd/monodromy.hpp"
#include "rbd/polygon.hpp"
#include "rbd/tuples.hpp"
#include "rbd/verify.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

namespace {

using namespace rbd;

Int parse_int(const std::string& s) {
  std::string t = s;
  if (!t.empty() && t[0] == '-') t = t.substr(1);
  if (t.empty() || t.find_first_not_of("0123456789") != std::string::npos)
    throw InvalidInput("not an integer: " + s);
  return Int(s);
}

int env_limit() {
  const char* v = std::getenv("RBD_MAX_K");
  if (!v) return kDefaultMaxK;
  try {
    int lim = std::stoi(v);
    if (lim < 1) throw std::invalid_argument("");
    return lim;
  } catch (const std::exception&) {
    throw InvalidInput("RBD_MAX_K must be a positive integer");
  }
}

std::string bracketed(const Tuple& t) {
  std::string s = to_string(t);
  s.front() = '[';
  s.back() = ']';
  return s;
}

std::vector<int> parse_ints(const std::string& csv) {
  std::vector<int> out;
  for (Entry e : parse_tuple(csv)) out.push_back(static_cast<int>(e));
  return out;
}

void check_pq(const Int& p, const Int& q) {
  if (q < 1 || p <= q || gcd(p, q) != 1)
    throw InvalidInput("need coprime integers p > q >= 1");
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw InvalidInput("cannot open output file " + out_path);
  out << text;
}

std::string render_graph(const GradedGraph& g, bool dot) {
  if (dot) return graph_to_dot(g);
  return graph_to_json(g).dump(2) + "\n";
}

void cmd_hj(const std::string& ps, const std::string& qs) {
  Int p = parse_int(ps), q = parse_int(qs);
  check_pq(p, q);
  Tuple b = hj_expand(p, p - q);
  Tuple a = hj_expand(p, q);
  std::cout << p << "/" << (p - q) << " = " << bracketed(b) << "\n";
  std::cout << p << "/" << q << " = " << bracketed(a) << "\n";
  std::cout << "dual: " << bracketed(b) << " <-> " << bracketed(a) << "\n";
}

void cmd_fillings(const std::string& ps, const std::string& qs) {
  Int p = parse_int(ps), q = parse_int(qs);
  check_pq(p, q);
  Tuple b = hj_expand(p, p - q);
  auto fs = fillings(b, env_limit());
  std::cout << "L(" << p << "," << q << "): b = " << bracketed(b)
            << ", k = " << b.size() << ", " << fs.size() << " fillings\n";
  for (const Tuple& n : fs)
    std::cout << to_string(n) << "  ht=" << height(n) << " dpt=" << depth(n)
              << " betti=" << betti(n, p, q) << "\n";
}

void cmd_graph(const std::string& ps, const std::string& qs, bool dot,
               const std::string& out_path) {
  Int p = parse_int(ps), q = parse_int(qs);
  check_pq(p, q);
  emit(render_graph(build_gpq(p, q, env_limit()), dot), out_path);
}

void cmd_flipgraph(int k, bool dot, const std::string& out_path) {
  emit(render_graph(build_gk(k, env_limit()), dot), out_path);
}

void cmd_weights(const std::string& csv) {
  Tuple w = edge_weights(parse_ints(csv));
  std::cout << to_string(w);
  if (auto par = wahl_params(w))
    std::cout << "  wahl s=" << par->s << ",h=" << par->h;
  std::cout << "\n";
}

void cmd_monodromy(const std::string& ps, const std::string& qs,
                   const std::string& ns, const std::string& path_csv) {
  Int p = parse_int(ps), q = parse_int(qs);
  check_pq(p, q);
  Tuple n = parse_tuple(ns);
  std::optional<std::vector<int>> path;
  if (!path_csv.empty()) path = parse_ints(path_csv);
  TwistWord w = word_for(p, q, n, path, env_limit());
  WordStats st = word_stats(w, p, q, n);
  std::cout << "word: " << w.str() << "\n";
  std::cout << "length=" << st.length << " lanterns=" << st.lanterns
            << " positive=" << (st.positive ? "yes" : "no") << "\n";
}

std::vector<InteriorOneSelector> parse_strategy(const std::string& csv) {
  std::vector<InteriorOneSelector> out;
  if (csv.empty()) return out;
  std::string token;
  std::istringstream in(csv);
  while (std::getline(in, token, ',')) {
    if (token == "leftmost") {
      out.push_back(InteriorOneSelector::leftmost());
    } else if (token == "middle") {
      out.push_back(InteriorOneSelector::middle());
    } else if (token == "rightmost") {
      out.push_back(InteriorOneSelector::rightmost());
    } else {
      try {
        out.push_back(InteriorOneSelector::at(std::stoi(token)));
      } catch (const std::exception&) {
        throw InvalidInput("bad selector token: " + token);
      }
    }
  }
  return out;
}

void cmd_recipe(const std::string& ps, const std::string& qs,
                const std::string& ns, const std::string& strategy_csv) {
  Int p = parse_int(ps), q = parse_int(qs);
  check_pq(p, q);
  Tuple n = parse_tuple(ns);
  DepthRecipe r = depth_recipe(p, q, n, parse_strategy(strategy_csv),
                               env_limit());
  std::cout << "b = " << bracketed(r.b) << "\n";
  std::cout << "start " << to_string(r.start) << "\n";
  for (std::size_t i = 0; i < r.steps.size(); ++i) {
    const RecipeStep& st = r.steps[i];
    std::cout << "step " << i + 1 << ": flips";
    for (int f : st.flips) std::cout << " d" << f;
    std::cout << "  weights " << to_string(st.weights) << "  stop "
              << to_string(st.stop) << "\n";
  }
  std::cout << "depth upper bound dpt=" << depth(n);
  if (n.size() >= 2) {
    GradedGraph g = build_gpq(p, q, env_limit());
    auto d = graph_distance(g, g.index_of(r.start), g.index_of(n));
    std::cout << "; graph distance=" << (d ? std::to_string(*d) : "inf");
  }
  std::cout << "\n";
}

IntForm resolve_form(const std::string& arg) {
  if (arg.empty()) throw InvalidInput("lattice: empty form argument");
  if (arg[0] != '@') return plumbing_form(parse_tuple(arg));
  std::string name = arg.substr(1);
  namespace fs = std::filesystem;
  if (fs::exists(name)) return read_form_file(name);
  std::vector<std::string> dirs;
  if (const char* env = std::getenv("RBD_FIXTURES")) dirs.push_back(env);
  dirs.push_back("fixtures");
  for (const std::string& dir : dirs) {
    fs::path p = fs::path(dir) / (name + ".txt");
    if (fs::exists(p)) return read_form_file(p.string());
  }
  if (auto f = builtin_form(name)) return *f;
  throw InvalidInput("lattice: unknown fixture " + name);
}

std::string vec_str(const std::vector<Int>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].str();
  }
  return s + ")";
}

void cmd_lattice(const std::string& form_arg, const std::string& square,
                 const std::string& chain_csv, bool adjunction) {
  IntForm f = resolve_form(form_arg);
  if (square.empty() == chain_csv.empty())
    throw InvalidInput("lattice: give exactly one of --square, --chain");
  if (!square.empty()) {
    if (adjunction)
      throw InvalidInput("lattice: --adjunction applies to --chain only");
    auto vecs = vectors_of_square(f, parse_int(square));
    std::cout << "classes of square " << square << ": " << vecs.size() << "\n";
    for (const auto& v : vecs) std::cout << vec_str(v) << "\n";
    return;
  }
  Tuple squares = parse_tuple(chain_csv);
  std::optional<std::vector<Int>> c1;
  if (adjunction) {
    std::vector<Int> v;
    for (int i = 0; i < f.dim; ++i) v.push_back(2 + f.m[i][i]);
    c1 = v;
  }
  auto chains = chain_embeddings(f, squares, c1);
  std::cout << "chains: " << chains.size() << "\n";
  for (std::size_t i = 0; i < chains.size(); ++i) {
    std::cout << "chain " << i + 1 << ":";
    for (const auto& v : chains[i]) std::cout << " " << vec_str(v);
    std::cout << "\n";
  }
}

int cmd_verify() {
  bool all = true;
  for (const CheckResult& r : acceptance_checks()) {
    if (r.pass) {
      std::cout << "PASS  " << r.name << "\n";
    } else {
      all = false;
      std::cout << "FAIL  " << r.name << ": " << r.detail << "\n";
    }
  }
  std::cout << exploratory_report() << "\n";
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rational blowdown graphs of lens space fillings"};
  app.require_subcommand(1);

  std::string ps, qs, ns, csv, out_path, square, chain_csv, strategy, form_arg,
      path_csv;
  int k = 0;
  bool dot = false, json = false, adjunction = false;

  auto add_pq = [&](CLI::App* c) {
    c->add_option("p", ps, "numerator")->required();
    c->add_option("q", qs, "denominator")->required();
  };
  auto add_format = [&](CLI::App* c) {
    c->add_flag("--dot", dot, "emit DOT");
    c->add_flag("--json", json, "emit JSON (default)");
    c->add_option("--out", out_path, "write to file instead of stdout");
  };

  CLI::App* hj = app.add_subcommand("hj", "expansions of p/(p-q) and p/q");
  add_pq(hj);

  CLI::App* fil = app.add_subcommand("fillings", "fillings of L(p,q)");
  add_pq(fil);

  CLI::App* gr = app.add_subcommand("graph", "rational blowdown graph");
  add_pq(gr);
  add_format(gr);

  CLI::App* fg = app.add_subcommand("flipgraph", "flip graph on Z_k");
  fg->add_option("k", k, "tuple length")->required();
  add_format(fg);

  CLI::App* we = app.add_subcommand("weights", "plumbing weights of flips");
  we->add_option("flips", csv, "comma-separated diagonal indices")->required();

  CLI::App* mo = app.add_subcommand("monodromy", "twist word of a filling");
  add_pq(mo);
  mo->add_option("tuple", ns, "filling tuple")->required();
  mo->add_option("--path", path_csv, "flip sequence from the fan");

  CLI::App* re = app.add_subcommand("recipe", "blowdown recipe of a filling");
  add_pq(re);
  re->add_option("tuple", ns, "filling tuple")->required();
  re->add_option("--strategy", strategy,
                 "per-phase selectors: leftmost,middle,rightmost or ordinals");

  CLI::App* la = app.add_subcommand("lattice", "negative definite searches");
  la->add_option("form", form_arg, "weight tuple or @fixture")->required();
  la->add_option("--square", square, "list classes of this square");
  la->add_option("--chain", chain_csv, "embed a chain with these squares");
  la->add_flag("--adjunction", adjunction, "impose c1 = 2 + diagonal");

  app.add_subcommand("verify-paper", "run the acceptance suite");

  try {
    app.parse(argc, argv);
    if (dot && json) throw InvalidInput("give at most one of --dot, --json");
    if (hj->parsed()) cmd_hj(ps, qs);
    if (fil->parsed()) cmd_fillings(ps, qs);
    if (gr->parsed()) cmd_graph(ps, qs, dot, out_path);
    if (fg->parsed()) cmd_flipgraph(k, dot, out_path);
    if (we->parsed()) cmd_weights(csv);
    if (mo->parsed()) cmd_monodromy(ps, qs, ns, path_csv);
    if (re->parsed()) cmd_recipe(ps, qs, ns, strategy);
    if (la->parsed()) cmd_lattice(form_arg, square, chain_csv, adjunction);
    if (app.get_subcommand("verify-paper")->parsed()) return cmd_verify();
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
