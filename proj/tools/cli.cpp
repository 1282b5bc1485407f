#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <future>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include "toricode/formulas.hpp"
#include "toricode/toric_code.hpp"

namespace toricode::cli {

extern const std::string_view kTriangleJson;
extern const std::string_view kEx4Json;

namespace {

using json = nlohmann::json;

json parse_json(std::string_view text, std::string_view source) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    const auto byte = std::min<std::size_t>(e.byte, text.size());
    const auto line = 1 + std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(byte > 0 ? byte - 1 : 0), '\n');
    std::string what = e.what();
    // drop the library's "[json.exception.parse_error.101] " prefix
    if (auto p = what.find("] "); p != std::string::npos) what = what.substr(p + 2);
    throw InputError(std::string(source) + ":" + std::to_string(line) + ": byte " + std::to_string(e.byte) +
                     ": " + what);
  }
}

std::int64_t integer(const json& v, std::string_view source, const std::string& where) {
  if (!v.is_number_integer()) throw InputError(std::string(source) + ": " + where + " must be an integer");
  return v.get<std::int64_t>();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

unsigned default_threads() {
  if (const char* env = std::getenv("TORICODE_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

// Accepts a plain integer or 2^e.
std::uint64_t parse_budget(const std::string& s) {
  try {
    std::size_t pos = 0;
    if (auto caret = s.find('^'); caret != std::string::npos) {
      const auto base = std::stoull(s.substr(0, caret), &pos);
      if (pos != caret) throw std::invalid_argument("");
      const auto exp = std::stoull(s.substr(caret + 1), &pos);
      if (pos != s.size() - caret - 1 || base != 2 || exp > 63) throw std::invalid_argument("");
      return std::uint64_t{1} << exp;
    }
    const auto v = std::stoull(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("");
    return v;
  } catch (const std::exception&) {
    throw CLI::ValidationError("--budget", "expected a positive integer or 2^e, got '" + s + "'");
  }
}

struct Common {
  std::string field;
  std::string polytope_path;
  std::string recipe_path;
  std::string method = "auto";
  unsigned threads = 0;
  std::string budget;
  std::string out_path;
  bool emit_generator = false;
  std::string field_range;
  std::string table_method = "formula";
};

SearchOptions search_options(const Common& c) {
  SearchOptions o;
  o.threads = c.threads ? c.threads : default_threads();
  if (!c.budget.empty()) o.budget = parse_budget(c.budget);
  return o;
}

std::optional<SearchMethod> search_method(const std::string& name) {
  if (name == "auto") return std::nullopt;
  if (auto m = parse_method(name)) return m;
  throw CLI::ValidationError("--method", "unknown method '" + name + "'");
}

MinDistResult search(const ToricCode& code, const std::string& method, const SearchOptions& o) {
  const auto m = search_method(method);
  return m ? min_distance(code, *m, o) : min_distance(code, o);
}

struct Input {
  LatticePolytope polytope;
  std::optional<ConstructionRecipe> recipe;
};

Input load_input(const Common& c) {
  if (!c.recipe_path.empty()) {
    auto r = parse_recipe_json(read_file(c.recipe_path), c.recipe_path);
    return {realize_recipe(r), std::move(r)};
  }
  return {parse_polytope_json(read_file(c.polytope_path), c.polytope_path), std::nullopt};
}

void banner(std::ostream& out, const GaloisField& f, const Input& in) {
  out << "# field " << f.describe() << '\n';
  if (in.recipe) out << "# recipe " << in.recipe->to_string() << '\n';
  out << "# polytope n=" << in.polytope.ambient_dim() << " vertices=" << in.polytope.to_string() << '\n';
}

std::string witness_csv(const std::vector<FieldElement>& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i].value);
  return s;
}

// Writes to --out when given, stdout otherwise.
template <class Fn>
void with_output(const Common& c, std::ostream& out, Fn&& fn) {
  if (c.out_path.empty()) {
    fn(out);
    return;
  }
  std::ofstream f(c.out_path);
  if (!f) throw InputError(c.out_path + ": cannot open for writing");
  fn(f);
}

int cmd_build(const Common& c, std::ostream& out) {
  const auto field = parse_field(c.field);
  const auto in = load_input(c);
  const auto code = ToricCode::build(in.polytope, field);
  banner(out, field, in);
  out << "N=" << code.length() << " k=" << code.dimension() << '\n';
  if (c.emit_generator) with_output(c, out, [&](std::ostream& os) { write_generator(os, code); });
  return kOk;
}

int cmd_mindist(const Common& c, std::ostream& out) {
  const auto field = parse_field(c.field);
  const auto in = load_input(c);
  const auto code = ToricCode::build(in.polytope, field);
  const auto r = search(code, c.method, search_options(c));
  with_output(c, out, [&](std::ostream& os) {
    banner(os, field, in);
    if (!r.exact) os << "# search budget exhausted; d is an upper bound, lower bound " << r.lower_bound << '\n';
    os << "N=" << code.length() << " k=" << code.dimension() << " d=" << r.d << " method=" << method_name(r.method)
       << " exact=" << (r.exact ? "true" : "false") << " witness=" << witness_csv(r.witness) << '\n';
  });
  return r.exact ? kOk : kInexact;
}

int cmd_verify(const Common& c, std::ostream& out) {
  if (c.recipe_path.empty()) throw CLI::ValidationError("verify", "needs --recipe");
  const auto field = parse_field(c.field);
  const auto in = load_input(c);
  const auto code = ToricCode::build(in.polytope, field);
  const auto options = search_options(c);
  auto brute = std::async(std::launch::async, [&] { return search(code, c.method, options); });
  const auto formula = d_recipe(*in.recipe, field.order());
  const auto r = brute.get();
  const bool pass = r.exact && r.d == formula;
  with_output(c, out, [&](std::ostream& os) {
    banner(os, field, in);
    os << "q=" << field.order() << " recipe=" << in.recipe->to_string() << " N=" << code.length()
       << " k=" << code.dimension() << " formula_d=" << formula << " brute_force_d=" << r.d
       << " method=" << method_name(r.method) << " exact=" << (r.exact ? "true" : "false") << ' '
       << (pass ? "PASS" : "FAIL") << '\n';
  });
  return pass ? kOk : kCheckFailed;
}

std::pair<std::uint64_t, std::uint64_t> parse_range(const std::string& s) {
  const auto dots = s.find("..");
  try {
    if (dots == std::string::npos) throw std::invalid_argument("");
    std::size_t p1 = 0, p2 = 0;
    const auto lo = std::stoull(s.substr(0, dots), &p1);
    const auto hi = std::stoull(s.substr(dots + 2), &p2);
    if (p1 != dots || p2 != s.size() - dots - 2 || lo < 2 || lo > hi || hi > kMaxFieldOrder) {
      throw std::invalid_argument("");
    }
    return {lo, hi};
  } catch (const std::exception&) {
    throw CLI::ValidationError("--field-range", "expected lo..hi with 2 <= lo <= hi, got '" + s + "'");
  }
}

std::string decimal(const Fraction& f) {
  std::ostringstream ss;
  ss << std::fixed << std::setprecision(6)
     << static_cast<long double>(f.numerator()) / static_cast<long double>(f.denominator());
  return ss.str();
}

int cmd_table(const Common& c, std::ostream& out) {
  if (c.recipe_path.empty()) throw CLI::ValidationError("table", "needs --recipe");
  const auto [lo, hi] = parse_range(c.field_range);
  const auto recipe = parse_recipe_json(read_file(c.recipe_path), c.recipe_path);
  const bool formula = c.table_method == "formula";
  if (!formula) search_method(c.table_method);
  const auto polytope = realize_recipe(recipe);
  const auto options = search_options(c);
  bool all_exact = true;
  with_output(c, out, [&](std::ostream& os) {
    os << "q,N,k,d,rel_d,rate,method,exact\n";
    for (auto q = lo; q <= hi; ++q) {
      std::uint32_t p = 0, m = 0;
      if (!prime_power(q, p, m) || !polytope.fits_in_cube(q)) {
        os << q << ",,,,,,skipped,false\n";
        continue;
      }
      CodeParams params;
      std::string method = "formula";
      if (formula) {
        params = params_report(recipe, q).params;
      } else {
        const auto code = ToricCode::build(polytope, make_field(p, m));
        const auto r = search(code, c.table_method, options);
        method = method_name(r.method);
        params.N = code.length();
        params.k = code.dimension();
        params.d = r.d;
        params.exact = r.exact;
        params.relative_distance = Fraction(static_cast<std::int64_t>(r.d), static_cast<std::int64_t>(params.N));
        params.rate = Fraction(static_cast<std::int64_t>(params.k), static_cast<std::int64_t>(params.N));
      }
      all_exact = all_exact && params.exact;
      os << q << ',' << params.N << ',' << params.k << ',' << params.d << ',' << decimal(params.relative_distance)
         << ',' << decimal(params.rate) << ',' << method << ',' << (params.exact ? "true" : "false") << '\n';
    }
  });
  return all_exact ? kOk : kInexact;
}

struct Example {
  std::string_view label;
  std::uint64_t q;
  LatticePolytope (*polytope)();
  SearchMethod method;
  std::size_t N, k, d;
};

LatticePolytope prism() { return product(bundled_triangle(), segment(1)); }
LatticePolytope pyramid_over_triangle() { return pyramid(bundled_triangle()); }

}  // namespace

LatticePolytope parse_polytope_json(std::string_view text, std::string_view source) {
  const auto j = parse_json(text, source);
  const std::string src(source);
  if (!j.is_object() || !j.contains("vertices")) throw InputError(src + ": expected an object with \"vertices\"");
  const auto& vs = j["vertices"];
  if (!vs.is_array() || vs.empty()) throw InputError(src + ": \"vertices\" must be a non-empty array");
  std::optional<std::int64_t> n;
  if (j.contains("n")) n = integer(j["n"], source, "\"n\"");
  std::vector<LatticePoint> pts;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    const auto where = "vertex " + std::to_string(i + 1);
    if (!vs[i].is_array()) throw InputError(src + ": " + where + " must be an array of integers");
    LatticePoint v;
    for (const auto& x : vs[i]) v.push_back(integer(x, source, where));
    if (!n) n = static_cast<std::int64_t>(v.size());
    if (static_cast<std::int64_t>(v.size()) != *n) {
      throw InputError(src + ": " + where + " has " + std::to_string(v.size()) + " coordinates, expected " +
                       std::to_string(*n));
    }
    pts.push_back(std::move(v));
  }
  return LatticePolytope::from_vertices(static_cast<int>(*n), std::move(pts));
}

ConstructionRecipe parse_recipe_json(std::string_view text, std::string_view source) {
  const auto j = parse_json(text, source);
  const std::string src(source);
  if (!j.is_object() || !j.contains("steps") || !j["steps"].is_array()) {
    throw InputError(src + ": expected an object with a \"steps\" array");
  }
  std::vector<RecipeStep> steps;
  for (std::size_t i = 0; i < j["steps"].size(); ++i) {
    const auto& s = j["steps"][i];
    const auto where = "step " + std::to_string(i + 1);
    if (!s.is_object() || s.size() != 1) {
      throw InputError(src + ": " + where + " must be {\"segment\": a} or {\"pyramid_scale\": k}");
    }
    if (s.contains("segment")) {
      steps.emplace_back(Segment{integer(s["segment"], source, where)});
    } else if (s.contains("pyramid_scale")) {
      steps.emplace_back(PyramidScale{integer(s["pyramid_scale"], source, where)});
    } else {
      throw InputError(src + ": " + where + " has unknown key \"" + s.begin().key() + "\"");
    }
  }
  return ConstructionRecipe::make(std::move(steps));
}

LatticePolytope bundled_triangle() { return parse_polytope_json(kTriangleJson, "triangle.json"); }
LatticePolytope bundled_ex4() { return parse_polytope_json(kEx4Json, "ex4.json"); }

int run_examples(const SearchOptions& options, std::ostream& out, std::ostream& err) {
  const Example examples[] = {
      {"triangle", 5, bundled_triangle, SearchMethod::exhaustive, 16, 6, 8},
      {"triangle", 8, bundled_triangle, SearchMethod::exhaustive, 49, 6, 28},
      {"prism(triangle)", 5, prism, SearchMethod::isd, 64, 12, 24},
      {"pyramid(triangle)", 5, pyramid_over_triangle, SearchMethod::exhaustive, 64, 7, 32},
      {"ex4", 5, bundled_ex4, SearchMethod::isd, 64, 13, 31},
  };
  int status = kOk;
  for (const auto& ex : examples) {
    const auto code = ToricCode::build(ex.polytope(), parse_field(std::to_string(ex.q)));
    const auto r = min_distance(code, ex.method, options);
    const bool pass = r.exact && code.length() == ex.N && code.dimension() == ex.k && r.d == ex.d;
    out << "q=" << ex.q << " P=" << ex.label << " N=" << code.length() << " k=" << code.dimension()
        << " d=" << r.d << ' ' << (pass ? "PASS" : "FAIL") << '\n';
    if (!pass) {
      status = kCheckFailed;
      err << "q=" << ex.q << " P=" << ex.label << ": expected N=" << ex.N << " k=" << ex.k << " d=" << ex.d
          << ", got N=" << code.length() << " k=" << code.dimension() << " d=" << r.d
          << (r.exact ? "" : " (search incomplete)") << '\n';
    }
  }
  return status;
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Toric codes from lattice polytopes: parameters, minimum distance, formula checks"};
  app.require_subcommand(1);
  Common c;

  auto add_input = [&](CLI::App* sub, bool recipe_only) {
    sub->add_option("--field", c.field, "field: p, p^m or q")->required();
    if (!recipe_only) {
      auto* poly = sub->add_option("--polytope", c.polytope_path, "polytope JSON file")->check(CLI::ExistingFile);
      auto* rec = sub->add_option("--recipe", c.recipe_path, "recipe JSON file")->check(CLI::ExistingFile);
      poly->excludes(rec);
      rec->excludes(poly);
    } else {
      sub->add_option("--recipe", c.recipe_path, "recipe JSON file")->required()->check(CLI::ExistingFile);
    }
  };
  auto add_search = [&](CLI::App* sub, const std::string& default_method) {
    c.method = default_method;
    sub->add_option("--method", c.method, "auto, exhaustive or isd")->capture_default_str();
    sub->add_option("--threads", c.threads, "worker threads (default $TORICODE_THREADS or all cores)");
    sub->add_option("--budget", c.budget, "work cap in codeword-symbol operations (integer or 2^e)");
  };

  auto* build = app.add_subcommand("build", "build a code and report N and k");
  add_input(build, false);
  build->add_flag("--emit-generator", c.emit_generator, "write the generator matrix");
  build->add_option("--out", c.out_path, "generator output file");

  auto* mindist = app.add_subcommand("mindist", "compute the minimum distance");
  add_input(mindist, false);
  add_search(mindist, "auto");
  mindist->add_option("--out", c.out_path, "report file");

  auto* verify = app.add_subcommand("verify", "compare the recipe formula with a search");
  add_input(verify, true);
  add_search(verify, "auto");
  verify->add_option("--out", c.out_path, "report file");

  auto* table = app.add_subcommand("table", "CSV of parameters over a range of field sizes");
  table->add_option("--field-range", c.field_range, "lo..hi")->required();
  table->add_option("--recipe", c.recipe_path, "recipe JSON file")->required()->check(CLI::ExistingFile);
  table->add_option("--method", c.table_method, "formula, auto, exhaustive or isd")->capture_default_str();
  table->add_option("--threads", c.threads, "worker threads");
  table->add_option("--budget", c.budget, "work cap per search");
  table->add_option("--out", c.out_path, "CSV file");

  auto* examples = app.add_subcommand("examples", "recompute the worked examples");
  examples->add_option("--threads", c.threads, "worker threads");
  examples->add_option("--budget", c.budget, "work cap per search");

  try {
    app.parse(argc, argv);
    if ((build->parsed() || mindist->parsed()) && c.polytope_path.empty() && c.recipe_path.empty()) {
      throw CLI::ValidationError("input", "one of --polytope or --recipe is required");
    }
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  }

  try {
    if (build->parsed()) return cmd_build(c, out);
    if (mindist->parsed()) return cmd_mindist(c, out);
    if (verify->parsed()) return cmd_verify(c, out);
    if (table->parsed()) return cmd_table(c, out);
    return run_examples(search_options(c), out, err);
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace toricode::cli
