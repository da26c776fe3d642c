#include "cli.hpp"

#include <CLI11.hpp>
#include <functional>
#include <iomanip>
#include <algorithm>
#include <chrono>
#include <optional>
#include <sstream>

#include "mcm/dickson.hpp"
#include "mcm/identities.hpp"
#include "mcm/pgl2.hpp"
#include "mcm/pgl2_scan.hpp"
#include "mcm/poly.hpp"
#include "mcm/splitting.hpp"
#include "report_json.hpp"

namespace mcm::cli {
namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::optional<unsigned> n, k, m, max_n;
  std::optional<std::string> a, field, poly;
  bool all_a = false;
  std::uint64_t seed = 0;
  unsigned trials = 16;
  bool json = false;
  bool perturb = false;
  bool timing = true;
  bool dump = false;
  std::string check;
};

unsigned need(const std::optional<unsigned>& v, const char* flag) {
  if (!v) throw UsageError(std::string("missing required option ") + flag);
  return *v;
}

Perturb perturb_of(const Options& o) { return o.perturb ? Perturb::rhs : Perturb::none; }

std::vector<FieldElem> a_values(const Options& o) {
  const auto& base = FieldContext::make(o.k.value_or(1));
  if (o.a && !o.all_a) {
    const FieldElem a = parse_elem(base, *o.a);
    if (a.is_zero()) throw UsageError("--a must be nonzero");
    return {a};
  }
  std::vector<FieldElem> out;
  for (std::uint64_t v = 1; v <= base.mask(); ++v) out.push_back(base.elem(v));
  return out;
}

FieldElem single_a(const Options& o) {
  const auto& base = FieldContext::make(o.k.value_or(1));
  const FieldElem a = parse_elem(base, o.a.value_or("0x1"));
  if (a.is_zero()) throw UsageError("--a must be nonzero");
  return a;
}

template <class F>
std::vector<CheckReport> per_a(const Options& o, F&& body) {
  std::vector<CheckReport> out;
  for (const auto& a : a_values(o)) out.push_back(body(a));
  return out;
}

std::vector<CheckReport> run_verify(const std::string& check, const Options& o) {
  const Perturb p = perturb_of(o);
  auto timed = [](auto&& fn) {
    const auto start = std::chrono::steady_clock::now();
    CheckReport r = fn();
    r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return r;
  };
  if (check == "main-identity") return {timed([&] { return verify_main_identity(need(o.n, "--n"), p); })};
  if (check == "closed-forms") return {timed([&] { return verify_closed_forms(need(o.n, "--n"), p); })};
  if (check == "dickson-relations") {
    return {timed([&] {
      const unsigned n = need(o.n, "--n");
      CheckReport r = verify_dickson_relations(n, o.trials, o.seed, p);
      r.absorb(verify_closed_forms(n, p));
      return r;
    })};
  }
  if (check == "cj-product") return {timed([&] { return verify_cj_product(need(o.n, "--n"), p); })};
  if (check == "e-transforms") return {timed([&] { return verify_e_transformations(need(o.n, "--n"), p); })};
  if (check == "class-counts") return {timed([&] { return verify_class_counts(need(o.n, "--n"), p); })};
  if (check == "dihedral") return {timed([&] { return verify_dihedral_all(need(o.n, "--n"), p); })};
  if (check == "root-product") {
    const unsigned n = need(o.n, "--n");
    return per_a(o, [&](const FieldElem& a) {
      return timed([&] {
        const SplitFrame f = build_frame(n, a, o.seed);
        CheckReport r = verify_root_product(f, p);
        r.absorb(verify_frame(f, p));
        return r;
      });
    });
  }
  if (check == "stabilizer") {
    const unsigned n = need(o.n, "--n");
    if (!o.a && !o.all_a) {
      return {timed([&] { return verify_stabilizer(build_frame(n, single_a(o), o.seed), p); })};
    }
    return per_a(o, [&](const FieldElem& a) {
      return timed([&] { return verify_stabilizer(build_frame(n, a, o.seed), p); });
    });
  }
  if (check == "seven-formulas") {
    const unsigned n = need(o.n, "--n");
    return per_a(o, [&](const FieldElem& a) { return timed([&] { return verify_seven(n, a, o.seed, p); }); });
  }
  if (check == "splitfield") {
    const unsigned n = need(o.n, "--n");
    if (o.a && !o.all_a) return {timed([&] { return splitfield_equal(n, single_a(o), o.seed, p); })};
    return {timed([&] { return verify_splitfield(n, o.k.value_or(1), o.seed, p); })};
  }
  if (check == "orbit-structure") {
    const unsigned n = need(o.n, "--n");
    const unsigned k = o.k.value_or(n);
    if (k % n != 0) throw UsageError("orbit-structure needs n | k");
    Options ok = o;
    ok.k = k;
    if (o.a && !o.all_a) return {timed([&] { return orbit_structure(n, single_a(ok), o.seed, p); })};
    return {timed([&] { return verify_orbit_structure(n, k, o.seed, p); })};
  }
  throw UsageError("unknown check '" + check + "'");
}

std::vector<CheckReport> run_all(const Options& o) {
  const unsigned max_n = need(o.max_n, "--max-n");
  if (max_n < 2) throw UsageError("--max-n must be at least 2");
  std::vector<std::function<std::vector<CheckReport>()>> jobs;
  auto add = [&](std::string check, unsigned n, std::optional<unsigned> k = std::nullopt) {
    jobs.emplace_back([=, &o] {
      Options sub = o;
      sub.n = n;
      sub.k = k;
      sub.a.reset();
      sub.all_a = true;
      return run_verify(check, sub);
    });
  };
  for (unsigned n = 2; n <= max_n; ++n) {
    for (const char* c : {"main-identity", "closed-forms", "dickson-relations", "cj-product", "e-transforms",
                          "class-counts", "dihedral"}) {
      add(c, n);
    }
    if (n <= 3) {
      add("root-product", n, 1u);
      add("seven-formulas", n, 1u);
      add("stabilizer", n, 1u);
      add("orbit-structure", n, n);
      add("splitfield", n, 1u);
      add("splitfield", n, 2u);
    }
  }
  std::vector<CheckReport> out;
  for (auto& job : jobs) {
    for (auto& r : job()) out.push_back(std::move(r));
  }
  const Perturb p = perturb_of(o);
  auto timed_push = [&](auto&& fn) {
    const auto start = std::chrono::steady_clock::now();
    CheckReport r = fn();
    r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    out.push_back(std::move(r));
  };
  for (unsigned n = 2; n <= std::min(max_n, 3u); ++n) timed_push([&] { return verify_root_counts(n, 1, p); });
  for (unsigned n = 2; n <= max_n; ++n) {
    for (unsigned m = 1; m <= 4; ++m) timed_push([&] { return verify_perm(n, m, p); });
  }
  for (unsigned k = 1; k <= 4; ++k) timed_push([&] { return quintic_table(k, o.seed, p); });
  return out;
}

void print_text(const CheckReport& r, std::ostream& out) {
  out << (r.pass ? "PASS " : "FAIL ") << r.check;
  for (const auto& [k, v] : r.params) out << ' ' << k << '=' << v;
  out << '\n';
  if (r.counterexample) out << "  counterexample: " << *r.counterexample << '\n';
  for (const auto& [k, v] : r.details) out << "  " << k << ": " << v << '\n';
}

void print_timing(const std::vector<CheckReport>& reports, const Options& o, std::ostream& err) {
  if (!o.timing) return;
  for (const auto& r : reports) {
    err << r.check << ": " << std::fixed << std::setprecision(1) << r.elapsed_ms << " ms\n";
  }
}

int emit(const std::string& name, const std::vector<CheckReport>& reports, const Options& o, std::ostream& out,
         std::ostream& err) {
  bool pass = true;
  for (const auto& r : reports) pass = pass && r.pass;
  if (o.json) {
    if (reports.size() == 1) {
      out << to_json(reports[0], o.timing).dump(2) << '\n';
    } else {
      nlohmann::ordered_json j;
      j["check"] = name;
      j["pass"] = pass;
      double total = 0;
      for (const auto& r : reports) total += r.elapsed_ms;
      j["elapsed_ms"] = o.timing ? total : 0.0;
      auto arr = nlohmann::ordered_json::array();
      for (const auto& r : reports) arr.push_back(to_json(r, o.timing));
      j["results"] = arr;
      out << j.dump(2) << '\n';
    }
  } else {
    for (const auto& r : reports) print_text(r, out);
    print_timing(reports, o, err);
  }
  return pass ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app("Characteristic-2 finite-field algebra and identity checks", "mcm");
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--n", o.n, "GF(q), q = 2^n")->check(CLI::Range(1u, 64u));
  app.add_option("--k", o.k, "base field GF(2^k)")->check(CLI::Range(1u, 64u));
  app.add_option("--m", o.m, "extension degree over GF(q)")->check(CLI::Range(1u, 64u));
  app.add_option("--a", o.a, "element of GF(2^k), hex");
  app.add_flag("--all-a", o.all_a, "every nonzero a in GF(2^k) (default when --a is absent)");
  app.add_option("--seed", o.seed, "seed for randomized splitting");
  app.add_flag("--json", o.json, "machine-readable output");
  app.add_option("--max-n", o.max_n, "largest n for verify all")->check(CLI::Range(2u, 16u));
  app.add_option("--trials", o.trials, "random points per dickson-relations run");
  app.add_flag("--perturb", o.perturb, "corrupt the expected side of each identity");
  app.add_flag("--no-timing", [&](std::int64_t) { o.timing = false; }, "omit timings");
  app.add_option("--field", o.field, "field as 2^m or 2^m/0xMOD");
  app.add_option("--poly", o.poly, "comma-separated hex coefficients, lowest degree first");
  app.add_flag("--dump", o.dump, "print the full frame");

  auto* verify = app.add_subcommand("verify", "run an identity check");
  verify->add_option("check", o.check,
                     "main-identity, closed-forms, dickson-relations, cj-product, e-transforms, root-product, "
                     "class-counts, dihedral, stabilizer, splitfield, seven-formulas, orbit-structure, or all")
      ->required();
  auto* correspond_cmd = app.add_subcommand("correspond", "factorization types of both polynomials");
  auto* quintic = app.add_subcommand("quintic", "q = 4 factorization table over GF(2^k)");
  auto* counts = app.add_subcommand("counts", "root-count distribution over GF(q^m)");
  auto* permcheck = app.add_subcommand("permcheck", "whether C(x) permutes GF(2^m)");
  auto* factor_cmd = app.add_subcommand("factor", "factor a polynomial");
  auto* dickson = app.add_subcommand("dickson", "Dickson polynomial D_k");
  auto* frame = app.add_subcommand("frame", "roots and cross-ratio frame of x^(q+1) + a x + a");
  for (auto* sub : {verify, correspond_cmd, quintic, counts, permcheck, factor_cmd, dickson, frame}) sub->fallthrough();

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    const Perturb p = perturb_of(o);
    if (*verify) {
      if (o.check == "all") return emit("all", run_all(o), o, out, err);
      return emit(o.check, run_verify(o.check, o), o, out, err);
    }
    if (*correspond_cmd) {
      const unsigned n = need(o.n, "--n");
      const unsigned k = need(o.k, "--k");
      Options ok = o;
      ok.k = k;
      if (o.a && !o.all_a) return emit("correspond", {verify_correspond(n, single_a(ok), o.seed, p)}, o, out, err);
      return emit("correspond", {verify_correspond_all(n, k, o.seed, p)}, o, out, err);
    }
    if (*quintic) return emit("quintic", {quintic_table(need(o.k, "--k"), o.seed, p)}, o, out, err);
    if (*counts) return emit("counts", {verify_root_counts(need(o.n, "--n"), need(o.m, "--m"), p)}, o, out, err);
    if (*permcheck) return emit("permcheck", {verify_perm(need(o.n, "--n"), need(o.m, "--m"), p)}, o, out, err);
    if (*factor_cmd) {
      if (!o.field || !o.poly) throw UsageError("factor needs --field and --poly");
      const auto& ctx = parse_field(*o.field);
      const UPoly f = parse_poly(ctx, *o.poly);
      CheckReport r("factor");
      r.param("field", ctx.describe()).param("poly", to_text(f));
      const auto facs = mcm::factor(f, o.seed);
      FactType t;
      for (const auto& fac : facs) {
        for (unsigned i = 0; i < fac.multiplicity; ++i) t.parts.push_back(static_cast<unsigned>(fac.poly.degree()));
      }
      std::sort(t.parts.begin(), t.parts.end());
      r.detail("type", t.str());
      for (std::size_t i = 0; i < facs.size(); ++i) {
        r.detail("factor" + std::to_string(i), to_text(facs[i].poly) + "^" + std::to_string(facs[i].multiplicity));
      }
      if (o.json) return emit("factor", {r}, o, out, err);
      out << t.str() << '\n';
      for (const auto& fac : facs) out << to_text(fac.poly) << " ^" << fac.multiplicity << '\n';
      return 0;
    }
    if (*dickson) {
      const unsigned k = need(o.k, "--k");
      const unsigned n = o.n.value_or(1);
      const UPoly d = dickson_poly(k, FieldContext::make(n));
      if (o.json) {
        CheckReport r("dickson");
        r.param("n", std::to_string(n)).param("k", std::to_string(k)).detail("poly", to_text(d));
        return emit("dickson", {r}, o, out, err);
      }
      out << to_text(d) << '\n';
      return 0;
    }
    if (*frame) {
      const unsigned n = need(o.n, "--n");
      const SplitFrame f = build_frame(n, single_a(o), o.seed);
      CheckReport r = verify_frame(f, p);
      if (o.dump) r.detail("dump", dump_frame(f));
      if (o.json) return emit("frame", {r}, o, out, err);
      if (o.dump) out << dump_frame(f);
      r.details.erase(std::remove_if(r.details.begin(), r.details.end(), [](const auto& kv) { return kv.first == "dump"; }),
                      r.details.end());
      return emit("frame", {r}, o, out, err);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return 2;
  } catch (const ContextMismatch& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << '\n';
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace mcm::cli
