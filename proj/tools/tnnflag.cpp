#include <chrono>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "CLI11.hpp"
#include "tnn/cartan.hpp"
#include "tnn/orders.hpp"
#include "tnn/poset.hpp"
#include "tnn/report.hpp"
#include "tnn/slgroup.hpp"
#include "tnn/tpcells.hpp"
#include "tnn/weyl.hpp"

using nlohmann::json;
using namespace tnn;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CLI::ValidationError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& out, const std::string& text) {
  if (out.empty()) {
    std::cout << text << "\n";
    return;
  }
  std::ofstream f(out);
  f << text << "\n";
}

CartanData load_cartan(const std::string& src) {
  std::ifstream probe(src);
  if (probe.good()) return cartan_from_json(read_file(src));
  return builtin_cartan(src);
}

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else if (!isspace(static_cast<unsigned char>(c))) {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

Word parse_weyl_word(const CartanData& ctx, const std::string& s) {
  if (s.empty() || s == "e") return {};
  return word_from_labels(ctx, split_csv(s));
}

std::vector<int> parse_ints(const std::string& s) {
  std::vector<int> out;
  if (s.empty() || s == "e") return out;
  for (const auto& t : split_csv(s)) out.push_back(std::stoi(t));
  return out;
}

Perm perm_from_gens(int m, const std::vector<int>& gens) {
  Perm p = perm_identity(m);
  for (int g : gens) {
    if (g < 1 || g >= m) throw CLI::ValidationError("generator out of range: s" + std::to_string(g));
    p = perm_mul(p, perm_gen(m, g));
  }
  return p;
}

json word_json(const CartanData& ctx, const WeylElement& w) {
  json a = json::array();
  for (const auto& l : word_labels(ctx, canonical_word(w))) a.push_back(l);
  return a;
}

json gens_json(const Perm& p) {
  json a = json::array();
  for (int g : perm_word(p)) a.push_back(g);
  return a;
}

SuiteReport gkl_suite(int m, const Perm& w, const Perm& w1, int samples, ParamRng& rng) {
  SuiteReport rep;
  rep.suite = "factorization_memberships";
  CheckReport c = verify_gkl_memberships(m, w, w1, samples, rng);
  rep.add("memberships", c.ok, c.failures.empty() ? "" : c.failures.front());
  return rep;
}

// Twisted order coincides with Bruhat for J=∅ and reversed Bruhat for J=I.
SuiteReport order_reduction_suite(const std::string& name, int maxlen) {
  SuiteReport rep;
  rep.suite = "order_reductions_" + name;
  auto ctx = std::make_shared<const CartanData>(builtin_cartan(name));
  std::vector<int> all;
  for (int i = 0; i < ctx->size(); ++i) all.push_back(i);
  auto elems = enumerate_upto(ctx, maxlen);
  bool empty_ok = true, full_ok = true;
  std::string witness_e, witness_f;
  for (const auto& a : elems)
    for (const auto& b : elems) {
      if (twisted_leq(a, b, {}) != bruhat_leq(a, b)) {
        empty_ok = false;
        witness_e = pair_id(a, b);
      }
      if (twisted_leq(a, b, all) != bruhat_leq(b, a)) {
        full_ok = false;
        witness_f = pair_id(a, b);
      }
    }
  rep.add("empty set gives Bruhat", empty_ok, witness_e);
  rep.add("full set gives reversed Bruhat", full_ok, witness_f);
  return rep;
}

SuiteReport poset_law_suite(const std::string& name, int maxlen,
                            const std::vector<std::vector<int>>& jsets, int max_rank) {
  SuiteReport rep;
  rep.suite = "poset_laws_" + name;
  auto ctx = std::make_shared<const CartanData>(builtin_cartan(name));
  auto elems = enumerate_upto(ctx, maxlen);
  for (const auto& J : jsets) {
    std::string jtag = "J={";
    for (size_t i = 0; i < J.size(); ++i) jtag += (i ? "," : "") + ctx->nodes[J[i]];
    jtag += "}";
    bool ok = true;
    std::string witness;
    for (const auto& v : elems)
      for (const auto& w : elems) {
        if (!twisted_leq(v, w, J)) continue;
        if (twisted_length(w, J) - twisted_length(v, J) > max_rank) continue;
        GradedPoset hat = build_jq_poset(v, w, J, true);
        if (!is_graded(hat) || !is_thin(hat) || !is_eulerian(hat)) {
          ok = false;
          witness = pair_id(v, w);
        }
      }
    rep.add(jtag + " intervals graded+thin+eulerian", ok, witness);
  }
  return rep;
}

std::vector<SuiteReport> run_verify(const std::string& profile, std::uint64_t seed,
                                    std::vector<std::pair<std::string, double>>& timings) {
  std::vector<SuiteReport> reports;
  auto timed = [&](const std::string& tag, auto&& fn) {
    auto t0 = std::chrono::steady_clock::now();
    reports.push_back(fn());
    auto t1 = std::chrono::steady_clock::now();
    timings.emplace_back(tag, std::chrono::duration<double>(t1 - t0).count());
  };

  LeviContext sl3_e = make_levi(3, {});
  LeviContext sl3_1 = make_levi(3, {1});
  Perm e3 = perm_identity(3);
  Perm w0_3 = perm_from_gens(3, {1, 2, 1});
  Perm s1 = perm_from_gens(3, {1});
  Perm s2s1 = perm_from_gens(3, {2, 1});

  timed("identities", [&] {
    ParamRng rng(seed);
    return suite_identities(3, 50, rng);
  });
  timed("factorizations", [&] {
    ParamRng rng(seed + 1);
    return gkl_suite(3, w0_3, s1, 25, rng);
  });
  timed("chart J=0", [&] {
    ParamRng rng(seed + 2);
    return suite_chart_containment(sl3_e, e3, w0_3, 20, rng);
  });
  timed("chart J={1}", [&] {
    ParamRng rng(seed + 3);
    return suite_chart_containment(sl3_1, s1, s2s1, 20, rng);
  });
  timed("product J=0", [&] {
    ParamRng rng(seed + 4);
    return suite_product_structure(sl3_e, e3, s1, w0_3, 10, rng);
  });
  timed("product J={1}", [&] {
    ParamRng rng(seed + 5);
    auto mid = twisted_interval_perm(3, {1}, s1, s2s1);
    Perm u = mid.size() > 2 ? mid[1] : s1;
    return suite_product_structure(sl3_1, s1, u, s2s1, 10, rng);
  });
  timed("closure J=0", [&] { return suite_closure_poset(sl3_e, e3, w0_3); });
  timed("closure J={1}", [&] { return suite_closure_poset(sl3_1, s1, s2s1); });
  timed("orders a2", [&] { return order_reduction_suite("a2", 3); });
  timed("posets a2", [&] { return poset_law_suite("a2", 3, {{}, {0}, {1}, {0, 1}}, 4); });

  if (profile == "full") {
    LeviContext sl4_e = make_levi(4, {});
    LeviContext sl4_2 = make_levi(4, {2});
    Perm e4 = perm_identity(4);
    Perm w0_4 = perm_from_gens(4, {1, 2, 1, 3, 2, 1});
    timed("identities sl4", [&] {
      ParamRng rng(seed + 10);
      return suite_identities(4, 20, rng);
    });
    timed("factorizations sl4", [&] {
      ParamRng rng(seed + 11);
      return gkl_suite(4, w0_4, perm_from_gens(4, {1, 2}), 10, rng);
    });
    timed("chart sl4", [&] {
      ParamRng rng(seed + 12);
      return suite_chart_containment(sl4_e, e4, w0_4, 5, rng);
    });
    timed("chart sl4 J={2}", [&] {
      ParamRng rng(seed + 13);
      Perm v = perm_from_gens(4, {2});
      Perm w = perm_from_gens(4, {1, 3, 2});
      return suite_chart_containment(sl4_2, v, w, 5, rng);
    });
    timed("closure sl4", [&] { return suite_closure_poset(sl4_e, e4, w0_4); });
    timed("orders a3", [&] { return order_reduction_suite("a3", 4); });
    timed("orders affine", [&] { return order_reduction_suite("affine_a1", 6); });
    timed("posets a3", [&] { return poset_law_suite("a3", 4, {{}, {0}, {1, 2}}, 4); });
    timed("posets affine", [&] { return poset_law_suite("affine_a1", 5, {{}, {0}, {1}}, 4); });
    timed("cartan hyperbolic", [&] {
      SuiteReport rep;
      rep.suite = "cartan_hyperbolic";
      CartanData h = builtin_cartan("hyperbolic_2_3");
      rep.add("valid", validate(h).ok);
      rep.add("symmetrizable", symmetrizer(h).has_value());
      return rep;
    });
  }
  return reports;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact toolkit for twisted Bruhat orders and totally nonnegative flag cells"};
  app.require_subcommand(1);
  int exit_code = 0;

  // ---- cartan ----
  auto* cartan = app.add_subcommand("cartan", "generalized Cartan matrix operations");
  cartan->require_subcommand(1);
  {
    auto* v = cartan->add_subcommand("validate", "check the Cartan matrix axioms");
    auto src = std::make_shared<std::string>();
    v->add_option("source", *src, "JSON file or builtin name")->required();
    v->callback([src, &exit_code] {
      CartanData d = load_cartan(*src);
      ValidationReport r = validate(d);
      json j = {{"ok", r.ok}, {"violations", r.violations}};
      auto sym = symmetrizer(d);
      if (sym) {
        json s = json::array();
        for (const auto& x : *sym) s.push_back(rat_to_string(x));
        j["symmetrizer"] = s;
      }
      std::cout << j.dump(2) << "\n";
      if (!r.ok) exit_code = 1;
    });

    auto* sh = cartan->add_subcommand("shriek", "one-node extension");
    auto src2 = std::make_shared<std::string>();
    sh->add_option("source", *src2, "JSON file or builtin name")->required();
    sh->callback([src2] { std::cout << cartan_to_json(extend_shriek(load_cartan(*src2))) << "\n"; });

    auto* gl = cartan->add_subcommand("glue", "glue two copies along a node subset");
    auto src3 = std::make_shared<std::string>();
    auto kset = std::make_shared<std::string>();
    gl->add_option("source", *src3, "JSON file or builtin name")->required();
    gl->add_option("--k", *kset, "comma-separated node labels to glue along");
    gl->callback([src3, kset] {
      CartanData d = load_cartan(*src3);
      GlueResult g = glue(d, split_csv(*kset));
      json j = json::parse(cartan_to_json(g.glued));
      j["flat"] = g.flat_map;
      j["sharp"] = g.sharp_map;
      std::cout << j.dump(2) << "\n";
    });
  }

  // ---- weyl ----
  auto* weyl = app.add_subcommand("weyl", "Weyl group computations");
  weyl->require_subcommand(1);
  {
    auto* en = weyl->add_subcommand("enum", "elements up to a length bound");
    auto src = std::make_shared<std::string>("a2");
    auto maxlen = std::make_shared<int>(3);
    en->add_option("--cartan", *src, "JSON file or builtin name");
    en->add_option("--maxlen", *maxlen, "length bound")->required();
    en->callback([src, maxlen] {
      auto ctx = std::make_shared<const CartanData>(load_cartan(*src));
      json arr = json::array();
      for (const auto& w : enumerate_upto(ctx, *maxlen)) arr.push_back(word_json(*ctx, w));
      std::cout << arr.dump(2) << "\n";
    });

    auto* lq = weyl->add_subcommand("leq", "Bruhat order comparison");
    auto src2 = std::make_shared<std::string>("a2");
    auto vs = std::make_shared<std::string>(), ws = std::make_shared<std::string>();
    lq->add_option("--cartan", *src2, "JSON file or builtin name");
    lq->add_option("--v", *vs, "word, comma-separated node labels")->required();
    lq->add_option("--w", *ws, "word, comma-separated node labels")->required();
    lq->callback([src2, vs, ws] {
      auto ctx = std::make_shared<const CartanData>(load_cartan(*src2));
      WeylElement v = word_to_element(ctx, parse_weyl_word(*ctx, *vs));
      WeylElement w = word_to_element(ctx, parse_weyl_word(*ctx, *ws));
      std::cout << (bruhat_leq(v, w) ? "true" : "false") << "\n";
    });
  }

  // ---- orders ----
  auto* orders = app.add_subcommand("orders", "twisted Bruhat orders and pair posets");
  orders->require_subcommand(1);
  {
    auto* tl = orders->add_subcommand("tleq", "twisted order comparison");
    auto src = std::make_shared<std::string>("a2");
    auto js = std::make_shared<std::string>();
    auto vs = std::make_shared<std::string>(), ws = std::make_shared<std::string>();
    tl->add_option("--cartan", *src, "JSON file or builtin name");
    tl->add_option("--j", *js, "comma-separated node labels");
    tl->add_option("--v", *vs, "word")->required();
    tl->add_option("--w", *ws, "word")->required();
    tl->callback([src, js, vs, ws] {
      auto ctx = std::make_shared<const CartanData>(load_cartan(*src));
      std::vector<int> J;
      for (const auto& l : split_csv(*js)) J.push_back(ctx->node_index(l));
      WeylElement v = word_to_element(ctx, parse_weyl_word(*ctx, *vs));
      WeylElement w = word_to_element(ctx, parse_weyl_word(*ctx, *ws));
      std::cout << (twisted_leq(v, w, J) ? "true" : "false") << "\n";
    });

    auto* po = orders->add_subcommand("poset", "pair poset below (v,w)");
    auto src2 = std::make_shared<std::string>("a2");
    auto kind = std::make_shared<std::string>("jq");
    auto js2 = std::make_shared<std::string>(), ks = std::make_shared<std::string>();
    auto vs2 = std::make_shared<std::string>(), ws2 = std::make_shared<std::string>();
    auto out = std::make_shared<std::string>();
    auto bottom = std::make_shared<bool>(false);
    po->add_option("--cartan", *src2, "JSON file or builtin name");
    po->add_option("--kind", *kind, "jq or qk")->check(CLI::IsMember({"jq", "qk"}));
    po->add_option("--j", *js2, "node labels for the twist");
    po->add_option("--k", *ks, "node labels for the projection");
    po->add_option("--v", *vs2, "word")->required();
    po->add_option("--w", *ws2, "word")->required();
    po->add_option("--out", *out, "output path (default stdout)");
    po->add_flag("--bottom", *bottom, "adjoin a minimum at rank -1");
    po->callback([src2, kind, js2, ks, vs2, ws2, out, bottom] {
      auto ctx = std::make_shared<const CartanData>(load_cartan(*src2));
      WeylElement v = word_to_element(ctx, parse_weyl_word(*ctx, *vs2));
      WeylElement w = word_to_element(ctx, parse_weyl_word(*ctx, *ws2));
      if (*kind == "jq") {
        std::vector<int> J;
        for (const auto& l : split_csv(*js2)) J.push_back(ctx->node_index(l));
        write_output(*out, jq_poset_json(v, w, J, *bottom));
      } else {
        std::vector<int> K;
        for (const auto& l : split_csv(*ks)) K.push_back(ctx->node_index(l));
        write_output(*out, export_json(build_qk_poset(v, w, K)));
      }
    });
  }

  // ---- topo ----
  auto* topo = app.add_subcommand("topo", "poset topology checks");
  topo->require_subcommand(1);
  {
    auto* ch = topo->add_subcommand("check", "run checks on a poset JSON file");
    auto path = std::make_shared<std::string>();
    auto graded = std::make_shared<bool>(false), thin = std::make_shared<bool>(false);
    auto eulerian = std::make_shared<bool>(false), ball = std::make_shared<bool>(false);
    auto shelling = std::make_shared<bool>(false);
    ch->add_option("poset", *path, "poset JSON file")->required();
    ch->add_flag("--graded", *graded);
    ch->add_flag("--thin", *thin);
    ch->add_flag("--eulerian", *eulerian);
    ch->add_flag("--ball", *ball);
    ch->add_flag("--shelling", *shelling);
    ch->callback([path, graded, thin, eulerian, ball, shelling, &exit_code] {
      GradedPoset p = poset_from_json(read_file(*path));
      json j;
      bool ok = true;
      auto record = [&](const std::string& name, bool pass) {
        j[name] = pass;
        ok = ok && pass;
      };
      if (*graded) record("graded", is_graded(p));
      if (*thin) record("thin", is_thin(p));
      if (*eulerian) record("eulerian", is_eulerian(p));
      if (*ball) {
        try {
          EulerReport e = ball_euler_check(p);
          record("ball", e.ball_ok);
          record("boundary_sphere", e.sphere_ok);
          j["cell_sum"] = e.cell_sum;
          j["boundary_sum"] = e.boundary_sum;
        } catch (const std::exception& e) {
          record("ball", false);
          j["ball_error"] = e.what();
        }
      }
      if (*shelling) {
        ShellingResult s = brute_shelling(p);
        j["shelling"] = s.status == ShellingResult::Status::shellable     ? "shellable"
                        : s.status == ShellingResult::Status::not_shellable ? "not_shellable"
                                                                            : "skipped";
        if (s.status == ShellingResult::Status::not_shellable) ok = false;
      }
      std::cout << j.dump(2) << "\n";
      if (!ok) exit_code = 1;
    });
  }

  // ---- sl ----
  auto* sl = app.add_subcommand("sl", "SL(m) matrix-level operations");
  sl->require_subcommand(1);
  {
    auto* ce = sl->add_subcommand("cell", "cell indices of a flag");
    auto n = std::make_shared<int>(3);
    auto mpath = std::make_shared<std::string>();
    auto js = std::make_shared<std::string>();
    ce->add_option("--n", *n, "matrix size")->required();
    ce->add_option("--matrix", *mpath, "matrix JSON file")->required();
    ce->add_option("--j", *js, "Levi subset (1-based generators) for twisted indices");
    ce->callback([n, mpath, js] {
      RatMat g = rat_mat_from_json(read_file(*mpath));
      if (g.rows != *n) throw CLI::ValidationError("matrix size differs from --n");
      json j;
      j["bruhat"] = gens_json(bruhat_cell(g));
      j["birkhoff"] = gens_json(birkhoff_cell(g));
      if (!js->empty()) {
        LeviContext ctx = make_levi(*n, parse_ints(*js));
        auto cell = twisted_cell(ctx, g);
        j["twisted"] = {{"v", gens_json(cell.first)}, {"w", gens_json(cell.second)}};
      }
      std::cout << j.dump(2) << "\n";
    });

    auto* chv = sl->add_subcommand("chart", "chart membership of a flag");
    auto us = std::make_shared<std::string>();
    auto mpath2 = std::make_shared<std::string>();
    auto n2 = std::make_shared<int>(3);
    chv->add_option("--n", *n2, "matrix size");
    chv->add_option("--u", *us, "chart word, comma-separated generators")->required();
    chv->add_option("--matrix", *mpath2, "matrix JSON file")->required();
    chv->callback([us, mpath2, n2] {
      RatMat g = rat_mat_from_json(read_file(*mpath2));
      Perm u = perm_from_gens(g.rows, parse_ints(*us));
      (void)n2;
      std::cout << (chart_membership(u, g) ? "true" : "false") << "\n";
    });
  }

  // ---- tp ----
  auto* tp = app.add_subcommand("tp", "positivity suites for twisted cells");
  tp->require_subcommand(1);
  {
    auto* su = tp->add_subcommand("suite", "run a verification suite");
    auto which = std::make_shared<std::string>();
    auto n = std::make_shared<int>(3);
    auto js = std::make_shared<std::string>();
    auto vs = std::make_shared<std::string>(), us = std::make_shared<std::string>(),
         ws = std::make_shared<std::string>();
    auto samples = std::make_shared<int>(100);
    auto seed = std::make_shared<std::uint64_t>(7);
    auto out = std::make_shared<std::string>();
    su->add_option("--which", *which, "chart|product|closure|identities")
        ->required()
        ->check(CLI::IsMember({"chart", "product", "closure", "identities"}));
    su->add_option("--n", *n, "matrix size");
    su->add_option("--j", *js, "Levi subset, 1-based generators");
    su->add_option("--v", *vs, "bottom word, comma-separated generators");
    su->add_option("--u", *us, "middle word (product suite)");
    su->add_option("--w", *ws, "top word");
    su->add_option("--samples", *samples, "samples per check");
    su->add_option("--seed", *seed, "random seed");
    su->add_option("--out", *out, "report path (default stdout)");
    su->callback([which, n, js, vs, us, ws, samples, seed, out, &exit_code] {
      LeviContext ctx = make_levi(*n, parse_ints(*js));
      ParamRng rng(*seed);
      SuiteReport rep;
      if (*which == "identities") {
        rep = suite_identities(*n, *samples, rng);
      } else {
        Perm v = perm_from_gens(*n, parse_ints(*vs));
        Perm w = perm_from_gens(*n, parse_ints(*ws));
        if (*which == "chart")
          rep = suite_chart_containment(ctx, v, w, *samples, rng);
        else if (*which == "closure")
          rep = suite_closure_poset(ctx, v, w);
        else
          rep = suite_product_structure(ctx, v, perm_from_gens(*n, parse_ints(*us)), w,
                                        *samples, rng);
      }
      rep.seed = *seed;
      rep.config_hash = sha1_hex("tp suite which=" + *which + " n=" + std::to_string(*n) +
                                 " j=" + *js + " v=" + *vs + " u=" + *us + " w=" + *ws +
                                 " samples=" + std::to_string(*samples) +
                                 " seed=" + std::to_string(*seed));
      std::string text = report_to_json({rep});
      write_output(*out, text);
      if (!out->empty()) {
        int passed = 0;
        for (const auto& c : rep.checks) passed += c.pass ? 1 : 0;
        std::cout << rep.suite << ": " << passed << "/" << rep.checks.size() << " checks pass\n";
      }
      if (!rep.all_pass()) exit_code = 1;
    });
  }

  // ---- verify ----
  auto* verify = app.add_subcommand("verify", "run the bundled verification profiles");
  {
    auto profile = std::make_shared<std::string>("quick");
    auto seed = std::make_shared<std::uint64_t>(7);
    auto out = std::make_shared<std::string>();
    verify->add_option("--profile", *profile, "quick or full")
        ->check(CLI::IsMember({"quick", "full"}));
    verify->add_option("--seed", *seed, "random seed");
    verify->add_option("--out", *out, "report path");
    verify->callback([profile, seed, out, &exit_code] {
      std::vector<std::pair<std::string, double>> timings;
      std::vector<SuiteReport> reports = run_verify(*profile, *seed, timings);
      std::string cfg = "verify profile=" + *profile + " seed=" + std::to_string(*seed);
      for (auto& r : reports) {
        r.seed = *seed;
        r.config_hash = sha1_hex(cfg);
      }
      bool all = true;
      for (size_t i = 0; i < reports.size(); ++i) {
        const auto& r = reports[i];
        int passed = 0;
        for (const auto& c : r.checks) passed += c.pass ? 1 : 0;
        std::cout << (r.all_pass() ? "PASS " : "FAIL ") << r.suite << " (" << passed << "/"
                  << r.checks.size() << ")";
        if (*profile == "full")
          std::cout << "  [" << static_cast<int>(timings[i].second * 1000) << " ms]";
        std::cout << "\n";
        if (!r.all_pass()) {
          all = false;
          for (const auto& c : r.checks)
            if (!c.pass) std::cout << "  failed: " << c.name << " " << c.witness << "\n";
        }
      }
      if (!out->empty()) write_output(*out, report_to_json(reports));
      if (!all) exit_code = 1;
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return exit_code;
}
