#include "cli.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "commgraph/commuting.hpp"
#include "commgraph/graphalg.hpp"
#include "commgraph/notation.hpp"
#include "commgraph/unified.hpp"
#include "commgraph/witness.hpp"

namespace commgraph::cli {

  namespace {

    using json = nlohmann::json;

    constexpr char const* kGrammarHint
        = "element grammars (1-based labels, optional ^k suffix):\n"
          "  tabular      \"2 - 4 1\"\n"
          "  chain/cycle  \"[1 2 3](3 4)\"\n"
          "  idempotent   \"{2 6 -> 2}{3 4 -> 3}\"";

    class UsageError : public std::runtime_error {
     public:
      using std::runtime_error::runtime_error;
    };

    struct Options {
      std::optional<std::size_t>   n;
      std::string                  semigroup = "P";
      std::string                  a, b;
      std::string                  universe = "P";
      std::string                  strategy = "auto";
      std::string                  mode;
      std::string                  method = "bfs";
      std::string                  labels = "numeric";
      std::optional<std::size_t>   cap;
      std::vector<std::string>     seeds;
      std::string                  format   = "text";
      int                          workers  = 0;
      bool                         long_run = false;
      std::optional<std::uint64_t> budget_elems;
      std::optional<std::uint64_t> budget_nodes;
    };

    struct Response {
      json                       inputs = json::object();
      json                       result = json::object();
      std::optional<std::string> strategy;
      std::ostringstream         text;
      std::optional<std::string> dot;
      int                        code = 0;
    };

    struct Context {
      Options const& opt;
      Budget         budget;
      Parallelism    par;
    };

    std::string tab(PTrans const& t) {
      return format_tabular(t);
    }

    json elements_json(std::vector<PTrans> const& elems) {
      json out = json::array();
      for (auto const& t : elems) {
        out.push_back(tab(t));
      }
      return out;
    }

    bool is_prime(std::size_t n) {
      if (n < 2) {
        return false;
      }
      for (std::size_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
          return false;
        }
      }
      return true;
    }

    std::size_t resolve_n(Options const& opt, std::vector<std::string> const& texts) {
      if (opt.n) {
        return *opt.n;
      }
      for (auto const& t : texts) {
        if (!t.empty()) {
          return parse_element(t).degree();
        }
      }
      throw UsageError("--n is required");
    }

    PTrans element(Options const& opt, std::string const& text, std::size_t n,
                   char const* flag) {
      if (text.empty()) {
        throw UsageError(std::string(flag) + " is required");
      }
      return parse_element(text, n);
    }

    void require_long_run(Context const& ctx, bool needed, std::string const& estimate) {
      if (!needed) {
        return;
      }
      std::cerr << "estimated cost: " << estimate << "\n";
      if (!ctx.opt.long_run) {
        throw UsageError("this run is long; pass --long-run to start it");
      }
    }

    std::string universe_estimate(std::size_t n) {
      std::ostringstream s;
      s << universe_size(n) << " element ids ((n+1)^n) in the visited set, one "
        << "backtracking centralizer per reached vertex";
      return s.str();
    }

    Semigroup semigroup_of(Options const& opt) {
      return semigroup_from_string(opt.semigroup);
    }

    void print_elements(std::ostream& out, std::vector<PTrans> const& elems) {
      for (auto const& t : elems) {
        out << "  " << tab(t) << "\n";
      }
    }

    void cmd_center(Context& ctx, Response& r) {
      auto const& o = ctx.opt;
      if (!o.n) {
        throw UsageError("--n is required");
      }
      Semigroup  sg   = semigroup_of(o);
      CenterMode mode = o.mode == "brute" ? CenterMode::brute : CenterMode::analytic;
      if (!o.mode.empty() && o.mode != "brute" && o.mode != "analytic") {
        throw UsageError("--mode must be analytic or brute");
      }
      auto z = center(*o.n, sg, mode, ctx.budget, ctx.par);
      r.inputs = {{"n", *o.n}, {"semigroup", to_string(sg)},
                  {"mode", mode == CenterMode::brute ? "brute" : "analytic"}};
      r.result["elements"] = elements_json(z);
      r.result["size"]     = z.size();
      if (mode == CenterMode::brute) {
        bool agree = z == center(*o.n, sg, CenterMode::analytic, ctx.budget, ctx.par);
        r.result["agrees_with_analytic"] = agree;
        r.code                           = agree ? 0 : 1;
      }
      r.text << "center of " << (sg == Semigroup::full ? "T" : "P") << "(" << *o.n
             << "), " << z.size() << " elements:\n";
      print_elements(r.text, z);
    }

    void cmd_commutes(Context& ctx, Response& r) {
      auto const& o = ctx.opt;
      std::size_t n = resolve_n(o, {o.a, o.b});
      PTrans      a = element(o, o.a, n, "--a");
      PTrans      b = element(o, o.b, n, "--b");
      bool        c = commutes(a, b);
      r.inputs      = {{"n", n}, {"a", tab(a)}, {"b", tab(b)}};
      r.result      = {{"commutes", c}, {"ab", tab(a * b)}, {"ba", tab(b * a)}};
      r.text << (c ? "commute" : "do not commute") << "\n"
             << "ab = " << tab(a * b) << "\nba = " << tab(b * a) << "\n";
    }

    void cmd_centralizer(Context& ctx, Response& r) {
      auto const& o        = ctx.opt;
      std::size_t n        = resolve_n(o, {o.a});
      PTrans      a        = element(o, o.a, n, "--a");
      Universe    u        = universe_from_string(o.universe);
      Strategy    strategy = resolve(strategy_from_string(o.strategy), n);
      auto        c        = centralizer(a, u, strategy, ctx.budget, ctx.par);
      r.inputs   = {{"n", n}, {"a", tab(a)}, {"universe", to_string(u)}};
      r.strategy = std::string(to_string(strategy));
      r.result   = {{"elements", elements_json(c)}, {"size", c.size()}};
      r.text << c.size() << " elements commute with " << tab(a) << ":\n";
      print_elements(r.text, c);
    }

    void cmd_distance(Context& ctx, Response& r) {
      auto const& o        = ctx.opt;
      std::size_t n        = resolve_n(o, {o.a, o.b});
      CommGraph   g(n, semigroup_of(o));
      PTrans      a        = element(o, o.a, n, "--a");
      PTrans      b        = element(o, o.b, n, "--b");
      Strategy    strategy = resolve(strategy_from_string(o.strategy), n);
      require_long_run(ctx, n >= 6, universe_estimate(n));
      Distance d = bfs_distance(g, a, b, o.cap, strategy, ctx.budget, ctx.par);
      r.inputs   = {{"n", n}, {"semigroup", to_string(g.semigroup())},
                    {"a", tab(a)}, {"b", tab(b)}};
      if (o.cap) {
        r.inputs["cap"] = *o.cap;
      }
      r.strategy = std::string(to_string(strategy));
      char const* kind = d.kind == Distance::Kind::finite     ? "finite"
                         : d.kind == Distance::Kind::infinite ? "infinite"
                                                              : "exceeds_cap";
      r.result = {{"distance", d.to_string()}, {"kind", kind}};
      if (d.kind == Distance::Kind::finite) {
        r.result["value"] = d.value;
      }
      if (d.kind == Distance::Kind::infinite && !is_prime(n)) {
        r.code = 1;
      }
      r.text << d.to_string() << "\n";
    }

    void cmd_path(Context& ctx, Response& r) {
      auto const& o = ctx.opt;
      std::size_t n = resolve_n(o, {o.a, o.b});
      CommGraph   g(n, semigroup_of(o));
      PTrans      a = element(o, o.a, n, "--a");
      PTrans      b = element(o, o.b, n, "--b");
      r.inputs = {{"n", n}, {"semigroup", to_string(g.semigroup())}, {"a", tab(a)},
                  {"b", tab(b)}, {"method", o.method}};
      std::optional<PathCertificate> cert;
      if (o.method == "bfs") {
        Strategy strategy = resolve(strategy_from_string(o.strategy), n);
        require_long_run(ctx, n >= 6, universe_estimate(n));
        r.strategy = std::string(to_string(strategy));
        cert       = shortest_path(g, a, b, strategy, ctx.budget, ctx.par);
      } else if (o.method == "bound") {
        auto bp                 = upper_bound_path(g, a, b);
        r.result["bound"]       = bp.bound;
        r.result["construction"] = to_string(bp.construction);
        cert                    = bp.certificate;
      } else {
        throw UsageError("--method must be bfs or bound");
      }
      if (!cert) {
        r.result["found"] = false;
        r.code            = is_prime(n) ? 0 : 1;
        r.text << "no path\n";
        return;
      }
      bool ok             = verify_path(g, *cert);
      r.result["found"]    = true;
      r.result["verified"] = ok;
      r.result["length"]   = cert->claimed_length;
      r.result["vertices"] = elements_json(cert->vertices);
      r.code               = ok ? 0 : 1;
      r.text << "length " << cert->claimed_length << (ok ? " (verified)" : " (INVALID)")
             << "\n";
      print_elements(r.text, cert->vertices);
    }

    bool full_cycles_isolated(VertexGraph const& vg, ComponentSummary const& cs) {
      std::vector<int> has_cycle(cs.count, 0), has_other(cs.count, 0);
      for (std::size_t i = 0; i < vg.size(); ++i) {
        auto const& t = vg.vertex(i);
        bool        c = is_permutation(t) && is_full_cycle(t);
        (c ? has_cycle : has_other)[cs.component_of[i]] = 1;
      }
      for (std::size_t k = 0; k < cs.count; ++k) {
        if (has_cycle[k] && has_other[k]) {
          return false;
        }
      }
      return true;
    }

    void cmd_components(Context& ctx, Response& r) {
      auto const& o = ctx.opt;
      if (!o.n) {
        throw UsageError("--n is required");
      }
      CommGraph g(*o.n, semigroup_of(o));
      Strategy  strategy = resolve(strategy_from_string(o.strategy), *o.n);
      auto      vg       = VertexGraph::build(g, strategy, ctx.budget, ctx.par);
      auto      cs       = connected_components(vg);
      bool      isolated = full_cycles_isolated(vg, cs);
      r.inputs   = {{"n", *o.n}, {"semigroup", to_string(g.semigroup())}};
      r.strategy = std::string(to_string(strategy));
      r.result   = {{"vertex_count", vg.size()},
                    {"edge_count", vg.edge_count()},
                    {"component_count", cs.count},
                    {"component_sizes", cs.sizes},
                    {"representatives", elements_json(cs.representatives)},
                    {"connected", cs.count == 1},
                    {"full_cycle_components_pure", isolated}};
      bool predicted = !is_prime(*o.n);
      r.code         = (cs.count == 1) == predicted ? 0 : 1;
      r.text << vg.size() << " vertices, " << cs.count << " component"
             << (cs.count == 1 ? "" : "s") << "\n";
      for (std::size_t k = 0; k < cs.count; ++k) {
        r.text << "  size " << cs.sizes[k] << ", least element "
               << tab(cs.representatives[k]) << "\n";
      }
    }

    void cmd_diameter(Context& ctx, Response& r) {
      auto const& o = ctx.opt;
      if (!o.n) {
        throw UsageError("--n is required");
      }
      std::size_t const n = *o.n;
      CommGraph         g(n, semigroup_of(o));
      Strategy          strategy = resolve(strategy_from_string(o.strategy), n);
      DiameterMode      mode     = DiameterMode::exact;
      if (o.mode == "lower" || o.mode == "lower_only") {
        mode = DiameterMode::lower_only;
      } else if (!o.mode.empty() && o.mode != "exact") {
        throw UsageError("--mode must be exact or lower");
      }
      std::vector<PTrans> seeds;
      for (auto const& s : o.seeds) {
        seeds.push_back(parse_element(s, n));
      }
      if (mode == DiameterMode::lower_only) {
        if (seeds.empty()) {
          seeds.push_back(witness_pair(n).alpha);
        }
        require_long_run(ctx, n >= 6, universe_estimate(n));
      }
      auto rep   = diameter(g, mode, seeds, strategy, ctx.budget, ctx.par);
      r.inputs   = {{"n", n},
                    {"semigroup", to_string(g.semigroup())},
                    {"mode", mode == DiameterMode::exact ? "exact" : "lower_only"},
                    {"seeds", elements_json(seeds)}};
      r.strategy = std::string(to_string(strategy));
      r.result   = {{"connected", rep.connected},
                    {"diameter", rep.diameter},
                    {"component_count", rep.component_count},
                    {"component_sizes", rep.component_sizes}};
      if (rep.witness_pair) {
        r.result["witness_pair"]
            = {tab(rep.witness_pair->first), tab(rep.witness_pair->second)};
        if (mode == DiameterMode::exact) {
          auto d = bfs_distance(g, rep.witness_pair->first, rep.witness_pair->second,
                                std::nullopt, strategy, ctx.budget, ctx.par);
          bool ok                         = d == Distance::finite(rep.diameter);
          r.result["witness_rechecked"] = ok;
          if (!ok) {
            r.code = 1;
          }
        }
      } else {
        r.result["witness_pair"] = nullptr;
      }
      if (!rep.connected && !is_prime(n)) {
        r.code = 1;
      }
      if (rep.connected) {
        r.text << (mode == DiameterMode::exact ? "diameter " : "diameter >= ")
               << rep.diameter << "\n";
        if (rep.witness_pair) {
          r.text << "  realized by " << tab(rep.witness_pair->first) << " and "
                 << tab(rep.witness_pair->second) << "\n";
        }
      } else {
        r.text << "disconnected";
        if (rep.component_count > 0) {
          r.text << ", " << rep.component_count << " components";
        }
        r.text << "\n";
      }
    }

    void cmd_gamma(Context& ctx, Response& r) {
      auto const& o = ctx.opt;
      std::size_t n = resolve_n(o, {o.a, o.b});
      PTrans      a = element(o, o.a, n, "--a");
      PTrans      b = element(o, o.b, n, "--b");
      auto        u = build_unified(a, b);
      bool        c = is_connected(u);
      auto cert     = certify_no_partial_connector(a, b);
      std::optional<std::vector<std::string>> labels;
      if (o.labels == "family") {
        labels = witness_pair(n).labels;
      } else if (o.labels != "numeric") {
        throw UsageError("--labels must be numeric or family");
      }
      r.inputs  = {{"n", n}, {"a", tab(a)}, {"b", tab(b)}};
      json edges = json::array();
      for (auto [x, y] : u.edges()) {
        edges.push_back({x + 1, y + 1});
      }
      r.result = {{"edges", edges}, {"connected", c},
                  {"certificate", to_string(cert.verdict)}};
      r.dot    = "// connected=" + std::string(c ? "true" : "false") + "\n"
              + export_dot(u, labels);
      r.text << "connected=" << (c ? "true" : "false") << ", " << u.edges().size()
             << " edges, certificate " << to_string(cert.verdict) << "\n";
      for (auto [x, y] : u.edges()) {
        r.text << "  " << x + 1 << " -- " << y + 1 << "\n";
      }
    }

    void cmd_witness(Context& ctx, Response& r) {
      auto const& o = ctx.opt;
      if (!o.n) {
        throw UsageError("--n is required");
      }
      auto      c = witness_pair(*o.n);
      CommGraph g(c.n, Semigroup::all_partial);
      bool ok = is_full(c.alpha) && is_full(c.beta) && g.is_vertex(c.alpha)
                && g.is_vertex(c.beta) && !commutes(c.alpha, c.beta);
      r.inputs = {{"n", c.n}};
      r.result = {{"family", to_string(c.family)},
                  {"m", c.m},
                  {"alpha", tab(c.alpha)},
                  {"beta", tab(c.beta)},
                  {"forced_e", c.forced_e ? json(tab(*c.forced_e)) : json(nullptr)},
                  {"forced_f", c.forced_f ? json(tab(*c.forced_f)) : json(nullptr)},
                  {"expected_lower_bound", c.expected_lower_bound},
                  {"labels", c.labels},
                  {"invariants_hold", ok}};
      r.code = ok ? 0 : 1;
      r.text << "family " << to_string(c.family) << "\n"
             << "alpha = " << tab(c.alpha) << "\nbeta  = " << tab(c.beta) << "\n";
      if (c.forced_e) {
        r.text << "e     = " << format_idempotent(*c.forced_e) << "\n";
      }
      if (c.forced_f) {
        r.text << "f     = " << format_idempotent(*c.forced_f) << "\n";
      }
      r.text << "expected lower bound " << c.expected_lower_bound << "\n";
    }

    json replay_json(ReplayReport const& rep) {
      json steps = json::array();
      for (auto const& s : rep.steps) {
        steps.push_back({{"name", s.name},
                         {"claim", s.claim},
                         {"verdict", s.verdict == StepVerdict::pass ? "pass" : "fail"},
                         {"evidence", s.evidence},
                         {"counterexample", s.counterexample ? json(*s.counterexample)
                                                             : json(nullptr)}});
      }
      return {{"n", rep.n},
              {"family", to_string(rep.family)},
              {"steps", steps},
              {"bound", rep.bound},
              {"passed", rep.passed}};
    }

    void cmd_replay(Context& ctx, Response& r) {
      auto const& o = ctx.opt;
      if (!o.n) {
        throw UsageError("--n is required");
      }
      auto c = witness_pair(*o.n);
      if (o.long_run && universe_size(c.n) > ctx.budget.scan_elems) {
        std::cerr << "estimated cost: exhaustive sweep of " << universe_size(c.n)
                  << " elements of P(X)\n";
      }
      ReplayOptions opts;
      opts.long_run = o.long_run;
      opts.par      = ctx.par;
      auto rep      = replay_lower_bound(c, ctx.budget, opts);
      r.inputs      = {{"n", c.n}, {"long_run", o.long_run}};
      r.result      = replay_json(rep);
      r.code        = rep.passed ? 0 : 1;
      for (auto const& s : rep.steps) {
        r.text << (s.verdict == StepVerdict::pass ? "[pass] " : "[FAIL] ") << s.name
               << ": " << s.claim << "\n";
        for (auto const& e : s.evidence) {
          r.text << "         " << e << "\n";
        }
        if (s.counterexample) {
          r.text << "         counterexample " << *s.counterexample << "\n";
        }
      }
      r.text << (rep.passed ? "bound " + std::to_string(rep.bound) : std::string("failed"))
             << "\n";
    }

    void cmd_oracle(Context& ctx, Response& r) {
      auto const& o = ctx.opt;
      std::size_t n = resolve_n(o, {o.a, o.b});
      PTrans      a = element(o, o.a, n, "--a");
      PTrans      b = element(o, o.b, n, "--b");
      auto        connectors = partial_connector_bruteforce(a, b, ctx.budget, ctx.par);
      r.inputs               = {{"n", n}, {"a", tab(a)}, {"b", tab(b)}};
      bool invariant         = true;
      std::optional<UnifiedGraph> u;
      std::optional<ConnectorCertificate> cert;
      if (is_full(a) && is_full(b)) {
        u    = build_unified(a, b);
        cert = certify_no_partial_connector(a, b);
        for (auto const& t : connectors) {
          invariant = invariant && domain_respects_edges(*u, t);
        }
      }
      bool consistent = !cert || cert->verdict != ConnectorVerdict::proven_empty_only
                        || connectors == std::vector<PTrans>{empty(n)};
      r.result = {{"connectors", elements_json(connectors)},
                  {"size", connectors.size()},
                  {"consistent_with_certificate", consistent},
                  {"edge_invariant", invariant}};
      if (cert) {
        r.result["gamma_connected"] = cert->gamma_connected;
        r.result["certificate"]     = to_string(cert->verdict);
      } else {
        r.result["gamma_connected"] = nullptr;
        r.result["certificate"]     = nullptr;
      }
      r.code = consistent && invariant ? 0 : 1;
      r.text << connectors.size() << " strictly partial maps commute with both\n";
      if (cert) {
        r.text << "certificate " << to_string(cert->verdict)
               << (consistent ? " (consistent)" : " (CONTRADICTED)") << "\n";
      }
      print_elements(r.text, connectors);
    }

    struct Command {
      char const*                              name;
      char const*                              help;
      std::function<void(Context&, Response&)> run;
    };

  }  // namespace

  int run(int argc, char** argv) {
    CLI::App app{"Commuting graphs of partial transformation semigroups"};
    app.require_subcommand(1);
    Options opt;

    std::vector<Command> commands{
        {"center", "center of P(X) or T(X)", cmd_center},
        {"commutes", "test whether two elements commute", cmd_commutes},
        {"centralizer", "elements of a universe commuting with --a", cmd_centralizer},
        {"distance", "graph distance between --a and --b", cmd_distance},
        {"path", "verified path between --a and --b", cmd_path},
        {"components", "connected components of the commuting graph", cmd_components},
        {"diameter", "diameter of the commuting graph", cmd_diameter},
        {"gamma", "unified graph of two full maps", cmd_gamma},
        {"witness", "named lower-bound witness pair for --n", cmd_witness},
        {"replay", "machine-check the lower-bound argument for --n", cmd_replay},
        {"oracle", "brute-force strictly partial common centralizer", cmd_oracle},
    };

    std::map<std::string, CLI::App*> subs;
    for (auto const& c : commands) {
      CLI::App* s = app.add_subcommand(c.name, c.help);
      s->add_option("--n", opt.n, "ground-set size");
      s->add_option("--semigroup", opt.semigroup, "P (all partial) or T (full)");
      s->add_option("--a", opt.a, "first element");
      s->add_option("--b", opt.b, "second element");
      s->add_option("--universe", opt.universe,
                    "P, T, S or strictly_partial (centralizer)");
      s->add_option("--strategy", opt.strategy, "auto, scan or backtrack");
      s->add_option("--mode", opt.mode, "center: analytic|brute; diameter: exact|lower");
      s->add_option("--method", opt.method, "path: bfs or bound");
      s->add_option("--labels", opt.labels, "gamma DOT labels: numeric or family");
      s->add_option("--cap", opt.cap, "distance cap for early exit");
      s->add_option("--seed", opt.seeds, "lower-bound diameter seed (repeatable)");
      s->add_option("--format", opt.format, "text, json or dot")
          ->check(CLI::IsMember({"text", "json", "dot"}));
      s->add_option("--workers", opt.workers, "worker threads (0: runtime default)");
      s->add_flag("--long-run", opt.long_run, "allow long exhaustive runs");
      s->add_option("--budget-elems", opt.budget_elems,
                    "override every element-count guard");
      s->add_option("--budget-nodes", opt.budget_nodes, "backtracking node budget");
      subs[c.name] = s;
    }

    try {
      app.parse(argc, argv);
    } catch (CLI::ParseError const& e) {
      int code = app.exit(e);
      return code == 0 ? 0 : 2;
    }

    Command const* chosen = nullptr;
    for (auto const& c : commands) {
      if (subs[c.name]->parsed()) {
        chosen = &c;
      }
    }

    Context ctx{opt, Budget::from_env(), Parallelism{opt.workers}};
    if (opt.budget_elems) {
      auto v                              = *opt.budget_elems;
      ctx.budget.brute_center_elems         = v;
      ctx.budget.scan_elems                 = v;
      ctx.budget.materialize_elems          = v;
      ctx.budget.exact_diameter_elems       = v;
      ctx.budget.implicit_bfs_elems         = v;
      ctx.budget.bruteforce_connector_elems = v;
    }
    if (opt.budget_nodes) {
      ctx.budget.backtrack_nodes = *opt.budget_nodes;
    }

    Response r;
    auto     start = std::chrono::steady_clock::now();
    try {
      if (opt.format == "dot" && std::string(chosen->name) != "gamma") {
        throw UsageError("--format dot is only available for gamma");
      }
      chosen->run(ctx, r);
    } catch (UsageError const& e) {
      std::cerr << "usage error: " << e.what() << "\n";
      return 2;
    } catch (commgraph::ParseError const& e) {
      std::cerr << "parse error: " << e.what() << "\n" << kGrammarHint << "\n";
      return 2;
    } catch (commgraph::BudgetExceeded const& e) {
      std::cerr << "budget exceeded: " << e.what()
                << "\n(raise it with --budget-elems or COMMGRAPH_BUDGET_ELEMS)\n";
      return 2;
    } catch (commgraph::Error const& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 2;
    }
    double elapsed = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - start)
                         .count();

    if (opt.format == "json") {
      json out{{"command", chosen->name},
               {"inputs", r.inputs},
               {"result", r.result},
               {"exit_code", r.code},
               {"elapsed_ms", std::round(elapsed * 1000) / 1000}};
      if (r.strategy) {
        out["strategy"] = *r.strategy;
      }
      std::cout << out.dump(2) << "\n";
    } else if (opt.format == "dot") {
      std::cout << *r.dot;
    } else {
      std::cout << r.text.str();
    }
    return r.code;
  }

}  // namespace commgraph::cli
