#include <algorithm>
#include <sstream>

#include "commgraph/detail/scan.hpp"
#include "commgraph/notation.hpp"
#include "commgraph/unified.hpp"
#include "commgraph/witness.hpp"

namespace commgraph {

  namespace {

    std::string tab(PTrans const& t) {
      return format_tabular(t);
    }

    std::string set_text(std::vector<PTrans> const& elems) {
      std::string out = "{";
      for (std::size_t i = 0; i < elems.size(); ++i) {
        out += (i ? ", " : "") + std::string("[") + tab(elems[i]) + "]";
      }
      return out + "}";
    }

    // First point where a*b and b*a differ, as evidence text.
    std::string difference_text(PTrans const& a, PTrans const& b,
                                std::string const& an, std::string const& bn) {
      PTrans ab = a * b, ba = b * a;
      for (std::size_t x = 0; x < a.degree(); ++x) {
        if (ab[x] != ba[x]) {
          auto show = [](Point p) {
            return p == kUndef ? std::string("-") : std::to_string(p + 1);
          };
          return "at " + std::to_string(x + 1) + ": " + an + " " + bn + " gives "
                 + show(ab[x]) + ", " + bn + " " + an + " gives " + show(ba[x]);
        }
      }
      return an + " and " + bn + " commute";
    }

    std::string power_name(std::size_t i) {
      return "alpha^" + std::to_string(i);
    }

    std::vector<PTrans> backtrack_common(std::vector<PTrans> const& gens,
                                         Universe                   u,
                                         Budget const&              budget) {
      return common_centralizer(gens, u, Strategy::backtrack, budget, Parallelism{1});
    }

    ReplayStep non_adjacent_step(WitnessCase const& c) {
      ReplayStep s;
      s.name  = "non_adjacent";
      s.claim = "alpha and beta are full non-central vertices that do not commute";
      CommGraph g(c.n, Semigroup::all_partial);
      bool ok = is_full(c.alpha) && is_full(c.beta) && g.is_vertex(c.alpha)
                && g.is_vertex(c.beta) && !commutes(c.alpha, c.beta);
      s.evidence.push_back("alpha = " + tab(c.alpha));
      s.evidence.push_back("beta = " + tab(c.beta));
      s.evidence.push_back(difference_text(c.alpha, c.beta, "alpha", "beta"));
      s.verdict = ok ? StepVerdict::pass : StepVerdict::fail;
      return s;
    }

    // Permutations commuting with t are {id} and strictly partial maps
    // commuting with t are {empty}.
    bool chain_cycle_exclusions(PTrans const& t, std::string const& name,
                                Budget const& budget, ReplayStep& s) {
      std::size_t const n     = t.degree();
      auto              perms = backtrack_common({t}, Universe::permutations, budget);
      auto part = backtrack_common({t}, Universe::strictly_partial, budget);
      bool ok   = perms == std::vector<PTrans>{identity(n)}
                && part == std::vector<PTrans>{empty(n)};
      s.evidence.push_back("permutations commuting with " + name + ": "
                           + set_text(perms));
      s.evidence.push_back("strictly partial maps commuting with " + name + ": "
                           + set_text(part));
      if (!ok && !s.counterexample) {
        for (auto const& u : perms) {
          if (!is_identity(u)) {
            s.counterexample = tab(u);
          }
        }
        for (auto const& u : part) {
          if (!is_empty(u)) {
            s.counterexample = tab(u);
          }
        }
      }
      return ok;
    }

    ReplayStep centralizer_step(WitnessCase const& c, Budget const& budget) {
      ReplayStep        s;
      std::size_t const n = c.n;
      s.name              = "centralizers";
      bool ok             = true;
      if (is_full_cycle(c.alpha)) {
        s.claim = "the centralizer of the cycle alpha in P(X) is the empty map "
                  "together with the powers of alpha; beta commutes with no "
                  "permutation but id and no strictly partial map but the empty map";
        auto found = backtrack_common({c.alpha}, Universe::all_partial, budget);
        std::vector<PTrans> expected{empty(n)};
        for (std::size_t k = 1; k <= n; ++k) {
          expected.push_back(power(c.alpha, k));
        }
        std::sort(expected.begin(), expected.end(),
                  [](auto const& a, auto const& b) { return encode(a) < encode(b); });
        ok = found == expected;
        s.evidence.push_back("centralizer of alpha has " + std::to_string(found.size())
                             + " elements, expected " + std::to_string(n + 1));
        bool gamma = is_connected(build_unified(c.alpha, c.alpha));
        s.evidence.push_back(std::string("unified graph of (alpha, alpha) is ")
                             + (gamma ? "connected" : "disconnected"));
        ok = ok && gamma;
        if (!ok) {
          for (auto const& u : found) {
            if (std::find(expected.begin(), expected.end(), u) == expected.end()) {
              s.counterexample = tab(u);
              break;
            }
          }
        }
        ok = chain_cycle_exclusions(c.beta, "beta", budget, s) && ok;
      } else {
        s.claim = "alpha and beta each commute with no permutation but id and "
                  "no strictly partial map but the empty map";
        ok = chain_cycle_exclusions(c.alpha, "alpha", budget, s);
        ok = chain_cycle_exclusions(c.beta, "beta", budget, s) && ok;
      }
      s.verdict = ok ? StepVerdict::pass : StepVerdict::fail;
      return s;
    }

    bool forced_check(PTrans const& t, PTrans const& expected, std::string const& name,
                      std::string const& en, Budget const& budget, ReplayStep& s) {
      std::size_t const n = t.degree();
      auto const        l = chain_cycle_labeling(t);
      PTrans const      e = forced_idempotent(l.cycle.size(), l.chain.size(), l);
      bool ok = e == expected && is_idempotent(e) && commutes(e, t);
      s.evidence.push_back("forced idempotent of " + name + " = " + tab(e)
                           + (e == expected ? " (matches " : " (differs from ") + en
                           + ")");
      auto full = backtrack_common({t}, Universe::full, budget);
      std::erase_if(full, [](PTrans const& u) { return !is_idempotent(u); });
      std::vector<PTrans> want{identity(n), expected};
      std::sort(want.begin(), want.end(),
                [](auto const& a, auto const& b) { return encode(a) < encode(b); });
      s.evidence.push_back("full idempotents commuting with " + name + ": "
                           + set_text(full));
      if (full != want) {
        ok = false;
        for (auto const& u : full) {
          if (std::find(want.begin(), want.end(), u) == want.end()) {
            s.counterexample = tab(u);
            break;
          }
        }
      }
      return ok;
    }

    ReplayStep forced_step(WitnessCase const& c, Budget const& budget) {
      ReplayStep s;
      s.name = "forced_idempotents";
      bool ok;
      if (c.forced_f) {
        s.claim = "the only full idempotents commuting with alpha and beta besides "
                  "id are e and f respectively, as displayed";
        ok = forced_check(c.alpha, *c.forced_e, "alpha", "e", budget, s);
        ok = forced_check(c.beta, *c.forced_f, "beta", "f", budget, s) && ok;
      } else {
        s.claim = "the only full idempotent commuting with beta besides id is the "
                  "displayed e";
        ok = forced_check(c.beta, *c.forced_e, "beta", "e", budget, s);
      }
      s.verdict = ok ? StepVerdict::pass : StepVerdict::fail;
      return s;
    }

    ReplayStep non_commuting_step(WitnessCase const& c) {
      ReplayStep s;
      s.name  = "non_commuting";
      bool ok = true;
      if (c.forced_f) {
        s.claim = "e and f do not commute";
        ok      = !commutes(*c.forced_e, *c.forced_f);
        s.evidence.push_back(difference_text(*c.forced_e, *c.forced_f, "e", "f"));
        if (!ok) {
          s.counterexample = tab(*c.forced_f);
        }
      } else {
        s.claim = "no power alpha^i with 2 <= i < n commutes with e";
        for (std::size_t i = 2; i < c.n; ++i) {
          PTrans p = power(c.alpha, i);
          s.evidence.push_back(difference_text(p, *c.forced_e, power_name(i), "e"));
          if (commutes(p, *c.forced_e)) {
            ok = false;
            s.counterexample = s.counterexample.value_or(tab(p));
          }
        }
      }
      s.verdict = ok ? StepVerdict::pass : StepVerdict::fail;
      return s;
    }

    // Vertices of C(P(X)) commuting with `partner` and with some power
    // alpha^i, 2 <= i < n, found by sweeping all of P(X).
    std::vector<std::vector<PTrans>> sweep_common(WitnessCase const& c,
                                                  PTrans const&      partner,
                                                  std::size_t        max_power,
                                                  Parallelism        par) {
      std::vector<PTrans> powers;
      for (std::size_t i = 2; i <= max_power; ++i) {
        powers.push_back(power(c.alpha, i));
      }
      auto hits = detail::parallel_collect(
          c.n,
          [&](PTrans const& t) {
            if (is_empty(t) || is_identity(t)
                || !detail::commutes_unchecked(t, partner)) {
              return false;
            }
            return std::any_of(powers.begin(), powers.end(), [&](PTrans const& p) {
              return detail::commutes_unchecked(t, p);
            });
          },
          par,
          64);
      std::vector<std::vector<PTrans>> per_power(powers.size());
      for (auto const& t : hits) {
        for (std::size_t k = 0; k < powers.size(); ++k) {
          if (commutes(t, powers[k])) {
            per_power[k].push_back(t);
          }
        }
      }
      return per_power;
    }

    ReplayStep common_neighbour_step(WitnessCase const&   c,
                                     Budget const&        budget,
                                     ReplayOptions const& options) {
      ReplayStep        s;
      std::size_t const n = c.n;
      s.name              = "no_common_neighbour";
      bool ok             = true;

      if (c.family == Family::n4) {
        s.claim = "no vertex of C(P(X)) commutes with both beta and alpha^2, or "
                  "with both beta and alpha^3";
        auto per = sweep_common(c, c.beta, 3, options.par);
        for (std::size_t k = 0; k < per.size(); ++k) {
          s.evidence.push_back("scan of " + std::to_string(universe_size(n))
                               + " elements: " + std::to_string(per[k].size())
                               + " vertices commute with beta and "
                               + power_name(k + 2));
          if (!per[k].empty()) {
            ok               = false;
            s.counterexample = s.counterexample.value_or(tab(per[k].front()));
          }
        }
      } else if (!c.forced_f) {
        s.claim = "for every 2 <= i < n no vertex of C(P(X)) commutes with both "
                  "alpha^i and e";
        PTrans const& e = *c.forced_e;
        for (std::size_t i = 2; i < n; ++i) {
          PTrans p     = power(c.alpha, i);
          auto   cert  = certify_no_partial_connector(p, e);
          auto   found = backtrack_common({p, e}, Universe::all_partial, budget);
          std::erase_if(found, [](PTrans const& t) {
            return is_empty(t) || is_identity(t);
          });
          s.evidence.push_back("unified graph of (" + power_name(i) + ", e): "
                               + (cert.gamma_connected ? "connected" : "disconnected")
                               + "; backtracking search: "
                               + std::to_string(found.size()) + " common vertices");
          if (!cert.gamma_connected || !found.empty()) {
            ok = false;
            if (!found.empty()) {
              s.counterexample = s.counterexample.value_or(tab(found.front()));
            }
          }
        }
        bool const scan = universe_size(n) <= budget.scan_elems || options.long_run;
        if (scan) {
          auto per = sweep_common(c, e, n - 1, options.par);
          for (std::size_t k = 0; k < per.size(); ++k) {
            if (!per[k].empty()) {
              ok               = false;
              s.counterexample = s.counterexample.value_or(tab(per[k].front()));
            }
          }
          std::size_t total = 0;
          for (auto const& v : per) {
            total += v.size();
          }
          s.evidence.push_back("exhaustive scan of " + std::to_string(universe_size(n))
                               + " elements: " + std::to_string(total)
                               + " common vertices");
        } else {
          s.evidence.push_back("exhaustive scan of P(X) skipped; run with the "
                               "long-run option to include it");
        }
      } else {
        s.claim = "no vertex of C(P(X)) commutes with both e and f";
        auto cert = certify_no_partial_connector(*c.forced_e, *c.forced_f);
        auto found
            = backtrack_common({*c.forced_e, *c.forced_f}, Universe::all_partial, budget);
        std::vector<PTrans> want{identity(n), empty(n)};
        std::sort(want.begin(), want.end(),
                  [](auto const& a, auto const& b) { return encode(a) < encode(b); });
        s.evidence.push_back(std::string("unified graph of (e, f): ")
                             + (cert.gamma_connected ? "connected" : "disconnected"));
        s.evidence.push_back("backtracking common centralizer of e and f in P(X): "
                             + set_text(found));
        ok = cert.gamma_connected && found == want;
        if (!ok) {
          for (auto const& t : found) {
            if (!is_empty(t) && !is_identity(t)) {
              s.counterexample = tab(t);
              break;
            }
          }
        }
      }
      s.verdict = ok ? StepVerdict::pass : StepVerdict::fail;
      return s;
    }

  }  // namespace

  ReplayReport replay_lower_bound(WitnessCase const&   c,
                                  Budget const&        budget,
                                  ReplayOptions const& options) {
    if (!c.forced_e) {
      throw PreconditionError("witness case has no forced idempotent");
    }
    ReplayReport r;
    r.n      = c.n;
    r.family = c.family;
    r.steps.push_back(non_adjacent_step(c));
    r.steps.push_back(centralizer_step(c, budget));
    r.steps.push_back(forced_step(c, budget));
    r.steps.push_back(non_commuting_step(c));
    r.steps.push_back(common_neighbour_step(c, budget, options));

    bool const all = std::all_of(r.steps.begin(), r.steps.end(), [](auto const& s) {
      return s.verdict == StepVerdict::pass;
    });
    ReplayStep last;
    last.name  = "conclusion";
    last.claim = "d(alpha, beta) >= " + std::to_string(c.expected_lower_bound);
    last.verdict = all ? StepVerdict::pass : StepVerdict::fail;
    if (all) {
      last.evidence.push_back("every path of length below "
                              + std::to_string(c.expected_lower_bound)
                              + " would need a vertex excluded above");
    } else {
      last.evidence.push_back("an earlier step failed");
    }
    r.steps.push_back(std::move(last));
    r.passed = all;
    r.bound  = all ? c.expected_lower_bound : 0;
    return r;
  }

}  // namespace commgraph
