// Acceptance gate: eight exact, property-style criteria over a desk-scale
// corpus of finite categories.  One PASS/FAIL line per criterion; exit 1 if
// any fails.  No tolerances anywhere: every comparison is on exact data.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "core/distlaw.hpp"
#include "core/errors.hpp"
#include "core/morphisms.hpp"
#include "core/oracle.hpp"

using namespace catlaw;

namespace {

struct Timer {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
        .count();
  }
};

int g_detail_lines = 0;

// Records the first few concrete failures so a red run is diagnosable.
bool fail(std::string& detail, const std::string& msg) {
  if (detail.empty()) detail = msg;
  if (g_detail_lines < 20) {
    std::fprintf(stderr, "    %s\n", msg.c_str());
    ++g_detail_lines;
  }
  return false;
}

std::vector<CatPtr> chains(int up_to) {
  std::vector<CatPtr> out;
  for (int n = 0; n <= up_to; ++n) out.push_back(chain_category(n));
  return out;
}

std::vector<CatPtr> all_posets(int up_to) {
  std::vector<CatPtr> out;
  for (int n = 0; n <= up_to; ++n)
    for (const auto& leq : enumerate_posets(n)) out.push_back(poset_category(leq));
  return out;
}

std::vector<CatPtr> all_monoids(int up_to) {
  std::vector<CatPtr> out;
  for (int n = 1; n <= up_to; ++n)
    for (const auto& t : enumerate_monoids(n)) out.push_back(monoid_category(t));
  return out;
}

std::vector<CatPtr> small_corpus() {
  std::vector<CatPtr> out = chains(3);
  for (const CatPtr& c : all_monoids(2)) out.push_back(c);
  return out;
}

std::vector<Monad> monads_on(const CatPtr& c) {
  std::vector<Monad> out;
  for (const MonadMonoidal& m : enumerate_monads_monoidal(c))
    out.push_back(make_monad(m));
  return out;
}

// Valid laws found while running criteria 2 and 7; criterion 8 consumes them.
std::vector<DistLawCell> g_valid_laws;

bool criterion1(std::string& detail) {
  Timer timer;
  std::size_t categories = 0, monads = 0;
  std::vector<CatPtr> corpus = chains(4);
  for (const CatPtr& c : all_posets(4)) corpus.push_back(c);
  for (const CatPtr& c : all_monoids(3)) corpus.push_back(c);

  for (const CatPtr& c : corpus) {
    ++categories;
    auto mm = enumerate_monads_monoidal(c);
    auto me = enumerate_monads_extensive(c);
    if (mm.size() != me.size())
      return fail(detail, "form counts differ on a " +
                              std::to_string(c->n_objects()) +
                              "-object category: " + std::to_string(mm.size()) +
                              " vs " + std::to_string(me.size()));
    std::vector<char> hit(me.size(), 0);
    for (const MonadMonoidal& m : mm) {
      ++monads;
      MonadExtensive e = to_extensive(m);
      std::size_t j = 0;
      while (j < me.size() && !(me[j] == e)) ++j;
      if (j == me.size())
        return fail(detail, "to_extensive image missing from the "
                            "independent enumeration");
      if (hit[j]) return fail(detail, "to_extensive is not injective");
      hit[j] = 1;
      if (!(to_monoidal(e) == m))
        return fail(detail, "to_monoidal(to_extensive(m)) != m");
    }
    for (const MonadExtensive& e : me) {
      if (!(to_extensive(to_monoidal(e)) == e))
        return fail(detail, "to_extensive(to_monoidal(e)) != e");
    }
  }
  double dt = timer.seconds();
  if (dt > 60.0)
    return fail(detail, "over budget: " + std::to_string(dt) + "s");
  char buf[128];
  std::snprintf(buf, sizeof buf, "%zu monads across %zu categories, %.1fs",
                monads, categories, dt);
  detail = buf;
  return true;
}

bool criterion2(std::string& detail) {
  Timer timer;
  std::size_t pairs = 0, candidates = 0, valid = 0;
  bool ok = true;
  for (const CatPtr& c : small_corpus()) {
    std::vector<Monad> monads = monads_on(c);
    for (const Monad& s : monads) {
      for (const Monad& t : monads) {
        ++pairs;
        for (const auto& lam : enumerate_distlaw_candidates(s, t)) {
          ++candidates;
          DistLawCell d{s, t, lam};
          bool v1 = check_distlaw_monoidal(d).ok();
          bool v2 = check_distlaw_noiter_2cat(d).ok();
          bool v3 = check_distlaw_noiter_cat(d).ok();
          if (v1 != v2 || v1 != v3)
            ok = fail(detail, "verdicts split: monoidal=" + std::to_string(v1) +
                                  " noiter2cat=" + std::to_string(v2) +
                                  " noitercat=" + std::to_string(v3));
          if (v1) {
            ++valid;
            g_valid_laws.push_back(d);
          }
        }
      }
    }
  }
  double dt = timer.seconds();
  if (dt > 120.0)
    return fail(detail, "over budget: " + std::to_string(dt) + "s");
  if (!ok) return false;
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "%zu ordered pairs, %zu candidates, %zu valid, %.1fs", pairs,
                candidates, valid, dt);
  detail = buf;
  return true;
}

bool criterion3(std::string& detail) {
  Timer timer;
  std::size_t checked_pairs = 0, matched = 0;
  bool ok = true;
  for (const CatPtr& c : small_corpus()) {
    std::vector<Monad> monads = monads_on(c);
    for (const Monad& s : monads) {
      for (const Monad& t : monads) {
        ++checked_pairs;
        std::vector<std::vector<ArrId>> valid_lambdas;
        for (const auto& lam : enumerate_distlaw_candidates(s, t)) {
          DistLawCell d{s, t, lam};
          if (check_distlaw_monoidal(d).ok()) valid_lambdas.push_back(lam);
        }

        FunctorData TS = compose_functors(t.mon.T, s.mon.T);
        FunctorData STS = compose_functors(s.mon.T, TS);
        std::vector<std::vector<ArrId>> valid_alphas;
        for (const auto& fam : enumerate_component_families(STS, TS)) {
          AlgebraFormLaw a{s, t, fam};
          if (check_alpha_conditions(a).ok()) valid_alphas.push_back(fam);
        }

        if (valid_lambdas.size() != valid_alphas.size()) {
          ok = fail(detail,
                    "valid set sizes differ: " +
                        std::to_string(valid_lambdas.size()) + " lambdas vs " +
                        std::to_string(valid_alphas.size()) + " alphas");
          continue;
        }
        std::vector<char> hit(valid_alphas.size(), 0);
        for (const auto& lam : valid_lambdas) {
          DistLawCell d{s, t, lam};
          AlgebraFormLaw a = lambda_to_alpha(d);
          if (!check_alpha_conditions(a).ok()) {
            ok = fail(detail, "lambda_to_alpha image fails the alpha checker");
            continue;
          }
          std::size_t j = 0;
          while (j < valid_alphas.size() && valid_alphas[j] != a.alpha) ++j;
          if (j == valid_alphas.size() || hit[j]) {
            ok = fail(detail, "lambda_to_alpha is not a bijection onto the "
                              "valid alphas");
            continue;
          }
          hit[j] = 1;
          DistLawCell back = alpha_to_lambda(a);
          if (back.lambda != lam) {
            ok = fail(detail, "alpha_to_lambda(lambda_to_alpha(l)) != l");
            continue;
          }
          ++matched;
        }
        for (const auto& fam : valid_alphas) {
          AlgebraFormLaw a{s, t, fam};
          DistLawCell back = alpha_to_lambda(a);
          if (!check_distlaw_monoidal(back).ok())
            ok = fail(detail, "alpha_to_lambda image fails the monoidal "
                              "checker");
          else if (!(lambda_to_alpha(back).alpha == fam))
            ok = fail(detail, "lambda_to_alpha(alpha_to_lambda(a)) != a");
        }
      }
    }
  }
  if (!ok) return false;
  char buf[128];
  std::snprintf(buf, sizeof buf, "%zu matched laws over %zu pairs, %.1fs",
                matched, checked_pairs, timer.seconds());
  detail = buf;
  return true;
}

bool criterion4(std::string& detail) {
  Timer timer;
  std::size_t candidates = 0;
  bool ok = true;
  for (const CatPtr& c : small_corpus()) {
    std::vector<Monad> monads = monads_on(c);
    for (const Monad& s : monads) {
      for (const Monad& t : monads) {
        for (const auto& lam : enumerate_distlaw_candidates(s, t)) {
          ++candidates;
          DistLawCell d{s, t, lam};
          DistLawAlgebraExt x = distlaw_algebra_from_lambda(d);
          bool vm = check_distlaw_monoidal(d).ok();
          bool va = check_distlaw_algebra_ext(x).ok();
          bool v2 = check_distlaw_inbetween_2cat(x).ok();
          bool vc = check_distlaw_inbetween_cat(x).ok();
          if (vm != va || vm != v2 || vm != vc)
            ok = fail(detail,
                      "predicates split: monoidal=" + std::to_string(vm) +
                          " algebra=" + std::to_string(va) + " inbetween2cat=" +
                          std::to_string(v2) + " inbetweencat=" +
                          std::to_string(vc));
          if (extract_lambda(x) != lam)
            ok = fail(detail, "extraction does not invert the embedding");
        }
      }
    }
  }
  if (!ok) return false;
  char buf[96];
  std::snprintf(buf, sizeof buf, "%zu candidates, %.1fs", candidates,
                timer.seconds());
  detail = buf;
  return true;
}

bool criterion5(std::string& detail) {
  Timer timer;
  std::size_t kl_cells = 0, em_cells = 0, kl_transf = 0, em_transf = 0,
              liftings = 0;
  bool ok = true;
  std::vector<CatPtr> corpus = small_corpus();
  for (const CatPtr& A : corpus) {
    std::vector<Monad> ts = monads_on(A);
    for (const CatPtr& B : corpus) {
      std::vector<Monad> ss = monads_on(B);
      std::vector<FunctorData> functors = enumerate_functors(A, B);
      for (const Monad& t : ts) {
        for (const Monad& s : ss) {
          std::vector<KlMorphismCell> valid_kl;
          std::vector<EMMorphismCell> valid_em;
          for (const FunctorData& F : functors) {
            FunctorData FT = compose_functors(F, t.mon.T);
            FunctorData SF = compose_functors(s.mon.T, F);
            for (const auto& kappa : enumerate_component_families(FT, SF)) {
              ++kl_cells;
              KlMorphismCell cell{t, s, F, kappa};
              bool classical = check_kl_classical(cell).ok();
              bool axioms = check_kl_morphism_cat(cell).ok();
              bool noiter = check_kl_noiter(cell).ok();
              if (classical != axioms || classical != noiter)
                ok = fail(detail, "kappa verdicts split: classical=" +
                                      std::to_string(classical) + " cat=" +
                                      std::to_string(axioms) + " noiter=" +
                                      std::to_string(noiter));
              if (classical) {
                valid_kl.push_back(cell);
                ++liftings;
                KleisliLifting lift = kleisli_lifting_from_family(cell);
                if (!check_lifting(lift, t, s, F).ok())
                  ok = fail(detail, "lifting of a valid cell fails the "
                                    "lifting predicate");
                else if (family_from_lifting(lift, t, s, F).kappa != kappa)
                  ok = fail(detail, "lifting roundtrip lost kappa");
              }
            }
            for (const auto& phi : enumerate_component_families(SF, FT)) {
              ++em_cells;
              EMMorphismCell cell{t, s, F, phi};
              bool classical = check_em_classical(cell).ok();
              bool noiter = check_em_noiter(cell).ok();
              if (classical != noiter)
                ok = fail(detail, "phi verdicts split: classical=" +
                                      std::to_string(classical) + " noiter=" +
                                      std::to_string(noiter));
              if (classical) valid_em.push_back(cell);
            }
          }
          for (const KlMorphismCell& first : valid_kl) {
            FunctorData SF1 = compose_functors(s.mon.T, first.F);
            for (const KlMorphismCell& second : valid_kl) {
              for (const auto& chi :
                   enumerate_component_families(second.F, SF1)) {
                ++kl_transf;
                KlTransformationCell cell{first, second, chi};
                bool classical = check_kl_transformation_classical(cell).ok();
                bool noiter = check_kl_transformation_noiter(cell).ok();
                if (classical != noiter)
                  ok = fail(detail, "chi verdicts split");
              }
            }
          }
          for (const EMMorphismCell& first : valid_em) {
            for (const EMMorphismCell& second : valid_em) {
              FunctorData F2T = compose_functors(second.F, t.mon.T);
              for (const auto& rho :
                   enumerate_component_families(first.F, F2T)) {
                ++em_transf;
                EMTransformationCell cell{first, second, rho};
                bool classical = check_em_transformation_classical(cell).ok();
                bool noiter = check_em_transformation_noiter(cell).ok();
                if (classical != noiter)
                  ok = fail(detail, "rho verdicts split");
              }
            }
          }
        }
      }
    }
  }
  if (!ok) return false;
  char buf[192];
  std::snprintf(buf, sizeof buf,
                "%zu kappa / %zu phi cells, %zu chi / %zu rho families, "
                "%zu liftings, %.1fs",
                kl_cells, em_cells, kl_transf, em_transf, liftings,
                timer.seconds());
  detail = buf;
  return true;
}

bool criterion6(std::string& detail) {
  Timer timer;
  std::size_t families = 0, derived = 0;
  bool ok = true;
  for (const CatPtr& c : small_corpus()) {
    std::vector<Monad> monads = monads_on(c);
    for (const Monad& s : monads) {
      for (const Monad& t : monads) {
        for (const auto& lam : enumerate_distlaw_candidates(s, t)) {
          ++families;
          DistLawCell d{s, t, lam};
          Report rep = check_distlaw_noiter_cat(d);
          const CheckResult* ax1 = rep.find("distlaw-noitercat.axiom1");
          const CheckResult* ax2 = rep.find("distlaw-noitercat.axiom2");
          if (!ax1 || !ax2 || !ax1->passed || !ax2->passed) continue;
          ++derived;
          if (!derive_naturality(d).ok())
            ok = fail(detail, "family passed axioms 1-2 but naturality did "
                              "not follow");
        }
      }
    }
  }
  if (!ok) return false;
  char buf[96];
  std::snprintf(buf, sizeof buf, "%zu of %zu families qualified, %.1fs",
                derived, families, timer.seconds());
  detail = buf;
  return true;
}

bool criterion7(std::string& detail) {
  Timer timer;
  std::size_t posets = 0, cl_pairs = 0, laws = 0;
  bool ok = true;
  for (int n = 0; n <= 4; ++n) {
    for (const auto& leq : enumerate_posets(n)) {
      ++posets;
      CatPtr p = poset_category(leq);
      auto closures = closure_operators(leq);
      std::vector<Monad> monads;
      for (const auto& cl : closures)
        monads.push_back(make_monad(monad_from_closure(p, cl)));
      for (std::size_t i = 0; i < closures.size(); ++i) {
        for (std::size_t j = 0; j < closures.size(); ++j) {
          ++cl_pairs;
          const auto& s = closures[i];
          const auto& t = closures[j];
          bool commutes = true;
          for (int x = 0; x < n; ++x)
            if (!leq[s[t[x]]][t[s[x]]]) commutes = false;

          auto candidates = enumerate_distlaw_candidates(monads[i], monads[j]);
          std::size_t valid = 0;
          for (const auto& lam : candidates) {
            DistLawCell d{monads[i], monads[j], lam};
            if (check_distlaw_monoidal(d).ok()) {
              ++valid;
              g_valid_laws.push_back(d);
              ++laws;
            }
          }
          if (commutes && (candidates.size() != 1 || valid != 1))
            ok = fail(detail,
                      "s(t(x)) <= t(s(x)) everywhere but found " +
                          std::to_string(valid) + " of " +
                          std::to_string(candidates.size()) + " candidates");
          if (!commutes && valid != 0)
            ok = fail(detail, "law exists although s(t(x)) <= t(s(x)) fails");
        }
      }
    }
  }
  if (!ok) return false;
  char buf[128];
  std::snprintf(buf, sizeof buf,
                "%zu posets, %zu closure pairs, %zu unique laws, %.1fs",
                posets, cl_pairs, laws, timer.seconds());
  detail = buf;
  return true;
}

bool criterion8(std::string& detail) {
  Timer timer;
  bool ok = true;
  for (const DistLawCell& d : g_valid_laws) {
    MonadMonoidal composite = compose_monads(d);
    if (!check_monoidal_laws(composite).ok())
      ok = fail(detail, "composite of a valid law fails the monad laws");
  }
  if (!ok) return false;
  char buf[96];
  std::snprintf(buf, sizeof buf, "%zu composites, %.1fs", g_valid_laws.size(),
                timer.seconds());
  detail = buf;
  return true;
}

}  // namespace

int main() {
  struct Entry {
    const char* name;
    bool (*run)(std::string&);
  };
  const Entry entries[] = {
      {"criterion 1", criterion1}, {"criterion 2", criterion2},
      {"criterion 3", criterion3}, {"criterion 4", criterion4},
      {"criterion 5", criterion5}, {"criterion 6", criterion6},
      {"criterion 7", criterion7}, {"criterion 8", criterion8},
  };
  int failures = 0;
  for (const Entry& e : entries) {
    std::string detail;
    bool passed = false;
    try {
      passed = e.run(detail);
    } catch (const std::exception& ex) {
      detail = std::string("exception: ") + ex.what();
    }
    std::printf("%s: %s (%s)\n", e.name, passed ? "PASS" : "FAIL",
                detail.c_str());
    std::fflush(stdout);
    if (!passed) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
