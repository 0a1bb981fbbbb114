#include "selftest.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>

#include "json.hpp"
#include "qconcept/core.hpp"
#include "qconcept/dataset.hpp"
#include "qconcept/fock.hpp"
#include "qconcept/hilbert_c3.hpp"
#include "qconcept/parallel.hpp"
#include "qconcept/r8_solver.hpp"
#include "qconcept/realspace.hpp"
#include "qconcept/report.hpp"

namespace qc::selftest {
namespace {

constexpr auto Conj = Connective::Conjunction;
constexpr auto Disj = Connective::Disjunction;

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

Outcome near(double got, double want, double tol) {
  if (std::abs(got - want) <= tol) return {true, ""};
  return {false, "got " + fmt(got) + ", want " + fmt(want)};
}

template <class A, class B>
Outcome near_all(const A& got, const B& want, double tol) {
  for (std::size_t i = 0; i < want.size(); ++i) {
    if (!(std::abs(got[i] - want[i]) <= tol)) {
      return {false, "component " + std::to_string(i) + ": got " + fmt(got[i]) + ", want " +
                         fmt(want[i])};
    }
  }
  return {true, ""};
}

Outcome all_of(std::initializer_list<Outcome> parts) {
  for (const auto& p : parts) {
    if (!p.pass) return p;
  }
  return {true, ""};
}

Outcome fail(std::string why) { return {false, std::move(why)}; }

// Full-precision Discus Throwing solution at theta = 108.4354, phi = 12.
constexpr R8Vector kDiscus = {0.450673881687196, 0.260196686908723, 0, 0, 0.725697377973203,
                              -0.444248347107600, 0.072093399016160, 0};
constexpr MembershipTriple kDiscusTriple{1, 0.75, 0.7, Disj};
constexpr PairAngles kHobbiesAngles{108.4354, 12};
constexpr std::array<double, 8> kLibrary = {0.3809, 0.8015, 0, 0.2036, 0, 0.3927, 0.0919, 0.0923};

Expected<R8Solution, std::string> solve_at_pair_fit(const char* pair, const char* item) {
  const Dataset d = embedded_samples();
  const ConceptPair* p = d.find(pair);
  auto fit = fit_pair_angles(p->triples(), p->connective);
  if (!fit) return std::string("pair fit: ") + std::string(to_string(fit.error()));
  auto s = solve_r8(p->find(item)->t, fit->angles);
  if (!s) return std::string("solve: ") + std::string(to_string(s.error().kind));
  return *s;
}

}  // namespace

std::vector<Case> catalog() {
  std::vector<Case> c;
  auto add = [&](std::string name, std::function<Outcome()> fn) {
    c.push_back({std::move(name), std::move(fn)});
  };

  // classification
  add("desk-lamp-factors", [] {
    auto [d, k] = classicality_factors({0.725, 0.825, 0.825, Conj});
    return all_of({near(d, 0.1, 1e-12), near(k, 0.275, 1e-12)});
  });
  add("ashtray-factors", [] {
    auto [d, k] = classicality_factors({0.7, 0.3, 0.25, Disj});
    return all_of({near(d, 0.45, 1e-12), near(k, 0.75, 1e-12)});
  });
  add("desk-lamp-label", [] {
    return classify({0.725, 0.825, 0.825, Conj}).label == Label::DeltaNonclassical
               ? Outcome{true, ""} : fail("not delta_nonclassical");
  });
  add("wall-hanging-label", [] {
    return classify({0.9, 0.4, 0.95, Disj}).label == Label::Classical ? Outcome{true, ""}
                                                                       : fail("not classical");
  });
  add("almond-label", [] {
    return classify({0.2, 0.1, 0.425, Disj}).label == Label::KNonclassical
               ? Outcome{true, ""} : fail("not k_nonclassical");
  });
  add("ashtray-no-witness", [] {
    return kolmogorov_witness({0.7, 0.3, 0.25, Disj}) ? fail("witness produced")
                                                       : Outcome{true, ""};
  });

  // C^3 interference model
  add("pencil-eraser-c3-exists", [] {
    return c3_exists({0.4, 0.7, 0.45, Disj}).ok ? Outcome{true, ""} : fail("no model");
  });
  add("cave-no-c3", [] {
    return c3_exists({0.2821, 0.95, 0.2821, Conj}).ok ? fail("model exists") : Outcome{true, ""};
  });
  struct C3Case {
    const char* name;
    MembershipTriple t;
    std::array<double, 3> a, b;
    double beta;
  };
  for (const C3Case& k : {C3Case{"pencil-eraser-c3", {0.4, 0.7, 0.45, Disj}, {0.6325, 0, 0.7746},
                                 {0.6708, 0.5, -0.5477}, 103.6330},
                          C3Case{"field-mouse-c3", {0.1, 0.7, 0.4, Disj}, {0.9487, 0, 0.3162},
                                 {0.2789, 0.4714, -0.8367}, 90.0},
                          C3Case{"desk-lamp-c3", {0.725, 0.825, 0.825, Conj}, {0.8515, 0, 0.5244},
                                 {0.2576, 0.8710, -0.4183}, 76.8253}}) {
    add(k.name, [k] {
      auto m = build_c3(k.t);
      if (!m) return fail(std::string(to_string(m.error())));
      return all_of({near_all(m->vec_a, k.a, 1e-4), near_all(m->vec_b, k.b, 1e-4),
                     near(m->beta_deg, k.beta, 1e-4)});
    });
  }
  add("pencil-eraser-predict", [] {
    auto m = build_c3({0.4, 0.7, 0.45, Disj});
    if (!m) return fail("no model");
    const auto t = c3_predict(*m);
    return all_of({near(t.mu_a, 0.4, 1e-12), near(t.mu_b, 0.7, 1e-12), near(t.mu_combo, 0.45, 1e-9)});
  });
  add("hawaii-predict", [] {
    auto m = build_c3({0.54, 0.57, 0.32, Disj});
    if (!m) return fail("no model");
    return all_of({near(c3_predict(*m).mu_combo, 0.32, 1e-9), near(m->beta_deg, 121.8967, 1e-4)});
  });

  // Fock space
  add("hawaii-one-particle", [] {
    auto v = fock_membership(0.54, 0.57, {0.0, 1.0, -0.235}, Disj);
    return v ? near(*v, 0.32, 1e-12) : fail("out of range");
  });
  add("raisin-fock", [] {
    auto v = fock_membership(1, 0, {0.8, 0.2, 0.0}, Disj);
    return v ? near(*v, 0.9, 1e-12) : fail("out of range");
  });
  add("coffee-table-weights", [] {
    auto w = solve_convex_weights({1, 0.15, 0.3846, Conj});
    return w ? all_of({near(w->m2, 0.4480, 1e-4), near(w->n2, 0.5520, 1e-4)}) : fail("no weights");
  });
  add("molasses-weights", [] {
    auto w = solve_convex_weights({0.4, 0.05, 0.425, Disj});
    return w ? all_of({near(w->m2, 0.9756, 1e-4), near(w->n2, 0.0244, 1e-4)}) : fail("no weights");
  });
  add("pencil-eraser-select", [] {
    return select_model({0.4, 0.7, 0.45, Disj}) == ModelKind::C3Interference
               ? Outcome{true, ""} : fail("not c3");
  });
  add("coffee-table-select", [] {
    return select_model({1, 0.15, 0.3846, Conj}) == ModelKind::FockConvex ? Outcome{true, ""}
                                                                           : fail("not fock");
  });
  add("toothbrush-select", [] {
    const MembershipTriple t{0, 0.55, 0, Conj};
    if (select_model(t) != ModelKind::FockConvex) return fail("not fock");
    auto w = solve_convex_weights(t);
    return w ? near(w->m2, 1.0, 1e-12) : fail("no weights");
  });

  // classical and k-type vectors in R^4
  add("sailboat-vector", [] {
    auto v = classical_vector({0.5641, 0.8, 0.4211, Conj});
    return v ? near_all(*v, std::array<double, 4>{0.6489, 0.3782, 0.6156, 0.2386}, 1e-4)
             : fail("not classical");
  });
  add("backpack-vector", [] {
    auto v = classical_vector({0, 0, 0, Conj});
    return v ? near_all(*v, std::array<double, 4>{0, 0, 0, 1}, 1e-12) : fail("not classical");
  });
  add("automobile-vector", [] {
    auto v = classical_vector({1, 1, 1, Conj});
    return v ? near_all(*v, std::array<double, 4>{1, 0, 0, 0}, 1e-12) : fail("not classical");
  });
  add("sailboat-round-trip", [] {
    const auto t = reconstruct_from_vector({0.6489, 0.3782, 0.6156, 0.2386}, Conj);
    return all_of({near(t.mu_a, 0.5641, 1e-4), near(t.mu_b, 0.8, 1e-4), near(t.mu_combo, 0.4211, 1e-4)});
  });
  add("q-at-right-angle-is-k", [] {
    for (double a = 0; a <= 1.0001; a += 0.1) {
      for (double b = 0; b <= 1.0001; b += 0.1) {
        const double lo = std::max(0.0, a + b - 1.0), hi = std::min(a, b);
        for (double m = lo; m <= hi + 1e-12; m += 0.05) {
          const MembershipTriple t{a, b, m, Conj};
          const double q = quantum_logic_factor_unchecked(t, 90.0, {});
          auto r = near(q, classicality_factors(t).second, 1e-12);
          if (!r.pass) return r;
        }
      }
    }
    return Outcome{true, ""};
  });
  add("dishwasher-q-zero", [] {
    auto q = quantum_logic_factor({1, 0.025, 0, Conj}, 80.9026, {});
    return q ? near(*q, 0.0, 1e-5) : fail("negative radicand");
  });
  add("horse-cart-intervals", [] {
    auto iv = theta_feasible_intervals({0.3846, 0.95, 0.2895, Conj});
    if (!iv || iv->size() != 2) return fail("expected two intervals");
    return all_of({near((*iv)[0].lo_deg, 53.1553, 1e-4), near((*iv)[0].hi_deg, 83.9225, 1e-4),
                   near((*iv)[1].lo_deg, 96.0775, 1e-4), near((*iv)[1].hi_deg, 126.8447, 1e-4)});
  });
  add("dishwasher-points", [] {
    auto iv = theta_feasible_intervals({1, 0.025, 0, Conj});
    if (!iv || iv->size() != 2) return fail("expected two points");
    return all_of({near((*iv)[0].lo_deg, 80.9026, 1e-4), near((*iv)[0].hi_deg, 80.9026, 1e-4),
                   near((*iv)[1].lo_deg, 99.0974, 1e-4), near((*iv)[1].hi_deg, 99.0974, 1e-4)});
  });
  add("horse-cart-ktype", [] {
    auto v = ktype_vector({0.3846, 0.95, 0.2895, Conj}, 80.9026, {});
    return v ? near_all(*v, std::array<double, 4>{0.5380, 0.2461, 0.7957, 0.1296}, 1e-4)
             : fail("infeasible");
  });
  add("sailboat-ktype", [] {
    auto v = ktype_vector({0.5641, 0.8, 0.4211, Conj}, 80.9026, {});
    return v ? near_all(*v, std::array<double, 4>{0.6489, 0.3324, 0.5911, 0.3451}, 1e-4)
             : fail("infeasible");
  });
  add("ktype-right-angle-is-classical", [] {
    for (const MembershipTriple& t : {MembershipTriple{0.5641, 0.8, 0.4211, Conj},
                                      MembershipTriple{0.2821, 0.95, 0.2821, Conj},
                                      MembershipTriple{0.5, 0.5, 0.25, Conj}}) {
      auto k = ktype_vector(t, 90.0, {});
      auto v = classical_vector(t);
      if (!k || !v) return fail("no vector");
      auto r = near_all(*k, *v, 1e-12);
      if (!r.pass) return r;
    }
    return Outcome{true, ""};
  });

  // R^8 emergent model
  add("discus-reference-residual", [] {
    const auto r = r8_residuals(kDiscus, kHobbiesAngles, kDiscusTriple, 1.0);
    double worst = 0.0;
    for (double v : r) worst = std::max(worst, std::abs(v));
    return worst < 1e-9 ? Outcome{true, ""} : fail("residual " + fmt(worst));
  });
  add("discus-solve", [] {
    auto s = solve_r8(kDiscusTriple, kHobbiesAngles);
    return s ? near_all(s->x, kDiscus, 1e-3) : fail(std::string(to_string(s.error().kind)));
  });
  add("diving-mask-solve", [] {
    auto s = solve_r8({1, 1, 0.95, Disj}, {107, 12.95});
    return s ? near_all(s->x, std::array<double, 8>{0.0664, 0, 0, 0, 0.9978, 0, 0, 0}, 1e-3)
             : fail(std::string(to_string(s.error().kind)));
  });
  add("library-pair-fit-vector", [] {
    auto s = solve_at_pair_fit("building_dwelling", "Library");
    return s ? near_all(s->x, kLibrary, 1e-3) : fail(s.error());
  });
  add("tv-dual", [] {
    const auto d = conjunction_dual({0.7, 0.9, 0.925, Conj});
    if (d.connective != Disj) return fail("connective not flipped");
    return all_of({near(d.mu_a, 0.3, 1e-12), near(d.mu_b, 0.1, 1e-12), near(d.mu_combo, 0.075, 1e-12)});
  });
  add("discus-relative-weights", [] {
    auto s = solve_r8(kDiscusTriple, kHobbiesAngles);
    if (!s) return fail("no solution");
    const auto& w = s->relative_weights;
    if (!w.mu_c_r || !w.mu_q_r) return fail("degenerate sector");
    return all_of({near_all(*w.mu_c_r, std::array<double, 3>{1, 0.75, 1}, 1e-3),
                   near_all(*w.mu_q_r, std::array<double, 3>{1, 0.75, 0.5886}, 1e-3),
                   near(w.mu_c_total, 0.2708, 1e-3)});
  });
  add("library-relative-weights", [] {
    auto s = solve_at_pair_fit("building_dwelling", "Library");
    if (!s) return fail(s.error());
    const auto& w = s->relative_weights;
    if (!w.mu_c_r || !w.mu_q_r) return fail("degenerate sector");
    return all_of({near_all(*w.mu_c_r, std::array<double, 3>{0.95, 0.175, 0.175}, 1e-3),
                   near_all(*w.mu_q_r, std::array<double, 3>{0.95, 0.175, 0.9503}, 1e-3)});
  });
  add("msg-relative-weights", [] {
    auto s = solve_at_pair_fit("spices_herbs", "MSG");
    if (!s) return fail(s.error());
    const auto& w = s->relative_weights;
    if (!w.mu_c_r || !w.mu_q_r) return fail("degenerate sector");
    return all_of({near(w.mu_c_total, 0.6950, 1e-3), near((*w.mu_c_r)[2], 0.25, 1e-3),
                   near((*w.mu_q_r)[2], 0.8239, 1e-3)});
  });
  add("hobbies-angles-feasible", [] {
    const Dataset d = embedded_samples();
    return angles_feasible(d.find("hobbies_games")->triples(), kHobbiesAngles, {})
               ? Outcome{true, ""} : fail("some item does not solve");
  });

  // data and reports
  add("parse-single-row", [] {
    auto d = parse_dataset(std::string(kCsvHeader) +
                           "\nfurniture_appliances,Desk Lamp,conj,0.725,0.825,0.825\n");
    if (!d) return fail(to_string(d.error()));
    return d->pairs.size() == 1 && d->item_count() == 1 ? Outcome{true, ""}
                                                        : fail("wrong shape");
  });
  struct Lookup {
    const char* name;
    const char* pair;
    const char* item;
    MembershipTriple t;
  };
  for (const Lookup& k : {Lookup{"lookup-ashtray", "house_furnishings_furniture", "Ashtray", {0.7, 0.3, 0.25, Disj}},
                          Lookup{"lookup-apple", "fruits_vegetables", "Apple", {1, 0, 1, Disj}},
                          Lookup{"lookup-elephant", "bird_pet", "Elephant", {0, 0.25, 0, Conj}}}) {
    add(k.name, [k] {
      const Dataset d = embedded_samples();
      const Item* it = d.find(k.pair, k.item);
      if (it == nullptr) return fail("missing");
      if (it->t.connective != k.t.connective) return fail("connective");
      return all_of({near(it->t.mu_a, k.t.mu_a, 0), near(it->t.mu_b, k.t.mu_b, 0),
                     near(it->t.mu_combo, k.t.mu_combo, 0)});
    });
  }
  add("report-ashtray-json", [] {
    Dataset d;
    d.pairs.push_back({"p", "", "", Disj, {{"Ashtray", {0.7, 0.3, 0.25, Disj}}}});
    AnalysisOptions o;
    o.stage = Stage::Classify;
    const auto j = nlohmann::json::parse(report_json(analyze(d, o)));
    const auto& c = j["pairs"][0]["items"][0]["classification"];
    return all_of({c["label"] == "delta_nonclassical" ? Outcome{true, ""} : fail("label"),
                   near(c["delta"].get<double>(), 0.45, 1e-12), near(c["k"].get<double>(), 0.75, 1e-12)});
  });
  add("report-discus-json", [] {
    auto s = solve_r8(kDiscusTriple, kHobbiesAngles);
    if (!s) return fail("no solution");
    Report r;
    PairReport p;
    p.pair_id = "hobbies_games";
    p.connective = Disj;
    p.angles = kHobbiesAngles;
    ItemReport it;
    it.item = "Discus Throwing";
    it.t = kDiscusTriple;
    it.classification = classify(it.t);
    it.modeled = true;
    it.r8 = *s;
    p.items.push_back(it);
    r.pairs.push_back(p);
    const auto j = nlohmann::json::parse(report_json(r));
    const auto x = j["pairs"][0]["items"][0]["model"]["x"].get<std::vector<double>>();
    return near_all(x, std::array<double, 8>{0.4507, 0.2602, 0, 0, 0.7257, -0.4442, 0.0721, 0}, 0);
  });
  add("classify-embedded-labels", [] {
    const Dataset d = embedded_samples();
    if (d.item_count() < 43) return fail("only " + std::to_string(d.item_count()) + " rows");
    for (const auto& row : printed_table_rows()) {
      if (classify(row.t).label != row.label) return fail(row.item + " label differs from reference row");
    }
    return Outcome{true, ""};
  });
  add("model-c3-pencil-eraser", [] {
    AnalysisOptions o;
    o.stage = Stage::Model;
    o.kind = KindFilter::C3;
    const Report r = analyze(embedded_samples(), o);
    for (const auto& p : r.pairs) {
      for (const auto& it : p.items) {
        if (it.item == "Pencil Eraser") {
          if (!it.c3) return fail("no c3 model");
          return near(it.c3->beta_deg, 103.6330, 1e-4);
        }
      }
    }
    return fail("missing");
  });
  return c;
}

int run_all(std::ostream& out, unsigned jobs) {
  const auto cases = catalog();
  std::vector<Outcome> results(cases.size());
  parallel_for(cases.size(), jobs, [&](std::size_t i) { results[i] = cases[i].run(); });
  int failures = 0;
  for (std::size_t i = 0; i < cases.size(); ++i) {
    out << (results[i].pass ? "PASS " : "FAIL ") << cases[i].name;
    if (!results[i].pass) {
      ++failures;
      out << ": " << results[i].detail;
    }
    out << '\n';
  }
  out << (cases.size() - static_cast<std::size_t>(failures)) << '/' << cases.size()
      << " selftest cases passed\n";
  return failures;
}

}  // namespace qc::selftest
