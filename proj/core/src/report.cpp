#include "qconcept/report.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "json.hpp"

#include "qconcept/parallel.hpp"

namespace qc {
namespace {

using json = nlohmann::ordered_json;

double r4(double v) {
  const double r = std::round(v * 1e4) / 1e4;
  return r == 0.0 ? 0.0 : r;
}

template <std::size_t N>
json r4_array(const std::array<double, N>& a) {
  json out = json::array();
  for (double v : a) out.push_back(r4(v));
  return out;
}

void model_auto(ItemReport& it, double eps) {
  switch (select_model(it.t, eps)) {
    case ModelKind::C3Interference: {
      auto m = build_c3(it.t, eps);
      if (m) it.c3 = *m;
      else it.error = std::string(to_string(m.error()));
      return;
    }
    case ModelKind::FockConvex: {
      auto w = solve_convex_weights(it.t, eps);
      if (w) it.fock = *w;
      else it.error = std::string(to_string(w.error()));
      return;
    }
    case ModelKind::Unmodelable: it.error = "unmodelable"; return;
  }
}

void model_forced(ItemReport& it, KindFilter kind, double eps) {
  if (kind == KindFilter::C3) {
    auto m = build_c3(it.t, eps);
    if (m) it.c3 = *m;
    else it.error = std::string(to_string(m.error()));
  } else if (kind == KindFilter::Fock) {
    auto w = solve_convex_weights(it.t, eps);
    if (w) it.fock = *w;
    else it.error = std::string(to_string(w.error()));
  } else {
    model_auto(it, eps);
  }
}

json classification_json(const Classification& c) {
  json j;
  j["label"] = to_string(c.label);
  j["delta"] = r4(c.delta);
  j["k"] = r4(c.k);
  return j;
}

json model_json(const ItemReport& it) {
  json j;
  if (it.c3) {
    j["kind"] = "c3";
    j["vec_a"] = r4_array(it.c3->vec_a);
    j["vec_b"] = r4_array(it.c3->vec_b);
    j["beta"] = r4(it.c3->beta_deg);
    j["swapped"] = it.c3->swapped;
  } else if (it.fock) {
    j["kind"] = "fock";
    j["m2"] = r4(it.fock->m2);
    j["n2"] = r4(it.fock->n2);
  } else if (it.r8) {
    const R8Solution& s = *it.r8;
    j["kind"] = "r8";
    j["x"] = r4_array(s.x);
    j["derived"] = {{"x_a", r4(s.derived.x_a)},
                    {"x_b", r4(s.derived.x_b)},
                    {"c5", r4(s.derived.c[0])},
                    {"c6", r4(s.derived.c[1])}};
    j["residual"] = s.residual;
  } else {
    return nullptr;
  }
  return j;
}

json relative_json(const ItemReport& it) {
  if (!it.r8) return nullptr;
  const RelativeWeights& w = it.r8->relative_weights;
  json j;
  j["mu_c_total"] = r4(w.mu_c_total);
  j["mu_q_total"] = r4(w.mu_q_total);
  j["mu_c_r"] = w.mu_c_r ? r4_array(*w.mu_c_r) : json(nullptr);
  j["mu_q_r"] = w.mu_q_r ? r4_array(*w.mu_q_r) : json(nullptr);
  return j;
}

}  // namespace

Report analyze(const Dataset& d, const AnalysisOptions& options) {
  Report rep;
  const unsigned jobs = std::max(1u, options.jobs);
  for (const ConceptPair& p : d.pairs) {
    PairReport pr;
    pr.pair_id = p.pair_id;
    pr.connective = p.connective;
    pr.items.resize(p.items.size());

    const bool wants_r8 = options.stage == Stage::FitAngles || options.stage == Stage::Full ||
                          (options.stage == Stage::Model && options.kind == KindFilter::R8);
    if (wants_r8 && !p.items.empty()) {
      FitOptions fo = options.fit;
      fo.jobs = jobs;
      auto fit = fit_pair_angles(p.triples(), p.connective, fo);
      if (fit) pr.angles = fit->angles;
      else pr.angle_error = std::string(to_string(fit.error()));
    }

    parallel_for(p.items.size(), jobs, [&](std::size_t i) {
      ItemReport& it = pr.items[i];
      it.item = p.items[i].name;
      it.t = p.items[i].t;
      it.classification = classify(it.t, options.eps);
      if (options.stage == Stage::Classify) return;
      it.modeled = true;

      if (wants_r8 && pr.angles) {
        auto s = solve_r8(it.t, *pr.angles, options.fit.solver);
        if (s) {
          it.r8 = *s;
          return;
        }
        it.error = std::string(to_string(s.error().kind));
      } else if (wants_r8) {
        it.error = pr.angle_error;
      }
      if (options.stage == Stage::Full) {
        it.error.clear();
        model_auto(it, options.eps);
      } else if (options.stage == Stage::Model && options.kind != KindFilter::R8) {
        if (options.kind == KindFilter::Auto) model_auto(it, options.eps);
        else model_forced(it, options.kind, options.eps);
      }
    });
    rep.pairs.push_back(std::move(pr));
  }
  return rep;
}

bool has_item_errors(const Report& r) {
  for (const auto& p : r.pairs) {
    for (const auto& it : p.items) {
      if (it.modeled && !it.error.empty()) return true;
    }
  }
  return false;
}

std::string report_json(const Report& r, int indent) {
  json root;
  root["pairs"] = json::array();
  for (const PairReport& p : r.pairs) {
    json pj;
    pj["pair_id"] = p.pair_id;
    pj["connective"] = to_string(p.connective);
    if (p.angles) {
      pj["angles"] = {{"theta", r4(p.angles->theta_deg)}, {"phi", r4(p.angles->phi_deg)}};
    } else {
      pj["angles"] = nullptr;
    }
    if (!p.angle_error.empty()) pj["angle_error"] = p.angle_error;
    pj["items"] = json::array();
    for (const ItemReport& it : p.items) {
      json ij;
      ij["item"] = it.item;
      ij["classification"] = classification_json(it.classification);
      if (it.modeled) {
        ij["model"] = model_json(it);
        if (!it.error.empty() && ij["model"].is_null()) ij["error"] = it.error;
        ij["relative_weights"] = relative_json(it);
      }
      pj["items"].push_back(std::move(ij));
    }
    root["pairs"].push_back(std::move(pj));
  }
  return root.dump(indent);
}

void write_report(std::ostream& out, const Report& r) { out << report_json(r) << '\n'; }

}  // namespace qc
