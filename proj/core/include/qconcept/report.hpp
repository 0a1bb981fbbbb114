#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qconcept/core.hpp"
#include "qconcept/dataset.hpp"
#include "qconcept/fock.hpp"
#include "qconcept/hilbert_c3.hpp"
#include "qconcept/r8_solver.hpp"

namespace qc {

struct ItemReport {
  std::string item;
  MembershipTriple t;
  Classification classification;
  bool modeled = false;  // false: classification only, no model keys emitted
  std::optional<C3Model> c3;
  std::optional<FockWeights> fock;
  std::optional<R8Solution> r8;
  std::string error;  // set when modeled and no model could be built
};

struct PairReport {
  std::string pair_id;
  Connective connective = Connective::Conjunction;
  std::optional<PairAngles> angles;
  std::string angle_error;
  std::vector<ItemReport> items;
};

struct Report {
  std::vector<PairReport> pairs;
};

enum class Stage { Classify, Model, FitAngles, Full };
enum class KindFilter { Auto, C3, Fock, R8 };

struct AnalysisOptions {
  Stage stage = Stage::Full;
  KindFilter kind = KindFilter::Auto;
  double eps = kEps;
  FitOptions fit;
  unsigned jobs = 1;
};

Report analyze(const Dataset& d, const AnalysisOptions& options);

// True when some modeled item carries an error.
bool has_item_errors(const Report& r);

// Weights and components to 4 decimals, degrees to 4 decimals, residuals raw.
std::string report_json(const Report& r, int indent = -1);
void write_report(std::ostream& out, const Report& r);

}  // namespace qc
