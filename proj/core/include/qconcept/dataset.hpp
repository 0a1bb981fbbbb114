#pragma once

#include <array>
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qconcept/core.hpp"

namespace qc {

struct Item {
  std::string name;
  MembershipTriple t;
};

struct ConceptPair {
  std::string pair_id;
  std::string concept_a;
  std::string concept_b;
  Connective connective = Connective::Conjunction;
  std::vector<Item> items;

  const Item* find(std::string_view item) const;
  std::vector<MembershipTriple> triples() const;
};

struct Dataset {
  std::vector<ConceptPair> pairs;

  const ConceptPair* find(std::string_view pair_id) const;
  const Item* find(std::string_view pair_id, std::string_view item) const;
  std::size_t item_count() const;
};

enum class DataErrorKind { ParseError, RangeError };

struct DataError {
  DataErrorKind kind = DataErrorKind::ParseError;
  std::size_t line = 0;
  std::size_t column = 0;
  std::string message;
};

std::string to_string(const DataError& e);

inline constexpr std::string_view kCsvHeader = "pair_id,item,connective,mu_a,mu_b,mu_combo";

Expected<Dataset, DataError> parse_dataset(std::istream& in);
Expected<Dataset, DataError> parse_dataset(std::string_view text);

// Weights written with 6 decimals.
void write_dataset(std::ostream& out, const Dataset& d);

// Every reference row plus the worked single items.
Dataset embedded_samples();

// Reference columns of the classification rows, kept as regression fixtures.
struct PrintedC3 {
  std::array<double, 3> vec_a{};
  std::array<double, 3> vec_b{};
  double beta_deg = 0.0;
};

struct PrintedFock {
  double m2 = 0.0;
  double n2 = 0.0;
  double two_particle = 0.0;
  double one_particle = 0.0;
};

struct PrintedRow {
  std::string pair_id;
  std::string item;
  MembershipTriple t;
  Label label = Label::Classical;
  double delta = 0.0;
  double k = 0.0;
  std::optional<PrintedC3> c3;
  std::optional<PrintedFock> fock;
};

std::vector<PrintedRow> printed_table_rows();

}  // namespace qc
