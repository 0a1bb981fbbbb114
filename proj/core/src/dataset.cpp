#include "qconcept/dataset.hpp"

#include <charconv>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>

namespace qc {
namespace {

std::string_view trim(std::string_view s, std::size_t* lead = nullptr) {
  std::size_t b = 0;
  while (b < s.size() && (s[b] == ' ' || s[b] == '\t' || s[b] == '\r')) ++b;
  std::size_t e = s.size();
  while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t' || s[e - 1] == '\r')) --e;
  if (lead != nullptr) *lead = b;
  return s.substr(b, e - b);
}

struct Field {
  std::string text;
  std::size_t column = 1;  // 1-based
};

DataError parse_error(std::size_t line, std::size_t column, std::string msg) {
  return {DataErrorKind::ParseError, line, column, std::move(msg)};
}

Expected<std::vector<Field>, DataError> split_row(std::string_view row, std::size_t line) {
  std::vector<Field> out;
  std::size_t i = 0;
  while (true) {
    Field f;
    f.column = i + 1;
    std::size_t lead = 0;
    const std::string_view rest = row.substr(i);
    trim(rest, &lead);
    if (lead < rest.size() && rest[lead] == '"') {
      std::size_t j = i + lead + 1;
      while (true) {
        if (j >= row.size()) return parse_error(line, f.column, "unterminated quote");
        if (row[j] == '"') {
          if (j + 1 < row.size() && row[j + 1] == '"') {
            f.text.push_back('"');
            j += 2;
            continue;
          }
          ++j;
          break;
        }
        f.text.push_back(row[j++]);
      }
      while (j < row.size() && row[j] != ',') {
        if (!trim(row.substr(j, 1)).empty()) {
          return parse_error(line, j + 1, "unexpected text after quoted field");
        }
        ++j;
      }
      i = j;
    } else {
      const std::size_t comma = row.find(',', i);
      const std::size_t end = comma == std::string_view::npos ? row.size() : comma;
      f.text = std::string(trim(row.substr(i, end - i)));
      i = end;
    }
    out.push_back(std::move(f));
    if (i >= row.size()) break;
    ++i;  // skip comma
  }
  return out;
}

Expected<double, DataError> parse_weight(const Field& f, std::size_t line) {
  const std::string& s = f.text;
  if (s.empty()) return parse_error(line, f.column, "empty weight");
  std::size_t dot = std::string::npos;
  for (std::size_t k = 0; k < s.size(); ++k) {
    const char ch = s[k];
    if (ch == '.' && dot == std::string::npos) {
      dot = k;
    } else if (!(ch >= '0' && ch <= '9') && !(k == 0 && (ch == '-' || ch == '+'))) {
      return parse_error(line, f.column + k, "invalid character in weight");
    }
  }
  if (dot != std::string::npos && s.size() - dot - 1 > 6) {
    return parse_error(line, f.column + dot, "more than 6 decimal places");
  }
  const char* first = s.data() + (s[0] == '+' ? 1 : 0);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(first, s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    return parse_error(line, f.column, "malformed weight");
  }
  if (v < 0.0 || v > 1.0) {
    return DataError{DataErrorKind::RangeError, line, f.column, "weight outside [0, 1]: " + s};
  }
  return v;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos && trim(s).size() == s.size()) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out.push_back('"');
    out.push_back(ch);
  }
  out.push_back('"');
  return out;
}

}  // namespace

const Item* ConceptPair::find(std::string_view item) const {
  for (const auto& it : items) {
    if (it.name == item) return &it;
  }
  return nullptr;
}

std::vector<MembershipTriple> ConceptPair::triples() const {
  std::vector<MembershipTriple> out;
  out.reserve(items.size());
  for (const auto& it : items) out.push_back(it.t);
  return out;
}

const ConceptPair* Dataset::find(std::string_view pair_id) const {
  for (const auto& p : pairs) {
    if (p.pair_id == pair_id) return &p;
  }
  return nullptr;
}

const Item* Dataset::find(std::string_view pair_id, std::string_view item) const {
  const ConceptPair* p = find(pair_id);
  return p == nullptr ? nullptr : p->find(item);
}

std::size_t Dataset::item_count() const {
  std::size_t n = 0;
  for (const auto& p : pairs) n += p.items.size();
  return n;
}

std::string to_string(const DataError& e) {
  std::ostringstream os;
  os << (e.kind == DataErrorKind::ParseError ? "parse error" : "range error") << " at line "
     << e.line << ", column " << e.column << ": " << e.message;
  return os.str();
}

Expected<Dataset, DataError> parse_dataset(std::istream& in) {
  Dataset d;
  std::string raw;
  std::size_t line = 0;
  bool header = false;
  while (std::getline(in, raw)) {
    ++line;
    const std::string_view row = trim(raw);
    if (row.empty() || row.front() == '#') continue;
    if (!header) {
      if (row != kCsvHeader) {
        return parse_error(line, 1, "expected header '" + std::string(kCsvHeader) + "'");
      }
      header = true;
      continue;
    }
    auto fields = split_row(raw, line);
    if (!fields) return fields.error();
    const auto& f = *fields;
    if (f.size() != 6) {
      const std::size_t col = f.size() > 6 ? f[6].column : raw.size() + 1;
      return parse_error(line, col, "expected 6 fields, found " + std::to_string(f.size()));
    }
    if (f[0].text.empty()) return parse_error(line, f[0].column, "empty pair_id");
    if (f[1].text.empty()) return parse_error(line, f[1].column, "empty item");

    Connective c;
    if (f[2].text == "conj") {
      c = Connective::Conjunction;
    } else if (f[2].text == "disj") {
      c = Connective::Disjunction;
    } else {
      return parse_error(line, f[2].column, "connective must be conj or disj");
    }
    MembershipTriple t;
    t.connective = c;
    double* slots[3] = {&t.mu_a, &t.mu_b, &t.mu_combo};
    for (std::size_t k = 0; k < 3; ++k) {
      auto w = parse_weight(f[3 + k], line);
      if (!w) return w.error();
      *slots[k] = *w;
    }

    ConceptPair* pair = nullptr;
    for (auto& p : d.pairs) {
      if (p.pair_id == f[0].text) pair = &p;
    }
    if (pair == nullptr) {
      d.pairs.push_back({f[0].text, "", "", c, {}});
      pair = &d.pairs.back();
    } else if (pair->connective != c) {
      return parse_error(line, f[2].column, "pair '" + f[0].text + "' already uses another connective");
    }
    if (pair->find(f[1].text) != nullptr) {
      return parse_error(line, f[1].column, "duplicate item '" + f[1].text + "'");
    }
    pair->items.push_back({f[1].text, t});
  }
  if (!header) return parse_error(line == 0 ? 1 : line, 1, "missing header");
  return d;
}

Expected<Dataset, DataError> parse_dataset(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_dataset(in);
}

void write_dataset(std::ostream& out, const Dataset& d) {
  out << kCsvHeader << '\n';
  const auto flags = out.flags();
  const auto prec = out.precision();
  out << std::fixed << std::setprecision(6);
  for (const auto& p : d.pairs) {
    for (const auto& it : p.items) {
      out << csv_field(p.pair_id) << ',' << csv_field(it.name) << ','
          << to_string(it.t.connective) << ',' << it.t.mu_a << ',' << it.t.mu_b << ','
          << it.t.mu_combo << '\n';
    }
  }
  out.flags(flags);
  out.precision(prec);
}

}  // namespace qc
