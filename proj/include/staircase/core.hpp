#pragma once

// Staircase tableau data model: placement rules, type word, u/q labeling,
// weight monomials and the Greek-letter statistics.
//
// Coordinates: rows 1..n top to bottom, row i spans columns 1..n+1-i, and the
// diagonal cell of row i is (i, n+1-i). Column j therefore holds rows
// 1..n+1-j. "Left of" and "above" are plain index comparisons.

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace staircase {

enum class GreekSymbol : std::uint8_t { Alpha, Beta, Gamma, Delta };

inline constexpr std::array<GreekSymbol, 4> kAllSymbols = {
    GreekSymbol::Alpha, GreekSymbol::Beta, GreekSymbol::Gamma, GreekSymbol::Delta};

/// Alpha and Gamma ("AG-class") forbid entries above them in their column.
constexpr bool is_ag(GreekSymbol s) {
  return s == GreekSymbol::Alpha || s == GreekSymbol::Gamma;
}

/// Beta and Delta ("BD-class") forbid entries left of them in their row.
constexpr bool is_bd(GreekSymbol s) { return !is_ag(s); }

constexpr char symbol_char(GreekSymbol s) {
  switch (s) {
    case GreekSymbol::Alpha: return 'A';
    case GreekSymbol::Beta: return 'B';
    case GreekSymbol::Gamma: return 'G';
    case GreekSymbol::Delta: return 'D';
  }
  return '?';
}

inline GreekSymbol parse_symbol(char c) {
  switch (c) {
    case 'A': return GreekSymbol::Alpha;
    case 'B': return GreekSymbol::Beta;
    case 'G': return GreekSymbol::Gamma;
    case 'D': return GreekSymbol::Delta;
    default: throw std::invalid_argument(std::string("unknown symbol '") + c + "'");
  }
}

struct Cell {
  int row = 0;
  int col = 0;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

struct Entry {
  Cell cell;
  GreekSymbol symbol = GreekSymbol::Alpha;
  friend bool operator==(const Entry&, const Entry&) = default;
};

/// A size-n filling. Holds only the non-empty cells, kept sorted by
/// (row, column); this is also the canonical order used for serialization.
/// The placement rules are not enforced here, see validate().
class Tableau {
 public:
  Tableau() = default;

  Tableau(int n, std::vector<Entry> entries) : n_(n), entries_(std::move(entries)) {
    if (n_ < 0) throw std::invalid_argument("tableau size must be non-negative");
    std::sort(entries_.begin(), entries_.end(),
              [](const Entry& a, const Entry& b) { return a.cell < b.cell; });
    for (std::size_t i = 1; i < entries_.size(); ++i) {
      if (entries_[i - 1].cell == entries_[i].cell)
        throw std::invalid_argument("duplicate cell in tableau");
    }
  }

  int size() const { return n_; }
  const std::vector<Entry>& entries() const { return entries_; }

  std::optional<GreekSymbol> at(Cell c) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), c,
                               [](const Entry& e, const Cell& key) { return e.cell < key; });
    if (it != entries_.end() && it->cell == c) return it->symbol;
    return std::nullopt;
  }

  static constexpr bool in_shape(int n, Cell c) {
    return c.row >= 1 && c.row <= n && c.col >= 1 && c.col <= n + 1 - c.row;
  }

  static constexpr long cell_count(int n) { return static_cast<long>(n) * (n + 1) / 2; }

  friend bool operator==(const Tableau&, const Tableau&) = default;

 private:
  int n_ = 0;
  std::vector<Entry> entries_;
};

// ---------------------------------------------------------------------------
// Validation

enum class Rule { OutOfShape, EmptyDiagonal, EntryLeftOfBD, EntryAboveAG };

inline const char* rule_name(Rule r) {
  switch (r) {
    case Rule::OutOfShape: return "cell outside staircase shape";
    case Rule::EmptyDiagonal: return "empty diagonal cell";
    case Rule::EntryLeftOfBD: return "entry left of BD-class";
    case Rule::EntryAboveAG: return "entry above AG-class";
  }
  return "unknown";
}

struct Violation {
  Rule rule;
  Cell cell;  // the offending cell (for left/above rules: the blocked entry)
  std::string message() const {
    return std::string(rule_name(rule)) + " at (" + std::to_string(cell.row) + "," +
           std::to_string(cell.col) + ")";
  }
};

struct ValidationResult {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  bool has(Rule r) const {
    return std::any_of(violations.begin(), violations.end(),
                       [r](const Violation& v) { return v.rule == r; });
  }
};

namespace detail {

// Dense scratch grid over the staircase, -1 meaning empty.
class Grid {
 public:
  explicit Grid(const Tableau& t) : n_(t.size()), cells_(Tableau::cell_count(t.size()), -1) {
    for (const auto& e : t.entries()) {
      if (Tableau::in_shape(n_, e.cell)) cells_[index(e.cell)] = static_cast<int>(e.symbol);
    }
  }
  int size() const { return n_; }
  std::optional<GreekSymbol> at(int row, int col) const {
    const int v = cells_[index({row, col})];
    if (v < 0) return std::nullopt;
    return static_cast<GreekSymbol>(v);
  }

 private:
  std::size_t index(Cell c) const {
    const long i = c.row - 1;
    return static_cast<std::size_t>(i * (n_ + 1) - i * (i + 1) / 2 + (c.col - 1));
  }
  int n_;
  std::vector<int> cells_;
};

}  // namespace detail

inline ValidationResult validate(const Tableau& t) {
  ValidationResult out;
  const int n = t.size();
  for (const auto& e : t.entries()) {
    if (!Tableau::in_shape(n, e.cell)) out.violations.push_back({Rule::OutOfShape, e.cell});
  }
  const detail::Grid grid(t);
  for (int i = 1; i <= n; ++i) {
    if (!grid.at(i, n + 1 - i)) out.violations.push_back({Rule::EmptyDiagonal, {i, n + 1 - i}});
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n + 1 - i; ++j) {
      const auto s = grid.at(i, j);
      if (!s) continue;
      if (is_bd(*s)) {
        for (int jj = 1; jj < j; ++jj)
          if (grid.at(i, jj)) out.violations.push_back({Rule::EntryLeftOfBD, {i, jj}});
      } else {
        for (int ii = 1; ii < i; ++ii)
          if (grid.at(ii, j)) out.violations.push_back({Rule::EntryAboveAG, {ii, j}});
      }
    }
  }
  return out;
}

inline void require_valid(const Tableau& t) {
  const auto result = validate(t);
  if (!result.ok())
    throw std::invalid_argument("invalid staircase tableau: " + result.violations.front().message());
}

// ---------------------------------------------------------------------------
// Type word

enum class Occupancy : std::uint8_t { Open, Filled };

/// Diagonal read NE to SW; position k is site k of the exclusion process.
class TypeWord {
 public:
  TypeWord() = default;
  explicit TypeWord(std::vector<Occupancy> word) : word_(std::move(word)) {}

  /// Site k (0-based) is bit k.
  static TypeWord from_bits(std::uint64_t bits, int n) {
    std::vector<Occupancy> w(n);
    for (int k = 0; k < n; ++k) w[k] = ((bits >> k) & 1U) ? Occupancy::Filled : Occupancy::Open;
    return TypeWord(std::move(w));
  }

  std::size_t size() const { return word_.size(); }
  Occupancy operator[](std::size_t k) const { return word_[k]; }
  const std::vector<Occupancy>& word() const { return word_; }

  std::uint64_t bits() const {
    if (word_.size() > 64) throw std::out_of_range("type word longer than 64 sites");
    std::uint64_t b = 0;
    for (std::size_t k = 0; k < word_.size(); ++k)
      if (word_[k] == Occupancy::Filled) b |= std::uint64_t{1} << k;
    return b;
  }

  std::size_t filled() const {
    return static_cast<std::size_t>(std::count(word_.begin(), word_.end(), Occupancy::Filled));
  }

  /// UTF-8 bullets: filled as U+2022, open as U+25E6.
  std::string str() const {
    std::string s;
    for (auto o : word_) s += (o == Occupancy::Filled) ? "•" : "◦";
    return s;
  }

  /// ASCII form, '1' filled and '0' open.
  std::string ascii() const {
    std::string s;
    for (auto o : word_) s += (o == Occupancy::Filled) ? '1' : '0';
    return s;
  }

  friend bool operator==(const TypeWord&, const TypeWord&) = default;

 private:
  std::vector<Occupancy> word_;
};

inline TypeWord type_word(const Tableau& t) {
  require_valid(t);
  const int n = t.size();
  std::vector<Occupancy> w(n);
  for (int k = 1; k <= n; ++k) {
    const GreekSymbol s = *t.at({k, n + 1 - k});
    w[k - 1] = (s == GreekSymbol::Alpha || s == GreekSymbol::Delta) ? Occupancy::Filled
                                                                     : Occupancy::Open;
  }
  return TypeWord(std::move(w));
}

// ---------------------------------------------------------------------------
// u/q labeling and weights

enum class Label : std::uint8_t { U, Q };

struct LabeledCell {
  Cell cell;
  Label label;
  friend bool operator==(const LabeledCell&, const LabeledCell&) = default;
};

struct LabeledTableau {
  Tableau base;
  std::vector<LabeledCell> labels;  // sorted by cell

  std::size_t count(Label l) const {
    return static_cast<std::size_t>(std::count_if(
        labels.begin(), labels.end(), [l](const LabeledCell& c) { return c.label == l; }));
  }
  std::optional<Label> label_at(Cell c) const {
    for (const auto& lc : labels)
      if (lc.cell == c) return lc.label;
    return std::nullopt;
  }
};

/// Row pass first: empty cells left of a Beta get U, left of a Delta get Q.
/// Column pass on what is left: an empty cell takes U if the nearest entry
/// below it is Alpha or Delta, Q if it is Beta or Gamma.
inline LabeledTableau label_uq(const Tableau& t) {
  require_valid(t);
  const int n = t.size();
  const detail::Grid grid(t);
  LabeledTableau out{t, {}};
  for (int i = 1; i <= n; ++i) {
    const int width = n + 1 - i;
    // A BD entry can only be the leftmost entry of its row.
    int first = 1;
    while (first <= width && !grid.at(i, first)) ++first;
    const GreekSymbol leftmost = *grid.at(i, first);
    for (int j = 1; j <= width; ++j) {
      if (grid.at(i, j)) continue;
      if (j < first && is_bd(leftmost)) {
        out.labels.push_back({{i, j}, leftmost == GreekSymbol::Beta ? Label::U : Label::Q});
        continue;
      }
      std::optional<GreekSymbol> below;
      for (int ii = i + 1; ii <= n + 1 - j && !below; ++ii) below = grid.at(ii, j);
      if (!below) throw std::logic_error("u/q labeling left a cell uncovered");
      const bool u = *below == GreekSymbol::Alpha || *below == GreekSymbol::Delta;
      out.labels.push_back({{i, j}, u ? Label::U : Label::Q});
    }
  }
  if (static_cast<long>(out.labels.size() + t.entries().size()) != Tableau::cell_count(n))
    throw std::logic_error("u/q labeling does not cover the staircase");
  return out;
}

/// Exponents of alpha, beta, gamma, delta, u, q in that order.
struct WeightMonomial {
  std::array<int, 6> exponents{};

  enum Var { kAlpha = 0, kBeta, kGamma, kDelta, kU, kQ };

  int operator[](Var v) const { return exponents[v]; }
  int degree() const {
    int d = 0;
    for (int e : exponents) d += e;
    return d;
  }
  friend auto operator<=>(const WeightMonomial&, const WeightMonomial&) = default;
};

inline WeightMonomial weight(const Tableau& t) {
  const LabeledTableau lt = label_uq(t);
  WeightMonomial w;
  for (const auto& e : t.entries()) {
    switch (e.symbol) {
      case GreekSymbol::Alpha: ++w.exponents[WeightMonomial::kAlpha]; break;
      case GreekSymbol::Beta: ++w.exponents[WeightMonomial::kBeta]; break;
      case GreekSymbol::Gamma: ++w.exponents[WeightMonomial::kGamma]; break;
      case GreekSymbol::Delta: ++w.exponents[WeightMonomial::kDelta]; break;
    }
  }
  for (const auto& l : lt.labels)
    ++w.exponents[l.label == Label::U ? WeightMonomial::kU : WeightMonomial::kQ];
  return w;
}

// ---------------------------------------------------------------------------
// Statistics

struct StatVector {
  int r = 0;       // rows whose leftmost entry is AG-class
  int delta = 0;   // BD-class entries
  int gamma = 0;   // AG-class entries
  int a_diag = 0;  // AG-class entries on the diagonal
  int b_diag = 0;  // BD-class entries on the diagonal
  friend bool operator==(const StatVector&, const StatVector&) = default;
};

inline StatVector statistics(const Tableau& t) {
  require_valid(t);
  const int n = t.size();
  StatVector s;
  int current_row = 0;
  for (const auto& e : t.entries()) {  // sorted by (row, col): first of a row is leftmost
    const bool ag = is_ag(e.symbol);
    if (e.cell.row != current_row) {
      current_row = e.cell.row;
      if (ag) ++s.r;
    }
    (ag ? s.gamma : s.delta) += 1;
    if (e.cell.col == n + 1 - e.cell.row) (ag ? s.a_diag : s.b_diag) += 1;
  }
  return s;
}

// ---------------------------------------------------------------------------
// Canonical text forms
//
// Document form:
//   size <n>
//   <i> <j> <S>        one line per non-empty cell, sorted by (i, j)
// Line form (one tableau per line, used for streaming):
//   <n>;<i> <j> <S>;<i> <j> <S>...

inline std::string to_text(const Tableau& t) {
  std::ostringstream os;
  os << "size " << t.size() << '\n';
  for (const auto& e : t.entries())
    os << e.cell.row << ' ' << e.cell.col << ' ' << symbol_char(e.symbol) << '\n';
  return os.str();
}

inline std::string to_line(const Tableau& t) {
  std::string s = std::to_string(t.size());
  for (const auto& e : t.entries()) {
    s += ';';
    s += std::to_string(e.cell.row);
    s += ' ';
    s += std::to_string(e.cell.col);
    s += ' ';
    s += symbol_char(e.symbol);
  }
  return s;
}

namespace detail {

inline Entry parse_entry(const std::string& record) {
  std::istringstream is(record);
  Entry e;
  std::string sym;
  if (!(is >> e.cell.row >> e.cell.col >> sym) || sym.size() != 1)
    throw std::invalid_argument("malformed tableau cell record: '" + record + "'");
  std::string rest;
  if (is >> rest) throw std::invalid_argument("trailing data in cell record: '" + record + "'");
  e.symbol = parse_symbol(sym[0]);
  return e;
}

}  // namespace detail

inline Tableau from_text(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  int n = -1;
  std::vector<Entry> entries;
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    if (n < 0) {
      std::istringstream hs(line);
      std::string word;
      if (!(hs >> word >> n) || word != "size" || n < 0)
        throw std::invalid_argument("expected 'size <n>' header");
      continue;
    }
    entries.push_back(detail::parse_entry(line));
  }
  if (n < 0) throw std::invalid_argument("missing size header");
  return Tableau(n, std::move(entries));
}

inline Tableau from_line(const std::string& line) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : line) {
    if (c == ';') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  int n = 0;
  try {
    std::size_t pos = 0;
    n = std::stoi(parts[0], &pos);
    if (pos != parts[0].size()) throw std::invalid_argument("size");
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed tableau line: '" + line + "'");
  }
  std::vector<Entry> entries;
  for (std::size_t i = 1; i < parts.size(); ++i) entries.push_back(detail::parse_entry(parts[i]));
  return Tableau(n, std::move(entries));
}

}  // namespace staircase
