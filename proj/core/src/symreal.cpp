#include "fe/symreal.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

#include "fe/error.hpp"

namespace fe {

std::string_view to_string(IndependenceMode mode) {
  return mode == IndependenceMode::QLinear ? "q-linear" : "algebraic";
}

IndependenceMode parse_mode(std::string_view text) {
  if (text == "q-linear") return IndependenceMode::QLinear;
  if (text == "algebraic") return IndependenceMode::Algebraic;
  throw InputError("unknown independence mode '" + std::string(text) + "'");
}

// ---------------------------------------------------------------------------
// SymbolTable

namespace {

bool valid_symbol_name(const std::string& name) {
  if (name.empty() || name == "1") return false;
  if (!std::isalpha(static_cast<unsigned char>(name.front())) && name.front() != '_') return false;
  return std::all_of(name.begin(), name.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

}  // namespace

TablePtr SymbolTable::create(std::vector<std::string> names, IndependenceMode mode) {
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (!valid_symbol_name(n)) throw InputError("invalid symbol name '" + n + "'");
    if (!seen.insert(n).second) throw InputError("duplicate symbol '" + n + "'");
  }
  return TablePtr(new SymbolTable(std::move(names), mode));
}

std::optional<std::size_t> SymbolTable::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  return std::nullopt;
}

bool SymbolTable::same_as(const SymbolTable& other) const {
  return this == &other || (mode_ == other.mode_ && names_ == other.names_);
}

TablePtr common_table(const TablePtr& a, const TablePtr& b) {
  if (!a) return b;
  if (!b || a == b) return a;
  if (!a->same_as(*b)) throw TableMismatch("operands use different symbol tables");
  return a;
}

// ---------------------------------------------------------------------------
// SymMonomial

SymMonomial::SymMonomial(std::vector<unsigned> exponents) : exps_(std::move(exponents)) {
  while (!exps_.empty() && exps_.back() == 0) exps_.pop_back();
  for (unsigned e : exps_) degree_ += e;
}

SymMonomial SymMonomial::variable(std::size_t index, unsigned power) {
  std::vector<unsigned> e(index + 1, 0);
  e[index] = power;
  return SymMonomial(std::move(e));
}

SymMonomial SymMonomial::operator*(const SymMonomial& other) const {
  if (other.is_constant()) return *this;
  if (is_constant()) return other;
  std::vector<unsigned> e(std::max(exps_.size(), other.exps_.size()), 0);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = exponent(i) + other.exponent(i);
  return SymMonomial(std::move(e));
}

std::optional<SymMonomial> SymMonomial::divide(const SymMonomial& other) const {
  if (other.exps_.size() > exps_.size()) return std::nullopt;
  std::vector<unsigned> e(exps_);
  for (std::size_t i = 0; i < other.exps_.size(); ++i) {
    if (e[i] < other.exps_[i]) return std::nullopt;
    e[i] -= other.exps_[i];
  }
  return SymMonomial(std::move(e));
}

std::strong_ordering operator<=>(const SymMonomial& a, const SymMonomial& b) {
  if (a.degree_ != b.degree_) return a.degree_ <=> b.degree_;
  const std::size_t n = std::max(a.exps_.size(), b.exps_.size());
  for (std::size_t i = 0; i < n; ++i) {
    const unsigned ea = a.exponent(i);
    const unsigned eb = b.exponent(i);
    if (ea != eb) return ea <=> eb;
  }
  return std::strong_ordering::equal;
}

// ---------------------------------------------------------------------------
// SymReal

SymReal::SymReal(Rational value) {
  if (!value.is_zero()) terms_.emplace_back(SymMonomial(), std::move(value));
}

SymReal SymReal::symbol(const TablePtr& table, std::size_t index) {
  if (!table || index >= table->size()) throw InputError("symbol index out of range");
  SymReal r;
  r.table_ = table;
  r.terms_.emplace_back(SymMonomial::variable(index), Rational(1));
  return r;
}

SymReal SymReal::symbol(const TablePtr& table, std::string_view name) {
  if (!table) throw InputError("no symbol table for '" + std::string(name) + "'");
  const auto idx = table->index_of(name);
  if (!idx) throw InputError("unknown symbol '" + std::string(name) + "'");
  return symbol(table, *idx);
}

SymReal SymReal::from_terms(const TablePtr& table, std::vector<Term> terms) {
  std::map<SymMonomial, Rational> acc;
  for (auto& [mono, coef] : terms) {
    if (!mono.is_constant()) {
      if (!table) throw InputError("symbolic term without a symbol table");
      if (mono.exponents().size() > table->size()) {
        throw InputError("monomial refers to a symbol outside the table");
      }
      if (table->mode() == IndependenceMode::QLinear && mono.degree() > 1) {
        throw ModeError("q-linear table cannot hold monomial of degree " +
                        std::to_string(mono.degree()));
      }
    }
    acc[mono] += coef;
  }
  SymReal r;
  r.table_ = table;
  for (auto& [mono, coef] : acc) {
    if (!coef.is_zero()) r.terms_.emplace_back(mono, std::move(coef));
  }
  r.normalize();
  return r;
}

void SymReal::normalize() {
  if (terms_.empty() || (terms_.size() == 1 && terms_.front().first.is_constant())) {
    table_.reset();
  }
}

Rational SymReal::rational() const {
  if (!is_rational()) throw InputError("value " + str() + " is not rational");
  return terms_.empty() ? Rational() : terms_.front().second;
}

Rational SymReal::coefficient(const SymMonomial& mono) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), mono,
                             [](const Term& t, const SymMonomial& m) { return t.first < m; });
  if (it != terms_.end() && it->first == mono) return it->second;
  return Rational();
}

unsigned SymReal::degree() const {
  return terms_.empty() ? 0U : terms_.back().first.degree();
}

SymReal& SymReal::operator+=(const SymReal& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  TablePtr t = common_table(table_, o.table_);
  if (terms_.size() == 1 && o.terms_.size() == 1 && terms_[0].first == o.terms_[0].first) {
    terms_[0].second += o.terms_[0].second;
    if (terms_[0].second.is_zero()) terms_.clear();
    table_ = std::move(t);
    normalize();
    return *this;
  }
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto i = terms_.begin();
  auto j = o.terms_.begin();
  while (i != terms_.end() || j != o.terms_.end()) {
    if (j == o.terms_.end() || (i != terms_.end() && i->first < j->first)) {
      out.push_back(std::move(*i++));
    } else if (i == terms_.end() || j->first < i->first) {
      out.push_back(*j++);
    } else {
      Rational c = i->second + j->second;
      if (!c.is_zero()) out.emplace_back(std::move(i->first), std::move(c));
      ++i;
      ++j;
    }
  }
  terms_ = std::move(out);
  table_ = std::move(t);
  normalize();
  return *this;
}

SymReal& SymReal::operator-=(const SymReal& o) { return *this += -o; }

SymReal SymReal::operator-() const {
  SymReal r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

SymReal& SymReal::operator*=(const Rational& r) {
  if (r.is_zero()) {
    terms_.clear();
    table_.reset();
    return *this;
  }
  for (auto& t : terms_) t.second *= r;
  return *this;
}

SymReal& SymReal::operator/=(const Rational& r) { return *this *= r.inverse(); }

SymReal SymReal::multiply(const SymReal& a, const SymReal& b, bool check_mode) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.is_rational()) {
    SymReal r = b;
    r *= a.terms_.front().second;
    return r;
  }
  if (b.is_rational()) {
    SymReal r = a;
    r *= b.terms_.front().second;
    return r;
  }
  TablePtr t = common_table(a.table_, b.table_);
  if (check_mode && t->mode() == IndependenceMode::QLinear) {
    throw ModeError("product of non-rational values " + a.str() + " and " + b.str() +
                    " needs an algebraic symbol table");
  }
  std::map<SymMonomial, Rational> acc;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) acc[ma * mb] += ca * cb;
  }
  SymReal r;
  r.table_ = std::move(t);
  r.terms_.reserve(acc.size());
  for (auto& [mono, coef] : acc) {
    if (!coef.is_zero()) r.terms_.emplace_back(mono, std::move(coef));
  }
  r.normalize();
  return r;
}

SymReal operator*(const SymReal& a, const SymReal& b) { return SymReal::multiply(a, b, true); }

SymReal& SymReal::operator*=(const SymReal& o) { return *this = multiply(*this, o, true); }

SymReal SymReal::pow(unsigned exponent) const {
  SymReal result(Rational(1));
  SymReal base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base *= base;
  }
  return result;
}

SymReal SymReal::exact_div(const SymReal& divisor) const {
  if (divisor.is_zero()) throw SingularSystem("exact division by zero");
  if (divisor.is_rational()) return *this / divisor.terms_.front().second;
  if (is_zero()) return {};
  const Term& lead = divisor.terms_.back();
  SymReal remainder = *this;
  std::vector<Term> quotient;
  while (!remainder.is_zero()) {
    const Term& top = remainder.terms_.back();
    auto mono = top.first.divide(lead.first);
    if (!mono) throw Error("inexact division of " + str() + " by " + divisor.str());
    SymReal step;
    step.table_ = common_table(remainder.table_, divisor.table_);
    step.terms_.emplace_back(*mono, top.second / lead.second);
    step.normalize();
    quotient.emplace_back(*mono, top.second / lead.second);
    remainder -= multiply(step, divisor, false);
  }
  SymReal q;
  q.table_ = common_table(table_, divisor.table_);
  std::sort(quotient.begin(), quotient.end(),
            [](const Term& x, const Term& y) { return x.first < y.first; });
  q.terms_ = std::move(quotient);
  q.normalize();
  return q;
}

SymReal SymReal::embed_into(const TablePtr& wider) const {
  if (is_rational()) return *this;
  const auto& names = table_->names();
  if (!wider || wider->size() < names.size() ||
      !std::equal(names.begin(), names.end(), wider->names().begin())) {
    throw TableMismatch("target table does not extend the value's table");
  }
  SymReal r = *this;
  r.table_ = wider;
  return r;
}

bool operator==(const SymReal& a, const SymReal& b) {
  if (a.terms_ != b.terms_) return false;
  if (a.table_ == b.table_) return true;
  return a.table_ && b.table_ && a.table_->same_as(*b.table_);
}

bool operator<(const SymReal& a, const SymReal& b) {
  if (a.terms_.size() != b.terms_.size()) return a.terms_.size() < b.terms_.size();
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    const auto c = a.terms_[i].first <=> b.terms_[i].first;
    if (c != 0) return c < 0;
    if (a.terms_[i].second != b.terms_[i].second) return a.terms_[i].second < b.terms_[i].second;
  }
  return false;
}

std::string monomial_key(const SymMonomial& mono, const SymbolTable* table) {
  if (mono.is_constant()) return "1";
  if (!table) throw InputError("symbolic monomial without a symbol table");
  std::string out;
  for (std::size_t i = 0; i < mono.exponents().size(); ++i) {
    const unsigned e = mono.exponent(i);
    if (e == 0) continue;
    if (!out.empty()) out += '*';
    out += table->names().at(i);
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

std::string SymReal::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [mono, coef] : terms_) {
    std::string piece;
    if (mono.is_constant()) {
      piece = coef.str();
    } else {
      const std::string key = monomial_key(mono, table_.get());
      if (coef == Rational(1)) {
        piece = key;
      } else if (coef == Rational(-1)) {
        piece = "-" + key;
      } else {
        piece = coef.str() + "*" + key;
      }
    }
    if (out.empty()) {
      out = piece;
    } else if (piece.front() == '-') {
      out += " - " + piece.substr(1);
    } else {
      out += " + " + piece;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  return out;
}

std::pair<std::size_t, unsigned> parse_power_factor(std::string_view factor, const TablePtr& table) {
  std::string_view name = factor;
  unsigned power = 1;
  if (const auto caret = factor.find('^'); caret != std::string_view::npos) {
    name = trim(factor.substr(0, caret));
    const Rational e = Rational::parse(factor.substr(caret + 1));
    if (!e.is_integer() || e.sign() < 0 || e.numerator() > 1000) {
      throw InputError("bad exponent in '" + std::string(factor) + "'");
    }
    power = static_cast<unsigned>(e.numerator().get_ui());
  }
  if (!table) throw InputError("unknown symbol '" + std::string(name) + "' (no symbols declared)");
  const auto idx = table->index_of(name);
  if (!idx) throw InputError("unknown symbol '" + std::string(name) + "'");
  return {*idx, power};
}

}  // namespace

SymMonomial parse_monomial_key(std::string_view key, const TablePtr& table) {
  key = trim(key);
  if (key == "1") return SymMonomial();
  std::vector<unsigned> exps(table ? table->size() : 0, 0);
  for (auto factor : split(key, '*')) {
    if (factor.empty()) throw InputError("malformed monomial key '" + std::string(key) + "'");
    const auto [idx, power] = parse_power_factor(factor, table);
    exps[idx] += power;
  }
  return SymMonomial(std::move(exps));
}

SymReal parse_symreal(std::string_view text, const TablePtr& table) {
  text = trim(text);
  if (text.empty()) throw InputError("empty value");
  std::vector<std::pair<bool, std::string_view>> terms;
  bool negative = false;
  std::size_t start = 0;
  char prev = '\0';
  for (std::size_t i = 0; i <= text.size(); ++i) {
    const bool at_end = i == text.size();
    const char c = at_end ? '\0' : text[i];
    if (at_end || ((c == '+' || c == '-') && prev != '\0' && prev != '*' && prev != '^' &&
                   prev != '/' && prev != '+' && prev != '-')) {
      terms.emplace_back(negative, trim(text.substr(start, i - start)));
      negative = c == '-';
      start = i + 1;
      prev = c;
      continue;
    }
    if ((c == '+' || c == '-') && (prev == '\0' || prev == '+' || prev == '-')) {
      if (c == '-') negative = !negative;
      start = i + 1;
      prev = c;
      continue;
    }
    if (!std::isspace(static_cast<unsigned char>(c))) prev = c;
  }
  SymReal total;
  for (const auto& [neg, body] : terms) {
    if (body.empty()) throw InputError("malformed value '" + std::string(text) + "'");
    SymReal term(Rational(neg ? -1 : 1));
    for (auto factor : split(body, '*')) {
      if (factor.empty()) throw InputError("malformed value '" + std::string(text) + "'");
      if (std::isdigit(static_cast<unsigned char>(factor.front()))) {
        term *= SymReal(Rational::parse(factor));
      } else {
        const auto [idx, power] = parse_power_factor(factor, table);
        term *= SymReal::symbol(table, idx).pow(power);
      }
    }
    total += term;
  }
  return total;
}

// ---------------------------------------------------------------------------
// Points

Point operator+(const Point& a, const Point& b) {
  if (a.size() != b.size()) throw InputError("point dimension mismatch");
  Point r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Point operator-(const Point& a, const Point& b) {
  if (a.size() != b.size()) throw InputError("point dimension mismatch");
  Point r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Point operator*(const SymReal& c, const Point& p) {
  Point r(p);
  for (auto& v : r) v = c * v;
  return r;
}

std::string to_string(const Point& p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ", ";
    out += p[i].str();
  }
  return out + ")";
}

TablePtr common_table(const Point& p) {
  TablePtr t;
  for (const auto& v : p) t = common_table(t, v.table());
  return t;
}

bool PointLess::operator()(const Point& a, const Point& b) const {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace fe
