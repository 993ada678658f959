#include "transvect/sparse_poly.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace transvect {

// ---------------------------------------------------------------------------
// VarTable

VarTable::VarTable(std::vector<std::string> names) : names_(std::move(names)) {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i].empty()) {
      throw std::invalid_argument("VarTable: empty variable name");
    }
    if (!index_.emplace(names_[i], i).second) {
      throw std::invalid_argument("VarTable: duplicate variable '" + names_[i] + "'");
    }
  }
}

std::size_t VarTable::index_of(std::string_view name) const {
  auto idx = find(name);
  if (!idx) {
    throw std::invalid_argument("unknown variable '" + std::string(name) + "'");
  }
  return *idx;
}

std::optional<std::size_t> VarTable::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) {
    return std::nullopt;
  }
  return it->second;
}

VarTablePtr make_table(std::vector<std::string> names) {
  return std::make_shared<const VarTable>(std::move(names));
}

VarTablePtr extend_table(const VarTable& base, const std::vector<std::string>& extra) {
  std::vector<std::string> names = base.names();
  for (const auto& n : extra) {
    if (!base.contains(n) && std::find(names.begin(), names.end(), n) == names.end()) {
      names.push_back(n);
    }
  }
  return make_table(std::move(names));
}

VarTablePtr merge_tables(const VarTable& a, const VarTable& b) { return extend_table(a, b.names()); }

bool compatible(const VarTablePtr& a, const VarTablePtr& b) { return a == b || *a == *b; }

std::vector<std::size_t> indices_of(const VarTable& table, const std::vector<std::string>& names) {
  std::vector<std::size_t> out;
  out.reserve(names.size());
  for (const auto& n : names) {
    out.push_back(table.index_of(n));
  }
  return out;
}

bool grlex_greater(const Exponents& a, const Exponents& b) {
  unsigned da = std::accumulate(a.begin(), a.end(), 0u);
  unsigned db = std::accumulate(b.begin(), b.end(), 0u);
  if (da != db) {
    return da > db;
  }
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

namespace {

void require_compatible(const SparsePoly& a, const SparsePoly& b) {
  if (!compatible(a.table(), b.table())) {
    throw std::invalid_argument("polynomials live over different variable tables");
  }
}

void sort_terms(std::vector<Term>& terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& x, const Term& y) { return grlex_greater(x.exps, y.exps); });
}

std::uint16_t checked_exponent(unsigned long v) {
  if (v > std::numeric_limits<std::uint16_t>::max()) {
    throw std::overflow_error("exponent exceeds supported range");
  }
  return static_cast<std::uint16_t>(v);
}

} // namespace

// ---------------------------------------------------------------------------
// SparsePoly

SparsePoly::SparsePoly(VarTablePtr table) : table_(std::move(table)) {
  if (!table_) {
    throw std::invalid_argument("SparsePoly: null variable table");
  }
}

SparsePoly SparsePoly::constant(VarTablePtr table, const Rational& c) {
  Exponents zero(table->size(), 0);
  return monomial(std::move(table), c, std::move(zero));
}

SparsePoly SparsePoly::variable(VarTablePtr table, std::string_view name) {
  Exponents exps(table->size(), 0);
  exps[table->index_of(name)] = 1;
  return monomial(std::move(table), 1, std::move(exps));
}

SparsePoly SparsePoly::monomial(VarTablePtr table, const Rational& c, Exponents exps) {
  SparsePoly p(std::move(table));
  if (exps.size() != p.table_->size()) {
    throw std::invalid_argument("exponent vector length does not match variable table");
  }
  if (c != 0) {
    p.terms_.push_back(Term{std::move(exps), c});
  }
  return p;
}

SparsePoly SparsePoly::from_terms(VarTablePtr table, std::vector<Term> terms) {
  TermMap acc;
  for (auto& t : terms) {
    if (t.exps.size() != table->size()) {
      throw std::invalid_argument("exponent vector length does not match variable table");
    }
    acc[std::move(t.exps)] += t.coeff;
  }
  return from_map(std::move(table), std::move(acc));
}

SparsePoly SparsePoly::from_map(VarTablePtr table, TermMap&& terms) {
  SparsePoly p(std::move(table));
  p.terms_.reserve(terms.size());
  for (auto it = terms.begin(); it != terms.end(); ++it) {
    if (it->second != 0) {
      p.terms_.push_back(Term{it->first, std::move(it->second)});
    }
  }
  terms.clear();
  sort_terms(p.terms_);
  return p;
}

std::optional<Rational> SparsePoly::as_constant() const {
  if (terms_.empty()) {
    return Rational(0);
  }
  if (terms_.size() == 1 &&
      std::all_of(terms_[0].exps.begin(), terms_[0].exps.end(), [](auto v) { return v == 0; })) {
    return terms_[0].coeff;
  }
  return std::nullopt;
}

int SparsePoly::degree(std::span<const std::size_t> vars) const {
  int best = -1;
  for (const auto& t : terms_) {
    int d = 0;
    if (vars.empty()) {
      for (auto v : t.exps) {
        d += v;
      }
    } else {
      for (auto i : vars) {
        d += t.exps[i];
      }
    }
    best = std::max(best, d);
  }
  return best;
}

SparsePoly add_scaled(const SparsePoly& a, const SparsePoly& b, int sign) {
  require_compatible(a, b);
  SparsePoly out(a.table_);
  out.terms_.reserve(a.terms_.size() + b.terms_.size());
  auto ia = a.terms_.begin();
  auto ib = b.terms_.begin();
  while (ia != a.terms_.end() || ib != b.terms_.end()) {
    if (ib == b.terms_.end() || (ia != a.terms_.end() && grlex_greater(ia->exps, ib->exps))) {
      out.terms_.push_back(*ia++);
    } else if (ia == a.terms_.end() || grlex_greater(ib->exps, ia->exps)) {
      out.terms_.push_back(Term{ib->exps, sign > 0 ? ib->coeff : Rational(-ib->coeff)});
      ++ib;
    } else {
      Rational c = sign > 0 ? Rational(ia->coeff + ib->coeff) : Rational(ia->coeff - ib->coeff);
      if (c != 0) {
        out.terms_.push_back(Term{ia->exps, std::move(c)});
      }
      ++ia;
      ++ib;
    }
  }
  return out;
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& other) {
  *this = add_scaled(*this, other, +1);
  return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& other) {
  *this = add_scaled(*this, other, -1);
  return *this;
}

SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
  require_compatible(a, b);
  if (a.is_zero() || b.is_zero()) {
    return SparsePoly(a.table());
  }
  TermMap acc;
  acc.reserve(std::min<std::size_t>(a.size() * b.size(), 1u << 20));
  Exponents key(a.table()->size());
  Rational prod;
  for (const auto& ta : a.terms()) {
    for (const auto& tb : b.terms()) {
      for (std::size_t i = 0; i < key.size(); ++i) {
        key[i] = checked_exponent(static_cast<unsigned long>(ta.exps[i]) + tb.exps[i]);
      }
      mpq_mul(prod.get_mpq_t(), ta.coeff.get_mpq_t(), tb.coeff.get_mpq_t());
      auto it = acc.find(key);
      if (it == acc.end()) {
        acc.emplace(key, prod);
      } else {
        it->second += prod;
      }
    }
  }
  return SparsePoly::from_map(a.table(), std::move(acc));
}

SparsePoly& SparsePoly::operator*=(const SparsePoly& other) {
  *this = *this * other;
  return *this;
}

SparsePoly& SparsePoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) {
    t.coeff *= c;
  }
  return *this;
}

SparsePoly operator-(SparsePoly a) {
  for (auto& t : a.terms_) {
    t.coeff = -t.coeff;
  }
  return a;
}

bool operator==(const SparsePoly& a, const SparsePoly& b) {
  if (!compatible(a.table_, b.table_) || a.terms_.size() != b.terms_.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].exps != b.terms_[i].exps || a.terms_[i].coeff != b.terms_[i].coeff) {
      return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Free operations

SparsePoly pow(const SparsePoly& p, unsigned k) {
  SparsePoly result = SparsePoly::constant(p.table(), 1);
  SparsePoly base = p;
  while (k > 0) {
    if (k & 1u) {
      result *= base;
    }
    k >>= 1u;
    if (k > 0) {
      base *= base;
    }
  }
  return result;
}

SparsePoly derive(const SparsePoly& p, std::size_t var, unsigned order) {
  if (var >= p.table()->size()) {
    throw std::invalid_argument("derive: variable index out of range");
  }
  if (order == 0) {
    return p;
  }
  std::vector<Term> out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) {
    if (t.exps[var] < order) {
      continue;
    }
    Term nt{t.exps, t.coeff * Rational(falling_factorial(t.exps[var], order))};
    nt.exps[var] = static_cast<std::uint16_t>(nt.exps[var] - order);
    out.push_back(std::move(nt));
  }
  return SparsePoly::from_terms(p.table(), std::move(out));
}

SparsePoly derive(const SparsePoly& p, std::string_view var, unsigned order) {
  return derive(p, p.table()->index_of(var), order);
}

SparsePoly substitute(const SparsePoly& p, const Substitution& assignments) {
  const auto& table = p.table();
  struct Slot {
    std::size_t var;
    const SparsePoly* repl;
    std::vector<SparsePoly> powers; // powers[k] = repl^k, filled lazily
  };
  std::vector<Slot> slots;
  bool all_monomial = true;
  for (const auto& [name, repl] : assignments) {
    if (!compatible(table, repl.table())) {
      throw std::invalid_argument("substitute: replacement for '" + name +
                                  "' lives over a different variable table");
    }
    slots.push_back(Slot{table->index_of(name), &repl, {}});
    all_monomial = all_monomial && repl.size() <= 1;
  }
  std::vector<bool> assigned(table->size(), false);
  for (const auto& s : slots) {
    assigned[s.var] = true;
  }

  if (all_monomial) {
    // Fast path: every replacement is a single term (renaming, scaling, constants).
    TermMap acc;
    Exponents key(table->size());
    for (const auto& t : p.terms()) {
      Rational c = t.coeff;
      for (std::size_t i = 0; i < key.size(); ++i) {
        key[i] = assigned[i] ? 0 : t.exps[i];
      }
      bool vanished = false;
      for (const auto& s : slots) {
        unsigned k = t.exps[s.var];
        if (k == 0) {
          continue;
        }
        if (s.repl->is_zero()) {
          vanished = true;
          break;
        }
        const Term& r = s.repl->terms()[0];
        for (unsigned j = 0; j < k; ++j) {
          c *= r.coeff;
        }
        for (std::size_t i = 0; i < key.size(); ++i) {
          key[i] = checked_exponent(static_cast<unsigned long>(key[i]) + r.exps[i] * k);
        }
      }
      if (!vanished) {
        acc[key] += c;
      }
    }
    return SparsePoly::from_map(table, std::move(acc));
  }

  SparsePoly result(table);
  for (const auto& t : p.terms()) {
    Exponents rest = t.exps;
    for (const auto& s : slots) {
      rest[s.var] = 0;
    }
    SparsePoly term = SparsePoly::monomial(table, t.coeff, rest);
    for (auto& s : slots) {
      unsigned k = t.exps[s.var];
      if (k == 0) {
        continue;
      }
      if (s.powers.empty()) {
        s.powers.push_back(SparsePoly::constant(table, 1));
      }
      while (s.powers.size() <= k) {
        s.powers.push_back(s.powers.back() * *s.repl);
      }
      term *= s.powers[k];
    }
    result += term;
  }
  return result;
}

SparsePoly apply_diff_operator(const SparsePoly& op, std::span<const DiffSlot> slots,
                               const SparsePoly& target) {
  require_compatible(op, target);
  const auto& table = target.table();
  std::vector<std::pair<std::size_t, std::size_t>> bind;
  std::vector<bool> is_slot(table->size(), false);
  for (const auto& s : slots) {
    auto ov = op.table()->find(s.op_var);
    auto tv = table->find(s.target_var);
    if (!ov || !tv) {
      throw std::invalid_argument("apply_diff_operator: slot '" + s.op_var + "' -> '" +
                                  s.target_var + "' names an unknown variable");
    }
    bind.emplace_back(*ov, *tv);
    is_slot[*ov] = true;
  }

  TermMap acc;
  Exponents key(table->size());
  for (const auto& ot : op.terms()) {
    for (const auto& tt : target.terms()) {
      bool ok = true;
      Integer factor = 1;
      key = tt.exps;
      for (auto [ov, tv] : bind) {
        unsigned k = ot.exps[ov];
        if (k == 0) {
          continue;
        }
        if (key[tv] < k) {
          ok = false;
          break;
        }
        factor *= falling_factorial(key[tv], k);
        key[tv] = static_cast<std::uint16_t>(key[tv] - k);
      }
      if (!ok) {
        continue;
      }
      for (std::size_t i = 0; i < key.size(); ++i) {
        if (!is_slot[i] && ot.exps[i] != 0) {
          key[i] = checked_exponent(static_cast<unsigned long>(key[i]) + ot.exps[i]);
        }
      }
      Rational c = ot.coeff * tt.coeff;
      c *= Rational(factor);
      auto it = acc.find(key);
      if (it == acc.end()) {
        acc.emplace(key, std::move(c));
      } else {
        it->second += c;
      }
    }
  }
  return SparsePoly::from_map(table, std::move(acc));
}

SparsePoly coefficient_of(const SparsePoly& p,
                          const std::vector<std::pair<std::string, unsigned>>& monomial) {
  std::vector<std::pair<std::size_t, unsigned>> want;
  for (const auto& [name, e] : monomial) {
    want.emplace_back(p.table()->index_of(name), e);
  }
  std::vector<Term> out;
  for (const auto& t : p.terms()) {
    bool match = std::all_of(want.begin(), want.end(),
                             [&](const auto& w) { return t.exps[w.first] == w.second; });
    if (match) {
      Term nt = t;
      for (const auto& w : want) {
        nt.exps[w.first] = 0;
      }
      out.push_back(std::move(nt));
    }
  }
  return SparsePoly::from_terms(p.table(), std::move(out));
}

bool is_homogeneous(const SparsePoly& p, std::span<const std::size_t> vars, int degree) {
  for (const auto& t : p.terms()) {
    int d = 0;
    for (auto i : vars) {
      d += t.exps[i];
    }
    if (d != degree) {
      return false;
    }
  }
  return true;
}

std::optional<Rational> proportionality_factor(const SparsePoly& p, const SparsePoly& q) {
  require_compatible(p, q);
  if (q.is_zero()) {
    throw std::invalid_argument("proportionality_factor: reference polynomial is zero");
  }
  if (p.is_zero()) {
    return Rational(0);
  }
  if (p.size() != q.size()) {
    return std::nullopt;
  }
  Rational c = p.terms()[0].coeff / q.terms()[0].coeff;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p.terms()[i].exps != q.terms()[i].exps || p.terms()[i].coeff != c * q.terms()[i].coeff) {
      return std::nullopt;
    }
  }
  return c;
}

SparsePoly rebase(const SparsePoly& p, VarTablePtr table) {
  if (compatible(p.table(), table)) {
    return SparsePoly::from_terms(table, std::vector<Term>(p.terms().begin(), p.terms().end()));
  }
  const auto& src = *p.table();
  std::vector<std::optional<std::size_t>> map(src.size());
  for (std::size_t i = 0; i < src.size(); ++i) {
    map[i] = table->find(src.name(i));
  }
  std::vector<Term> out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) {
    Exponents e(table->size(), 0);
    for (std::size_t i = 0; i < src.size(); ++i) {
      if (t.exps[i] == 0) {
        continue;
      }
      if (!map[i]) {
        throw std::invalid_argument("rebase: variable '" + src.name(i) +
                                    "' is missing from the target table");
      }
      e[*map[i]] = t.exps[i];
    }
    out.push_back(Term{std::move(e), t.coeff});
  }
  return SparsePoly::from_terms(std::move(table), std::move(out));
}

std::vector<StructuredTerm> to_structured(const SparsePoly& p) {
  std::vector<StructuredTerm> out;
  for (const auto& t : p.terms()) {
    out.push_back({t.coeff.get_num().get_str(), t.coeff.get_den().get_str(), t.exps});
  }
  return out;
}

std::string to_text(const SparsePoly& p) {
  if (p.is_zero()) {
    return "0/1";
  }
  std::ostringstream os;
  bool first = true;
  for (const auto& t : p.terms()) {
    if (!first) {
      os << " + ";
    }
    first = false;
    os << to_string(t.coeff);
    for (std::size_t i = 0; i < t.exps.size(); ++i) {
      if (t.exps[i] != 0) {
        os << " * " << p.table()->name(i) << "^" << t.exps[i];
      }
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Parser

namespace {

class Parser {
public:
  Parser(VarTablePtr table, std::string_view text) : table_(std::move(table)), s_(text) {}

  SparsePoly parse() {
    SparsePoly r = expr();
    skip_ws();
    if (pos_ != s_.size()) {
      fail("unexpected trailing input");
    }
    return r;
  }

private:
  VarTablePtr table_;
  std::string_view s_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("parse_poly: " + what + " at offset " + std::to_string(pos_));
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) {
      ++pos_;
    }
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  SparsePoly expr() {
    SparsePoly acc(table_);
    bool negate = false;
    if (accept('-')) {
      negate = true;
    } else {
      accept('+');
    }
    SparsePoly t = term();
    acc = negate ? -t : t;
    while (true) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  SparsePoly term() {
    SparsePoly acc = factor();
    while (accept('*')) {
      acc *= factor();
    }
    return acc;
  }

  SparsePoly factor() {
    if (accept('-')) {
      return -factor();
    }
    SparsePoly base = primary();
    if (accept('^')) {
      base = pow(base, static_cast<unsigned>(number()));
    }
    return base;
  }

  unsigned long number() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      ++pos_;
    }
    if (start == pos_) {
      fail("expected a number");
    }
    return std::stoul(std::string(s_.substr(start, pos_ - start)));
  }

  SparsePoly primary() {
    skip_ws();
    if (accept('(')) {
      SparsePoly inner = expr();
      if (!accept(')')) {
        fail("expected ')'");
      }
      return inner;
    }
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        ++pos_;
      }
      Integer num(std::string(s_.substr(start, pos_ - start)));
      Integer den = 1;
      skip_ws();
      if (pos_ < s_.size() && s_[pos_] == '/') {
        ++pos_;
        skip_ws();
        start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
          ++pos_;
        }
        if (start == pos_) {
          fail("expected a denominator");
        }
        den = Integer(std::string(s_.substr(start, pos_ - start)));
        if (den == 0) {
          fail("zero denominator");
        }
      }
      Rational q(num, den);
      q.canonicalize();
      return SparsePoly::constant(table_, q);
    }
    std::size_t start = pos_;
    while (pos_ < s_.size() &&
           (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
      ++pos_;
    }
    if (start == pos_) {
      fail("expected a variable, number or '('");
    }
    return SparsePoly::variable(table_, s_.substr(start, pos_ - start));
  }
};

} // namespace

SparsePoly parse_poly(VarTablePtr table, std::string_view text) {
  return Parser(std::move(table), text).parse();
}

} // namespace transvect
