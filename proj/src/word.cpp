#include "lipscomb/word.hpp"

#include <algorithm>
#include <numeric>

#include "lipscomb/error.hpp"

namespace lipscomb {

namespace {

// Length of the shortest p dividing |w| with w = u^(|w|/p).
std::size_t primitive_root_length(const std::vector<Symbol>& w) {
  const std::size_t n = w.size();
  std::vector<std::size_t> border(n, 0);
  for (std::size_t i = 1; i < n; ++i) {
    std::size_t k = border[i - 1];
    while (k > 0 && w[i] != w[k]) k = border[k - 1];
    if (w[i] == w[k]) ++k;
    border[i] = k;
  }
  std::size_t p = n - border[n - 1];
  return n % p == 0 ? p : n;
}

bool all_single_char(const Labels& alphabet) {
  return std::all_of(alphabet.begin(), alphabet.end(),
                     [](const std::string& l) { return l.size() == 1; });
}

std::vector<Symbol> parse_symbols(const Graph& g, std::string_view segment) {
  std::vector<Symbol> out;
  if (segment.empty()) return out;
  auto lookup = [&](std::string_view token) {
    if (token.empty()) throw InvalidInput("empty symbol in word literal");
    return g.index_of(std::string(token));
  };
  if (segment.find('.') != std::string_view::npos) {
    std::size_t start = 0;
    while (true) {
      std::size_t dot = segment.find('.', start);
      out.push_back(lookup(segment.substr(start, dot - start)));
      if (dot == std::string_view::npos) break;
      start = dot + 1;
    }
  } else if (all_single_char(g.labels())) {
    for (char c : segment) out.push_back(lookup(std::string_view(&c, 1)));
  } else {
    out.push_back(lookup(segment));
  }
  return out;
}

std::string join_symbols(const Labels& alphabet, const std::vector<Symbol>& symbols) {
  const char* sep = all_single_char(alphabet) ? "" : ".";
  std::string out;
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    if (i > 0) out += sep;
    out += alphabet[symbols[i]];
  }
  return out;
}

}  // namespace

AddressWord::AddressWord(std::shared_ptr<const Labels> alphabet, std::vector<Symbol> prefix,
                         std::vector<Symbol> period)
    : alphabet_(std::move(alphabet)), prefix_(std::move(prefix)), period_(std::move(period)) {
  if (!alphabet_) throw InvalidInput("word needs an alphabet");
  if (period_.empty()) throw InvalidInput("word period must be nonempty");
  for (Symbol s : prefix_)
    if (s >= alphabet_->size()) throw InvalidInput("symbol outside alphabet");
  for (Symbol s : period_)
    if (s >= alphabet_->size()) throw InvalidInput("symbol outside alphabet");
  period_.resize(primitive_root_length(period_));
  while (!prefix_.empty() && prefix_.back() == period_.back()) {
    prefix_.pop_back();
    std::rotate(period_.rbegin(), period_.rbegin() + 1, period_.rend());
  }
}

AddressWord AddressWord::constant(std::shared_ptr<const Labels> alphabet, Symbol a) {
  return AddressWord(std::move(alphabet), {}, {a});
}

Symbol AddressWord::at(std::size_t i) const {
  if (i == 0) throw InvalidInput("word indices start at 1");
  if (i <= prefix_.size()) return prefix_[i - 1];
  return period_[(i - prefix_.size() - 1) % period_.size()];
}

void require_same_alphabet(const Labels& a, const Labels& b) {
  if (&a != &b && a != b) throw InvalidInput("alphabet mismatch");
}

bool operator==(const AddressWord& a, const AddressWord& b) {
  require_same_alphabet(*a.alphabet_, *b.alphabet_);
  return a.prefix_ == b.prefix_ && a.period_ == b.period_;
}

bool operator<(const AddressWord& a, const AddressWord& b) {
  std::size_t m = first_difference(a, b);
  return m != 0 && a.at(m) < b.at(m);
}

std::size_t first_difference(const AddressWord& x, const AddressWord& y) {
  require_same_alphabet(*x.alphabet(), *y.alphabet());
  const std::size_t horizon = std::max(x.prefix().size(), y.prefix().size()) +
                              std::lcm(x.period().size(), y.period().size());
  for (std::size_t i = 1; i <= horizon; ++i)
    if (x.at(i) != y.at(i)) return i;
  return 0;
}

Rational baire_distance(const AddressWord& x, const AddressWord& y) {
  std::size_t m = first_difference(x, y);
  if (m == 0) return 0;
  return Rational(1, static_cast<unsigned long>(m));
}

namespace {

// True when x_i = c for every i > m.
bool constant_after(const AddressWord& x, std::size_t m, Symbol c) {
  return x.period().size() == 1 && x.period()[0] == c && x.prefix().size() <= m;
}

}  // namespace

bool are_identified(const Graph& g, const AddressWord& x, const AddressWord& y) {
  require_same_alphabet(g.labels(), *x.alphabet());
  std::size_t m = first_difference(x, y);
  if (m == 0) return true;
  Symbol a = x.at(m);
  Symbol b = y.at(m);
  return g.adjacent(a, b) && constant_after(x, m, b) && constant_after(y, m, a);
}

std::vector<AddressWord> class_of(const Graph& g, const AddressWord& x) {
  require_same_alphabet(g.labels(), *x.alphabet());
  std::vector<AddressWord> out{x};
  if (x.eventually_constant() && !x.prefix().empty()) {
    Symbol b = x.period()[0];
    Symbol a = x.prefix().back();  // != b by canonical form
    if (g.adjacent(a, b)) {
      std::vector<Symbol> prefix = x.prefix();
      prefix.back() = b;
      out.emplace_back(x.alphabet(), std::move(prefix), std::vector<Symbol>{a});
      std::sort(out.begin(), out.end());
    }
  }
  return out;
}

FiniteWord truncate(const AddressWord& x, std::size_t n) {
  FiniteWord out;
  out.symbols.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) out.symbols.push_back(x.at(i));
  return out;
}

AddressWord prepend(const FiniteWord& s, const AddressWord& w) {
  std::vector<Symbol> prefix = s.symbols;
  prefix.insert(prefix.end(), w.prefix().begin(), w.prefix().end());
  return AddressWord(w.alphabet(), std::move(prefix), w.period());
}

AddressWord parse_word(const Graph& g, std::string_view literal) {
  auto open = literal.find('(');
  if (open == std::string_view::npos || literal.empty() || literal.back() != ')' ||
      literal.find('(', open + 1) != std::string_view::npos)
    throw InvalidInput("word literal must look like pre(period): " + std::string(literal));
  auto prefix = parse_symbols(g, literal.substr(0, open));
  auto period = parse_symbols(g, literal.substr(open + 1, literal.size() - open - 2));
  if (period.empty()) throw InvalidInput("empty period in word literal: " + std::string(literal));
  return AddressWord(g.alphabet(), std::move(prefix), std::move(period));
}

std::string format_word(const AddressWord& x) {
  return join_symbols(*x.alphabet(), x.prefix()) + "(" + join_symbols(*x.alphabet(), x.period()) +
         ")";
}

FiniteWord parse_finite_word(const Graph& g, std::string_view literal) {
  return FiniteWord{parse_symbols(g, literal)};
}

std::string format_finite_word(const Labels& alphabet, const FiniteWord& w) {
  return join_symbols(alphabet, w.symbols);
}

}  // namespace lipscomb
