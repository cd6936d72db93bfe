#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "lipscomb/graph.hpp"
#include "lipscomb/rational.hpp"

namespace lipscomb {

using Symbol = Vertex;

// A finite word over a graph's vertex set.
struct FiniteWord {
  std::vector<Symbol> symbols;

  std::size_t length() const { return symbols.size(); }
  friend bool operator==(const FiniteWord&, const FiniteWord&) = default;
};

// An eventually periodic infinite word  prefix · period · period · ...
//
// Stored canonically: the period is primitive and the prefix does not end
// with the period's last symbol (otherwise that symbol would be absorbed by
// rotating the period). Two words are equal as infinite words iff their
// canonical forms coincide.
class AddressWord {
 public:
  // Throws InvalidInput on an empty period or a symbol outside the alphabet.
  AddressWord(std::shared_ptr<const Labels> alphabet, std::vector<Symbol> prefix,
              std::vector<Symbol> period);

  // Constant word a a a ...
  static AddressWord constant(std::shared_ptr<const Labels> alphabet, Symbol a);

  const std::vector<Symbol>& prefix() const { return prefix_; }
  const std::vector<Symbol>& period() const { return period_; }
  const std::shared_ptr<const Labels>& alphabet() const { return alphabet_; }

  // x_i for i >= 1. Throws InvalidInput for i == 0.
  Symbol at(std::size_t i) const;

  // The symbol c when the word is s · c c c ..., i.e. the period has length 1.
  bool eventually_constant() const { return period_.size() == 1; }

  friend bool operator==(const AddressWord& a, const AddressWord& b);
  friend bool operator<(const AddressWord& a, const AddressWord& b);

 private:
  std::shared_ptr<const Labels> alphabet_;
  std::vector<Symbol> prefix_;
  std::vector<Symbol> period_;
};

// Throws InvalidInput unless the two alphabets have the same labels.
void require_same_alphabet(const Labels& a, const Labels& b);

inline Symbol symbol_at(const AddressWord& x, std::size_t i) { return x.at(i); }

// First index (1-based) where x and y differ, or 0 if they are equal.
std::size_t first_difference(const AddressWord& x, const AddressWord& y);

// 0 if x == y, otherwise 1/m for the first differing index m.
Rational baire_distance(const AddressWord& x, const AddressWord& y);

// x ~ y: equal, or x = s a b b b ..., y = s b a a ... with {a, b} an edge.
bool are_identified(const Graph& g, const AddressWord& x, const AddressWord& y);

// The identification class of x (one or two words, sorted).
std::vector<AddressWord> class_of(const Graph& g, const AddressWord& x);

FiniteWord truncate(const AddressWord& x, std::size_t n);

// s · w, with s finite.
AddressWord prepend(const FiniteWord& s, const AddressWord& w);

// Word literals: "pre(period)". Symbols are written back to back when every
// label is one character long, otherwise separated by dots ("10.2(3)").
// Dots are accepted as separators in either case.
AddressWord parse_word(const Graph& g, std::string_view literal);
std::string format_word(const AddressWord& x);

FiniteWord parse_finite_word(const Graph& g, std::string_view literal);
std::string format_finite_word(const Labels& alphabet, const FiniteWord& w);

}  // namespace lipscomb
