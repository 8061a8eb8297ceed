#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace polyadic {

using GenId = std::uint32_t;

// Interned generator names. Ids are assigned in first-seen order.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> names);

  GenId intern(std::string_view name);
  std::optional<GenId> find(std::string_view name) const;
  const std::string& name(GenId id) const { return names_.at(id); }
  std::size_t size() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }

 private:
  std::vector<std::string> names_;
};

// One run of a generator: gen^exp, exp != 0.
struct Run {
  GenId gen = 0;
  std::int64_t exp = 0;
  friend auto operator<=>(const Run&, const Run&) = default;
};

// A freely reduced word, stored run-length compressed: adjacent runs have
// different generators and no run has exponent zero.
class FreeWord {
 public:
  FreeWord() = default;

  static FreeWord generator(GenId g, std::int64_t exp = 1);

  const std::vector<Run>& runs() const noexcept { return runs_; }
  bool empty() const noexcept { return runs_.empty(); }
  // Number of letters, i.e. the sum of |exp|.
  std::uint64_t length() const noexcept;
  std::int64_t height() const noexcept;

  FreeWord inverse() const;
  FreeWord pow(std::int64_t k) const;
  FreeWord operator*(const FreeWord& rhs) const;

  friend bool operator==(const FreeWord&, const FreeWord&) = default;
  friend auto operator<=>(const FreeWord& a, const FreeWord& b) { return a.runs_ <=> b.runs_; }

  friend FreeWord reduce(std::span<const Run> letters);

 private:
  std::vector<Run> runs_;
};

// Free reduction of an arbitrary run sequence (zero exponents allowed).
// One left-to-right pass with a stack.
FreeWord reduce(std::span<const Run> letters);

// Exponent sum.
std::int64_t height(const FreeWord& w);

// Is ht(w) = 1 (mod n-1)?
bool in_polyadic_free(const FreeWord& w, unsigned n);

// An element of F_pol^n(X).
class PolyadicFreeWord {
 public:
  // Throws HeightViolation unless ht(w) = 1 (mod n-1).
  PolyadicFreeWord(FreeWord w, unsigned n);

  const FreeWord& word() const noexcept { return word_; }
  unsigned arity() const noexcept { return n_; }

  friend bool operator==(const PolyadicFreeWord&, const PolyadicFreeWord&) = default;

 private:
  FreeWord word_;
  unsigned n_;
};

// f(w_1..w_n) = w_1 w_2 ... w_n reduced. Throws HeightViolation naming the
// offending operand (0-based) in the witness, ArityMismatch on count.
PolyadicFreeWord f_free(std::span<const FreeWord> operands, unsigned n);

// w^(2-n).
PolyadicFreeWord skew_free(const PolyadicFreeWord& w);

// Words over X ∪ X̄ (the cancellation model).
struct MpLetter {
  GenId gen = 0;
  bool skewed = false;
  friend auto operator<=>(const MpLetter&, const MpLetter&) = default;
};

class MpWord {
 public:
  // Throws LengthViolation unless length = 1 (mod n-1).
  MpWord(std::vector<MpLetter> letters, unsigned n);

  const std::vector<MpLetter>& letters() const noexcept { return letters_; }
  unsigned arity() const noexcept { return n_; }

  friend bool operator==(const MpWord&, const MpWord&) = default;

 private:
  std::vector<MpLetter> letters_;
  unsigned n_;
};

// x -> x, x̄ -> x^(2-n).
FreeWord mp_embed(const MpWord& m);

// Cancellation equivalence, decided through the embedding.
bool mp_equal(const MpWord& a, const MpWord& b);

// If the letters at [pos, pos+n) form x^(i) x̄ x^(n-i-1) for some 0<=i<=n-1,
// replaces them by the single letter x. Returns nullopt otherwise.
std::optional<MpWord> mp_contract(const MpWord& m, std::size_t pos);

// Inverse move: replaces the (unskewed) letter x at pos by x^(i) x̄ x^(n-i-1).
MpWord mp_expand(const MpWord& m, std::size_t pos, unsigned i);

// Word syntax: generators are identifiers; x^-1 or x' inverts; x^k powers;
// juxtaposition or '*' concatenates; parentheses group; "1" is the empty
// word. In the Mp syntax, ~x marks a skewed letter.
FreeWord parse_word(std::string_view text, Alphabet& alphabet);
MpWord parse_mp_word(std::string_view text, unsigned n, Alphabet& alphabet);

// Canonical text, e.g. "x^2*y^-1*x*y^2"; the empty word prints as "1".
std::string to_string(const FreeWord& w, const Alphabet& alphabet);
std::string to_string(const MpWord& m, const Alphabet& alphabet);

}  // namespace polyadic
