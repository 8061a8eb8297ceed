#include "polyadic/free_word.hpp"

#include <cstdlib>

#include "lexer.hpp"
#include "polyadic/error.hpp"

namespace polyadic {

namespace {

std::int64_t mod_pos(std::int64_t a, std::int64_t m) { return ((a % m) + m) % m; }

void append_runs(std::vector<Run>& out, const std::vector<Run>& more) {
  out.insert(out.end(), more.begin(), more.end());
}

class WordParser {
 public:
  WordParser(std::string_view text, Alphabet& alphabet) : lex_(text), alphabet_(alphabet) {}

  FreeWord parse() {
    std::vector<Run> runs = sequence();
    if (lex_.peek().kind != detail::Token::Kind::End) lex_.fail("unexpected '" + lex_.peek().text + "'");
    return reduce(runs);
  }

 private:
  std::vector<Run> sequence() {
    std::vector<Run> out;
    while (true) {
      lex_.accept('*');
      const auto& t = lex_.peek();
      bool starts = t.kind == detail::Token::Kind::Ident || t.kind == detail::Token::Kind::Number ||
                    lex_.at_punct('(');
      if (!starts) break;
      append_runs(out, factor());
    }
    return out;
  }

  std::vector<Run> factor() {
    std::vector<Run> base;
    if (lex_.accept('(')) {
      base = sequence();
      lex_.expect(')');
    } else if (lex_.peek().kind == detail::Token::Kind::Number) {
      if (lex_.peek().text != "1") lex_.fail("only 1 may appear as a number (the empty word)");
      lex_.take();
    } else {
      base.push_back({alphabet_.intern(lex_.take().text), 1});
    }
    FreeWord w = reduce(base);
    while (true) {
      if (lex_.accept('\'')) {
        w = w.inverse();
      } else if (lex_.accept('^')) {
        bool neg = lex_.accept('-');
        if (lex_.peek().kind != detail::Token::Kind::Number) lex_.fail("expected exponent");
        std::int64_t k = std::strtoll(lex_.take().text.c_str(), nullptr, 10);
        w = w.pow(neg ? -k : k);
      } else {
        break;
      }
    }
    return w.runs();
  }

  detail::Lexer lex_;
  Alphabet& alphabet_;
};

}  // namespace

Alphabet::Alphabet(std::vector<std::string> names) {
  for (auto& n : names) intern(n);
}

GenId Alphabet::intern(std::string_view name) {
  if (auto id = find(name)) return *id;
  names_.emplace_back(name);
  return static_cast<GenId>(names_.size() - 1);
}

std::optional<GenId> Alphabet::find(std::string_view name) const {
  for (GenId i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

FreeWord FreeWord::generator(GenId g, std::int64_t exp) {
  Run r{g, exp};
  return reduce(std::span(&r, 1));
}

std::uint64_t FreeWord::length() const noexcept {
  std::uint64_t len = 0;
  for (const auto& r : runs_) len += static_cast<std::uint64_t>(r.exp < 0 ? -r.exp : r.exp);
  return len;
}

std::int64_t FreeWord::height() const noexcept {
  std::int64_t h = 0;
  for (const auto& r : runs_) h += r.exp;
  return h;
}

FreeWord FreeWord::inverse() const {
  std::vector<Run> out(runs_.rbegin(), runs_.rend());
  for (auto& r : out) r.exp = -r.exp;
  FreeWord w;
  w.runs_ = std::move(out);
  return w;
}

FreeWord FreeWord::pow(std::int64_t k) const {
  if (k < 0) return inverse().pow(-k);
  FreeWord acc, base = *this;
  while (k > 0) {
    if (k & 1) acc = acc * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return acc;
}

FreeWord FreeWord::operator*(const FreeWord& rhs) const {
  std::vector<Run> all = runs_;
  append_runs(all, rhs.runs_);
  return reduce(all);
}

FreeWord reduce(std::span<const Run> letters) {
  FreeWord w;
  auto& stack = w.runs_;
  for (const Run& r : letters) {
    if (r.exp == 0) continue;
    if (!stack.empty() && stack.back().gen == r.gen) {
      stack.back().exp += r.exp;
      if (stack.back().exp == 0) stack.pop_back();
    } else {
      stack.push_back(r);
    }
  }
  return w;
}

std::int64_t height(const FreeWord& w) { return w.height(); }

bool in_polyadic_free(const FreeWord& w, unsigned n) {
  return mod_pos(w.height() - 1, std::int64_t(n) - 1) == 0;
}

PolyadicFreeWord::PolyadicFreeWord(FreeWord w, unsigned n) : word_(std::move(w)), n_(n) {
  if (n < 3) throw Error(ErrorCode::InvalidInput, "arity must be at least 3");
  if (!in_polyadic_free(word_, n))
    throw Error(ErrorCode::HeightViolation,
                "height " + std::to_string(word_.height()) + " is not 1 mod " + std::to_string(n - 1));
}

PolyadicFreeWord f_free(std::span<const FreeWord> operands, unsigned n) {
  if (operands.size() != n)
    throw Error(ErrorCode::ArityMismatch, "expected " + std::to_string(n) + " operands");
  std::vector<Run> all;
  for (std::size_t i = 0; i < operands.size(); ++i) {
    if (!in_polyadic_free(operands[i], n))
      throw Error(ErrorCode::HeightViolation,
                  "operand " + std::to_string(i) + " has height " +
                      std::to_string(operands[i].height()) + ", not 1 mod " + std::to_string(n - 1),
                  {std::int64_t(i)});
    append_runs(all, operands[i].runs());
  }
  return PolyadicFreeWord(reduce(all), n);
}

PolyadicFreeWord skew_free(const PolyadicFreeWord& w) {
  return PolyadicFreeWord(w.word().pow(2 - std::int64_t(w.arity())), w.arity());
}

MpWord::MpWord(std::vector<MpLetter> letters, unsigned n) : letters_(std::move(letters)), n_(n) {
  if (n < 3) throw Error(ErrorCode::InvalidInput, "arity must be at least 3");
  if (mod_pos(std::int64_t(letters_.size()) - 1, std::int64_t(n) - 1) != 0)
    throw Error(ErrorCode::LengthViolation, "length " + std::to_string(letters_.size()) +
                                                " is not 1 mod " + std::to_string(n - 1));
}

FreeWord mp_embed(const MpWord& m) {
  std::vector<Run> runs;
  runs.reserve(m.letters().size());
  const std::int64_t skew_exp = 2 - std::int64_t(m.arity());
  for (const auto& l : m.letters()) runs.push_back({l.gen, l.skewed ? skew_exp : 1});
  return reduce(runs);
}

bool mp_equal(const MpWord& a, const MpWord& b) {
  if (a.arity() != b.arity()) throw Error(ErrorCode::ArityMismatch, "words have different arities");
  return mp_embed(a) == mp_embed(b);
}

std::optional<MpWord> mp_contract(const MpWord& m, std::size_t pos) {
  const auto& ls = m.letters();
  const unsigned n = m.arity();
  if (pos + n > ls.size()) return std::nullopt;
  const GenId g = ls[pos].gen;
  unsigned skewed = 0;
  for (std::size_t k = pos; k < pos + n; ++k) {
    if (ls[k].gen != g) return std::nullopt;
    skewed += ls[k].skewed ? 1u : 0u;
  }
  if (skewed != 1) return std::nullopt;
  std::vector<MpLetter> out(ls.begin(), ls.begin() + pos);
  out.push_back({g, false});
  out.insert(out.end(), ls.begin() + pos + n, ls.end());
  return MpWord(std::move(out), n);
}

MpWord mp_expand(const MpWord& m, std::size_t pos, unsigned i) {
  const auto& ls = m.letters();
  const unsigned n = m.arity();
  if (pos >= ls.size() || ls[pos].skewed || i >= n)
    throw Error(ErrorCode::InvalidInput, "expansion needs an unskewed letter and 0 <= i <= n-1");
  const GenId g = ls[pos].gen;
  std::vector<MpLetter> out(ls.begin(), ls.begin() + pos);
  for (unsigned k = 0; k < n; ++k) out.push_back({g, k == i});
  out.insert(out.end(), ls.begin() + pos + 1, ls.end());
  return MpWord(std::move(out), n);
}

FreeWord parse_word(std::string_view text, Alphabet& alphabet) {
  return WordParser(text, alphabet).parse();
}

MpWord parse_mp_word(std::string_view text, unsigned n, Alphabet& alphabet) {
  detail::Lexer lex(text);
  std::vector<MpLetter> letters;
  while (lex.peek().kind != detail::Token::Kind::End) {
    lex.accept('*');
    bool skewed = lex.accept('~');
    if (lex.peek().kind != detail::Token::Kind::Ident) lex.fail("expected a generator");
    GenId g = alphabet.intern(lex.take().text);
    std::int64_t reps = 1;
    if (lex.accept('^')) {
      if (lex.peek().kind != detail::Token::Kind::Number) lex.fail("expected a repetition count");
      reps = std::strtoll(lex.take().text.c_str(), nullptr, 10);
    }
    for (std::int64_t k = 0; k < reps; ++k) letters.push_back({g, skewed});
  }
  return MpWord(std::move(letters), n);
}

std::string to_string(const FreeWord& w, const Alphabet& alphabet) {
  if (w.empty()) return "1";
  std::string out;
  for (const auto& r : w.runs()) {
    if (!out.empty()) out += "*";
    out += alphabet.name(r.gen);
    if (r.exp != 1) out += "^" + std::to_string(r.exp);
  }
  return out;
}

std::string to_string(const MpWord& m, const Alphabet& alphabet) {
  std::string out;
  for (const auto& l : m.letters()) {
    if (!out.empty()) out += " ";
    if (l.skewed) out += "~";
    out += alphabet.name(l.gen);
  }
  return out;
}

}  // namespace polyadic
