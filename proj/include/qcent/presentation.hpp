#pragma once

// Group presentations: words over generators, the relator syntax tree, and
// the text format
//
//   group NAME { generators: x, y; relators: [x,[x,y]], (x y)^4; }
//
// Commutators are left-normed with [a,b] = a^-1 b^-1 a b throughout.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qcent {

struct Letter {
  std::size_t generator = 0;
  std::int64_t exponent = 0;

  bool operator==(const Letter&) const = default;
};

/// A word stored as runs of generator powers.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  static Word generator(std::size_t index, std::int64_t exponent = 1);

  const std::vector<Letter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  /// Number of letters counted with multiplicity, sum of |exponent|.
  std::int64_t length() const;

  Word inverse() const;
  /// Concatenation followed by free reduction.
  Word operator*(const Word& other) const;
  Word power(std::int64_t k) const;

  bool operator==(const Word&) const = default;

 private:
  std::vector<Letter> letters_;
};

Word free_reduce(const Word& w);
bool is_trivial_in_free(const Word& w);
/// [a,b] = a^-1 b^-1 a b, freely reduced.
Word commutator(const Word& a, const Word& b);

struct WordExpr;

/// One factor of a relator as written: a generator, a bracket [u,v] or a
/// parenthesised word, each with an optional exponent.
struct Factor {
  enum class Kind { generator, commutator, group };

  Kind kind = Kind::generator;
  std::size_t generator = 0;
  std::vector<WordExpr> operands;
  std::int64_t exponent = 1;
};

struct WordExpr {
  std::vector<Factor> factors;
};

bool operator==(const Factor& a, const Factor& b);
bool operator==(const WordExpr& a, const WordExpr& b);

Factor gen_factor(std::size_t generator, std::int64_t exponent = 1);
Factor commutator_factor(WordExpr a, WordExpr b, std::int64_t exponent = 1);
Factor group_factor(WordExpr w, std::int64_t exponent);

/// Expands brackets and powers into a freely reduced word.
Word desugar(const WordExpr& expr);

class Presentation {
 public:
  /// Validates names and relator indices and desugars the relators.
  Presentation(std::string name, std::vector<std::string> generator_names,
               std::vector<WordExpr> relator_exprs);

  const std::string& name() const { return name_; }
  const std::vector<std::string>& generator_names() const { return generator_names_; }
  std::size_t generator_count() const { return generator_names_.size(); }
  const std::vector<Word>& relators() const { return relators_; }
  const std::vector<WordExpr>& relator_exprs() const { return relator_exprs_; }
  std::optional<std::size_t> generator_index(std::string_view name) const;

  /// Same syntax tree (names, generators and relators as written).
  bool operator==(const Presentation& other) const;

 private:
  std::string name_;
  std::vector<std::string> generator_names_;
  std::vector<WordExpr> relator_exprs_;
  std::vector<Word> relators_;
};

/// Presentation of the free group on the given generator names.
Presentation free_presentation(std::string name, std::vector<std::string> generator_names);

bool is_identifier(std::string_view s);

/// Parses one or more `group` blocks.
std::vector<Presentation> parse_presentations(std::string_view text);
/// Parses text holding exactly one `group` block.
Presentation parse_presentation(std::string_view text);
/// Parses a single word over the given generator names.
Word parse_word(std::string_view text, const std::vector<std::string>& generator_names);

std::string to_string(const WordExpr& expr, const std::vector<std::string>& names);
std::string to_string(const Word& word, const std::vector<std::string>& names);
std::string to_string(const Presentation& pres);

}  // namespace qcent
