#pragma once

#include <string>
#include <vector>

#include "knotcalc/intmatrix.hpp"

namespace knotcalc {

struct Generator {
  std::string name;
  bool operator==(const Generator&) const = default;
};

// One letter of a group word: a generator index with an exponent sign.
struct Letter {
  std::size_t gen;
  int sign;  // +1 or -1
  bool operator==(const Letter&) const = default;
};

// Group word over the generators of an ambient presentation.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  bool operator==(const Word&) const = default;

  Word freely_reduced() const;
  Word cyclically_reduced() const;
  bool is_freely_reduced() const;
  // Rotate left by k; used by tests to probe cyclic invariance.
  Word rotated(std::size_t k) const;

 private:
  std::vector<Letter> letters_;
};

// Finite presentation with every relator freely and cyclically reduced and of
// word-length at least 2. Construction normalizes: empty relators are
// dropped, length-1 relators eliminate their generator by substitution.
class Presentation {
 public:
  Presentation() = default;
  // Normalizing constructor; `raw_relators` may be arbitrary words.
  Presentation(std::vector<Generator> generators, std::vector<Word> raw_relators);

  const std::vector<Generator>& generators() const { return generators_; }
  const std::vector<Word>& relators() const { return relators_; }
  bool operator==(const Presentation&) const = default;

 private:
  std::vector<Generator> generators_;
  std::vector<Word> relators_;
};

// Presentation whose relators all have word-length 2 or 3.
class TriangularPresentation {
 public:
  explicit TriangularPresentation(Presentation p);
  const Presentation& presentation() const { return p_; }

 private:
  Presentation p_;
};

// Grammar: `< g1, g2, ... | r1; r2, ... >`. Generator names match
// [a-zA-Z_][a-zA-Z0-9_]* except the reserved prefix `_t`. In relators, an
// uppercase letter stands for the inverse of a declared single-char lowercase
// generator; `^<int>` exponents apply to the preceding name.
Presentation parse_presentation(const std::string& text);

// Canonical form accepted back by parse_presentation.
std::string serialize_presentation(const Presentation& p);

// Sum over relators of (word-length - 2).
unsigned long presentation_length(const Presentation& p);

// Splits every relator longer than 3 with fresh generators `_t0, _t1, ...`,
// leftmost longest first, peeling letters from the left. Preserves the
// presentation length and the abelianization.
TriangularPresentation triangularize(const Presentation& p);

// Exponent-sum matrix, one row per relator, one column per generator.
IntMatrix abelianization_matrix(const Presentation& p);

}  // namespace knotcalc
