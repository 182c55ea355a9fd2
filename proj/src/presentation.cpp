#include "knotcalc/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

#include "knotcalc/errors.hpp"

namespace knotcalc {

Word Word::freely_reduced() const {
  std::vector<Letter> out;
  for (const Letter& l : letters_) {
    if (!out.empty() && out.back().gen == l.gen && out.back().sign == -l.sign)
      out.pop_back();
    else
      out.push_back(l);
  }
  return Word(std::move(out));
}

bool Word::is_freely_reduced() const {
  for (std::size_t i = 0; i + 1 < letters_.size(); ++i)
    if (letters_[i].gen == letters_[i + 1].gen && letters_[i].sign == -letters_[i + 1].sign)
      return false;
  return true;
}

Word Word::cyclically_reduced() const {
  std::vector<Letter> w = freely_reduced().letters_;
  while (w.size() >= 2 && w.front().gen == w.back().gen && w.front().sign == -w.back().sign) {
    w.pop_back();
    w.erase(w.begin());
  }
  return Word(std::move(w));
}

Word Word::rotated(std::size_t k) const {
  if (letters_.empty()) return *this;
  std::vector<Letter> w = letters_;
  std::rotate(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k % w.size()), w.end());
  return Word(std::move(w));
}

namespace {

// Drops empty relators and eliminates length-1 relators by substituting the
// trivial generator away, to a fixpoint. Indices are remapped at the end.
void normalize(std::vector<Generator>& gens, std::vector<Word>& relators) {
  for (Word& r : relators) r = r.cyclically_reduced();

  std::vector<bool> killed(gens.size(), false);
  for (;;) {
    // Strip killed generators, re-reduce, drop empties.
    std::vector<Word> next;
    for (const Word& r : relators) {
      std::vector<Letter> kept;
      for (const Letter& l : r.letters())
        if (!killed[l.gen]) kept.push_back(l);
      Word reduced = Word(std::move(kept)).cyclically_reduced();
      if (!reduced.empty()) next.push_back(std::move(reduced));
    }
    relators = std::move(next);

    bool changed = false;
    for (const Word& r : relators)
      if (r.length() == 1 && !killed[r.letters()[0].gen]) {
        killed[r.letters()[0].gen] = true;
        changed = true;
      }
    if (!changed) break;
  }

  std::vector<std::size_t> remap(gens.size());
  std::vector<Generator> kept_gens;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    remap[i] = kept_gens.size();
    if (!killed[i]) kept_gens.push_back(gens[i]);
  }
  gens = std::move(kept_gens);
  for (Word& r : relators) {
    std::vector<Letter> ls = r.letters();
    for (Letter& l : ls) l.gen = remap[l.gen];
    r = Word(std::move(ls));
  }
}

}  // namespace

Presentation::Presentation(std::vector<Generator> generators, std::vector<Word> raw_relators)
    : generators_(std::move(generators)), relators_(std::move(raw_relators)) {
  std::set<std::string> seen;
  for (const Generator& g : generators_) {
    if (g.name.empty()) throw DomainError("empty generator name");
    if (!seen.insert(g.name).second) throw DomainError("duplicate generator name '" + g.name + "'");
  }
  for (const Word& r : relators_)
    for (const Letter& l : r.letters())
      if (l.gen >= generators_.size()) throw DomainError("relator letter out of generator range");
  if (generators_.empty() && !relators_.empty())
    throw DomainError("nonempty relator set over zero generators");
  normalize(generators_, relators_);
}

TriangularPresentation::TriangularPresentation(Presentation p) : p_(std::move(p)) {
  for (const Word& r : p_.relators())
    if (r.length() != 2 && r.length() != 3)
      throw DomainError("relator of length " + std::to_string(r.length()) +
                        " in a triangular presentation");
}

unsigned long presentation_length(const Presentation& p) {
  unsigned long total = 0;
  for (const Word& r : p.relators()) total += r.length() - 2;
  return total;
}

IntMatrix abelianization_matrix(const Presentation& p) {
  IntMatrix m(p.relators().size(), p.generators().size());
  for (std::size_t j = 0; j < p.relators().size(); ++j)
    for (const Letter& l : p.relators()[j].letters()) m.at(j, l.gen) += l.sign;
  return m;
}

TriangularPresentation triangularize(const Presentation& p) {
  std::vector<Generator> gens = p.generators();
  std::vector<Word> relators = p.relators();
  std::size_t fresh = 0;

  for (;;) {
    // Leftmost longest relator above length 3.
    std::size_t best = relators.size();
    for (std::size_t j = 0; j < relators.size(); ++j)
      if (relators[j].length() > 3 &&
          (best == relators.size() || relators[j].length() > relators[best].length()))
        best = j;
    if (best == relators.size()) break;

    const std::vector<Letter>& w = relators[best].letters();
    std::size_t u = gens.size();
    gens.push_back(Generator{"_t" + std::to_string(fresh++)});

    std::vector<Letter> head{{u, -1}, w[0], w[1]};       // u^-1 x1 x2
    std::vector<Letter> tail{{u, +1}};                   // u x3 ... xk
    tail.insert(tail.end(), w.begin() + 2, w.end());

    relators[best] = Word(std::move(head));
    relators.insert(relators.begin() + static_cast<std::ptrdiff_t>(best) + 1,
                    Word(std::move(tail)));
  }

  Presentation out(std::move(gens), std::move(relators));
  if (presentation_length(out) != presentation_length(p))
    throw CertificateError("triangularize changed the presentation length");
  return TriangularPresentation(std::move(out));
}

namespace {

struct Cursor {
  const std::string& s;
  std::size_t pos = 0;

  bool done() const { return pos >= s.size(); }
  char peek() const { return s[pos]; }
  void skip_ws() {
    while (!done() && std::isspace(static_cast<unsigned char>(peek()))) ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (done() || peek() != c) return false;
    ++pos;
    return true;
  }
  void expect(char c, const char* what) {
    if (!eat(c)) throw ParseError(std::string("expected '") + c + "' " + what, pos);
  }
};

bool is_name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_name_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

std::string read_name(Cursor& cur) {
  cur.skip_ws();
  if (cur.done() || !is_name_start(cur.peek()))
    throw ParseError("expected a generator name", cur.pos);
  std::size_t start = cur.pos;
  while (!cur.done() && is_name_char(cur.peek())) ++cur.pos;
  return cur.s.substr(start, cur.pos - start);
}

long read_signed_int(Cursor& cur) {
  cur.skip_ws();
  std::size_t start = cur.pos;
  bool neg = false;
  if (!cur.done() && (cur.peek() == '-' || cur.peek() == '+')) {
    neg = cur.peek() == '-';
    ++cur.pos;
  }
  if (cur.done() || !std::isdigit(static_cast<unsigned char>(cur.peek())))
    throw ParseError("expected an integer exponent", start);
  long v = 0;
  while (!cur.done() && std::isdigit(static_cast<unsigned char>(cur.peek()))) {
    v = v * 10 + (cur.peek() - '0');
    if (v > 1000000) throw ParseError("exponent too large", start);
    ++cur.pos;
  }
  return neg ? -v : v;
}

// One relator word, up to a separator or the closing '>'. Longest-match
// against declared generator names; uppercase single letters invert their
// lowercase generator when unambiguous.
Word read_relator(Cursor& cur, const std::map<std::string, std::size_t>& index) {
  std::vector<Letter> letters;
  for (;;) {
    cur.skip_ws();
    if (cur.done()) throw ParseError("unterminated relator", cur.pos);
    char c = cur.peek();
    if (c == ',' || c == ';' || c == '>') break;
    if (c == '*') {  // optional multiplication sign
      ++cur.pos;
      continue;
    }
    if (!is_name_start(c)) throw ParseError("unexpected character in relator", cur.pos);

    // Longest declared name starting here.
    std::size_t best_len = 0;
    std::size_t best_gen = 0;
    for (const auto& [name, gi] : index) {
      if (name.size() <= best_len) continue;
      if (cur.s.compare(cur.pos, name.size(), name) == 0) {
        best_len = name.size();
        best_gen = gi;
      }
    }
    int sign = +1;
    if (best_len == 0) {
      // Uppercase-inverse convention for single-char lowercase generators.
      std::string lower(1, static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
      auto it = index.find(lower);
      if (std::isupper(static_cast<unsigned char>(c)) && it != index.end()) {
        best_len = 1;
        best_gen = it->second;
        sign = -1;
      } else {
        std::size_t save = cur.pos;
        std::string name = read_name(cur);
        cur.pos = save;
        throw ParseError("unknown generator '" + name + "' in relator", save);
      }
    }
    cur.pos += best_len;

    long exponent = 1;
    cur.skip_ws();
    if (!cur.done() && cur.peek() == '^') {
      ++cur.pos;
      exponent = read_signed_int(cur);
    }
    long reps = exponent < 0 ? -exponent : exponent;
    int total_sign = exponent < 0 ? -sign : sign;
    for (long k = 0; k < reps; ++k) letters.push_back(Letter{best_gen, total_sign});
  }
  return Word(std::move(letters));
}

}  // namespace

Presentation parse_presentation(const std::string& text) {
  Cursor cur{text};
  cur.expect('<', "to open the presentation");

  std::vector<Generator> gens;
  std::map<std::string, std::size_t> index;
  cur.skip_ws();
  if (!cur.done() && cur.peek() != '|' && cur.peek() != '>') {
    for (;;) {
      std::size_t at = cur.pos;
      std::string name = read_name(cur);
      if (name.rfind("_t", 0) == 0)
        throw ParseError("generator prefix '_t' is reserved", at);
      if (index.count(name)) throw ParseError("duplicate generator '" + name + "'", at);
      index[name] = gens.size();
      gens.push_back(Generator{name});
      if (!(cur.eat(',') || cur.eat(';'))) break;
    }
  }

  std::vector<Word> relators;
  cur.skip_ws();
  if (cur.eat('|')) {
    for (;;) {
      cur.skip_ws();
      if (cur.done()) throw ParseError("unterminated presentation", cur.pos);
      if (cur.peek() == '>') break;
      if (gens.empty()) throw ParseError("relator given but no generators declared", cur.pos);
      relators.push_back(read_relator(cur, index));
      if (!(cur.eat(',') || cur.eat(';'))) break;
    }
  }
  cur.expect('>', "to close the presentation");
  cur.skip_ws();
  if (!cur.done()) throw ParseError("trailing input after '>'", cur.pos);

  return Presentation(std::move(gens), std::move(relators));
}

namespace {

bool all_single_lower(const std::vector<Generator>& gens) {
  return std::all_of(gens.begin(), gens.end(), [](const Generator& g) {
    return g.name.size() == 1 && std::islower(static_cast<unsigned char>(g.name[0]));
  });
}

}  // namespace

std::string serialize_presentation(const Presentation& p) {
  const bool compact = all_single_lower(p.generators());
  std::string out = "<";
  for (std::size_t i = 0; i < p.generators().size(); ++i) {
    if (i) out += ",";
    out += p.generators()[i].name;
  }
  out += " | ";
  for (std::size_t j = 0; j < p.relators().size(); ++j) {
    if (j) out += ", ";
    const auto& letters = p.relators()[j].letters();
    for (std::size_t k = 0; k < letters.size(); ++k) {
      const std::string& name = p.generators()[letters[k].gen].name;
      if (compact) {
        out += letters[k].sign > 0
                   ? name
                   : std::string(1, static_cast<char>(std::toupper(
                                        static_cast<unsigned char>(name[0]))));
      } else {
        if (k) out += " ";
        out += name;
        if (letters[k].sign < 0) out += "^-1";
      }
    }
  }
  out += ">";
  return out;
}

}  // namespace knotcalc
