#include "homcheck/cli/spec.hpp"

#include <algorithm>
#include <cctype>

#include "homcheck/cli/runner.hpp"
#include "homcheck/scalar/symbols.hpp"

namespace homcheck::cli {

namespace {

std::string describe(Loc at, const std::string& message, const std::set<std::string>& expected) {
  std::string s = std::to_string(at.line) + ":" + std::to_string(at.column) + ": " + message;
  if (!expected.empty()) {
    s += " (expected ";
    bool first = true;
    for (const auto& e : expected) {
      s += (first ? "" : ", ") + e;
      first = false;
    }
    s += ")";
  }
  return s;
}

}  // namespace

SpecError::SpecError(std::string kind, Loc at, const std::string& message,
                     std::set<std::string> expected)
    : Error(std::move(kind), describe(at, message, expected)),
      at_(at),
      message_(message),
      expected_(std::move(expected)) {}

// ---------------------------------------------------------------------------
// Lexer

namespace {

enum class Tok { Ident, Int, Punct, End };

struct Token {
  Tok kind;
  std::string text;
  Loc at;
  std::size_t begin, end;  // byte offsets
};

std::string quoted(const Token& t) {
  if (t.kind == Tok::End) return "end of input";
  return "'" + t.text + "'";
}

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  Loc at;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t j = 0; j < n; ++j, ++i) {
      unsigned char c = src[i];
      if (c == '\n') {
        ++at.line;
        at.column = 1;
      } else if ((c & 0xC0) != 0x80) {
        ++at.column;
      }
    }
  };
  auto ident_char = [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
  };
  while (i < src.size()) {
    char c = src[i];
    if (c == '#') {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    Token t{Tok::Punct, {}, at, i, i};
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < src.size() && ident_char(src[j])) ++j;
      t.kind = Tok::Ident;
      t.text = std::string(src.substr(i, j - i));
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      t.kind = Tok::Int;
      t.text = std::string(src.substr(i, j - i));
    } else if (c == '-' && i + 1 < src.size() && src[i + 1] == '>') {
      t.text = "->";
    } else if (std::string_view("{};,:+-*/^()@=").find(c) != std::string_view::npos) {
      t.text = std::string(1, c);
    } else {
      throw SpecError("SyntaxError", at, "unexpected character '" + std::string(1, c) + "'");
    }
    advance(t.text.size());
    t.end = i;
    out.push_back(std::move(t));
  }
  out.push_back({Tok::End, {}, at, i, i});
  return out;
}

// ---------------------------------------------------------------------------
// Parser

const std::set<std::string> kBlockKeywords{"params",  "algebra", "coalgebra", "morphism",
                                           "module",  "rmatrix", "rform",     "suite"};
const std::set<std::string> kCheckKinds{"confluence", "hom-algebra", "hom-coalgebra",
                                        "hom-bialgebra", "relations", "module",
                                        "compat", "qt", "cobraided", "preset"};

/// Context of a sum: which identifiers are letters.
struct Letters {
  const std::vector<std::string>* names = nullptr;
  std::optional<std::size_t> find(const std::string& n) const {
    if (!names) return std::nullopt;
    auto it = std::find(names->begin(), names->end(), n);
    if (it == names->end()) return std::nullopt;
    return static_cast<std::size_t>(it - names->begin());
  }
};

struct Term {
  Scalar coeff;
  std::vector<Word> factors;  // empty for a pure scalar
};

class Parser {
 public:
  /// `symbols` restricts scalar identifiers to the declared ones (nullptr:
  /// anything already in the symbol table).
  Parser(std::string_view src, const std::vector<std::string>* symbols)
      : toks_(lex(src)), symbols_(symbols) {}

  const Token& peek(std::size_t k = 0) const { return toks_[std::min(pos_ + k, toks_.size() - 1)]; }
  bool at_punct(std::string_view p, std::size_t k = 0) const {
    return peek(k).kind == Tok::Punct && peek(k).text == p;
  }
  bool at_ident(std::string_view w) const { return peek().kind == Tok::Ident && peek().text == w; }
  bool at_end() const { return peek().kind == Tok::End; }
  Token take() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }

  [[noreturn]] void fail(std::set<std::string> expected, const std::string& what = {}) const {
    throw SpecError("SyntaxError", peek().at,
                    what.empty() ? "unexpected " + quoted(peek()) : what, std::move(expected));
  }
  Token expect(std::string_view p) {
    if (!at_punct(p)) fail({"'" + std::string(p) + "'"});
    return take();
  }
  Token expect_ident(const std::string& what = "name") {
    if (peek().kind != Tok::Ident) fail({what});
    return take();
  }
  Token expect_keyword(std::string_view w) {
    if (!at_ident(w)) fail({"'" + std::string(w) + "'"});
    return take();
  }
  unsigned long long expect_int(const std::string& what = "integer") {
    if (peek().kind != Tok::Int) fail({what});
    Token t = take();
    if (t.text.size() > 12)
      throw SpecError("SyntaxError", t.at, "integer " + t.text + " is too large");
    return std::stoull(t.text);
  }
  /// Identifier possibly containing hyphens written without spaces
  /// (`hom-algebra`, `uq-sl2-derived`).
  Token expect_hyphenated(const std::string& what) {
    if (peek().kind != Tok::Ident) fail({what});
    Token t = take();
    while (at_punct("-") && peek().begin == t.end &&
           (peek(1).kind == Tok::Ident || peek(1).kind == Tok::Int) && peek(1).begin == peek().end) {
      take();
      Token n = take();
      t.text += "-" + n.text;
      t.end = n.end;
    }
    return t;
  }

  // Scalars -------------------------------------------------------------------

  Scalar symbol(const Token& t) const {
    bool declared = t.text == "q" ||
                    (symbols_ ? std::find(symbols_->begin(), symbols_->end(), t.text) != symbols_->end()
                              : Symbols::find(t.text).has_value());
    if (!declared)
      throw SpecError("UnresolvedName", t.at, "unknown name '" + t.text + "'");
    return Scalar::sym(t.text);
  }

  Scalar scalar_atom(const Letters& letters) {
    if (peek().kind == Tok::Int) {
      Token t = take();
      return Scalar(BigInt(t.text));
    }
    if (peek().kind == Tok::Ident) {
      if (letters.find(peek().text)) fail({"scalar"}, "generator '" + peek().text + "' inside a scalar");
      return symbol(take());
    }
    if (at_punct("(")) {
      take();
      Scalar s = scalar_sum(letters);
      expect(")");
      return s;
    }
    fail({"integer", "parameter", "'('"});
  }

  Scalar scalar_power(const Letters& letters) {
    Scalar base = scalar_atom(letters);
    if (!at_punct("^")) return base;
    take();
    bool neg = false;
    if (at_punct("-")) {
      take();
      neg = true;
    }
    Loc at = peek().at;
    long long e = static_cast<long long>(expect_int("exponent"));
    if (neg && base.is_zero()) throw SpecError("SyntaxError", at, "negative power of zero");
    return base.pow(neg ? -e : e);
  }

  Scalar scalar_product(const Letters& letters) {
    Scalar s = scalar_power(letters);
    while (at_punct("*") || at_punct("/")) {
      bool div = take().text == "/";
      Loc at = peek().at;
      Scalar f = scalar_power(letters);
      if (div && f.is_zero()) throw SpecError("SyntaxError", at, "division by zero");
      s = div ? s / f : s * f;
    }
    return s;
  }

  Scalar scalar_sum(const Letters& letters) {
    Scalar s;
    bool first = true;
    while (true) {
      Scalar sign(1);
      if (at_punct("+") || at_punct("-")) {
        if (take().text == "-") sign = Scalar(-1);
      } else if (!first) {
        break;
      }
      s += sign * scalar_product(letters);
      first = false;
    }
    return s;
  }

  // Sums of words and tensors --------------------------------------------------

  bool starts_word(const Letters& letters, std::size_t arity) const {
    if (peek().kind == Tok::Ident) return letters.find(peek().text).has_value();
    // `1` is the unit word only where a tensor factor is expected
    return arity > 1 && peek().kind == Tok::Int && peek().text == "1" && at_punct("@", 1);
  }

  Word word(const Letters& letters) {
    if (peek().kind == Tok::Int && peek().text == "1") {
      take();
      return {};
    }
    Word w;
    while (peek().kind == Tok::Ident) {
      auto id = letters.find(peek().text);
      if (!id) break;
      take();
      std::size_t times = 1;
      if (at_punct("^")) {
        take();
        times = expect_int("exponent");
      }
      for (std::size_t i = 0; i < times; ++i) w += letter_word(*id);
    }
    if (w.empty()) {
      if (peek().kind == Tok::Ident)
        throw SpecError("UnresolvedName", peek().at, "unknown generator '" + peek().text + "'");
      fail({"generator", "'1'"});
    }
    return w;
  }

  std::vector<Word> tensor_body(const Letters& letters, std::size_t arity) {
    std::vector<Word> f{word(letters)};
    while (f.size() < arity) {
      expect("@");
      f.push_back(word(letters));
    }
    return f;
  }

  Term term(const Letters& letters, std::size_t arity) {
    Term t{Scalar(1), {}};
    while (true) {
      if (starts_word(letters, arity)) {
        t.factors = tensor_body(letters, arity);
        return t;
      }
      t.coeff *= scalar_power(letters);
      while (at_punct("/")) {
        take();
        Loc at = peek().at;
        Scalar d = scalar_power(letters);
        if (d.is_zero()) throw SpecError("SyntaxError", at, "division by zero");
        t.coeff /= d;
      }
      if (!at_punct("*")) return t;
      take();
    }
  }

  std::vector<Term> sum(const Letters& letters, std::size_t arity) {
    std::vector<Term> out;
    bool first = true;
    while (true) {
      Scalar sign(1);
      if (at_punct("+") || at_punct("-")) {
        if (take().text == "-") sign = Scalar(-1);
      } else if (!first) {
        break;
      }
      Loc at = peek().at;
      Term t = term(letters, arity);
      t.coeff *= sign;
      if (t.factors.empty() && arity > 1 && !t.coeff.is_zero())
        throw SpecError("SyntaxError", at, "scalar term in a tensor", {"'@'"});
      out.push_back(std::move(t));
      first = false;
    }
    return out;
  }

  NcPoly poly(const std::vector<std::string>& gens) {
    NcPoly p;
    for (auto& t : sum({&gens}, 1)) p.add(t.factors.empty() ? Word() : t.factors[0], t.coeff);
    return p;
  }

  TensorPoly<2> tensor(const std::vector<std::string>& gens) {
    TensorPoly<2> p;
    for (auto& t : sum({&gens}, 2))
      if (!t.factors.empty()) p.add({t.factors[0], t.factors[1]}, t.coeff);
    return p;
  }

  LinComb<long long> vec(const std::vector<std::string>& basis) {
    LinComb<long long> v;
    Loc at = peek().at;
    for (auto& t : sum({&basis}, 1)) {
      if (t.factors.empty()) {
        if (t.coeff.is_zero()) continue;
        throw SpecError("SyntaxError", at, "scalar term in a module vector", {"basis element"});
      }
      if (t.factors[0].size() != 1)
        throw SpecError("SyntaxError", at, "product of basis elements", {"basis element"});
      v.add(static_cast<long long>(letter_id(t.factors[0][0])), t.coeff);
    }
    return v;
  }

  // Blocks -----------------------------------------------------------------------

  SpecFile file() {
    SpecFile s;
    while (!at_end()) {
      if (peek().kind != Tok::Ident || !kBlockKeywords.count(peek().text)) fail(kBlockKeywords);
      std::string kw = take().text;
      if (kw == "params") {
        params_block(s);
        continue;
      }
      Token name = expect_ident("block name");
      if (names_.count(name.text))
        throw SpecError("DuplicateName", name.at, "'" + name.text + "' is already declared");
      names_.insert(name.text);
      if (kw == "algebra") {
        s.order.emplace_back(kw, s.algebras.size());
        s.algebras.push_back(algebra_block(s, name.text));
      } else if (kw == "morphism") {
        s.order.emplace_back(kw, s.morphisms.size());
        s.morphisms.push_back(morphism_block(s, name.text));
      } else if (kw == "coalgebra") {
        s.order.emplace_back(kw, s.coalgebras.size());
        s.coalgebras.push_back(coalgebra_block(s, name.text));
      } else if (kw == "module") {
        s.order.emplace_back(kw, s.modules.size());
        s.modules.push_back(module_block(s, name.text));
      } else if (kw == "rmatrix") {
        s.order.emplace_back(kw, s.rmatrices.size());
        s.rmatrices.push_back(rmatrix_block(s, name.text));
      } else if (kw == "rform") {
        s.order.emplace_back(kw, s.rforms.size());
        s.rforms.push_back(rform_block(s, name.text));
      } else {
        s.order.emplace_back(kw, s.suites.size());
        s.suites.push_back(suite_block(s, name.text));
      }
    }
    return s;
  }

  std::vector<std::string> name_list(const std::string& what) {
    std::vector<std::string> out{expect_ident(what).text};
    while (at_punct(",")) {
      take();
      out.push_back(expect_ident(what).text);
    }
    return out;
  }

  void params_block(SpecFile& s) {
    if (!s.params.empty() || params_seen_)
      throw SpecError("DuplicateName", toks_[pos_ - 1].at, "second params block");
    params_seen_ = true;
    s.order.emplace_back("params", 0);
    expect("{");
    while (!at_punct("}")) {
      std::vector<Token> names{expect_ident("parameter")};
      while (at_punct(",")) {
        take();
        names.push_back(expect_ident("parameter"));
      }
      expect(";");
      for (const auto& t : names) {
        if (t.text == "q" || std::find(s.params.begin(), s.params.end(), t.text) != s.params.end())
          throw SpecError("DuplicateName", t.at, "parameter '" + t.text + "' is already declared");
        try {
          Symbols::index(t.text);
        } catch (const Error& e) {
          throw SpecError("SyntaxError", t.at, e.what());
        }
        s.params.push_back(t.text);
        symbols_ = &s.params;
      }
    }
    expect("}");
  }

  void check_fresh_letter(const SpecFile& s, const Token& t, const std::vector<std::string>& seen,
                          const char* what) {
    if (std::find(seen.begin(), seen.end(), t.text) != seen.end())
      throw SpecError("DuplicateName", t.at, std::string(what) + " '" + t.text + "' is repeated");
    if (t.text == "q" || std::find(s.params.begin(), s.params.end(), t.text) != s.params.end())
      throw SpecError("DuplicateName", t.at, std::string(what) + " '" + t.text + "' is a parameter");
    if (kReserved.count(t.text))
      throw SpecError("DuplicateName", t.at, "'" + t.text + "' is a keyword");
  }

  AlgebraDecl algebra_block(const SpecFile& s, std::string name) {
    AlgebraDecl a;
    a.name = std::move(name);
    expect("{");
    expect_keyword("gens");
    do {
      if (!a.gens.empty()) take();
      Token g = expect_ident("generator");
      check_fresh_letter(s, g, a.gens, "generator");
      a.gens.push_back(g.text);
    } while (at_punct(","));
    expect(";");
    while (!at_punct("}")) {
      if (at_ident("rel")) {
        take();
        Word lhs = word({&a.gens});
        expect("->");
        a.rules.emplace_back(lhs, poly(a.gens));
      } else if (at_ident("eq")) {
        take();
        NcPoly lhs = poly(a.gens);
        expect("=");
        a.eqs.emplace_back(lhs, poly(a.gens));
      } else if (at_ident("budget")) {
        take();
        a.budget = expect_int("step budget");
      } else {
        fail({"'rel'", "'eq'", "'budget'", "'}'"});
      }
      expect(";");
    }
    expect("}");
    return a;
  }

  const AlgebraDecl& algebra_ref(const SpecFile& s) {
    Token t = expect_ident("algebra name");
    const AlgebraDecl* a = s.algebra(t.text);
    if (!a) throw SpecError("UnresolvedName", t.at, "no algebra named '" + t.text + "'");
    return *a;
  }

  const CoalgebraDecl& coalgebra_ref(const SpecFile& s) {
    Token t = expect_ident("coalgebra name");
    const CoalgebraDecl* c = s.coalgebra(t.text);
    if (!c) throw SpecError("UnresolvedName", t.at, "no coalgebra named '" + t.text + "'");
    return *c;
  }

  std::size_t generator_ref(const AlgebraDecl& a) {
    Token t = expect_ident("generator");
    auto id = Letters{&a.gens}.find(t.text);
    if (!id) throw SpecError("UnresolvedName", t.at, "'" + t.text + "' is not a generator of " + a.name);
    return *id;
  }

  MorphismDecl morphism_block(const SpecFile& s, std::string name) {
    MorphismDecl m;
    m.name = std::move(name);
    expect(":");
    const AlgebraDecl& a = algebra_ref(s);
    m.algebra = a.name;
    expect("{");
    while (!at_punct("}")) {
      Loc at = peek().at;
      std::size_t g = generator_ref(a);
      for (const auto& [h, img] : m.images)
        if (h == g) throw SpecError("DuplicateName", at, "second image for '" + a.gens[g] + "'");
      expect("->");
      m.images.emplace_back(g, poly(a.gens));
      expect(";");
    }
    expect("}");
    return m;
  }

  CoalgebraDecl coalgebra_block(const SpecFile& s, std::string name) {
    CoalgebraDecl c;
    c.name = std::move(name);
    expect(":");
    const AlgebraDecl& a = algebra_ref(s);
    c.algebra = a.name;
    expect("{");
    while (!at_punct("}")) {
      expect_keyword("Delta");
      Loc at = peek().at;
      std::size_t g = generator_ref(a);
      for (const auto& [h, d] : c.deltas)
        if (h == g) throw SpecError("DuplicateName", at, "second coproduct for '" + a.gens[g] + "'");
      expect("->");
      c.deltas.emplace_back(g, tensor(a.gens));
      expect(";");
    }
    for (std::size_t g = 0; g < a.gens.size(); ++g)
      if (std::none_of(c.deltas.begin(), c.deltas.end(), [&](const auto& d) { return d.first == g; }))
        throw SpecError("UnresolvedName", peek().at, "no coproduct for '" + a.gens[g] + "'");
    expect("}");
    return c;
  }

  ModuleDecl module_block(const SpecFile& s, std::string name) {
    ModuleDecl m;
    m.name = std::move(name);
    expect(":");
    const AlgebraDecl& a = algebra_ref(s);
    m.algebra = a.name;
    expect("{");
    expect_keyword("basis");
    do {
      if (!m.basis.empty()) take();
      Token b = expect_ident("basis element");
      check_fresh_letter(s, b, m.basis, "basis element");
      if (Letters{&a.gens}.find(b.text))
        throw SpecError("DuplicateName", b.at, "basis element '" + b.text + "' is a generator");
      m.basis.push_back(b.text);
    } while (at_punct(","));
    expect(";");
    auto basis_ref = [&]() {
      Token t = expect_ident("basis element");
      auto id = Letters{&m.basis}.find(t.text);
      if (!id) throw SpecError("UnresolvedName", t.at, "'" + t.text + "' is not a basis element");
      return *id;
    };
    while (!at_punct("}")) {
      Loc at = peek().at;
      if (at_ident("alpha")) {
        take();
        std::size_t b = basis_ref();
        for (const auto& e : m.alpha)
          if (e.first == b) throw SpecError("DuplicateName", at, "second α image for '" + m.basis[b] + "'");
        expect("->");
        m.alpha.emplace_back(b, vec(m.basis));
      } else {
        std::size_t g = generator_ref(a);
        std::size_t b = basis_ref();
        for (const auto& e : m.actions)
          if (e.gen == g && e.basis == b)
            throw SpecError("DuplicateName", at, "second action of '" + a.gens[g] + "' on '" + m.basis[b] + "'");
        expect("->");
        m.actions.push_back({g, b, vec(m.basis)});
      }
      expect(";");
    }
    expect("}");
    return m;
  }

  RMatrixDecl rmatrix_block(const SpecFile& s, std::string name) {
    RMatrixDecl r;
    r.name = std::move(name);
    expect(":");
    const CoalgebraDecl& c = coalgebra_ref(s);
    r.coalgebra = c.name;
    const AlgebraDecl& a = *s.algebra(c.algebra);
    expect("{");
    bool have_r = false;
    while (!at_punct("}")) {
      Loc at = peek().at;
      if (at_ident("R")) {
        take();
        if (have_r) throw SpecError("DuplicateName", at, "second R");
        expect("=");
        r.R = tensor(a.gens);
        have_r = true;
      } else if (at_ident("unit")) {
        take();
        if (r.unit) throw SpecError("DuplicateName", at, "second unit");
        expect("=");
        r.unit = poly(a.gens);
      } else {
        fail({"'R'", "'unit'", "'}'"});
      }
      expect(";");
    }
    if (!have_r) fail({"'R'"}, "rmatrix without R");
    expect("}");
    return r;
  }

  RFormDecl rform_block(const SpecFile& s, std::string name) {
    RFormDecl f;
    f.name = std::move(name);
    expect(":");
    const CoalgebraDecl& c = coalgebra_ref(s);
    f.coalgebra = c.name;
    const AlgebraDecl& a = *s.algebra(c.algebra);
    expect("{");
    expect_keyword("window");
    do {
      if (!f.window.empty()) take();
      f.window.push_back(word({&a.gens}));
    } while (at_punct(","));
    expect(";");
    while (!at_punct("}")) {
      Loc at = peek().at;
      Word x = word({&a.gens});
      expect("@");
      Word y = word({&a.gens});
      for (const auto& w : {x, y})
        if (std::find(f.window.begin(), f.window.end(), w) == f.window.end())
          throw SpecError("UnresolvedName", at, "word outside the form window");
      for (const auto& e : f.values)
        if (e.first == std::make_pair(x, y)) throw SpecError("DuplicateName", at, "second value for a pair");
      expect("->");
      f.values.push_back({{x, y}, scalar_sum({})});
      expect(";");
    }
    expect("}");
    return f;
  }

  CheckDecl check_line(const SpecFile& s) {
    CheckDecl c;
    c.loc = peek().at;
    Token kind = expect_hyphenated("check kind");
    if (!kCheckKinds.count(kind.text))
      throw SpecError("SyntaxError", kind.at, "unknown check '" + kind.text + "'",
                      std::set<std::string>(kCheckKinds.begin(), kCheckKinds.end()));
    c.kind = kind.text;
    Token target = expect_hyphenated("target");
    c.target = target.text;
    resolve_target(s, c, target.at);
    while (!at_punct(";")) {
      Token opt = expect_hyphenated("option");
      auto twice = [&](bool set) {
        if (set) throw SpecError("DuplicateName", opt.at, "option '" + opt.text + "' given twice");
      };
      if (opt.text == "twist") {
        twice(c.twist.has_value());
        Token m = expect_ident("morphism name");
        const MorphismDecl* md = s.morphism(m.text);
        if (!md) throw SpecError("UnresolvedName", m.at, "no morphism named '" + m.text + "'");
        c.twist = m.text;
      } else if (opt.text == "derived") {
        twice(!c.derived.empty());
        c.derived.push_back(static_cast<unsigned>(expect_int()));
        if (at_punct(",")) {
          take();
          c.derived.push_back(static_cast<unsigned>(expect_int()));
        }
      } else if (opt.text == "indices") {
        twice(c.indices.has_value());
        unsigned n = static_cast<unsigned>(expect_int());
        expect(",");
        c.indices = std::make_pair(n, static_cast<unsigned>(expect_int()));
      } else if (opt.text == "degree") {
        twice(c.degree.has_value());
        c.degree = expect_int();
      } else if (opt.text == "word-len") {
        twice(c.word_len.has_value());
        c.word_len = expect_int();
      } else if (opt.text == "bound") {
        twice(c.bound.has_value());
        c.bound = expect_int();
      } else {
        throw SpecError("SyntaxError", opt.at, "unknown option '" + opt.text + "'",
                        {"twist", "derived", "indices", "degree", "word-len", "bound", "';'"});
      }
    }
    expect(";");
    return c;
  }

  void resolve_target(const SpecFile& s, const CheckDecl& c, Loc at) {
    const std::string& k = c.kind;
    bool ok = true;
    std::string what;
    if (k == "confluence" || k == "hom-algebra") {
      ok = s.algebra(c.target);
      what = "algebra";
    } else if (k == "hom-coalgebra" || k == "hom-bialgebra") {
      ok = s.coalgebra(c.target);
      what = "coalgebra";
    } else if (k == "relations" || k == "module" || k == "compat") {
      ok = s.module(c.target);
      what = "module";
    } else if (k == "qt") {
      ok = s.rmatrix(c.target);
      what = "rmatrix";
    } else if (k == "cobraided") {
      ok = s.rform(c.target);
      what = "rform";
    } else {
      const auto& ids = preset_suite_ids();
      ok = std::find(ids.begin(), ids.end(), c.target) != ids.end();
      what = "preset suite";
      if (ok) declare_preset_symbols();
    }
    if (!ok) throw SpecError("UnresolvedName", at, "no " + what + " named '" + c.target + "'");
  }

  SuiteDecl suite_block(const SpecFile& s, std::string name) {
    SuiteDecl d;
    d.name = std::move(name);
    expect("{");
    while (!at_punct("}")) d.checks.push_back(check_line(s));
    expect("}");
    return d;
  }

 private:
  inline static const std::set<std::string> kReserved{"gens", "rel", "eq", "budget", "Delta",
                                                      "basis", "alpha", "R", "unit", "window"};
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  const std::vector<std::string>* symbols_;
  std::set<std::string> names_;
  bool params_seen_ = false;
};

}  // namespace

// ---------------------------------------------------------------------------

namespace {

template <class T>
const T* by_name(const std::vector<T>& v, std::string_view name) {
  for (const auto& x : v)
    if (x.name == name) return &x;
  return nullptr;
}

}  // namespace

const AlgebraDecl* SpecFile::algebra(std::string_view n) const { return by_name(algebras, n); }
const MorphismDecl* SpecFile::morphism(std::string_view n) const { return by_name(morphisms, n); }
const CoalgebraDecl* SpecFile::coalgebra(std::string_view n) const { return by_name(coalgebras, n); }
const ModuleDecl* SpecFile::module(std::string_view n) const { return by_name(modules, n); }
const RMatrixDecl* SpecFile::rmatrix(std::string_view n) const { return by_name(rmatrices, n); }
const RFormDecl* SpecFile::rform(std::string_view n) const { return by_name(rforms, n); }

SpecFile parse_spec(std::string_view text) {
  static const std::vector<std::string> none;
  Parser p(text, &none);
  return p.file();
}

Scalar parse_scalar(std::string_view text) {
  Parser p(text, nullptr);
  Scalar s = p.scalar_sum({});
  if (!p.at_end()) p.fail({"end of input"});
  return s;
}

NcPoly parse_poly(std::string_view text, const std::vector<std::string>& gens) {
  Parser p(text, nullptr);
  NcPoly out = p.poly(gens);
  if (!p.at_end()) p.fail({"end of input"});
  return out;
}

// ---------------------------------------------------------------------------
// Printer

namespace {

std::string vec_text(const LinComb<long long>& v, const std::vector<std::string>& basis) {
  NcPoly p;
  for (const auto& [i, c] : v) p.add(letter_word(static_cast<std::size_t>(i)), c);
  return format(p, Alphabet(basis));
}

std::string join(const std::vector<std::string>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + v[i];
  return out;
}

std::string scalar_text(const Scalar& c) {
  std::string s = c.to_string();
  return s;
}

}  // namespace

std::string print_spec(const SpecFile& s) {
  std::string out;
  bool params_done = false;
  for (const auto& [kind, i] : s.order) {
    if (!out.empty()) out += "\n";
    if (kind == "params") {
      if (params_done) continue;
      params_done = true;
      out += "params { " + join(s.params) + "; }\n";
    } else if (kind == "algebra") {
      const auto& a = s.algebras[i];
      Alphabet al(a.gens);
      out += "algebra " + a.name + " {\n  gens " + join(a.gens) + ";\n";
      for (const auto& [l, r] : a.rules) out += "  rel " + al.format(l) + " -> " + format(r, al) + ";\n";
      for (const auto& [l, r] : a.eqs) out += "  eq " + format(l, al) + " = " + format(r, al) + ";\n";
      if (a.budget) out += "  budget " + std::to_string(*a.budget) + ";\n";
      out += "}\n";
    } else if (kind == "morphism") {
      const auto& m = s.morphisms[i];
      Alphabet al(s.algebra(m.algebra)->gens);
      out += "morphism " + m.name + " : " + m.algebra + " {\n";
      for (const auto& [g, img] : m.images) out += "  " + al.name(g) + " -> " + format(img, al) + ";\n";
      out += "}\n";
    } else if (kind == "coalgebra") {
      const auto& c = s.coalgebras[i];
      Alphabet al(s.algebra(c.algebra)->gens);
      out += "coalgebra " + c.name + " : " + c.algebra + " {\n";
      for (const auto& [g, d] : c.deltas) out += "  Delta " + al.name(g) + " -> " + format<2>(d, al) + ";\n";
      out += "}\n";
    } else if (kind == "module") {
      const auto& m = s.modules[i];
      Alphabet al(s.algebra(m.algebra)->gens);
      out += "module " + m.name + " : " + m.algebra + " {\n  basis " + join(m.basis) + ";\n";
      for (const auto& e : m.actions)
        out += "  " + al.name(e.gen) + " " + m.basis[e.basis] + " -> " + vec_text(e.image, m.basis) + ";\n";
      for (const auto& [b, v] : m.alpha) out += "  alpha " + m.basis[b] + " -> " + vec_text(v, m.basis) + ";\n";
      out += "}\n";
    } else if (kind == "rmatrix") {
      const auto& r = s.rmatrices[i];
      Alphabet al(s.algebra(s.coalgebra(r.coalgebra)->algebra)->gens);
      out += "rmatrix " + r.name + " : " + r.coalgebra + " {\n  R = " + format<2>(r.R, al) + ";\n";
      if (r.unit) out += "  unit = " + format(*r.unit, al) + ";\n";
      out += "}\n";
    } else if (kind == "rform") {
      const auto& f = s.rforms[i];
      Alphabet al(s.algebra(s.coalgebra(f.coalgebra)->algebra)->gens);
      std::vector<std::string> win;
      for (const auto& w : f.window) win.push_back(al.format(w));
      out += "rform " + f.name + " : " + f.coalgebra + " {\n  window " + join(win) + ";\n";
      for (const auto& [xy, v] : f.values)
        out += "  " + al.format(xy.first) + " @ " + al.format(xy.second) + " -> " + scalar_text(v) + ";\n";
      out += "}\n";
    } else {
      const auto& d = s.suites[i];
      out += "suite " + d.name + " {\n";
      for (const auto& c : d.checks) {
        out += "  " + c.kind + " " + c.target;
        if (c.twist) out += " twist " + *c.twist;
        if (!c.derived.empty()) {
          out += " derived " + std::to_string(c.derived[0]);
          if (c.derived.size() > 1) out += "," + std::to_string(c.derived[1]);
        }
        if (c.indices) out += " indices " + std::to_string(c.indices->first) + "," + std::to_string(c.indices->second);
        if (c.degree) out += " degree " + std::to_string(*c.degree);
        if (c.word_len) out += " word-len " + std::to_string(*c.word_len);
        if (c.bound) out += " bound " + std::to_string(*c.bound);
        out += ";\n";
      }
      out += "}\n";
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

template <class K, class C>
LinComb<K, C> substitute(const LinComb<K, C>& v, const std::map<std::size_t, Rational>& point) {
  LinComb<K, C> out;
  for (const auto& [k, c] : v) out.add(k, c.substitute(point));
  return out;
}

}  // namespace

SpecFile instantiate(const SpecFile& s, const std::map<std::size_t, Rational>& point) {
  SpecFile o = s;
  for (auto& a : o.algebras) {
    for (auto& r : a.rules) r.second = substitute(r.second, point);
    for (auto& e : a.eqs) e = {substitute(e.first, point), substitute(e.second, point)};
  }
  for (auto& m : o.morphisms)
    for (auto& i : m.images) i.second = substitute(i.second, point);
  for (auto& c : o.coalgebras)
    for (auto& d : c.deltas) d.second = substitute(d.second, point);
  for (auto& m : o.modules) {
    for (auto& e : m.actions) e.image = substitute(e.image, point);
    for (auto& e : m.alpha) e.second = substitute(e.second, point);
  }
  for (auto& r : o.rmatrices) {
    r.R = substitute(r.R, point);
    if (r.unit) r.unit = substitute(*r.unit, point);
  }
  for (auto& f : o.rforms)
    for (auto& v : f.values) v.second = v.second.substitute(point);
  return o;
}

}  // namespace homcheck::cli
