#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "homcheck/errors.hpp"
#include "homcheck/ncalg/linear.hpp"

namespace homcheck::cli {

/// 1-based position in the spec text.
struct Loc {
  std::size_t line = 1, column = 1;
};

/// Input error with position. `kind()` is SyntaxError, UnresolvedName or
/// DuplicateName.
class SpecError : public Error {
 public:
  SpecError(std::string kind, Loc at, const std::string& message,
            std::set<std::string> expected = {});
  Loc where() const { return at_; }
  const std::string& message() const { return message_; }
  const std::set<std::string>& expected() const { return expected_; }

 private:
  Loc at_;
  std::string message_;
  std::set<std::string> expected_;
};

// Declarations. Words index into the generator list of the algebra they
// belong to; module vectors index into the module basis.

struct AlgebraDecl {
  std::string name;
  std::vector<std::string> gens;
  std::vector<std::pair<Word, NcPoly>> rules;  // lhs -> rhs
  std::vector<std::pair<NcPoly, NcPoly>> eqs;  // extra relations lhs = rhs
  std::optional<std::size_t> budget;           // rewriting step budget
  bool operator==(const AlgebraDecl&) const = default;
};

struct MorphismDecl {
  std::string name, algebra;
  std::vector<std::pair<std::size_t, NcPoly>> images;  // generator -> image
  bool operator==(const MorphismDecl&) const = default;
};

struct CoalgebraDecl {
  std::string name, algebra;
  std::vector<std::pair<std::size_t, TensorPoly<2>>> deltas;
  bool operator==(const CoalgebraDecl&) const = default;
};

struct ModuleDecl {
  std::string name, algebra;
  std::vector<std::string> basis;
  struct Entry {
    std::size_t gen;
    std::size_t basis;
    LinComb<long long> image;
    bool operator==(const Entry&) const = default;
  };
  std::vector<Entry> actions;
  std::vector<std::pair<std::size_t, LinComb<long long>>> alpha;
  bool operator==(const ModuleDecl&) const = default;
};

struct RMatrixDecl {
  std::string name, coalgebra;
  TensorPoly<2> R;
  std::optional<NcPoly> unit;  // weak unit, 1 when absent
  bool operator==(const RMatrixDecl&) const = default;
};

struct RFormDecl {
  std::string name, coalgebra;
  std::vector<Word> window;
  std::vector<std::pair<std::pair<Word, Word>, Scalar>> values;
  bool operator==(const RFormDecl&) const = default;
};

/// One line of a suite block: `<kind> <target> [options];`.
struct CheckDecl {
  std::string kind;  // confluence, hom-algebra, hom-coalgebra, hom-bialgebra,
                     // relations, module, compat, qt, cobraided, preset
  std::string target;
  std::optional<std::string> twist;  // morphism name
  std::vector<unsigned> derived;     // n, or n,k
  std::optional<std::pair<unsigned, unsigned>> indices;
  std::optional<std::size_t> degree, word_len, bound;
  Loc loc;
  bool operator==(const CheckDecl& o) const {
    return kind == o.kind && target == o.target && twist == o.twist && derived == o.derived &&
           indices == o.indices && degree == o.degree && word_len == o.word_len && bound == o.bound;
  }
};

struct SuiteDecl {
  std::string name;
  std::vector<CheckDecl> checks;
  bool operator==(const SuiteDecl&) const = default;
};

/// Parsed spec file. Blocks keep their declaration order.
struct SpecFile {
  std::vector<std::string> params;
  std::vector<AlgebraDecl> algebras;
  std::vector<MorphismDecl> morphisms;
  std::vector<CoalgebraDecl> coalgebras;
  std::vector<ModuleDecl> modules;
  std::vector<RMatrixDecl> rmatrices;
  std::vector<RFormDecl> rforms;
  std::vector<SuiteDecl> suites;
  /// Block kinds in source order (for printing).
  std::vector<std::pair<std::string, std::size_t>> order;
  bool operator==(const SpecFile&) const = default;

  const AlgebraDecl* algebra(std::string_view name) const;
  const MorphismDecl* morphism(std::string_view name) const;
  const CoalgebraDecl* coalgebra(std::string_view name) const;
  const ModuleDecl* module(std::string_view name) const;
  const RMatrixDecl* rmatrix(std::string_view name) const;
  const RFormDecl* rform(std::string_view name) const;
};

/// Parses a spec file. Parameter names are declared in the symbol table as
/// they are read; `q` is always available.
SpecFile parse_spec(std::string_view text);
/// Canonical text of a spec: parse(print(s)) == s.
std::string print_spec(const SpecFile& s);

/// Scalar in the textual form used by reports, e.g. `(q^2+1)/(q)`. Every
/// symbol must already be declared (UnresolvedName otherwise).
Scalar parse_scalar(std::string_view text);
/// Polynomial over a generator list, e.g. `q * x y - 1`.
NcPoly parse_poly(std::string_view text, const std::vector<std::string>& gens);

/// Replaces symbols by rational values everywhere in the spec.
SpecFile instantiate(const SpecFile& s, const std::map<std::size_t, Rational>& point);

}  // namespace homcheck::cli
