#ifndef MEADOW_CONGRUENCE_HPP
#define MEADOW_CONGRUENCE_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "meadow/meadows.hpp"
#include "meadow/modelcheck.hpp"
#include "meadow/term.hpp"

namespace meadow {

/// Default carrier bound for computing whole congruence lattices.
inline constexpr std::size_t kCongruenceCap = 64;
/// Largest carrier a FiniteAlgebra will tabulate.
inline constexpr std::size_t kAlgebraCap = 1024;

struct Operation {
  std::string name;
  unsigned arity = 0;
  std::vector<std::uint32_t> table;  // row-major, first argument most significant
};

/// A finite algebra given by operation tables over elements 0..size()-1.
/// Nullary operations are omitted: they never constrain a congruence.
class FiniteAlgebra {
 public:
  FiniteAlgebra(std::vector<std::string> labels, std::vector<Operation> ops);

  /// The meadow operations +, -, *, ^-1 of a finite meadow, plus every
  /// function symbol of `sig` that `interp` interprets.
  static FiniteAlgebra from_meadow(const Meadow& m, const Interpretation& interp = {},
                                   const Signature& sig = Signature::standard());

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<Operation>& ops() const { return ops_; }
  std::uint32_t apply(const Operation& op, const std::vector<std::uint32_t>& args) const;

 private:
  std::vector<std::string> labels_;
  std::vector<Operation> ops_;
};

/// An equivalence relation stored canonically: block ids are numbered in
/// order of each block's least element.
class Congruence {
 public:
  explicit Congruence(std::vector<std::uint32_t> block_of);
  static Congruence diagonal(std::size_t n);
  static Congruence all(std::size_t n);

  std::size_t size() const { return block_of_.size(); }
  std::size_t num_blocks() const { return num_blocks_; }
  std::uint32_t block(std::uint32_t x) const { return block_of_[x]; }
  const std::vector<std::uint32_t>& block_of() const { return block_of_; }
  std::vector<std::vector<std::uint32_t>> blocks() const;
  bool related(std::uint32_t a, std::uint32_t b) const { return block_of_[a] == block_of_[b]; }
  bool is_diagonal() const { return num_blocks_ == size(); }
  bool is_all() const { return num_blocks_ <= 1; }
  /// Every pair related here is related in `other`.
  bool refines(const Congruence& other) const;

  /// `{{0,3},{1,4},{2,5}}` over the given element labels.
  std::string str(const std::vector<std::string>& labels) const;

  friend bool operator==(const Congruence&, const Congruence&) = default;
  friend bool operator<(const Congruence& a, const Congruence& b);

 private:
  std::vector<std::uint32_t> block_of_;
  std::size_t num_blocks_ = 0;
};

Congruence meet(const Congruence& a, const Congruence& b);
/// Least congruence containing both.
Congruence join(const FiniteAlgebra& alg, const Congruence& a, const Congruence& b);

/// True when every operation maps related argument tuples to related results.
bool is_compatible(const FiniteAlgebra& alg, const Congruence& c);

/// Least congruence relating a and b.
Congruence principal_congruence(const FiniteAlgebra& alg, std::uint32_t a, std::uint32_t b);
Congruence principal_congruence(const Meadow& m, const Value& a, const Value& b);

/// The whole lattice, sorted from the diagonal (most blocks) to the all
/// relation. Throws CapacityError above `cap` elements.
std::vector<Congruence> all_congruences(const FiniteAlgebra& alg, unsigned workers = 1,
                                        std::size_t cap = kCongruenceCap);

/// Exactly two congruences; the one-element algebra is not simple.
bool is_simple(const FiniteAlgebra& alg, unsigned workers = 1);

struct SubdirectIrreducibility {
  bool irreducible = false;
  /// Least non-diagonal congruence, present when irreducible.
  std::optional<Congruence> monolith;
};
SubdirectIrreducibility subdirectly_irreducible(const FiniteAlgebra& alg, unsigned workers = 1);

FiniteAlgebra quotient(const FiniteAlgebra& alg, const Congruence& c);

struct SubdirectFactor {
  Congruence kernel;
  FiniteAlgebra algebra;
};

/// A representation of an algebra as a subdirect product of subdirectly
/// irreducible quotients, with every claimed property re-verified.
struct SubdirectDecomposition {
  std::vector<SubdirectFactor> factors;
  /// embedding[x][i] is the class of x in factor i.
  std::vector<std::vector<std::uint32_t>> embedding;
  bool kernels_meet_to_diagonal = false;
  bool injective = false;
  bool homomorphism = false;
  bool projections_surjective = false;
  bool factors_irreducible = false;
  bool verified() const {
    return kernels_meet_to_diagonal && injective && homomorphism && projections_surjective && factors_irreducible;
  }
};

SubdirectDecomposition subdirect_decompose(const FiniteAlgebra& alg, unsigned workers = 1);

}  // namespace meadow

#endif  // MEADOW_CONGRUENCE_HPP
