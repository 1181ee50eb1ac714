#pragma once

#include "cataxi/common.hpp"

#include <initializer_list>
#include <vector>

namespace cataxi {

/// A vector over {-1, +1}.
class SignVector {
 public:
  SignVector() = default;
  explicit SignVector(Index size, int fill = +1);
  SignVector(std::initializer_list<int> entries);

  /// Coordinatewise sign with sgn(x) = -1 for x <= 0.
  static SignVector of(const Vector& x);

  Index size() const noexcept { return static_cast<Index>(entries_.size()); }
  int operator[](Index i) const { return entries_[static_cast<std::size_t>(i)]; }
  void flip(Index i) { entries_[static_cast<std::size_t>(i)] *= -1; }

  SignVector operator-() const;
  Vector to_vector() const;

  /// Lexicographic order with +1 ranked before -1.
  bool precedes(const SignVector& other) const;

  friend bool operator==(const SignVector&, const SignVector&) = default;

 private:
  std::vector<signed char> entries_;
};

enum class Strategy { Auto, Enumeration, Ascent };

struct TsvdOptions {
  /// An input whose taxicab norm is at or below this is treated as zero.
  double zero_tolerance = 1e-12;
  /// Extraction stops once the residual norm drops to this fraction of the input norm.
  double rank_tolerance = 1e-12;
  /// Enumeration is refused above this many signs on the shorter axis.
  int max_enumeration_axis = 25;
  int max_ascent_iterations = 100;
};

/// One taxicab step: a = X u, b = X' v, u = sgn(b), v = sgn(a), |a|_1 = |b|_1 = delta.
struct TaxicabFactor {
  SignVector u;  // column axis, length J
  SignVector v;  // row axis, length I
  Vector a;      // row principal vector
  Vector b;      // column principal vector
  double delta = 0.0;
  int step = 1;
};

struct TsvdDecomposition {
  std::vector<TaxicabFactor> factors;
  Matrix residual;
  Index rows = 0;
  Index cols = 0;
  Strategy strategy = Strategy::Enumeration;
};

/// Objective history of one ascent run; objective[t] = |X u_t|_1.
struct AscentTrace {
  TaxicabFactor factor;
  std::vector<double> objective;
  bool converged = false;
};

/// Resolves Auto to Enumeration or Ascent for a matrix of the given shape.
Strategy resolve_strategy(Strategy strategy, Index rows, Index cols, const TsvdOptions& options);

/// Iterates the transition formulas from a starting column axis until the
/// sign vector repeats or the iteration cap is reached.
AscentTrace ascend(const Matrix& x, const SignVector& u0, int max_iterations = 100);

/// Extracts the dominant taxicab factor of x. Throws ZeroMatrix or EnumerationTooLarge.
TaxicabFactor tsvd_step(const Matrix& x, Strategy strategy, const TsvdOptions& options = {});

/// X - a b' / delta.
Matrix deflate(const Matrix& x, const TaxicabFactor& factor);

TsvdDecomposition tsvd(const Matrix& x, int k_max, Strategy strategy,
                       const TsvdOptions& options = {});

/// Sum of a b' / delta over all factors plus the stored residual.
Matrix reconstruct(const TsvdDecomposition& decomposition);

}  // namespace cataxi
