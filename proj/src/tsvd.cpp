#include "cataxi/tsvd.hpp"

#include <cstdint>
#include <optional>
#include <limits>
#include <string>

namespace cataxi {

SignVector::SignVector(Index size, int fill)
    : entries_(static_cast<std::size_t>(size), static_cast<signed char>(fill > 0 ? 1 : -1)) {}

SignVector::SignVector(std::initializer_list<int> entries) {
  entries_.reserve(entries.size());
  for (int e : entries) {
    if (e != 1 && e != -1) throw Error(ErrorCode::InvalidArgument, "sign entries must be -1 or +1");
    entries_.push_back(static_cast<signed char>(e));
  }
}

SignVector SignVector::of(const Vector& x) {
  SignVector s(x.size(), -1);
  for (Index i = 0; i < x.size(); ++i) {
    if (x(i) > 0.0) s.entries_[static_cast<std::size_t>(i)] = 1;
  }
  return s;
}

SignVector SignVector::operator-() const {
  SignVector s = *this;
  for (auto& e : s.entries_) e = static_cast<signed char>(-e);
  return s;
}

Vector SignVector::to_vector() const {
  Vector v(size());
  for (Index i = 0; i < size(); ++i) v(i) = (*this)[i];
  return v;
}

bool SignVector::precedes(const SignVector& other) const {
  const std::size_t n = std::min(entries_.size(), other.entries_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (entries_[i] != other.entries_[i]) return entries_[i] > other.entries_[i];
  }
  return entries_.size() < other.entries_.size();
}

Strategy resolve_strategy(Strategy strategy, Index rows, Index cols, const TsvdOptions& options) {
  if (strategy != Strategy::Auto) return strategy;
  return std::min(rows, cols) <= options.max_enumeration_axis ? Strategy::Enumeration
                                                              : Strategy::Ascent;
}

AscentTrace ascend(const Matrix& x, const SignVector& u0, int max_iterations) {
  if (u0.size() != x.cols()) {
    throw Error(ErrorCode::ShapeMismatch, "starting axis length does not match column count");
  }
  if (max_iterations < 1) throw Error(ErrorCode::InvalidArgument, "max_iterations must be >= 1");

  AscentTrace trace;
  SignVector u = u0;
  for (int it = 0;; ++it) {
    Vector a = x * u.to_vector();
    SignVector v = SignVector::of(a);
    Vector b = x.transpose() * v.to_vector();
    const double objective = a.lpNorm<1>();
    trace.objective.push_back(objective);
    SignVector next = SignVector::of(b);
    const bool fixed = next == u;
    if (fixed || it + 1 >= max_iterations) {
      trace.factor = TaxicabFactor{std::move(u), std::move(v), std::move(a), std::move(b),
                                   objective, 1};
      trace.converged = fixed;
      return trace;
    }
    u = std::move(next);
  }
}

namespace {

constexpr std::size_t kMaxTies = 1024;

AscentTrace ascend_from_rows(const Matrix& x, const SignVector& v0, int max_iterations) {
  return ascend(x, SignVector::of(x.transpose() * v0.to_vector()), max_iterations);
}

// Picks the representative of {(u, v), (-u, -v)} whose u starts with +1.
// With exact zeros in b the flipped pair is re-converged, and kept only if
// it is still optimal.
TaxicabFactor orient(const Matrix& x, TaxicabFactor f, int max_iterations, double tol) {
  if (f.u.size() == 0 || f.u[0] > 0) return f;
  AscentTrace flipped = ascend(x, -f.u, max_iterations);
  if (flipped.factor.u[0] > 0 && flipped.factor.delta >= f.delta - tol) return flipped.factor;
  return f;
}

// Keeps the larger delta; equal deltas within tol go to the lexicographically smaller u.
bool better(const TaxicabFactor& candidate, const TaxicabFactor* incumbent, double tol) {
  if (incumbent == nullptr) return true;
  if (candidate.delta > incumbent->delta + tol) return true;
  if (candidate.delta < incumbent->delta - tol) return false;
  return candidate.u.precedes(incumbent->u);
}

// Visits s in {-1,+1}^n with s_0 = +1 in lexicographic order and returns the
// maximizers of |m s|_1 (within tol). The running product is updated
// incrementally and recomputed exactly whenever it gets near the best value.
std::vector<SignVector> enumerate_maximizers(const Matrix& m, double tol) {
  const Index n = m.cols();
  const std::uint64_t count = std::uint64_t{1} << (n - 1);
  const double window = 1e-9 * l1_norm(m) + tol;

  SignVector s(n, +1);
  Vector running = m * s.to_vector();
  double best = -std::numeric_limits<double>::infinity();
  std::vector<SignVector> ties;

  for (std::uint64_t k = 0; k < count; ++k) {
    if (k > 0) {
      const std::uint64_t changed = (k - 1) ^ k;
      for (int bit = 0; (changed >> bit) != 0; ++bit) {
        if (((changed >> bit) & 1U) == 0) continue;
        const Index j = n - 1 - bit;
        running -= (2.0 * s[j]) * m.col(j);
        s.flip(j);
      }
      if ((k & 0xFFFFU) == 0) running = m * s.to_vector();
    }
    if (running.lpNorm<1>() < best - window) continue;

    const double exact = (m * s.to_vector()).lpNorm<1>();
    if (exact > best + tol) {
      best = exact;
      ties.clear();
      ties.push_back(s);
    } else if (exact >= best - tol && ties.size() < kMaxTies) {
      ties.push_back(s);
    }
  }
  return ties;
}

TaxicabFactor step_by_enumeration(const Matrix& x, const TsvdOptions& options, double tol) {
  const bool over_cols = x.cols() <= x.rows();
  const Index axis = over_cols ? x.cols() : x.rows();
  if (axis > options.max_enumeration_axis) {
    throw Error(ErrorCode::EnumerationTooLarge,
                "enumeration over " + std::to_string(axis) + " signs exceeds the limit of " +
                    std::to_string(options.max_enumeration_axis) + "; use the ascent strategy");
  }
  const Matrix m = over_cols ? x : Matrix(x.transpose());
  std::optional<TaxicabFactor> best;
  for (const SignVector& s : enumerate_maximizers(m, tol)) {
    AscentTrace run = over_cols ? ascend(x, s, options.max_ascent_iterations)
                                : ascend_from_rows(x, s, options.max_ascent_iterations);
    TaxicabFactor f = orient(x, std::move(run.factor), options.max_ascent_iterations, tol);
    if (better(f, best ? &*best : nullptr, tol)) best = std::move(f);
  }
  return std::move(*best);
}

TaxicabFactor step_by_ascent(const Matrix& x, const TsvdOptions& options, double tol) {
  std::optional<TaxicabFactor> best;
  auto consider = [&](AscentTrace run) {
    TaxicabFactor f = orient(x, std::move(run.factor), options.max_ascent_iterations, tol);
    if (better(f, best ? &*best : nullptr, tol)) best = std::move(f);
  };
  for (Index i = 0; i < x.rows(); ++i) {
    consider(ascend(x, SignVector::of(x.row(i).transpose()), options.max_ascent_iterations));
  }
  for (Index j = 0; j < x.cols(); ++j) {
    consider(ascend_from_rows(x, SignVector::of(x.col(j)), options.max_ascent_iterations));
  }
  return std::move(*best);
}

}  // namespace

TaxicabFactor tsvd_step(const Matrix& x, Strategy strategy, const TsvdOptions& options) {
  const double norm = l1_norm(x);
  if (!(norm > options.zero_tolerance)) {
    throw Error(ErrorCode::ZeroMatrix, "matrix taxicab norm " + std::to_string(norm) +
                                           " is below the zero tolerance");
  }
  const double tol = 1e-12 * norm;
  switch (resolve_strategy(strategy, x.rows(), x.cols(), options)) {
    case Strategy::Ascent: return step_by_ascent(x, options, tol);
    default: return step_by_enumeration(x, options, tol);
  }
}

Matrix deflate(const Matrix& x, const TaxicabFactor& factor) {
  if (factor.a.size() != x.rows() || factor.b.size() != x.cols()) {
    throw Error(ErrorCode::ShapeMismatch, "factor does not match matrix shape");
  }
  if (!(factor.delta > 0.0)) throw Error(ErrorCode::InvalidArgument, "factor dispersion must be positive");
  return x - factor.a * factor.b.transpose() / factor.delta;
}

TsvdDecomposition tsvd(const Matrix& x, int k_max, Strategy strategy, const TsvdOptions& options) {
  if (k_max < 1) throw Error(ErrorCode::InvalidArgument, "k_max must be at least 1");
  const double norm = l1_norm(x);
  if (!(norm > options.zero_tolerance)) {
    throw Error(ErrorCode::ZeroMatrix, "cannot decompose a zero matrix");
  }
  TsvdDecomposition out;
  out.rows = x.rows();
  out.cols = x.cols();
  out.strategy = resolve_strategy(strategy, x.rows(), x.cols(), options);
  out.residual = x;
  const double stop = std::max(options.rank_tolerance * norm, options.zero_tolerance);
  for (int step = 1; step <= k_max; ++step) {
    if (l1_norm(out.residual) <= stop) break;
    TaxicabFactor f = tsvd_step(out.residual, out.strategy, options);
    f.step = step;
    out.residual = deflate(out.residual, f);
    out.factors.push_back(std::move(f));
  }
  return out;
}

Matrix reconstruct(const TsvdDecomposition& decomposition) {
  Matrix x = decomposition.residual;
  for (const auto& f : decomposition.factors) x += f.a * f.b.transpose() / f.delta;
  return x;
}

}  // namespace cataxi
