#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lietriple/exactla.hpp"
#include "lietriple/lya.hpp"
#include "lietriple/report.hpp"
#include "lietriple/rep.hpp"

namespace lietriple {

struct SkewSignature {
  std::size_t arity = 0;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;

  SkewSignature() = default;
  SkewSignature(std::size_t arity, std::vector<std::pair<std::size_t, std::size_t>> pairs);
  // Pairs (0,1),(2,3),... covering the first 2*(arity/2) slots.
  static SkewSignature yamaguti(std::size_t arity);
  friend bool operator==(const SkewSignature&, const SkewSignature&) = default;
};

std::string to_string(const SkewSignature& s);

// Canonical basis: one ordered index i<j per skew pair (lexicographic), then
// each free slot, then the target index; most significant first.
class CochainSpace {
 public:
  CochainSpace() = default;
  CochainSpace(SkewSignature sig, std::size_t source_dim, std::size_t target_dim);

  const SkewSignature& signature() const { return sig_; }
  std::size_t arity() const { return sig_.arity; }
  std::size_t source_dim() const { return d_; }
  std::size_t target_dim() const { return m_; }
  std::size_t tuple_count() const { return tuples_; }
  std::size_t dim() const { return tuples_ * m_; }

  std::vector<std::size_t> tuple(std::size_t t) const;
  // Canonical tuple index and sign of a basis tuple; none when a skew pair repeats.
  std::optional<std::pair<std::size_t, int>> locate(const std::vector<std::size_t>& tuple) const;
  std::optional<std::pair<std::size_t, int>> locate(const std::size_t* tuple) const;

  friend bool operator==(const CochainSpace& a, const CochainSpace& b) {
    return a.sig_ == b.sig_ && a.d_ == b.d_ && a.m_ == b.m_;
  }

 private:
  SkewSignature sig_;
  std::size_t d_ = 0;
  std::size_t m_ = 0;
  std::size_t p_ = 0;
  std::size_t tuples_ = 0;
  std::vector<std::size_t> free_;
};

class Cochain {
 public:
  Cochain() = default;
  explicit Cochain(CochainSpace space);
  Cochain(CochainSpace space, Vector coeffs);
  template <class Fn>
  static Cochain from_values(CochainSpace space, Fn&& fn) {
    Cochain c(std::move(space));
    for (std::size_t t = 0; t < c.space_.tuple_count(); ++t) {
      Vector v = fn(c.space_.tuple(t));
      for (std::size_t s = 0; s < c.space_.target_dim(); ++s) c.coeffs_[t * c.space_.target_dim() + s] = v[s];
    }
    return c;
  }

  const CochainSpace& space() const { return space_; }
  const Vector& coeffs() const { return coeffs_; }
  Vector& coeffs() { return coeffs_; }

  Vector value(const std::vector<std::size_t>& tuple) const;  // at basis vectors
  Vector eval(const std::vector<Vector>& args) const;          // multilinear
  bool is_zero() const { return lietriple::is_zero(coeffs_); }

  friend bool operator==(const Cochain& a, const Cochain& b) {
    return a.space_ == b.space_ && a.coeffs_ == b.coeffs_;
  }

 private:
  CochainSpace space_;
  Vector coeffs_;
};

struct CochainPair {
  Cochain nu;
  Cochain omega;

  static CochainPair zero(std::size_t d, std::size_t m);
  Vector flatten() const;
  static CochainPair from_vector(std::size_t d, std::size_t m, const Vector& v);
  friend bool operator==(const CochainPair&, const CochainPair&) = default;
};

struct CochainQuadruple {
  Cochain l3;
  Cochain l4hat;
  Cochain l4tilde;
  Cochain l5;

  static CochainQuadruple zero(std::size_t d, std::size_t m);
  Vector flatten() const;
  static CochainQuadruple from_vector(std::size_t d, std::size_t m, const Vector& v);
  bool is_zero() const;
  friend bool operator==(const CochainQuadruple&, const CochainQuadruple&) = default;
};

std::vector<CochainSpace> pair_spaces(std::size_t d, std::size_t m);
std::vector<CochainSpace> quadruple_spaces(std::size_t d, std::size_t m);
// l3, l4hat, l4tilde, l5 skew only in (0,1): used to audit symmetry of Delta2 output.
std::vector<CochainSpace> weak_quadruple_spaces(std::size_t d, std::size_t m);
std::vector<CochainSpace> delta3_codomain_spaces(std::size_t d, std::size_t m);
std::vector<CochainSpace> yamaguti_spaces(std::size_t n, std::size_t d, std::size_t m);  // C^{2n} x C^{2n+1}
std::size_t total_dim(const std::vector<CochainSpace>& spaces);

struct OperatorMatrix {
  std::string label;
  SparseMatrix matrix;
  std::vector<CochainSpace> domain;
  std::vector<CochainSpace> codomain;
};

// Largest codomain dimension an operator may be assembled with; read from
// LIETRIPLE_MAX_CODOMAIN, default 10^6.
std::size_t max_codomain();

OperatorMatrix yamaguti_delta(std::size_t n, const LYAlgebra& a, const Representation& r);
OperatorMatrix delta2(const LYAlgebra& a, const Representation& r, bool weak_codomain = false);
OperatorMatrix delta3(const LYAlgebra& a, const Representation& r);

// Splits an operator output vector into cochains of the codomain spaces.
std::vector<Cochain> split_cochains(const std::vector<CochainSpace>& spaces, const Vector& v);
Vector join_cochains(const std::vector<Cochain>& cs);

// One entry per candidate pair, passing iff the cochain is skew in it.
AxiomReport symmetry_audit(const Cochain& c, const SkewSignature& candidate, const CheckOptions& opt = {});

}  // namespace lietriple
