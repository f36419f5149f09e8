#pragma once

#include <array>
#include <string>
#include <vector>

#include "pgfr/cyclotomic.hpp"
#include "pgfr/dicyclic.hpp"

namespace pgfr {

/// The n+3 irreducible representations of the dicyclic group of order 4n:
/// four linear ones (psi1..psi4) and n-1 two-dimensional ones (rho_h).
struct IrrepLabel {
  enum class Kind { Psi1, Psi2, Psi3, Psi4, Rho };
  Kind kind = Kind::Psi1;
  std::int64_t h = 0;  // only meaningful for Rho, 1 <= h <= n-1

  int degree() const { return kind == Kind::Rho ? 2 : 1; }
  std::string name() const;

  friend bool operator==(const IrrepLabel&, const IrrepLabel&) = default;
};

/// Canonical label order: psi1, psi2, psi3, psi4, rho(1), ..., rho(n-1).
std::vector<IrrepLabel> irrep_labels(std::int64_t n);

/// Field order used for representation entries: the entries are powers of
/// zeta_2n together with 0, +-1 and (for n odd) +-i, so the working field
/// is Q(zeta_lcm(2n,4)).
std::int64_t representation_field_order(std::int64_t n);

/// Small dense matrix of exact cyclotomic entries (degree 1 or 2 here).
struct RepMatrix {
  int dim = 1;
  std::vector<Cyclo> entries;  // row-major, dim*dim

  const Cyclo& at(int r, int c) const { return entries[static_cast<std::size_t>(r * dim + c)]; }
  Cyclo& at(int r, int c) { return entries[static_cast<std::size_t>(r * dim + c)]; }
  Cyclo trace() const;
  RepMatrix times(const RepMatrix& rhs) const;
  bool is_unitary() const;  // exact conjugate-transpose check

  friend bool operator==(const RepMatrix&, const RepMatrix&) = default;
};

/// All irreducible representations and characters for one group order,
/// generated from the generator images and cached per element.
class RepTable {
 public:
  explicit RepTable(std::int64_t n);

  std::int64_t n() const { return n_; }
  std::int64_t field_order() const { return field_order_; }
  const std::vector<IrrepLabel>& labels() const { return labels_; }

  const RepMatrix& matrix(const IrrepLabel& label, const GroupElement& g) const;
  const Cyclo& character(const IrrepLabel& label, const GroupElement& g) const;

  /// Image of a generator: a when pick_b is false, b otherwise.
  const RepMatrix& generator_image(const IrrepLabel& label, bool pick_b) const;

  /// Exact multiplicativity check of one representation over element pairs;
  /// exhaustive for n <= 6, seeded random sampling above.
  bool verify_homomorphism(const IrrepLabel& label, std::uint64_t sample_seed = 1) const;

 private:
  std::size_t label_slot(const IrrepLabel& label) const;

  std::int64_t n_;
  std::int64_t field_order_;
  std::vector<IrrepLabel> labels_;
  // per label: images of all 4n elements in vertex order, plus traces
  std::vector<std::vector<RepMatrix>> images_;
  std::vector<std::vector<Cyclo>> characters_;
  std::vector<std::array<RepMatrix, 2>> generator_images_;
};

}  // namespace pgfr
