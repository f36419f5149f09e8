#include "pgfr/representations.hpp"

#include <numeric>
#include <random>
#include <stdexcept>

namespace pgfr {

std::string IrrepLabel::name() const {
  switch (kind) {
    case Kind::Psi1: return "psi1";
    case Kind::Psi2: return "psi2";
    case Kind::Psi3: return "psi3";
    case Kind::Psi4: return "psi4";
    case Kind::Rho: return "rho" + std::to_string(h);
  }
  return "?";
}

std::vector<IrrepLabel> irrep_labels(std::int64_t n) {
  std::vector<IrrepLabel> out;
  out.push_back({IrrepLabel::Kind::Psi1, 0});
  out.push_back({IrrepLabel::Kind::Psi2, 0});
  out.push_back({IrrepLabel::Kind::Psi3, 0});
  out.push_back({IrrepLabel::Kind::Psi4, 0});
  for (std::int64_t h = 1; h <= n - 1; ++h) out.push_back({IrrepLabel::Kind::Rho, h});
  return out;
}

std::int64_t representation_field_order(std::int64_t n) {
  return std::lcm<std::int64_t>(2 * n, 4);
}

Cyclo RepMatrix::trace() const {
  Cyclo t = entries[0];
  for (int i = 1; i < dim; ++i) t += at(i, i);
  return t;
}

RepMatrix RepMatrix::times(const RepMatrix& rhs) const {
  if (dim != rhs.dim) throw std::invalid_argument("RepMatrix::times: dimension mismatch");
  RepMatrix out;
  out.dim = dim;
  out.entries.assign(static_cast<std::size_t>(dim * dim), Cyclo::zero(entries[0].order()));
  for (int i = 0; i < dim; ++i)
    for (int k = 0; k < dim; ++k) {
      if (at(i, k).is_zero()) continue;
      for (int j = 0; j < dim; ++j) out.at(i, j) += at(i, k) * rhs.at(k, j);
    }
  return out;
}

bool RepMatrix::is_unitary() const {
  const std::int64_t order = entries[0].order();
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      Cyclo dot = Cyclo::zero(order);
      for (int k = 0; k < dim; ++k) dot += at(k, i).conjugate() * at(k, j);
      if (i == j ? dot != Cyclo::one(order) : !dot.is_zero()) return false;
    }
  return true;
}

namespace {

RepMatrix scalar_matrix(std::int64_t field_order, const Cyclo& value) {
  RepMatrix m;
  m.dim = 1;
  m.entries = {value};
  (void)field_order;
  return m;
}

}  // namespace

RepTable::RepTable(std::int64_t n) : n_(n), field_order_(representation_field_order(n)) {
  if (n < 2) throw std::domain_error("RepTable: n must be >= 2");
  labels_ = irrep_labels(n);

  const Cyclo one = Cyclo::one(field_order_);
  const Cyclo minus_one = -one;
  // i = zeta_F^(F/4); F is a multiple of 4 by construction.
  const Cyclo imag = Cyclo::root_of_unity(field_order_, field_order_ / 4);
  const std::int64_t omega_stride = field_order_ / (2 * n);  // omega = zeta_F^stride
  const bool n_even = (n % 2 == 0);

  generator_images_.resize(labels_.size());
  for (std::size_t li = 0; li < labels_.size(); ++li) {
    const IrrepLabel& lab = labels_[li];
    RepMatrix a_img, b_img;
    switch (lab.kind) {
      case IrrepLabel::Kind::Psi1:
        a_img = scalar_matrix(field_order_, one);
        b_img = scalar_matrix(field_order_, one);
        break;
      case IrrepLabel::Kind::Psi2:
        a_img = scalar_matrix(field_order_, one);
        b_img = scalar_matrix(field_order_, minus_one);
        break;
      case IrrepLabel::Kind::Psi3:
        a_img = scalar_matrix(field_order_, minus_one);
        b_img = scalar_matrix(field_order_, n_even ? one : imag);
        break;
      case IrrepLabel::Kind::Psi4:
        a_img = scalar_matrix(field_order_, minus_one);
        b_img = scalar_matrix(field_order_, n_even ? minus_one : -imag);
        break;
      case IrrepLabel::Kind::Rho: {
        a_img.dim = 2;
        a_img.entries = {Cyclo::root_of_unity(field_order_, lab.h * omega_stride),
                         Cyclo::zero(field_order_), Cyclo::zero(field_order_),
                         Cyclo::root_of_unity(field_order_, -lab.h * omega_stride)};
        b_img.dim = 2;
        b_img.entries = {Cyclo::zero(field_order_), one,
                         Cyclo::root_of_unity(field_order_, lab.h * n * omega_stride),
                         Cyclo::zero(field_order_)};
        break;
      }
    }
    generator_images_[li] = {a_img, b_img};
  }

  // Images of every element from the generator images: rho(a^k b^eps) =
  // rho(a)^k * rho(b)^eps, with rho(a)^k built by repeated multiplication.
  images_.resize(labels_.size());
  characters_.resize(labels_.size());
  for (std::size_t li = 0; li < labels_.size(); ++li) {
    const RepMatrix& a_img = generator_images_[li][0];
    const RepMatrix& b_img = generator_images_[li][1];
    std::vector<RepMatrix> a_powers(static_cast<std::size_t>(2 * n));
    a_powers[0] = scalar_matrix(field_order_, one);
    if (a_img.dim == 2) {
      a_powers[0].dim = 2;
      a_powers[0].entries = {one, Cyclo::zero(field_order_), Cyclo::zero(field_order_), one};
    }
    for (std::int64_t k = 1; k < 2 * n; ++k)
      a_powers[static_cast<std::size_t>(k)] = a_powers[static_cast<std::size_t>(k - 1)].times(a_img);

    auto& imgs = images_[li];
    auto& chars = characters_[li];
    imgs.resize(static_cast<std::size_t>(4 * n));
    chars.reserve(static_cast<std::size_t>(4 * n));
    for (std::int64_t u = 0; u < 4 * n; ++u) {
      const GroupElement g = element_of({u}, n);
      const RepMatrix& base = a_powers[static_cast<std::size_t>(g.exponent)];
      imgs[static_cast<std::size_t>(u)] = g.has_b ? base.times(b_img) : base;
      chars.push_back(imgs[static_cast<std::size_t>(u)].trace());
    }
  }
}

std::size_t RepTable::label_slot(const IrrepLabel& label) const {
  switch (label.kind) {
    case IrrepLabel::Kind::Psi1: return 0;
    case IrrepLabel::Kind::Psi2: return 1;
    case IrrepLabel::Kind::Psi3: return 2;
    case IrrepLabel::Kind::Psi4: return 3;
    case IrrepLabel::Kind::Rho:
      if (label.h < 1 || label.h > n_ - 1)
        throw std::invalid_argument("irrep label rho(h) requires 1 <= h <= n-1");
      return static_cast<std::size_t>(3 + label.h);
  }
  throw std::invalid_argument("bad irrep label");
}

const RepMatrix& RepTable::matrix(const IrrepLabel& label, const GroupElement& g) const {
  return images_[label_slot(label)][static_cast<std::size_t>(index_of(g, n_).value)];
}

const Cyclo& RepTable::character(const IrrepLabel& label, const GroupElement& g) const {
  return characters_[label_slot(label)][static_cast<std::size_t>(index_of(g, n_).value)];
}

const RepMatrix& RepTable::generator_image(const IrrepLabel& label, bool pick_b) const {
  return generator_images_[label_slot(label)][pick_b ? 1 : 0];
}

bool RepTable::verify_homomorphism(const IrrepLabel& label, std::uint64_t sample_seed) const {
  const auto elems = all_elements(n_);
  auto check_pair = [&](const GroupElement& g, const GroupElement& h) {
    return matrix(label, g).times(matrix(label, h)) == matrix(label, multiply(g, h, n_));
  };
  if (n_ <= 6) {
    for (const GroupElement& g : elems)
      for (const GroupElement& h : elems)
        if (!check_pair(g, h)) return false;
    return true;
  }
  std::mt19937_64 rng(sample_seed);
  std::uniform_int_distribution<std::int64_t> pick(0, 4 * n_ - 1);
  for (int trial = 0; trial < 512; ++trial) {
    const GroupElement& g = elems[static_cast<std::size_t>(pick(rng))];
    const GroupElement& h = elems[static_cast<std::size_t>(pick(rng))];
    if (!check_pair(g, h)) return false;
  }
  return true;
}

}  // namespace pgfr
