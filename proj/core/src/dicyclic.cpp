#include "pgfr/dicyclic.hpp"

#include <sstream>
#include <stdexcept>

namespace pgfr {

namespace {

std::int64_t mod(std::int64_t x, std::int64_t m) {
  std::int64_t r = x % m;
  return r < 0 ? r + m : r;
}

}  // namespace

std::string to_string(const GroupElement& g) {
  std::ostringstream os;
  if (g.exponent == 0 && !g.has_b) return "1";
  if (g.exponent == 1)
    os << "a";
  else if (g.exponent > 1)
    os << "a^" << g.exponent;
  if (g.has_b) {
    if (g.exponent > 0) os << " ";
    os << "b";
  }
  return os.str();
}

GroupElement identity_element() { return {0, false}; }

GroupElement multiply(const GroupElement& g, const GroupElement& h, std::int64_t n) {
  const std::int64_t period = 2 * n;
  // b a^k = a^-k b, and b^2 = a^n.
  if (!g.has_b && !h.has_b) return {mod(g.exponent + h.exponent, period), false};
  if (!g.has_b && h.has_b) return {mod(g.exponent + h.exponent, period), true};
  if (g.has_b && !h.has_b) return {mod(g.exponent - h.exponent, period), true};
  return {mod(g.exponent - h.exponent + n, period), false};
}

GroupElement inverse(const GroupElement& g, std::int64_t n) {
  const std::int64_t period = 2 * n;
  if (!g.has_b) return {mod(-g.exponent, period), false};
  // (a^k b)^-1 = a^(k+n) b.
  return {mod(g.exponent + n, period), true};
}

GroupElement element_of(VertexIndex u, std::int64_t n) {
  if (u.value < 0 || u.value >= 4 * n) throw std::out_of_range("element_of: vertex out of range");
  if (u.value < 2 * n) return {u.value, false};
  return {u.value - 2 * n, true};
}

VertexIndex index_of(const GroupElement& g, std::int64_t n) {
  return {g.has_b ? g.exponent + 2 * n : g.exponent};
}

std::vector<GroupElement> all_elements(std::int64_t n) {
  std::vector<GroupElement> out;
  out.reserve(static_cast<std::size_t>(4 * n));
  for (std::int64_t u = 0; u < 4 * n; ++u) out.push_back(element_of({u}, n));
  return out;
}

std::vector<GroupElement> ConnectionSet::elements() const {
  std::vector<GroupElement> out;
  for (std::int64_t k : s1) out.push_back({k, false});
  if (includes_ab_coset)
    for (std::int64_t k = 0; k < 2 * n; ++k) out.push_back({k, true});
  return out;
}

std::string ValidationReport::message() const {
  if (ok) return "valid";
  switch (failed) {
    case ConnectionSetProperty::BadOrder:
      return "group order parameter must satisfy n >= 2";
    case ConnectionSetProperty::ExponentOutOfRange:
      return "cyclic exponent out of range [1, 2n-1]: " + witness;
    case ConnectionSetProperty::ContainsIdentity:
      return "connection set contains the identity";
    case ConnectionSetProperty::NotInverseClosed:
      return "connection set is not inverse-closed; missing inverse of " + witness;
    case ConnectionSetProperty::NotConjugationNormal:
      return "connection set is not conjugation-normal; witness " + witness;
    case ConnectionSetProperty::PartialBCoset:
      return "b-coset part must be empty or the full coset <a>b; witness " + witness;
    default:
      return "valid";
  }
}

ValidationReport validate_connection_set(const ConnectionSet& s) {
  ValidationReport r;
  if (s.n < 2) {
    r.failed = ConnectionSetProperty::BadOrder;
    return r;
  }
  const std::int64_t period = 2 * s.n;
  for (std::int64_t k : s.s1) {
    if (k == 0) {
      r.failed = ConnectionSetProperty::ContainsIdentity;
      r.witness = "a^0";
      return r;
    }
    if (k < 0 || k >= period) {
      r.failed = ConnectionSetProperty::ExponentOutOfRange;
      r.witness = std::to_string(k);
      return r;
    }
  }
  for (std::int64_t k : s.s1) {
    if (!s.s1.count(mod(-k, period))) {
      r.failed = ConnectionSetProperty::NotInverseClosed;
      r.witness = to_string(GroupElement{k, false});
      return r;
    }
  }
  // Exhaustive normality check g S g^-1 = S over all 4n conjugators.
  std::set<GroupElement> sset;
  for (const GroupElement& e : s.elements()) sset.insert(e);
  for (const GroupElement& g : all_elements(s.n)) {
    const GroupElement ginv = inverse(g, s.n);
    for (const GroupElement& e : sset) {
      GroupElement conj = multiply(multiply(g, e, s.n), ginv, s.n);
      if (!sset.count(conj)) {
        r.failed = ConnectionSetProperty::NotConjugationNormal;
        r.witness = to_string(g) + " * " + to_string(e) + " * " + to_string(ginv) + " = " +
                    to_string(conj);
        return r;
      }
    }
  }
  r.ok = true;
  return r;
}

void require_valid(const ConnectionSet& s) {
  ValidationReport r = validate_connection_set(s);
  if (!r.ok) throw std::invalid_argument("invalid connection set: " + r.message());
}

ConnectionSet connection_set_from_elements(std::int64_t n,
                                           const std::vector<GroupElement>& elems) {
  ConnectionSet out;
  out.n = n;
  std::set<std::int64_t> b_exponents;
  for (const GroupElement& g : elems) {
    if (g.has_b)
      b_exponents.insert(g.exponent);
    else
      out.s1.insert(g.exponent);
  }
  if (b_exponents.empty()) {
    out.includes_ab_coset = false;
  } else if (static_cast<std::int64_t>(b_exponents.size()) == 2 * n) {
    out.includes_ab_coset = true;
  } else {
    ValidationReport r;
    r.failed = ConnectionSetProperty::PartialBCoset;
    r.witness = std::to_string(b_exponents.size()) + " of " + std::to_string(2 * n) +
                " coset elements";
    throw std::invalid_argument("invalid connection set: " + r.message());
  }
  return out;
}

Eigen::MatrixXd adjacency_matrix(const ConnectionSet& s) {
  require_valid(s);
  const std::int64_t order = 4 * s.n;
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(order, order);
  const auto gens = s.elements();
  for (std::int64_t u = 0; u < order; ++u) {
    const GroupElement gu = element_of({u}, s.n);
    for (const GroupElement& gen : gens) {
      VertexIndex v = index_of(multiply(gen, gu, s.n), s.n);
      a(v.value, u) = 1.0;
    }
  }
  return a;
}

}  // namespace pgfr
