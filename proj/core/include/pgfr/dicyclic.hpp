#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace pgfr {

/// Element of the dicyclic group of order 4n, presented by
/// a^(2n) = 1, a^n = b^2, b^-1 a b = a^-1. Canonical form: a^exponent
/// when has_b is false, a^exponent * b when has_b is true, with the
/// exponent always reduced mod 2n.
struct GroupElement {
  std::int64_t exponent = 0;
  bool has_b = false;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

std::string to_string(const GroupElement& g);

GroupElement identity_element();
GroupElement multiply(const GroupElement& g, const GroupElement& h, std::int64_t n);
GroupElement inverse(const GroupElement& g, std::int64_t n);

/// Vertex label in [0, 4n): values below 2n are a^u, the rest are a^(u-2n)*b.
struct VertexIndex {
  std::int64_t value = 0;

  friend bool operator==(const VertexIndex&, const VertexIndex&) = default;
  friend auto operator<=>(const VertexIndex&, const VertexIndex&) = default;
};

GroupElement element_of(VertexIndex u, std::int64_t n);
VertexIndex index_of(const GroupElement& g, std::int64_t n);
std::vector<GroupElement> all_elements(std::int64_t n);

/// Connection set S = S1 (subset of the cyclic part, by exponent) together
/// with an all-or-nothing flag for the coset <a>b. Arbitrary proper subsets
/// of the b-coset are representable only through from_elements, which
/// rejects them.
struct ConnectionSet {
  std::int64_t n = 2;
  std::set<std::int64_t> s1;
  bool includes_ab_coset = true;

  std::vector<GroupElement> elements() const;
  std::size_t size() const { return s1.size() + (includes_ab_coset ? 2 * n : 0); }
};

enum class ConnectionSetProperty {
  Valid,
  BadOrder,            // n < 2
  ExponentOutOfRange,  // s1 entry outside [1, 2n-1]
  ContainsIdentity,
  NotInverseClosed,
  NotConjugationNormal,
  PartialBCoset,  // from_elements saw a proper nonempty subset of <a>b
};

struct ValidationReport {
  bool ok = false;
  ConnectionSetProperty failed = ConnectionSetProperty::Valid;
  std::string witness;  // offending element/exponent, when applicable
  std::string message() const;
};

/// Checks identity-freeness, inverse closure, and conjugation normality
/// (the last exhaustively over all 4n conjugators).
ValidationReport validate_connection_set(const ConnectionSet& s);

/// Throwing wrapper around validate_connection_set.
void require_valid(const ConnectionSet& s);

/// Builds a ConnectionSet from explicit group elements; the b-coset part
/// must be empty or the whole coset.
ConnectionSet connection_set_from_elements(std::int64_t n, const std::vector<GroupElement>& elems);

/// Symmetric 0/1 matrix of order 4n; entry (u,v) = 1 iff element(v) equals
/// s * element(u) for some s in S.
Eigen::MatrixXd adjacency_matrix(const ConnectionSet& s);

}  // namespace pgfr
