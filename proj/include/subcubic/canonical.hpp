#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "subcubic/multigraph.hpp"

namespace subcubic {

// Isomorphism-invariant byte code: two multigraphs have equal codes iff they
// are isomorphic (loops and edge multiplicities respected).
class CanonicalCode {
 public:
  CanonicalCode() = default;
  explicit CanonicalCode(std::string bytes) : bytes_(std::move(bytes)) {}
  const std::string& bytes() const { return bytes_; }
  std::string hex() const;
  friend bool operator==(const CanonicalCode&, const CanonicalCode&) = default;
  friend auto operator<=>(const CanonicalCode& a, const CanonicalCode& b) {
    return a.bytes_ <=> b.bytes_;
  }

 private:
  std::string bytes_;
};

struct CanonicalForm {
  CanonicalCode code;
  std::vector<int> labeling;  // original vertex -> canonical position
  // Automorphism group as explicit permutations (original -> original);
  // filled only when requested, always contains the identity then.
  std::vector<std::vector<int>> automorphisms;
};

// Partition refinement (degree / loop / neighbor-color multiset) followed by
// individualization with backtracking; the code is the minimum adjacency
// multiplicity matrix over all refinement-compatible labelings.
CanonicalForm canonical_form(const Multigraph& g, bool with_automorphisms = false);

CanonicalCode canonical_code(const Multigraph& g);

// Rebuild a multigraph from its code (canonical representative).
Multigraph from_canonical_code(const CanonicalCode& code);

}  // namespace subcubic

template <>
struct std::hash<subcubic::CanonicalCode> {
  size_t operator()(const subcubic::CanonicalCode& c) const {
    return std::hash<std::string>()(c.bytes());
  }
};
