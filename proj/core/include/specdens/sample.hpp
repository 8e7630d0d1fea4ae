#pragma once

#include <cstddef>
#include <vector>

namespace specdens {

/// Irregularly located observations of a process on [0, domain_length].
/// Locations are kept sorted ascending; values are permuted consistently.
struct SampleSet {
  std::vector<double> locations;
  std::vector<double> values;
  double domain_length = 0.0;

  std::size_t size() const { return locations.size(); }

  /// Sorts locations (canonical form) and checks the invariants.
  /// Throws data_error on mismatched lengths, N < 2, or points outside
  /// [0, domain_length].
  void canonicalize();
};

}  // namespace specdens
