#include "specdens/sample.hpp"

#include <algorithm>
#include <numeric>

#include "specdens/errors.hpp"

namespace specdens {

void SampleSet::canonicalize() {
  if (locations.size() != values.size())
    throw data_error("SampleSet: locations/values length mismatch");
  if (locations.size() < 2) throw data_error("SampleSet: need at least 2 observations");
  if (!(domain_length > 0.0)) throw data_error("SampleSet: domain_length must be positive");

  std::vector<std::size_t> order(locations.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return locations[a] < locations[b]; });

  std::vector<double> loc(locations.size()), val(values.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    loc[i] = locations[order[i]];
    val[i] = values[order[i]];
  }
  locations = std::move(loc);
  values = std::move(val);

  if (locations.front() < 0.0 || locations.back() > domain_length)
    throw data_error("SampleSet: locations outside [0, domain_length]");
}

}  // namespace specdens
