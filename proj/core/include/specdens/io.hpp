#pragma once

#include <string>

#include "specdens/sample.hpp"

namespace specdens {

/// Shortest decimal representation that round-trips the exact double.
std::string format_double(double v);

/// CSV with header "s,x", one row per observation.
void write_sample_csv(const SampleSet& sample, const std::string& path);

/// Reads the "s,x" schema; domain_length defaults to the maximum location
/// unless a positive override is given.  Throws data_error on malformed input.
SampleSet read_sample_csv(const std::string& path, double domain_length = 0.0);

}  // namespace specdens
