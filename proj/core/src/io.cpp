#include "specdens/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "specdens/errors.hpp"

namespace specdens {

std::string format_double(double v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  if (ec != std::errc{}) throw numeric_error("format_double: conversion failed");
  return std::string(buf, ptr);
}

void write_sample_csv(const SampleSet& sample, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw data_error("cannot open for writing: " + path);
  out << "s,x\n";
  for (std::size_t i = 0; i < sample.size(); ++i)
    out << format_double(sample.locations[i]) << ',' << format_double(sample.values[i])
        << '\n';
  if (!out) throw data_error("write failed: " + path);
}

SampleSet read_sample_csv(const std::string& path, double domain_length) {
  std::ifstream in(path);
  if (!in) throw data_error("cannot open: " + path);

  SampleSet sample;
  std::string line;
  if (!std::getline(in, line)) throw data_error("empty CSV: " + path);
  // Tolerate files without the header line.
  if (line.rfind("s,", 0) != 0) in.seekg(0);

  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos)
      throw data_error(path + ": line " + std::to_string(lineno) + ": expected 's,x'");
    double s = 0.0, x = 0.0;
    auto r1 = std::from_chars(line.data(), line.data() + comma, s);
    auto r2 = std::from_chars(line.data() + comma + 1, line.data() + line.size(), x);
    if (r1.ec != std::errc{} || r2.ec != std::errc{})
      throw data_error(path + ": line " + std::to_string(lineno) + ": bad number");
    sample.locations.push_back(s);
    sample.values.push_back(x);
  }
  if (sample.locations.empty()) throw data_error("no observations in " + path);

  sample.domain_length = domain_length;
  if (!(sample.domain_length > 0.0)) {
    for (double s : sample.locations) sample.domain_length = std::max(sample.domain_length, s);
    if (!(sample.domain_length > 0.0)) sample.domain_length = 1.0;
  }
  sample.canonicalize();
  return sample;
}

}  // namespace specdens
