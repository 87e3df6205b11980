#pragma once

#include <string>

#include "herlat/reduction.hpp"

namespace herlat {

// Stable JSON file formats ("herlat-instance-1" / "herlat-cert-1").
// Rationals are "p/q" strings or bare integers; big integers (index,
// discriminants, eta) are decimal strings. Field order is fixed, unknown
// fields are rejected.
std::string instance_to_json(const Instance& inst);
Instance instance_from_json(const std::string& text);

std::string certificate_to_json(const ReductionCertificate& cert);
ReductionCertificate certificate_from_json(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace herlat
