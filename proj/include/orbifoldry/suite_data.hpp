#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "orbifoldry/isometry.hpp"

// Shipped data layout: leech.gram, the Conway-group generators
// co0_<name>.mat, and one witness sigma_p<p>.mat per prime, whose header
// records the word that produced it.
namespace orbifoldry {

/// Generator names in search order.
const std::vector<std::string>& generator_names();

std::vector<Isometry> load_generators(const std::shared_ptr<const Lattice>& lattice, const std::string& data_dir);

struct WitnessCertificate {
  std::vector<std::size_t> word;  // indices into generator_names()
  std::int64_t exponent = 1;
  std::uint64_t seed = 0;
  std::uint64_t attempt = 0;
};

/// Header metadata of a witness file for a search result.
std::map<std::string, std::string> certificate_metadata(const SearchResult& result, std::uint64_t seed);
WitnessCertificate parse_certificate(const std::map<std::string, std::string>& metadata);
WitnessCertificate read_certificate(const std::string& path);

}  // namespace orbifoldry
