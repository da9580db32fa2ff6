#include "orbifoldry/suite_data.hpp"

#include <algorithm>
#include <sstream>

namespace orbifoldry {

const std::vector<std::string>& generator_names() {
  static const std::vector<std::string> names{"shift", "double", "neginv", "delta", "octad_sign", "xi"};
  return names;
}

std::vector<Isometry> load_generators(const std::shared_ptr<const Lattice>& lattice, const std::string& data_dir) {
  std::vector<Isometry> out;
  for (const auto& name : generator_names()) out.push_back(load_isometry(lattice, data_dir + "/co0_" + name + ".mat"));
  return out;
}

std::map<std::string, std::string> certificate_metadata(const SearchResult& result, std::uint64_t seed) {
  std::string word;
  for (std::size_t letter : result.word) {
    if (!word.empty()) word += ' ';
    word += generator_names().at(letter);
  }
  return {{"lattice", result.isometry.lattice().label()},
          {"profile", result.isometry.profile().to_string()},
          {"word", word},
          {"exponent", std::to_string(result.exponent)},
          {"seed", std::to_string(seed)},
          {"attempt", std::to_string(result.attempt)}};
}

WitnessCertificate parse_certificate(const std::map<std::string, std::string>& metadata) {
  auto field = [&](const std::string& key) -> const std::string& {
    auto it = metadata.find(key);
    if (it == metadata.end()) throw Error(ErrorKind::ParseError, "witness header lacks '" + key + "'");
    return it->second;
  };
  auto number = [&](const std::string& key) {
    try {
      std::size_t used = 0;
      const std::string& text = field(key);
      auto v = std::stoll(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return v;
    } catch (const std::logic_error&) {
      throw Error(ErrorKind::ParseError, "witness header field '" + key + "' is not an integer");
    }
  };
  WitnessCertificate cert;
  std::istringstream in(field("word"));
  std::string letter;
  while (in >> letter) {
    const auto& names = generator_names();
    auto it = std::find(names.begin(), names.end(), letter);
    if (it == names.end()) throw Error(ErrorKind::ParseError, "unknown generator '" + letter + "' in witness word");
    cert.word.push_back(static_cast<std::size_t>(it - names.begin()));
  }
  cert.exponent = number("exponent");
  cert.seed = static_cast<std::uint64_t>(number("seed"));
  cert.attempt = static_cast<std::uint64_t>(number("attempt"));
  return cert;
}

WitnessCertificate read_certificate(const std::string& path) { return parse_certificate(read_matrix_file(path).metadata); }

}  // namespace orbifoldry
