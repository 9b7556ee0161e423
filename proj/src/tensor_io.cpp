#include <json.hpp>
#include <string>

#include "rotavg/errors.hpp"
#include "rotavg/tensor.hpp"

namespace rotavg {

namespace {

using nlohmann::json;

std::vector<int> parse_idx(const json& j, int rank) {
  if (!j.is_array() || static_cast<int>(j.size()) != rank) {
    throw ParseError("component idx must be an array of " + std::to_string(rank) + " indices");
  }
  std::vector<int> idx;
  for (const json& e : j) {
    if (!e.is_number_integer()) throw ParseError("component indices must be integers");
    const auto i = e.get<long long>();
    if (i < 1 || i > 3) throw ParseError("component index " + std::to_string(i) + " outside {1,2,3}");
    idx.push_back(static_cast<int>(i));
  }
  return idx;
}

ExactRational parse_exact_value(const json& v) {
  if (v.is_string()) return ExactRational::parse(v.get<std::string>());
  if (v.is_number_integer()) return ExactRational(BigInt(v.dump()));
  throw ParseError("exact-mode values must be \"p/q\" strings or integers");
}

double parse_real_value(const json& v) {
  if (v.is_number()) return v.get<double>();
  if (v.is_string()) return ExactRational::parse(v.get<std::string>()).to_double();
  throw ParseError("float-mode values must be numbers or \"p/q\" strings");
}

template <class T, class ParseValue>
DenseTensor<T> fill(const json& components, int rank, ParseValue parse_value) {
  DenseTensor<T> t(rank);
  std::vector<bool> seen(t.size(), false);
  for (const json& c : components) {
    if (!c.is_object() || !c.contains("idx") || !c.contains("value")) {
      throw ParseError("each component needs \"idx\" and \"value\"");
    }
    const std::size_t f = t.flat_index(parse_idx(c.at("idx"), rank));
    if (seen[f]) throw ParseError("duplicate component idx " + c.at("idx").dump());
    seen[f] = true;
    t.flat(f) = parse_value(c.at("value"));
  }
  return t;
}

}  // namespace

AnyTensor parse_tensor_json(std::string_view text, int max_rank) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("tensor file must be a JSON object");
  if (!doc.contains("rank") || !doc.at("rank").is_number_integer()) throw ParseError("missing integer \"rank\"");
  const auto rank = doc.at("rank").get<long long>();
  if (rank < 0) throw ParseError("rank must be nonnegative");
  if (rank > max_rank || rank > ExactTensor::kMaxStorableRank) {
    throw LimitError("tensor rank " + std::to_string(rank) + " exceeds limit " + std::to_string(max_rank));
  }
  if (!doc.contains("mode") || !doc.at("mode").is_string()) throw ParseError("missing string \"mode\"");
  const std::string mode = doc.at("mode").get<std::string>();
  const json components = doc.value("components", json::array());
  if (!components.is_array()) throw ParseError("\"components\" must be an array");
  const int n = static_cast<int>(rank);
  if (mode == "exact") return fill<ExactRational>(components, n, parse_exact_value);
  if (mode == "float") return fill<double>(components, n, parse_real_value);
  throw ParseError("mode must be \"exact\" or \"float\"");
}

std::string write_tensor_json(const AnyTensor& tensor, bool nonzero_only) {
  json doc;
  json components = json::array();
  std::visit(
      [&](const auto& t) {
        using T = std::decay_t<decltype(t.flat(0))>;
        doc["rank"] = t.rank();
        doc["mode"] = std::is_same_v<T, double> ? "float" : "exact";
        for (std::size_t f = 0; f < t.size(); ++f) {
          const T& v = t.flat(f);
          json c;
          c["idx"] = t.index_tuple(f);
          if constexpr (std::is_same_v<T, double>) {
            if (nonzero_only && v == 0.0) continue;
            c["value"] = v;
          } else {
            if (nonzero_only && v.is_zero()) continue;
            c["value"] = v.str();
          }
          components.push_back(std::move(c));
        }
      },
      tensor);
  doc["components"] = std::move(components);
  return doc.dump(1) + "\n";
}

}  // namespace rotavg
