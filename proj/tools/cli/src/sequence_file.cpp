#include "blaschke_lab_cli/sequence_file.hpp"

#include "blaschke_lab/errors.hpp"
#include "io.hpp"

namespace blaschke_lab::cli {

nlohmann::json to_json(const SequenceFile& f) {
  nlohmann::json points = nlohmann::json::array();
  for (const auto& p : f.points) points.push_back({{"re", p.re()}, {"im", p.im()}});
  nlohmann::json meta = {{"name", f.meta.name}, {"params", f.meta.params}};
  if (f.meta.generator) meta["generator"] = *f.meta.generator;
  return {{"points", points}, {"meta", meta}};
}

SequenceFile sequence_file_from_json(const nlohmann::json& j) {
  require_object(j, "sequence file");
  reject_unknown_keys(j, {"points", "meta"}, "sequence file");
  SequenceFile f;
  if (!j.contains("points") || !j.at("points").is_array()) {
    throw Error(ErrorCode::ConfigInvalid, "sequence file: 'points' must be an array");
  }
  for (const auto& p : j.at("points")) {
    require_object(p, "sequence point");
    reject_unknown_keys(p, {"re", "im"}, "sequence point");
    f.points.emplace_back(get_number(p, "re", "sequence point"), get_number(p, "im", "sequence point"));
  }
  if (j.contains("meta")) {
    const auto& m = j.at("meta");
    require_object(m, "meta");
    reject_unknown_keys(m, {"name", "generator", "params"}, "meta");
    if (m.contains("name")) f.meta.name = get_string(m, "name", "meta");
    if (m.contains("generator")) f.meta.generator = get_string(m, "generator", "meta");
    if (m.contains("params")) {
      require_object(m.at("params"), "meta.params");
      f.meta.params = m.at("params");
    }
  }
  return f;
}

// Written by hand so that coordinates carry 17 significant digits; the
// surrounding structure matches to_json(f).dump(2).
std::string dump_sequence_file(const SequenceFile& f) {
  std::string out = "{\n  \"meta\": ";
  nlohmann::json meta = to_json(f).at("meta");
  std::string meta_text = meta.dump(2);
  for (char c : meta_text) {
    out += c;
    if (c == '\n') out += "  ";
  }
  out += ",\n  \"points\": [";
  for (std::size_t i = 0; i < f.points.size(); ++i) {
    out += i == 0 ? "\n" : ",\n";
    out += "    {\"im\": " + format_double(f.points[i].im()) + ", \"re\": " +
           format_double(f.points[i].re()) + "}";
  }
  out += f.points.empty() ? "]\n}\n" : "\n  ]\n}\n";
  return out;
}

SequenceFile read_sequence_file(const std::filesystem::path& path) {
  return sequence_file_from_json(parse_json_text(read_text_file(path), path.string()));
}

void write_sequence_file(const std::filesystem::path& path, const SequenceFile& f) {
  write_text_file(path, dump_sequence_file(f));
}

}  // namespace blaschke_lab::cli
