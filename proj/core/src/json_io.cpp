#include <msq/json_io.hpp>

#include <nlohmann/json.hpp>

#include <fstream>
#include <stdexcept>

namespace msq {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json basis_array(const std::vector<std::string>& labels) {
  ordered_json basis = ordered_json::array();
  for (int i = 0; i < (int)labels.size(); ++i)
    basis.push_back({{"id", i}, {"label", labels[i]}});
  return basis;
}

ordered_json out_array(const SparseVec& v) {
  ordered_json out = ordered_json::array();
  for (const auto& [k, c] : v.terms)
    out.push_back(ordered_json::array({k, rat_str(c)}));
  return out;
}

template <class T>
ordered_json triple_envelope(const T& t) {
  ordered_json j;
  j["name"] = t.name;
  j["dimension"] = t.dim;
  j["basis"] = basis_array(t.labels);
  ordered_json form = ordered_json::array();
  for (int i = 0; i < t.dim; ++i)
    for (int k = i + 1; k < t.dim; ++k)
      if (!is_zero(t.form[i][k]))
        form.push_back({{"i", i}, {"j", k}, {"c", rat_str(t.form[i][k])}});
  j["form"] = std::move(form);
  ordered_json prod = ordered_json::array();
  for (int x = 0; x < t.dim; ++x)
    for (int y = 0; y < t.dim; ++y)
      for (int z = 0; z < t.dim; ++z) {
        const SparseVec& v = t.triple(x, y, z);
        if (v.empty()) continue;
        prod.push_back(
            {{"x", x}, {"y", y}, {"z", z}, {"out", out_array(v)}});
      }
  j["product"] = std::move(prod);
  return j;
}

}  // namespace

std::string to_json(const StructureConstants& sc) {
  ordered_json j;
  j["name"] = sc.name;
  j["dimension"] = sc.dim;
  j["basis"] = basis_array(sc.labels);
  ordered_json bracket = ordered_json::array();
  for (int i = 0; i < sc.dim; ++i)
    for (int k = i + 1; k < sc.dim; ++k) {
      const SparseVec& v = sc.upper(i, k);
      if (v.empty()) continue;
      bracket.push_back({{"i", i}, {"j", k}, {"out", out_array(v)}});
    }
  j["bracket"] = std::move(bracket);
  return j.dump() + "\n";
}

std::string to_json(const SymplecticTripleSystem& t) {
  return triple_envelope(t).dump() + "\n";
}

std::string to_json(const FreudenthalTripleSystem& t) {
  return triple_envelope(t).dump() + "\n";
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << content;
  if (!out) throw std::runtime_error("write failed for " + path);
}

}  // namespace msq
