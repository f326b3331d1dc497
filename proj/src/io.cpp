#include "cinfty/io.hpp"

#include <fstream>
#include <sstream>

#include "cinfty/parse.hpp"

namespace cinfty {

namespace {

json parse_json(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw IoError(what + ": " + e.what());
  }
}

template <class T>
T field(const json& j, const char* key, const T& fallback) {
  if (!j.contains(key)) return fallback;
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw IoError(std::string("field \"") + key + "\" has the wrong type");
  }
}

Box box_from_json(const json& j) {
  if (!j.is_array()) throw IoError("box must be an array of [lo, hi] pairs");
  Box box;
  for (const json& pair : j) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number()) {
      throw IoError("box entries must be [lo, hi] pairs");
    }
    const double lo = pair[0].get<double>(), hi = pair[1].get<double>();
    if (!(lo < hi)) throw IoError("box interval with lo >= hi");
    box.emplace_back(lo, hi);
  }
  return box;
}

std::vector<std::string> string_list(const json& j, const char* what) {
  if (!j.is_array()) throw IoError(std::string(what) + " must be an array of strings");
  std::vector<std::string> out;
  for (const json& s : j) {
    if (!s.is_string()) throw IoError(std::string(what) + " must be an array of strings");
    out.push_back(s.get<std::string>());
  }
  return out;
}

}  // namespace

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Ring ring_from_json(const json& j) {
  if (!j.is_object()) throw IoError("ring description must be a JSON object");
  if (!j.contains("n") || !j["n"].is_number_integer()) throw IoError("ring description needs an integer \"n\"");
  const int n = j["n"].get<int>();
  if (n < 0) throw IoError("\"n\" must be nonnegative");
  std::vector<SmoothExpr> gens;
  if (j.contains("generators")) {
    for (const std::string& g : string_list(j["generators"], "generators")) gens.push_back(parse(g, n));
  }
  OracleConfig oracle;
  if (j.contains("oracle")) {
    const json& o = j["oracle"];
    if (!o.is_object()) throw IoError("\"oracle\" must be an object");
    oracle.degree_bound = field(o, "degree_bound", oracle.degree_bound);
    oracle.samples = field(o, "samples", oracle.samples);
    oracle.tolerance = field(o, "tolerance", oracle.tolerance);
    oracle.seed = field(o, "seed", oracle.seed);
    if (o.contains("box")) oracle.box = box_from_json(o["box"]);
    if (!oracle.box.empty() && oracle.box.size() != static_cast<std::size_t>(n)) {
      throw IoError("oracle box needs one interval per variable");
    }
  }
  return present_ring(n, std::move(gens), std::move(oracle));
}

json ring_to_json(const RingPresentation& ring) {
  json gens = json::array();
  for (const SmoothExpr& g : ring.generators()) gens.push_back(to_string(g));
  json box = json::array();
  for (const auto& [lo, hi] : ring.oracle().box) box.push_back({lo, hi});
  return {{"n", ring.n()},
          {"generators", gens},
          {"oracle",
           {{"degree_bound", ring.oracle().degree_bound},
            {"samples", ring.oracle().samples},
            {"tolerance", ring.oracle().tolerance},
            {"box", box},
            {"seed", ring.oracle().seed}}}};
}

Ring load_ring(const std::filesystem::path& path) {
  return ring_from_json(parse_json(read_file(path), path.string()));
}

SpaceDescription space_from_json(const json& j, const std::filesystem::path& base_dir) {
  if (!j.is_object() || !j.contains("ring")) throw IoError("space description needs a \"ring\"");
  Ring ring = j["ring"].is_string() ? load_ring(base_dir / j["ring"].get<std::string>()) : ring_from_json(j["ring"]);
  Box box = j.contains("box") ? box_from_json(j["box"]) : Box{};
  if (!box.empty() && box.size() != static_cast<std::size_t>(ring->n())) {
    throw IoError("space box needs one interval per variable");
  }
  std::optional<std::uint64_t> seed;
  if (j.contains("seed")) seed = field<std::uint64_t>(j, "seed", 0);
  SpaceDescription out{make_space(ring, std::move(box), seed), {}};
  if (j.contains("opens")) {
    if (!j["opens"].is_array()) throw IoError("\"opens\" must be an array");
    for (const json& o : j["opens"]) {
      if (!o.is_object() || !o.contains("positivity")) throw IoError("each open needs a \"positivity\" list");
      BasicOpen b;
      for (const std::string& h : string_list(o["positivity"], "positivity")) b.positivity.push_back(parse(h, ring->n()));
      out.opens.push_back(std::move(b));
    }
  }
  return out;
}

SpaceDescription load_space(const std::filesystem::path& path) {
  return space_from_json(parse_json(read_file(path), path.string()), path.parent_path());
}

json to_json(const Verdict& v) {
  json out = {{"kind", to_string(v.kind)}, {"reason", v.reason}, {"seed", v.seed}};
  if (v.degree_bound >= 0) out["degree_bound"] = v.degree_bound;
  if (v.samples > 0) {
    out["samples"] = v.samples;
    out["max_abs_diff"] = v.max_abs_diff;
  }
  if (!v.witness.empty()) out["witness"] = v.witness;
  if (!v.cofactors.empty()) {
    json c = json::array();
    for (const SmoothExpr& e : v.cofactors) c.push_back(to_string(e));
    out["cofactors"] = c;
  }
  return out;
}

json to_json(const PsiReport& r) {
  json contractions = json::array();
  for (const Verdict& v : r.contractions) contractions.push_back(to_json(v));
  return {{"omega", r.omega},
          {"in_J", to_json(r.in_J)},
          {"derivations_checked", r.derivations_checked},
          {"all_contractions_in_I", r.all_contractions_in_I},
          {"degree_bound", r.degree_bound},
          {"seed", r.seed},
          {"witness", r.witness()},
          {"contractions", contractions}};
}

json to_json(const StokesReport& r) {
  return {{"lhs", r.lhs},
          {"rhs", r.rhs},
          {"lhs_error", r.lhs_error},
          {"rhs_error", r.rhs_error},
          {"residual", r.residual},
          {"tolerance", r.tolerance},
          {"pass", r.pass}};
}

}  // namespace cinfty
