#pragma once

#include <filesystem>
#include <vector>

#include <json.hpp>

#include "cinfty/geometry.hpp"
#include "cinfty/integrate.hpp"
#include "cinfty/kaehler.hpp"

namespace cinfty {

using json = nlohmann::json;

/// Unreadable file or a document that does not match the expected schema.
struct IoError : Error {
  using Error::Error;
};

/// {"n": int, "generators": [expr, ...], "oracle": {"degree_bound", "samples",
/// "tolerance", "box": [[lo, hi], ...], "seed"}}. "generators" and "oracle"
/// (and each oracle field) are optional. Expression errors surface as ParseError.
Ring ring_from_json(const json& j);
json ring_to_json(const RingPresentation& ring);
Ring load_ring(const std::filesystem::path& path);

struct SpaceDescription {
  Space space;
  std::vector<BasicOpen> opens;
};

/// {"ring": <path or inline ring object>, "box": [[lo, hi], ...], "opens":
/// [{"positivity": [expr, ...]}, ...], "seed": int}. A ring path is resolved
/// against base_dir.
SpaceDescription space_from_json(const json& j, const std::filesystem::path& base_dir = {});
SpaceDescription load_space(const std::filesystem::path& path);

json to_json(const Verdict& v);
json to_json(const PsiReport& r);
json to_json(const StokesReport& r);

/// Reads a whole file; IoError when it cannot be opened.
std::string read_file(const std::filesystem::path& path);

}  // namespace cinfty
