#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "dblcat/dblfunctor.hpp"
#include "dblcat/doublecat.hpp"
#include "dblcat/fincat.hpp"
#include "dblcat/law_report.hpp"
#include "dblcat/twosided.hpp"

namespace dblcat {

inline constexpr std::string_view kSchema = "dblcat/1";

enum class Level { category, twosided, dbl };
std::string_view to_string(Level level);
std::optional<Level> level_from_string(std::string_view name);

// A parsed file. Fields up to the parsed level are set.
struct Document {
  Level level = Level::category;
  CategoryPtr category;
  TwoSidedPtr twosided;
  DoublePtr dbl;
};

// Parses one file. Without a level the richest level whose keys are present is used; with a level
// the keys of that level must be present and richer keys are ignored.
// Throws ParseError for malformed JSON, missing or unknown keys and wrong types; constructors
// throw IndexOutOfRange / DuplicateEntry for bad tables.
Document parse_document(std::string_view text, std::optional<Level> level = std::nullopt);
Document load_document(const std::filesystem::path& path, std::optional<Level> level = std::nullopt);

std::string to_json(const FinCategory& c);
std::string to_json(const TwoSidedDispCat& d);
std::string to_json(const DoubleCategory& d);

// Functor files name their domain and codomain files; relative paths resolve against the
// functor file's directory.
LaxDoubleFunctor load_functor(const std::filesystem::path& path);
LaxDoubleFunctor parse_functor(std::string_view text, const std::filesystem::path& base_dir);
std::string to_json(const LaxDoubleFunctor& f, const std::string& dom_path, const std::string& cod_path);

// Violations sorted by law name then witness.
std::string report_to_json(const LawReport& r);
std::string verdict_to_json(std::string_view subject, const Verdict& v);

}  // namespace dblcat
