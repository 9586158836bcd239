#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "rainbow/certificate.hpp"
#include "rainbow/family.hpp"

namespace rainbow {

class FormatError : public Error {
public:
    using Error::Error;
};
class ColorRangeError : public Error {
public:
    using Error::Error;
};
class SizeMismatchError : public Error {
public:
    using Error::Error;
};

// Family file: a header line "n k", then n blocks; block v lists f_v on every
// edge {a,b}, a<b, in lexicographic order. Whitespace separated, colors in [1,k].
void write_family(std::ostream& out, const ColoringFamily& family);
ColoringFamily read_family(std::istream& in);
void save_family(const std::filesystem::path& path, const ColoringFamily& family);
ColoringFamily load_family(const std::filesystem::path& path);

// Pattern file: vertex count, then one "a b" line per edge, optional "isolated r" trailer.
void write_pattern(std::ostream& out, const PatternGraph& pattern);
PatternGraph read_pattern(std::istream& in);
PatternGraph load_pattern(const std::filesystem::path& path);

/// One JSON object on a single line. extra_fields must be a JSON object whose
/// members are merged into the record (diagnostics, run parameters).
std::string certificate_to_json(const AnchoredViolation& violation,
                                std::string_view extra_fields = "{}");
AnchoredViolation certificate_from_json(std::string_view line);
AnchoredViolation load_certificate(const std::filesystem::path& path);

}  // namespace rainbow
