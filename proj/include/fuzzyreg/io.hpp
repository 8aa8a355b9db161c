#ifndef FUZZYREG_IO_HPP
#define FUZZYREG_IO_HPP

#include <cstddef>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fuzzyreg/inference.hpp"
#include "fuzzyreg/membership.hpp"
#include "fuzzyreg/regulator.hpp"

namespace fuzzyreg {

/// Parses a JSON controller document (grammar in docs/config-format.md).
/// Malformed JSON raises Error(ParseError) with a line:column path;
/// well-formed documents that break an invariant raise Error(ValidationError)
/// with a JSON-pointer path to the offending field.
Regulator parse_config(std::string_view document);
Regulator load_config(const std::filesystem::path& file);

/// Canonical document for `reg`; parse_config of the result compares equal.
std::string serialize_config(const Regulator& reg);

/// Six significant digits, '.' separator, independent of the global locale.
std::string format_number(double value);

/// "[a, b, c]" with format_number elements.
std::string format_vector(std::span<const double> values);

/// CSV with header `x,<term1>,...` and `samples` rows spanning the universe.
std::string emit_mf_plot_data(const LinguisticVariable& var, std::size_t samples);

/// `input,output` CSV of a sweep.
std::string emit_sweep_csv(std::span<const SweepPoint> points);

/// Headerless CSV, one matrix row per line. Blank lines are skipped.
FuzzyRelation parse_relation_csv(std::string_view text);

/// A vector written either on one line or one value per line.
std::vector<double> parse_vector_csv(std::string_view text);

std::string read_text_file(const std::filesystem::path& file);

} // namespace fuzzyreg

#endif
