#pragma once

#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "morlicz/space.hpp"

namespace morlicz {

/// 12 significant digits, scientific; the fixed interchange format for every
/// numeric field emitted by the tools.
std::string format_sig(double v);

/// Single-line recursive descriptor, e.g.
///   power(1.5)
///   weighted_log(-3.2e+01, power(2))
///   piecewise(exp_example; 1,a,b,log_na,log_nb; 2,...)
std::string describe(const OrliczFunction& m);
OrliczFunction parse_function(const std::string& text);

/// Multi-line family descriptor: catalog tag, then the pieces it needs.
std::string describe(const MusielakFamily& fam);
MusielakFamily parse_family(const std::string& text);

std::string describe(const WeightSequence& w);
WeightSequence parse_weights(const std::string& text);

std::string describe(const BoundedDomain& s);
BoundedDomain parse_domain(const std::string& text);

/// CSV with the fixed header "index,value"; indices are 1-based.
std::string to_csv(const FiniteVector& x);
FiniteVector vector_from_csv(const std::string& text);

/// Flat view of an ini-style file: "[section]" headers plus "key = value"
/// lines; keys are stored as "section.key" ("" section for the preamble).
/// '#' starts a comment. Malformed lines throw ParseError.
struct Config {
    std::map<std::string, std::string> values;
    bool has(const std::string& key) const { return values.count(key) != 0; }
    const std::string& get(const std::string& key) const;
    double get_double(const std::string& key) const;
    long get_long(const std::string& key) const;
};
Config parse_config(const std::string& text);

/// Streams rows under a fixed header; every double goes through format_sig so
/// identical inputs produce byte-identical files.
class CsvWriter {
public:
    CsvWriter(std::ostream& os, const std::vector<std::string>& header);
    void row(const std::vector<std::string>& cells);
    void row_numeric(const std::vector<double>& cells);

private:
    std::ostream& os_;
    std::size_t width_;
};

} // namespace morlicz
