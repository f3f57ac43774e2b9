#pragma once

// Text formats.
//
//   vector file     one vector per line, whitespace-separated scalars
//                   (`-inf`, `+inf`, `3`, `-2.5`, `7/3`); optional header
//                   `# labels: x1 x2 ...`
//   function file   a vector file whose labels header is mandatory
//   functional file `# functional-representer dim=N` then one vector line
//   graph file      lines `input scalars | output scalars`
//
// Other lines starting with '#' and blank lines are ignored.

#include <cstddef>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "idem/error.hpp"
#include "idem/functionals.hpp"
#include "idem/semialgebra.hpp"
#include "idem/semimodule.hpp"

namespace idem {

struct VectorFile {
  std::vector<std::string> labels;
  std::vector<FinVector> vectors;
};

namespace detail {

struct Token {
  std::string text;
  std::size_t column;  // 1-based
};

inline std::vector<Token> tokenize(std::string_view line, std::size_t offset = 0) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i == line.size()) break;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    out.push_back({std::string(line.substr(start, i - start)), offset + start + 1});
  }
  return out;
}

inline std::vector<Extended> parse_scalars(std::string_view text, std::size_t line_no, std::size_t offset = 0) {
  std::vector<Extended> out;
  for (const auto& tok : tokenize(text, offset)) {
    try {
      out.push_back(parse_scalar(tok.text));
    } catch (const ParseError& e) {
      throw ParseError(e.what(), line_no, tok.column);
    }
  }
  return out;
}

inline bool is_blank(std::string_view line) { return line.find_first_not_of(" \t\r") == std::string_view::npos; }

inline std::string_view trim_left(std::string_view s) {
  auto p = s.find_first_not_of(" \t\r");
  return p == std::string_view::npos ? std::string_view{} : s.substr(p);
}

inline bool starts_with(std::string_view s, std::string_view prefix) { return s.substr(0, prefix.size()) == prefix; }

}  // namespace detail

inline VectorFile parse_vector_file(std::istream& in, bool require_labels = false) {
  VectorFile out;
  bool have_labels = false;
  std::optional<std::size_t> dim;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto body = detail::trim_left(line);
    if (body.empty()) continue;
    if (body.front() == '#') {
      auto rest = detail::trim_left(body.substr(1));
      if (detail::starts_with(rest, "labels:")) {
        if (have_labels) throw ParseError("repeated labels header", line_no);
        if (!out.vectors.empty()) throw ParseError("labels header after data", line_no);
        for (auto& tok : detail::tokenize(rest.substr(7))) out.labels.push_back(std::move(tok.text));
        if (out.labels.empty()) throw ParseError("labels header names no coordinates", line_no);
        have_labels = true;
        dim = out.labels.size();
      }
      continue;
    }
    auto coords = detail::parse_scalars(line, line_no);
    if (!dim) dim = coords.size();
    if (coords.size() != *dim)
      throw ParseError("expected " + std::to_string(*dim) + " coordinates, got " + std::to_string(coords.size()),
                       line_no);
    out.vectors.emplace_back(std::move(coords), out.labels);
  }
  if (require_labels && !have_labels) throw ParseError("missing '# labels:' header");
  return out;
}

inline VectorFile parse_vector_file(std::string_view text, bool require_labels = false) {
  std::istringstream in{std::string(text)};
  return parse_vector_file(in, require_labels);
}

inline void write_vector(std::ostream& os, const FinVector& v) {
  for (std::size_t i = 0; i < v.dim(); ++i) os << (i ? " " : "") << to_string(v[i]);
  os << '\n';
}

inline void write_vector_file(std::ostream& os, const VectorFile& f) {
  if (!f.labels.empty()) {
    os << "# labels:";
    for (const auto& l : f.labels) os << ' ' << l;
    os << '\n';
  }
  for (const auto& v : f.vectors) write_vector(os, v);
}

inline std::string format_vector_file(const VectorFile& f) {
  std::ostringstream os;
  write_vector_file(os, f);
  return os.str();
}

inline std::vector<AlgebraElement> parse_function_file(std::istream& in) {
  auto file = parse_vector_file(in, true);
  std::vector<AlgebraElement> out;
  for (auto& v : file.vectors) out.emplace_back(std::move(v));
  return out;
}

inline std::vector<AlgebraElement> parse_function_file(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_function_file(in);
}

inline void write_function(std::ostream& os, const AlgebraElement& phi) {
  write_vector_file(os, VectorFile{phi.labels(), {phi.underlying()}});
}

inline FunctionalRep parse_functional_file(std::istream& in) {
  std::optional<std::size_t> dim;
  std::optional<FinVector> rep;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto body = detail::trim_left(line);
    if (body.empty()) continue;
    if (!dim) {
      std::istringstream hs{std::string(body)};
      std::string hash, tag, size;
      std::string extra;
      if (!(hs >> hash >> tag >> size) || (hs >> extra) || hash != "#" || tag != "functional-representer" ||
          !detail::starts_with(size, "dim="))
        throw ParseError("expected '# functional-representer dim=N'", line_no, 1);
      auto digits = size.substr(4);
      if (!detail::all_digits(digits)) throw ParseError("malformed dimension '" + digits + "'", line_no);
      dim = std::stoul(digits);
      continue;
    }
    if (body.front() == '#') continue;
    if (rep) throw ParseError("functional file holds more than one representer", line_no);
    auto coords = detail::parse_scalars(line, line_no);
    if (coords.size() != *dim)
      throw ParseError("expected " + std::to_string(*dim) + " coordinates, got " + std::to_string(coords.size()),
                       line_no);
    rep = FinVector(std::move(coords));
  }
  if (!dim) throw ParseError("missing '# functional-representer dim=N' header");
  if (!rep) throw ParseError("functional file has no representer line");
  return FunctionalRep(std::move(*rep));
}

inline FunctionalRep parse_functional_file(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_functional_file(in);
}

inline void write_functional(std::ostream& os, const FunctionalRep& f) {
  os << "# functional-representer dim=" << f.dim() << '\n';
  write_vector(os, f.representer());
}

inline std::string format_functional(const FunctionalRep& f) {
  std::ostringstream os;
  write_functional(os, f);
  return os.str();
}

inline LinearMapSample<Extended> parse_graph_file(std::istream& in) {
  std::vector<LinearMapSample<Extended>::Pair> pairs;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto body = detail::trim_left(line);
    if (body.empty() || body.front() == '#') continue;
    auto bar = line.find('|');
    if (bar == std::string::npos || line.find('|', bar + 1) != std::string::npos)
      throw ParseError("expected 'input | output'", line_no);
    auto lhs = detail::parse_scalars(std::string_view(line).substr(0, bar), line_no);
    auto rhs = detail::parse_scalars(std::string_view(line).substr(bar + 1), line_no, bar + 1);
    if (!pairs.empty() && (lhs.size() != pairs[0].first.dim() || rhs.size() != pairs[0].second.dim()))
      throw ParseError("pair dimensions differ from the first pair", line_no);
    pairs.emplace_back(FinVector(std::move(lhs)), FinVector(std::move(rhs)));
  }
  if (pairs.empty()) throw ParseError("graph file has no pairs");
  try {
    return LinearMapSample<Extended>(std::move(pairs));
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
}

template <class Parse>
auto parse_file(const std::string& path, Parse&& parse) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  try {
    return parse(in);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

}  // namespace idem
