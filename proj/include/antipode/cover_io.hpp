#pragma once

// Cover text format:
//
//   d=<d> codim=<c> sets=<n>
//   <face>,<face>,...      one line per set, faces in canonical order
//   -                      an empty set
//
// Faces use the {0,1,X} grammar of parse_face.

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "antipode/cover.hpp"
#include "antipode/face.hpp"

namespace antipode {

class CoverFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline std::string format_cover_set(const CoverSet& s) {
  if (s.empty()) return "-";
  std::string out;
  for (const Face& f : s.faces()) {
    if (!out.empty()) out += ',';
    out += format_face(f);
  }
  return out;
}

inline void write_cover(std::ostream& os, const Cover& c) {
  os << "d=" << c.ambient() << " codim=" << c.codimension() << " sets=" << c.size() << '\n';
  for (const CoverSet& s : c.sets()) os << format_cover_set(s) << '\n';
}

inline std::string format_cover(const Cover& c) {
  std::ostringstream os;
  write_cover(os, c);
  return os.str();
}

namespace detail {

inline std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

inline int parse_header_field(const std::string& token, const std::string& key) {
  if (token.rfind(key + "=", 0) != 0) throw CoverFormatError("expected '" + key + "=<int>' in header, got '" + token + "'");
  try {
    std::size_t used = 0;
    const int v = std::stoi(token.substr(key.size() + 1), &used);
    if (used != token.size() - key.size() - 1) throw std::invalid_argument(token);
    return v;
  } catch (const std::logic_error&) {
    throw CoverFormatError("bad integer in header field '" + token + "'");
  }
}

}  // namespace detail

inline Cover read_cover(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw CoverFormatError("missing cover header");
  std::istringstream header(detail::trim(line));
  std::string td, tc, tn, extra;
  header >> td >> tc >> tn;
  if (header >> extra) throw CoverFormatError("unexpected header token '" + extra + "'");
  const int d = detail::parse_header_field(td, "d");
  const int codim = detail::parse_header_field(tc, "codim");
  const int n = detail::parse_header_field(tn, "sets");
  if (n < 1) throw CoverFormatError("a cover needs at least one set");

  std::vector<CoverSet> sets;
  try {
    for (int i = 0; i < n; ++i) {
      if (!std::getline(is, line)) throw CoverFormatError("expected " + std::to_string(n) + " set lines, got " + std::to_string(i));
      const std::string body = detail::trim(line);
      std::vector<Face> faces;
      if (body != "-") {
        std::istringstream items(body);
        std::string item;
        while (std::getline(items, item, ',')) faces.push_back(parse_face(detail::trim(item), d));
      }
      sets.emplace_back(d, codim, std::move(faces));
    }
    while (std::getline(is, line))
      if (!detail::trim(line).empty()) throw CoverFormatError("trailing content after " + std::to_string(n) + " sets");
    return Cover(d, codim, std::move(sets));
  } catch (const CoverFormatError&) {
    throw;
  } catch (const std::exception& e) {
    throw CoverFormatError(e.what());
  }
}

inline Cover parse_cover(const std::string& text) {
  std::istringstream is(text);
  return read_cover(is);
}

}  // namespace antipode
