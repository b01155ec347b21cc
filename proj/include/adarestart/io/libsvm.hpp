#pragma once

#include <charconv>
#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "adarestart/numerics/sparse.hpp"
#include "adarestart/problems/regression.hpp"

namespace adarestart::io {

class LibsvmParseError : public std::runtime_error {
 public:
  LibsvmParseError(std::size_t line, const std::string& what)
      : std::runtime_error("libsvm line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct LibsvmRecord {
  double label = 0.0;
  std::vector<std::pair<Eigen::Index, double>> features;  // 1-based indices
};

struct LibsvmData {
  SparseMatrix matrix;  // raw, 0-based columns
  Eigen::VectorXd labels;
};

struct LibsvmDataset {
  SparseMatrix matrix;  // preprocessed
  Eigen::VectorXd labels;
  std::vector<Eigen::Index> column_map;
};

namespace detail {

inline double parse_real(std::string_view tok, std::size_t line) {
  double v = 0.0;
  if (!tok.empty() && tok.front() == '+') tok.remove_prefix(1);
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw LibsvmParseError(line, "bad number '" + std::string(tok) + "'");
  }
  return v;
}

inline Eigen::Index parse_index(std::string_view tok, std::size_t line) {
  long long v = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size() || v < 1) {
    throw LibsvmParseError(line, "bad feature index '" + std::string(tok) + "'");
  }
  return static_cast<Eigen::Index>(v);
}

inline std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t' && s[i] != '\r') ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

}  // namespace detail

// One record per line: "label idx:val idx:val ...", indices 1-based and
// strictly increasing. Blank lines and '#' comments are skipped.
inline std::vector<LibsvmRecord> parse_libsvm_records(std::istream& in) {
  std::vector<LibsvmRecord> records;
  std::string text;
  std::size_t line = 0;
  while (std::getline(in, text)) {
    ++line;
    std::string_view view(text);
    if (const auto hash = view.find('#'); hash != std::string_view::npos) view = view.substr(0, hash);
    const auto tokens = detail::split_ws(view);
    if (tokens.empty()) continue;
    LibsvmRecord rec;
    rec.label = detail::parse_real(tokens[0], line);
    Eigen::Index last = 0;
    for (std::size_t k = 1; k < tokens.size(); ++k) {
      const auto colon = tokens[k].find(':');
      if (colon == std::string_view::npos) {
        throw LibsvmParseError(line, "expected idx:value, got '" + std::string(tokens[k]) + "'");
      }
      const Eigen::Index idx = detail::parse_index(tokens[k].substr(0, colon), line);
      if (idx <= last) throw LibsvmParseError(line, "feature indices must be strictly increasing");
      last = idx;
      rec.features.emplace_back(idx, detail::parse_real(tokens[k].substr(colon + 1), line));
    }
    records.push_back(std::move(rec));
  }
  if (in.bad()) throw std::runtime_error("libsvm: read failure");
  return records;
}

// Raw matrix; min_features widens the matrix beyond the largest index seen.
inline LibsvmData parse_libsvm(std::istream& in, Eigen::Index min_features = 0) {
  const auto records = parse_libsvm_records(in);
  Eigen::Index cols = min_features;
  std::vector<Triplet> entries;
  LibsvmData out;
  out.labels.resize(static_cast<Eigen::Index>(records.size()));
  for (std::size_t r = 0; r < records.size(); ++r) {
    out.labels[static_cast<Eigen::Index>(r)] = records[r].label;
    for (const auto& [idx, val] : records[r].features) {
      cols = std::max(cols, idx);
      entries.emplace_back(static_cast<Eigen::Index>(r), idx - 1, val);
    }
  }
  out.matrix = make_sparse(static_cast<Eigen::Index>(records.size()), cols, entries);
  return out;
}

// Parse, then drop empty columns, append an intercept and normalize columns.
inline LibsvmDataset load_libsvm(std::istream& in, Eigen::Index min_features = 0) {
  LibsvmData raw = parse_libsvm(in, min_features);
  auto design = problems::preprocess_design(raw.matrix);
  return {std::move(design.matrix), std::move(raw.labels), std::move(design.column_map)};
}

}  // namespace adarestart::io
