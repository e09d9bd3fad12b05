// Copyright 2026 The SocialGCN Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "socialgcn/tsv_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <string_view>
#include <vector>

#include "socialgcn/errors.hpp"

namespace sgcn {
namespace {

constexpr std::uint64_t kMaxId = std::numeric_limits<Id>::max() - 1;

struct Header {
  std::optional<std::size_t> users;
  std::optional<std::size_t> items;
};

std::string where(const std::string& source, std::size_t line) {
  return source + ":" + std::to_string(line);
}

std::string_view trim_cr(std::string_view s) {
  if (!s.empty() && s.back() == '\r') s.remove_suffix(1);
  return s;
}

bool skippable(std::string_view line) {
  return line.empty() || line.front() == '#';
}

std::optional<std::uint64_t> parse_uint(std::string_view s) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    return std::nullopt;
  }
  return v;
}

// "users=M items=N"; any subset of the keys.
Header parse_header(std::string_view line, const std::string& at) {
  Header h;
  while (!line.empty()) {
    auto space = line.find(' ');
    std::string_view token = line.substr(0, space);
    line = space == std::string_view::npos ? std::string_view{}
                                           : line.substr(space + 1);
    if (token.empty()) continue;
    auto eq = token.find('=');
    if (eq == std::string_view::npos) {
      throw DataError(at + ": malformed header token '" + std::string(token) + "'");
    }
    auto key = token.substr(0, eq);
    auto value = parse_uint(token.substr(eq + 1));
    if (!value) throw DataError(at + ": malformed header value");
    if (key == "users") {
      h.users = *value;
    } else if (key == "items") {
      h.items = *value;
    } else {
      throw DataError(at + ": unknown header key '" + std::string(key) + "'");
    }
  }
  return h;
}

Id parse_id(std::string_view field, const std::string& at) {
  auto v = parse_uint(field);
  if (!v) throw DataError(at + ": malformed id '" + std::string(field) + "'");
  if (*v > kMaxId) throw DataError(at + ": id overflow '" + std::string(field) + "'");
  return static_cast<Id>(*v);
}

struct PairFile {
  Header header;
  std::vector<Edge> edges;
  bool saw_content = false;
};

PairFile read_pairs(std::istream& in, const std::string& source) {
  PairFile out;
  std::string raw;
  std::size_t line_no = 0;
  bool first_content = true;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = trim_cr(raw);
    if (skippable(line)) continue;
    const std::string at = where(source, line_no);
    if (first_content && line.find('=') != std::string_view::npos) {
      out.header = parse_header(line, at);
      out.saw_content = true;
      first_content = false;
      continue;
    }
    first_content = false;
    out.saw_content = true;
    auto tab = line.find('\t');
    if (tab == std::string_view::npos || line.find('\t', tab + 1) != std::string_view::npos) {
      throw DataError(at + ": expected two tab-separated ids");
    }
    out.edges.push_back({parse_id(line.substr(0, tab), at),
                         parse_id(line.substr(tab + 1), at)});
  }
  return out;
}

std::size_t resolve_dim(std::optional<std::size_t> declared, std::size_t observed,
                        const std::string& source, const char* what) {
  if (!declared) return observed;
  if (*declared < observed) {
    throw DataError(source + ": id overflow, " + what + " id " +
                    std::to_string(observed - 1) + " exceeds declared count " +
                    std::to_string(*declared));
  }
  return *declared;
}

std::ifstream open_or_throw(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open " + path.string());
  return in;
}

}  // namespace

InteractionMatrix read_interactions(std::istream& in, const std::string& source) {
  PairFile file = read_pairs(in, source);
  if (file.edges.empty() && !file.header.users) {
    throw DataError(source + ": empty interaction file");
  }
  std::size_t max_user = 0, max_item = 0;
  for (const Edge& e : file.edges) {
    max_user = std::max<std::size_t>(max_user, e.from + 1);
    max_item = std::max<std::size_t>(max_item, e.to + 1);
  }
  return InteractionMatrix(resolve_dim(file.header.users, max_user, source, "user"),
                           resolve_dim(file.header.items, max_item, source, "item"),
                           std::move(file.edges));
}

SocialGraph read_social(std::istream& in, const std::string& source,
                        std::optional<std::size_t> num_users) {
  PairFile file = read_pairs(in, source);
  std::size_t max_user = 0;
  for (const Edge& e : file.edges) {
    max_user = std::max<std::size_t>(max_user, std::max(e.from, e.to) + 1);
  }
  std::size_t users = resolve_dim(file.header.users, max_user, source, "user");
  if (num_users) users = std::max(users, *num_users);
  for (const Edge& e : file.edges) {
    if (e.from == e.to) {
      throw DataError(source + ": self-loop on user " + std::to_string(e.from));
    }
  }
  return SocialGraph(users, std::move(file.edges));
}

FeatureTable read_features(std::istream& in, const std::string& source,
                           std::size_t expected_count) {
  std::vector<std::vector<double>> rows(expected_count);
  std::vector<bool> seen(expected_count, false);
  std::optional<std::size_t> dim;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = trim_cr(raw);
    if (skippable(line)) continue;
    const std::string at = where(source, line_no);
    auto tab = line.find('\t');
    if (tab == std::string_view::npos) throw DataError(at + ": expected 'id<TAB>values'");
    Id id = parse_id(line.substr(0, tab), at);
    if (id >= expected_count) {
      throw DataError(at + ": id " + std::to_string(id) + " outside " +
                      std::to_string(expected_count) + " entities");
    }
    if (seen[id]) throw DataError(at + ": duplicate id " + std::to_string(id));
    seen[id] = true;

    std::vector<double>& values = rows[id];
    std::string_view rest = line.substr(tab + 1);
    while (true) {
      auto comma = rest.find(',');
      std::string_view field = rest.substr(0, comma);
      double v = 0.0;
      auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
      if (ec != std::errc() || ptr != field.data() + field.size() || field.empty()) {
        throw DataError(at + ": malformed value '" + std::string(field) + "'");
      }
      if (!std::isfinite(v)) {
        throw DataError(at + ": non-finite value '" + std::string(field) + "'");
      }
      values.push_back(v);
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
    }
    if (!dim) dim = values.size();
    if (values.size() != *dim) {
      throw DataError(at + ": inconsistent dimension " + std::to_string(values.size()) +
                      " (expected " + std::to_string(*dim) + ")");
    }
  }
  for (std::size_t id = 0; id < expected_count; ++id) {
    if (!seen[id]) throw DataError(source + ": missing entity " + std::to_string(id));
  }
  Eigen::MatrixXd m(static_cast<Eigen::Index>(dim.value_or(0)),
                    static_cast<Eigen::Index>(expected_count));
  for (std::size_t id = 0; id < expected_count; ++id) {
    for (std::size_t d = 0; d < rows[id].size(); ++d) m(d, id) = rows[id][d];
  }
  return FeatureTable(std::move(m));
}

InteractionMatrix load_interactions(const std::filesystem::path& path) {
  auto in = open_or_throw(path);
  return read_interactions(in, path.string());
}

SocialGraph load_social(const std::filesystem::path& path,
                        std::optional<std::size_t> num_users) {
  auto in = open_or_throw(path);
  return read_social(in, path.string(), num_users);
}

FeatureTable load_features(const std::filesystem::path& path,
                           std::size_t expected_count) {
  auto in = open_or_throw(path);
  return read_features(in, path.string(), expected_count);
}

std::string format_double(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, ptr);
}

void write_interactions(std::ostream& out, const InteractionMatrix& m) {
  out << "users=" << m.num_users() << " items=" << m.num_items() << '\n';
  for (const Edge& e : m.edges()) out << e.from << '\t' << e.to << '\n';
}

void write_social(std::ostream& out, const SocialGraph& g) {
  out << "users=" << g.num_users() << '\n';
  for (const Edge& e : g.edges()) out << e.from << '\t' << e.to << '\n';
}

void write_features(std::ostream& out, const FeatureTable& t) {
  for (std::size_t id = 0; id < t.count(); ++id) {
    out << id << '\t';
    for (std::size_t d = 0; d < t.dim(); ++d) {
      if (d) out << ',';
      out << format_double(t.values()(d, id));
    }
    out << '\n';
  }
}

void write_file_atomic(const std::filesystem::path& path,
                       const std::string& contents) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw DataError("cannot write " + tmp.string());
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    out.close();
    if (!out) {
      std::error_code ignored;
      std::filesystem::remove(tmp, ignored);
      throw DataError("write failed for " + tmp.string());
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw DataError("cannot move " + tmp.string() + " into place");
  }
}

}  // namespace sgcn
