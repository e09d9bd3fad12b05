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

#include "socialgcn/checkpoint.hpp"

#include <bit>
#include <cstring>
#include <fstream>
#include <iterator>
#include <sstream>

#include "socialgcn/errors.hpp"
#include "socialgcn/run_config.hpp"
#include "socialgcn/tsv_io.hpp"

namespace sgcn {
namespace {

constexpr std::string_view kMagic = "SGCNCKPT";
constexpr std::string_view kEnd = "END\n";
constexpr std::uint8_t kFloat64 = 1;

class Writer {
 public:
  void raw(std::string_view s) { out_.append(s); }
  void u8(std::uint8_t v) { out_.push_back(static_cast<char>(v)); }
  void u32(std::uint32_t v) {
    for (int b = 0; b < 4; ++b) out_.push_back(static_cast<char>((v >> (8 * b)) & 0xff));
  }
  void u64(std::uint64_t v) {
    for (int b = 0; b < 8; ++b) out_.push_back(static_cast<char>((v >> (8 * b)) & 0xff));
  }
  void f64(double v) { u64(std::bit_cast<std::uint64_t>(v)); }
  void text(std::string_view s) {
    u32(static_cast<std::uint32_t>(s.size()));
    raw(s);
  }
  std::string take() { return std::move(out_); }

 private:
  std::string out_;
};

class Reader {
 public:
  explicit Reader(std::string_view bytes) : bytes_(bytes) {}

  void set_block(std::string block) { block_ = std::move(block); }

  std::string_view raw(std::size_t n) {
    if (bytes_.size() - pos_ < n) fail("truncated");
    std::string_view s = bytes_.substr(pos_, n);
    pos_ += n;
    return s;
  }
  std::uint8_t u8() { return static_cast<std::uint8_t>(raw(1)[0]); }
  std::uint32_t u32() {
    auto s = raw(4);
    std::uint32_t v = 0;
    for (int b = 0; b < 4; ++b) v |= std::uint32_t(static_cast<unsigned char>(s[b])) << (8 * b);
    return v;
  }
  std::uint64_t u64() {
    auto s = raw(8);
    std::uint64_t v = 0;
    for (int b = 0; b < 8; ++b) v |= std::uint64_t(static_cast<unsigned char>(s[b])) << (8 * b);
    return v;
  }
  double f64() { return std::bit_cast<double>(u64()); }
  std::string text() {
    const std::uint32_t n = u32();
    return std::string(raw(n));
  }
  bool at_end() const { return pos_ == bytes_.size(); }

  [[noreturn]] void fail(const std::string& why) const {
    throw CheckpointError("corrupt checkpoint: " + why + " in block '" + block_ + "'");
  }

 private:
  std::string_view bytes_;
  std::size_t pos_ = 0;
  std::string block_ = "header";
};

std::string shape_to_text(const ModelShape& s) {
  std::ostringstream out;
  out << "users=" << s.users << "\nitems=" << s.items
      << "\nuser_feature_dim=" << s.user_feature_dim
      << "\nitem_feature_dim=" << s.item_feature_dim << '\n';
  return out.str();
}

ModelShape shape_from_text(const std::string& text) {
  const KeyValues kv = parse_key_values(text, "shape");
  ModelShape s;
  s.users = kv.get_size("users");
  s.items = kv.get_size("items");
  s.user_feature_dim = kv.get_size("user_feature_dim");
  s.item_feature_dim = kv.get_size("item_feature_dim");
  kv.reject_unused();
  return s;
}

}  // namespace

std::string serialize_checkpoint(const Checkpoint& checkpoint) {
  Writer w;
  w.raw(kMagic);
  w.u32(kCheckpointVersion);
  w.text(hyperparams_to_text(checkpoint.hypers));
  w.text(shape_to_text(checkpoint.shape));
  w.text(checkpoint.dataset_fingerprint);
  w.text(checkpoint.log_tail);
  const auto tensors = checkpoint.params.tensors();
  w.u32(static_cast<std::uint32_t>(tensors.size()));
  for (const auto& t : tensors) {
    w.text(t.name);
    w.u64(static_cast<std::uint64_t>(t.tensor->rows()));
    w.u64(static_cast<std::uint64_t>(t.tensor->cols()));
    w.u8(kFloat64);
    for (Eigen::Index k = 0; k < t.tensor->size(); ++k) w.f64(t.tensor->data()[k]);
  }
  w.raw(kEnd);
  return w.take();
}

Checkpoint parse_checkpoint(std::string_view bytes) {
  Reader r(bytes);
  r.set_block("magic");
  if (r.raw(kMagic.size()) != kMagic) r.fail("bad magic bytes");
  r.set_block("version");
  const std::uint32_t version = r.u32();
  if (version != kCheckpointVersion) {
    r.fail("unsupported version " + std::to_string(version) + " (expected " +
           std::to_string(kCheckpointVersion) + ")");
  }

  Checkpoint ckpt;
  r.set_block("hyperparameters");
  try {
    ckpt.hypers = hyperparams_from_text(r.text());
  } catch (const ConfigError& e) {
    r.fail(e.what());
  }
  r.set_block("shape");
  try {
    ckpt.shape = shape_from_text(r.text());
  } catch (const ConfigError& e) {
    r.fail(e.what());
  }
  r.set_block("fingerprint");
  ckpt.dataset_fingerprint = r.text();
  r.set_block("log_tail");
  ckpt.log_tail = r.text();

  ckpt.params = ModelParams::zeros(ckpt.hypers, ckpt.shape);
  auto expected = ckpt.params.tensors();
  r.set_block("tensor table");
  const std::uint32_t count = r.u32();
  if (count != expected.size()) {
    r.fail("expected " + std::to_string(expected.size()) + " tensors, found " +
           std::to_string(count));
  }
  for (auto& slot : expected) {
    r.set_block("tensor " + slot.name);
    const std::string name = r.text();
    if (name != slot.name) r.fail("unexpected tensor name '" + name + "'");
    const std::uint64_t rows = r.u64();
    const std::uint64_t cols = r.u64();
    if (rows != static_cast<std::uint64_t>(slot.tensor->rows()) ||
        cols != static_cast<std::uint64_t>(slot.tensor->cols())) {
      r.fail("shape " + std::to_string(rows) + "x" + std::to_string(cols) +
             " disagrees with hyperparameters");
    }
    if (r.u8() != kFloat64) r.fail("unsupported element type");
    for (Eigen::Index k = 0; k < slot.tensor->size(); ++k) slot.tensor->data()[k] = r.f64();
  }
  r.set_block("end marker");
  if (r.raw(kEnd.size()) != kEnd) r.fail("missing end marker");
  if (!r.at_end()) r.fail("trailing bytes");
  return ckpt;
}

void save_checkpoint(const std::filesystem::path& path, const Checkpoint& checkpoint) {
  write_file_atomic(path, serialize_checkpoint(checkpoint));
}

Checkpoint load_checkpoint(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CheckpointError("cannot open checkpoint " + path.string());
  std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return parse_checkpoint(bytes);
}

}  // namespace sgcn
