// Copyright 2026 The EECS Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "eecs/model_io.h"

#include <bit>
#include <cstring>
#include <fstream>
#include <iterator>
#include <sstream>

#include <zlib.h>

#include "eecs/errors.h"

namespace eecs {

namespace {

class Writer {
 public:
  void Bytes(const void *data, size_t size) {
    out_.append(static_cast<const char *>(data), size);
  }
  void U32(uint32_t v) {
    for (int i = 0; i < 4; ++i) out_.push_back(static_cast<char>(v >> (8 * i)));
  }
  void U64(uint64_t v) {
    for (int i = 0; i < 8; ++i) out_.push_back(static_cast<char>(v >> (8 * i)));
  }
  void I64(int64_t v) { U64(static_cast<uint64_t>(v)); }
  void F64(double v) { U64(std::bit_cast<uint64_t>(v)); }
  void Str(const std::string &s) {
    U64(s.size());
    Bytes(s.data(), s.size());
  }
  void Strings(const std::vector<std::string> &v) {
    U64(v.size());
    for (const std::string &s : v) Str(s);
  }
  void Ints(const std::vector<int> &v) {
    U64(v.size());
    for (int x : v) I64(x);
  }
  void Mat(const Matrix &m) {
    U64(static_cast<uint64_t>(m.rows()));
    U64(static_cast<uint64_t>(m.cols()));
    for (Eigen::Index i = 0; i < m.size(); ++i) F64(m.data()[i]);
  }

  std::string &bytes() { return out_; }

 private:
  std::string out_;
};

class Reader {
 public:
  Reader(const std::string &bytes, size_t end) : bytes_(bytes), end_(end) {}

  void Need(size_t n) const {
    if (pos_ + n > end_) throw FormatError("model file is structurally invalid");
  }
  uint32_t U32() {
    Need(4);
    uint32_t v = 0;
    for (int i = 0; i < 4; ++i) {
      v |= static_cast<uint32_t>(static_cast<unsigned char>(bytes_[pos_ + i]))
           << (8 * i);
    }
    pos_ += 4;
    return v;
  }
  uint64_t U64() {
    Need(8);
    uint64_t v = 0;
    for (int i = 0; i < 8; ++i) {
      v |= static_cast<uint64_t>(static_cast<unsigned char>(bytes_[pos_ + i]))
           << (8 * i);
    }
    pos_ += 8;
    return v;
  }
  int64_t I64() { return static_cast<int64_t>(U64()); }
  double F64() { return std::bit_cast<double>(U64()); }
  size_t Count() {
    const uint64_t n = U64();
    if (n > end_) throw FormatError("model file is structurally invalid");
    return static_cast<size_t>(n);
  }
  std::string Str() {
    const size_t n = Count();
    Need(n);
    std::string s = bytes_.substr(pos_, n);
    pos_ += n;
    return s;
  }
  std::vector<std::string> Strings() {
    std::vector<std::string> v(Count());
    for (std::string &s : v) s = Str();
    return v;
  }
  std::vector<int> Ints() {
    std::vector<int> v(Count());
    for (int &x : v) x = static_cast<int>(I64());
    return v;
  }
  Matrix Mat() {
    const size_t rows = Count();
    const size_t cols = Count();
    Need(rows * cols * 8);
    Matrix m(rows, cols);
    for (Eigen::Index i = 0; i < m.size(); ++i) m.data()[i] = F64();
    return m;
  }
  Vector Vec() {
    Matrix m = Mat();
    if (m.cols() != 1 && m.size() != 0) {
      throw FormatError("model file: expected a column vector");
    }
    return Vector(Eigen::Map<Vector>(m.data(), m.size()));
  }
  size_t pos() const { return pos_; }

 private:
  const std::string &bytes_;
  size_t end_;
  size_t pos_ = 0;
};

uint32_t Crc32(const std::string &bytes, size_t length) {
  uLong crc = crc32(0L, Z_NULL, 0);
  const auto *data = reinterpret_cast<const Bytef *>(bytes.data());
  size_t done = 0;
  while (done < length) {
    const uInt chunk = static_cast<uInt>(std::min<size_t>(length - done, 1u << 30));
    crc = crc32(crc, data + done, chunk);
    done += chunk;
  }
  return static_cast<uint32_t>(crc);
}

constexpr size_t kHeaderSize = sizeof(kModelMagic) + 8;

}  // namespace

std::string SerializeModel(const Parameters &params, const Hyperparams &hp) {
  Writer w;
  w.Bytes(kModelMagic, sizeof(kModelMagic));
  w.U32(kModelMajorVersion);
  w.U32(kModelMinorVersion);

  w.I64(hp.dim);
  w.F64(hp.alpha);
  w.F64(hp.beta);
  w.F64(hp.x_max);
  w.F64(hp.weight_exp);
  w.I64(hp.epochs);
  w.F64(hp.learn_rate);
  w.Str(VariantName(hp.variant));
  w.F64(hp.rank_eps);
  w.U64(hp.seed);

  const EmbeddingModel &m = params.model;
  w.U64(m.entity_ids.size());
  w.U64(m.word_ids.size());
  w.U64(params.types.types.size());
  w.U64(params.relations.relation_ids.size());
  w.U64(params.relations.groups.size());

  w.Strings(m.entity_ids);
  w.Strings(m.word_ids);
  w.Mat(m.entities);
  w.Mat(m.words);
  w.Mat(m.contexts);
  w.Mat(m.entity_bias);
  w.Mat(m.word_bias);
  w.Mat(m.context_bias);

  for (const TypeSubspace &t : params.types.types) {
    w.Str(t.type_id);
    w.Ints(t.members);
    w.Mat(t.anchors);
    w.Mat(t.coefficients);
  }
  w.Strings(params.relations.relation_ids);
  w.Mat(params.relations.relations);
  for (const RelationGroup &g : params.relations.groups) {
    w.U32(static_cast<uint32_t>(g.side));
    w.I64(g.entity);
    w.I64(g.relation);
    w.Ints(g.members);
    w.Mat(g.anchors);
    w.Mat(g.coefficients);
  }
  const uint32_t crc = Crc32(w.bytes(), w.bytes().size());
  w.U32(crc);
  return std::move(w.bytes());
}

SavedModel DeserializeModel(const std::string &bytes) {
  if (bytes.size() < sizeof(kModelMagic) ||
      std::memcmp(bytes.data(), kModelMagic, sizeof(kModelMagic)) != 0) {
    throw FormatError("not a model file (bad magic)");
  }
  if (bytes.size() < kHeaderSize + 4) {
    throw IntegrityError("model file is truncated");
  }
  const size_t payload = bytes.size() - 4;
  Reader r(bytes, payload);
  r.U64();  // magic
  const uint32_t major = r.U32();
  const uint32_t minor = r.U32();
  if (major != kModelMajorVersion) {
    throw FormatError("incompatible model file version " + std::to_string(major) +
                      "." + std::to_string(minor) + " (expected " +
                      std::to_string(kModelMajorVersion) + ".x)");
  }
  uint32_t stored = 0;
  for (int i = 0; i < 4; ++i) {
    stored |= static_cast<uint32_t>(static_cast<unsigned char>(bytes[payload + i]))
              << (8 * i);
  }
  if (stored != Crc32(bytes, payload)) {
    throw IntegrityError("model file checksum mismatch (truncated or corrupted)");
  }

  SavedModel out;
  Hyperparams &hp = out.hp;
  hp.dim = static_cast<int>(r.I64());
  hp.alpha = r.F64();
  hp.beta = r.F64();
  hp.x_max = r.F64();
  hp.weight_exp = r.F64();
  hp.epochs = static_cast<int>(r.I64());
  hp.learn_rate = r.F64();
  hp.variant = ParseVariant(r.Str());
  hp.rank_eps = r.F64();
  hp.seed = r.U64();

  const size_t num_entities = r.Count();
  const size_t num_words = r.Count();
  const size_t num_types = r.Count();
  const size_t num_relations = r.Count();
  const size_t num_groups = r.Count();

  EmbeddingModel &m = out.params.model;
  m.entity_ids = r.Strings();
  m.word_ids = r.Strings();
  m.entities = r.Mat();
  m.words = r.Mat();
  m.contexts = r.Mat();
  m.entity_bias = r.Vec();
  m.word_bias = r.Vec();
  m.context_bias = r.Vec();
  if (m.entity_ids.size() != num_entities || m.word_ids.size() != num_words ||
      static_cast<size_t>(m.entities.cols()) != num_entities ||
      static_cast<size_t>(m.words.cols()) != num_words) {
    throw FormatError("model file: inconsistent counts");
  }
  for (size_t s = 0; s < num_types; ++s) {
    TypeSubspace t;
    t.type_id = r.Str();
    t.members = r.Ints();
    t.anchors = r.Mat();
    t.coefficients = r.Mat();
    out.params.types.types.push_back(std::move(t));
  }
  out.params.relations.relation_ids = r.Strings();
  out.params.relations.relations = r.Mat();
  if (out.params.relations.relation_ids.size() != num_relations) {
    throw FormatError("model file: inconsistent relation count");
  }
  for (size_t g = 0; g < num_groups; ++g) {
    RelationGroup group;
    group.side = static_cast<GroupSide>(r.U32());
    group.entity = static_cast<int>(r.I64());
    group.relation = static_cast<int>(r.I64());
    group.members = r.Ints();
    group.anchors = r.Mat();
    group.coefficients = r.Mat();
    out.params.relations.groups.push_back(std::move(group));
  }
  if (r.pos() != payload) throw FormatError("model file has trailing data");
  return out;
}

void SaveModel(const std::string &path, const Parameters &params,
               const Hyperparams &hp) {
  const std::string bytes = SerializeModel(params, hp);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ValidationError("cannot write model file " + path);
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw Error("failed writing model file " + path);
}

SavedModel LoadModel(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open model file " + path);
  std::string bytes((std::istreambuf_iterator<char>(in)),
                    std::istreambuf_iterator<char>());
  return DeserializeModel(bytes);
}

void ExportText(const std::string &path, const EmbeddingModel &model,
                bool entities, bool words) {
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot write " + path);
  out.precision(6);
  auto emit = [&](const std::string &id, const auto &column) {
    out << id;
    for (Eigen::Index i = 0; i < column.size(); ++i) out << ' ' << column(i);
    out << '\n';
  };
  if (entities) {
    for (int e = 0; e < model.num_entities(); ++e) {
      emit(model.entity_ids[e], model.entities.col(e));
    }
  }
  if (words) {
    for (int w = 0; w < model.num_words(); ++w) {
      emit(model.word_ids[w], model.words.col(w));
    }
  }
}

}  // namespace eecs
