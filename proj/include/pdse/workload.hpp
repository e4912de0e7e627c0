/*
 * Copyright 2026 The photonic-dse Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pdse {

enum class LayerKind : std::uint8_t { kConv, kFc, kPool, kActivation };

std::string_view to_string(LayerKind kind);
LayerKind parse_layer_kind(std::string_view text);

struct TensorShape {
  std::int64_t channels = 0;
  std::int64_t height = 0;
  std::int64_t width = 0;

  std::int64_t elements() const { return channels * height * width; }
  friend bool operator==(const TensorShape&, const TensorShape&) = default;
};

std::string to_string(const TensorShape& shape);

/// One row of a model descriptor. Pool and activation rows only use the
/// spatial fields to describe data movement.
struct LayerDescriptor {
  std::string name;
  LayerKind kind = LayerKind::kConv;
  std::int64_t in_channels = 1;
  std::int64_t in_h = 1;
  std::int64_t in_w = 1;
  std::int64_t out_channels = 1;
  std::int64_t kernel_h = 1;
  std::int64_t kernel_w = 1;
  std::int64_t stride = 1;
  std::int64_t padding = 0;
  std::int64_t groups = 1;
  int model_bits = 8;

  TensorShape input_shape() const { return {in_channels, in_h, in_w}; }
  /// Throws InvalidLayer when the descriptor is inconsistent.
  TensorShape output_shape() const;
  bool has_gemm() const { return kind == LayerKind::kConv || kind == LayerKind::kFc; }
};

/// I (rows x k) times W (k x cols).
struct GemmShape {
  std::int64_t rows = 1;
  std::int64_t k = 1;
  std::int64_t cols = 1;

  std::int64_t macs() const { return rows * k * cols; }
  friend bool operator==(const GemmShape&, const GemmShape&) = default;
};

/// A layer's GEMM work: `groups` independent copies of `shape`.
struct LayerGemm {
  GemmShape shape;
  std::int64_t groups = 1;

  std::int64_t macs() const { return shape.macs() * groups; }
};

struct SliceFactor {
  std::int64_t input_slices = 1;
  std::int64_t weight_slices = 1;
  std::int64_t passes = 1;

  friend bool operator==(const SliceFactor&, const SliceFactor&) = default;
};

struct CnnModel {
  std::string name;
  std::vector<LayerDescriptor> layers;
};

/// Per-group im2col shape of a convolution (batch 1).
GemmShape conv_to_gemm(const LayerDescriptor& layer);

GemmShape fc_to_gemm(const LayerDescriptor& layer);

/// GEMM work of a conv or fc layer, std::nullopt for pool/activation.
std::optional<LayerGemm> layer_gemm(const LayerDescriptor& layer);

SliceFactor bit_slices(int model_bits, int hw_bits);

/// Splits an unsigned `model_bits`-wide value into hw_bits-wide digits,
/// least significant first.
std::vector<std::uint32_t> slice_operand(std::uint32_t value, int model_bits, int hw_bits);

/// Product of two unsigned operands rebuilt from hw_bits x hw_bits partial
/// products with shift-add, as the reduction network does.
std::uint64_t sliced_product(std::uint32_t a, std::uint32_t b, int model_bits, int hw_bits);

/// Dense CHW integer tensor used by the im2col helpers.
struct IntTensor {
  TensorShape shape;
  std::vector<std::int64_t> data;

  std::int64_t at(std::int64_t c, std::int64_t y, std::int64_t x) const {
    return data[static_cast<std::size_t>((c * shape.height + y) * shape.width + x)];
  }
};

/// Row-major matrix.
struct IntMatrix {
  std::int64_t rows = 0;
  std::int64_t cols = 0;
  std::vector<std::int64_t> data;

  std::int64_t at(std::int64_t r, std::int64_t c) const {
    return data[static_cast<std::size_t>(r * cols + c)];
  }
};

/// Unfolds `input` into the (out_h*out_w) x (kh*kw*in_c) input matrix of an
/// ungrouped convolution. Column order is (channel, ky, kx).
IntMatrix im2col(const IntTensor& input, const LayerDescriptor& layer);

/// Flattens filters laid out as [out_c][in_c][kh][kw] into a
/// (kh*kw*in_c) x out_c weight matrix matching im2col's column order.
IntMatrix flatten_filters(std::span<const std::int64_t> filters, const LayerDescriptor& layer);

IntMatrix matmul(const IntMatrix& a, const IntMatrix& b);

/// Parses a descriptor CSV. `source` names the input in error messages.
CnnModel parse_model(std::istream& in, const std::string& name, const std::string& source);

/// Loads a descriptor file; the model takes the file stem as its name.
CnnModel load_model(const std::filesystem::path& path);

/// Checks that every layer's input is produced by an earlier layer (or is the
/// model input). Throws ParseError naming both layers on a mismatch.
void check_chain(const CnnModel& model, const std::string& source);

/// Total GEMM MACs of the model (all groups).
std::int64_t model_macs(const CnnModel& model);

}  // namespace pdse
