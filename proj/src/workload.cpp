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

#include "pdse/workload.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <sstream>

#include "pdse/errors.hpp"

namespace pdse {
namespace {

constexpr std::array<std::string_view, 11> kColumns = {
    "name",     "kind",     "in_c",   "in_h",    "in_w",  "out_c",
    "kernel_h", "kernel_w", "stride", "padding", "groups"};

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return (a + b - 1) / b; }

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    out.push_back(trim(line.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::int64_t spatial_out(std::int64_t in, std::int64_t kernel, std::int64_t stride,
                         std::int64_t padding) {
  return (in + 2 * padding - kernel) / stride + 1;
}

void require(bool ok, const LayerDescriptor& layer, const std::string& what) {
  if (!ok) throw InvalidLayer("layer '" + layer.name + "': " + what);
}

void validate_window(const LayerDescriptor& layer) {
  require(layer.kernel_h >= 1 && layer.kernel_w >= 1, layer, "kernel must be >= 1");
  require(layer.stride >= 1, layer, "stride must be >= 1");
  require(layer.padding >= 0, layer, "padding must be >= 0");
  require(layer.kernel_h <= layer.in_h + 2 * layer.padding &&
              layer.kernel_w <= layer.in_w + 2 * layer.padding,
          layer, "kernel larger than padded input");
}

}  // namespace

std::string_view to_string(LayerKind kind) {
  switch (kind) {
    case LayerKind::kConv: return "conv";
    case LayerKind::kFc: return "fc";
    case LayerKind::kPool: return "pool";
    case LayerKind::kActivation: return "activation";
  }
  return "?";
}

LayerKind parse_layer_kind(std::string_view text) {
  for (auto kind : {LayerKind::kConv, LayerKind::kFc, LayerKind::kPool, LayerKind::kActivation}) {
    if (text == to_string(kind)) return kind;
  }
  throw InvalidArgument("unknown layer kind '" + std::string(text) + "'");
}

std::string to_string(const TensorShape& shape) {
  return std::to_string(shape.channels) + "x" + std::to_string(shape.height) + "x" +
         std::to_string(shape.width);
}

TensorShape LayerDescriptor::output_shape() const {
  require(in_channels >= 1 && in_h >= 1 && in_w >= 1, *this, "input dims must be >= 1");
  require(out_channels >= 1, *this, "out_c must be >= 1");
  switch (kind) {
    case LayerKind::kConv:
      validate_window(*this);
      require(groups >= 1 && in_channels % groups == 0 && out_channels % groups == 0, *this,
              "groups must divide in_c and out_c");
      return {out_channels, spatial_out(in_h, kernel_h, stride, padding),
              spatial_out(in_w, kernel_w, stride, padding)};
    case LayerKind::kFc:
      require(in_h == 1 && in_w == 1, *this, "fc input must be 1x1 spatially");
      return {out_channels, 1, 1};
    case LayerKind::kPool:
      validate_window(*this);
      require(out_channels == in_channels, *this, "pool must preserve channels");
      return {out_channels, spatial_out(in_h, kernel_h, stride, padding),
              spatial_out(in_w, kernel_w, stride, padding)};
    case LayerKind::kActivation:
      require(out_channels == in_channels, *this, "activation must preserve channels");
      return input_shape();
  }
  return {};
}

GemmShape conv_to_gemm(const LayerDescriptor& layer) {
  if (layer.kind != LayerKind::kConv) {
    throw InvalidArgument("layer '" + layer.name + "' is not a conv layer");
  }
  const auto out = layer.output_shape();
  return {out.height * out.width, layer.kernel_h * layer.kernel_w * (layer.in_channels / layer.groups),
          layer.out_channels / layer.groups};
}

GemmShape fc_to_gemm(const LayerDescriptor& layer) {
  if (layer.kind != LayerKind::kFc) {
    throw InvalidArgument("layer '" + layer.name + "' is not an fc layer");
  }
  layer.output_shape();
  return {1, layer.in_channels, layer.out_channels};
}

std::optional<LayerGemm> layer_gemm(const LayerDescriptor& layer) {
  switch (layer.kind) {
    case LayerKind::kConv: return LayerGemm{conv_to_gemm(layer), layer.groups};
    case LayerKind::kFc: return LayerGemm{fc_to_gemm(layer), 1};
    default: return std::nullopt;
  }
}

SliceFactor bit_slices(int model_bits, int hw_bits) {
  if (model_bits < 1 || hw_bits < 1) throw InvalidArgument("bit widths must be >= 1");
  const auto slices = ceil_div(model_bits, hw_bits);
  return {slices, slices, slices * slices};
}

std::vector<std::uint32_t> slice_operand(std::uint32_t value, int model_bits, int hw_bits) {
  const auto factor = bit_slices(model_bits, hw_bits);
  if (model_bits < 32 && (value >> model_bits) != 0) {
    throw InvalidArgument("operand wider than model_bits");
  }
  const std::uint32_t mask = hw_bits >= 32 ? ~0u : (1u << hw_bits) - 1u;
  std::vector<std::uint32_t> digits;
  digits.reserve(static_cast<std::size_t>(factor.input_slices));
  for (std::int64_t i = 0; i < factor.input_slices; ++i) {
    digits.push_back((value >> (i * hw_bits)) & mask);
  }
  return digits;
}

std::uint64_t sliced_product(std::uint32_t a, std::uint32_t b, int model_bits, int hw_bits) {
  const auto da = slice_operand(a, model_bits, hw_bits);
  const auto db = slice_operand(b, model_bits, hw_bits);
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < da.size(); ++i) {
    for (std::size_t j = 0; j < db.size(); ++j) {
      const std::uint64_t partial = static_cast<std::uint64_t>(da[i]) * db[j];
      acc += partial << ((i + j) * static_cast<std::size_t>(hw_bits));
    }
  }
  return acc;
}

IntMatrix im2col(const IntTensor& input, const LayerDescriptor& layer) {
  if (layer.groups != 1) throw InvalidArgument("im2col expects an ungrouped convolution");
  if (input.shape != layer.input_shape()) {
    throw InvalidArgument("input tensor shape does not match layer '" + layer.name + "'");
  }
  const auto gemm = conv_to_gemm(layer);
  const auto out = layer.output_shape();
  IntMatrix m{gemm.rows, gemm.k, std::vector<std::int64_t>(
                                     static_cast<std::size_t>(gemm.rows * gemm.k), 0)};
  for (std::int64_t oy = 0; oy < out.height; ++oy) {
    for (std::int64_t ox = 0; ox < out.width; ++ox) {
      const auto row = oy * out.width + ox;
      std::int64_t col = 0;
      for (std::int64_t c = 0; c < layer.in_channels; ++c) {
        for (std::int64_t ky = 0; ky < layer.kernel_h; ++ky) {
          for (std::int64_t kx = 0; kx < layer.kernel_w; ++kx, ++col) {
            const auto y = oy * layer.stride + ky - layer.padding;
            const auto x = ox * layer.stride + kx - layer.padding;
            if (y < 0 || y >= layer.in_h || x < 0 || x >= layer.in_w) continue;
            m.data[static_cast<std::size_t>(row * gemm.k + col)] = input.at(c, y, x);
          }
        }
      }
    }
  }
  return m;
}

IntMatrix flatten_filters(std::span<const std::int64_t> filters, const LayerDescriptor& layer) {
  const auto gemm = conv_to_gemm(layer);
  if (static_cast<std::int64_t>(filters.size()) != gemm.k * gemm.cols * layer.groups) {
    throw InvalidArgument("filter tensor size does not match layer '" + layer.name + "'");
  }
  IntMatrix w{gemm.k, gemm.cols,
              std::vector<std::int64_t>(static_cast<std::size_t>(gemm.k * gemm.cols), 0)};
  // [out_c][in_c][kh][kw] is already (channel, ky, kx)-major per filter.
  for (std::int64_t o = 0; o < gemm.cols; ++o) {
    for (std::int64_t r = 0; r < gemm.k; ++r) {
      w.data[static_cast<std::size_t>(r * gemm.cols + o)] =
          filters[static_cast<std::size_t>(o * gemm.k + r)];
    }
  }
  return w;
}

IntMatrix matmul(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols != b.rows) throw InvalidArgument("matmul inner dimensions differ");
  IntMatrix c{a.rows, b.cols,
              std::vector<std::int64_t>(static_cast<std::size_t>(a.rows * b.cols), 0)};
  for (std::int64_t i = 0; i < a.rows; ++i) {
    for (std::int64_t p = 0; p < a.cols; ++p) {
      const auto av = a.at(i, p);
      if (av == 0) continue;
      for (std::int64_t j = 0; j < b.cols; ++j) {
        c.data[static_cast<std::size_t>(i * b.cols + j)] += av * b.at(p, j);
      }
    }
  }
  return c;
}

void check_chain(const CnnModel& model, const std::string& source) {
  // Tensors available to later layers: the model input plus every output.
  std::vector<TensorShape> produced;
  std::map<std::pair<std::int64_t, std::int64_t>, std::int64_t> channels_at;
  auto add = [&](const TensorShape& s) {
    produced.push_back(s);
    channels_at[{s.height, s.width}] += s.channels;
  };
  for (std::size_t i = 0; i < model.layers.size(); ++i) {
    const auto& layer = model.layers[i];
    const auto in = layer.input_shape();
    if (i == 0) {
      add(in);
    } else {
      const auto& prev = model.layers[i - 1];
      const auto prev_out = prev.output_shape();
      const bool follows = in == prev_out;
      const bool branches = std::find(produced.begin(), produced.end(), in) != produced.end();
      const auto it = channels_at.find({in.height, in.width});
      const bool joins = it != channels_at.end() && in.channels <= it->second;
      if (!follows && !branches && !joins) {
        throw ParseError(source, 0,
                         "layer '" + layer.name + "' input " + to_string(in) +
                             " is not produced by previous layer '" + prev.name + "' (" +
                             to_string(prev_out) + ") or any earlier layer");
      }
    }
    add(layer.output_shape());
  }
}

CnnModel parse_model(std::istream& in, const std::string& name, const std::string& source) {
  CnnModel model{name, {}};
  std::string line;
  std::size_t line_no = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++line_no;
    const auto text = trim(line);
    if (text.empty() || text.front() == '#') continue;
    const auto fields = split(text);
    if (!header_seen) {
      if (fields.size() != kColumns.size() ||
          !std::equal(fields.begin(), fields.end(), kColumns.begin())) {
        throw ParseError(source, line_no, "expected header '" +
                                              std::string("name,kind,in_c,in_h,in_w,out_c,"
                                                          "kernel_h,kernel_w,stride,padding,groups") +
                                              "'");
      }
      header_seen = true;
      continue;
    }
    const std::string row_name = fields.empty() ? std::string() : std::string(fields[0]);
    if (fields.size() != kColumns.size()) {
      throw ParseError(source, line_no,
                       "row '" + row_name + "' has " + std::to_string(fields.size()) +
                           " columns, expected " + std::to_string(kColumns.size()));
    }
    LayerDescriptor layer;
    layer.name = row_name;
    try {
      layer.kind = parse_layer_kind(fields[1]);
    } catch (const InvalidArgument& e) {
      throw ParseError(source, line_no, "row '" + row_name + "': " + e.what());
    }
    std::array<std::int64_t*, 9> targets = {&layer.in_channels, &layer.in_h,     &layer.in_w,
                                            &layer.out_channels, &layer.kernel_h, &layer.kernel_w,
                                            &layer.stride,      &layer.padding,  &layer.groups};
    for (std::size_t c = 0; c < targets.size(); ++c) {
      const auto field = fields[c + 2];
      const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), *targets[c]);
      if (ec != std::errc{} || ptr != field.data() + field.size()) {
        throw ParseError(source, line_no,
                         "row '" + row_name + "': column " + std::string(kColumns[c + 2]) +
                             " is not an integer ('" + std::string(field) + "')");
      }
    }
    try {
      layer.output_shape();
    } catch (const InvalidLayer& e) {
      throw ParseError(source, line_no, e.what());
    }
    model.layers.push_back(std::move(layer));
  }
  if (!header_seen) throw ParseError(source, 0, "missing header row");
  check_chain(model, source);
  return model;
}

CnnModel load_model(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open model file '" + path.string() + "'");
  return parse_model(in, path.stem().string(), path.string());
}

std::int64_t model_macs(const CnnModel& model) {
  std::int64_t total = 0;
  for (const auto& layer : model.layers) {
    if (auto g = layer_gemm(layer)) total += g->macs();
  }
  return total;
}

}  // namespace pdse
