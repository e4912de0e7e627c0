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

#include <catch_amalgamated.hpp>

#include <random>
#include <sstream>

#include "pdse/errors.hpp"
#include "pdse/workload.hpp"
#include "support.hpp"

using namespace pdse;

namespace {

constexpr const char* kHeader = "name,kind,in_c,in_h,in_w,out_c,kernel_h,kernel_w,stride,padding,groups\n";

LayerDescriptor conv(std::int64_t c, std::int64_t h, std::int64_t w, std::int64_t oc,
                     std::int64_t k, std::int64_t stride, std::int64_t pad, std::int64_t groups = 1) {
  LayerDescriptor l;
  l.name = "c";
  l.kind = LayerKind::kConv;
  l.in_channels = c;
  l.in_h = h;
  l.in_w = w;
  l.out_channels = oc;
  l.kernel_h = l.kernel_w = k;
  l.stride = stride;
  l.padding = pad;
  l.groups = groups;
  return l;
}

LayerDescriptor fc(std::int64_t in, std::int64_t out) {
  LayerDescriptor l;
  l.name = "fc";
  l.kind = LayerKind::kFc;
  l.in_channels = in;
  l.out_channels = out;
  return l;
}

CnnModel parse(const std::string& text) {
  std::istringstream in(text);
  return parse_model(in, "m", "test.csv");
}

}  // namespace

TEST_CASE("conv and fc GEMM shapes") {
  CHECK(conv_to_gemm(conv(16, 8, 8, 32, 1, 1, 0)) == GemmShape{64, 16, 32});
  CHECK(conv_to_gemm(conv(2, 4, 4, 2, 3, 1, 1)) == GemmShape{16, 18, 2});
  CHECK(conv_to_gemm(conv(1, 4, 4, 1, 2, 2, 0)) == GemmShape{4, 4, 1});
  CHECK(fc_to_gemm(fc(2048, 1000)) == GemmShape{1, 2048, 1000});
  CHECK(fc_to_gemm(fc(1, 1)) == GemmShape{1, 1, 1});
  CHECK(fc_to_gemm(fc(512, 10)).macs() == 5120);
  CHECK_THROWS_AS(conv_to_gemm(fc(4, 4)), InvalidArgument);
}

TEST_CASE("grouped conv keeps the MAC count") {
  const auto dw = conv(32, 56, 56, 32, 3, 1, 1, 32);
  const auto g = layer_gemm(dw);
  REQUIRE(g);
  CHECK(g->groups == 32);
  CHECK(g->shape == GemmShape{56 * 56, 9, 1});
  CHECK(g->macs() == 56 * 56 * 32 * 9);
  auto pool = dw;
  pool.kind = LayerKind::kPool;
  CHECK_FALSE(layer_gemm(pool));
}

TEST_CASE("MAC conservation over random layers") {
  std::mt19937 rng(11);
  for (int i = 0; i < 300; ++i) {
    const auto l = oracle::random_conv(rng);
    const auto out = l.output_shape();
    CHECK(conv_to_gemm(l).macs() ==
          out.height * out.width * out.channels * l.kernel_h * l.kernel_w * l.in_channels);
  }
}

TEST_CASE("im2col times filters equals direct convolution") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const auto l = oracle::random_conv(rng);
    IntTensor x{l.input_shape(), oracle::random_values(rng, l.input_shape().elements())};
    const auto filters = oracle::random_values(
        rng, l.out_channels * l.in_channels * l.kernel_h * l.kernel_w);
    const auto y = matmul(im2col(x, l), flatten_filters(filters, l));
    const auto ref = oracle::direct_conv(x.data, filters, l);
    const auto out = l.output_shape();
    REQUIRE(y.rows == out.height * out.width);
    REQUIRE(y.cols == out.channels);
    bool same = true;
    for (std::int64_t oc = 0; oc < out.channels; ++oc) {
      for (std::int64_t p = 0; p < y.rows; ++p) {
        same = same && y.at(p, oc) == ref[static_cast<std::size_t>(oc * y.rows + p)];
      }
    }
    CHECK(same);
  }
}

TEST_CASE("invalid layers are rejected") {
  CHECK_THROWS_AS(conv(1, 2, 2, 1, 5, 1, 0).output_shape(), InvalidLayer);
  CHECK_THROWS_AS(conv(1, 4, 4, 1, 3, 0, 0).output_shape(), InvalidLayer);
  CHECK_THROWS_AS(conv(3, 4, 4, 4, 3, 1, 1, 2).output_shape(), InvalidLayer);
  auto f = fc(10, 10);
  f.in_h = 2;
  CHECK_THROWS_AS(fc_to_gemm(f), InvalidLayer);
}

TEST_CASE("bit slicing factors") {
  CHECK(bit_slices(8, 4) == SliceFactor{2, 2, 4});
  CHECK(bit_slices(4, 4) == SliceFactor{1, 1, 1});
  CHECK(bit_slices(8, 3) == SliceFactor{3, 3, 9});
  CHECK(bit_slices(2, 8) == SliceFactor{1, 1, 1});
  CHECK_THROWS_AS(bit_slices(0, 4), InvalidArgument);
}

TEST_CASE("sliced products rebuild the full product") {
  for (int hw : {2, 3, 4, 8}) {
    const auto s = bit_slices(8, hw);
    for (std::uint32_t a = 0; a < 256; ++a) {
      const auto digits = slice_operand(a, 8, hw);
      REQUIRE(static_cast<std::int64_t>(digits.size()) == s.input_slices);
      for (std::uint32_t b = 0; b < 256; ++b) {
        const auto full = static_cast<std::uint64_t>(a) * b;
        if (sliced_product(a, b, 8, hw) != full || oracle::shift_add_product(a, b, 8, hw) != full) {
          FAIL("mismatch at " << a << " x " << b << " hw=" << hw);
        }
      }
    }
  }
  CHECK_THROWS_AS(slice_operand(300, 8, 4), InvalidArgument);
}

TEST_CASE("descriptor parsing") {
  SECTION("header only gives an empty model") {
    const auto m = parse(kHeader);
    CHECK(m.layers.empty());
    CHECK(model_macs(m) == 0);
  }
  SECTION("comments and blank lines are skipped") {
    const auto m = parse(std::string("# tiny\n") + kHeader +
                         "\nconv1,conv,3,8,8,4,3,3,1,1,1\nrelu,activation,4,8,8,4,1,1,1,0,1\n");
    REQUIRE(m.layers.size() == 2);
    CHECK(m.layers[1].kind == LayerKind::kActivation);
    CHECK(model_macs(m) == 64 * 27 * 4);
  }
  SECTION("missing column names the row") {
    try {
      parse(std::string(kHeader) + "conv1,conv,3,8,8,4,3,3,1,1\n");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line() == 2);
      CHECK_THAT(e.what(), Catch::Matchers::ContainsSubstring("conv1"));
    }
  }
  SECTION("non-integer field") {
    CHECK_THROWS_AS(parse(std::string(kHeader) + "c,conv,3,8,x,4,3,3,1,1,1\n"), ParseError);
  }
  SECTION("wrong header") {
    CHECK_THROWS_AS(parse("a,b,c\n"), ParseError);
  }
  SECTION("broken chain names both layers") {
    try {
      parse(std::string(kHeader) + "c1,conv,3,8,8,4,3,3,1,1,1\nc2,conv,5,9,9,4,3,3,1,1,1\n");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK_THAT(e.what(), Catch::Matchers::ContainsSubstring("c1") &&
                               Catch::Matchers::ContainsSubstring("c2"));
    }
  }
  SECTION("invalid geometry") {
    CHECK_THROWS_AS(parse(std::string(kHeader) + "c1,conv,3,2,2,4,5,5,1,0,1\n"), ParseError);
  }
}

TEST_CASE("bundled descriptors") {
  for (const auto& name : oracle::bundled_model_names()) {
    const auto m = load_model(oracle::model_dir() / (name + ".csv"));
    CHECK(m.name == name);
    CHECK(model_macs(m) > 0);
  }
  const auto r = load_model(oracle::model_dir() / "resnet50.csv");
  int convs = 0, fcs = 0;
  for (const auto& l : r.layers) {
    convs += l.kind == LayerKind::kConv;
    fcs += l.kind == LayerKind::kFc;
  }
  CHECK(convs == 53);
  CHECK(fcs == 1);
  // Published ResNet50 cost: about 4.1 GMACs.
  CHECK(model_macs(r) == Catch::Approx(4.09e9).epsilon(0.02));
  CHECK_THROWS(load_model(oracle::model_dir() / "missing.csv"));
}
