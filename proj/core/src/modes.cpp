// Copyright 2026 The symprot Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "symprot/modes.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

namespace symprot {

namespace {

std::vector<ModeBlock> with_offsets(std::vector<ModeBlock> blocks) {
  std::size_t offset = 0;
  for (auto& b : blocks) {
    b.offset = offset;
    offset += b.size();
  }
  return blocks;
}

int parse_int(std::string_view text) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw InvalidArgument("not an integer: '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

ModeSpace::ModeSpace(std::vector<ModeBlock> blocks)
    : blocks_(with_offsets(std::move(blocks))) {
  for (const auto& b : blocks_) {
    if (b.kind == BlockKind::H0) {
      labels_.push_back({0, +1});
      labels_.push_back({0, -1});
      mirror_perm_.push_back(b.offset + 1);
      mirror_perm_.push_back(b.offset);
    } else {
      labels_.push_back({b.m, +1});
      labels_.push_back({b.m, -1});
      labels_.push_back({-b.m, +1});
      labels_.push_back({-b.m, -1});
      mirror_perm_.push_back(b.offset + 3);
      mirror_perm_.push_back(b.offset + 2);
      mirror_perm_.push_back(b.offset + 1);
      mirror_perm_.push_back(b.offset);
    }
  }
  const auto n = static_cast<Eigen::Index>(labels_.size());
  jz_ = CMatrix::Zero(n, n);
  mirror_ = CMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    jz_(i, i) = static_cast<double>(labels_[i].m);
    mirror_(static_cast<Eigen::Index>(mirror_perm_[i]), i) = 1.0;
  }
}

ModeSpace ModeSpace::h0() { return ModeSpace({{BlockKind::H0, 0, 0}}); }

ModeSpace ModeSpace::hm(int m) {
  if (m <= 0) {
    throw InvalidArgument("Hm requires m >= 1 (use H0 for m = 0), got " +
                          std::to_string(m));
  }
  return ModeSpace({{BlockKind::Hm, m, 0}});
}

ModeSpace ModeSpace::direct_sum(const ModeSpace& a, const ModeSpace& b) {
  std::vector<ModeBlock> blocks = a.blocks_;
  for (const auto& blk : b.blocks_) {
    const bool clash = std::any_of(blocks.begin(), blocks.end(), [&](const ModeBlock& x) {
      return x.kind == blk.kind && x.m == blk.m;
    });
    if (clash) {
      throw InvalidArgument("direct sum would repeat the block " +
                            ModeSpace({blk}).to_string());
    }
    blocks.push_back(blk);
  }
  return ModeSpace(std::move(blocks));
}

ModeSpace ModeSpace::parse(std::string_view text) {
  if (text.empty()) throw InvalidArgument("empty mode space");
  std::vector<ModeSpace> parts;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto end = std::min(text.find('+', start), text.size());
    const auto token = text.substr(start, end - start);
    if (token == "h0") {
      parts.push_back(h0());
    } else if (token.starts_with("hm:")) {
      parts.push_back(hm(parse_int(token.substr(3))));
    } else {
      throw InvalidArgument("unknown mode space '" + std::string(token) +
                            "' (expected h0 or hm:<m>)");
    }
    start = end + 1;
  }
  ModeSpace out = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) out = direct_sum(out, parts[i]);
  return out;
}

std::string ModeSpace::to_string() const {
  std::string out;
  for (const auto& b : blocks_) {
    if (!out.empty()) out += '+';
    out += b.kind == BlockKind::H0 ? std::string("h0") : "hm:" + std::to_string(b.m);
  }
  return out;
}

CMatrix mirror_eigenbasis(const ModeSpace& space) {
  if (!space.is_h0()) {
    throw InvalidArgument("mirror eigenbasis is only defined on H0; got " +
                          space.to_string());
  }
  const double r = 1.0 / std::sqrt(2.0);
  CMatrix u(2, 2);
  u << r, r, r, -r;
  return u;
}

}  // namespace symprot
