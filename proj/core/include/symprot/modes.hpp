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

#ifndef SYMPROT_MODES_HPP_
#define SYMPROT_MODES_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "symprot/types.hpp"

namespace symprot {

/// Single-particle mode labelled by its J_z eigenvalue m and helicity sign.
struct ModeLabel {
  int m = 0;
  int lambda = +1;  // +1 or -1

  friend bool operator==(const ModeLabel&, const ModeLabel&) = default;
};

/// Mirror (M_y) eigenvalue.
enum class Tau : int { Plus = 1, Minus = -1 };

inline int to_int(Tau t) { return static_cast<int>(t); }

enum class BlockKind { H0, Hm };

/// One rotation/mirror invariant block of a mode space.
///   H0:    [(0,+), (0,-)]
///   Hm(m): [(m,+), (m,-), (-m,+), (-m,-)]
struct ModeBlock {
  BlockKind kind = BlockKind::H0;
  int m = 0;  // |m|; zero for H0
  std::size_t offset = 0;

  std::size_t size() const { return kind == BlockKind::H0 ? 2 : 4; }
  friend bool operator==(const ModeBlock&, const ModeBlock&) = default;
};

/// Ordered registry of modes with the J_z and M_y matrices attached.
///
/// The usual spaces are the single blocks H0 and Hm(m). A direct sum of
/// blocks with pairwise distinct |m| is also allowed, which is what product
/// states over disjoint mode sets live on. Immutable after construction.
class ModeSpace {
 public:
  static ModeSpace h0();
  /// Throws InvalidArgument for m <= 0 (use h0() for m = 0).
  static ModeSpace hm(int m);
  /// Throws InvalidArgument if the two spaces share a block with equal |m|.
  static ModeSpace direct_sum(const ModeSpace& a, const ModeSpace& b);
  /// Parses "h0", "hm:<m>" and '+'-joined sums such as "h0+hm:2".
  static ModeSpace parse(std::string_view text);

  std::string to_string() const;

  std::size_t size() const { return labels_.size(); }
  const std::vector<ModeLabel>& labels() const { return labels_; }
  const std::vector<ModeBlock>& blocks() const { return blocks_; }

  bool is_single_block() const { return blocks_.size() == 1; }
  bool is_h0() const {
    return is_single_block() && blocks_[0].kind == BlockKind::H0;
  }
  bool is_hm() const {
    return is_single_block() && blocks_[0].kind == BlockKind::Hm;
  }

  const CMatrix& jz() const { return jz_; }
  const CMatrix& mirror() const { return mirror_; }

  /// Index of the mode that M_y maps `mode` onto.
  std::size_t mirror_image(std::size_t mode) const {
    return mirror_perm_[mode];
  }

  friend bool operator==(const ModeSpace& a, const ModeSpace& b) {
    return a.blocks_ == b.blocks_;
  }

 private:
  explicit ModeSpace(std::vector<ModeBlock> blocks);

  std::vector<ModeBlock> blocks_;
  std::vector<ModeLabel> labels_;
  std::vector<std::size_t> mirror_perm_;
  CMatrix jz_;
  CMatrix mirror_;
};

/// Unitary whose columns are the mirror eigenmodes (1,1)/sqrt2 (tau=+1) and
/// (1,-1)/sqrt2 (tau=-1) of H0. Throws InvalidArgument for any other space,
/// since M_y and J_z do not commute on Hm.
CMatrix mirror_eigenbasis(const ModeSpace& space);

}  // namespace symprot

#endif  // SYMPROT_MODES_HPP_
