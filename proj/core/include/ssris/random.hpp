// SPDX-License-Identifier: Apache-2.0
//
// ssris - element-count feasibility solver for self-sustainable RIS
// Copyright (C) 2026 The ssris authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef SSRIS_RANDOM_HPP
#define SSRIS_RANDOM_HPP

#include <array>
#include <cstdint>

namespace ssris {

/// Philox4x32-10 counter-based generator (Salmon et al., SC'11). Output is a
/// pure function of (key, counter), so any partition of the counter space
/// across threads yields the same numbers.
class Philox4x32 {
public:
    using Counter = std::array<std::uint32_t, 4>;
    using Key = std::array<std::uint32_t, 2>;

    static Counter generate(Counter counter, Key key);
};

/// One independent substream: key = seed, counter = (draw index, stream id).
class RandomStream {
public:
    RandomStream(std::uint64_t seed, std::uint64_t stream_id);

    /// Two uniforms in the open interval (0, 1) from the next counter block.
    std::array<double, 2> next_uniform_pair();

    void skip_to(std::uint64_t draw_index) { draw_ = draw_index; }
    std::uint64_t seed() const { return seed_; }
    std::uint64_t stream_id() const { return stream_id_; }

private:
    std::uint64_t seed_;
    std::uint64_t stream_id_;
    std::uint64_t draw_ = 0;
};

/// Maps 64 random bits to (0, 1), never returning 0 or 1.
double uniform_open01(std::uint64_t bits);

} // namespace ssris

#endif // SSRIS_RANDOM_HPP
