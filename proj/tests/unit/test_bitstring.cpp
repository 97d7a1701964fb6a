// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <string>

#include "encbound/bitstring.hpp"
#include "encbound/rng.hpp"

using encbound::BitReader;
using encbound::BitString;
using encbound::DecodeError;
using encbound::Rng;

namespace {

std::string random_bits(Rng& rng, std::size_t n) {
  std::string s;
  for (std::size_t i = 0; i < n; ++i) s.push_back(rng.coin() ? '1' : '0');
  return s;
}

}  // namespace

TEST_CASE("bitstring text roundtrip and indexing") {
  const BitString b = BitString::from_string("1011001");
  CHECK(b.size() == 7);
  CHECK(b[0]);
  CHECK_FALSE(b[1]);
  CHECK(b.to_string() == "1011001");
  CHECK(b.count_ones() == 4);
  CHECK(b.count_zeros() == 3);
  CHECK_THROWS_AS(BitString::from_string("10a"), std::invalid_argument);
  CHECK(BitString::from_string("").empty());
}

TEST_CASE("bitstring matches a string model across word boundaries") {
  Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    std::string model;
    BitString b;
    for (int op = 0; op < 20; ++op) {
      switch (rng.below(4)) {
        case 0: {
          const bool bit = rng.coin();
          b.push_back(bit);
          model.push_back(bit ? '1' : '0');
          break;
        }
        case 1: {
          const auto width = static_cast<unsigned>(rng.below(65));
          const std::uint64_t v = rng.below(UINT64_MAX);
          b.append_bits(v, width);
          for (unsigned i = width; i-- > 0;) model.push_back(i < 64 && ((v >> i) & 1U) ? '1' : '0');
          break;
        }
        case 2: {
          const std::size_t count = rng.below(150);
          const bool bit = rng.coin();
          b.append_run(count, bit);
          model.append(count, bit ? '1' : '0');
          break;
        }
        default: {
          const std::string s = random_bits(rng, rng.below(100));
          b.append(BitString::from_string(s));
          model += s;
        }
      }
    }
    REQUIRE(b.to_string() == model);
    CHECK(b == BitString::from_string(model));
    for (std::size_t i = 0; i < model.size(); i += 7) {
      const bool v = model[i] == '1';
      std::size_t run = 0;
      while (i + run < model.size() && model[i + run] == model[i]) ++run;
      CHECK(b.run_length(i, v) == run);
      CHECK(b.run_length(i, !v) == 0);
    }
  }
}

TEST_CASE("wide append pads with leading zeros") {
  BitString b;
  b.append_bits(5, 70);
  CHECK(b.size() == 70);
  CHECK(b.to_string() == std::string(67, '0') + "101");
}

TEST_CASE("set and equality ignore padding") {
  BitString a(70, false);
  a.set(69, true);
  a.set(0, true);
  CHECK(a.to_string() == "1" + std::string(68, '0') + "1");
  a.set(69, false);
  BitString b(70, false);
  b.set(0, true);
  CHECK(a == b);
}

TEST_CASE("prefix relation and ordering") {
  const auto a = BitString::from_string("10");
  const auto b = BitString::from_string("101");
  const auto c = BitString::from_string("11");
  CHECK(a.is_prefix_of(b));
  CHECK(a.is_prefix_of(a));
  CHECK_FALSE(b.is_prefix_of(a));
  CHECK_FALSE(c.is_prefix_of(b));
  CHECK(a < b);
  CHECK(b < c);
  CHECK(BitString() < a);
  Rng rng(3);
  for (int i = 0; i < 500; ++i) {
    const std::string x = random_bits(rng, rng.below(130));
    const std::string y = random_bits(rng, rng.below(130));
    const auto bx = BitString::from_string(x);
    const auto by = BitString::from_string(y);
    CHECK((bx < by) == (x < y));
    CHECK(bx.is_prefix_of(by) == (y.compare(0, x.size(), x) == 0 && x.size() <= y.size()));
  }
}

TEST_CASE("packed bytes roundtrip") {
  Rng rng(5);
  for (std::size_t n : {0, 1, 7, 8, 9, 63, 64, 65, 200}) {
    const auto b = BitString::from_string(random_bits(rng, n));
    const auto packed = b.to_packed();
    CHECK(packed.bit_length == n);
    CHECK(packed.bytes.size() == (n + 7) / 8);
    CHECK(BitString::from_packed(packed) == b);
  }
  const auto packed = BitString::from_string("101").to_packed();
  CHECK(packed.bytes.front() == 0xA0);
}

TEST_CASE("reader consumes bits, words and runs") {
  const auto b = BitString::from_string("1110" "0000000001" "11");
  BitReader in(b);
  CHECK(in.read_run(true) == 3);
  CHECK_FALSE(in.read_bit());
  CHECK(in.read_bits(10) == 1);
  CHECK(in.remaining() == 2);
  CHECK(in.read_run(false) == 0);
  CHECK(in.read_run(true) == 2);
  CHECK(in.at_end());
  CHECK_THROWS_AS(in.read_bit(), DecodeError);
  BitReader again(b);
  CHECK_THROWS_AS(again.read_bits(20), DecodeError);
}
