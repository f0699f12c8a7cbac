#pragma once

#include <cstddef>
#include <string>

#include "morphic/lazy_word.hpp"

namespace morphic {

struct Caps {
  std::size_t symbols = kDefaultSymbolCap;  // materialized symbols per word or corpus
  std::size_t work = 1'000'000;             // factor-closure frontier expansions
  std::size_t verify_start = 256;
  std::size_t verify_cap = 65536;
  std::size_t rep_verify = 5000;
  std::size_t mx_horizon_cap = 4096;
  std::size_t form_depth_start = 1024;
  std::string seed_prefix = "@";
};

}  // namespace morphic
