#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace invsg {

  // Index of an element in a finite semigroup or monoid table.
  using Element = std::uint32_t;

  // Index of a generator, used as a letter of the generator alphabet.
  using Letter = std::uint32_t;

  using Word = std::vector<Letter>;

  // Whether words range over the free semigroup (nonempty words) or the free
  // monoid (the empty word included). Carried explicitly everywhere the two
  // readings differ.
  enum class ProblemKind { semigroup, monoid };

  inline constexpr std::size_t kDefaultMaxClosure      = 100000;
  inline constexpr std::size_t kDefaultMaxTableEntries = std::size_t{1} << 24;
  inline constexpr std::size_t kDefaultIsomorphismCap  = 64;
  inline constexpr std::uint64_t kDefaultSeed          = 0x5eed'1992'2011ULL;

}  // namespace invsg
