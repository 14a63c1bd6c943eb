#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "ipword/finite_word.hpp"
#include "ipword/word_stream.hpp"

namespace ipword {

// w^(+): the shortest palindrome with w as a prefix (mirror the prefix in
// front of the longest palindromic suffix). Direct scan.
FiniteWord pal_closure(const FiniteWord& w);

// psi applied letter by letter: psi(wa) = (psi(w)a)^(+), psi(empty) = empty.
FiniteWord iterated_pal_closure(const FiniteWord& directive);

// Directive sequences are plain word streams (the alphabet may be unbounded).
// The staircase 0; 0,1; 0,1,2; ... makes every letter occur infinitely often.
WordPtr staircase_directive();

// The limit word psi(delta). Letters are produced by extending psi over
// directive prefixes; an incremental longest-palindromic-suffix search (hash
// filtered, exactly verified) keeps generation near-linear, and unit tests
// cross-check it against the direct pal_closure route.
WordPtr psi_stream(WordPtr delta);

struct CentralPartition {
  std::uint64_t horizon = 0;
  // Class for letter a holds the n in [1, horizon) with omega_{n-1} = a.
  std::vector<std::pair<Letter, std::vector<std::uint64_t>>> classes;
};

// The partition of [1, horizon) induced by omega = psi(staircase): n belongs
// to the class of omega_{n-1} (class a is omega|_a + 1). Classes are pairwise
// disjoint and exhaustive by construction; the structure is re-verified.
CentralPartition infinite_central_partition(std::uint64_t horizon);

}  // namespace ipword
