#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace carc {

// A symbol with an optional 0/1 superscript. Letters of slot and P-node words
// reuse this type; vertex letters always carry a superscript.
struct Letter {
  static constexpr std::int8_t kPlain = -1;

  int symbol = 0;
  std::int8_t sup = kPlain;

  constexpr Letter() = default;
  constexpr Letter(int s, int superscript)
      : symbol(s), sup(static_cast<std::int8_t>(superscript)) {}

  constexpr bool plain() const { return sup == kPlain; }
  // Same symbol with 0 and 1 exchanged.
  constexpr Letter flipped() const {
    return plain() ? *this : Letter(symbol, 1 - sup);
  }

  friend constexpr auto operator<=>(const Letter&, const Letter&) = default;
};

using LinearWord = std::vector<Letter>;

// Word on a circle. Letters are pairwise distinct and the stored rotation is
// the lexicographically least one, so equality is equality up to rotation.
class CircularWord {
 public:
  CircularWord() = default;
  explicit CircularWord(std::vector<Letter> letters);

  const std::vector<Letter>& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }

  std::optional<std::size_t> find(Letter l) const;

  friend bool operator==(const CircularWord&, const CircularWord&) = default;
  friend auto operator<=>(const CircularWord&, const CircularWord&) = default;

 private:
  std::vector<Letter> letters_;
};

// Chords of a vertex set U stretched between two linear words. tau0 and tau1
// each hold exactly one letter of every vertex of U.
struct OrientedPermutationModel {
  LinearWord tau0;
  LinearWord tau1;

  friend bool operator==(const OrientedPermutationModel&,
                         const OrientedPermutationModel&) = default;
};

bool rotate_equal(const CircularWord& a, const CircularWord& b);

// Reverses the word and exchanges superscripts 0 and 1.
CircularWord reflect(const CircularWord& w);

// Keeps the letters whose symbol is in `symbols`, in cyclic order.
CircularWord restrict_to(const CircularWord& w, std::span<const int> symbols);

// The block of w formed by exactly the given letters, if they are contiguous.
std::optional<LinearWord> contiguous_subword(const CircularWord& w,
                                             std::span<const Letter> letters);

// Decomposes w as mu' tau' mu'' tau'' where mu' and mu'' are contiguous and
// each holds one letter of every symbol in U. mu' is the block holding r^0 for
// the least r in U; ties are broken by the lexicographically least (mu', mu'').
std::optional<OrientedPermutationModel> consistent_permutation_model(
    const CircularWord& w, std::span<const int> symbols);

std::string to_string(const Letter& l);
std::string to_string(const LinearWord& w);
std::string to_string(const CircularWord& w);

}  // namespace carc
