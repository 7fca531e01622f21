#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "lhist/errors.hpp"

namespace lhist {

/// A permutation of [n] = {1,...,n}, stored in one-line notation.
/// Positions and values are 1-based throughout; operator()(i) returns 0 for
/// the virtual boundary positions i = 0 and i = n+1.
class Permutation {
public:
    /// Validates that `word` is a permutation of {1,...,n}, n >= 1.
    /// Throws NotAPermutation otherwise.
    explicit Permutation(std::vector<int> word);

    int size() const { return static_cast<int>(word_.size()); }

    /// sigma(i) with the boundary convention sigma(0) = sigma(n+1) = 0.
    int operator()(int i) const {
        if (i == 0 || i == size() + 1) return 0;
        if (i < 0 || i > size() + 1) throw IndexOutOfRange("position " + std::to_string(i));
        return word_[static_cast<std::size_t>(i) - 1];
    }

    const std::vector<int>& word() const { return word_; }

    Permutation inverse() const;

    bool operator==(const Permutation&) const = default;
    bool operator<(const Permutation& o) const { return word_ < o.word_; }

private:
    std::vector<int> word_;
};

// ---- statistics ------------------------------------------------------------

/// {i : i < sigma(i)}, ascending.
std::vector<int> exc_set(const Permutation& s);

/// Descents within [n-1]: {i : sigma(i) > sigma(i+1)}, ascending.
/// The virtual-zero boundary applies only to double descents, not here.
std::vector<int> des_set(const Permutation& s);

/// #{i in [n] : sigma(i-1) > sigma(i) > sigma(i+1)} with sigma(0)=sigma(n+1)=0.
long long dd_count(const Permutation& s);

long long exc(const Permutation& s);
long long des(const Permutation& s);

/// Number of inversions: pairs i < j with sigma(i) > sigma(j).
long long inv(const Permutation& s);

/// Crossing index on k:
/// #{l : sigma(k) < l <= k < sigma^-1(l)  or  l < k < sigma(l) < sigma(k)}.
long long cros_k(const Permutation& s, int k);

/// Nesting index on k:
/// #{l : l < sigma(k) <= k < sigma^-1(l)  or  l < k < sigma(k) < sigma(l)}.
long long nest_k(const Permutation& s, int k);

long long cros(const Permutation& s);
long long nest(const Permutation& s);

/// Vincular pattern 31-2: pairs (i,j), 2 <= i < j <= n, with
/// sigma(i-1) > sigma(j) > sigma(i).
long long pattern_31_2(const Permutation& s);

/// Vincular pattern 2-13: pairs (i,j), 1 <= i < j <= n, with
/// sigma(j) > sigma(i) > sigma(j-1).
long long pattern_2_13(const Permutation& s);

/// Occurrences of 31-2 whose lone letter has value k: with j = sigma^-1(k),
/// #{i : i+1 < j, sigma(i+1) < k < sigma(i)}.
long long pattern_31_2_at(const Permutation& s, int k);

/// Occurrences of 2-13 whose lone letter has value k: with j = sigma^-1(k),
/// #{i : j < i-1, sigma(i-1) < k < sigma(i)}.
long long pattern_2_13_at(const Permutation& s, int k);

/// {i in [n-1] : i < sigma(i) and sigma^-1(i+1) < i+1}, ascending.
std::vector<int> shifted_double_excedances(const Permutation& s);

/// v_i = 1 iff i > sigma^-1(i)  (i is an excedance value).
std::vector<int> val_vector(const Permutation& s);

/// p_i = 1 iff sigma(i) > i  (i is an excedance position).
std::vector<int> pos_vector(const Permutation& s);

/// nes(sigma)_i = nest_i(sigma).
std::vector<int> nes_vector(const Permutation& s);

// ---- enumeration -----------------------------------------------------------

enum class Family { All, DD, DE, Alternating };

/// Calls `fn` with each element of S_n in lexicographic order.
void for_each_permutation(int n, const std::function<void(const Permutation&)>& fn);

/// Members of the named family in lexicographic order, by filtered
/// enumeration of S_n.  DD: des = k and dd = 0.  DE: exc = k and no shifted
/// double excedances.  Alternating: down-up (k ignored).  Throws
/// InvalidFamilyParams for k outside [0, floor((n-1)/2)] on DD/DE.
std::vector<Permutation> family(int n, Family kind, int k = 0);

// ---- text format -----------------------------------------------------------

/// Accepts the compact digit form ("432189765") or the comma-separated form
/// ("4,3,2,1,8,9,7,6,5").  Throws ParseError or NotAPermutation.
Permutation parse_permutation(const std::string& text);

/// Compact digit form iff n <= 9, comma-separated otherwise.
std::string to_string(const Permutation& s);

}  // namespace lhist
