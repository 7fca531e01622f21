#include "lhist/perm.hpp"

#include <algorithm>
#include <numeric>

namespace lhist {

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
    if (word_.empty()) throw NotAPermutation("empty word");
    const int n = size();
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (int v : word_) {
        if (v < 1 || v > n) {
            throw NotAPermutation("value " + std::to_string(v) + " out of range [1," +
                                  std::to_string(n) + "]");
        }
        if (seen[static_cast<std::size_t>(v) - 1]) {
            throw NotAPermutation("value " + std::to_string(v) + " repeated");
        }
        seen[static_cast<std::size_t>(v) - 1] = 1;
    }
}

Permutation Permutation::inverse() const {
    std::vector<int> inv_word(word_.size());
    for (int i = 1; i <= size(); ++i) inv_word[static_cast<std::size_t>(word_[i - 1]) - 1] = i;
    return Permutation(std::move(inv_word));
}

std::vector<int> exc_set(const Permutation& s) {
    std::vector<int> out;
    for (int i = 1; i <= s.size(); ++i)
        if (i < s(i)) out.push_back(i);
    return out;
}

std::vector<int> des_set(const Permutation& s) {
    std::vector<int> out;
    for (int i = 1; i < s.size(); ++i)
        if (s(i) > s(i + 1)) out.push_back(i);
    return out;
}

long long dd_count(const Permutation& s) {
    long long c = 0;
    for (int i = 1; i <= s.size(); ++i)
        if (s(i - 1) > s(i) && s(i) > s(i + 1)) ++c;
    return c;
}

long long exc(const Permutation& s) { return static_cast<long long>(exc_set(s).size()); }
long long des(const Permutation& s) { return static_cast<long long>(des_set(s).size()); }

long long inv(const Permutation& s) {
    long long c = 0;
    for (int i = 1; i <= s.size(); ++i)
        for (int j = i + 1; j <= s.size(); ++j)
            if (s(i) > s(j)) ++c;
    return c;
}

namespace {

void check_index(const Permutation& s, int k) {
    if (k < 1 || k > s.size()) {
        throw IndexOutOfRange("index " + std::to_string(k) + " not in [1," +
                              std::to_string(s.size()) + "]");
    }
}

}  // namespace

long long cros_k(const Permutation& s, int k) {
    check_index(s, k);
    const Permutation si = s.inverse();
    long long c = 0;
    for (int l = 1; l <= s.size(); ++l)
        if ((s(k) < l && l <= k && k < si(l)) || (l < k && k < s(l) && s(l) < s(k))) ++c;
    return c;
}

long long nest_k(const Permutation& s, int k) {
    check_index(s, k);
    const Permutation si = s.inverse();
    long long c = 0;
    for (int l = 1; l <= s.size(); ++l)
        if ((l < s(k) && s(k) <= k && k < si(l)) || (l < k && k < s(k) && s(k) < s(l))) ++c;
    return c;
}

long long cros(const Permutation& s) {
    long long c = 0;
    for (int k = 1; k <= s.size(); ++k) c += cros_k(s, k);
    return c;
}

long long nest(const Permutation& s) {
    long long c = 0;
    for (int k = 1; k <= s.size(); ++k) c += nest_k(s, k);
    return c;
}

long long pattern_31_2(const Permutation& s) {
    long long c = 0;
    for (int i = 2; i <= s.size(); ++i)
        for (int j = i + 1; j <= s.size(); ++j)
            if (s(i - 1) > s(j) && s(j) > s(i)) ++c;
    return c;
}

long long pattern_2_13(const Permutation& s) {
    long long c = 0;
    for (int i = 1; i <= s.size(); ++i)
        for (int j = i + 1; j <= s.size(); ++j)
            if (s(j) > s(i) && s(i) > s(j - 1)) ++c;
    return c;
}

long long pattern_31_2_at(const Permutation& s, int k) {
    check_index(s, k);
    const int j = s.inverse()(k);
    long long c = 0;
    for (int i = 1; i + 1 < j; ++i)
        if (s(i + 1) < k && k < s(i)) ++c;
    return c;
}

long long pattern_2_13_at(const Permutation& s, int k) {
    check_index(s, k);
    const int j = s.inverse()(k);
    long long c = 0;
    for (int i = j + 2; i <= s.size(); ++i)
        if (s(i - 1) < k && k < s(i)) ++c;
    return c;
}

std::vector<int> shifted_double_excedances(const Permutation& s) {
    const Permutation si = s.inverse();
    std::vector<int> out;
    for (int i = 1; i < s.size(); ++i)
        if (i < s(i) && si(i + 1) < i + 1) out.push_back(i);
    return out;
}

std::vector<int> val_vector(const Permutation& s) {
    const Permutation si = s.inverse();
    std::vector<int> v(static_cast<std::size_t>(s.size()));
    for (int i = 1; i <= s.size(); ++i) v[static_cast<std::size_t>(i) - 1] = (i > si(i)) ? 1 : 0;
    return v;
}

std::vector<int> pos_vector(const Permutation& s) {
    std::vector<int> p(static_cast<std::size_t>(s.size()));
    for (int i = 1; i <= s.size(); ++i) p[static_cast<std::size_t>(i) - 1] = (s(i) > i) ? 1 : 0;
    return p;
}

std::vector<int> nes_vector(const Permutation& s) {
    std::vector<int> v(static_cast<std::size_t>(s.size()));
    for (int i = 1; i <= s.size(); ++i)
        v[static_cast<std::size_t>(i) - 1] = static_cast<int>(nest_k(s, i));
    return v;
}

void for_each_permutation(int n, const std::function<void(const Permutation&)>& fn) {
    if (n < 1) throw InvalidFamilyParams("n must be >= 1, got " + std::to_string(n));
    std::vector<int> word(static_cast<std::size_t>(n));
    std::iota(word.begin(), word.end(), 1);
    do {
        fn(Permutation(word));
    } while (std::next_permutation(word.begin(), word.end()));
}

std::vector<Permutation> family(int n, Family kind, int k) {
    if (kind == Family::DD || kind == Family::DE) {
        if (k < 0 || k > (n - 1) / 2) {
            throw InvalidFamilyParams("k = " + std::to_string(k) + " not in [0," +
                                      std::to_string((n - 1) / 2) + "]");
        }
    }
    std::vector<Permutation> out;
    for_each_permutation(n, [&](const Permutation& s) {
        bool keep = false;
        switch (kind) {
            case Family::All:
                keep = true;
                break;
            case Family::DD:
                keep = des(s) == k && dd_count(s) == 0;
                break;
            case Family::DE:
                keep = exc(s) == k && shifted_double_excedances(s).empty();
                break;
            case Family::Alternating: {
                keep = true;
                for (int i = 1; i < s.size() && keep; ++i) {
                    if (i % 2 == 1)
                        keep = s(i) > s(i + 1);
                    else
                        keep = s(i) < s(i + 1);
                }
                break;
            }
        }
        if (keep) out.push_back(s);
    });
    return out;
}

Permutation parse_permutation(const std::string& text) {
    if (text.empty()) throw ParseError("empty permutation", 0);
    std::vector<int> word;
    if (text.find(',') != std::string::npos) {
        std::size_t pos = 0;
        while (pos <= text.size()) {
            std::size_t comma = text.find(',', pos);
            std::string tok = text.substr(pos, comma == std::string::npos ? std::string::npos
                                                                          : comma - pos);
            if (tok.empty()) throw ParseError("empty entry", pos);
            std::size_t used = 0;
            int v;
            try {
                v = std::stoi(tok, &used);
            } catch (const std::exception&) {
                throw ParseError("not an integer: '" + tok + "'", pos);
            }
            if (used != tok.size()) throw ParseError("trailing junk in '" + tok + "'", pos + used);
            word.push_back(v);
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
    } else {
        for (std::size_t i = 0; i < text.size(); ++i) {
            if (text[i] < '1' || text[i] > '9') {
                throw ParseError(std::string("expected digit 1-9, got '") + text[i] + "'", i);
            }
            word.push_back(text[i] - '0');
        }
    }
    return Permutation(std::move(word));
}

std::string to_string(const Permutation& s) {
    std::string out;
    const bool compact = s.size() <= 9;
    for (int i = 1; i <= s.size(); ++i) {
        if (!compact && i > 1) out += ',';
        out += std::to_string(s(i));
    }
    return out;
}

}  // namespace lhist
