#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace periodlab::ncalg {

using Letter = std::uint8_t;

/// Word in the letters e_0..e_n. Ordered by (length, lexicographic) so that
/// series maps iterate weight by weight.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<Letter> ls) : letters_(std::move(ls)) {}
    Word(std::initializer_list<int> ls) {
        letters_.reserve(ls.size());
        for (int l : ls) letters_.push_back(Letter(l));
    }

    int size() const { return int(letters_.size()); }
    bool empty() const { return letters_.empty(); }
    Letter operator[](int i) const { return letters_[size_t(i)]; }
    const std::vector<Letter>& letters() const { return letters_; }

    Letter back() const { return letters_.back(); }
    Word dropped_last() const {
        Word w = *this;
        w.letters_.pop_back();
        return w;
    }
    Word appended(Letter l) const {
        Word w = *this;
        w.letters_.push_back(l);
        return w;
    }
    Word concat(const Word& o) const {
        Word w = *this;
        w.letters_.insert(w.letters_.end(), o.letters_.begin(), o.letters_.end());
        return w;
    }
    Word prefix(int k) const {
        return Word(std::vector<Letter>(letters_.begin(), letters_.begin() + k));
    }
    Word suffix_from(int k) const {
        return Word(std::vector<Letter>(letters_.begin() + k, letters_.end()));
    }

    int max_letter() const {
        int m = -1;
        for (Letter l : letters_) m = std::max(m, int(l));
        return m;
    }

    friend bool operator==(const Word& a, const Word& b) { return a.letters_ == b.letters_; }
    friend bool operator!=(const Word& a, const Word& b) { return !(a == b); }
    friend bool operator<(const Word& a, const Word& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a.letters_ < b.letters_;
    }

    std::string str() const {
        if (empty()) return "()";
        std::string s;
        for (Letter l : letters_) {
            if (!s.empty()) s += ' ';
            s += 'e';
            s += std::to_string(int(l));
        }
        return s;
    }

private:
    std::vector<Letter> letters_;
};

/// All interleavings of u and v with multiplicities; total multiplicity is
/// binomial(|u|+|v|, |u|).
inline std::map<Word, long> shuffle(const Word& u, const Word& v) {
    std::map<Word, long> out;
    // recursion on (i,j) positions, accumulating the built prefix
    struct Rec {
        const Word &u, &v;
        std::map<Word, long>& out;
        void go(int i, int j, Word& acc) {
            if (i == u.size() && j == v.size()) {
                ++out[acc];
                return;
            }
            if (i < u.size()) {
                Word nxt = acc.appended(u[i]);
                go(i + 1, j, nxt);
            }
            if (j < v.size()) {
                Word nxt = acc.appended(v[j]);
                go(i, j + 1, nxt);
            }
        }
    } rec{u, v, out};
    Word acc;
    rec.go(0, 0, acc);
    return out;
}

/// Words over alphabet {0..alphabet_size-1} of length exactly len, lexicographic.
inline std::vector<Word> words_of_length(int alphabet_size, int len) {
    std::vector<Word> out;
    std::vector<Letter> cur(size_t(len), 0);
    if (len == 0) {
        out.emplace_back();
        return out;
    }
    while (true) {
        out.emplace_back(cur);
        int p = len - 1;
        while (p >= 0 && cur[size_t(p)] == alphabet_size - 1) cur[size_t(p--)] = 0;
        if (p < 0) break;
        ++cur[size_t(p)];
    }
    return out;
}

inline std::vector<Word> words_up_to(int alphabet_size, int max_len) {
    std::vector<Word> out;
    for (int l = 0; l <= max_len; ++l)
        for (auto& w : words_of_length(alphabet_size, l)) out.push_back(w);
    return out;
}

} // namespace periodlab::ncalg
