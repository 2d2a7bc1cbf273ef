#pragma once

// Combinatorial codes, covers, quotient codes and Boolean intervals.

#include <istream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "neuralpol/core_algebra.hpp"

namespace neuralpol {

// A codeword: bit i-1 is the state of neuron i.
using Word = std::uint32_t;

std::string format_word(Word w, int n);

class ParseError : public Error {
public:
    ParseError(const std::string& what, int line)
        : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

class Code {
public:
    // Duplicates are merged. n may be 0 (the code of a quotient by every neuron).
    Code(int n, std::vector<Word> words);
    static Code full(int n);

    int n() const { return n_; }
    // Sorted lexicographically by their 0/1 strings.
    const std::vector<Word>& words() const { return words_; }
    std::size_t size() const { return words_.size(); }
    bool empty() const { return words_.empty(); }
    bool contains(Word w) const { return w < membership_.size() && membership_[w]; }

    std::string to_string() const;  // code file format

    friend bool operator==(const Code& a, const Code& b) {
        return a.n_ == b.n_ && a.words_ == b.words_;
    }

private:
    int n_;
    std::vector<Word> words_;
    std::vector<bool> membership_;
};

// One word per line, '#' comments, blank lines ignored.
Code parse_code(std::istream& in);
Code parse_code(const std::string& text);

struct Cover {
    std::vector<std::string> points;
    // sets[i-1] is U_i.
    std::vector<std::set<std::string>> sets;

    int n() const { return static_cast<int>(sets.size()); }
};

// {"points": [...], "sets": {"1": [...], ..., "n": [...]}}
Cover parse_cover(std::istream& in);
Cover parse_cover(const std::string& text);

Code code_of_cover(const Cover& cover);

struct QuotientCode {
    Code code;
    // kept[k] is the original index of neuron k+1 of the quotient.
    std::vector<int> kept;
};

// Deletes the neurons in `removed`, relabelling the rest to 1..n-|removed| in order.
QuotientCode quotient_code(const Code& c, IndexSet removed);

// alpha in {0,1,*}^n, stored as the sets of coordinates fixed to 0 and to 1.
class IntervalSpec {
public:
    IntervalSpec(int n, IndexSet zeros, IndexSet ones);
    static IntervalSpec parse(const std::string& text);  // e.g. "1**"

    int n() const { return n_; }
    IndexSet zeros() const { return zeros_; }
    IndexSet ones() const { return ones_; }
    IndexSet stars() const { return all_indices(n_) & ~(zeros_ | ones_); }
    int fixed_count() const { return cardinality(zeros_ | ones_); }

    bool contains(Word w) const {
        return (w & zeros_) == 0 && (w & ones_) == ones_;
    }
    // All 2^(#stars) words of V_alpha.
    std::vector<Word> words() const;

    std::string to_string() const;

    friend bool operator==(const IntervalSpec&, const IntervalSpec&) = default;

private:
    int n_;
    IndexSet zeros_;
    IndexSet ones_;
};

// Lexicographic over entries with 0 < 1 < *.
bool interval_order(const IntervalSpec& a, const IntervalSpec& b);

bool interval_in_code(const IntervalSpec& alpha, const Code& c);

// Inclusion-maximal alpha with V_alpha contained in c, in interval_order.
std::vector<IntervalSpec> maximal_intervals(const Code& c);

}  // namespace neuralpol
