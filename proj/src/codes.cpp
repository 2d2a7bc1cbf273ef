#include "neuralpol/codes.hpp"

#include <algorithm>
#include <sstream>

#include <nlohmann/json.hpp>

namespace neuralpol {

namespace {

// Integer whose numeric order is the lexicographic order of the 0/1 strings.
Word lex_key(Word w, int n) {
    Word key = 0;
    for (int i = 0; i < n; ++i) {
        if (w & (1u << i)) key |= 1u << (n - 1 - i);
    }
    return key;
}

void check_length(int n) {
    if (n < 0 || n > kMaxNeurons) {
        throw Error("neuron count must lie in [0, " + std::to_string(kMaxNeurons) + "]");
    }
}

}  // namespace

std::string format_word(Word w, int n) {
    std::string s(static_cast<std::size_t>(n), '0');
    for (int i = 0; i < n; ++i) {
        if (w & (1u << i)) s[static_cast<std::size_t>(i)] = '1';
    }
    return s;
}

Code::Code(int n, std::vector<Word> words) : n_(n), membership_(std::size_t{1} << n, false) {
    check_length(n);
    for (Word w : words) {
        if ((w & ~all_indices(n)) != 0) throw Error("codeword has bits beyond neuron " + std::to_string(n));
        membership_[w] = true;
    }
    for (Word w = 0; w < membership_.size(); ++w) {
        if (membership_[w]) words_.push_back(w);
    }
    std::sort(words_.begin(), words_.end(),
              [n](Word a, Word b) { return lex_key(a, n) < lex_key(b, n); });
}

Code Code::full(int n) {
    check_length(n);
    std::vector<Word> all(std::size_t{1} << n);
    for (Word w = 0; w < all.size(); ++w) all[w] = w;
    return Code(n, std::move(all));
}

std::string Code::to_string() const {
    std::string out;
    for (Word w : words_) out += format_word(w, n_) + '\n';
    return out;
}

Code parse_code(std::istream& in) {
    std::string line;
    int lineno = 0;
    int n = -1;
    std::vector<Word> words;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        auto last = line.find_last_not_of(" \t\r");
        const std::string word = line.substr(first, last - first + 1);

        if (n < 0) {
            n = static_cast<int>(word.size());
            if (n > kMaxNeurons) {
                throw ParseError("codeword longer than " + std::to_string(kMaxNeurons) + " neurons",
                                 lineno);
            }
        } else if (static_cast<int>(word.size()) != n) {
            throw ParseError("codeword length " + std::to_string(word.size()) +
                                 " differs from first codeword length " + std::to_string(n),
                             lineno);
        }
        Word w = 0;
        for (int i = 0; i < n; ++i) {
            const char ch = word[static_cast<std::size_t>(i)];
            if (ch == '1') {
                w |= 1u << i;
            } else if (ch != '0') {
                throw ParseError(std::string("non-binary character '") + ch + "'", lineno);
            }
        }
        words.push_back(w);
    }
    if (n < 0) throw ParseError("no codewords", 0);
    return Code(n, std::move(words));
}

Code parse_code(const std::string& text) {
    std::istringstream in(text);
    return parse_code(in);
}

Cover parse_cover(std::istream& in) {
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed cover JSON: ") + e.what(), 0);
    }
    if (!j.is_object() || !j.contains("points") || !j.contains("sets")) {
        throw ParseError("cover JSON needs \"points\" and \"sets\"", 0);
    }
    Cover cover;
    try {
        cover.points = j.at("points").get<std::vector<std::string>>();
        const auto& sets = j.at("sets");
        if (!sets.is_object()) throw ParseError("\"sets\" must be an object", 0);
        const int n = static_cast<int>(sets.size());
        if (n < 1 || n > kMaxNeurons) throw ParseError("cover needs 1.." + std::to_string(kMaxNeurons) + " sets", 0);
        const std::set<std::string> universe(cover.points.begin(), cover.points.end());
        for (int i = 1; i <= n; ++i) {
            const std::string key = std::to_string(i);
            if (!sets.contains(key)) throw ParseError("missing set \"" + key + "\"", 0);
            std::set<std::string> members;
            for (const auto& id : sets.at(key).get<std::vector<std::string>>()) {
                if (!universe.contains(id)) {
                    throw ParseError("set " + key + " names unknown point \"" + id + "\"", 0);
                }
                members.insert(id);
            }
            cover.sets.push_back(std::move(members));
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed cover JSON: ") + e.what(), 0);
    }
    return cover;
}

Cover parse_cover(const std::string& text) {
    std::istringstream in(text);
    return parse_cover(in);
}

Code code_of_cover(const Cover& cover) {
    std::vector<Word> words;
    for (const auto& p : cover.points) {
        Word w = 0;
        for (int i = 0; i < cover.n(); ++i) {
            if (cover.sets[static_cast<std::size_t>(i)].contains(p)) w |= 1u << i;
        }
        words.push_back(w);
    }
    return Code(cover.n(), std::move(words));
}

QuotientCode quotient_code(const Code& c, IndexSet removed) {
    if ((removed & ~all_indices(c.n())) != 0) throw Error("quotient index out of range");
    std::vector<int> kept;
    for (int i = 1; i <= c.n(); ++i) {
        if (!(removed & (1u << (i - 1)))) kept.push_back(i);
    }
    std::vector<Word> words;
    words.reserve(c.size());
    for (Word w : c.words()) {
        Word r = 0;
        for (std::size_t k = 0; k < kept.size(); ++k) {
            if (w & (1u << (kept[k] - 1))) r |= 1u << k;
        }
        words.push_back(r);
    }
    return {Code(static_cast<int>(kept.size()), std::move(words)), std::move(kept)};
}

// ---------------------------------------------------------------------------

IntervalSpec::IntervalSpec(int n, IndexSet zeros, IndexSet ones) : n_(n), zeros_(zeros), ones_(ones) {
    check_length(n);
    if ((zeros & ones) != 0) throw Error("interval fixes a coordinate to both 0 and 1");
    if (((zeros | ones) & ~all_indices(n)) != 0) throw Error("interval index out of range");
}

IntervalSpec IntervalSpec::parse(const std::string& text) {
    IndexSet zeros = 0, ones = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        switch (text[i]) {
            case '0': zeros |= 1u << i; break;
            case '1': ones |= 1u << i; break;
            case '*': break;
            default: throw Error("interval entries must be 0, 1 or *");
        }
    }
    return {static_cast<int>(text.size()), zeros, ones};
}

std::vector<Word> IntervalSpec::words() const {
    std::vector<Word> out;
    const IndexSet free = stars();
    for (IndexSet sub = free;; sub = (sub - 1) & free) {
        out.push_back(ones_ | sub);
        if (sub == 0) break;
    }
    std::reverse(out.begin(), out.end());
    return out;
}

std::string IntervalSpec::to_string() const {
    std::string s(static_cast<std::size_t>(n_), '*');
    for (int i = 0; i < n_; ++i) {
        if (zeros_ & (1u << i)) s[static_cast<std::size_t>(i)] = '0';
        if (ones_ & (1u << i)) s[static_cast<std::size_t>(i)] = '1';
    }
    return s;
}

bool interval_order(const IntervalSpec& a, const IntervalSpec& b) {
    auto digit = [](const IntervalSpec& s, int i) {
        const IndexSet bit = 1u << i;
        return (s.zeros() & bit) ? 0 : (s.ones() & bit) ? 1 : 2;
    };
    const int n = std::min(a.n(), b.n());
    for (int i = 0; i < n; ++i) {
        if (digit(a, i) != digit(b, i)) return digit(a, i) < digit(b, i);
    }
    return a.n() < b.n();
}

bool interval_in_code(const IntervalSpec& alpha, const Code& c) {
    if (alpha.n() != c.n()) throw Error("interval and code lengths differ");
    const IndexSet free = alpha.stars();
    for (IndexSet sub = free;; sub = (sub - 1) & free) {
        if (!c.contains(alpha.ones() | sub)) return false;
        if (sub == 0) break;
    }
    return true;
}

std::vector<IntervalSpec> maximal_intervals(const Code& c) {
    const int n = c.n();
    std::vector<std::size_t> pow3(static_cast<std::size_t>(n) + 1, 1);
    for (int i = 1; i <= n; ++i) pow3[static_cast<std::size_t>(i)] = pow3[static_cast<std::size_t>(i) - 1] * 3;
    const std::size_t total = pow3[static_cast<std::size_t>(n)];

    // Base-3 index with coordinate 1 most significant and digits 0, 1, 2 = '*',
    // so ascending index is the documented output order and every star
    // substitution has a smaller index.
    auto weight = [&](int i) { return pow3[static_cast<std::size_t>(n - 1 - i)]; };
    std::vector<bool> inside(total, false);
    std::vector<IntervalSpec> specs;
    specs.reserve(total);
    for (std::size_t idx = 0; idx < total; ++idx) {
        IndexSet zeros = 0, ones = 0;
        int star = -1;
        std::size_t rest = idx;
        for (int i = 0; i < n; ++i) {
            const std::size_t d = rest / weight(i);
            rest %= weight(i);
            if (d == 0) zeros |= 1u << i;
            if (d == 1) ones |= 1u << i;
            if (d == 2 && star < 0) star = i;
        }
        if (star < 0) {
            inside[idx] = c.contains(ones);
        } else {
            const std::size_t w = weight(star);
            inside[idx] = inside[idx - 2 * w] && inside[idx - w];
        }
        specs.emplace_back(n, zeros, ones);
    }

    std::vector<IntervalSpec> out;
    for (std::size_t idx = 0; idx < total; ++idx) {
        if (!inside[idx]) continue;
        const IntervalSpec& s = specs[idx];
        bool maximal = true;
        for (int i = 0; i < n && maximal; ++i) {
            const IndexSet bit = 1u << i;
            if (s.zeros() & bit) maximal = !inside[idx + 2 * weight(i)];
            if (s.ones() & bit) maximal = !inside[idx + weight(i)];
        }
        if (maximal) out.push_back(s);
    }
    return out;
}

}  // namespace neuralpol
