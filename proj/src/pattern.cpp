#include "copatt/pattern.hpp"

#include <algorithm>
#include <stdexcept>

#include <json.hpp>

#include "copatt/config.hpp"

namespace copatt {

SegmentedPattern::SegmentedPattern(std::vector<int> letters) : letters_(std::move(letters)) {
    if (letters_.empty()) throw std::invalid_argument("segmented pattern must be nonempty");
    int j = 0;
    for (int v : letters_) {
        if (v < 1) throw std::invalid_argument("pattern letters must be positive");
        j = std::max(j, v);
    }
    std::vector<bool> seen(static_cast<size_t>(j) + 1, false);
    for (int v : letters_) seen[static_cast<size_t>(v)] = true;
    for (int k = 1; k <= j; ++k)
        if (!seen[static_cast<size_t>(k)])
            throw std::invalid_argument("pattern letters must form an order ideal {1..j}");
}

SegmentedPattern SegmentedPattern::standardize(std::span<const int> values) {
    if (values.empty()) throw std::invalid_argument("standardize: empty input");
    std::vector<int> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<int> out;
    out.reserve(values.size());
    for (int v : values) {
        auto it = std::lower_bound(sorted.begin(), sorted.end(), v);
        out.push_back(static_cast<int>(it - sorted.begin()) + 1);
    }
    return SegmentedPattern(std::move(out));
}

SegmentedPattern SegmentedPattern::parse(const std::string& digits) {
    if (digits.empty()) throw std::invalid_argument("empty pattern literal");
    std::vector<int> letters;
    for (char ch : digits) {
        if (ch < '1' || ch > '9')
            throw std::invalid_argument("pattern literal must be digits 1-9: '" + digits + "'");
        letters.push_back(ch - '0');
    }
    return SegmentedPattern(std::move(letters));
}

int SegmentedPattern::max_letter() const {
    return *std::max_element(letters_.begin(), letters_.end());
}

std::vector<int> SegmentedPattern::content() const {
    std::vector<int> mu(static_cast<size_t>(max_letter()), 0);
    for (int v : letters_) ++mu[static_cast<size_t>(v - 1)];
    return mu;
}

std::string SegmentedPattern::str() const {
    std::string out;
    for (int v : letters_) {
        if (v > 9) {
            out += '(' + std::to_string(v) + ')';
        } else {
            out += static_cast<char>('0' + v);
        }
    }
    return out;
}

PosetAlphabet::PosetAlphabet(std::vector<std::string> labels,
                             const std::vector<std::pair<std::string, std::string>>& less_pairs)
    : labels_(std::move(labels)) {
    const size_t n = labels_.size();
    if (n == 0) throw std::invalid_argument("alphabet must be nonempty");
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (labels_[i] == labels_[j])
                throw std::invalid_argument("duplicate alphabet label '" + labels_[i] + "'");

    less_.assign(n, std::vector<bool>(n, false));
    for (const auto& [a, b] : less_pairs) {
        int ia = index(a), ib = index(b);
        if (ia < 0 || ib < 0)
            throw std::invalid_argument("relation uses unknown label '" + (ia < 0 ? a : b) + "'");
        if (ia == ib) throw std::invalid_argument("strict order cannot relate '" + a + "' to itself");
        less_[static_cast<size_t>(ia)][static_cast<size_t>(ib)] = true;
    }
    // transitive closure
    for (size_t k = 0; k < n; ++k)
        for (size_t i = 0; i < n; ++i)
            if (less_[i][k])
                for (size_t j = 0; j < n; ++j)
                    if (less_[k][j]) less_[i][j] = true;
    for (size_t i = 0; i < n; ++i)
        if (less_[i][i])
            throw std::invalid_argument("order relation has a cycle through '" + labels_[i] + "'");
}

PosetAlphabet PosetAlphabet::chain(int j) {
    std::vector<std::string> labels;
    std::vector<std::pair<std::string, std::string>> pairs;
    for (int i = 1; i <= j; ++i) labels.push_back(std::to_string(i));
    for (int i = 1; i < j; ++i) pairs.emplace_back(std::to_string(i), std::to_string(i + 1));
    return PosetAlphabet(std::move(labels), pairs);
}

int PosetAlphabet::index(const std::string& label) const {
    for (size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i] == label) return static_cast<int>(i);
    return -1;
}

Spop::Spop(PosetAlphabet alphabet, const std::vector<std::string>& word_labels)
    : alphabet_(std::move(alphabet)) {
    if (word_labels.empty()) throw std::invalid_argument("SPOP word must be nonempty");
    for (const auto& lbl : word_labels) {
        int i = alphabet_.index(lbl);
        if (i < 0) throw std::invalid_argument("word uses unknown label '" + lbl + "'");
        word_.push_back(i);
    }
    // used letters must form an order ideal of the alphabet
    std::vector<bool> used(static_cast<size_t>(alphabet_.size()), false);
    for (int i : word_) used[static_cast<size_t>(i)] = true;
    for (int b = 0; b < alphabet_.size(); ++b) {
        if (!used[static_cast<size_t>(b)]) continue;
        for (int a = 0; a < alphabet_.size(); ++a)
            if (alphabet_.less(a, b) && !used[static_cast<size_t>(a)])
                throw std::invalid_argument("word letters are not an order ideal: '" +
                                            alphabet_.label(a) + "' < '" + alphabet_.label(b) +
                                            "' but only the larger appears");
    }
    compute_extensions();
}

Spop Spop::from_pattern(const SegmentedPattern& p) {
    std::vector<std::string> word;
    for (int v : p.letters()) word.push_back(std::to_string(v));
    return Spop(PosetAlphabet::chain(p.max_letter()), word);
}

Spop Spop::parse(const std::string& text) {
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') return parse_json(text);
    return from_pattern(SegmentedPattern::parse(text));
}

Spop Spop::parse_json(const std::string& json_text) {
    nlohmann::json doc = nlohmann::json::parse(json_text);
    std::vector<std::string> elements = doc.at("elements").get<std::vector<std::string>>();
    std::vector<std::pair<std::string, std::string>> less;
    for (const auto& pair : doc.at("less")) {
        if (!pair.is_array() || pair.size() != 2)
            throw std::invalid_argument("'less' entries must be [a, b] pairs");
        less.emplace_back(pair[0].get<std::string>(), pair[1].get<std::string>());
    }
    std::vector<std::string> word = doc.at("word").get<std::vector<std::string>>();
    return Spop(PosetAlphabet(std::move(elements), less), word);
}

void Spop::compute_extensions() {
    // the used alphabet elements, each to receive a distinct letter 1..d
    std::vector<int> used;
    for (int i = 0; i < alphabet_.size(); ++i)
        if (std::find(word_.begin(), word_.end(), i) != word_.end()) used.push_back(i);
    const int d = static_cast<int>(used.size());

    std::vector<int> letter(static_cast<size_t>(alphabet_.size()), 0);
    std::vector<bool> assigned(used.size(), false);

    // assign letters 1..d in increasing order; letter t may go to any element
    // minimal among the unassigned ones, which enforces a < b => L(a) < L(b)
    auto minimal = [&](size_t ui) {
        for (size_t uj = 0; uj < used.size(); ++uj)
            if (!assigned[uj] && alphabet_.less(used[uj], used[ui])) return false;
        return true;
    };

    std::vector<SegmentedPattern> out;
    auto emit = [&] {
        std::vector<int> v;
        v.reserve(word_.size());
        for (int w : word_) v.push_back(letter[static_cast<size_t>(w)]);
        out.emplace_back(std::move(v));
    };

    auto rec = [&](auto&& self, int next_letter) -> void {
        if (next_letter > d) {
            emit();
            return;
        }
        for (size_t ui = 0; ui < used.size(); ++ui) {
            if (assigned[ui] || !minimal(ui)) continue;
            assigned[ui] = true;
            letter[static_cast<size_t>(used[ui])] = next_letter;
            self(self, next_letter + 1);
            assigned[ui] = false;
        }
    };
    rec(rec, 1);

    std::sort(out.begin(), out.end());
    extensions_ = std::move(out);
}

int Spop::min_weight() const {
    int best = 0;
    bool have = false;
    for (const auto& v : extensions_) {
        int w = 0;
        for (int letter : v.letters()) w += letter;
        if (!have || w < best) best = w, have = true;
    }
    return best;
}

std::string Spop::str() const {
    std::string out;
    for (size_t i = 0; i < word_.size(); ++i) {
        if (i) out += ' ';
        out += alphabet_.label(word_[i]);
    }
    return out;
}

std::vector<OccurrenceRecord> count_occurrences(const Composition& c, const Spop& w) {
    std::vector<OccurrenceRecord> out;
    const int m = w.length();
    const int parts = c.size();
    if (parts < m) return out;
    const auto& exts = w.linear_extensions();
    const auto splits = c.splits();
    for (int start = 0; start + m <= parts; ++start) {
        auto window = std::span<const int>(c.parts()).subspan(static_cast<size_t>(start),
                                                              static_cast<size_t>(m));
        SegmentedPattern std_window = SegmentedPattern::standardize(window);
        if (std::binary_search(exts.begin(), exts.end(), std_window))
            out.push_back({start, splits[static_cast<size_t>(start)], parts - m});
    }
    return out;
}

BigInt pattern_count_oracle(const SegmentedPattern& v, int n) {
    if (n < 0) throw std::invalid_argument("pattern_count_oracle: n must be nonnegative");
    check_cap(n, "pattern_count_oracle");
    const auto mu = v.content();
    const int j = static_cast<int>(mu.size());
    BigInt count = 0;
    // t_k ranges over t_{k-1}+1, ...; prune by the smallest weight the
    // remaining letters can still contribute
    auto rec = [&](auto&& self, int k, int t_prev, int remaining) -> void {
        if (k == j) {
            if (remaining == 0) ++count;
            return;
        }
        for (int t = t_prev + 1;; ++t) {
            long long least = 0;
            for (int i = k; i < j; ++i)
                least += static_cast<long long>(mu[static_cast<size_t>(i)]) * (t + (i - k));
            if (least > remaining) break;
            self(self, k + 1, t, remaining - mu[static_cast<size_t>(k)] * t);
        }
    };
    rec(rec, 0, 0, n);
    return count;
}

}  // namespace copatt
