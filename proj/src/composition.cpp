#include "copatt/composition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace copatt {

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_)
        if (p < 1) throw std::invalid_argument("composition parts must be positive");
}

int Composition::weight() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::vector<int> Composition::splits() const {
    std::vector<int> s;
    s.reserve(parts_.size() + 1);
    s.push_back(0);
    int acc = 0;
    for (int p : parts_) s.push_back(acc += p);
    return s;
}

Composition Composition::reversed() const {
    std::vector<int> r(parts_.rbegin(), parts_.rend());
    return Composition(std::move(r));
}

bool Composition::is_palindrome() const {
    return std::equal(parts_.begin(), parts_.end(), parts_.rbegin());
}

std::string Composition::str() const {
    if (parts_.empty()) return "0";
    std::string out;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += '+';
        out += std::to_string(parts_[i]);
    }
    return out;
}

namespace {

// Splits on '+', parsing each token with f. Shared by the plain and marked forms.
template <typename F>
void for_each_token(const std::string& text, F&& f) {
    size_t pos = 0;
    while (true) {
        size_t next = text.find('+', pos);
        f(text.substr(pos, next == std::string::npos ? next : next - pos));
        if (next == std::string::npos) break;
        pos = next + 1;
    }
}

int parse_part(const std::string& tok) {
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument("bad composition part '" + tok + "'");
    int v = std::stoi(tok);
    if (v < 1) throw std::invalid_argument("composition parts must be positive");
    return v;
}

}  // namespace

Composition Composition::parse(const std::string& text) {
    if (text == "0") return Composition{};
    std::vector<int> parts;
    for_each_token(text, [&](const std::string& tok) { parts.push_back(parse_part(tok)); });
    return Composition(std::move(parts));
}

MarkedKPart::MarkedKPart(Composition c, int idx) : composition(std::move(c)), index(idx) {
    if (idx < 0 || idx >= composition.size())
        throw std::invalid_argument("marked part index out of range");
}

int MarkedKPart::prefix_sum() const {
    int s = 0;
    for (int i = 0; i < index; ++i) s += composition.part(i);
    return s;
}

MarkedKPart MarkedKPart::parse(const std::string& text) {
    std::vector<int> parts;
    int marked = -1;
    for_each_token(text, [&](const std::string& tok) {
        if (tok.size() >= 2 && tok.front() == '[' && tok.back() == ']') {
            if (marked >= 0) throw std::invalid_argument("more than one marked part");
            marked = static_cast<int>(parts.size());
            parts.push_back(parse_part(tok.substr(1, tok.size() - 2)));
        } else {
            parts.push_back(parse_part(tok));
        }
    });
    if (marked < 0) throw std::invalid_argument("no marked part in '" + text + "'");
    return MarkedKPart(Composition(std::move(parts)), marked);
}

std::string MarkedKPart::str() const {
    std::string out;
    for (int i = 0; i < composition.size(); ++i) {
        if (i) out += '+';
        if (i == index) out += '[' + std::to_string(composition.part(i)) + ']';
        else out += std::to_string(composition.part(i));
    }
    return out;
}

}  // namespace copatt
