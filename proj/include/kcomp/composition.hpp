#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace kcomp {

// An ordered list of positive parts. The empty composition is the unique
// composition of 0.
class composition {
 public:
    composition() = default;

    explicit composition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (int p : parts_)
            if (p < 1)
                throw std::invalid_argument("composition: every part must be >= 1 (got " +
                                            std::to_string(p) + ")");
    }

    const std::vector<int>& parts() const noexcept { return parts_; }
    std::size_t size() const noexcept { return parts_.size(); }
    bool empty() const noexcept { return parts_.empty(); }

    long long total() const noexcept {
        return std::accumulate(parts_.begin(), parts_.end(), 0LL);
    }

    // Text form: comma-separated parts in parentheses, e.g. "(2,1,1)".
    std::string to_text() const {
        std::string out = "(";
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i != 0) out += ',';
            out += std::to_string(parts_[i]);
        }
        out += ')';
        return out;
    }

    static composition from_text(std::string_view text) {
        if (text.size() < 2 || text.front() != '(' || text.back() != ')')
            throw std::invalid_argument("composition text must be parenthesized: " +
                                        std::string(text));
        std::string_view body = text.substr(1, text.size() - 2);
        std::vector<int> parts;
        if (!body.empty()) {
            std::size_t pos = 0;
            while (pos <= body.size()) {
                std::size_t comma = body.find(',', pos);
                std::string_view tok = body.substr(pos, comma == std::string_view::npos
                                                            ? std::string_view::npos
                                                            : comma - pos);
                if (tok.empty() || tok.find_first_not_of("0123456789") != std::string_view::npos)
                    throw std::invalid_argument("composition text has a malformed part: " +
                                                std::string(text));
                parts.push_back(std::stoi(std::string(tok)));
                if (comma == std::string_view::npos) break;
                pos = comma + 1;
            }
        }
        return composition(std::move(parts));
    }

    friend bool operator==(const composition&, const composition&) = default;

 private:
    std::vector<int> parts_;
};

// A pulse string over {hit, rest}; text encoding uses 'x' for a hit and '.'
// for a rest. A nonempty pattern starts with a hit.
class rhythm_pattern {
 public:
    static constexpr char hit = 'x';
    static constexpr char rest = '.';

    rhythm_pattern() = default;

    static rhythm_pattern from_text(std::string_view text) {
        if (!text.empty() && text.front() != hit)
            throw std::invalid_argument("malformed rhythm pattern: must start with a hit: " +
                                        std::string(text));
        for (char c : text)
            if (c != hit && c != rest)
                throw std::invalid_argument(std::string("malformed rhythm pattern: unexpected '") +
                                            c + "'");
        rhythm_pattern p;
        p.pulses_.assign(text.begin(), text.end());
        return p;
    }

    const std::string& text() const noexcept { return pulses_; }
    std::size_t length() const noexcept { return pulses_.size(); }

    friend bool operator==(const rhythm_pattern&, const rhythm_pattern&) = default;

 private:
    std::string pulses_;
};

// Part j maps to one hit followed by j-1 rests; pattern length equals the
// composition total.
inline rhythm_pattern composition_to_rhythm(const composition& c) {
    std::string pulses;
    pulses.reserve(static_cast<std::size_t>(c.total()));
    for (int part : c.parts()) {
        pulses += rhythm_pattern::hit;
        pulses.append(static_cast<std::size_t>(part - 1), rhythm_pattern::rest);
    }
    return rhythm_pattern::from_text(pulses);
}

inline composition rhythm_to_composition(const rhythm_pattern& p) {
    const std::string& pulses = p.text();
    if (!pulses.empty() && pulses.front() != rhythm_pattern::hit)
        throw std::invalid_argument("malformed rhythm pattern: must start with a hit");
    std::vector<int> parts;
    for (std::size_t i = 0; i < pulses.size();) {
        std::size_t next = pulses.find(rhythm_pattern::hit, i + 1);
        if (next == std::string::npos) next = pulses.size();
        parts.push_back(static_cast<int>(next - i));
        i = next;
    }
    return composition(std::move(parts));
}

// Length of the longest maximal run of rests (0 for hit-only or empty
// patterns). Bounded by k-1 for patterns arising from 1..k compositions.
inline std::size_t max_rest_run(const rhythm_pattern& p) {
    std::size_t best = 0, run = 0;
    for (char c : p.text()) {
        run = (c == rhythm_pattern::rest) ? run + 1 : 0;
        best = std::max(best, run);
    }
    return best;
}

} // namespace kcomp
