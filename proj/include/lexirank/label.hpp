#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string_view>

namespace lexirank {

// Ordered three-valued sentiment class: negative < neutral < positive.
class SentimentLabel {
public:
    static constexpr SentimentLabel negative() { return SentimentLabel(-1); }
    static constexpr SentimentLabel neutral() { return SentimentLabel(0); }
    static constexpr SentimentLabel positive() { return SentimentLabel(1); }

    // Returns nullopt for anything outside {-1, 0, +1}.
    static constexpr std::optional<SentimentLabel> from_int(long long v) {
        if (v < -1 || v > 1) return std::nullopt;
        return SentimentLabel(static_cast<int>(v));
    }

    constexpr int value() const { return value_; }
    // 0, 1, 2 for negative, neutral, positive.
    constexpr int index() const { return value_ + 1; }

    constexpr auto operator<=>(const SentimentLabel&) const = default;

private:
    constexpr explicit SentimentLabel(int v) : value_(v) {}
    int value_;
};

inline constexpr std::array<SentimentLabel, 3> kAllLabels = {
    SentimentLabel::negative(), SentimentLabel::neutral(), SentimentLabel::positive()};

inline constexpr std::string_view label_name(SentimentLabel c) {
    switch (c.value()) {
        case -1: return "negative";
        case 0: return "neutral";
        default: return "positive";
    }
}

}  // namespace lexirank
