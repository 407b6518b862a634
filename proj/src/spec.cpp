#include "hbg/spec.hpp"

#include <algorithm>
#include <sstream>

namespace hbg {

const char* to_string(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::InvalidSpec: return "InvalidSpec";
    case ErrorCode::LabelOutOfRange: return "LabelOutOfRange";
    case ErrorCode::RootOutOfRange: return "RootOutOfRange";
    case ErrorCode::MalformedGraph: return "MalformedGraph";
    case ErrorCode::DegenerateChords: return "DegenerateChords";
    case ErrorCode::InvalidTask: return "InvalidTask";
    case ErrorCode::InvalidRange: return "InvalidRange";
    case ErrorCode::VerificationFailed: return "VerificationFailed";
    case ErrorCode::CorruptStore: return "CorruptStore";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::OddOrderRejected: return "OddOrderRejected";
    case ErrorCode::UnsupportedFormat: return "UnsupportedFormat";
    case ErrorCode::OutOfTable: return "OutOfTable";
    case ErrorCode::Io: return "Io";
    }
    return "Unknown";
}

const char* to_string(ViolationCode code) noexcept {
    switch (code) {
    case ViolationCode::OrderNotEven: return "OrderNotEven";
    case ViolationCode::OrderTooSmall: return "OrderTooSmall";
    case ViolationCode::SymFactorNotPositive: return "SymFactorNotPositive";
    case ViolationCode::DivisibilityViolation: return "DivisibilityViolation";
    case ViolationCode::ChordCountMismatch: return "ChordCountMismatch";
    case ViolationCode::EvenChordIndex: return "EvenChordIndex";
    case ViolationCode::ChordOutOfRange: return "ChordOutOfRange";
    case ViolationCode::NotAMatching: return "NotAMatching";
    }
    return "Unknown";
}

namespace {

long floor_mod(long a, long n) {
    long r = a % n;
    return r < 0 ? r + n : r;
}

}  // namespace

bool ValidationReport::has(ViolationCode code) const noexcept {
    for (const auto& v : violations) {
        if (v.code == code) return true;
    }
    return false;
}

std::string ValidationReport::to_string() const {
    if (valid()) return "valid";
    std::ostringstream out;
    out << "invalid:";
    for (const auto& v : violations) {
        out << "\n  " << hbg::to_string(v.code);
        if (v.index >= 0) out << " [chord " << v.index << " = " << v.value << "]";
        if (!v.detail.empty()) out << ": " << v.detail;
    }
    return out.str();
}

ValidationReport validate_spec(const ChordIndexSpec& spec) {
    ValidationReport report;
    auto add = [&](ViolationCode code, int index, long value, std::string detail) {
        report.violations.push_back({code, index, value, std::move(detail)});
    };

    const int order = spec.order;
    const int m = order / 2;
    const int b = spec.sym_factor;

    if (order % 2 != 0) {
        add(ViolationCode::OrderNotEven, -1, order, "order " + std::to_string(order) + " is odd");
    }
    if (m < 2) {
        add(ViolationCode::OrderTooSmall, -1, order, "order must be at least 4");
    }
    if (b <= 0) {
        add(ViolationCode::SymFactorNotPositive, -1, b, "symmetry factor must be positive");
    }
    const bool divides = b > 0 && m >= 1 && m % b == 0;
    if (b > 0 && !divides) {
        add(ViolationCode::DivisibilityViolation, -1, b,
            std::to_string(b) + " does not divide " + std::to_string(m));
    }
    const bool count_ok = b > 0 && static_cast<int>(spec.chords.size()) == b;
    if (b > 0 && !count_ok) {
        add(ViolationCode::ChordCountMismatch, -1, static_cast<long>(spec.chords.size()),
            "expected " + std::to_string(b) + " chord indices, got " +
                std::to_string(spec.chords.size()));
    }

    bool all_odd = true;
    for (std::size_t i = 0; i < spec.chords.size(); ++i) {
        const int d = spec.chords[i];
        const int pos = static_cast<int>(i) + 1;
        if (d % 2 == 0) {
            all_odd = false;
            add(ViolationCode::EvenChordIndex, pos, d, "chord indices must be odd");
        }
        if (d < 3 || d > order - 3) {
            add(ViolationCode::ChordOutOfRange, pos, d,
                "must satisfy 3 <= d <= " + std::to_string(order - 3));
        }
    }

    // Chords at odd labels hit even labels; the map is onto exactly when the
    // b residues (2i-1 + d_i) mod 2b are pairwise distinct.
    if (divides && count_ok && all_odd && order % 2 == 0) {
        const long period = 2L * b;
        std::vector<int> owner(static_cast<std::size_t>(period), -1);
        for (int i = 0; i < b; ++i) {
            const long residue = floor_mod(2L * i + 1 + spec.chords[i], period);
            const int prior = owner[static_cast<std::size_t>(residue)];
            if (prior < 0) {
                owner[static_cast<std::size_t>(residue)] = i;
                continue;
            }
            const long target = floor_mod(2L * i + spec.chords[i], order) + 1;
            const long other = floor_mod(target - 1 - spec.chords[prior], order) + 1;
            const long lo = std::min<long>(other, 2L * i + 1);
            const long hi = std::max<long>(other, 2L * i + 1);
            add(ViolationCode::NotAMatching, i + 1, spec.chords[i],
                "labels " + std::to_string(lo) + " and " + std::to_string(hi) +
                    " both chord to " + std::to_string(target));
        }
    }
    return report;
}

void require_valid(const ChordIndexSpec& spec) {
    const auto report = validate_spec(spec);
    if (!report.valid()) {
        throw Error(ErrorCode::InvalidSpec, to_string(spec) + " " + report.to_string());
    }
}

std::vector<int> expand_indices(const ChordIndexSpec& spec) {
    const auto report = validate_spec(spec);
    for (const auto& v : report.violations) {
        if (v.code != ViolationCode::NotAMatching) {
            throw Error(ErrorCode::InvalidSpec, to_string(spec) + " " + report.to_string());
        }
    }
    const int m = spec.half_order();
    std::vector<int> out(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        out[static_cast<std::size_t>(i)] = spec.chords[static_cast<std::size_t>(i % spec.sym_factor)];
    }
    return out;
}

ChordIndexSpec expand_to_full(const ChordIndexSpec& spec) {
    return {spec.order, spec.half_order(), expand_indices(spec)};
}

Label prev_label(Label x, int order) {
    if (order < 1 || x < 1 || x > order) {
        throw Error(ErrorCode::LabelOutOfRange,
                    "label " + std::to_string(x) + " outside 1.." + std::to_string(order));
    }
    return x == 1 ? order : x - 1;
}

Label next_label(Label x, int order) {
    if (order < 1 || x < 1 || x > order) {
        throw Error(ErrorCode::LabelOutOfRange,
                    "label " + std::to_string(x) + " outside 1.." + std::to_string(order));
    }
    return x == order ? 1 : x + 1;
}

Label chord_target(Label x, const ChordIndexSpec& spec) {
    require_valid(spec);
    const int order = spec.order;
    if (x < 1 || x > order) {
        throw Error(ErrorCode::LabelOutOfRange,
                    "label " + std::to_string(x) + " outside 1.." + std::to_string(order));
    }
    const int b = spec.sym_factor;
    if (x % 2 == 1) {
        const int j = (x + 1) / 2;
        const int d = spec.chords[static_cast<std::size_t>((j - 1) % b)];
        return static_cast<Label>(floor_mod(static_cast<long>(x) + d - 1, order) + 1);
    }
    const long period = 2L * b;
    for (int i = 0; i < b; ++i) {
        const int d = spec.chords[static_cast<std::size_t>(i)];
        if (floor_mod(2L * i + 1 + d - x, period) == 0) {
            return static_cast<Label>(floor_mod(static_cast<long>(x) - d - 1, order) + 1);
        }
    }
    throw Error(ErrorCode::InvalidSpec, "no chord reaches label " + std::to_string(x));
}

std::string format_chords(const std::vector<int>& chords) {
    std::string out;
    for (std::size_t i = 0; i < chords.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(chords[i]);
    }
    return out;
}

std::string to_string(const ChordIndexSpec& spec) {
    return "(order=" + std::to_string(spec.order) + ", b=" + std::to_string(spec.sym_factor) +
           ", d=[" + format_chords(spec.chords) + "])";
}

}  // namespace hbg
