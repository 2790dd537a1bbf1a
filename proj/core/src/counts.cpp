#include "qeb/counts.hpp"

#include <stdexcept>

#include <nlohmann/json.hpp>

namespace qeb {

Counts::Counts(std::size_t num_bits) : num_bits_(num_bits) {
    if (num_bits == 0 || num_bits > 64) {
        throw std::invalid_argument("counts width must be in [1, 64]");
    }
}

void Counts::add(Outcome outcome, std::uint64_t n) {
    if (num_bits_ < 64 && (outcome >> num_bits_) != 0) {
        throw std::out_of_range("outcome wider than " + std::to_string(num_bits_) + " bits");
    }
    if (n == 0) {
        return;
    }
    counts_[outcome] += n;
    total_ += n;
}

void Counts::add(std::string_view bitstring, std::uint64_t n) { add(parse_bitstring(bitstring), n); }

std::uint64_t Counts::at(Outcome outcome) const noexcept {
    const auto it = counts_.find(outcome);
    return it == counts_.end() ? 0 : it->second;
}

std::string Counts::bitstring(Outcome outcome) const {
    std::string s(num_bits_, '0');
    for (std::size_t q = 0; q < num_bits_; ++q) {
        if ((outcome >> q) & 1U) {
            s[num_bits_ - 1 - q] = '1';
        }
    }
    return s;
}

Counts::Outcome Counts::parse_bitstring(std::string_view bits) const {
    if (bits.size() != num_bits_) {
        throw std::invalid_argument("bitstring '" + std::string(bits) + "' has length " +
                                    std::to_string(bits.size()) + ", expected " +
                                    std::to_string(num_bits_));
    }
    Outcome out = 0;
    for (std::size_t q = 0; q < num_bits_; ++q) {
        const char c = bits[num_bits_ - 1 - q];
        if (c == '1') {
            out |= Outcome{1} << q;
        } else if (c != '0') {
            throw std::invalid_argument("bitstring '" + std::string(bits) + "' is not binary");
        }
    }
    return out;
}

nlohmann::json Counts::to_json() const {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [outcome, n] : counts_) {
        j[bitstring(outcome)] = n;
    }
    return j;
}

Counts Counts::from_json(const nlohmann::json& j) {
    if (!j.is_object() || j.empty()) {
        throw std::invalid_argument("counts JSON must be a non-empty object");
    }
    Counts counts(j.begin().key().size());
    for (const auto& [key, value] : j.items()) {
        counts.add(key, value.get<std::uint64_t>());
    }
    return counts;
}

}  // namespace qeb
