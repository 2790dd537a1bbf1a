#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>

#include <nlohmann/json_fwd.hpp>

namespace qeb {

/**
 * Measurement histogram over `num_bits`-wide outcomes.
 *
 * Outcomes are stored as integers with qubit 0 in the least significant bit.
 * The bitstring form writes qubit 0 as the rightmost character, so outcome 1
 * on two qubits is "01".
 */
class Counts {
public:
    using Outcome = std::uint64_t;
    using Map = std::map<Outcome, std::uint64_t>;

    explicit Counts(std::size_t num_bits);

    void add(Outcome outcome, std::uint64_t n = 1);
    /// Adds by bitstring; throws std::invalid_argument on bad length or characters.
    void add(std::string_view bitstring, std::uint64_t n = 1);

    [[nodiscard]] std::size_t num_bits() const noexcept { return num_bits_; }
    [[nodiscard]] std::uint64_t total() const noexcept { return total_; }
    [[nodiscard]] bool empty() const noexcept { return total_ == 0; }
    [[nodiscard]] std::uint64_t at(Outcome outcome) const noexcept;
    [[nodiscard]] const Map& data() const noexcept { return counts_; }

    [[nodiscard]] auto begin() const noexcept { return counts_.begin(); }
    [[nodiscard]] auto end() const noexcept { return counts_.end(); }

    [[nodiscard]] std::string bitstring(Outcome outcome) const;
    [[nodiscard]] Outcome parse_bitstring(std::string_view bits) const;

    /// {"bitstring": count, ...}
    [[nodiscard]] nlohmann::json to_json() const;
    /// Inverse of to_json. All keys must share one length.
    [[nodiscard]] static Counts from_json(const nlohmann::json& j);

    friend bool operator==(const Counts&, const Counts&) = default;

private:
    std::size_t num_bits_;
    std::uint64_t total_ = 0;
    Map counts_;
};

}  // namespace qeb
