#ifndef LISTACCESS_COST_MODELS_HPP
#define LISTACCESS_COST_MODELS_HPP

#include "listaccess/core_model.hpp"

#include <string>
#include <string_view>

namespace listaccess
{

/*
 * Cost models for serving a request on a linear list.
 *
 *   full         access at position i costs i; free exchanges cost 0,
 *                paid exchanges cost 1 each
 *   partial      access costs i - 1 (comparisons); exchanges as full
 *   pd:<d>       access costs i; every exchange costs d, none are free
 *   centralized  access costs the distance |i - c| from the center
 *                c = ceil((l + 1) / 2); movement toward the center is free
 */
class CostModel
{
public:
    enum class Kind
    {
        Full,
        Partial,
        Pd,
        Centralized,
    };

    static CostModel full() { return CostModel(Kind::Full, 0); }
    static CostModel partial() { return CostModel(Kind::Partial, 0); }
    static CostModel pd(Cost d);
    static CostModel centralized() { return CostModel(Kind::Centralized, 0); }

    /// Parses `full`, `partial`, `pd:<d>` or `centralized`.
    static CostModel parse(std::string_view token);

    Kind kind() const noexcept { return kind_; }
    /// Per-exchange cost of the pd model; 0 otherwise.
    Cost d() const noexcept { return d_; }

    std::string token() const;

    friend bool operator==(CostModel const &, CostModel const &) = default;
    friend auto operator<=>(CostModel const &, CostModel const &) = default;

private:
    CostModel(Kind kind, Cost d) : kind_(kind), d_(d) {}

    Kind kind_;
    Cost d_;
};

enum class ExchangeKind
{
    FreeEligible, // the just-accessed item moves toward the front
    Paid,
};

/// 1-based center position used by the centralized model.
std::size_t center_position(std::size_t list_length);

/// Throws OutOfRange unless 1 <= i <= l.
Cost access_cost(CostModel const & model, std::size_t i, std::size_t l);

/// Throws Unsupported for paid movement under the centralized model.
Cost exchange_cost(CostModel const & model, ExchangeKind kind, Cost transposition_count);

} // namespace listaccess

#endif
