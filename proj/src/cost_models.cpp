#include "listaccess/cost_models.hpp"

#include <charconv>

namespace listaccess
{

CostModel CostModel::pd(Cost d)
{
    if (d < 1)
        throw std::invalid_argument("pd model requires d >= 1");
    return CostModel(Kind::Pd, d);
}

CostModel CostModel::parse(std::string_view token)
{
    if (token == "full")
        return full();
    if (token == "partial")
        return partial();
    if (token == "centralized")
        return centralized();
    if (token.starts_with("pd:")) {
        auto digits = token.substr(3);
        Cost d = 0;
        auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), d);
        if (!digits.empty() && ec == std::errc{} && end == digits.data() + digits.size() && d >= 1)
            return pd(d);
        throw std::invalid_argument("invalid pd model '" + std::string(token) +
                                    "': expected pd:<d> with d >= 1");
    }
    throw std::invalid_argument("unknown cost model '" + std::string(token) + "'");
}

std::string CostModel::token() const
{
    switch (kind_) {
    case Kind::Full:
        return "full";
    case Kind::Partial:
        return "partial";
    case Kind::Pd:
        return "pd:" + std::to_string(d_);
    case Kind::Centralized:
        return "centralized";
    }
    return {};
}

std::size_t center_position(std::size_t list_length)
{
    // ceil((l + 1) / 2); for even l this is the lower middle.
    return (list_length + 2) / 2;
}

Cost access_cost(CostModel const & model, std::size_t i, std::size_t l)
{
    if (i < 1 || i > l)
        throw OutOfRange("position " + std::to_string(i) + " outside 1.." + std::to_string(l));

    switch (model.kind()) {
    case CostModel::Kind::Full:
    case CostModel::Kind::Pd:
        return i;
    case CostModel::Kind::Partial:
        return i - 1;
    case CostModel::Kind::Centralized: {
        auto c = center_position(l);
        return i > c ? i - c : c - i;
    }
    }
    return 0;
}

Cost exchange_cost(CostModel const & model, ExchangeKind kind, Cost transposition_count)
{
    switch (model.kind()) {
    case CostModel::Kind::Full:
    case CostModel::Kind::Partial:
        return kind == ExchangeKind::FreeEligible ? 0 : transposition_count;
    case CostModel::Kind::Pd:
        return transposition_count * model.d();
    case CostModel::Kind::Centralized:
        if (kind == ExchangeKind::FreeEligible)
            return 0;
        if (transposition_count == 0)
            return 0;
        throw Unsupported("paid movement under the centralized model is not supported");
    }
    return 0;
}

} // namespace listaccess
