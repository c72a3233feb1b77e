#include "listaccess/classic.hpp"

#include <algorithm>

namespace listaccess
{

std::string_view algorithm_token(Algorithm a)
{
    switch (a) {
    case Algorithm::Static:
        return "static";
    case Algorithm::Mtf:
        return "mtf";
    case Algorithm::Transpose:
        return "transpose";
    case Algorithm::FrequencyCount:
        return "fc";
    }
    return {};
}

std::optional<Algorithm> parse_algorithm(std::string_view token)
{
    for (auto a : {Algorithm::Static, Algorithm::Mtf, Algorithm::Transpose,
                   Algorithm::FrequencyCount})
        if (algorithm_token(a) == token)
            return a;
    return std::nullopt;
}

ListState::ListState(ListConfig const & list)
    : ordering_(list.elements()), counts_(list.size(), 0)
{
}

std::size_t ListState::position_of(Element const & x) const
{
    auto it = std::find(ordering_.begin(), ordering_.end(), x);
    if (it == ordering_.end())
        throw NotInList(x.token());
    return static_cast<std::size_t>(it - ordering_.begin()) + 1;
}

Cost ListState::count_of(Element const & x) const
{
    return counts_[position_of(x) - 1];
}

void ListState::move_forward(std::size_t from, std::size_t to)
{
    if (to > from || to < 1 || from > ordering_.size())
        throw OutOfRange("invalid move from " + std::to_string(from) + " to " + std::to_string(to));
    auto first = static_cast<std::ptrdiff_t>(to - 1);
    auto last = static_cast<std::ptrdiff_t>(from);
    std::rotate(ordering_.begin() + first, ordering_.begin() + last - 1, ordering_.begin() + last);
    std::rotate(counts_.begin() + first, counts_.begin() + last - 1, counts_.begin() + last);
}

namespace
{

// Target position for the accessed element under frequency count: directly
// behind the last element whose count is still >= its new count.
std::size_t frequency_target(ListState const & state, std::size_t i)
{
    auto const & counts = state.counts();
    auto const mine = counts[i - 1];
    std::size_t target = i;
    while (target > 1 && counts[target - 2] < mine)
        --target;
    return target;
}

} // namespace

ClassicResult run_classic(Algorithm algorithm, CostModel const & model, Workload const & workload)
{
    require_valid(workload);
    if (model.kind() == CostModel::Kind::Centralized && algorithm != Algorithm::Static)
        throw Unsupported(std::string(algorithm_token(algorithm)) +
                          " under the centralized model is not supported");

    ClassicResult result{{}, {}, ListState(workload.list)};
    auto & state = result.final_state;
    auto const l = workload.list.size();
    result.trace.reserve(workload.requests.size());

    for (std::size_t t = 1; t <= workload.requests.size(); ++t) {
        auto const & x = workload.requests[t - 1];
        auto const i = state.position_of(x);

        TraceEvent ev{t, x};
        ev.source = Source::List;
        ev.position = i;
        ev.cost = access_cost(model, i, l);

        std::size_t target = i;
        switch (algorithm) {
        case Algorithm::Static:
            break;
        case Algorithm::Mtf:
            target = 1;
            break;
        case Algorithm::Transpose:
            target = i > 1 ? i - 1 : 1;
            break;
        case Algorithm::FrequencyCount:
            state.increment(i);
            target = frequency_target(state, i);
            break;
        }

        if (target < i) {
            state.move_forward(i, target);
            ev.transpositions = i - target;
            ev.exchange = exchange_cost(model, ExchangeKind::FreeEligible, ev.transpositions);
        }

        result.costs.access += ev.cost;
        result.costs.exchange += ev.exchange;
        result.trace.push_back(std::move(ev));
    }
    return result;
}

} // namespace listaccess
