#ifndef LISTACCESS_TRACE_HPP
#define LISTACCESS_TRACE_HPP

#include "listaccess/core_model.hpp"

#include <cstddef>
#include <vector>

namespace listaccess
{

struct CostBreakdown
{
    Cost access = 0;
    Cost matching = 0;
    Cost replacement = 0;
    Cost exchange = 0;

    Cost total() const noexcept { return access + matching + replacement + exchange; }

    friend bool operator==(CostBreakdown const &, CostBreakdown const &) = default;
};

enum class Source
{
    List,
    Buffer,
};

/// A (list position, element) pair produced by parallel matching.
struct MatchPair
{
    std::size_t k;
    Element element;

    friend bool operator==(MatchPair const &, MatchPair const &) = default;
};

/// An element together with the 1-based buffer slot it went into or left.
struct Placement
{
    std::size_t slot;
    Element element;

    friend bool operator==(Placement const &, Placement const &) = default;
};

/*
 * One served request. `position` is the list position for List-source
 * events and the buffer slot for Buffer-source events; `cost` is the access
 * cost charged for the step. Classical runs fill `exchange` and
 * `transpositions`; AMR runs fill the match/buffer/flag fields.
 */
struct TraceEvent
{
    std::size_t t;
    Element element;
    Source source = Source::List;
    std::size_t position = 0;
    Cost cost = 0;

    Cost exchange = 0;
    std::size_t transpositions = 0;

    std::vector<MatchPair> matched = {};
    std::vector<Placement> inserted = {};
    std::vector<Placement> evicted = {};
    std::vector<std::size_t> flags_added = {};

    friend bool operator==(TraceEvent const &, TraceEvent const &) = default;
};

using Trace = std::vector<TraceEvent>;

} // namespace listaccess

#endif
