#include "listaccess/amr.hpp"

#include <algorithm>

namespace listaccess
{

LookaheadWindow LookaheadWindow::after(std::size_t t, std::size_t i, std::size_t n)
{
    LookaheadWindow w;
    w.start = t + 1;
    w.end = std::min(t + i, n);
    return w;
}

std::vector<MatchPair> match_parallel(ListConfig const & list, std::size_t i,
                                      RequestSequence const & requests, std::size_t t)
{
    auto const n = requests.size();
    if (t < 1 || t > n)
        throw OutOfRange("request index " + std::to_string(t) + " outside 1.." +
                         std::to_string(n));
    if (i > list.size())
        throw OutOfRange("visited prefix " + std::to_string(i) + " longer than the list");

    std::vector<MatchPair> matches;
    auto const window = LookaheadWindow::after(t, i, n);
    for (std::size_t k = 1; k <= window.size(); ++k) {
        // requests is 0-based: R[t+k] lives at index t+k-1
        if (list.at(k) == requests[t + k - 1])
            matches.push_back({k, list.at(k)});
    }
    return matches;
}

Buffer::Buffer(std::size_t capacity) : slots_(capacity) {}

std::size_t Buffer::occupied() const noexcept
{
    return static_cast<std::size_t>(
        std::count_if(slots_.begin(), slots_.end(), [](auto const & s) { return s.has_value(); }));
}

std::optional<std::size_t> Buffer::slot_of(Element const & x) const
{
    for (std::size_t p = 0; p < slots_.size(); ++p)
        if (slots_[p] && slots_[p]->element == x)
            return p + 1;
    return std::nullopt;
}

Buffer::InsertResult Buffer::insert(std::span<MatchPair const> candidates)
{
    std::vector<MatchPair> fresh;
    for (auto const & c : candidates)
        if (!contains(c.element))
            fresh.push_back(c);

    std::sort(fresh.begin(), fresh.end(), [](auto const & a, auto const & b) { return a.k < b.k; });
    if (fresh.size() > capacity())
        fresh.erase(fresh.begin(), fresh.end() - static_cast<std::ptrdiff_t>(capacity()));

    InsertResult result;
    for (auto const & c : fresh) {
        auto free_slot = std::find_if(slots_.begin(), slots_.end(),
                                      [](auto const & s) { return !s.has_value(); });
        std::vector<std::optional<Entry>>::iterator target;
        if (free_slot != slots_.end()) {
            target = free_slot;
        } else {
            target = std::min_element(slots_.begin(), slots_.end(), [](auto const & a, auto const & b) {
                return a->insertion_seq < b->insertion_seq;
            });
            auto slot = static_cast<std::size_t>(target - slots_.begin()) + 1;
            result.evicted.push_back({slot, (*target)->element});
            ++result.replacement_count;
        }
        *target = Entry{c.element, next_seq_++};
        result.inserted.push_back({static_cast<std::size_t>(target - slots_.begin()) + 1, c.element});
    }
    return result;
}

std::vector<std::size_t> set_flags(FlagTable & flags, LookaheadWindow const & window,
                                   Buffer const & buffer, RequestSequence const & requests)
{
    std::vector<std::size_t> added;
    if (window.empty())
        return added;
    for (std::size_t j = window.start; j <= window.end; ++j) {
        if (buffer.contains(requests[j - 1])) {
            flags.flag(j);
            added.push_back(j);
        }
    }
    return added;
}

AmrResult serve_amr(Workload const & workload)
{
    require_valid(workload);

    auto const & list = workload.list;
    auto const & requests = workload.requests;
    auto const n = requests.size();

    AmrResult result;
    result.trace.reserve(n);
    Buffer buffer(workload.buffer_capacity);
    FlagTable flags(n);

    for (std::size_t t = 1; t <= n; ++t) {
        auto const & x = requests[t - 1];
        TraceEvent ev{t, x};

        if (flags.is_flagged(t)) {
            if (auto slot = buffer.slot_of(x)) {
                ev.source = Source::Buffer;
                ev.position = *slot;
                ev.cost = *slot;
                result.costs.access += ev.cost;
                result.trace.push_back(std::move(ev));
                continue;
            }
            // stale flag: the element was evicted after being flagged
        }

        auto const i = position(list, x);
        ev.source = Source::List;
        ev.position = i;
        ev.cost = i;

        ev.matched = match_parallel(list, i, requests, t);
        auto placed = buffer.insert(ev.matched);
        ev.inserted = std::move(placed.inserted);
        ev.evicted = std::move(placed.evicted);
        ev.flags_added = set_flags(flags, LookaheadWindow::after(t, i, n), buffer, requests);

        result.costs.access += ev.cost;
        result.costs.matching += ev.matched.size();
        result.costs.replacement += placed.replacement_count;
        result.trace.push_back(std::move(ev));
    }
    return result;
}

} // namespace listaccess
