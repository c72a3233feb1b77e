#ifndef LISTACCESS_TESTS_AMR_TRACE_CHECKER_HPP
#define LISTACCESS_TESTS_AMR_TRACE_CHECKER_HPP

// Test-only replay of an AMR trace. It rebuilds the buffer and flag state
// from the recorded events alone and checks them against the serving rules,
// without calling into the engine.

#include "listaccess/amr.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace listaccess::testing
{

/// Every k in 1..min(i, n - t) with L[k] == R[t + k]; t is 1-based.
inline std::vector<std::pair<std::size_t, std::string>>
reference_matches(Workload const & w, std::size_t t)
{
    auto const & L = w.list.elements();
    auto const & R = w.requests;
    std::size_t i = 0;
    while (L[i].token() != R[t - 1].token())
        ++i;
    ++i;
    std::vector<std::pair<std::size_t, std::string>> out;
    for (std::size_t k = 1; k <= i && t + k <= R.size(); ++k)
        if (L[k - 1].token() == R[t + k - 1].token())
            out.emplace_back(k, L[k - 1].token());
    return out;
}

/// True when no request of w produces a positional match.
inline bool has_no_matches(Workload const & w)
{
    for (std::size_t t = 1; t <= w.requests.size(); ++t)
        if (!reference_matches(w, t).empty())
            return false;
    return true;
}

inline std::optional<std::string> check_amr_trace(Workload const & w, AmrResult const & result)
{
    std::ostringstream problem;
    auto fail = [&](std::size_t t, std::string const & what) {
        problem << "t=" << t << ": " << what;
        return std::optional<std::string>(problem.str());
    };

    auto const B = w.buffer_capacity;
    auto const n = w.requests.size();
    struct Slot
    {
        std::string element;
        std::size_t seq;
    };
    std::vector<std::optional<Slot>> slots(B);
    std::size_t seq = 0;
    std::set<std::size_t> flagged;
    std::map<std::string, std::size_t> list_position;
    Cost access = 0, matching = 0, replacement = 0;

    auto slot_of = [&](std::string const & x) -> std::optional<std::size_t> {
        for (std::size_t p = 0; p < slots.size(); ++p)
            if (slots[p] && slots[p]->element == x)
                return p + 1;
        return std::nullopt;
    };

    if (result.trace.size() != n)
        return fail(0, "trace length differs from request count");

    for (std::size_t t = 1; t <= n; ++t) {
        auto const & ev = result.trace[t - 1];
        auto const & x = w.requests[t - 1].token();
        if (ev.t != t || ev.element.token() != x)
            return fail(t, "event does not describe request t");
        access += ev.cost;

        auto present = slot_of(x);
        bool const hit_expected = flagged.contains(t) && present.has_value();

        if (ev.source == Source::Buffer) {
            if (!flagged.contains(t))
                return fail(t, "buffer hit on an unflagged position");
            if (!present || *present != ev.position)
                return fail(t, "buffer hit does not find the element at the reported slot");
            if (ev.cost != ev.position)
                return fail(t, "buffer hit cost differs from slot index");
            if (!ev.matched.empty() || !ev.inserted.empty() || !ev.evicted.empty() ||
                !ev.flags_added.empty())
                return fail(t, "buffer hit carries list-access side effects");
            continue;
        }

        if (hit_expected)
            return fail(t, "flagged buffered request was served from the list");
        auto [it, first_seen] = list_position.try_emplace(x, ev.position);
        if (!first_seen && it->second != ev.position)
            return fail(t, "list position of " + x + " changed");
        if (w.list.at(ev.position).token() != x || ev.cost != ev.position)
            return fail(t, "list access cost is not the element's list position");

        auto expected = reference_matches(w, t);
        if (expected.size() != ev.matched.size())
            return fail(t, "match count differs from reference");
        for (std::size_t m = 0; m < expected.size(); ++m)
            if (expected[m].first != ev.matched[m].k ||
                expected[m].second != ev.matched[m].element.token())
                return fail(t, "matched pair differs from reference");
        matching += ev.matched.size();

        std::vector<std::pair<std::size_t, std::string>> fresh;
        for (auto const & m : expected)
            if (!slot_of(m.second))
                fresh.push_back(m);
        if (fresh.size() > B)
            fresh.erase(fresh.begin(), fresh.end() - static_cast<std::ptrdiff_t>(B));
        if (fresh.size() != ev.inserted.size())
            return fail(t, "inserted count differs from capped fresh candidates");
        for (std::size_t m = 0; m < fresh.size(); ++m)
            if (fresh[m].second != ev.inserted[m].element.token())
                return fail(t, "inserted elements are not the largest-k fresh candidates");

        std::size_t evictions_seen = 0;
        for (auto const & p : ev.inserted) {
            if (p.slot < 1 || p.slot > B)
                return fail(t, "insert into a nonexistent slot");
            auto e = std::find_if(ev.evicted.begin(), ev.evicted.end(),
                                  [&](auto const & q) { return q.slot == p.slot; });
            if (e != ev.evicted.end()) {
                auto & victim = slots[p.slot - 1];
                if (!victim || victim->element != e->element.token())
                    return fail(t, "evicted entry is not at its reported slot");
                if (std::any_of(slots.begin(), slots.end(), [](auto const & s) { return !s; }))
                    return fail(t, "eviction while a slot was free");
                for (auto const & s : slots)
                    if (s->seq < victim->seq)
                        return fail(t, "eviction is not FIFO");
                ++evictions_seen;
                ++replacement;
            } else {
                if (slots[p.slot - 1])
                    return fail(t, "insert into an occupied slot without eviction");
                for (std::size_t q = 1; q < p.slot; ++q)
                    if (!slots[q - 1])
                        return fail(t, "insert skipped a lower free slot");
            }
            slots[p.slot - 1] = Slot{p.element.token(), seq++};
        }
        if (evictions_seen != ev.evicted.size())
            return fail(t, "eviction without a matching insert");
        std::set<std::string> distinct;
        std::size_t occupied = 0;
        for (auto const & s : slots)
            if (s) {
                ++occupied;
                if (!distinct.insert(s->element).second)
                    return fail(t, "duplicate element in buffer");
            }
        if (occupied > B)
            return fail(t, "buffer over capacity");

        auto const window_end = std::min(t + ev.position, n);
        std::set<std::size_t> expected_flags;
        for (std::size_t j = t + 1; j <= window_end; ++j)
            if (slot_of(w.requests[j - 1].token()))
                expected_flags.insert(j);
        if (std::set<std::size_t>(ev.flags_added.begin(), ev.flags_added.end()) != expected_flags)
            return fail(t, "flags differ from buffered window positions");
        flagged.insert(ev.flags_added.begin(), ev.flags_added.end());
    }

    auto const & c = result.costs;
    if (c.access != access || c.matching != matching || c.replacement != replacement)
        return fail(n, "cost components differ from trace sums");
    if (c.exchange != 0)
        return fail(n, "AMR run charged exchange cost");
    if (c.total() != access + matching + replacement)
        return fail(n, "total is not the sum of components");
    return std::nullopt;
}

} // namespace listaccess::testing

#endif
