#ifndef LISTACCESS_AMR_HPP
#define LISTACCESS_AMR_HPP

/*
 * Buffered look-ahead list access with the access/matching/replacement
 * (AMR) cost model.
 *
 * The list is never rearranged. A request that is not served from the
 * buffer is found by scanning from the front (cost = list position i). The
 * visited prefix L[1..i] is then compared position by position with the
 * next i requests; every k with L[k] == R[t+k] is a match and costs 1.
 * Matched elements go into a fixed-slot buffer (FIFO eviction, each eviction
 * costs 1) and every look-ahead position whose element is buffered gets a
 * flag. A flagged request whose element is still buffered at slot p is
 * served from the buffer at cost p.
 */

#include "listaccess/core_model.hpp"
#include "listaccess/trace.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace listaccess
{

/// Request window R[start..end], 1-based and inclusive; empty when start > end.
struct LookaheadWindow
{
    std::size_t start = 1;
    std::size_t end = 0;

    /// Window following request t whose element sits at list position i.
    static LookaheadWindow after(std::size_t t, std::size_t i, std::size_t n);

    std::size_t size() const noexcept { return end >= start ? end - start + 1 : 0; }
    bool empty() const noexcept { return size() == 0; }
};

/// Positional comparison of L[1..i] against R[t+1..t+i] (truncated at n).
/// Requires 1 <= t <= n; i is the position of requests[t] in the list.
std::vector<MatchPair> match_parallel(ListConfig const & list, std::size_t i,
                                      RequestSequence const & requests, std::size_t t);

class Buffer
{
public:
    struct Entry
    {
        Element element;
        std::uint64_t insertion_seq;
    };

    struct InsertResult
    {
        std::vector<Placement> inserted;
        std::vector<Placement> evicted;
        std::size_t replacement_count = 0;
    };

    explicit Buffer(std::size_t capacity);

    std::size_t capacity() const noexcept { return slots_.size(); }
    std::size_t occupied() const noexcept;

    /// 1-based slot holding x, if any.
    std::optional<std::size_t> slot_of(Element const & x) const;
    bool contains(Element const & x) const { return slot_of(x).has_value(); }

    std::vector<std::optional<Entry>> const & slots() const noexcept { return slots_; }

    /*
     * Already-buffered candidates are dropped. If more remain than the
     * capacity, only those with the largest list positions are kept. The
     * survivors are inserted in increasing-k order, each into the lowest
     * free slot or else into the slot of the oldest entry, which is evicted.
     */
    InsertResult insert(std::span<MatchPair const> candidates);

private:
    std::vector<std::optional<Entry>> slots_;
    std::uint64_t next_seq_ = 0;
};

class FlagTable
{
public:
    explicit FlagTable(std::size_t request_count) : flagged_(request_count + 1, false) {}

    bool is_flagged(std::size_t position) const
    {
        return position < flagged_.size() && flagged_[position];
    }
    void flag(std::size_t position) { flagged_.at(position) = true; }

private:
    std::vector<bool> flagged_;
};

/// Flags every window position whose request is currently buffered and
/// returns those positions (including ones that were already flagged).
std::vector<std::size_t> set_flags(FlagTable & flags, LookaheadWindow const & window,
                                   Buffer const & buffer, RequestSequence const & requests);

struct AmrResult
{
    CostBreakdown costs;
    Trace trace;
};

/// Throws InvalidWorkload for an invalid workload.
AmrResult serve_amr(Workload const & workload);

} // namespace listaccess

#endif
