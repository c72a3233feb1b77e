#ifndef LISTACCESS_CLASSIC_HPP
#define LISTACCESS_CLASSIC_HPP

#include "listaccess/core_model.hpp"
#include "listaccess/cost_models.hpp"
#include "listaccess/trace.hpp"

#include <optional>
#include <string_view>
#include <vector>

namespace listaccess
{

enum class Algorithm
{
    Static,
    Mtf,
    Transpose,
    FrequencyCount,
};

std::string_view algorithm_token(Algorithm a);

/// Parses `static`, `mtf`, `transpose` or `fc`; nullopt otherwise.
std::optional<Algorithm> parse_algorithm(std::string_view token);

/*
 * Mutable list ordering for the self-organizing algorithms. counts()[k] is
 * the access count of ordering()[k], so the two vectors always move
 * together.
 */
class ListState
{
public:
    explicit ListState(ListConfig const & list);

    std::vector<Element> const & ordering() const noexcept { return ordering_; }
    std::vector<Cost> const & counts() const noexcept { return counts_; }

    /// 1-based current position; throws NotInList.
    std::size_t position_of(Element const & x) const;
    Cost count_of(Element const & x) const;

    /// Moves the element at `from` to `to` (1-based, to <= from), shifting
    /// the elements in between back by one.
    void move_forward(std::size_t from, std::size_t to);

    void increment(std::size_t position) { ++counts_[position - 1]; }

private:
    std::vector<Element> ordering_;
    std::vector<Cost> counts_;
};

struct ClassicResult
{
    CostBreakdown costs;
    Trace trace;
    ListState final_state;
};

/// Throws InvalidWorkload, or Unsupported for a non-static algorithm under
/// the centralized model. The workload's buffer capacity is ignored.
ClassicResult run_classic(Algorithm algorithm, CostModel const & model, Workload const & workload);

} // namespace listaccess

#endif
