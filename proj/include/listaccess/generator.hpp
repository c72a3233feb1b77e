#ifndef LISTACCESS_GENERATOR_HPP
#define LISTACCESS_GENERATOR_HPP

#include "listaccess/core_model.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace listaccess
{

class InvalidSpec : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

/*
 * SplitMix64 (Steele, Lea, Flood 2014). The stream for a given seed is
 * fixed by this definition, so generated workloads are identical on every
 * platform:
 *
 *   state += 0x9E3779B97F4A7C15
 *   z = state
 *   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
 *   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
 *   return z ^ (z >> 31)
 */
class SplitMix64
{
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next();

    /// Uniform integer in [0, bound) by rejection; bound > 0.
    std::uint64_t below(std::uint64_t bound);

    /// Uniform double in [0, 1) from the top 53 bits.
    double unit();

private:
    std::uint64_t state_;
};

struct GeneratorSpec
{
    enum class Distribution
    {
        Uniform,
        Zipf,
        Burst,
        Reverse,
    };

    Distribution distribution = Distribution::Uniform;
    double zipf_skew = 1.0;
    std::size_t burst_run_length = 1;
    std::size_t list_size = 1;
    std::size_t length = 0;
    std::uint64_t seed = 0;
    std::size_t buffer_capacity = 3;

    /// `uniform`, `zipf:<s>`, `burst:<run>` or `reverse`.
    std::string distribution_token() const;
    /// Sets distribution and its parameter from a token; throws InvalidSpec.
    void set_distribution(std::string_view token);
};

/// Throws InvalidSpec describing the first problem.
void validate_spec(GeneratorSpec const & spec);

/// A..Z for the first 26 positions, then E27, E28, ...
Element element_name(std::size_t position);

Workload generate(GeneratorSpec const & spec);

} // namespace listaccess

#endif
