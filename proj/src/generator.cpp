#include "listaccess/generator.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

namespace listaccess
{

std::uint64_t SplitMix64::next()
{
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::uint64_t SplitMix64::below(std::uint64_t bound)
{
    // reject the low residue class so that r % bound is exactly uniform
    std::uint64_t const threshold = (0 - bound) % bound;
    for (;;) {
        auto r = next();
        if (r >= threshold)
            return r % bound;
    }
}

double SplitMix64::unit()
{
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

std::string GeneratorSpec::distribution_token() const
{
    switch (distribution) {
    case Distribution::Uniform:
        return "uniform";
    case Distribution::Zipf: {
        std::ostringstream ss;
        ss << "zipf:" << zipf_skew;
        return ss.str();
    }
    case Distribution::Burst:
        return "burst:" + std::to_string(burst_run_length);
    case Distribution::Reverse:
        return "reverse";
    }
    return {};
}

void GeneratorSpec::set_distribution(std::string_view token)
{
    auto const colon = token.find(':');
    auto const name = token.substr(0, colon);
    auto const arg = colon == std::string_view::npos ? std::string_view{} : token.substr(colon + 1);

    if (name == "uniform" || name == "reverse") {
        if (colon != std::string_view::npos)
            throw InvalidSpec("distribution '" + std::string(name) + "' takes no parameter");
        distribution = name == "uniform" ? Distribution::Uniform : Distribution::Reverse;
    } else if (name == "zipf") {
        double s = 0;
        auto [end, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), s);
        if (arg.empty() || ec != std::errc{} || end != arg.data() + arg.size() || !std::isfinite(s) ||
            s <= 0)
            throw InvalidSpec("zipf skew must be a positive number, got '" + std::string(arg) + "'");
        distribution = Distribution::Zipf;
        zipf_skew = s;
    } else if (name == "burst") {
        std::size_t r = 0;
        auto [end, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), r);
        if (arg.empty() || ec != std::errc{} || end != arg.data() + arg.size() || r < 1)
            throw InvalidSpec("burst run length must be a positive integer, got '" +
                              std::string(arg) + "'");
        distribution = Distribution::Burst;
        burst_run_length = r;
    } else {
        throw InvalidSpec("unknown distribution '" + std::string(token) + "'");
    }
}

void validate_spec(GeneratorSpec const & spec)
{
    using D = GeneratorSpec::Distribution;
    if (spec.list_size < 1)
        throw InvalidSpec("list size must be at least 1");
    if (spec.distribution == D::Zipf && !(spec.zipf_skew > 0 && std::isfinite(spec.zipf_skew)))
        throw InvalidSpec("zipf skew must be positive");
    if (spec.distribution == D::Burst && spec.burst_run_length < 1)
        throw InvalidSpec("burst run length must be at least 1");
    if (spec.distribution == D::Reverse && spec.length != spec.list_size)
        throw InvalidSpec("reverse requires length equal to list size");
}

Element element_name(std::size_t position)
{
    if (position < 1)
        throw OutOfRange("element positions start at 1");
    if (position <= 26)
        return Element(std::string(1, static_cast<char>('A' + position - 1)));
    return Element("E" + std::to_string(position));
}

Workload generate(GeneratorSpec const & spec)
{
    using D = GeneratorSpec::Distribution;
    validate_spec(spec);

    std::vector<Element> elements;
    elements.reserve(spec.list_size);
    for (std::size_t p = 1; p <= spec.list_size; ++p)
        elements.push_back(element_name(p));

    SplitMix64 rng(spec.seed);
    RequestSequence requests;
    requests.reserve(spec.length);

    switch (spec.distribution) {
    case D::Uniform:
        for (std::size_t t = 0; t < spec.length; ++t)
            requests.push_back(elements[rng.below(spec.list_size)]);
        break;
    case D::Zipf: {
        // cumulative weights r^-s for ranks 1..l; rank r is list position r
        std::vector<double> cdf(spec.list_size);
        double sum = 0;
        for (std::size_t r = 1; r <= spec.list_size; ++r) {
            sum += std::pow(static_cast<double>(r), -spec.zipf_skew);
            cdf[r - 1] = sum;
        }
        for (std::size_t t = 0; t < spec.length; ++t) {
            auto u = rng.unit() * sum;
            auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
            auto idx = std::min<std::size_t>(static_cast<std::size_t>(it - cdf.begin()),
                                             spec.list_size - 1);
            requests.push_back(elements[idx]);
        }
        break;
    }
    case D::Burst:
        while (requests.size() < spec.length) {
            auto const & e = elements[rng.below(spec.list_size)];
            for (std::size_t r = 0; r < spec.burst_run_length && requests.size() < spec.length; ++r)
                requests.push_back(e);
        }
        break;
    case D::Reverse:
        requests.assign(elements.rbegin(), elements.rend());
        break;
    }

    return Workload{ListConfig(std::move(elements)), std::move(requests), spec.buffer_capacity};
}

} // namespace listaccess
