#include "listaccess/core_model.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>

namespace listaccess
{

namespace
{

bool is_space(char c)
{
    return std::isspace(static_cast<unsigned char>(c)) != 0;
}

std::string_view trim(std::string_view s)
{
    while (!s.empty() && is_space(s.front()))
        s.remove_prefix(1);
    while (!s.empty() && is_space(s.back()))
        s.remove_suffix(1);
    return s;
}

std::string join(std::vector<Element> const & elements)
{
    std::string out;
    for (auto const & e : elements) {
        if (!out.empty())
            out += ' ';
        out += e.token();
    }
    return out;
}

} // namespace

NotInList::NotInList(std::string const & token)
    : std::runtime_error("element '" + token + "' is not in the list"), token_(token)
{
}

ParseError::ParseError(std::size_t line, std::string reason)
    : std::runtime_error("line " + std::to_string(line) + ": " + reason), line_(line),
      reason_(std::move(reason))
{
}

Element::Element(std::string token) : token_(std::move(token))
{
    if (token_.empty())
        throw std::invalid_argument("element token must not be empty");
    if (std::any_of(token_.begin(), token_.end(), is_space))
        throw std::invalid_argument("element token '" + token_ + "' contains whitespace");
}

ListConfig::ListConfig(std::vector<Element> elements) : elements_(std::move(elements))
{
    index_.reserve(elements_.size());
    for (std::size_t k = 0; k < elements_.size(); ++k)
        index_.try_emplace(elements_[k], k + 1);
}

Element const & ListConfig::at(std::size_t position) const
{
    if (position < 1 || position > elements_.size())
        throw OutOfRange("list position " + std::to_string(position) + " outside 1.." +
                         std::to_string(elements_.size()));
    return elements_[position - 1];
}

bool ListConfig::contains(Element const & x) const
{
    return index_.contains(x);
}

std::size_t position(ListConfig const & list, Element const & x)
{
    auto it = list.index_.find(x);
    if (it == list.index_.end())
        throw NotInList(x.token());
    return it->second;
}

ValidationReport validate_workload(Workload const & w)
{
    using Kind = ValidationIssue::Kind;
    ValidationReport report;

    if (w.list.empty())
        report.errors.push_back({Kind::EmptyList, "list is empty"});

    std::set<Element> seen;
    std::set<Element> reported;
    for (auto const & e : w.list.elements()) {
        if (!seen.insert(e).second && reported.insert(e).second)
            report.errors.push_back(
                {Kind::DuplicateElement, "duplicate list element '" + e.token() + "'"});
    }

    reported.clear();
    for (std::size_t t = 0; t < w.requests.size(); ++t) {
        auto const & x = w.requests[t];
        if (!w.list.contains(x) && reported.insert(x).second)
            report.errors.push_back({Kind::UnknownRequest, "request " + std::to_string(t + 1) +
                                                               ": element '" + x.token() +
                                                               "' is not in the list"});
    }

    if (w.requests.size() < w.list.size())
        report.warnings.push_back(
            {Kind::FewerRequestsThanElements,
             "request count " + std::to_string(w.requests.size()) + " is below list size " +
                 std::to_string(w.list.size())});

    return report;
}

void require_valid(Workload const & w)
{
    auto report = validate_workload(w);
    if (!report.valid())
        throw InvalidWorkload(report.errors.front().message);
}

std::vector<Element> tokenize(std::string_view text)
{
    std::vector<Element> out;
    std::size_t k = 0;
    while (k < text.size()) {
        while (k < text.size() && is_space(text[k]))
            ++k;
        std::size_t begin = k;
        while (k < text.size() && !is_space(text[k]))
            ++k;
        if (k > begin)
            out.emplace_back(std::string(text.substr(begin, k - begin)));
    }
    return out;
}

Workload parse_workload(std::string_view text)
{
    std::optional<std::vector<Element>> list;
    std::optional<std::vector<Element>> requests;
    std::optional<std::size_t> buffer;

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto eol = text.find('\n', pos);
        if (eol == std::string_view::npos)
            eol = text.size();
        auto line = trim(text.substr(pos, eol - pos));
        pos = eol + 1;
        ++line_no;

        if (line.empty() || line.front() == '#')
            continue;

        auto colon = line.find(':');
        if (colon == std::string_view::npos)
            throw ParseError(line_no, "expected 'key: value'");
        auto key = trim(line.substr(0, colon));
        auto value = trim(line.substr(colon + 1));

        if (key == "list") {
            if (list)
                throw ParseError(line_no, "duplicate 'list' line");
            list = tokenize(value);
        } else if (key == "requests") {
            if (requests)
                throw ParseError(line_no, "duplicate 'requests' line");
            requests = tokenize(value);
        } else if (key == "buffer") {
            if (buffer)
                throw ParseError(line_no, "duplicate 'buffer' line");
            std::size_t b = 0;
            auto [end, ec] = std::from_chars(value.data(), value.data() + value.size(), b);
            if (value.empty() || ec != std::errc{} || end != value.data() + value.size())
                throw ParseError(line_no, "buffer must be a non-negative integer, got '" +
                                              std::string(value) + "'");
            buffer = b;
        } else {
            throw ParseError(line_no, "unknown key '" + std::string(key) + "'");
        }
    }

    if (!list)
        throw ParseError(line_no, "missing 'list' line");
    if (!buffer)
        throw ParseError(line_no, "missing 'buffer' line");
    if (!requests)
        throw ParseError(line_no, "missing 'requests' line");

    return Workload{ListConfig(std::move(*list)), std::move(*requests), *buffer};
}

std::string serialize_workload(Workload const & w)
{
    auto line = [](std::string_view key, std::string const & value) {
        std::string out(key);
        out += ':';
        if (!value.empty()) {
            out += ' ';
            out += value;
        }
        out += '\n';
        return out;
    };
    return line("list", join(w.list.elements())) +
           line("buffer", std::to_string(w.buffer_capacity)) +
           line("requests", join(w.requests));
}

Workload load_workload(std::string const & path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open workload file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_workload(ss.str());
}

void save_workload(std::string const & path, Workload const & w)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot write workload file '" + path + "'");
    out << serialize_workload(w);
}

} // namespace listaccess
