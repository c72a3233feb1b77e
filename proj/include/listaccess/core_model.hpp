#ifndef LISTACCESS_CORE_MODEL_HPP
#define LISTACCESS_CORE_MODEL_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace listaccess
{

using Cost = std::uint64_t;

/*
 * Error types shared by every engine. All derive from std::runtime_error so
 * callers that do not care about the category can catch one type.
 */
class NotInList : public std::runtime_error
{
public:
    explicit NotInList(std::string const & token);
    std::string const & token() const noexcept { return token_; }

private:
    std::string token_;
};

class ParseError : public std::runtime_error
{
public:
    ParseError(std::size_t line, std::string reason);
    std::size_t line() const noexcept { return line_; }
    std::string const & reason() const noexcept { return reason_; }

private:
    std::size_t line_;
    std::string reason_;
};

class InvalidWorkload : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

class Unsupported : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

class OutOfRange : public std::out_of_range
{
public:
    using std::out_of_range::out_of_range;
};

/// An opaque, whitespace-free, non-empty token.
class Element
{
public:
    explicit Element(std::string token);

    std::string const & token() const noexcept { return token_; }

    friend bool operator==(Element const &, Element const &) = default;
    friend auto operator<=>(Element const &, Element const &) = default;

private:
    std::string token_;
};

struct ElementHash
{
    std::size_t operator()(Element const & e) const noexcept
    {
        return std::hash<std::string>{}(e.token());
    }
};

/*
 * The fixed input list. Positions are 1-based: the front element has
 * position 1. Distinctness is checked by validate_workload rather than the
 * constructor, so that malformed workloads can still be loaded and reported.
 */
class ListConfig
{
public:
    ListConfig() = default;
    explicit ListConfig(std::vector<Element> elements);

    std::vector<Element> const & elements() const noexcept { return elements_; }
    std::size_t size() const noexcept { return elements_.size(); }
    bool empty() const noexcept { return elements_.empty(); }

    /// 1-based element access.
    Element const & at(std::size_t position) const;

    bool contains(Element const & x) const;

    friend bool operator==(ListConfig const & a, ListConfig const & b)
    {
        return a.elements_ == b.elements_;
    }

private:
    friend std::size_t position(ListConfig const & list, Element const & x);

    std::vector<Element> elements_;
    // first occurrence of each token
    std::unordered_map<Element, std::size_t, ElementHash> index_;
};

/// Position of x in the list, 1-based. Throws NotInList.
std::size_t position(ListConfig const & list, Element const & x);

using RequestSequence = std::vector<Element>;

struct Workload
{
    ListConfig list;
    RequestSequence requests;
    std::size_t buffer_capacity = 0;

    friend bool operator==(Workload const &, Workload const &) = default;
};

struct ValidationIssue
{
    enum class Kind
    {
        EmptyList,
        DuplicateElement,
        UnknownRequest,
        FewerRequestsThanElements,
    };

    Kind kind;
    std::string message;
};

struct ValidationReport
{
    std::vector<ValidationIssue> errors;
    std::vector<ValidationIssue> warnings;

    bool valid() const noexcept { return errors.empty(); }
};

ValidationReport validate_workload(Workload const & w);

/// Throws InvalidWorkload carrying the first error when w is not valid.
void require_valid(Workload const & w);

/// Splits a text into whitespace-separated element tokens.
std::vector<Element> tokenize(std::string_view text);

Workload parse_workload(std::string_view text);
std::string serialize_workload(Workload const & w);

Workload load_workload(std::string const & path);
void save_workload(std::string const & path, Workload const & w);

} // namespace listaccess

#endif
