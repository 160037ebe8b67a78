#pragma once

#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace adelog {

// Position of a token in source text. Lines and columns are 1-based.
struct SourceSpan {
    int line = 1;
    int column = 1;
    int length = 0;
};

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
    ParseError(SourceSpan span, std::vector<std::string> expected, std::string found);

    const SourceSpan& span() const { return span_; }
    const std::vector<std::string>& expected() const { return expected_; }
    const std::string& found() const { return found_; }

private:
    SourceSpan span_;
    std::vector<std::string> expected_;
    std::string found_;
};

// Errors below optionally carry a span when raised by the parser; when
// raised from API calls on already-built values the span is absent.
class NameError : public Error {
public:
    NameError(std::string what, std::string name, std::optional<SourceSpan> span);
    const std::string& name() const { return name_; }
    const std::optional<SourceSpan>& span() const { return span_; }

private:
    std::string name_;
    std::optional<SourceSpan> span_;
};

class UndefinedName : public NameError {
public:
    explicit UndefinedName(const std::string& name, std::optional<SourceSpan> span = {});
};

class RedefinedName : public NameError {
public:
    explicit RedefinedName(const std::string& name, std::optional<SourceSpan> span = {});
};

class CyclicTBox : public Error {
public:
    explicit CyclicTBox(std::vector<std::string> cycle);
    const std::vector<std::string>& cycle() const { return cycle_; }

private:
    std::vector<std::string> cycle_;
};

// Model enumeration crossed its configured cap.
class BudgetExceeded : public Error {
public:
    explicit BudgetExceeded(const std::string& what) : Error(what) {}
};

// Tableau expansion crossed its node or branch budget. Reported as a
// distinct outcome, never folded into satisfiable/unsatisfiable.
class ResourceLimit : public Error {
public:
    explicit ResourceLimit(const std::string& what) : Error(what) {}
};

class UnknownView : public NameError {
public:
    explicit UnknownView(const std::string& name);
};

class UnknownWorld : public NameError {
public:
    explicit UnknownWorld(const std::string& name);
};

class UnknownEvent : public NameError {
public:
    explicit UnknownEvent(const std::string& name);
};

class EvolverViolation : public Error {
public:
    EvolverViolation(const std::string& event, const std::string& after);
    const std::string& event() const { return event_; }

private:
    std::string event_;
};

// describe() over an empty extension.
class NoSuchIndividual : public Error {
public:
    explicit NoSuchIndividual(const std::string& what) : Error(what) {}
};

// describe() over an extension with two or more members; carries the set.
class NotUnique : public Error {
public:
    explicit NotUnique(std::set<std::string> extension);
    const std::set<std::string>& extension() const { return extension_; }

private:
    std::set<std::string> extension_;
};

// A restored materialized-view cache disagrees with recomputation.
class IntegrityError : public Error {
public:
    explicit IntegrityError(const std::string& view);
    const std::string& view() const { return view_; }

private:
    std::string view_;
};

}  // namespace adelog
