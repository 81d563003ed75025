#pragma once

#include <stdexcept>
#include <string>

namespace taxolint {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DuplicateName : Error {
    explicit DuplicateName(const std::string& name)
        : Error("duplicate concept name: " + name) {}
};

struct CycleError : Error {
    CycleError(const std::string& child, const std::string& parent)
        : Error("IS_A edge " + child + " -> " + parent + " would create a cycle") {}
};

struct InstanceAsClassError : Error {
    explicit InstanceAsClassError(const std::string& name)
        : Error("concept " + name + " is an instance and cannot act as a class") {}
};

struct UnknownConcept : Error {
    explicit UnknownConcept(const std::string& name)
        : Error("unknown concept: " + name) {}
};

struct ParseError : Error {
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line(line) {}
    std::size_t line;
};

struct ConflictError : Error {
    explicit ConflictError(const std::string& name)
        : Error("name " + name + " is declared both as an individual and as a property with rigidity") {}
};

struct UnknownCategory : Error {
    explicit UnknownCategory(const std::string& name)
        : Error("unknown category: " + name) {}
};

struct UnknownDirectiveTarget : Error {
    explicit UnknownDirectiveTarget(const std::string& name)
        : Error("mapping directive names an absent concept or target: " + name) {}
};

}  // namespace taxolint
