#pragma once

#include <stdexcept>
#include <string>

namespace lhist {

struct NotAPermutation : std::runtime_error {
    explicit NotAPermutation(const std::string& what) : std::runtime_error(what) {}
};

struct IndexOutOfRange : std::out_of_range {
    explicit IndexOutOfRange(const std::string& what) : std::out_of_range(what) {}
};

struct InvalidFamilyParams : std::invalid_argument {
    explicit InvalidFamilyParams(const std::string& what) : std::invalid_argument(what) {}
};

struct PathBelowAxis : std::runtime_error {
    explicit PathBelowAxis(const std::string& what) : std::runtime_error(what) {}
};

struct PathNotClosed : std::runtime_error {
    explicit PathNotClosed(const std::string& what) : std::runtime_error(what) {}
};

struct MuOutOfRange : std::runtime_error {
    int index;  // 1-based offending index
    MuOutOfRange(const std::string& what, int idx) : std::runtime_error(what), index(idx) {}
};

struct Overflow : std::overflow_error {
    explicit Overflow(const std::string& what) : std::overflow_error(what) {}
};

struct SizeTooLarge : std::invalid_argument {
    explicit SizeTooLarge(const std::string& what) : std::invalid_argument(what) {}
};

struct NotGammaExpandable : std::runtime_error {
    explicit NotGammaExpandable(const std::string& what) : std::runtime_error(what) {}
};

struct InternalInconsistency : std::logic_error {
    explicit InternalInconsistency(const std::string& what) : std::logic_error(what) {}
};

struct NotInImage : std::runtime_error {
    explicit NotInImage(const std::string& what) : std::runtime_error(what) {}
};

struct UnknownCheck : std::invalid_argument {
    explicit UnknownCheck(const std::string& what) : std::invalid_argument(what) {}
};

struct ParseError : std::runtime_error {
    std::size_t position;  // byte offset into the input
    ParseError(const std::string& what, std::size_t pos) : std::runtime_error(what), position(pos) {}
};

}  // namespace lhist
