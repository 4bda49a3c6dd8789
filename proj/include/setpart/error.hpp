#pragma once

#include <stdexcept>
#include <string>

namespace setpart {

// Failure kinds carried by partition_error. The CLI maps these onto exit
// codes, so additions here need a mapping there as well.
enum class errc {
    empty_partition,    // a public operation received the empty partition
    empty_block,        // a block with no elements
    duplicate_element,  // an element appears twice (within or across blocks)
    non_positive,       // an element fell below 1
    bad_text,           // unparsable partition text
    empty_result,       // restriction with empty intersection
    not_based_at_one,   // operation requires ground set [1, n]
    domain_error,       // input outside the domain of phi / psi
    cap_exceeded,       // enumeration above the configured cap
};

inline const char* errc_name(errc code) {
    switch (code) {
        case errc::empty_partition:   return "empty partition";
        case errc::empty_block:       return "empty block";
        case errc::duplicate_element: return "duplicate element";
        case errc::non_positive:      return "non-positive element";
        case errc::bad_text:          return "bad partition text";
        case errc::empty_result:      return "empty restriction";
        case errc::not_based_at_one:  return "ground set is not [1, n]";
        case errc::domain_error:      return "input outside map domain";
        case errc::cap_exceeded:      return "enumeration cap exceeded";
    }
    return "unknown error";
}

class partition_error : public std::runtime_error {
public:
    partition_error(errc code, const std::string& what_arg)
        : std::runtime_error(what_arg), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) {
    throw partition_error(code, std::string(errc_name(code)) + ": " + msg);
}

}  // namespace setpart
