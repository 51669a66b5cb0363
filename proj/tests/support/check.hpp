// Minimal assertion harness for the test binaries: named test sections,
// CHECK/CHECK_EQ macros that report and count failures, and a summary exit
// code for ctest.
#pragma once

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>

namespace testkit {

inline int failures = 0;
inline int checks = 0;
inline std::string current_test = "<none>";

inline void begin_test(const std::string& name) {
    current_test = name;
    std::cout << "--- " << name << "\n";
}

inline int summary() {
    std::cout << (failures == 0 ? "OK: " : "FAILED: ") << checks << " checks, " << failures
              << " failures\n";
    return failures == 0 ? 0 : 1;
}

template <typename T>
std::string describe(const T& value) {
    if constexpr (requires(std::ostringstream& os, const T& v) { os << v; }) {
        std::ostringstream os;
        os << value;
        return os.str();
    } else {
        return "<value>";
    }
}

template <typename A, typename B>
void check_eq(const A& a, const B& b, const char* sa, const char* sb, const char* file,
              int line) {
    ++checks;
    if (!(a == b)) {
        ++failures;
        std::ostringstream os;
        os << "[FAIL] " << current_test << " at " << file << ":" << line << "\n  " << sa
           << " == " << sb << "\n  lhs: " << describe(a) << "\n  rhs: " << describe(b) << "\n";
        std::cerr << os.str();
    }
}

inline void check(bool ok, const char* expr, const char* file, int line) {
    ++checks;
    if (!ok) {
        ++failures;
        std::cerr << "[FAIL] " << current_test << " at " << file << ":" << line << "\n  "
                  << expr << "\n";
    }
}

}  // namespace testkit

#define TEST(name) testkit::begin_test(name)
#define CHECK(expr) testkit::check(static_cast<bool>(expr), #expr, __FILE__, __LINE__)
#define CHECK_EQ(a, b) testkit::check_eq((a), (b), #a, #b, __FILE__, __LINE__)

// Runs a statement and checks that it throws the given exception type.
#define CHECK_THROWS(exception_type, statement)                                      \
    do {                                                                             \
        bool caught_ = false;                                                        \
        try {                                                                        \
            statement;                                                               \
        } catch (const exception_type&) {                                            \
            caught_ = true;                                                          \
        } catch (const std::exception& e_) {                                         \
            std::cerr << "[FAIL] " << testkit::current_test << ": wrong exception: " \
                      << e_.what() << "\n";                                          \
        }                                                                            \
        testkit::check(caught_, "throws " #exception_type ": " #statement, __FILE__, \
                       __LINE__);                                                    \
    } while (0)
