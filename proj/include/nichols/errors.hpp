#pragma once

#include <stdexcept>
#include <string>

namespace nichols {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ContextMismatch : public Error {
public:
    ContextMismatch() : Error("scalar context mismatch") {}
};

class ParseError : public Error {
public:
    ParseError(int line, const std::string& what)
        : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

class IndexOutOfRange : public Error {
public:
    using Error::Error;
};

// Reflection at index i is undefined because m_ij has no finite value.
class NotReflectable : public Error {
public:
    NotReflectable(int i, int j)
        : Error("not reflectable at index " + std::to_string(i + 1) + ": m_" + std::to_string(i + 1) +
                std::to_string(j + 1) + " is undefined"),
          i_(i), j_(j) {}
    int index() const { return i_; }
    int blocking() const { return j_; }

private:
    int i_;
    int j_;
};

class CapExceeded : public Error {
public:
    using Error::Error;
};

class MixedSignRoot : public Error {
public:
    using Error::Error;
};

class NotFiniteType : public Error {
public:
    NotFiniteType() : Error("Cartan matrix is not of finite type") {}
};

class NotA3Cycle : public Error {
public:
    NotA3Cycle() : Error("matrix is not a 3x3 Cartan matrix with all off-diagonal entries negative") {}
};

class NotInvertible : public Error {
public:
    NotInvertible() : Error("matrix is not invertible over the integers") {}
};

class DegreeMismatch : public Error {
public:
    using Error::Error;
};

// Hilbert table cannot be factored at the current cutoff; the caller should raise it.
class NegativeDiscrepancy : public Error {
public:
    using Error::Error;
};

class AmbiguousFactorization : public Error {
public:
    using Error::Error;
};

}  // namespace nichols
