#pragma once

#include <stdexcept>
#include <string>

#include "spincover/numeric.hpp"

namespace spincover {

/// Base for every domain failure. `code()` is a single machine-readable word,
/// `detail()` a space separated list of key=value pairs.
class Error : public std::runtime_error {
public:
    Error(std::string code, std::string detail)
        : std::runtime_error(code + (detail.empty() ? "" : " " + detail)),
          code_(std::move(code)), detail_(std::move(detail)) {}

    const std::string& code() const noexcept { return code_; }
    const std::string& detail() const noexcept { return detail_; }

private:
    std::string code_;
    std::string detail_;
};

/// Shortest decimal string that parses back to the same double.
std::string format_number(double value);
std::string format_number(Complex value);

class NotLorentz : public Error {
public:
    explicit NotLorentz(double max_violation)
        : Error("NotLorentz", "max_violation=" + format_number(max_violation)),
          max_violation_(max_violation) {}
    double max_violation() const noexcept { return max_violation_; }

private:
    double max_violation_;
};

class DegenerateIndex : public Error {
public:
    DegenerateIndex(int index, double weight_magnitude)
        : Error("DegenerateIndex",
                "index=" + std::to_string(index) + " weight=" + format_number(weight_magnitude)),
          index_(index), weight_magnitude_(weight_magnitude) {}
    int index() const noexcept { return index_; }
    double weight_magnitude() const noexcept { return weight_magnitude_; }

private:
    int index_;
    double weight_magnitude_;
};

class NotProperOrthochronous : public Error {
public:
    NotProperOrthochronous(const std::string& component, double determinant, double t00)
        : Error("NotProperOrthochronous", "class=" + component + " det=" + format_number(determinant) +
                                              " t00=" + format_number(t00)),
          determinant_(determinant), t00_(t00) {}
    double determinant() const noexcept { return determinant_; }
    double t00() const noexcept { return t00_; }

private:
    double determinant_;
    double t00_;
};

class NotUnitDeterminant : public Error {
public:
    explicit NotUnitDeterminant(Complex det)
        : Error("NotUnitDeterminant",
                "det_defect=" + format_number(std::abs(det - 1.0)) + " det=" + format_number(det)),
          det_(det) {}
    Complex determinant() const noexcept { return det_; }

private:
    Complex det_;
};

class NotHermitian : public Error {
public:
    explicit NotHermitian(double defect) : Error("NotHermitian", "defect=" + format_number(defect)) {}
};

class InvalidAxis : public Error {
public:
    explicit InvalidAxis(double norm) : Error("InvalidAxis", "norm=" + format_number(norm)) {}
};

/// Index outside the allowed 0..3 (or 1..3) range.
class IndexOutOfRange : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

} // namespace spincover
