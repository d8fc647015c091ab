#ifndef ONEPLACE_ERRORS_HPP
#define ONEPLACE_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <utility>

namespace oneplace {

/// Library error with a stable machine-readable code ("ZeroPolynomial",
/// "TooManyPairs", ...). The CLI maps codes into structured JSON errors.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(code + ": " + message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

namespace errc {
inline constexpr const char* zero_polynomial = "ZeroPolynomial";
inline constexpr const char* zero_series = "ZeroSeries";
inline constexpr const char* not_tangent = "NotTangent";
inline constexpr const char* too_many_pairs = "TooManyPairs";
inline constexpr const char* not_unibranch = "NotUnibranch";
inline constexpr const char* unsupported_coefficient_field = "UnsupportedCoefficientField";
inline constexpr const char* no_characteristic_exponent = "NoCharacteristicExponent";
inline constexpr const char* curve_contains_branch = "CurveContainsBranch";
inline constexpr const char* not_weierstrass = "NotWeierstrass";
inline constexpr const char* not_positive = "NotPositive";
inline constexpr const char* not_polynomial_key_forms = "NotPolynomialKeyForms";
inline constexpr const char* invalid_pairs = "InvalidPairs";
inline constexpr const char* not_coprime = "NotCoprime";
inline constexpr const char* not_contractible_family = "NotContractibleFamily";
inline constexpr const char* s1_fails = "S1Fails";
inline constexpr const char* not_symmetric = "NotSymmetric";
inline constexpr const char* input_parse = "InputParse";
} // namespace errc

} // namespace oneplace

#endif
