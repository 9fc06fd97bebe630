#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace synczeta {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// exact
struct ConstantTermNonzero : Error { using Error::Error; };
struct NeedMoreTerms : Error {
    std::size_t required;
    explicit NeedMoreTerms(std::size_t req)
        : Error("need at least " + std::to_string(req) + " terms"), required(req) {}
};
struct NotMonic : Error { using Error::Error; };
struct NotFatouNormal : Error { using Error::Error; };

// models
struct HorizonTooSmall : Error {
    std::size_t required;
    explicit HorizonTooSmall(std::size_t req)
        : Error("horizon too small, need n_max >= " + std::to_string(req)), required(req) {}
};
struct ShapeMismatch : Error { using Error::Error; };
struct NotTame : Error {
    std::size_t index;  // first non-tame n, 0 if unspecified
    explicit NotTame(std::size_t n = 0)
        : Error(n ? "count is infinite at n = " + std::to_string(n) : "pair is not synchronously tame"),
          index(n) {}
};
struct NotZeroOne : Error { using Error::Error; };
struct InconsistentSignedSystem : Error {
    std::size_t index;
    explicit InconsistentSignedSystem(std::size_t n)
        : Error("signed system yields negative count at n = " + std::to_string(n)), index(n) {}
};
struct NonIntegralCount : Error { using Error::Error; };

// padic
struct ZeroHasInfiniteOrd : Error { using Error::Error; };
struct RootOfUnity : Error { using Error::Error; };

// zeta
struct NotBijective : Error { using Error::Error; };
struct NotCommuting : Error { using Error::Error; };

// analysis
struct RequiresRationalZeta : Error { using Error::Error; };
struct HypothesisViolated : Error { using Error::Error; };
struct NotHyperbolic : Error { using Error::Error; };
struct TorsionUndefined : Error { using Error::Error; };

// spectral
struct NotNormalized : Error { using Error::Error; };

}  // namespace synczeta
