#pragma once

#include <stdexcept>
#include <string>

namespace chisq {

struct ZeroSize : std::invalid_argument {
  ZeroSize() : std::invalid_argument("observed distribution has size zero") {}
};

struct DimensionMismatch : std::invalid_argument {
  explicit DimensionMismatch(const std::string& what) : std::invalid_argument(what) {}
};

struct IndexOutOfRange : std::out_of_range {
  explicit IndexOutOfRange(const std::string& what) : std::out_of_range(what) {}
};

struct EqualIndices : std::invalid_argument {
  EqualIndices() : std::invalid_argument("category indices must differ") {}
};

struct NotIntegral : std::invalid_argument {
  explicit NotIntegral(const std::string& what) : std::invalid_argument(what) {}
};

struct NegativeEntry : std::invalid_argument {
  explicit NegativeEntry(const std::string& what) : std::invalid_argument(what) {}
};

struct PhiUndefined : std::invalid_argument {
  explicit PhiUndefined(const std::string& what) : std::invalid_argument(what) {}
};

struct OutOfSimplex : std::invalid_argument {
  explicit OutOfSimplex(const std::string& what) : std::invalid_argument(what) {}
};

struct DomainExceeded : std::invalid_argument {
  explicit DomainExceeded(const std::string& what) : std::invalid_argument(what) {}
};

struct SingularSystem : std::runtime_error {
  explicit SingularSystem(const std::string& what) : std::runtime_error(what) {}
};

struct MissingCoefficient : std::runtime_error {
  explicit MissingCoefficient(const std::string& what) : std::runtime_error(what) {}
};

struct InvalidDF : std::invalid_argument {
  explicit InvalidDF(const std::string& what) : std::invalid_argument(what) {}
};

struct NegativeStatistic : std::invalid_argument {
  explicit NegativeStatistic(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace chisq
